//! Root tables of small cubics, printed to five decimals.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::algebraic::decimal_of;
use crate::exact::{complex_pair, isolate_real_roots, AlgebraicNumber, MonicIntPoly};

const PLACES: u32 = 5;

/// Coefficient box of one table: `x³ + b x² + p x − q`.
struct TableBox {
    b: i64,
    p: std::ops::RangeInclusive<i64>,
    q: &'static [i64],
    totally_real: bool,
}

fn table_box(t: u8) -> Result<TableBox> {
    Ok(match t {
        1 => TableBox { b: 0, p: -5..=5, q: &[1, 2], totally_real: false },
        2 => TableBox { b: -2, p: -5..=5, q: &[1, 2], totally_real: false },
        3 => TableBox { b: 0, p: -4..=4, q: &[-1, 0, 1], totally_real: true },
        4 => TableBox { b: 0, p: -6..=4, q: &[-1, 0, 1, 2, 3, 4], totally_real: true },
        _ => return Err(Error::InvalidParams(format!("no table {t}; expected 1..4"))),
    })
}

fn unicode(s: String) -> String {
    s.replace('-', "\u{2212}")
}

/// Polynomials of the table, in row order.
pub fn table_polys(t: u8) -> Result<Vec<MonicIntPoly>> {
    let bx = table_box(t)?;
    let mut out = Vec::new();
    for p in bx.p.clone() {
        for &q in bx.q {
            let f = MonicIntPoly::cubic(bx.b, p, -q);
            let d = f.discriminant();
            if f.is_irreducible() && d.is_positive() == bx.totally_real && !d.is_zero() {
                out.push(f);
            }
        }
    }
    Ok(out)
}

/// Cells of one row: the polynomial, then the roots.
pub fn table_row(f: &MonicIntPoly) -> Result<Vec<String>> {
    let iso = isolate_real_roots(f)?;
    let mut cells = vec![f.render(true)];
    for i in 0..iso.intervals.len() {
        let r = AlgebraicNumber::real_root(f.clone(), i)?;
        cells.push(unicode(r.to_decimal(PLACES)?));
    }
    if iso.complex_pairs > 0 {
        let re = decimal_of(|b| Ok(complex_pair(f, b)?.re), PLACES)?;
        let im = decimal_of(|b| Ok(complex_pair(f, b)?.im), PLACES)?;
        cells.push(format!("{} ± {} i", unicode(re), im));
    }
    Ok(cells)
}

pub fn table_rows(t: u8) -> Result<Vec<Vec<String>>> {
    table_polys(t)?.iter().map(table_row).collect()
}

/// Rows joined as `cell | cell | …`.
pub fn render_table(t: u8) -> Result<String> {
    let mut s = String::new();
    for row in table_rows(t)? {
        s.push_str(&row.join(" | "));
        s.push('\n');
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_counts() {
        let n: Vec<usize> = (1..=4).map(|t| table_polys(t).unwrap().len()).collect();
        assert_eq!(n, [13, 16, 4, 12]);
    }

    #[test]
    fn first_row() {
        let r = table_rows(1).unwrap();
        assert_eq!(r[0].join(" | "), "x³−2x−2 | 1.76929 | −0.88465 ± 0.58974 i");
    }
}
