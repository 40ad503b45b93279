//! Command-line front end. Exit status: 0 when every check passes, 1 when
//! violations are found (and reported), 2 for usage or input errors.

pub mod tables;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::bits::{bit_stats, complement_check, instance_streams};
use crate::coverage::{
    find_common_index, find_generator, quad_layer_report, verify_tiling, IndexDomain, SearchResult, TilingDomain,
};
use crate::error::{Error, Result};
use crate::exact::MonicIntPoly;
use crate::families::{build_set, quadratic_exception, ExceptionRule, Family, SetSpec};
use crate::field::independence_report;
use crate::uniformity::uniformity_report;

#[derive(Parser, Debug)]
#[command(name = "algint", version, about = "Exact checks on uniform sets of quadratic and cubic algebraic integers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Args, Debug, Clone)]
pub struct SetArgs {
    /// 2r, 2i, 3ntr or 3tr.
    #[arg(long)]
    pub family: Family,
    #[arg(long, allow_hyphen_values = true)]
    pub n: i64,
    /// First parameter of the cubic families.
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<i64>,
}

impl SetArgs {
    fn spec(&self) -> Result<SetSpec> {
        let spec = match (self.family.is_cubic(), self.m) {
            (true, Some(m)) => SetSpec { family: self.family, params: vec![m, self.n] },
            (true, None) => return Err(Error::InvalidParams("cubic families need --m".into())),
            (false, None) => SetSpec { family: self.family, params: vec![self.n] },
            (false, Some(_)) => return Err(Error::InvalidParams("quadratic families take only --n".into())),
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum DomainArg {
    Real,
    Imaginary,
    ImaginaryHat,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Encoding {
    Text,
    Hex,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a set instance.
    Gen(SetArgs),
    /// Gaps, discrepancy, half-split and proof-level bounds.
    Uniformity {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long, default_value_t = 64)]
        precision: u64,
    },
    /// Pairwise field-equality report.
    Independence(SetArgs),
    /// Quadratic-element classification of I_{m,n}^{3,tr}; with --bound,
    /// sweeps n from −m−3 down to −bound against a reducibility scan.
    Exception {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Which 2r instances the quadratic elements of S_m^{3,tr} reach.
    QuadLayer {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, default_value_t = 200)]
        bound: i64,
    },
    /// Root tables of small cubics (1–4).
    Tables { table: u8 },
    /// Tiling of the quadratic integers with |b|, |c| ≤ bound.
    Tiling {
        #[arg(long, value_enum, default_value_t = DomainArg::Real)]
        domain: DomainArg,
        #[arg(long, default_value_t = 10)]
        bound: i64,
    },
    /// Least n with a generator of every Q(√±j) in I_{2n}.
    FindIndex {
        /// Comma-separated square-free integers ≥ 2.
        #[arg(long, value_delimiter = ',', required = true)]
        targets: Vec<i64>,
        #[arg(long, value_enum, default_value_t = DomainArg::Real)]
        domain: DomainArg,
    },
    /// Bounded search for a member of S_0^{3,ntr} or S_0^{3,tr} generating
    /// the field of the target cubic.
    FindGenerator {
        /// Coefficients b,c,d of x³ + bx² + cx + d.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        target: Vec<i64>,
        #[arg(long)]
        family: Family,
        #[arg(long, default_value_t = 50)]
        coord_bound: i64,
    },
    /// Certified binary expansions of every element.
    Bits {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long, default_value_t = 64)]
        bits: usize,
        #[arg(long, value_enum, default_value_t = Encoding::Text)]
        encoding: Encoding,
    },
    /// Checks that 1 − α is never an element alongside α.
    ComplementCheck(SetArgs),
}

/// A rendered command result.
pub struct Report {
    pub json: Value,
    pub header: Option<Vec<String>>,
    pub rows: Vec<Vec<String>>,
    pub ok: bool,
}

impl Report {
    fn new(json: &impl Serialize, header: &[&str], rows: Vec<Vec<String>>, ok: bool) -> Result<Report> {
        let json = serde_json::to_value(json).map_err(|e| Error::Unsupported(e.to_string()))?;
        Ok(Report { json, header: Some(header.iter().map(|s| s.to_string()).collect()), rows, ok })
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).map_err(|e| Error::Unsupported(e.to_string()))?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                let io = |e: csv::Error| Error::Unsupported(e.to_string());
                if let Some(h) = &self.header {
                    w.write_record(h).map_err(io)?;
                }
                for r in &self.rows {
                    w.write_record(r).map_err(io)?;
                }
                let bytes = w.into_inner().map_err(|e| Error::Unsupported(e.to_string()))?;
                String::from_utf8(bytes).map_err(|e| Error::Unsupported(e.to_string()))
            }
            Format::Table => {
                let mut s = String::new();
                if let Some(h) = &self.header {
                    s.push_str(&h.join(" | "));
                    s.push('\n');
                }
                for r in &self.rows {
                    s.push_str(&r.join(" | "));
                    s.push('\n');
                }
                Ok(s)
            }
        }
    }
}

fn dec(a: &crate::exact::AlgebraicNumber) -> Result<String> {
    if a.is_real() {
        a.to_decimal(5)
    } else {
        let (re, im) = a.re_im(40)?;
        let re = crate::exact::algebraic::decimal_of(|b| Ok(a.re_im(b)?.0), 5).unwrap_or_else(|_| re.to_string());
        let im = crate::exact::algebraic::decimal_of(|b| Ok(a.re_im(b)?.1), 5).unwrap_or_else(|_| im.to_string());
        Ok(format!("{re}{}{}i", if im.starts_with('-') { "" } else { "+" }, im))
    }
}

fn enc(e: &crate::exact::Enclosure) -> String {
    crate::exact::algebraic::decimal_of(|_| Ok(e.clone()), 8).unwrap_or_else(|_| format!("{:.8e}", e.to_f64()))
}

pub fn execute(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Gen(a) => {
            let s = build_set(&a.spec()?)?;
            let rows = s
                .elements
                .iter()
                .map(|e| Ok(vec![e.coeff.to_string(), e.value.minpoly().render(false), dec(&e.value)?]))
                .collect::<Result<_>>()?;
            Report::new(&s, &["coeff", "minpoly", "value"], rows, true)
        }
        Command::Uniformity { set, precision } => {
            if *precision < 32 {
                return Err(Error::InvalidParams("precision must be at least 32".into()));
            }
            let r = uniformity_report(&build_set(&set.spec()?)?, *precision)?;
            let mut rows = vec![
                vec!["n".into(), r.stats.n.to_string()],
                vec!["max_dev".into(), enc(&r.stats.max_dev)],
                vec!["constant".into(), enc(&r.stats.constant)],
                vec!["discrepancy".into(), enc(&r.discrepancy)],
                vec!["discrepancy_within".into(), r.discrepancy_within.to_string()],
                vec!["below_half".into(), r.half_counts.0.to_string()],
                vec!["above_half".into(), r.half_counts.1.to_string()],
            ];
            if let Some(h) = r.half_rule_holds {
                rows.push(vec!["half_rule".into(), format!("{:?}: {h}", r.half_rule.expect("rule"))]);
            }
            for b in &r.bound_checks {
                rows.push(vec!["bound".into(), format!("{}: {}", b.bound, b.holds)]);
            }
            let ok = r.all_hold();
            Report::new(&r, &["quantity", "value"], rows, ok)
        }
        Command::Independence(a) => {
            let r = independence_report(&build_set(&a.spec()?)?)?;
            let rows = r
                .collisions
                .iter()
                .map(|c| {
                    let co: Vec<String> = c.certificate.coeffs.iter().map(|q| q.to_string()).collect();
                    vec![
                        r.elements[c.i].minpoly.render(false),
                        r.elements[c.j].minpoly.render(false),
                        co.join(","),
                    ]
                })
                .collect();
            let ok = r.independent();
            Report::new(&r, &["base", "element", "certificate a0,a1,a2"], rows, ok)
        }
        Command::Exception { m, n, bound } => {
            let rule = ExceptionRule::new(*m)?;
            let cs: Vec<i64> = match (n, bound) {
                (Some(n), None) => vec![*n],
                (None, Some(b)) if *b >= 1 => (-*b..=-*m - 3).rev().collect(),
                _ => return Err(Error::InvalidParams("give exactly one of --n or --bound".into())),
            };
            let mut rows = Vec::new();
            let mut out = Vec::new();
            let mut ok = true;
            for c in cs {
                let case = rule.classify(c)?;
                let closed = quadratic_exception(*m, c)?;
                let s = build_set(&SetSpec::cubic_tr(*m, c))?;
                let scanned: Vec<_> = s.elements.iter().filter(|e| e.value.degree() == 2).collect();
                let agrees = match (&closed, scanned.as_slice()) {
                    (None, []) => true,
                    (Some(q), [e]) => q.d == e.coeff && q.element.same_value(&e.value),
                    _ => false,
                };
                ok &= agrees;
                rows.push(vec![
                    c.to_string(),
                    format!("{case:?}"),
                    closed.as_ref().map_or("-".into(), |q| q.d.to_string()),
                    closed.as_ref().map_or("-".into(), |q| q.minpoly.render(false)),
                    agrees.to_string(),
                ]);
                out.push(serde_json::json!({ "c": c, "case": case, "exception": closed, "scan_agrees": agrees }));
            }
            Report::new(&out, &["n", "case", "d", "minpoly", "scan_agrees"], rows, ok)
        }
        Command::QuadLayer { m, bound } => {
            let r = quad_layer_report(*m, *bound)?;
            let rows = r
                .entries
                .iter()
                .map(|e| vec![e.c.to_string(), e.d.to_string(), e.minpoly.render(false), e.index.to_string()])
                .collect();
            let ok = r.excluded_hits.is_empty() && r.closed_form_agrees;
            Report::new(&r, &["n", "d", "minpoly", "index"], rows, ok)
        }
        Command::Tables { table } => {
            let rows = tables::table_rows(*table)?;
            let json: Vec<_> = rows.iter().map(|r| serde_json::json!(r)).collect();
            let mut rep = Report::new(&json, &[], rows, true)?;
            rep.header = None;
            Ok(rep)
        }
        Command::Tiling { domain, bound } => {
            let d = match domain {
                DomainArg::Real => TilingDomain::Real,
                DomainArg::Imaginary => TilingDomain::Imaginary,
                DomainArg::ImaginaryHat => TilingDomain::ImaginaryHat,
            };
            let r = verify_tiling(*bound, d)?;
            let rows = r
                .violations
                .iter()
                .map(|v| vec![v.minpoly.render(false), if v.plus { "+" } else { "-" }.into(), v.reason.clone()])
                .collect();
            let ok = r.violations.is_empty();
            Report::new(&r, &["minpoly", "sign", "reason"], rows, ok)
        }
        Command::FindIndex { targets, domain } => {
            let d = match domain {
                DomainArg::Real => IndexDomain::Real,
                DomainArg::Imaginary => IndexDomain::Imaginary,
                DomainArg::ImaginaryHat => return Err(Error::InvalidParams("use real or imaginary".into())),
            };
            let r = find_common_index(targets, d)?;
            let rows = r
                .witnesses
                .iter()
                .map(|w| vec![w.j.to_string(), w.m.to_string(), w.c.to_string(), r.set.to_string()])
                .collect();
            Report::new(&r, &["j", "m", "c", "set"], rows, true)
        }
        Command::FindGenerator { target, family, coord_bound } => {
            if *coord_bound < 1 {
                return Err(Error::InvalidParams("coord-bound must be positive".into()));
            }
            let p = MonicIntPoly::from_i64s(target)?;
            let r = find_generator(&p, *family, *coord_bound)?;
            let (rows, ok) = match &r {
                SearchResult::Found(w) => (
                    vec![vec![
                        format!("{},{},{}", w.coords[0], w.coords[1], w.coords[2]),
                        w.element.minpoly().render(false),
                        dec(&w.element)?,
                        w.set.to_string(),
                    ]],
                    true,
                ),
                SearchResult::NotFoundWithinBound { .. } => (Vec::new(), false),
            };
            Report::new(&r, &["coords", "minpoly", "value", "set"], rows, ok)
        }
        Command::Bits { set, bits, encoding } => {
            if *bits < 1 {
                return Err(Error::InvalidParams("bits must be positive".into()));
            }
            let spec = set.spec()?;
            if spec.family == Family::ImaginaryQuadratic {
                return Err(Error::InvalidParams("bit streams need a real family".into()));
            }
            let streams = instance_streams(&build_set(&spec)?, *bits)?;
            let rows = streams
                .iter()
                .map(|b| {
                    let st = bit_stats(&b.bits);
                    let body = match encoding {
                        Encoding::Text => b.to_text(),
                        Encoding::Hex => b.to_hex(),
                    };
                    vec![b.source.minpoly().render(false), body, st.ones.to_string(), st.longest_run.to_string()]
                })
                .collect();
            Report::new(&streams, &["minpoly", "bits", "ones", "longest_run"], rows, true)
        }
        Command::ComplementCheck(a) => {
            let r = complement_check(&build_set(&a.spec()?)?)?;
            let rows = r.violations.iter().map(|(i, j)| vec![i.to_string(), j.to_string()]).collect();
            let ok = r.violations.is_empty();
            Report::new(&r, &["i", "j"], rows, ok)
        }
    }
}

/// Runs the CLI on `args` and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let report = match execute(&cli.command).and_then(|r| Ok((r.render(cli.format)?, r.ok))) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let (text, ok) = report;
    let written = match &cli.out {
        Some(path) => std::fs::write(path, text.as_bytes()),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return 2;
    }
    if ok {
        0
    } else {
        1
    }
}
