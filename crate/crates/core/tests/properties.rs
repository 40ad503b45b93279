use algint::bits::binary_expansion;
use algint::coverage::{element_charpoly, tile_locate, TileUnion};
use algint::exact::interval::{int_rat, rat};
use algint::exact::{isolate_real_roots, AlgebraicNumber, Enclosure, MonicIntPoly};
use algint::families::{bc_pm, build_set, cardinality, reflect_set, SetSpec};
use algint::field::{express_in, reconstruct, same_field, squarefree_kernel, verify_expression};
use algint::uniformity::{discrepancy_exact, unit_points};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn real_spec() -> impl Strategy<Value = SetSpec> {
    prop_oneof![
        (1i64..40).prop_map(SetSpec::real_quadratic),
        (3i64..40).prop_map(|n| SetSpec::real_quadratic(-n)),
        (-3i64..=0, -30i64..=-3).prop_map(|(m, n)| SetSpec::cubic_tr(m, n)).prop_filter("valid", |s| s.validate().is_ok()),
        (-3i64..=3, 1i64..30).prop_map(|(m, n)| SetSpec::cubic_ntr(m, n)).prop_filter("valid", |s| s.validate().is_ok()),
    ]
}

/// A random element of a random real instance.
fn real_element() -> impl Strategy<Value = AlgebraicNumber> {
    (real_spec(), any::<prop::sample::Index>()).prop_map(|(spec, i)| {
        let s = build_set(&spec).unwrap();
        s.elements[i.index(s.len())].value.clone()
    })
}

/// A cubic element of a 3tr or 3ntr instance.
fn cubic_element() -> impl Strategy<Value = AlgebraicNumber> {
    prop_oneof![
        (-3i64..=0, -20i64..=-3).prop_map(|(m, n)| SetSpec::cubic_tr(m, n)),
        (-3i64..=3, 3i64..20).prop_map(|(m, n)| SetSpec::cubic_ntr(m, n)),
    ]
    .prop_filter("valid", |s| s.validate().is_ok())
    .prop_flat_map(|spec| {
        let s = build_set(&spec).unwrap();
        let cubics: Vec<AlgebraicNumber> =
            s.elements.into_iter().map(|e| e.value).filter(|v| v.degree() == 3).collect();
        prop::sample::select(cubics)
    })
}

fn brute_discrepancy(xs: &[BigRational]) -> BigRational {
    let n = int_rat(xs.len());
    let mut ends = xs.to_vec();
    ends.extend([rat(0, 1), rat(1, 1)]);
    let mut best = BigRational::zero();
    for a in &ends {
        for b in ends.iter().filter(|b| *b >= a) {
            for (ia, ib) in [(true, false), (true, true), (false, false), (false, true)] {
                if a == b && !(ia && ib) {
                    continue;
                }
                let k = xs.iter().filter(|x| (if ia { *x >= a } else { *x > a }) && (if ib { *x <= b } else { *x < b })).count();
                let d = (int_rat(k) / &n - (b - a)).abs();
                best = best.max(d);
            }
        }
    }
    best
}

/// `a0 + a1·x + a2·x²` over an enclosure of `x`.
fn eval_enclosure(x: &Enclosure, a: [i64; 3]) -> Enclosure {
    let x2 = x.mul(x);
    x2.scale(&rat(a[2], 1)).add(&x.scale(&rat(a[1], 1))).add_rat(&rat(a[0], 1))
}

fn overlaps(a: &Enclosure, b: &Enclosure) -> bool {
    a.lo <= b.hi && b.lo <= a.hi
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn discrepancy_matches_brute_force(
        raw in prop::collection::vec(0i64..=60, 1..=6),
        den in 1i64..=60,
    ) {
        let mut xs: Vec<BigRational> = raw.iter().map(|r| rat(r % (den + 1), den)).collect();
        xs.sort();
        prop_assert_eq!(discrepancy_exact(&xs), brute_discrepancy(&xs));
    }

    #[test]
    fn reconstruct_recovers_small_fractions(p in -500i64..500, q in 1i64..200, err in -999i64..999) {
        let max_den = BigInt::from(200);
        let tol = BigRational::new(BigInt::from(1), BigInt::from(2 * 200 * 200));
        // |error| < tol keeps p/q the unique candidate.
        let x = rat(p, q) + &tol * rat(err, 1000);
        prop_assert_eq!(reconstruct(&x, &max_den, &tol), Some(rat(p, q)));
    }

    #[test]
    fn kernel_is_squarefree_cofactor_square(n in -100_000i64..100_000) {
        prop_assume!(n != 0);
        let k = squarefree_kernel(&BigInt::from(n)).unwrap();
        let ki: i64 = k.to_string().parse().unwrap();
        prop_assert_eq!(ki.signum(), n.signum());
        prop_assert_eq!(n % ki, 0);
        let q = n / ki;
        let r = (q as f64).sqrt().round() as i64;
        prop_assert_eq!(r * r, q);
        for p in 2..=ki.abs().min(400) {
            prop_assert!(ki % (p * p) != 0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn bits_are_prefix_stable(a in real_element(), l in 1usize..120, extra in 1usize..80) {
        let short = binary_expansion(&a, l).unwrap();
        let long = binary_expansion(&a, l + extra).unwrap();
        prop_assert_eq!(&short.bits[..], &long.bits[..l]);
        // k/2^L < a < (k+1)/2^L
        let scale = int_rat(BigInt::from(1) << l);
        let k = int_rat(short.numerator());
        prop_assert!(a.cmp_rational(&(&k / &scale)).unwrap().is_gt());
        prop_assert!(a.cmp_rational(&((k + int_rat(1)) / scale)).unwrap().is_lt());
    }

    #[test]
    fn bits_of_complement_are_complemented(a in real_element(), l in 1usize..200) {
        let c = a.affine(true, &BigInt::from(1));
        let x = binary_expansion(&a, l).unwrap();
        let y = binary_expansion(&c, l).unwrap();
        prop_assert!(x.bits.iter().zip(&y.bits).all(|(p, q)| p + q == 1));
    }

    #[test]
    fn instances_are_sorted_distinct_in_unit_interval(spec in real_spec()) {
        let s = build_set(&spec).unwrap();
        prop_assert_eq!(s.len() as i64, cardinality(&spec).unwrap());
        for e in &s.elements {
            prop_assert!(e.value.cmp_rational(&rat(0, 1)).unwrap().is_gt());
            prop_assert!(e.value.cmp_rational(&rat(1, 1)).unwrap().is_lt());
        }
        for w in s.elements.windows(2) {
            prop_assert!(w[0].value.cmp_real(&w[1].value).unwrap().is_lt());
        }
    }

    #[test]
    fn reflection_is_a_bijection(spec in real_spec()) {
        let r = reflect_set(&spec).unwrap();
        let mut seen = r.pairing.clone();
        seen.sort();
        prop_assert_eq!(seen, (0..r.elements.len()).collect::<Vec<_>>());
    }

    #[test]
    fn real_quadratics_tile_once(b in -40i64..40, c in -40i64..40, plus: bool) {
        prop_assume!(b * b - 4 * c > 0);
        let d = b * b - 4 * c;
        let r = (d as f64).sqrt().round() as i64;
        prop_assume!(r * r != d);
        let a = bc_pm(b, c, plus).unwrap();
        let t = tile_locate(&a, TileUnion::S2r).unwrap();
        // a = n + ε·member
        let back = t.member.affine(t.tile.eps < 0, &BigInt::from(t.tile.n));
        prop_assert!(back.same_value(&a));
        let spec = t.set.unwrap();
        prop_assert!(build_set(&spec).unwrap().elements.iter().any(|e| e.value.same_value(&t.member)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn same_field_reflexive_and_symmetric(a in cubic_element(), b in cubic_element()) {
        prop_assert!(same_field(&a, &a).unwrap());
        prop_assert_eq!(same_field(&a, &b).unwrap(), same_field(&b, &a).unwrap());
    }

    #[test]
    fn polynomial_images_are_expressed_back(a in cubic_element(), c in prop::array::uniform3(-4i64..=4)) {
        prop_assume!(c[1] != 0 || c[2] != 0);
        let f = element_charpoly(a.minpoly(), c);
        prop_assume!(f.is_irreducible());
        let target = eval_enclosure(&a.enclosure(200).unwrap(), c);
        let n = isolate_real_roots(&f).unwrap().intervals.len();
        let hits: Vec<AlgebraicNumber> = (0..n)
            .map(|i| AlgebraicNumber::real_root(f.clone(), i).unwrap())
            .filter(|r| overlaps(&r.enclosure(200).unwrap(), &target))
            .collect();
        prop_assert_eq!(hits.len(), 1);
        let beta = &hits[0];
        let e = express_in(beta, &a).unwrap().expect("β = h(α) lies in Q(α)");
        let want: Vec<BigRational> = c.iter().map(|x| rat(*x, 1)).collect();
        prop_assert_eq!((0..3).map(|i| e.coeff(i)).collect::<Vec<_>>(), want);
        prop_assert!(verify_expression(beta, &a, &e.coeffs).unwrap());
        let back = express_in(&a, beta).unwrap().expect("α lies in Q(β)");
        prop_assert!(verify_expression(&a, beta, &back.coeffs).unwrap());
    }

    #[test]
    fn quadratic_fields_follow_kernels(b1 in -30i64..30, c1 in -30i64..30, b2 in -30i64..30, c2 in -30i64..30) {
        let ok = |b: i64, c: i64| {
            let d = b * b - 4 * c;
            let r = (d.abs() as f64).sqrt().round() as i64;
            d != 0 && !(d > 0 && r * r == d)
        };
        prop_assume!(ok(b1, c1) && ok(b2, c2));
        let x = bc_pm(b1, c1, true).unwrap();
        let y = bc_pm(b2, c2, true).unwrap();
        let kx = squarefree_kernel(&BigInt::from(b1 * b1 - 4 * c1)).unwrap();
        let ky = squarefree_kernel(&BigInt::from(b2 * b2 - 4 * c2)).unwrap();
        prop_assert_eq!(same_field(&x, &y).unwrap(), kx == ky);
        if let Some(e) = express_in(&y, &x).unwrap() {
            prop_assert!(verify_expression(&y, &x, &e.coeffs).unwrap());
        }
    }
}

#[test]
fn midpoint_sets_have_discrepancy_one_over_n() {
    for n in 1..=200i64 {
        let xs: Vec<BigRational> = (1..=n).map(|i| rat(2 * i - 1, 2 * n)).collect();
        assert_eq!(discrepancy_exact(&xs), rat(1, n));
    }
}

#[test]
fn unit_points_come_sorted() {
    let s = build_set(&SetSpec::cubic_tr(-1, -12)).unwrap();
    let p = unit_points(&s).unwrap();
    assert_eq!(p.len(), s.len());
    assert!(p.windows(2).all(|w| w[0].cmp(&w[1]).unwrap().is_lt()));
}

#[test]
fn polynomial_roots_in_enclosures() {
    for f in [MonicIntPoly::from_i64s(&[0, -3, 1]).unwrap(), MonicIntPoly::from_i64s(&[3, 3, -1]).unwrap()] {
        let iso = isolate_real_roots(&f).unwrap();
        for e in &iso.intervals {
            let (a, b) = (f.eval_rational(&e.lo), f.eval_rational(&e.hi));
            assert!(a.is_zero() || b.is_zero() || a.signum() != b.signum());
        }
    }
}
