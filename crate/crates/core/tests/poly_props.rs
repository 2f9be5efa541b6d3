use nalgebra::DMatrix;
use num_bigint::BigInt;
use proptest::prelude::*;
use sptree::poly::{gcd, NotDivisible, PolyError};
use sptree::Poly;

fn arb_poly(max_len: usize, bound: i64) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-bound..=bound, 0..=max_len).prop_map(|c| Poly::from_i64s(&c))
}

/// Real eigenvalues of the companion matrix of a monic-normalized `p`, or
/// `None` when the Schur iteration does not converge.
fn float_real_roots(p: &Poly) -> Option<Vec<f64>> {
    let c: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|x| x.to_string().parse().unwrap())
        .collect();
    let d = c.len() - 1;
    let lead = c[d];
    let mut m = DMatrix::<f64>::zeros(d, d);
    for i in 1..d {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..d {
        m[(i, d - 1)] = -c[i] / lead;
    }
    // the unbounded iteration can cycle forever on some companion matrices
    let schur = m.try_schur(f64::EPSILON, 10_000)?;
    let mut roots: Vec<f64> = schur
        .complex_eigenvalues()
        .iter()
        .filter(|z| z.im.abs() < 1e-6)
        .map(|z| z.re)
        .collect();
    roots.sort_by(f64::total_cmp);
    Some(roots)
}

proptest! {
    #[test]
    fn ring_laws(a in arb_poly(8, 50), b in arb_poly(8, 50), c in arb_poly(8, 50)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(&a * &Poly::one(), a.clone());
        prop_assert!((&a * &Poly::zero()).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in arb_poly(10, 1000), b in arb_poly(10, 1000)) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&a).unwrap(), b);
    }

    #[test]
    fn long_products_agree_with_evaluation(a in arb_poly(60, 1 << 20), b in arb_poly(60, 1 << 20), x in -3i64..=3) {
        let x = BigInt::from(x);
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
    }

    #[test]
    fn gcd_divides_both(a in arb_poly(6, 9), b in arb_poly(6, 9), c in arb_poly(4, 9)) {
        prop_assume!(!c.is_zero());
        let (x, y) = (&a * &c, &b * &c);
        let g = gcd(&x, &y);
        if !x.is_zero() || !y.is_zero() {
            prop_assert!(g.divides(&x));
            prop_assert!(g.divides(&y));
            prop_assert!(c.primitive_part().divides(&g) || c.degree() == Some(0));
        }
    }

    #[test]
    fn json_round_trip(a in arb_poly(12, i64::MAX)) {
        prop_assert_eq!(Poly::from_json(&a.to_json()).unwrap(), a);
    }

    /// Products of distinct linear factors and irreducible quadratics: the
    /// Sturm count, the construction and the floating-point eigenvalues all
    /// agree on the number of real roots.
    #[test]
    fn sturm_matches_construction_and_companion_matrix(
        roots in prop::collection::btree_set(-12i64..=12, 0..5),
        quads in prop::collection::vec((-3i64..=3, 1i64..=4), 0..3),
        mult in 1u32..=2,
    ) {
        let mut p = Poly::one();
        for &r in &roots {
            p = &p * &Poly::from_i64s(&[-r, 1]).pow(mult);
        }
        for &(b, extra) in &quads {
            // x^2 + b x + c with b^2 < 4c
            let c = b * b / 4 + extra;
            p = &p * &Poly::from_i64s(&[c, b, 1]);
        }
        prop_assume!(p.degree().unwrap() >= 1);
        let report = p.sturm_report().unwrap();
        prop_assert_eq!(report.distinct_real_roots(), roots.len());
        prop_assert_eq!(report.is_real_rooted(), quads.is_empty());
        if mult == 1 {
            if let Some(float_roots) = float_real_roots(&p) {
                prop_assert_eq!(float_roots.len(), roots.len());
            }
        }
    }
}

#[test]
fn division_failure_reasons() {
    let p = Poly::from_i64s(&[1, 0, 1]);
    assert_eq!(
        p.exact_div(&Poly::from_i64s(&[1, 1])),
        Err(PolyError::NotDivisible(NotDivisible::Remainder))
    );
    assert_eq!(
        Poly::from_i64s(&[1, 1]).exact_div(&Poly::from_i64s(&[2, 2])),
        Err(PolyError::NotDivisible(NotDivisible::NonIntegerQuotient))
    );
    assert_eq!(p.exact_div(&Poly::zero()), Err(PolyError::DivisionByZero));
}

#[test]
fn independence_polynomials_have_only_real_eigen_roots_when_certified() {
    let p = Poly::from_i64s(&[1, 8, 20, 16, 1]);
    assert!(p.is_real_rooted().unwrap());
    assert_eq!(float_real_roots(&p).unwrap().len(), 4);
    let q = Poly::from_i64s(&[1, 1, 1]);
    assert!(!q.is_real_rooted().unwrap());
    assert_eq!(float_real_roots(&q).unwrap().len(), 0);
}
