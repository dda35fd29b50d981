//! Algebraic invariants on random inputs.

use lozenge::detid::{dyck_from_admissible, admissible_from_dyck, theorem_check, AdmissibleSeq};
use lozenge::exactalg::{BigRat, MPoly, Monomial, RatFunc};
use lozenge::lgv::{determinant, determinant_bareiss, determinant_expansion, QMatrix};
use lozenge::regions::Region;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((-4i64..=4, -2i32..=2, 0i32..=1, 0i32..=1, 0i32..=2), 0..4).prop_map(|terms| {
        MPoly::from_terms(terms.into_iter().map(|(c, q, x, y, t)| (Monomial([q, x, y, t]), BigRat::from_int(c))))
    })
}

fn nonzero_poly() -> impl Strategy<Value = MPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| RatFunc::from_poly(n).checked_div(&RatFunc::from_poly(d)).unwrap())
}

fn point() -> impl Strategy<Value = [BigRat; 4]> {
    let coord = (-7i64..=7, 1i64..=5)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| BigRat::new(n, d));
    [coord.clone(), coord.clone(), coord.clone(), coord]
}

fn matrix(n: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(ratfunc(), n * n).prop_map(move |v| QMatrix::new(n, n, v).unwrap())
}

fn poly_matrix(n: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(poly(), n * n)
        .prop_map(move |v| QMatrix::new(n, n, v.into_iter().map(RatFunc::from_poly).collect()).unwrap())
}

/// Gaussian elimination over the rationals.
fn numeric_det(mut a: Vec<Vec<BigRat>>) -> BigRat {
    let n = a.len();
    let mut det = BigRat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return BigRat::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -&det;
        }
        det = &det * &a[c][c];
        for r in c + 1..n {
            let f = &a[r][c] / &a[c][c];
            for k in c..n {
                let sub = &f * &a[c][k];
                a[r][k] = &a[r][k] - &sub;
            }
        }
    }
    det
}

fn eval_matrix(m: &QMatrix, pt: &[BigRat; 4]) -> Option<Vec<Vec<BigRat>>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).eval(pt).ok()).collect()).collect()
}

fn admissible() -> impl Strategy<Value = AdmissibleSeq> {
    (1usize..=6).prop_flat_map(|m| {
        prop::collection::btree_set(1i64..=2 * m as i64, m).prop_filter_map("admissible", |s| {
            AdmissibleSeq::new(s.into_iter().collect()).ok()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfunc(), b in ratfunc(), pt in point()) {
        if let (Ok(x), Ok(y)) = (a.eval(&pt), b.eval(&pt)) {
            if let Ok(s) = (&a + &b).eval(&pt) {
                prop_assert_eq!(s, &x + &y);
            }
            if let Ok(p) = (&a * &b).eval(&pt) {
                prop_assert_eq!(p, &x * &y);
            }
        }
    }

    #[test]
    fn canonical_text_is_stable(a in ratfunc()) {
        let b = &(&a * &RatFunc::q_pow(3)) / &RatFunc::q_pow(3);
        prop_assert_eq!(a.canonical(), b.canonical());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn det4_matches_numeric_det(m in matrix(4), pt in point()) {
        let det = determinant(&m).unwrap();
        if let (Some(num), Ok(v)) = (eval_matrix(&m, &pt), det.eval(&pt)) {
            prop_assert_eq!(v, numeric_det(num));
        }
    }

    #[test]
    fn det5_matches_numeric_det(m in poly_matrix(5), pt in point()) {
        let det = determinant(&m).unwrap();
        let num = eval_matrix(&m, &pt).unwrap();
        prop_assert_eq!(det.eval(&pt).unwrap(), numeric_det(num));
    }

    #[test]
    fn expansion_agrees_with_bareiss(m in (1usize..=6).prop_flat_map(poly_matrix)) {
        prop_assert_eq!(determinant_expansion(&m).unwrap(), determinant_bareiss(&m).unwrap());
    }

    #[test]
    fn dyck_round_trip(a in admissible()) {
        let d = dyck_from_admissible(&a);
        prop_assert_eq!(d.semilength(), a.m() + 1);
        prop_assert_eq!(admissible_from_dyck(&d).unwrap(), a);
    }

    #[test]
    fn determinant_identity_small(a in admissible().prop_filter("m <= 3", |a| a.m() <= 3)) {
        let (l, r) = theorem_check(&a).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn region_json_round_trip(w in 1i64..=5, h in 1i64..=5, mask in 0u32..32) {
        let left: Vec<i64> = (1..=h).filter(|r| mask & (1 << (r - 1)) != 0).collect();
        let right: Vec<i64> = (1..=h).filter(|r| mask & (1 << (r - 1)) == 0).collect();
        let r = Region::half(w, h, left, right).unwrap();
        let back: Region = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        prop_assert_eq!(back, r);
    }
}
