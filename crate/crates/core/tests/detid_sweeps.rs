use lozenge::detid::*;
use lozenge::exactalg::{BigRat, RatFunc};
use lozenge::lgv::determinant;

#[test]
fn theorem_holds_for_all_sequences_up_to_four() {
    for m in 1..=4 {
        for a in enumerate_admissible(m).unwrap() {
            let (l, r) = theorem_check(&a).unwrap();
            assert_eq!(l, r, "{a}");
        }
    }
}

#[test]
fn determinants_are_nonzero() {
    for m in 1..=4 {
        for a in enumerate_admissible(m).unwrap() {
            assert!(!determinant(&matrix_s(&a)).unwrap().is_zero(), "{a}");
        }
    }
}

#[test]
fn blocks_factor_the_determinant() {
    for m in 1..=4 {
        for a in enumerate_admissible(m).unwrap() {
            let (l, r) = block_check(&a).unwrap();
            assert_eq!(l, r, "{a}");
        }
    }
}

#[test]
fn triangulation_for_irreducible_sequences() {
    for m in 1..=4 {
        for a in enumerate_admissible(m).unwrap().into_iter().filter(AdmissibleSeq::is_irreducible) {
            let r = verify_triangulization(&a).unwrap();
            assert!(r.passed(), "{r:?}");
            assert!(x_invariance_witness(&a, &[0, 1, 3]).unwrap(), "{a}");
        }
    }
}

#[test]
fn halfinteger_symmetry_up_to_four() {
    for m in 1..=4 {
        for i in 1..=m {
            for k in 1..=m {
                for j in 0..2 * m {
                    let (l, r) = halfinteger_symmetry_check(m, i, j, k).unwrap();
                    assert_eq!(l, r, "m={m} i={i} j={j} k={k}");
                }
            }
        }
    }
}

#[test]
fn cleared_rows_have_m_minus_i_linear_factors() {
    for m in 1..=4i64 {
        for i in 1..=m {
            for c in cleared_row(m, i).unwrap() {
                match c.t_factors {
                    Some(ys) => assert_eq!(ys.len() as i64, m - i, "m={m} i={i} j={}", c.j),
                    None => assert!(c.j >= 2 * (m - i + 1)),
                }
            }
        }
    }
}

#[test]
fn qbinom_lemma_with_integer_gammas() {
    for n in 1..=6 {
        for r in 1..=n {
            let g: Vec<BigRat> = (0..n - r).map(|v| BigRat::from_int(v * 3 - 4)).collect();
            assert!(qbinom_identity_check(n, r, &g).unwrap().is_zero(), "n={n} r={r}");
        }
    }
}

#[test]
fn catalan_counts() {
    for m in 0..=7 {
        assert_eq!(enumerate_admissible(m).unwrap().len() as u64, catalan(m as u64 + 1), "m={m}");
        assert_eq!(enumerate_dyck(m + 1).len() as u64, catalan(m as u64 + 1));
    }
}

#[test]
fn dyck_bijection_round_trips() {
    for m in 0..=6 {
        for a in enumerate_admissible(m).unwrap() {
            let d = dyck_from_admissible(&a);
            assert_eq!(admissible_from_dyck(&d).unwrap(), a);
        }
    }
}

#[test]
fn alpha_seven_closed_form() {
    let om = |k: i32| &RatFunc::one() - &RatFunc::q_pow(k);
    let al = alpha_sequence(4);
    let num: RatFunc = [8, 7, 6, 5, 4, 3, 2, 1, 0]
        .iter()
        .zip([1, 1, 3, 2, 3, 2, 3, 1, 1])
        .map(|(&e, c)| &RatFunc::from_int(c) * &RatFunc::q_pow(e))
        .sum();
    let den = &(&(&om(1).pow(3).unwrap() * &om(3).pow(2).unwrap()) * &om(5)) * &om(7);
    assert_eq!(al[3], &(&RatFunc::q_pow(3) * &num) / &den);
    let a5 = &(&RatFunc::q_pow(2) * &(&RatFunc::one() + &RatFunc::q_pow(2)))
        / &(&(&om(1).pow(3).unwrap() * &om(3)) * &om(5));
    assert_eq!(al[2], -&a5);
}
