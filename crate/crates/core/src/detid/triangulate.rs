//! The recursively constructed triangulating matrix `f(a)`.
//!
//! The solutions of `m'''(m, ∞) c = 0` are spanned by a vector
//! `c_1 = (1, α_1, 0, α_3, ..., 0, α_{2m-1})` and its shifts by two positions.
//! Each `α_{2k+1}` is the single new unknown of the row with `m - i = k`, so
//! the sequence is built from the bottom row upwards and does not depend on
//! `m`. For an irreducible `a`, the combination of the `c_s` that vanishes
//! outside the columns of `a* = (1, a_1, ..., a_m)` gives the first column of
//! `f(a)`; the remaining columns come from `(a_2 - 2, ..., a_m - 2)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{RatFunc, Substitution, Var};
use crate::lgv::{apply, determinant, nullspace, QMatrix};

use super::matrices::{matrix_mpp, matrix_mprime, matrix_s, mppp_inf_entry, reversed_column, starred};
use super::seq::AdmissibleSeq;

/// `[α_1, α_3, ..., α_{2n-1}]`.
pub fn alpha_sequence(n: usize) -> Vec<RatFunc> {
    let mut alphas: Vec<RatFunc> = Vec::with_capacity(n);
    for k in 0..n as i64 {
        // Row with m - i = k: entries (q^{2(k+1)-j}; q)_j for j <= 2k + 1.
        let coeff = |j: i64| mppp_inf_entry(k + 1, 1, j);
        let mut known = RatFunc::one();
        for (l, a) in (0..).zip(&alphas) {
            known = &known + &(&coeff(2 * l + 1) * a);
        }
        alphas.push(-&(&known / &coeff(2 * k + 1)));
    }
    alphas
}

/// The `2m x m` matrix whose column `s` is `c_{s+1}`.
pub fn solution_basis(m: usize) -> QMatrix {
    let alphas = alpha_sequence(m);
    let c1 = |j: usize| -> RatFunc {
        if j == 0 {
            RatFunc::one()
        } else if j % 2 == 1 {
            alphas[j / 2].clone()
        } else {
            RatFunc::zero()
        }
    };
    QMatrix::from_fn(2 * m, m, |j, s| if j >= 2 * s { c1(j - 2 * s) } else { RatFunc::zero() })
}

/// The solution of `m''(a*) w = 0`, in the column order of `a*`, scaled so that the entry
/// for `a_1` is 1.
pub fn starred_solution(a: &AdmissibleSeq) -> Result<Vec<RatFunc>> {
    if !a.is_irreducible() {
        return Err(Error::InvalidSequence(format!("{a} is not irreducible")));
    }
    let m = a.m();
    let basis = solution_basis(m);
    let cols: Vec<usize> = starred(a).iter().map(|&v| reversed_column(m, v)).collect();
    let zero_rows: Vec<usize> = (0..2 * m).filter(|j| !cols.contains(j)).collect();
    let all: Vec<usize> = (0..m).collect();
    let ns = nullspace(&basis.submatrix(&zero_rows, &all));
    let [lambda] = ns.as_slice() else {
        return Err(Error::Unsolvable(format!("{a}: {} combinations with the prescribed zeros", ns.len())));
    };
    let v = apply(&basis, lambda);
    let w: Vec<RatFunc> = cols.iter().map(|&j| v[j].clone()).collect();
    if w[1].is_zero() {
        return Err(Error::Unsolvable(format!("{a}: solution vanishes at a_1")));
    }
    let inv = w[1].inv()?;
    Ok(w.iter().map(|e| e * &inv).collect())
}

/// Lower triangular, unit diagonal, free of `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangulatingMatrix {
    f: QMatrix,
}

impl TriangulatingMatrix {
    pub fn new(f: QMatrix) -> Result<Self> {
        let ok = f.is_square()
            && f.is_lower_triangular()
            && (0..f.rows()).all(|i| f.get(i, i).is_one())
            && f.entries().iter().all(|e| e.is_free_of(Var::T));
        if !ok {
            return Err(Error::Domain("not a unit lower triangular T-free matrix".into()));
        }
        Ok(TriangulatingMatrix { f })
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.f
    }
}

fn tail(a: &AdmissibleSeq) -> Result<AdmissibleSeq> {
    AdmissibleSeq::new(a.values()[1..].iter().map(|v| v - 2).collect())
}

/// `f(a)` with `m'(a) f(a)` upper triangular.
pub fn triangulating_matrix(a: &AdmissibleSeq) -> Result<TriangulatingMatrix> {
    let m = a.m();
    let mut f = QMatrix::zeros(m, m);
    let mut cur = a.clone();
    for k in 0..m {
        let w = starred_solution(&cur)?;
        for (i, e) in w[1..].iter().enumerate() {
            f.set(k + i, k, e.clone());
        }
        if k + 1 < m {
            cur = tail(&cur)?;
        }
    }
    TriangulatingMatrix::new(f)
}

/// Outcome of [`verify_triangulization`].
#[derive(Clone, Debug, Serialize)]
pub struct TriangulationReport {
    pub seq: String,
    pub upper_triangular: bool,
    pub diagonal_t_free: bool,
    pub diagonal_product_is_det_s: bool,
    pub det_mprime_is_det_s: bool,
    pub offending: Option<String>,
}

impl TriangulationReport {
    pub fn passed(&self) -> bool {
        self.upper_triangular
            && self.diagonal_t_free
            && self.diagonal_product_is_det_s
            && self.det_mprime_is_det_s
    }
}

/// Checks that `m'(a) f(a)` is upper triangular with a `T`-free diagonal whose product is
/// `det s(a) = det m'(a)`.
pub fn verify_triangulization(a: &AdmissibleSeq) -> Result<TriangulationReport> {
    let f = triangulating_matrix(a)?;
    let mprime = matrix_mprime(a);
    let p = mprime.mul(f.matrix())?;
    let below = p.first_below_diagonal();
    let bad_diag = (0..p.rows()).find(|&i| !p.get(i, i).is_free_of(Var::T));
    let diag: RatFunc = (0..p.rows()).map(|i| p.get(i, i).clone()).product();
    let det_s = determinant(&matrix_s(a))?;
    let det_mprime = determinant(&mprime)?;
    let offending = below
        .map(|(i, j)| format!("entry ({}, {}) = {}", i + 1, j + 1, p.get(i, j)))
        .or_else(|| bad_diag.map(|i| format!("diagonal entry {} = {}", i + 1, p.get(i, i))));
    Ok(TriangulationReport {
        seq: a.to_string(),
        upper_triangular: below.is_none(),
        diagonal_t_free: bad_diag.is_none(),
        diagonal_product_is_det_s: diag == det_s,
        det_mprime_is_det_s: det_mprime == det_s,
        offending,
    })
}

/// Whether the starred solution annihilates `m''(a*)` symbolically and at `T = q^{2 x_0}`
/// for each given `x_0`.
pub fn x_invariance_witness(a: &AdmissibleSeq, xs: &[i64]) -> Result<bool> {
    let w = starred_solution(a)?;
    if !w.iter().all(|e| e.is_free_of(Var::T)) {
        return Ok(false);
    }
    let mpp = matrix_mpp(a)?;
    if !apply(&mpp, &w).iter().all(RatFunc::is_zero) {
        return Ok(false);
    }
    for &x0 in xs {
        let s = Substitution::new().with(Var::T, RatFunc::q_pow(2 * x0 as i32));
        if !apply(&mpp.substitute(&s)?, &w).iter().all(RatFunc::is_zero) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether deleting the first two columns and the last row of `m'''(m, ∞)` and dividing
/// each row by its first entry gives `m'''(m - 1, ∞)`.
pub fn column_relation_holds(m: usize) -> bool {
    if m < 2 {
        return true;
    }
    let big = QMatrix::from_fn(m, 2 * m, |i, j| mppp_inf_entry(m as i64, i as i64 + 1, j as i64));
    let small = QMatrix::from_fn(m - 1, 2 * m - 2, |i, j| {
        mppp_inf_entry(m as i64 - 1, i as i64 + 1, j as i64)
    });
    (0..m - 1).all(|i| {
        let lead = big.get(i, 2);
        !lead.is_zero() && (0..2 * m - 2).all(|j| &(big.get(i, j + 2) / lead) == small.get(i, j))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::MPoly;

    fn om(k: i32) -> RatFunc {
        RatFunc::from_poly(&MPoly::one() - &MPoly::q_pow(k))
    }

    #[test]
    fn first_alphas() {
        let a = alpha_sequence(2);
        assert_eq!(a[0], -&(RatFunc::one() / om(1)));
        let a3 = &RatFunc::q_pow(1) / &(&om(1).pow(2).unwrap() * &om(3));
        assert_eq!(a[1], a3);
    }

    #[test]
    fn basis_solves_mppp_inf() {
        for m in 1..=5 {
            let inf = QMatrix::from_fn(m, 2 * m, |i, j| mppp_inf_entry(m as i64, i as i64 + 1, j as i64));
            let basis = solution_basis(m);
            for s in 0..m {
                assert!(apply(&inf, &basis.column(s)).iter().all(RatFunc::is_zero), "m={m} s={s}");
            }
        }
    }

    #[test]
    fn smallest_cases() {
        let two = AdmissibleSeq::new(vec![2]).unwrap();
        assert!(triangulating_matrix(&two).unwrap().matrix().get(0, 0).is_one());
        assert!(verify_triangulization(&two).unwrap().passed());
        let a = AdmissibleSeq::new(vec![3, 4]).unwrap();
        let r = verify_triangulization(&a).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(x_invariance_witness(&a, &[0, 1, 5]).unwrap());
    }

    #[test]
    fn reducible_rejected() {
        let a = AdmissibleSeq::new(vec![2, 4]).unwrap();
        assert!(matches!(triangulating_matrix(&a), Err(Error::InvalidSequence(_))));
    }

    #[test]
    fn column_relation() {
        for m in 1..=6 {
            assert!(column_relation_holds(m), "m={m}");
        }
    }
}
