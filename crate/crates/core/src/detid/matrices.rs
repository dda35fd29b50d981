//! The matrices of the determinant identity, with `T` standing for `q^{2x}`.

use crate::error::{Error, Result};
use crate::exactalg::{qpoch, t_q, RatFunc, Substitution, Var};
use crate::lgv::{determinant, QMatrix};

use super::seq::{reduce_blocks, AdmissibleSeq};

/// Largest `m` accepted by [`matrix_mppp`].
pub const MPPP_MAX: usize = 8;

fn qq(e: i64, n: i64) -> RatFunc {
    qpoch(&RatFunc::q_pow(e as i32), 1, n).expect("nonnegative index")
}

fn tq(e: i64, base: i32, n: i64) -> RatFunc {
    qpoch(&t_q(e as i32), base, n).expect("nonnegative index")
}

fn build(rows: usize, a: &[i64], entry: impl Fn(i64, i64) -> RatFunc) -> QMatrix {
    QMatrix::from_fn(rows, a.len(), |i, j| {
        let i = i as i64 + 1;
        let n = a[j] + 1 - 2 * i;
        if n < 0 {
            RatFunc::zero()
        } else {
            entry(i, n)
        }
    })
}

/// `((T q^{2i}; q^2)_n / (q; q)_n)` with `n = a_j + 1 - 2i`, and 0 where `n < 0`.
pub fn matrix_m(a: &AdmissibleSeq) -> QMatrix {
    matrix_m_raw(a.values())
}

/// [`matrix_m`] without the admissibility check.
pub fn matrix_m_raw(a: &[i64]) -> QMatrix {
    build(a.len(), a, |i, n| &tq(2 * i, 2, n) / &qq(1, n))
}

/// `(1 / (q; q)_n)` with `n = a_j + 1 - 2i`, and 0 where `n < 0`.
pub fn matrix_s(a: &AdmissibleSeq) -> QMatrix {
    matrix_s_raw(a.values())
}

pub fn matrix_s_raw(a: &[i64]) -> QMatrix {
    build(a.len(), a, |_, n| qq(1, n).inv().expect("nonzero"))
}

/// `prod_k (T q^{2k}; q)_{a_k - 2k + 1}`.
pub fn theorem_factor(a: &[i64]) -> RatFunc {
    (1..)
        .zip(a)
        .map(|(k, &ak)| {
            let n = ak - 2 * k + 1;
            qpoch(&t_q(2 * k as i32), 1, n).expect("nonzero Pochhammer")
        })
        .product()
}

/// `det m(a)` and `prod_k (T q^{2k}; q)_{a_k-2k+1} det s(a)`.
pub fn theorem_check(a: &AdmissibleSeq) -> Result<(RatFunc, RatFunc)> {
    theorem_sides(a.values())
}

/// Both sides of the identity for an arbitrary increasing sequence.
pub fn theorem_sides(a: &[i64]) -> Result<(RatFunc, RatFunc)> {
    if !a.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::InvalidSequence(format!("{a:?} is not strictly increasing")));
    }
    let lhs = determinant(&matrix_m_raw(a))?;
    let rhs = &theorem_factor(a) * &determinant(&matrix_s_raw(a))?;
    Ok((lhs, rhs))
}

/// `det m(a)` and the product of the block determinants, each block evaluated at its
/// width offset.
pub fn block_check(a: &AdmissibleSeq) -> Result<(RatFunc, RatFunc)> {
    let whole = determinant(&matrix_m(a))?;
    let mut prod = RatFunc::one();
    for b in reduce_blocks(a) {
        let shift = Substitution::new().with(Var::T, t_q(2 * b.offset as i32));
        prod = &prod * &determinant(&matrix_m(&b.seq))?.substitute(&shift)?;
    }
    Ok((whole, prod))
}

/// `(T q^{2i}; q^2)_n / ((T q^{2i}; q)_n (q; q)_n)` with `n = a_j + 1 - 2i`, for `rows`
/// rows and the given columns.
pub fn matrix_mprime_cols(rows: usize, cols: &[i64]) -> QMatrix {
    build(rows, cols, |i, n| &tq(2 * i, 2, n) / &(&tq(2 * i, 1, n) * &qq(1, n)))
}

/// `m'(a)`: `m(a)` with the theorem's factors pulled out of rows and columns.
pub fn matrix_mprime(a: &AdmissibleSeq) -> QMatrix {
    matrix_mprime_cols(a.m(), a.values())
}

/// `(1, a_1, ..., a_m)`.
pub fn starred(a: &AdmissibleSeq) -> Vec<i64> {
    std::iter::once(1).chain(a.values().iter().copied()).collect()
}

/// `m''(a*)`: the `m x (m+1)` matrix `m'(a*)` with every row divided by its last entry.
pub fn matrix_mpp(a: &AdmissibleSeq) -> Result<QMatrix> {
    if !a.is_irreducible() {
        return Err(Error::InvalidSequence(format!("{a} is not irreducible")));
    }
    let p = matrix_mprime_cols(a.m(), &starred(a));
    let last = p.cols() - 1;
    QMatrix::try_from_fn(p.rows(), p.cols(), |i, j| p.get(i, j).checked_div(p.get(i, last)))
}

/// Entry `(i, j)` of `m'''(m)`, `1 <= i <= m`, `0 <= j < 2m`:
/// `(q^{2(m-i+1)-j}; q)_j (T q^{2m-j+1}; q)_j / (T q^{4m-2i+2-2j}; q^2)_j`.
pub fn mppp_entry(m: i64, i: i64, j: i64) -> RatFunc {
    let top = &qq(2 * (m - i + 1) - j, j) * &tq(2 * m - j + 1, 1, j);
    if top.is_zero() {
        return top;
    }
    &top / &tq(4 * m - 2 * i + 2 - 2 * j, 2, j)
}

/// The `m x 2m` matrix `m'''(m)`.
pub fn matrix_mppp(m: usize) -> Result<QMatrix> {
    if m > MPPP_MAX {
        return Err(Error::LimitExceeded(format!("m = {m} (limit {MPPP_MAX})")));
    }
    let mm = m as i64;
    Ok(QMatrix::from_fn(m, 2 * m, |i, j| mppp_entry(mm, i as i64 + 1, j as i64)))
}

/// Entry `(i, j)` of `m'''(m)` at `T = 0`: `(q^{2(m-i+1)-j}; q)_j`.
pub fn mppp_inf_entry(m: i64, i: i64, j: i64) -> RatFunc {
    qq(2 * (m - i + 1) - j, j)
}

/// `m'''(m)` at `T = 0`.
pub fn matrix_mppp_inf(m: usize) -> QMatrix {
    let mm = m as i64;
    QMatrix::from_fn(m, 2 * m, |i, j| mppp_inf_entry(mm, i as i64 + 1, j as i64))
}

/// Column of `m'''(m)` holding the column `a` of `m''`.
pub fn reversed_column(m: usize, a: i64) -> usize {
    (2 * m as i64 - a) as usize
}
