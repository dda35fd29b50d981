//! q-Pochhammer symbols, q-binomial coefficients and the exponent `e(n, k)`.

use super::mpoly::{MPoly, Monomial};
use super::rat::BigRat;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

fn one_minus(a: &RatFunc, shift: i32) -> RatFunc {
    &RatFunc::one() - &a.mul_monomial(&BigRat::one(), &Monomial::q(shift))
}

/// `(a; q^base)_n`.
///
/// For `n >= 0` this is `prod_{j<n} (1 - a q^{base*j})`; for `n < 0` it is
/// `1 / (a q^{-base}; q^{-base})_{-n}`.
pub fn qpoch(a: &RatFunc, base: i32, n: i64) -> Result<RatFunc> {
    if n >= 0 {
        let mut acc = RatFunc::one();
        for j in 0..n {
            acc = &acc * &one_minus(a, base * j as i32);
        }
        return Ok(acc);
    }
    let mut acc = RatFunc::one();
    for j in 0..(-n) {
        acc = acc.checked_div(&one_minus(a, -base * (1 + j as i32)))?;
    }
    Ok(acc)
}

/// `1 / (a; q^base)_n`, built factor by factor so each binomial is normalized separately.
pub fn qpoch_recip(a: &RatFunc, base: i32, n: i64) -> Result<RatFunc> {
    if n < 0 {
        return qpoch(&a.mul_monomial(&BigRat::one(), &Monomial::q(-base)), -base, -n);
    }
    let mut acc = RatFunc::one();
    for j in 0..n {
        acc = acc.checked_div(&one_minus(a, base * j as i32))?;
    }
    Ok(acc)
}

/// `(c q^e; q^base)_n` for a monomial first argument.
pub fn qpoch_mono(c: i64, m: Monomial, base: i32, n: i64) -> Result<RatFunc> {
    qpoch(&RatFunc::monomial(BigRat::from_int(c), m), base, n)
}

/// `(q^a; q^b)_n` as a polynomial (requires `n >= 0`).
pub fn qpoch_q(a: i32, b: i32, n: i64) -> MPoly {
    assert!(n >= 0);
    let mut acc = MPoly::one();
    for j in 0..n as i32 {
        acc = &acc * &(&MPoly::one() - &MPoly::q_pow(a + b * j));
    }
    acc
}

/// Gaussian binomial coefficient `[n choose k]_q`.
pub fn qbinom(n: i64, k: i64) -> Result<MPoly> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::Domain(format!("q-binomial needs 0 <= k <= n, got n={n}, k={k}")));
    }
    let top = qpoch_q(1, 1, n);
    let bottom = &qpoch_q(1, 1, k) * &qpoch_q(1, 1, n - k);
    Ok(top.div_exact(&bottom).expect("q-binomial quotient is a polynomial"))
}

/// Like [`qbinom`] but returns zero outside `0 <= k <= n`.
pub fn qbinom_or_zero(n: i64, k: i64) -> MPoly {
    qbinom(n, k).unwrap_or_else(|_| MPoly::zero())
}

/// `e(n, k) = k(k+1)/2 - k n`.
pub fn qexp(n: i64, k: i64) -> i64 {
    k * (k + 1) / 2 - k * n
}
