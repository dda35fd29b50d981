//! The q-binomial lemma and the structural facts about `m'''`.

use crate::error::{Error, Result};
use crate::exactalg::{qbinom, qexp, qpoch, t_q, BigRat, MPoly, Monomial, RatFunc, Substitution, Var};

use super::matrices::{mppp_entry, mppp_inf_entry};

/// `sum_{k=0}^n (-1)^k q^{e(n,k)} [n choose k]_q prod_i (1 - gamma_i q^k)`, which vanishes
/// whenever `gammas` has `n - r` entries with `r >= 1`.
pub fn qbinom_identity_check(n: i64, r: i64, gammas: &[BigRat]) -> Result<RatFunc> {
    if r < 1 || n < r {
        return Err(Error::Domain(format!("need 1 <= r <= n, got n={n}, r={r}")));
    }
    if gammas.len() as i64 != n - r {
        return Err(Error::LengthMismatch { expected: (n - r) as usize, got: gammas.len() });
    }
    let mut acc = MPoly::zero();
    for k in 0..=n {
        let sign = if k % 2 == 0 { BigRat::one() } else { BigRat::from_int(-1) };
        let mut term = qbinom(n, k)?.mul_monomial(&sign, &Monomial::q(qexp(n, k) as i32));
        for g in gammas {
            let lin = &MPoly::one() - &MPoly::term(g.clone(), Monomial::q(k as i32));
            term = &term * &lin;
        }
        acc = &acc + &term;
    }
    Ok(RatFunc::from_poly(acc))
}

/// `sum_{k=0}^n (-1)^k q^{e(n,k)} [n choose k]_q`, which equals `[n = 0]`.
pub fn alternating_qbinom_sum(n: i64) -> Result<RatFunc> {
    if n < 0 {
        return Err(Error::Domain(format!("n must be nonnegative, got {n}")));
    }
    let mut acc = MPoly::zero();
    for k in 0..=n {
        let sign = if k % 2 == 0 { BigRat::one() } else { BigRat::from_int(-1) };
        acc = &acc + &qbinom(n, k)?.mul_monomial(&sign, &Monomial::q(qexp(n, k) as i32));
    }
    Ok(RatFunc::from_poly(acc))
}

/// Entry `(i, j)` of `m'''(m)` at `x = 1/2 - k` and entry `(k, j)` at `x = 1/2 - i`.
pub fn halfinteger_symmetry_check(m: i64, i: i64, j: i64, k: i64) -> Result<(RatFunc, RatFunc)> {
    if !(1..=m).contains(&i) || !(1..=m).contains(&k) || !(0..2 * m).contains(&j) {
        return Err(Error::Domain(format!("need 1 <= i,k <= {m} and 0 <= j < {}", 2 * m)));
    }
    let at = |row: i64, other: i64| {
        let s = Substitution::new().with(Var::T, RatFunc::q_pow((1 - 2 * other) as i32));
        mppp_entry(m, row, j).substitute(&s)
    };
    Ok((at(i, k)?, at(k, i)?))
}

/// Result of clearing row `i` of `m'''(m)` by `(T q^{2m+2}; q^2)_{m-i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClearedEntry {
    pub j: i64,
    /// `None` for the staircase zeros.
    pub t_factors: Option<Vec<i64>>,
}

/// For every column `j` of row `i`, multiplies the entry by `(T q^{2m+2}; q^2)_{m-i}`,
/// divides by `(q^{2(m-i+1)-j}; q)_j` and splits the quotient into factors `1 - T q^y`,
/// returning the exponents `y`. Fails if the quotient is not such a product.
pub fn cleared_row(m: i64, i: i64) -> Result<Vec<ClearedEntry>> {
    let clear = qpoch(&t_q((2 * m + 2) as i32), 2, m - i)?;
    let mut out = Vec::new();
    for j in 0..2 * m {
        let e = mppp_entry(m, i, j);
        if e.is_zero() {
            out.push(ClearedEntry { j, t_factors: None });
            continue;
        }
        let rest = (&e * &clear).checked_div(&mppp_inf_entry(m, i, j))?;
        if !rest.is_polynomial() {
            return Err(Error::Domain(format!("row {i}, column {j}: {rest} is not a polynomial")));
        }
        let mut p = rest.numerator().clone();
        let mut ys = Vec::new();
        let bound = 4 * m + 4;
        'outer: while p.max_degree(Var::T) > 0 {
            for y in -bound..=bound {
                let lin = &MPoly::one() - &MPoly::term(BigRat::one(), Monomial([y as i32, 0, 0, 1]));
                if let Some(quot) = p.div_exact(&lin) {
                    p = quot;
                    ys.push(y);
                    continue 'outer;
                }
            }
            return Err(Error::Domain(format!("row {i}, column {j}: leftover factor {p}")));
        }
        if !p.is_one() {
            return Err(Error::Domain(format!("row {i}, column {j}: leftover constant {p}")));
        }
        ys.sort_unstable();
        out.push(ClearedEntry { j, t_factors: Some(ys) });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qbinom_lemma_examples() {
        assert!(qbinom_identity_check(1, 1, &[]).unwrap().is_zero());
        let g = [BigRat::from_int(2), BigRat::from_int(-3), BigRat::new(1, 7)];
        assert!(qbinom_identity_check(5, 2, &g).unwrap().is_zero());
        assert!(qbinom_identity_check(5, 2, &g[..2]).is_err());
        assert!(qbinom_identity_check(2, 0, &g[..2]).is_err());
        assert!(alternating_qbinom_sum(0).unwrap().is_one());
        for n in 1..=10 {
            assert!(alternating_qbinom_sum(n).unwrap().is_zero());
        }
    }

    #[test]
    fn too_many_gammas_break_the_lemma() {
        let g = [BigRat::from_int(2)];
        // With r = 0 the sum no longer vanishes.
        let mut acc = MPoly::zero();
        for k in 0..=1 {
            let sign = if k % 2 == 0 { BigRat::one() } else { BigRat::from_int(-1) };
            let lin = &MPoly::one() - &MPoly::term(g[0].clone(), Monomial::q(k as i32));
            acc = &acc + &(&qbinom(1, k).unwrap().mul_monomial(&sign, &Monomial::q(qexp(1, k) as i32)) * &lin);
        }
        assert!(!acc.is_zero());
    }

    #[test]
    fn halfinteger_example() {
        let (l, r) = halfinteger_symmetry_check(3, 1, 1, 2).unwrap();
        assert_eq!(l, r);
        assert!(halfinteger_symmetry_check(3, 0, 1, 2).is_err());
    }

    #[test]
    fn cleared_rows_of_three() {
        for i in 1..=3 {
            for c in cleared_row(3, i).unwrap() {
                match c.t_factors {
                    Some(ys) => assert_eq!(ys.len() as i64, 3 - i),
                    None => assert!(c.j >= 2 * (3 - i + 1)),
                }
            }
        }
    }
}
