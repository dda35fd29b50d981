//! Exact scalar arithmetic: rationals, Laurent polynomials, rational functions
//! and the q-calculus building blocks.
//!
//! Four indeterminates are available: `q` (which may appear with negative
//! exponents), the weight variables `X` and `Y`, and `T`, which stands for
//! `q^{2x}` wherever a width parameter `x` enters through powers of `q`.

mod mpoly;
mod qcalc;
mod rat;
mod ratfunc;

pub use mpoly::{has_nonnegative_integer_coefficients, MPoly, Monomial, Var};
pub use qcalc::{qbinom, qbinom_or_zero, qexp, qpoch, qpoch_mono, qpoch_q, qpoch_recip};
pub use rat::{BigRat, ParseRatError};
pub use ratfunc::{cyclotomic, RatFunc, Substitution};
pub(crate) use ratfunc::{clear_denominators, from_parts};

use crate::error::Result;

/// Substitutes the assigned variables and normalizes.
pub fn substitute(f: &RatFunc, assignments: &Substitution) -> Result<RatFunc> {
    f.substitute(assignments)
}

/// `T * q^e`, the usual stand-in for `q^{2x + e}`.
pub fn t_q(e: i32) -> RatFunc {
    RatFunc::monomial(BigRat::one(), Monomial([e, 0, 0, 1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitution_examples() {
        let x = RatFunc::var(Var::X);
        let y = RatFunc::var(Var::Y);
        let f = &(&x * &RatFunc::q_pow(1)) + &(&y * &RatFunc::q_pow(-1));
        let s = Substitution::new().with(Var::X, 1.into()).with(Var::Y, 1.into());
        assert_eq!(substitute(&f, &s).unwrap(), &RatFunc::q_pow(1) + &RatFunc::q_pow(-1));

        let g = t_q(2);
        let s = Substitution::new().with(Var::T, RatFunc::q_pow(-3));
        assert_eq!(substitute(&g, &s).unwrap(), RatFunc::q_pow(-1));

        let h = &(&RatFunc::one() - &t_q(2)) / &(&RatFunc::one() - &RatFunc::var(Var::T));
        let s = Substitution::new().with(Var::T, RatFunc::zero());
        assert!(substitute(&h, &s).unwrap().is_one());
    }

    #[test]
    fn substitution_into_vanishing_denominator_fails() {
        let h = &RatFunc::one() / &(&RatFunc::one() - &RatFunc::var(Var::T));
        let s = Substitution::new().with(Var::T, RatFunc::one());
        assert!(substitute(&h, &s).is_err());
    }

    #[test]
    fn general_substitution_path() {
        // X -> (1 + q), a non-monomial value
        let x = RatFunc::var(Var::X);
        let f = &x * &x;
        let v = &RatFunc::one() + &RatFunc::q_pow(1);
        let s = Substitution::new().with(Var::X, v.clone());
        assert_eq!(substitute(&f, &s).unwrap(), &v * &v);
    }
}
