//! Matrices over rational functions, exact determinants and the
//! Lindström–Gessel–Viennot description of nonintersecting path families.

mod det;
mod family;
mod matrix;
mod solve;

pub use det::{determinant, determinant_bareiss, determinant_expansion, EXPANSION_MAX};
pub use family::{family_gf_brute, family_weights, FAMILY_STEP_LIMIT};
pub use matrix::QMatrix;
pub use solve::{apply, nullspace, rref};

use crate::error::{Error, Result};
use crate::exactalg::{qpoch, BigRat, Monomial, RatFunc};
use crate::paths::{gf_brute, gfone, shift_quotient, LatticePoint, WeightMode};
use crate::regions::PathEndpoints;

pub(crate) fn check_increasing(v: &[i64], what: &str) -> Result<()> {
    if v.windows(2).all(|w| w[0] < w[1]) {
        Ok(())
    } else {
        Err(Error::InvalidSequence(format!("{what} must be strictly increasing: {v:?}")))
    }
}

fn check_pair(a: &[i64], c: &[i64]) -> Result<()> {
    if a.len() != c.len() {
        return Err(Error::LengthMismatch { expected: a.len(), got: c.len() });
    }
    check_increasing(a, "start tuple")?;
    check_increasing(c, "end tuple")
}

/// Path matrix `(gf(start_i -> end_j))` for arbitrary endpoints.
pub fn lgv_matrix(e: &PathEndpoints, mode: WeightMode) -> QMatrix {
    let (s, t) = (e.starts(), e.ends());
    QMatrix::from_fn(s.len(), t.len(), |i, j| gf_brute(s[i].x, s[i].y, t[j].x, t[j].y, mode))
}

/// `(gfone(a_i, c_j))`, the path matrix for starts `(a_i, a_i)` and ends `(c_j, 0)`.
pub fn lgv_matrix_half(a: &[i64], c: &[i64]) -> Result<QMatrix> {
    check_pair(a, c)?;
    Ok(QMatrix::from_fn(a.len(), c.len(), |i, j| gfone(a[i], c[j])))
}

/// Endpoints `(a_i, a_i)` and `(c_i, 0)`.
pub fn half_endpoints(a: &[i64], c: &[i64]) -> Result<PathEndpoints> {
    check_pair(a, c)?;
    PathEndpoints::new(
        a.iter().map(|&v| LatticePoint::new(v, v)).collect(),
        c.iter().map(|&v| LatticePoint::new(v, 0)).collect(),
    )
}

/// Both sides of the widening identity: the quotient of the path determinants after and
/// before shifting every endpoint right by `d`, and the product of the single-path factors.
pub fn half_quotient_check(a: &[i64], c: &[i64], d: i64) -> Result<(RatFunc, RatFunc)> {
    let shift = |v: &[i64]| v.iter().map(|x| x + d).collect::<Vec<_>>();
    let before = determinant(&lgv_matrix_half(a, c)?)?;
    let after = determinant(&lgv_matrix_half(&shift(a), &shift(c))?)?;
    let lhs = after.checked_div(&before)?;
    let rhs = a.iter().zip(c).map(|(&am, &cm)| shift_quotient(am, cm, d)).product();
    Ok((lhs, rhs))
}

/// Endpoints `(2(x+i-1)+1, x+i-1)` and `(2x+a_j, 0)` of the odd quarter-hexagon families.
pub fn quarter_endpoints(x: i64, a: &[i64]) -> Result<PathEndpoints> {
    check_increasing(a, "end offsets")?;
    let m = a.len() as i64;
    PathEndpoints::new(
        (0..m).map(|i| LatticePoint::new(2 * (x + i) + 1, x + i)).collect(),
        a.iter().map(|&aj| LatticePoint::new(2 * x + aj, 0)).collect(),
    )
}

/// Product formula for the generating function of `m` nonintersecting paths with the
/// endpoints of [`quarter_endpoints`], weighted with `X = Y = 1`.
pub fn quarter_family_gf(m: usize, x: i64, a: &[i64]) -> Result<RatFunc> {
    if a.len() != m {
        return Err(Error::LengthMismatch { expected: m, got: a.len() });
    }
    check_increasing(a, "end offsets")?;
    if x < 0 || a.first().is_some_and(|&v| v < 0) {
        return Err(Error::Domain("quarter families need x >= 0 and a_j >= 0".into()));
    }
    let mm = m as i64;
    let sum_a: i64 = a.iter().sum();
    let quad: i64 = a.iter().map(|&v| v - v * v).sum::<i64>() / 2;
    let excess = mm * mm - sum_a;
    let e = quad + (4 * mm.pow(3) - 3 * mm * mm - mm) / 6 + 2 * x * excess;
    let pre = RatFunc::monomial(BigRat::from_int(2).pow(excess as i32), Monomial::q(e as i32));
    let mat = QMatrix::try_from_fn(m, m, |i, j| {
        let i = i as i64 + 1;
        let n = a[j] + 1 - 2 * i;
        if n < 0 {
            return Ok(RatFunc::zero());
        }
        let top = qpoch(&RatFunc::q_pow((4 * i + 4 * x) as i32), 4, n)?;
        let bottom = qpoch(&RatFunc::q_pow(2), 2, n)?;
        top.checked_div(&bottom)
    })?;
    Ok(&pre * &determinant(&mat)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::gftwo;

    #[test]
    fn half_matrix_basics() {
        let m = lgv_matrix_half(&[2], &[5]).unwrap();
        assert_eq!(m[(0, 0)], gfone(2, 5));
        let m = lgv_matrix_half(&[1, 3], &[2, 4]).unwrap();
        assert!(m[(1, 0)].is_zero());
        assert!(lgv_matrix_half(&[1, 1], &[2, 3]).is_err());
        assert!(matches!(lgv_matrix_half(&[1], &[2, 3]), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn lgv_small_example() {
        let e = half_endpoints(&[0, 1], &[1, 2]).unwrap();
        let det = determinant(&lgv_matrix_half(&[0, 1], &[1, 2]).unwrap()).unwrap();
        assert_eq!(det, family_gf_brute(&e, WeightMode::GeneralXY).unwrap());
        assert_eq!(det, determinant(&lgv_matrix(&e, WeightMode::GeneralXY)).unwrap());
    }

    #[test]
    fn quotient_examples() {
        let (l, r) = half_quotient_check(&[0, 1], &[2, 3], 0).unwrap();
        assert!(l.is_one() && r.is_one());
        let (l, r) = half_quotient_check(&[2], &[4], 3).unwrap();
        assert_eq!(l, shift_quotient(2, 4, 3));
        assert_eq!(l, r);
        let (l, r) = half_quotient_check(&[0, 1], &[2, 3], 2).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn quarter_examples() {
        assert!(quarter_family_gf(1, 0, &[1]).unwrap().is_one());
        assert_eq!(quarter_family_gf(1, 0, &[1]).unwrap(), gftwo(0, 1));
        assert!(quarter_family_gf(2, 0, &[1, 2]).unwrap().is_zero());
        let e = quarter_endpoints(1, &[2, 4]).unwrap();
        assert_eq!(
            quarter_family_gf(2, 1, &[2, 4]).unwrap(),
            family_gf_brute(&e, WeightMode::UnitXYHalfZero).unwrap()
        );
    }
}
