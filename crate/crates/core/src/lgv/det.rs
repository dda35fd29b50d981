//! Exact determinants.
//!
//! Each row is first brought over the least common multiple of its factored
//! denominators, so the elimination runs on polynomials only. Small matrices
//! are expanded along rows through all column subsets, which skips zero
//! entries for free; larger ones use fraction-free Bareiss elimination.

use crate::error::{Error, Result};
use crate::exactalg::{clear_denominators, from_parts, MPoly, RatFunc};

use super::matrix::QMatrix;

/// Largest size handled by subset expansion.
pub const EXPANSION_MAX: usize = 6;

/// Exact determinant of a square matrix.
pub fn determinant(m: &QMatrix) -> Result<RatFunc> {
    if m.rows() <= EXPANSION_MAX {
        determinant_expansion(m)
    } else {
        determinant_bareiss(m)
    }
}

/// Determinant by expansion over column subsets.
pub fn determinant_expansion(m: &QMatrix) -> Result<RatFunc> {
    with_cleared_rows(m, expansion)
}

/// Determinant by fraction-free elimination.
pub fn determinant_bareiss(m: &QMatrix) -> Result<RatFunc> {
    with_cleared_rows(m, bareiss)
}

fn with_cleared_rows(m: &QMatrix, det: impl FnOnce(Vec<Vec<MPoly>>) -> MPoly) -> Result<RatFunc> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let mut rows = Vec::with_capacity(m.rows());
    let mut den = Vec::new();
    for i in 0..m.rows() {
        let (polys, l) = clear_denominators(m.row(i));
        rows.push(polys);
        den.extend(l);
    }
    Ok(from_parts(det(rows), den))
}

fn expansion(rows: Vec<Vec<MPoly>>) -> MPoly {
    let n = rows.len();
    if n == 0 {
        return MPoly::one();
    }
    // minors[S] = det of the first |S| rows restricted to the columns in S.
    let mut minors: Vec<Option<MPoly>> = vec![None; 1 << n];
    minors[0] = Some(MPoly::one());
    for set in 1usize..(1 << n) {
        let k = set.count_ones() as usize - 1;
        let mut acc = MPoly::zero();
        let mut pos = 0;
        for j in 0..n {
            if set & (1 << j) == 0 {
                continue;
            }
            let entry = &rows[k][j];
            if !entry.is_zero() {
                if let Some(minor) = &minors[set & !(1 << j)] {
                    let term = entry * minor;
                    // Sign of moving column j to the end of the set.
                    let after = k - pos;
                    acc = if after.is_multiple_of(2) { &acc + &term } else { &acc - &term };
                }
            }
            pos += 1;
        }
        if !acc.is_zero() {
            minors[set] = Some(acc);
        }
    }
    minors[(1 << n) - 1].take().unwrap_or_else(MPoly::zero)
}

fn bareiss(mut a: Vec<Vec<MPoly>>) -> MPoly {
    let n = a.len();
    if n == 0 {
        return MPoly::one();
    }
    let mut sign = false;
    let mut prev = MPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = !sign;
                }
                None => return MPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = MPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -&d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{BigRat, Var};

    fn sym(v: Var) -> RatFunc {
        RatFunc::var(v)
    }

    #[test]
    fn small_cases() {
        assert!(determinant(&QMatrix::identity(3)).unwrap().is_one());
        let (a, b, c, d) = (sym(Var::X), sym(Var::Y), sym(Var::T), sym(Var::Q));
        let m = QMatrix::new(2, 2, vec![a.clone(), b.clone(), c.clone(), d.clone()]).unwrap();
        assert_eq!(determinant(&m).unwrap(), &(&a * &d) - &(&b * &c));
        assert_eq!(determinant_bareiss(&m).unwrap(), &(&a * &d) - &(&b * &c));
        assert!(matches!(
            determinant(&QMatrix::zeros(2, 3)),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn needs_pivoting() {
        let m = QMatrix::new(
            3,
            3,
            [0, 1, 2, 3, 0, 4, 5, 6, 0].iter().map(|&v| RatFunc::from_int(v)).collect(),
        )
        .unwrap();
        assert_eq!(determinant_bareiss(&m).unwrap(), RatFunc::from_int(56));
        assert_eq!(determinant_expansion(&m).unwrap(), RatFunc::from_int(56));
    }

    #[test]
    fn rational_entries() {
        let one_minus_q = RatFunc::from_poly(&MPoly::one() - &MPoly::q_pow(1));
        let m = QMatrix::new(
            2,
            2,
            vec![
                RatFunc::one() / one_minus_q.clone(),
                RatFunc::one(),
                RatFunc::q_pow(1),
                one_minus_q.clone(),
            ],
        )
        .unwrap();
        let expect = &RatFunc::one() - &RatFunc::q_pow(1);
        assert_eq!(determinant(&m).unwrap(), expect);
        assert_eq!(determinant(&m).unwrap().eval(&[BigRat::new(1, 3), 0.into(), 0.into(), 0.into()]).unwrap(), BigRat::new(2, 3));
    }
}
