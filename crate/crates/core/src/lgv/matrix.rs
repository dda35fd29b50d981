//! Dense matrices of rational functions.

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};
use crate::exactalg::{BigRat, RatFunc, Substitution};

#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RatFunc>,
}

impl QMatrix {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<RatFunc>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::LengthMismatch { expected: rows * cols, got: entries.len() });
        }
        Ok(QMatrix { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> RatFunc) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        QMatrix { rows, cols, entries }
    }

    pub fn try_from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Result<RatFunc>,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j)?);
            }
        }
        Ok(QMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| RatFunc::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { RatFunc::one() } else { RatFunc::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: RatFunc) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[RatFunc] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<RatFunc> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[RatFunc] {
        &self.entries
    }

    pub fn transpose(&self) -> QMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Matrix product.
    pub fn mul(&self, rhs: &QMatrix) -> Result<QMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::LengthMismatch { expected: self.cols, got: rhs.rows });
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols)
                .filter(|&k| !self.get(i, k).is_zero() && !rhs.get(k, j).is_zero())
                .map(|k| self.get(i, k) * rhs.get(k, j))
                .sum()
        }))
    }

    /// Applies `f` to every entry.
    pub fn map(&self, mut f: impl FnMut(&RatFunc) -> RatFunc) -> QMatrix {
        QMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(&mut f).collect() }
    }

    pub fn substitute(&self, s: &Substitution) -> Result<QMatrix> {
        let entries = self.entries.iter().map(|e| e.substitute(s)).collect::<Result<_>>()?;
        Ok(QMatrix { rows: self.rows, cols: self.cols, entries })
    }

    /// The submatrix on the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> QMatrix {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Entry-wise evaluation at `(q, X, Y, T)`.
    pub fn eval(&self, point: &[BigRat; 4]) -> Result<Vec<Vec<BigRat>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|e| e.eval(point)).collect())
            .collect()
    }

    /// First nonzero entry strictly below the diagonal, if any.
    pub fn first_below_diagonal(&self) -> Option<(usize, usize)> {
        (0..self.rows)
            .flat_map(|i| (0..i.min(self.cols)).map(move |j| (i, j)))
            .find(|&(i, j)| !self.get(i, j).is_zero())
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.first_below_diagonal().is_none()
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.transpose().is_upper_triangular()
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = RatFunc;
    fn index(&self, (i, j): (usize, usize)) -> &RatFunc {
        self.get(i, j)
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QMatrix {}x{}\n{}", self.rows, self.cols, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Var;

    #[test]
    fn shape_checks() {
        assert!(QMatrix::new(2, 2, vec![RatFunc::one(); 3]).is_err());
        let m = QMatrix::new(1, 2, vec![RatFunc::one(), RatFunc::var(Var::X)]).unwrap();
        assert_eq!(m.transpose().rows(), 2);
        assert!(m.mul(&m).is_err());
        let p = m.mul(&m.transpose()).unwrap();
        assert_eq!(p[(0, 0)], &RatFunc::one() + &RatFunc::var(Var::X).pow(2).unwrap());
    }

    #[test]
    fn triangularity() {
        let mut m = QMatrix::identity(3);
        assert!(m.is_upper_triangular() && m.is_lower_triangular());
        m.set(2, 0, RatFunc::q_pow(1));
        assert_eq!(m.first_below_diagonal(), Some((2, 0)));
        assert!(m.is_lower_triangular());
    }
}
