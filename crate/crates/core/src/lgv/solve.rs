//! Exact linear solving over rational functions.

use crate::exactalg::RatFunc;

use super::matrix::QMatrix;

/// Reduced row echelon form, with the pivot column of each nonzero row.
pub fn rref(m: &QMatrix) -> (QMatrix, Vec<usize>) {
    let mut a: Vec<Vec<RatFunc>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols() {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("pivot is nonzero");
        a[r] = a[r].iter().map(|e| e * &inv).collect();
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..m.cols() {
                    if !a[r][j].is_zero() {
                        a[i][j] = &a[i][j] - &(&f * &a[r][j]);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    let out = QMatrix::from_fn(m.rows(), m.cols(), |i, j| a[i][j].clone());
    (out, pivots)
}

/// A basis of the right nullspace, one vector per free column.
pub fn nullspace(m: &QMatrix) -> Vec<Vec<RatFunc>> {
    let (r, pivots) = rref(m);
    (0..m.cols())
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![RatFunc::zero(); m.cols()];
            v[free] = RatFunc::one();
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(k, free);
            }
            v
        })
        .collect()
}

/// `m * v`.
pub fn apply(m: &QMatrix, v: &[RatFunc]) -> Vec<RatFunc> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .zip(v)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .map(|(a, b)| a * b)
                .sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_of_rank_one() {
        let m = QMatrix::new(
            2,
            3,
            [1, 2, 3, 2, 4, 6].iter().map(|&v| RatFunc::from_int(v)).collect(),
        )
        .unwrap();
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(apply(&m, v).iter().all(RatFunc::is_zero));
        }
    }

    #[test]
    fn full_rank_has_trivial_nullspace() {
        assert!(nullspace(&QMatrix::identity(3)).is_empty());
    }
}
