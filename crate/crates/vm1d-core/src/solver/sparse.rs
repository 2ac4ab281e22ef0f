//! Upper-triangle CSR storage for symmetric matrices.
//!
//! Only entries with `row ≤ col` are stored; the symmetric matvec mirrors
//! them, so the operator is symmetric by construction — there is no lower
//! triangle that could drift out of sync.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Debug)]
pub struct SparseSym {
    dim: usize,
    row_ptr: Vec<usize>,
    col: Vec<usize>,
    val: Vec<f64>,
}

impl SparseSym {
    /// Build from upper-triangle triplets (`i ≤ j`); duplicates add.
    pub fn from_upper_triplets(dim: usize, mut triplets: Vec<(usize, usize, f64)>) -> Self {
        debug_assert!(triplets.iter().all(|&(i, j, _)| i <= j && j < dim));
        triplets.sort_unstable_by_key(|&(i, j, _)| (i, j));
        let mut merged: Vec<(usize, usize, f64)> = Vec::with_capacity(triplets.len());
        for (i, j, v) in triplets {
            match merged.last_mut() {
                Some(last) if last.0 == i && last.1 == j => last.2 += v,
                _ => merged.push((i, j, v)),
            }
        }
        let mut row_ptr = vec![0usize; dim + 1];
        for &(i, _, _) in &merged {
            row_ptr[i + 1] += 1;
        }
        for i in 0..dim {
            row_ptr[i + 1] += row_ptr[i];
        }
        let col = merged.iter().map(|&(_, j, _)| j).collect();
        let val = merged.iter().map(|&(_, _, v)| v).collect();
        SparseSym {
            dim,
            row_ptr,
            col,
            val,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz_upper(&self) -> usize {
        self.val.len()
    }

    /// `y = A x` using the stored upper triangle and its mirror.
    pub fn matvec(&self, x: &[f64], y: &mut [f64]) {
        debug_assert_eq!(x.len(), self.dim);
        debug_assert_eq!(y.len(), self.dim);
        y.fill(0.0);
        for i in 0..self.dim {
            let xi = x[i];
            let mut acc = 0.0;
            for idx in self.row_ptr[i]..self.row_ptr[i + 1] {
                let j = self.col[idx];
                let v = self.val[idx];
                acc += v * x[j];
                if j != i {
                    y[j] += v * xi;
                }
            }
            y[i] += acc;
        }
    }

    /// Materialize (small systems only: diagnostics and oracles).
    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let mut dense = vec![vec![0.0; self.dim]; self.dim];
        for i in 0..self.dim {
            for idx in self.row_ptr[i]..self.row_ptr[i + 1] {
                let j = self.col[idx];
                dense[i][j] += self.val[idx];
                if j != i {
                    dense[j][i] += self.val[idx];
                }
            }
        }
        dense
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matvec_matches_dense() {
        //  [2 1 0]
        //  [1 3 4]
        //  [0 4 5]
        let a = SparseSym::from_upper_triplets(
            3,
            vec![(0, 0, 2.0), (0, 1, 1.0), (1, 1, 3.0), (1, 2, 4.0), (2, 2, 5.0)],
        );
        let x = [1.0, -2.0, 0.5];
        let mut y = [0.0; 3];
        a.matvec(&x, &mut y);
        assert_eq!(y, [0.0, -3.0, -5.5]);
        let dense = a.to_dense();
        assert_eq!(dense[0], vec![2.0, 1.0, 0.0]);
        assert_eq!(dense[1], vec![1.0, 3.0, 4.0]);
        assert_eq!(dense[2], vec![0.0, 4.0, 5.0]);
        // symmetry of the materialization is structural
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(dense[i][j], dense[j][i]);
            }
        }
    }

    #[test]
    fn duplicate_triplets_accumulate() {
        let a =
            SparseSym::from_upper_triplets(2, vec![(0, 1, 1.0), (0, 1, 2.0), (0, 0, 1.0), (1, 1, 1.0)]);
        let dense = a.to_dense();
        assert_eq!(dense[0][1], 3.0);
    }
}
