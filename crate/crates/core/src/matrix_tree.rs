//! Spanning-tree counts via the matrix-tree theorem.
//!
//! The reduced Laplacian (sink row and column removed) is reduced with
//! Bareiss fraction-free elimination, so every intermediate value is an
//! exact integer. All arithmetic is checked.

use crate::error::{Error, Result};
use crate::ferrers::FerrersGraph;

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn bareiss_determinant(mut m: Vec<Vec<i128>>) -> Result<i128> {
    let n = m.len();
    if n == 0 {
        return Ok(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j]
                    .checked_mul(m[k][k])
                    .ok_or(Error::Overflow("eliminating"))?;
                let b = m[i][k]
                    .checked_mul(m[k][j])
                    .ok_or(Error::Overflow("eliminating"))?;
                let num = a.checked_sub(b).ok_or(Error::Overflow("eliminating"))?;
                // exact by Sylvester's identity
                m[i][j] = num / prev;
            }
        }
        prev = m[k][k];
    }
    sign.checked_mul(m[n - 1][n - 1])
        .ok_or(Error::Overflow("taking the determinant"))
}

impl FerrersGraph {
    /// Reduced Laplacian, rows and columns indexed by vertices `1..=n`.
    pub fn reduced_laplacian(&self) -> Vec<Vec<i128>> {
        let n = self.n();
        let mut m = vec![vec![0i128; n]; n];
        for v in 1..=n {
            m[v - 1][v - 1] = self.degree(v) as i128;
            for &u in self.neighbors(v) {
                if u != 0 {
                    m[v - 1][u - 1] -= 1;
                }
            }
        }
        m
    }

    /// Number of spanning trees, which equals the number of recurrent configurations.
    pub fn spanning_tree_count(&self) -> Result<u128> {
        let d = bareiss_determinant(self.reduced_laplacian())?;
        u128::try_from(d).map_err(|_| Error::Overflow("negative determinant"))
    }
}
