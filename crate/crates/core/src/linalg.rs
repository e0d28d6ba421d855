//! Dense rational linear algebra: row reduction, kernels, and the
//! `LinearSubspace` type used by the descent tower and isotypic bases.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

/// Reduce `rows` to reduced row-echelon form in place, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub fn rref(rows: &mut Vec<Vec<Q>>) -> Vec<usize> {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(pivot_row) = (row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(row, pivot_row);
        let inv = rows[row][col].recip();
        for c in col..ncols {
            let v = &rows[row][c] * &inv;
            rows[row][c] = v;
        }
        for r in 0..rows.len() {
            if r != row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    let v = &rows[r][c] - &factor * &rows[row][c];
                    rows[r][c] = v;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows.len() {
            break;
        }
    }
    rows.truncate(row);
    pivots
}

pub fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    rref(&mut rows);
    rows.len()
}

/// Basis of the right kernel `{ x : M x = 0 }` of a matrix given by rows.
/// Result rows are the kernel basis vectors (one per free column), in
/// increasing free-column order, normalized with a 1 in the free slot.
pub fn nullspace(mut rows: Vec<Vec<Q>>, ncols: usize) -> Vec<Vec<Q>> {
    let pivots = rref(&mut rows);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![Q::zero(); ncols];
        v[free] = Q::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -rows[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Invert a square matrix; `None` if singular.
pub fn invert(matrix: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = matrix.len();
    let mut aug: Vec<Vec<Q>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "invert expects a square matrix");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// A finite-dimensional rational subspace of Q^n, stored as a reduced
/// row-echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSubspace {
    ambient_dim: usize,
    basis: Vec<Vec<Q>>,
}

impl LinearSubspace {
    pub fn zero(ambient_dim: usize) -> Self {
        LinearSubspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![Q::zero(); ambient_dim];
                v[i] = Q::one();
                v
            })
            .collect();
        LinearSubspace { ambient_dim, basis }
    }

    pub fn from_spanning(ambient_dim: usize, rows: Vec<Vec<Q>>) -> Result<Self> {
        for r in &rows {
            if r.len() != ambient_dim {
                return Err(Error::DimensionMismatch(format!(
                    "row length {} vs ambient {}",
                    r.len(),
                    ambient_dim
                )));
            }
        }
        let mut rows = rows;
        rref(&mut rows);
        Ok(LinearSubspace {
            ambient_dim,
            basis: rows,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rank(rows) == self.dim()
    }

    pub fn is_subspace_of(&self, other: &LinearSubspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|v| other.contains(v))
    }

    /// Intersection, computed from the kernel of the stacked coefficient
    /// system `x*A - y*B = 0`.
    pub fn intersect(&self, other: &LinearSubspace) -> Result<LinearSubspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "ambient {} vs {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        let ra = self.dim();
        let rb = other.dim();
        if ra == 0 || rb == 0 {
            return Ok(LinearSubspace::zero(self.ambient_dim));
        }
        // rows indexed by ambient coordinates, columns by (x, y) unknowns
        let mut rows = Vec::with_capacity(self.ambient_dim);
        for coord in 0..self.ambient_dim {
            let mut row = Vec::with_capacity(ra + rb);
            for a in &self.basis {
                row.push(a[coord].clone());
            }
            for b in &other.basis {
                row.push(-b[coord].clone());
            }
            rows.push(row);
        }
        let kernel = nullspace(rows, ra + rb);
        let mut span = Vec::new();
        for k in kernel {
            let mut v = vec![Q::zero(); self.ambient_dim];
            for (i, a) in self.basis.iter().enumerate() {
                for c in 0..self.ambient_dim {
                    let t = &v[c] + &k[i] * &a[c];
                    v[c] = t;
                }
            }
            span.push(v);
        }
        LinearSubspace::from_spanning(self.ambient_dim, span)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn vq(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&n| q(n)).collect()
    }

    #[test]
    fn coordinate_subspace_intersection() {
        let a = LinearSubspace::from_spanning(3, vec![vq(&[1, 0, 0]), vq(&[0, 1, 0])]).unwrap();
        let b = LinearSubspace::from_spanning(3, vec![vq(&[0, 1, 0]), vq(&[0, 0, 1])]).unwrap();
        let c = a.intersect(&b).unwrap();
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&vq(&[0, 1, 0])));
    }

    #[test]
    fn intersection_idempotent() {
        let a = LinearSubspace::from_spanning(3, vec![vq(&[1, 2, 3]), vq(&[0, 1, 1])]).unwrap();
        assert_eq!(a.intersect(&a).unwrap(), a);
    }

    #[test]
    fn skew_lines_meet_in_zero() {
        let a = LinearSubspace::from_spanning(2, vec![vq(&[1, 1])]).unwrap();
        let b = LinearSubspace::from_spanning(2, vec![vq(&[1, -1])]).unwrap();
        assert_eq!(a.intersect(&b).unwrap().dim(), 0);
    }

    #[test]
    fn nullspace_solves() {
        // x + y + z = 0 has a 2-dimensional kernel
        let rows = vec![vq(&[1, 1, 1])];
        let ker = nullspace(rows, 3);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            let s = v.iter().fold(Q::zero(), |acc, x| acc + x);
            assert!(s.is_zero());
        }
    }

    #[test]
    fn invert_works() {
        let m = vec![vq(&[2, 1]), vq(&[1, 1])];
        let inv = invert(&m).unwrap();
        assert_eq!(inv[0], vq(&[1, -1]));
        assert_eq!(inv[1], vq(&[-1, 2]));
        assert!(invert(&[vq(&[1, 2]), vq(&[2, 4])]).is_none());
    }
}
