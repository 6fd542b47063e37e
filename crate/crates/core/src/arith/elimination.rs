//! Gaussian elimination over a field: determinant, rank, inverse, kernels,
//! cofactors and the adjugate.
//!
//! Pivots are the first nonzero entry in column order. Over exact fields this
//! is all that is needed; over floats the zero test is literal.

use super::{Field, Matrix, MatrixError};

/// Result of forward elimination.
struct Echelon<T> {
    m: Matrix<T>,
    pivot_cols: Vec<usize>,
    swaps: usize,
}

impl<T: Field> Matrix<T> {
    fn echelon(&self, reduced: bool) -> Echelon<T> {
        let mut m = self.clone();
        let (rows, cols) = (m.rows(), m.cols());
        let mut pivot_cols = Vec::new();
        let mut swaps = 0;
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                m.swap_rows(p, r);
                swaps += 1;
            }
            if reduced {
                let inv = T::one() / m[(r, c)].clone();
                for j in c..cols {
                    m[(r, j)] = m[(r, j)].clone() * inv.clone();
                }
            }
            let targets: Vec<usize> = if reduced {
                (0..rows).filter(|&i| i != r).collect()
            } else {
                (r + 1..rows).collect()
            };
            for i in targets {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone() / m[(r, c)].clone();
                for j in c..cols {
                    let v = m[(r, j)].clone() * factor.clone();
                    m[(i, j)] = m[(i, j)].clone() - v;
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
        Echelon { m, pivot_cols, swaps }
    }

    /// Exact determinant. The determinant of the `0 × 0` matrix is one.
    pub fn det(&self) -> Result<T, MatrixError> {
        let n = self.order()?;
        let e = self.echelon(false);
        if e.pivot_cols.len() < n {
            return Ok(T::zero());
        }
        let prod = (0..n).fold(T::one(), |acc, i| acc * e.m[(i, i)].clone());
        Ok(if e.swaps % 2 == 1 { -prod } else { prod })
    }

    pub fn rank(&self) -> usize {
        self.echelon(false).pivot_cols.len()
    }

    /// Returns `None` for a singular matrix.
    pub fn inverse(&self) -> Result<Option<Self>, MatrixError> {
        let n = self.order()?;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                T::one()
            } else {
                T::zero()
            }
        });
        let e = aug.echelon(true);
        if e.pivot_cols.iter().any(|&c| c >= n) {
            return Ok(None);
        }
        Ok(Some(Self::from_fn(n, n, |i, j| e.m[(i, j + n)].clone())))
    }

    /// A basis of `{x : self · x = 0}`, one vector per free column.
    pub fn right_kernel(&self) -> Vec<Vec<T>> {
        let e = self.echelon(true);
        let cols = self.cols();
        let mut is_pivot = vec![false; cols];
        for &c in &e.pivot_cols {
            is_pivot[c] = true;
        }
        (0..cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![T::zero(); cols];
                v[f] = T::one();
                for (r, &pc) in e.pivot_cols.iter().enumerate() {
                    v[pc] = -e.m[(r, f)].clone();
                }
                v
            })
            .collect()
    }

    /// A basis of `{y : yᵀ · self = 0}`.
    pub fn left_kernel(&self) -> Vec<Vec<T>> {
        self.transpose().right_kernel()
    }

    /// `(-1)^{i+j}` times the determinant of the minor deleting row `i` and
    /// column `j` (zero-based).
    pub fn cofactor(&self, i: usize, j: usize) -> Result<T, MatrixError> {
        self.order()?;
        let d = self.minor(i, j)?.det()?;
        Ok(if (i + j) % 2 == 1 { -d } else { d })
    }

    /// The adjugate, entry `(i, j)` being the cofactor at `(j, i)`.
    ///
    /// Computed from the rank: `det · A⁻¹` when invertible, the zero matrix
    /// when the rank is below `n - 1`, and `λ x yᵀ` from the right and left
    /// kernel vectors when the rank is exactly `n - 1`, with `λ` fixed by a
    /// single cofactor.
    pub fn adjugate(&self) -> Result<Self, MatrixError> {
        let n = self.order()?;
        if n <= 1 {
            return Ok(Self::identity(n));
        }
        let rank = self.rank();
        if rank == n {
            let det = self.det()?;
            let inv = self.inverse()?.expect("full-rank matrix is invertible");
            return Ok(inv.scale(&det));
        }
        if rank < n - 1 {
            return Ok(Self::zeros(n, n));
        }
        let x = self.right_kernel().swap_remove(0);
        let y = self.left_kernel().swap_remove(0);
        let i = x.iter().position(|v| !v.is_zero()).expect("kernel vector is nonzero");
        let j = y.iter().position(|v| !v.is_zero()).expect("kernel vector is nonzero");
        let lambda = self.cofactor(j, i)? / (x[i].clone() * y[j].clone());
        Ok(Self::outer(&x, &y).scale(&lambda))
    }

    /// The adjugate straight from its definition, one minor determinant per
    /// entry. Quadratically many determinants; meant for small matrices and
    /// as a cross-check of [`Matrix::adjugate`].
    pub fn adjugate_by_cofactors(&self) -> Result<Self, MatrixError> {
        let n = self.order()?;
        if n <= 1 {
            return Ok(Self::identity(n));
        }
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self.cofactor(i, j)?;
            }
        }
        Ok(out)
    }
}
