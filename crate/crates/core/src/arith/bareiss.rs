//! Fraction-free (Bareiss) elimination over an integral domain.
//!
//! Every division performed here is exact: after step `k` each entry of the
//! working matrix is a `(k+1) × (k+1)` minor of the input.

use num_integer::Integer;

use super::{Matrix, MatrixError, Scalar};

impl<T: Scalar + Integer> Matrix<T> {
    /// Exact determinant by fraction-free elimination.
    pub fn det_bareiss(&self) -> Result<T, MatrixError> {
        let n = self.order()?;
        if n == 0 {
            return Ok(T::one());
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return Ok(T::zero());
                };
                m.swap_rows(p, k);
                negate = !negate;
            }
            let pivot = m[(k, k)].clone();
            for i in k + 1..n {
                let lead = m[(i, k)].clone();
                for j in k + 1..n {
                    let num = m[(i, j)].clone() * pivot.clone() - lead.clone() * m[(k, j)].clone();
                    m[(i, j)] = exact_div(num, &prev);
                }
                m[(i, k)] = T::zero();
            }
            prev = pivot;
        }
        let d = m[(n - 1, n - 1)].clone();
        Ok(if negate { T::zero() - d } else { d })
    }

    /// Rank by fraction-free row echelon reduction.
    pub fn rank_bareiss(&self) -> usize {
        let (rows, cols) = (self.rows(), self.cols());
        let mut m = self.clone();
        let mut prev = T::one();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let pivot = m[(r, c)].clone();
            for i in r + 1..rows {
                let lead = m[(i, c)].clone();
                for j in c + 1..cols {
                    let num = m[(i, j)].clone() * pivot.clone() - lead.clone() * m[(r, j)].clone();
                    m[(i, j)] = exact_div(num, &prev);
                }
                m[(i, c)] = T::zero();
            }
            prev = pivot;
            r += 1;
        }
        r
    }

    /// Cofactor at `(i, j)` (zero-based) via a fraction-free minor determinant.
    pub fn cofactor_bareiss(&self, i: usize, j: usize) -> Result<T, MatrixError> {
        self.order()?;
        let d = self.minor(i, j)?.det_bareiss()?;
        Ok(if (i + j) % 2 == 1 { T::zero() - d } else { d })
    }
}

fn exact_div<T: Scalar + Integer>(num: T, den: &T) -> T {
    let (q, r) = num.div_rem(den);
    debug_assert!(r.is_zero(), "inexact Bareiss division");
    q
}

#[cfg(test)]
mod tests {
    use crate::arith::Matrix;
    use crate::{BigRat, IntMatrix};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn int(rows: &[&[i64]]) -> IntMatrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn bareiss_examples() {
        assert_eq!(IntMatrix::identity(0).det_bareiss().unwrap(), BigInt::from(1));
        assert_eq!(int(&[&[0, 1], &[1, 0]]).det_bareiss().unwrap(), BigInt::from(-1));
        assert_eq!(
            int(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]).det_bareiss().unwrap(),
            BigInt::from(0)
        );
        assert_eq!(int(&[&[2, -1], &[-1, 2]]).det_bareiss().unwrap(), BigInt::from(3));
        assert_eq!(
            int(&[&[0, 0, 1], &[0, 2, 0], &[3, 0, 0]]).det_bareiss().unwrap(),
            BigInt::from(-6)
        );
        assert_eq!(int(&[&[1, 2, 3], &[2, 4, 6], &[0, 0, 1]]).rank_bareiss(), 2);
        assert_eq!(int(&[&[0, 0], &[0, 0]]).rank_bareiss(), 0);
        assert_eq!(
            int(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]])
                .cofactor_bareiss(0, 1)
                .unwrap(),
            BigInt::from(3)
        );
    }

    #[test]
    fn machine_integers_work() {
        let m = Matrix::from_rows(vec![vec![4i64, 3], vec![6, 3]]).unwrap();
        assert_eq!(m.det_bareiss().unwrap(), -6);
    }

    fn square(max_n: usize) -> impl Strategy<Value = IntMatrix> {
        (0..=max_n).prop_flat_map(|n| {
            prop::collection::vec(-3i64..=3, n * n)
                .prop_map(move |v| Matrix::from_vec(n, n, v.into_iter().map(BigInt::from).collect()).unwrap())
        })
    }

    /// Rank-deficient matrices are rare among uniform samples; build some.
    fn low_rank(max_n: usize) -> impl Strategy<Value = IntMatrix> {
        (1..=max_n).prop_flat_map(|n| {
            (
                prop::collection::vec(-2i64..=2, n * 2),
                prop::collection::vec(-2i64..=2, 2 * n),
            )
                .prop_map(move |(a, b)| {
                    let a = Matrix::from_vec(n, 2, a.into_iter().map(BigInt::from).collect()).unwrap();
                    let b = Matrix::from_vec(2, n, b.into_iter().map(BigInt::from).collect()).unwrap();
                    &a * &b
                })
        })
    }

    proptest! {
        // Bareiss determinant against rational Gaussian elimination.
        #[test]
        fn bareiss_det_matches_gauss(m in square(6)) {
            prop_assert_eq!(BigRat::from(m.det_bareiss().unwrap()), m.to_rational().det().unwrap());
        }

        // rank(m) < n  <=>  det(m) = 0, across the two elimination paths.
        #[test]
        fn rank_deficiency_iff_singular(m in prop_oneof![square(8), low_rank(8)]) {
            let n = m.rows();
            let singular = m.to_rational().det().unwrap() == BigRat::from(BigInt::from(0));
            prop_assert_eq!(m.rank_bareiss() < n, singular);
            prop_assert_eq!(m.rank_bareiss(), m.to_rational().rank());
        }
    }
}
