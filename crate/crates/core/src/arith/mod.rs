//! Exact linear algebra over a generic scalar.
//!
//! [`Matrix`] works over any [`Scalar`]. Determinant, rank, inverse, kernels
//! and the adjugate use Gaussian elimination and need a [`Field`] (the
//! rationals in practice; `f32`/`f64` also qualify). Integral domains get
//! fraction-free Bareiss elimination and an exact Faddeev–LeVerrier
//! characteristic polynomial.

mod bareiss;
mod elimination;
mod matrix;
mod poly;

use std::fmt::Debug;
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};
use thiserror::Error;

pub use matrix::Matrix;
pub use poly::Polynomial;

/// Anything a matrix can hold.
pub trait Scalar: Clone + PartialEq + Debug + Num + Neg<Output = Self> {}

impl<T> Scalar for T where T: Clone + PartialEq + Debug + Num + Neg<Output = T> {}

/// Scalars whose division is a true inverse of multiplication.
pub trait Field: Scalar {}

impl Field for f32 {}
impl Field for f64 {}
impl<I> Field for Ratio<I> where I: Clone + Debug + Integer + Signed {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("index ({row}, {col}) out of range for a {rows}x{cols} matrix")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("{rows}x{cols} matrix cannot hold {len} entries")]
    ShapeMismatch { rows: usize, cols: usize, len: usize },
    #[error("ragged rows: expected length {expected}, found {found}")]
    RaggedRows { expected: usize, found: usize },
    #[error("entry ({row}, {col}) is not an integer")]
    NonIntegerEntry { row: usize, col: usize },
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{BigRat, IntMatrix, RatMatrix};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn int_matrix(rows: usize, cols: usize, v: &[i64]) -> RatMatrix {
        Matrix::from_fn(rows, cols, |i, j| BigRat::from(BigInt::from(v[i * cols + j])))
    }

    proptest! {
        // det(A + UV) = det(A) det(I_s + V A⁻¹ U)
        #[test]
        fn generalized_determinant_lemma(
            n in 1usize..=6, s in 1usize..=3,
            a in prop::collection::vec(-3i64..=3, 36),
            u in prop::collection::vec(-3i64..=3, 18),
            v in prop::collection::vec(-3i64..=3, 18),
        ) {
            let a = int_matrix(n, n, &a);
            let Some(a_inv) = a.inverse().unwrap() else { return Ok(()); };
            let u = int_matrix(n, s, &u);
            let v = int_matrix(s, n, &v);
            let lhs = a.checked_add(&(&u * &v)).unwrap().det().unwrap();
            let small = RatMatrix::identity(s).checked_add(&(&(&v * &a_inv) * &u)).unwrap();
            prop_assert_eq!(lhs, a.det().unwrap() * small.det().unwrap());
        }

        // d/dx det(xI - L) at x = 0 is tr(adj(-L)).
        #[test]
        fn jacobi_linear_coefficient(n in 1usize..=7, w in prop::collection::vec(0i64..=3, 21)) {
            let mut l = IntMatrix::zeros(n, n);
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    let x = BigInt::from(w[k]);
                    k += 1;
                    l[(i, j)] -= &x;
                    l[(j, i)] -= &x;
                    l[(i, i)] += &x;
                    l[(j, j)] += &x;
                }
            }
            let a1 = l.char_poly().unwrap().coefficient(1);
            let neg = l.to_rational().scale(&BigRat::from(BigInt::from(-1)));
            prop_assert_eq!(BigRat::from(a1), neg.adjugate().unwrap().trace().unwrap());
        }
    }
}
