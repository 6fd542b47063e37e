//! Dense univariate polynomials and the characteristic polynomial.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Signed;

use super::{Matrix, MatrixError, Scalar};

/// Coefficient `k` of `coeffs` multiplies `x^k`. The leading coefficient is
/// nonzero except for the zero polynomial, which has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(T::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero past the degree.
    pub fn coefficient(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(T::is_one)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }
}

impl<T: Scalar + Integer> Matrix<T> {
    /// `det(xI - A)` by the Faddeev–LeVerrier recurrence.
    ///
    /// Over the integers every intermediate matrix stays integral and each
    /// division by the step index `k` is exact, so no rationals are needed.
    pub fn char_poly(&self) -> Result<Polynomial<T>, MatrixError> {
        let n = self.order()?;
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        let mut m: Matrix<T> = Matrix::zeros(n, n);
        let mut k_t = T::zero();
        for k in 1..=n {
            k_t = k_t + T::one();
            // M_k = A M_{k-1} + c_{n-k+1} I, with A M_{k-1} carried in `m`.
            for i in 0..n {
                m[(i, i)] = m[(i, i)].clone() + coeffs[n - k + 1].clone();
            }
            m = self.checked_mul(&m)?;
            let (q, r) = m.trace()?.div_rem(&k_t);
            debug_assert!(r.is_zero(), "Faddeev-LeVerrier trace not divisible by step");
            coeffs[n - k] = T::zero() - q;
        }
        Ok(Polynomial::new(coeffs))
    }
}

impl<I> Matrix<Ratio<I>>
where
    I: Scalar + Integer + Signed,
{
    /// Characteristic polynomial of a rational matrix whose entries are all
    /// integers.
    pub fn integer_char_poly(&self) -> Result<Polynomial<I>, MatrixError> {
        self.order()?;
        self.to_integer()?.char_poly()
    }
}

impl<T: Scalar + fmt::Display + Signed> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            if !mag.is_one() || k == 0 {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{BigRat, IntMatrix, IntPolynomial};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn char_poly_examples() {
        let p = IntMatrix::zeros(1, 1).char_poly().unwrap();
        assert_eq!(p, IntPolynomial::new(ints(&[0, 1])));
        let k3 = Matrix::from_vec(3, 3, ints(&[2, -1, -1, -1, 2, -1, -1, -1, 2])).unwrap();
        let p = k3.char_poly().unwrap();
        assert_eq!(p, IntPolynomial::new(ints(&[0, 9, -6, 1])));
        assert_eq!(p.to_string(), "x^3 - 6x^2 + 9x");
        assert_eq!(
            IntMatrix::zeros(0, 0).char_poly().unwrap(),
            IntPolynomial::new(ints(&[1]))
        );
    }

    #[test]
    fn rejects_fractional_entries() {
        let m = Matrix::from_vec(1, 1, vec![BigRat::new(1.into(), 2.into())]).unwrap();
        assert!(matches!(
            m.integer_char_poly(),
            Err(MatrixError::NonIntegerEntry { row: 0, col: 0 })
        ));
        assert!(matches!(
            IntMatrix::zeros(1, 2).char_poly(),
            Err(MatrixError::NotSquare { .. })
        ));
    }

    /// Random Laplacian of a multigraph on `n` vertices.
    fn laplacian(n: usize, weights: &[u8]) -> IntMatrix {
        let mut l = IntMatrix::zeros(n, n);
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                let w = BigInt::from(weights[k % weights.len().max(1)] % 4);
                k += 1;
                l[(i, j)] -= &w;
                l[(j, i)] -= &w;
                l[(i, i)] += &w;
                l[(j, j)] += &w;
            }
        }
        l
    }

    proptest! {
        // Independent route: det(xI - A) evaluated at n + 1 points agrees with
        // the recurrence output, which pins a degree-n polynomial.
        #[test]
        fn matches_pointwise_determinants(n in 0usize..7, v in prop::collection::vec(-4i64..=4, 49)) {
            let a = Matrix::from_fn(n, n, |i, j| BigInt::from(v[i * 7 + j]));
            let p = a.char_poly().unwrap();
            prop_assert!(p.is_monic());
            prop_assert_eq!(p.degree(), Some(n));
            for x in 0..=n as i64 {
                let x = BigInt::from(x);
                let shifted = IntMatrix::identity(n).scale(&x).checked_sub(&a).unwrap();
                prop_assert_eq!(p.eval(&x), shifted.det_bareiss().unwrap());
            }
        }

        #[test]
        fn constant_term_is_signed_det(n in 0usize..7, v in prop::collection::vec(-4i64..=4, 49)) {
            let a = Matrix::from_fn(n, n, |i, j| BigInt::from(v[i * 7 + j]));
            let sign = if n % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
            prop_assert_eq!(a.char_poly().unwrap().eval(&BigInt::from(0)), sign * a.det_bareiss().unwrap());
        }

        #[test]
        fn laplacian_constant_term_vanishes(n in 1usize..8, w in prop::collection::vec(any::<u8>(), 28)) {
            let p = laplacian(n, &w).char_poly().unwrap();
            prop_assert_eq!(p.coefficient(0), BigInt::from(0));
        }
    }
}
