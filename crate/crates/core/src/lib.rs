//! Exact counts of spanning trees of complete multipartite graphs that contain
//! a prescribed spanning forest.
//!
//! The central computation ([`closed_forms::main_count`]) reduces the count to
//! one cofactor of an `s × s` rational matrix built from how the forest's
//! components meet the parts, regardless of how many components there are.
//! The [`oracles`] module computes the same numbers along independent routes
//! (Matrix-Tree cofactor, characteristic polynomial, enumeration) and
//! [`harness`] drives instance files, cross-verification and fuzzing.
//!
//! Linear algebra in [`arith`] is generic over the scalar; the aliases below
//! fix the exact types used throughout.

pub mod arith;
pub mod closed_forms;
pub mod error;
pub mod harness;
pub mod model;
pub mod oracles;

#[cfg(test)]
mod testing;

pub use error::{Error, Result};

/// Arbitrary-precision nonnegative integer.
pub type BigNat = num_bigint::BigUint;
/// Arbitrary-precision signed integer.
pub type BigInt = num_bigint::BigInt;
/// Reduced fraction of big integers with positive denominator.
pub type BigRat = num_rational::BigRational;
/// Dense matrix of exact rationals.
pub type RatMatrix = arith::Matrix<BigRat>;
/// Dense matrix of big integers.
pub type IntMatrix = arith::Matrix<BigInt>;
/// Integer polynomial, coefficient `k` multiplying `x^k`.
pub type IntPolynomial = arith::Polynomial<BigInt>;
