//! Closed-form spanning-tree counts.
//!
//! The classical special cases (Cayley, Fiedler–Sedláček, the multipartite
//! total, Moon, two-part forests) are evaluated directly. The general count for a
//! forest `F` in `K_{n_1,…,n_s}` goes through the `s × s` matrix
//!
//! ```text
//! Z(x)_{ij} = δ_ij + Σ_p n_{jp}(m_p − n_{ip}) / (x − α_p)
//! ```
//!
//! which is singular of rank `s − 1` at `x = 0`, with
//! `adj Z(0) = γ (n·e − b) bᵀ` for `b = (n_1, …, n_s)`. The count is then
//! `τ_F = γ · Π α_p` where `γ = C_ij / (n_i (n − n_j))` for any cofactor
//! `C_ij` of `Z(0)`.

use std::fmt;

use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::model::{ComponentProfile, Partition};
use crate::{BigInt, BigNat, BigRat, Error, RatMatrix, Result};

/// Which computation produced a count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Main,
    MatrixTree,
    CharPolyDerivative,
    TraceForm,
    BruteForceOriginal,
    BruteForceContracted,
    ClosedFormSpecialCase,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Main => "main",
            Method::MatrixTree => "matrix-tree",
            Method::CharPolyDerivative => "charpoly",
            Method::TraceForm => "trace",
            Method::BruteForceOriginal => "brute-original",
            Method::BruteForceContracted => "brute-contracted",
            Method::ClosedFormSpecialCase => "closed-form",
        })
    }
}

/// Method-specific intermediate values kept alongside a count.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Witness {
    /// Zero-based cofactor position used in the main formula.
    pub cofactor_index: Option<(usize, usize)>,
    pub gamma: Option<BigRat>,
    /// `tr(−adj Z(0) · Z′(0))`.
    pub trace: Option<BigRat>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountResult {
    pub value: BigNat,
    pub method: Method,
    pub witness: Option<Witness>,
}

impl CountResult {
    pub fn plain(method: Method, value: BigNat) -> Self {
        Self {
            method,
            value,
            witness: None,
        }
    }
}

fn to_count(what: &'static str, value: &BigRat) -> Result<BigNat> {
    if !value.is_integer() {
        return Err(Error::NonIntegerResult {
            what,
            value: value.to_string(),
        });
    }
    if !value.is_positive() {
        return Err(Error::NonPositiveResult {
            what,
            value: value.to_string(),
        });
    }
    Ok(value.to_integer().to_biguint().expect("positive"))
}

fn rat(v: u64) -> BigRat {
    BigRat::from_integer(v.into())
}

fn int_pow(base: u64, exp: i64) -> BigRat {
    Pow::pow(rat(base), exp as i32)
}

/// `τ(K_n) = n^{n−2}`; one tree on a single vertex.
pub fn cayley(n: u64) -> Result<BigNat> {
    if n == 0 {
        return Err(Error::InvalidArgument("K_0 has no vertices".into()));
    }
    to_count("Cayley count", &int_pow(n, n as i64 - 2))
}

/// `τ(K_{n1,n2}) = n1^{n2−1} · n2^{n1−1}`.
pub fn fiedler_sedlacek(n1: u64, n2: u64) -> Result<BigNat> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::InvalidArgument("bipartite sides must be nonempty".into()));
    }
    Ok(BigNat::from(n1).pow(n2 - 1) * BigNat::from(n2).pow(n1 - 1))
}

/// `τ(K_{n_1,…,n_s}) = n^{s−2} Π_i (n − n_i)^{n_i − 1}`.
pub fn multipartite_total(partition: &Partition) -> BigNat {
    let n = partition.order();
    let s = partition.num_parts();
    partition.parts().iter().fold(BigNat::from(n).pow(s - 2), |acc, &k| {
        acc * BigNat::from(n - k).pow(k - 1)
    })
}

/// Moon's formula `τ_F(K_n) = n^{c−2} Π_p m_p` for a forest with component
/// orders `sizes`.
pub fn moon(n: u64, sizes: &[u64]) -> Result<BigNat> {
    if n == 0 || sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::InvalidArgument("component sizes must be positive".into()));
    }
    if sizes.iter().sum::<u64>() != n {
        return Err(Error::InvalidArgument(format!(
            "component sizes sum to {}, expected {n}",
            sizes.iter().sum::<u64>()
        )));
    }
    let value = sizes
        .iter()
        .fold(int_pow(n, sizes.len() as i64 - 2), |acc, &m| acc * rat(m));
    to_count("Moon count", &value)
}

/// Closed form for a forest in `K_{n1,n2}`:
///
/// `(1 / n1 n2) Π_p (n_{1p} n2 + n_{2p} n1) · (1 − Σ_p n_{1p} n_{2p} / (n_{1p} n2 + n_{2p} n1))`.
pub fn bipartite_forest(profile: &ComponentProfile) -> Result<BigNat> {
    let parts = profile.partition().parts();
    if parts.len() != 2 {
        return Err(Error::InvalidArgument(format!(
            "two-part closed form needs exactly 2 parts, got {}",
            parts.len()
        )));
    }
    let (n1, n2) = (parts[0] as u64, parts[1] as u64);
    let mut product = BigRat::one();
    let mut correction = BigRat::one();
    for p in 0..profile.num_components() {
        let (a, b) = (profile.count(0, p), profile.count(1, p));
        let weight = a * n2 + b * n1;
        product *= rat(weight);
        correction -= BigRat::new((a * b).into(), weight.into());
    }
    let value = product * correction / rat(n1 * n2);
    to_count("two-part count", &value)
}

/// `Z(0)`, its entrywise derivative `Z′(0)` and `Π α_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZMatrices {
    pub z0: RatMatrix,
    pub z0_prime: RatMatrix,
    pub alpha_product: BigNat,
}

/// `Σ_p n_{jp}(m_p − n_{ip}) / denom(p)` for every `(i, j)`.
fn weighted_sum_matrix(profile: &ComponentProfile, denom: impl Fn(usize) -> BigRat) -> RatMatrix {
    let s = profile.partition().num_parts();
    let m = profile.sizes();
    let inv: Vec<BigRat> = (0..profile.num_components()).map(|p| denom(p).recip()).collect();
    RatMatrix::from_fn(s, s, |i, j| {
        inv.iter().enumerate().fold(BigRat::zero(), |acc, (p, d)| {
            let num = profile.count(j, p) * (m[p] - profile.count(i, p));
            if num == 0 {
                acc
            } else {
                acc + rat(num) * d
            }
        })
    })
}

/// `Z(0)` and `Z′(0)` without any checks on them.
pub fn assemble_z(profile: &ComponentProfile) -> ZMatrices {
    let s = profile.partition().num_parts();
    let alpha = profile.alpha();
    let sum = weighted_sum_matrix(profile, |p| rat(alpha[p]));
    let z0 = RatMatrix::identity(s).checked_sub(&sum).expect("s × s");
    let z0_prime = weighted_sum_matrix(profile, |p| rat(alpha[p] * alpha[p])).scale(&-BigRat::one());
    let alpha_product = alpha.iter().map(|&a| BigNat::from(a)).product();
    ZMatrices {
        z0,
        z0_prime,
        alpha_product,
    }
}

/// Builds `Z(0)` and `Z′(0)`, checking that `Z(0)` is singular of rank `s − 1`.
pub fn build_z(profile: &ComponentProfile) -> Result<ZMatrices> {
    let s = profile.partition().num_parts();
    let z = assemble_z(profile);
    if !z.z0.det()?.is_zero() {
        return Err(Error::InvariantViolation("det Z(0) is nonzero".into()));
    }
    let rank = z.z0.rank();
    if rank + 1 != s {
        return Err(Error::InvariantViolation(format!(
            "rank Z(0) = {rank}, expected {}",
            s - 1
        )));
    }
    Ok(z)
}

/// `Z(x)` at a rational point `x` distinct from every `α_p`.
pub fn z_at(profile: &ComponentProfile, x: &BigRat) -> Result<RatMatrix> {
    let alpha = profile.alpha();
    if alpha.iter().any(|&a| rat(a) == *x) {
        return Err(Error::InvalidArgument(format!("Z(x) has a pole at x = {x}")));
    }
    let s = profile.partition().num_parts();
    let sum = weighted_sum_matrix(profile, |p| x - rat(alpha[p]));
    Ok(RatMatrix::identity(s).checked_add(&sum)?)
}

/// `Π_p (x − α_p) · det Z(x)`, which equals the characteristic polynomial of
/// the contracted Laplacian at `x`.
pub fn factored_char_poly_at(profile: &ComponentProfile, x: &BigRat) -> Result<BigRat> {
    let det = z_at(profile, x)?.det()?;
    Ok(profile.alpha().iter().fold(det, |acc, &a| acc * (x - rat(a))))
}

/// `C_ij / (n_i (n − n_j))` with `(i, j)` zero-based.
pub fn gamma_from_cofactor(z: &ZMatrices, partition: &Partition, i: usize, j: usize) -> Result<BigRat> {
    let n = partition.order() as u64;
    let parts = partition.parts();
    if i >= parts.len() || j >= parts.len() {
        return Err(Error::InvalidArgument(format!(
            "cofactor index ({}, {}) outside 1..={}",
            i + 1,
            j + 1,
            parts.len()
        )));
    }
    let cofactor = z.z0.cofactor(i, j)?;
    Ok(cofactor / rat(parts[i] as u64 * (n - parts[j] as u64)))
}

/// `γ` from the `(1, 1)` cofactor. With `check_all_pairs`, every one of the
/// `s²` cofactor choices is computed and required to agree.
pub fn gamma(z: &ZMatrices, partition: &Partition, check_all_pairs: bool) -> Result<BigRat> {
    let g = gamma_from_cofactor(z, partition, 0, 0)?;
    if !g.is_positive() {
        return Err(Error::NonPositiveResult {
            what: "gamma",
            value: g.to_string(),
        });
    }
    if check_all_pairs {
        let s = partition.num_parts();
        for i in 0..s {
            for j in 0..s {
                let other = gamma_from_cofactor(z, partition, i, j)?;
                if other != g {
                    return Err(Error::InvariantViolation(format!(
                        "gamma from cofactor ({}, {}) is {other}, from (1, 1) it is {g}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
    }
    Ok(g)
}

/// `τ_F = C_ij / (n_i (n − n_j)) · Π_p α_p`, default `(i, j) = (0, 0)`.
pub fn main_count(profile: &ComponentProfile, choice: Option<(usize, usize)>) -> Result<CountResult> {
    let z = build_z(profile)?;
    let (i, j) = choice.unwrap_or((0, 0));
    let g = gamma_from_cofactor(&z, profile.partition(), i, j)?;
    let value = &g * BigRat::from_integer(BigInt::from(z.alpha_product.clone()));
    Ok(CountResult {
        value: to_count("main-formula count", &value)?,
        method: Method::Main,
        witness: Some(Witness {
            cofactor_index: Some((i, j)),
            gamma: Some(g),
            trace: None,
        }),
    })
}

/// `τ_F = (1/c) · Π α_p · tr(−adj Z(0) · Z′(0))`, with the adjugate and trace
/// formed explicitly. The trace is also required to equal `c·γ`.
pub fn trace_form_count(profile: &ComponentProfile) -> Result<CountResult> {
    let z = build_z(profile)?;
    let c = profile.num_components() as u64;
    let trace = -(&z.z0.adjugate()? * &z.z0_prime).trace()?;
    let g = gamma(&z, profile.partition(), false)?;
    if trace != &g * rat(c) {
        return Err(Error::InvariantViolation(format!(
            "trace {trace} differs from c*gamma = {}",
            &g * rat(c)
        )));
    }
    let value = &trace * BigRat::from_integer(BigInt::from(z.alpha_product.clone())) / rat(c);
    Ok(CountResult {
        value: to_count("trace-form count", &value)?,
        method: Method::TraceForm,
        witness: Some(Witness {
            cofactor_index: None,
            gamma: Some(g),
            trace: Some(trace),
        }),
    })
}
