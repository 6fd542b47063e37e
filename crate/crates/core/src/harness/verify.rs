//! Cross-method agreement plus every structural identity on one instance.

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::count::special_case_count;
use super::Instance;
use crate::closed_forms::{
    assemble_z, factored_char_poly_at, gamma_from_cofactor, main_count, trace_form_count, CountResult, Method,
};
use crate::model::{direct_multiplicities, multiplicity_formula, ComponentProfile, ContractedGraph};
use crate::oracles::{self, MAX_CONTRACTED_ORDER, MAX_ORIGINAL_ORDER};
use crate::{BigInt, BigNat, BigRat, RatMatrix, Result};

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Run the enumerators only up to this graph order.
    pub brute_threshold: usize,
    /// Check all `s²` cofactor choices of the main formula.
    pub check_all_ij: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            brute_threshold: MAX_ORIGINAL_ORDER,
            check_all_ij: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantCheck {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MethodValue {
    pub method: Method,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Divergence {
    pub first: MethodValue,
    pub second: MethodValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub results: Vec<MethodValue>,
    pub agreement: bool,
    pub first_divergence: Option<Divergence>,
    pub invariants: Vec<InvariantCheck>,
    pub gamma: Option<String>,
    pub z0_rank: usize,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.agreement && self.invariants.iter().all(|c| c.passed)
    }

    /// 0 when every method agrees and every identity holds, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    /// The agreed count, if all methods agree.
    pub fn value(&self) -> Option<&str> {
        if self.agreement {
            self.results.first().map(|r| r.value.as_str())
        } else {
            None
        }
    }

    pub fn first_failure(&self) -> Option<String> {
        if let Some(d) = &self.first_divergence {
            return Some(format!(
                "{} = {} but {} = {}",
                d.first.method, d.first.value, d.second.method, d.second.value
            ));
        }
        self.invariants.iter().find(|c| !c.passed).map(|c| match &c.detail {
            Some(d) => format!("{}: {d}", c.name),
            None => c.name.clone(),
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            out += &format!("{:<17} {}\n", r.method.to_string(), r.value);
        }
        if let Some(g) = &self.gamma {
            out += &format!("gamma             {g}\n");
        }
        out += &format!("rank Z(0)         {}\n", self.z0_rank);
        out += &format!("agreement         {}\n", self.agreement);
        for c in &self.invariants {
            let mark = if c.passed { "pass" } else { "FAIL" };
            match &c.detail {
                Some(d) if !c.passed => out += &format!("[{mark}] {} ({d})\n", c.name),
                _ => out += &format!("[{mark}] {}\n", c.name),
            }
        }
        if let Some(f) = self.first_failure() {
            out += &format!("first failure: {f}\n");
        }
        out
    }
}

#[derive(Default)]
struct Checks(Vec<InvariantCheck>);

impl Checks {
    fn check(&mut self, name: &str, passed: bool, detail: impl FnOnce() -> String) {
        self.0.push(InvariantCheck {
            name: name.to_string(),
            passed,
            detail: if passed { None } else { Some(detail()) },
        });
    }

    fn fail(&mut self, name: &str, detail: String) {
        self.check(name, false, || detail);
    }
}

pub fn verify(instance: &Instance, opts: VerifyOptions) -> VerifyReport {
    let profile = instance.profile();
    let w = direct_multiplicities(&profile);
    verify_with_multiplicities(instance, &profile, w, opts)
}

/// Like [`verify`], but with contracted-edge multiplicities supplied by the
/// caller instead of counted from the graph.
pub fn verify_with_multiplicities(
    instance: &Instance,
    profile: &ComponentProfile,
    multiplicity: Vec<Vec<u64>>,
    opts: VerifyOptions,
) -> VerifyReport {
    let mut checks = Checks::default();
    let mut results: Vec<CountResult> = Vec::new();
    let partition = &instance.partition;
    let n = partition.order();
    let c = profile.num_components();

    record(&mut results, &mut checks, Method::Main, main_count(profile, None));
    record(&mut results, &mut checks, Method::TraceForm, trace_form_count(profile));

    counting_checks(profile, &mut checks);

    let wp_ok = (0..c).all(|p| (0..c).all(|q| p == q || multiplicity[p][q] == multiplicity_formula(profile, p, q)));
    checks.check("w_pq = m_p m_q - sum_i n_ip n_iq", wp_ok, || {
        "multiplicity mismatch".into()
    });
    let inside: u64 = (0..c)
        .map(|q| {
            let m = profile.sizes()[q];
            let same: u64 = profile.counts().iter().map(|row| row[q] * row[q]).sum();
            (m * m - same) / 2
        })
        .sum();
    let between: u64 = (0..c)
        .flat_map(|p| (p + 1..c).map(move |q| (p, q)))
        .map(|(p, q)| multiplicity[p][q])
        .sum();
    checks.check(
        "edges between plus inside components = |E|",
        between + inside == partition.edge_count() as u64,
        || format!("{between} + {inside} != {}", partition.edge_count()),
    );

    match ContractedGraph::from_multiplicities(profile, multiplicity) {
        Ok(g) => {
            checks.check("contracted Laplacian = diag(alpha) + N^T (I - J) N", true, String::new);
            let l = g.laplacian();
            record(
                &mut results,
                &mut checks,
                Method::MatrixTree,
                oracles::matrix_tree_count(l, false),
            );
            record(
                &mut results,
                &mut checks,
                Method::CharPolyDerivative,
                oracles::charpoly_derivative_count(l, c),
            );
            laplacian_checks(profile, &g, &mut checks);
            if n <= opts.brute_threshold.min(MAX_ORIGINAL_ORDER) {
                record(
                    &mut results,
                    &mut checks,
                    Method::BruteForceOriginal,
                    oracles::brute_force_original(partition, &instance.forest),
                );
                if c <= MAX_CONTRACTED_ORDER {
                    record(
                        &mut results,
                        &mut checks,
                        Method::BruteForceContracted,
                        oracles::brute_force_contracted(&g),
                    );
                }
            }
        }
        Err(e) => checks.fail("contracted Laplacian = diag(alpha) + N^T (I - J) N", e.to_string()),
    }

    if let Some(res) = special_case_count(profile) {
        record(&mut results, &mut checks, Method::ClosedFormSpecialCase, res);
    }

    let (gamma, z0_rank) = z_checks(profile, opts, &mut checks);

    let reversed: Vec<usize> = (0..c).rev().collect();
    match profile
        .permute_components(&reversed)
        .map_err(Into::into)
        .and_then(|p| main_count(&p, None))
    {
        Ok(r) => {
            let base = results.iter().find(|r| r.method == Method::Main).map(|r| &r.value);
            checks.check("component order invariance", base == Some(&r.value), || {
                format!("reversed order gives {}", r.value)
            });
        }
        Err(e) => checks.fail("component order invariance", e.to_string()),
    }

    let mut first_divergence = None;
    if let Some(first) = results.first() {
        if let Some(other) = results.iter().find(|r| r.value != first.value) {
            first_divergence = Some(Divergence {
                first: method_value(first),
                second: method_value(other),
            });
        }
    }
    VerifyReport {
        agreement: first_divergence.is_none() && !results.is_empty(),
        results: results.iter().map(method_value).collect(),
        first_divergence,
        invariants: checks.0,
        gamma: gamma.map(|g| format!("{}/{}", g.numer(), g.denom())),
        z0_rank,
    }
}

fn method_value(r: &CountResult) -> MethodValue {
    MethodValue {
        method: r.method,
        value: r.value.to_string(),
    }
}

fn record(results: &mut Vec<CountResult>, checks: &mut Checks, method: Method, outcome: Result<impl Into<Counted>>) {
    match outcome {
        Ok(v) => results.push(v.into().into_result(method)),
        Err(e) => checks.fail(&format!("{method} computes a positive integer"), e.to_string()),
    }
}

/// Either a bare count or a full result.
enum Counted {
    Bare(BigNat),
    Full(CountResult),
}

impl Counted {
    fn into_result(self, method: Method) -> CountResult {
        match self {
            Counted::Bare(v) => CountResult::plain(method, v),
            Counted::Full(r) => r,
        }
    }
}

impl From<BigNat> for Counted {
    fn from(v: BigNat) -> Self {
        Counted::Bare(v)
    }
}

impl From<CountResult> for Counted {
    fn from(r: CountResult) -> Self {
        Counted::Full(r)
    }
}

fn counting_checks(profile: &ComponentProfile, checks: &mut Checks) {
    let partition = profile.partition();
    let c = profile.num_components();
    let n = partition.order() as u64;
    let rows_ok = profile
        .counts()
        .iter()
        .zip(partition.parts())
        .all(|(row, &ni)| row.iter().sum::<u64>() == ni as u64);
    let cols_ok = (0..c).all(|p| profile.counts().iter().map(|row| row[p]).sum::<u64>() == profile.sizes()[p]);
    let total_ok = profile.sizes().iter().sum::<u64>() == n;
    checks.check(
        "sum_p m_p = n, sum_p n_ip = n_i, sum_i n_ip = m_p",
        rows_ok && cols_ok && total_ok,
        || "component counts do not add up".into(),
    );
    let bad_alpha = (0..c).find(|&p| {
        let a = profile.alpha()[p];
        a != profile.alpha_by_parts(p) || a != profile.alpha_by_complements(p)
    });
    checks.check("alpha_p: three forms agree", bad_alpha.is_none(), || {
        format!("component {}", bad_alpha.unwrap())
    });
    checks.check(
        "alpha_p >= m_p >= 1",
        (0..c).all(|p| profile.alpha()[p] >= profile.sizes()[p] && profile.sizes()[p] >= 1),
        || "alpha below component size".into(),
    );
}

fn laplacian_checks(profile: &ComponentProfile, g: &ContractedGraph, checks: &mut Checks) {
    let c = g.order();
    let l = g.laplacian();
    match l.cofactor_bareiss(0, 0).map_err(crate::Error::from).and_then(|tau| {
        let adj = l.to_rational().adjugate()?;
        Ok((tau, adj))
    }) {
        Ok((tau, adj)) => {
            let expected = RatMatrix::ones(c).scale(&BigRat::from(tau.clone()));
            checks.check("adj L = tau J", adj == expected, || format!("adjugate is not {tau}·J"));
        }
        Err(e) => checks.fail("adj L = tau J", e.to_string()),
    }

    // Φ(x) = Π(x − α_p) det Z(x) at 2c + 1 integer points away from the poles.
    let phi = match l.char_poly() {
        Ok(p) => p,
        Err(e) => return checks.fail("char poly factorization", e.to_string()),
    };
    let mut points = Vec::new();
    let mut k: i64 = 1;
    while points.len() < 2 * c + 1 {
        for x in [k, -k] {
            if points.len() < 2 * c + 1 && !(x > 0 && profile.alpha().contains(&(x as u64))) {
                points.push(x);
            }
        }
        k += 1;
    }
    let bad = points.iter().find_map(|&x| {
        let lhs = BigRat::from(phi.eval(&BigInt::from(x)));
        match factored_char_poly_at(profile, &BigRat::from(BigInt::from(x))) {
            Ok(rhs) if rhs == lhs => None,
            Ok(rhs) => Some(format!("x = {x}: {lhs} vs {rhs}")),
            Err(e) => Some(e.to_string()),
        }
    });
    checks.check("char poly = prod(x - alpha_p) det Z(x)", bad.is_none(), || {
        bad.clone().unwrap()
    });
}

fn z_checks(profile: &ComponentProfile, opts: VerifyOptions, checks: &mut Checks) -> (Option<BigRat>, usize) {
    let partition = profile.partition();
    let s = partition.num_parts();
    let n = partition.order() as u64;
    let c = profile.num_components() as u64;
    let z = assemble_z(profile);
    let det = z.z0.det().expect("square");
    checks.check("det Z(0) = 0", det.is_zero(), || format!("det Z(0) = {det}"));
    let rank = z.z0.rank();
    checks.check("rank Z(0) = s - 1", rank + 1 == s, || format!("rank {rank}"));

    let b: Vec<BigRat> = partition
        .parts()
        .iter()
        .map(|&k| BigRat::from(BigInt::from(k)))
        .collect();
    let right: Vec<BigRat> = partition
        .parts()
        .iter()
        .map(|&k| BigRat::from(BigInt::from(n - k as u64)))
        .collect();
    let left_ok = z.z0.vec_mul(&b).expect("length s").iter().all(Zero::is_zero);
    checks.check("b^T Z(0) = 0", left_ok, || "nonzero entry".into());
    let right_ok = z.z0.mul_vec(&right).expect("length s").iter().all(Zero::is_zero);
    checks.check("Z(0) (n e - b) = 0", right_ok, || "nonzero entry".into());

    let gamma = match gamma_from_cofactor(&z, partition, 0, 0) {
        Ok(g) => g,
        Err(e) => {
            checks.fail("gamma > 0", e.to_string());
            return (None, rank);
        }
    };
    checks.check("gamma > 0", gamma.is_positive(), || format!("gamma = {gamma}"));
    if opts.check_all_ij {
        let mut bad = None;
        'outer: for i in 0..s {
            for j in 0..s {
                match gamma_from_cofactor(&z, partition, i, j) {
                    Ok(g) if g == gamma => {}
                    Ok(g) => {
                        bad = Some(format!("({}, {}) gives {g}", i + 1, j + 1));
                        break 'outer;
                    }
                    Err(e) => {
                        bad = Some(e.to_string());
                        break 'outer;
                    }
                }
            }
        }
        checks.check("C_ij / (n_i (n - n_j)) independent of (i, j)", bad.is_none(), || {
            bad.clone().unwrap()
        });
    }
    match z.z0.adjugate() {
        Ok(adj) => {
            let expected = RatMatrix::outer(&right, &b).scale(&gamma);
            checks.check("adj Z(0) = gamma (n e - b) b^T", adj == expected, || {
                "entrywise mismatch".into()
            });
            let adj_rank = adj.rank();
            checks.check("adj Z(0) has rank 1", adj_rank == 1, || format!("rank {adj_rank}"));
            let trace = -(&adj * &z.z0_prime).trace().expect("square");
            let target = &gamma * BigRat::from(BigInt::from(c));
            checks.check("tr(-adj Z(0) Z'(0)) = c gamma", trace == target, || {
                format!("{trace} vs {target}")
            });
        }
        Err(e) => checks.fail("adj Z(0) = gamma (n e - b) b^T", e.to_string()),
    }
    (Some(gamma), rank)
}
