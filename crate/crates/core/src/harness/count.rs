//! Counting with a selected method, producing printable records.

use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use super::Instance;
use crate::closed_forms::{self, gamma, main_count, trace_form_count, CountResult, Method};
use crate::model::{contract, ComponentProfile};
use crate::oracles::{self, MAX_CONTRACTED_ORDER, MAX_ORIGINAL_ORDER};
use crate::{BigNat, Error, Result};

/// Methods selectable on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodSelection {
    Main,
    MatrixTree,
    Charpoly,
    Trace,
    /// Both enumerators; the size limits are hard errors.
    Brute,
    /// Every method; enumerators only when the instance is within their limits.
    All,
}

impl FromStr for MethodSelection {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "main" => Self::Main,
            "matrix-tree" => Self::MatrixTree,
            "charpoly" => Self::Charpoly,
            "trace" => Self::Trace,
            "brute" => Self::Brute,
            "all" => Self::All,
            other => return Err(format!("unknown method {other:?}")),
        })
    }
}

/// One computation, in the structured output format.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CountRecord {
    pub method: Method,
    /// Decimal digits.
    pub value: String,
    /// `"p/q"` when the method produced one.
    pub gamma: Option<String>,
    pub alpha: Vec<u64>,
    /// One-based cofactor position, main formula only.
    pub ij: Option<[usize; 2]>,
    /// Seconds.
    pub elapsed: f64,
}

impl CountRecord {
    fn new(result: CountResult, profile: &ComponentProfile, elapsed: f64) -> Self {
        let witness = result.witness.unwrap_or_default();
        Self {
            method: result.method,
            value: result.value.to_string(),
            gamma: witness.gamma.map(|g| format!("{}/{}", g.numer(), g.denom())),
            alpha: profile.alpha().to_vec(),
            ij: witness.cofactor_index.map(|(i, j)| [i + 1, j + 1]),
            elapsed,
        }
    }
}

/// The closed form that applies to this instance shape, if any: the two-part form for
/// two parts, the multipartite total for an empty forest, Moon for `K_n`.
pub fn special_case_count(profile: &ComponentProfile) -> Option<Result<BigNat>> {
    let partition = profile.partition();
    if partition.num_parts() == 2 {
        Some(closed_forms::bipartite_forest(profile))
    } else if profile.num_components() == partition.order() {
        Some(Ok(closed_forms::multipartite_total(partition)))
    } else if partition.parts().iter().all(|&k| k == 1) {
        Some(closed_forms::moon(partition.order() as u64, profile.sizes()))
    } else {
        None
    }
}

fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<(T, f64)> {
    let start = Instant::now();
    let out = f()?;
    Ok((out, start.elapsed().as_secs_f64()))
}

/// Runs the selected method(s). `choice` is a zero-based cofactor position
/// for the main formula; `check_all_ij` makes it confirm all `s²` choices.
pub fn count(
    instance: &Instance,
    selection: MethodSelection,
    choice: Option<(usize, usize)>,
    check_all_ij: bool,
) -> Result<Vec<CountRecord>> {
    use MethodSelection::*;
    let profile = instance.profile();
    let wants = |m: MethodSelection| selection == m || selection == All;
    let mut records = Vec::new();

    if wants(Main) {
        let (r, t) = timed(|| {
            let r = main_count(&profile, choice)?;
            if check_all_ij {
                gamma(&closed_forms::build_z(&profile)?, &instance.partition, true)?;
            }
            Ok(r)
        })?;
        records.push(CountRecord::new(r, &profile, t));
    }
    if wants(Trace) {
        let (r, t) = timed(|| trace_form_count(&profile))?;
        records.push(CountRecord::new(r, &profile, t));
    }
    let needs_graph = selection != Main && selection != Trace;
    let graph = if needs_graph { Some(contract(&profile)?) } else { None };
    if let Some(g) = &graph {
        if wants(MatrixTree) {
            let (v, t) = timed(|| oracles::matrix_tree_count(g.laplacian(), false))?;
            records.push(CountRecord::new(CountResult::plain(Method::MatrixTree, v), &profile, t));
        }
        if wants(Charpoly) {
            let (v, t) = timed(|| oracles::charpoly_derivative_count(g.laplacian(), g.order()))?;
            records.push(CountRecord::new(
                CountResult::plain(Method::CharPolyDerivative, v),
                &profile,
                t,
            ));
        }
        let in_range = instance.partition.order() <= MAX_ORIGINAL_ORDER && g.order() <= MAX_CONTRACTED_ORDER;
        if selection == Brute || (selection == All && in_range) {
            let (v, t) = timed(|| oracles::brute_force_original(&instance.partition, &instance.forest))?;
            records.push(CountRecord::new(
                CountResult::plain(Method::BruteForceOriginal, v),
                &profile,
                t,
            ));
            let (v, t) = timed(|| oracles::brute_force_contracted(g))?;
            records.push(CountRecord::new(
                CountResult::plain(Method::BruteForceContracted, v),
                &profile,
                t,
            ));
        }
    }
    if selection == All {
        if let Some(res) = special_case_count(&profile) {
            let (v, t) = timed(|| res)?;
            records.push(CountRecord::new(
                CountResult::plain(Method::ClosedFormSpecialCase, v),
                &profile,
                t,
            ));
        }
    }
    Ok(records)
}

/// Parses a one-based `I,J` pair into a zero-based position.
pub fn parse_ij(text: &str) -> std::result::Result<(usize, usize), Error> {
    let bad = || Error::InvalidArgument(format!("expected I,J with 1-based indices, got {text:?}"));
    let (i, j) = text.split_once(',').ok_or_else(bad)?;
    let i: usize = i.trim().parse().map_err(|_| bad())?;
    let j: usize = j.trim().parse().map_err(|_| bad())?;
    if i == 0 || j == 0 {
        return Err(bad());
    }
    Ok((i - 1, j - 1))
}
