//! Seeded random instances and the fuzz loop.
//!
//! Trial `k` of seed `S` draws from ChaCha8 (`rand_chacha::ChaCha8Rng`)
//! seeded with `seed_from_u64(S)` and switched to stream `k`, so each trial's
//! instance depends on `(S, k)` alone and trials can run in any order.
//!
//! Drawing order within a trial:
//! 1. `s` uniform in `[2, min(max_s, max_n)]`;
//! 2. `n` uniform in `[s, max_n]`;
//! 3. part sizes from a uniform composition of `n` into `s` positive parts
//!    (`s − 1` distinct cut points sampled from `1..n`);
//! 4. a forest target uniform in `[0, n − 1]`;
//! 5. a uniform shuffle of the cross-part edges, added greedily while acyclic.

use rand::seq::{index, SliceRandom};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::verify::{verify, VerifyOptions};
use super::Instance;
use crate::model::{Partition, SpanningForest};
use crate::oracles::MAX_ORIGINAL_ORDER;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzConfig {
    pub seed: u64,
    pub trials: u64,
    pub max_n: usize,
    pub max_s: usize,
    pub brute_threshold: usize,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            trials: 100,
            max_n: 12,
            max_s: 6,
            brute_threshold: MAX_ORIGINAL_ORDER,
        }
    }
}

impl FuzzConfig {
    fn check(&self) -> crate::Result<()> {
        if self.max_n < 2 || self.max_s < 2 {
            return Err(crate::Error::InvalidArgument(format!(
                "max-n and max-s must both be at least 2, got {} and {}",
                self.max_n, self.max_s
            )));
        }
        Ok(())
    }
}

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// `s` and `n` as in the module docs; needs `max_n, max_s ≥ 2`.
pub fn random_partition<R: Rng>(rng: &mut R, max_n: usize, max_s: usize) -> Partition {
    let s = rng.gen_range(2..=max_s.min(max_n));
    let n = rng.gen_range(s..=max_n);
    random_composition(rng, n, s)
}

/// Part sizes from a uniform composition of `n` into `s` parts.
pub fn random_composition<R: Rng>(rng: &mut R, n: usize, s: usize) -> Partition {
    let mut cuts = index::sample(rng, n - 1, s - 1).into_vec();
    cuts.sort_unstable();
    let mut parts = Vec::with_capacity(s);
    let mut prev = 0;
    for cut in cuts {
        parts.push(cut + 1 - prev);
        prev = cut + 1;
    }
    parts.push(n - prev);
    Partition::new(parts).expect("s ≥ 2 positive parts")
}

/// Shuffles the cross-part edges and keeps each one that joins two
/// components, stopping at `target` edges.
pub fn random_forest<R: Rng>(partition: &Partition, rng: &mut R, target: usize) -> SpanningForest {
    let mut edges = partition.cross_edges();
    edges.shuffle(rng);
    SpanningForest::greedy(partition, edges, target)
}

pub fn trial_instance(config: &FuzzConfig, trial: u64) -> Instance {
    let mut rng = trial_rng(config.seed, trial);
    let partition = random_partition(&mut rng, config.max_n, config.max_s);
    let target = rng.gen_range(0..partition.order());
    let forest = random_forest(&partition, &mut rng, target);
    Instance::new(partition, forest)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzFailure {
    pub trial: u64,
    pub instance: String,
    pub reason: String,
}

/// Outcome of a fuzz run. Contains no timings, so equal configs give equal
/// summaries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzSummary {
    pub config: FuzzConfig,
    pub passed: u64,
    pub failed: u64,
    /// Sorted by trial index.
    pub failures: Vec<FuzzFailure>,
}

impl FuzzSummary {
    pub fn exit_code(&self) -> i32 {
        if self.failed == 0 {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("summary serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "seed {}: {} trials, {} passed, {} failed\n",
            self.config.seed, self.config.trials, self.passed, self.failed
        );
        if let Some(f) = self.failures.first() {
            out += &format!("first failure at trial {}: {}\n{}\n", f.trial, f.reason, f.instance);
        }
        out
    }
}

fn run_trial(config: &FuzzConfig, trial: u64) -> Option<FuzzFailure> {
    let instance = trial_instance(config, trial);
    let report = verify(
        &instance,
        VerifyOptions {
            brute_threshold: config.brute_threshold,
            check_all_ij: true,
        },
    );
    if report.passed() {
        None
    } else {
        Some(FuzzFailure {
            trial,
            instance: instance.to_json(),
            reason: report.first_failure().unwrap_or_default(),
        })
    }
}

/// Runs every trial in parallel and aggregates by trial index.
pub fn fuzz(config: &FuzzConfig) -> crate::Result<FuzzSummary> {
    if config.trials > 0 {
        config.check()?;
    }
    let mut failures: Vec<FuzzFailure> = (0..config.trials)
        .into_par_iter()
        .filter_map(|k| run_trial(config, k))
        .collect();
    failures.sort_by_key(|f| f.trial);
    let failed = failures.len() as u64;
    Ok(FuzzSummary {
        config: *config,
        passed: config.trials - failed,
        failed,
        failures,
    })
}
