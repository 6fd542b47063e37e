//! Wall-clock comparison of the main formula against the matrix-tree cofactor.

use std::fmt::Write as _;
use std::time::Instant;

use rand::Rng;

use super::fuzz::{random_composition, random_forest, trial_rng};
use crate::closed_forms::main_count;
use crate::model::{contract, decompose};
use crate::oracles::matrix_tree_count;
use crate::Result;

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub s: usize,
    pub c: usize,
    pub main_seconds: f64,
    pub matrix_tree_seconds: f64,
    pub agree: bool,
}

/// One random instance per size: `parts` parts (capped at `n`) and a forest
/// with a uniform number of edges, drawn from stream `k` of `seed`.
pub fn bench(sizes: &[usize], parts: usize, seed: u64) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::with_capacity(sizes.len());
    for (k, &n) in sizes.iter().enumerate() {
        let s = parts.min(n);
        if s < 2 {
            return Err(crate::Error::InvalidArgument(format!(
                "size {n} with {parts} parts has fewer than 2 parts"
            )));
        }
        let mut rng = trial_rng(seed, k as u64);
        let partition = random_composition(&mut rng, n, s);
        let target = rng.gen_range(0..n);
        let forest = random_forest(&partition, &mut rng, target);
        let profile = decompose(&partition, &forest);

        let start = Instant::now();
        let main = main_count(&profile, None)?.value;
        let main_seconds = start.elapsed().as_secs_f64();

        let start = Instant::now();
        let graph = contract(&profile)?;
        let mt = matrix_tree_count(graph.laplacian(), false)?;
        let matrix_tree_seconds = start.elapsed().as_secs_f64();

        rows.push(BenchRow {
            n,
            s,
            c: profile.num_components(),
            main_seconds,
            matrix_tree_seconds,
            agree: main == mt,
        });
    }
    Ok(rows)
}

pub fn render_table(rows: &[BenchRow]) -> String {
    let mut out = format!(
        "{:>6} {:>4} {:>6} {:>12} {:>12} {:>6}\n",
        "n", "s", "c", "main (s)", "cofactor (s)", "agree"
    );
    for r in rows {
        let _ = writeln!(
            out,
            "{:>6} {:>4} {:>6} {:>12.6} {:>12.6} {:>6}",
            r.n, r.s, r.c, r.main_seconds, r.matrix_tree_seconds, r.agree
        );
    }
    out
}
