//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use mptree::closed_forms::{
    bipartite_forest, build_z, cayley, fiedler_sedlacek, gamma, main_count, moon, multipartite_total, trace_form_count,
};
use mptree::harness::fuzz::random_composition;
use mptree::harness::{fuzz, random_forest, trial_instance, trial_rng, verify, FuzzConfig, VerifyOptions};
use mptree::model::{contract, decompose, validate_forest, ComponentProfile, Partition, SpanningForest};
use mptree::oracles::{
    all_forests, brute_force_original, charpoly_derivative_count, matrix_tree_count, single_edge_sum,
};
use mptree::{BigInt, BigNat, BigRat, IntMatrix, RatMatrix};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn part(sizes: &[usize]) -> Partition {
    Partition::new(sizes.to_vec()).unwrap()
}

fn profile(sizes: &[usize], edges: &[(usize, usize)]) -> ComponentProfile {
    let p = part(sizes);
    let f = validate_forest(&p, edges).unwrap();
    decompose(&p, &f)
}

fn describe(p: &Partition, f: &SpanningForest) -> String {
    format!("partition {:?}, forest {:?}", p.parts(), f.edges())
}

/// The four methods that work at any size; returns their common value.
fn four_methods(prof: &ComponentProfile) -> Result<BigNat, String> {
    let main = main_count(prof, None).map_err(|e| e.to_string())?.value;
    let trace = trace_form_count(prof).map_err(|e| e.to_string())?.value;
    let g = contract(prof).map_err(|e| e.to_string())?;
    let mt = matrix_tree_count(g.laplacian(), false).map_err(|e| e.to_string())?;
    let cp = charpoly_derivative_count(g.laplacian(), g.order()).map_err(|e| e.to_string())?;
    ensure(main == trace && trace == mt && mt == cp, || {
        format!("main {main}, trace {trace}, matrix-tree {mt}, charpoly {cp}")
    })?;
    Ok(main)
}

/// Integer partitions of `n` into exactly `s` parts, largest first.
fn integer_partitions(n: usize, s: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, s: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if s == 0 {
            if n == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for k in (1..=max.min(n)).rev() {
            cur.push(k);
            go(n - k, s - 1, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, s, n, &mut Vec::new(), &mut out);
    out
}

fn exhaustive_small() -> Outcome {
    let mut partitions = 0;
    let mut forests = 0;
    for n in 2..=7 {
        for s in 2..=4 {
            for sizes in integer_partitions(n, s) {
                let p = part(&sizes);
                partitions += 1;
                for f in all_forests(&p).map_err(|e| e.to_string())? {
                    let prof = decompose(&p, &f);
                    let value = four_methods(&prof).map_err(|e| format!("{}: {e}", describe(&p, &f)))?;
                    let brute = brute_force_original(&p, &f).map_err(|e| e.to_string())?;
                    ensure(brute == value, || {
                        format!("{}: brute {brute} vs {value}", describe(&p, &f))
                    })?;
                    forests += 1;
                }
            }
        }
    }
    Ok(format!("{partitions} partitions, {forests} forests"))
}

fn random_medium() -> Outcome {
    let cfg = FuzzConfig {
        seed: 2024,
        trials: 1000,
        max_n: 40,
        max_s: 6,
        brute_threshold: 0,
    };
    let mut max_c = 0;
    for k in 0..cfg.trials {
        let inst = trial_instance(&cfg, k);
        let prof = inst.profile();
        max_c = max_c.max(prof.num_components());
        four_methods(&prof).map_err(|e| format!("trial {k} {}: {e}", inst.to_json()))?;
    }
    Ok(format!("1000 instances, largest contracted order {max_c}"))
}

fn known_values() -> Outcome {
    let nat = BigNat::from;
    let main = |sizes: &[usize], edges: &[(usize, usize)]| main_count(&profile(sizes, edges), None).unwrap().value;
    let checks: Vec<(&str, BigNat, u64)> = vec![
        ("Cayley K3", cayley(3).unwrap(), 3),
        ("main K3", main(&[1, 1, 1], &[]), 3),
        ("Cayley K4", cayley(4).unwrap(), 16),
        ("main K4", main(&[1, 1, 1, 1], &[]), 16),
        ("K_{2,3} closed form", fiedler_sedlacek(2, 3).unwrap(), 12),
        ("main K_{2,3}", main(&[2, 3], &[]), 12),
        (
            "multipartite total K_{2,2,2}",
            multipartite_total(&part(&[2, 2, 2])),
            384,
        ),
        ("main K_{2,2,2}", main(&[2, 2, 2], &[]), 384),
        (
            "brute K_{2,2,2}",
            brute_force_original(&part(&[2, 2, 2]), &SpanningForest::empty(&part(&[2, 2, 2]))).unwrap(),
            384,
        ),
        (
            "Moon K4 + edge",
            moon(4, profile(&[1, 1, 1, 1], &[(0, 1)]).sizes()).unwrap(),
            8,
        ),
        ("main K4 + edge", main(&[1, 1, 1, 1], &[(0, 1)]), 8),
        (
            "two-part K_{2,2} + edge",
            bipartite_forest(&profile(&[2, 2], &[(0, 2)])).unwrap(),
            3,
        ),
        ("main K_{2,2} + edge", main(&[2, 2], &[(0, 2)]), 3),
        ("main K_{1,1,1} + edge", main(&[1, 1, 1], &[(0, 1)]), 2),
    ];
    for (name, got, want) in &checks {
        ensure(*got == nat(*want), || format!("{name}: {got} != {want}"))?;
    }
    Ok(format!("{} values", checks.len()))
}

fn structural_suite() -> Outcome {
    let cfg = FuzzConfig {
        seed: 7,
        trials: 500,
        max_n: 30,
        max_s: 6,
        brute_threshold: 0,
    };
    let opts = VerifyOptions {
        brute_threshold: 0,
        check_all_ij: false,
    };
    let mut checks = 0;
    for k in 0..cfg.trials {
        let inst = trial_instance(&cfg, k);
        let report = verify(&inst, opts);
        checks += report.invariants.len();
        ensure(report.passed(), || {
            format!(
                "trial {k} {}: {}",
                inst.to_json(),
                report.first_failure().unwrap_or_default()
            )
        })?;
    }
    Ok(format!("500 instances, {checks} identity checks"))
}

fn ij_independence() -> Outcome {
    let cfg = FuzzConfig {
        seed: 11,
        trials: 200,
        max_n: 30,
        max_s: 6,
        brute_threshold: 0,
    };
    for k in 0..cfg.trials {
        let inst = trial_instance(&cfg, k);
        let prof = inst.profile();
        let s = inst.partition.num_parts();
        let z = build_z(&prof).map_err(|e| e.to_string())?;
        gamma(&z, &inst.partition, true).map_err(|e| format!("trial {k} {}: {e}", inst.to_json()))?;
        let first = main_count(&prof, Some((0, 0))).map_err(|e| e.to_string())?.value;
        for i in 0..s {
            for j in 0..s {
                let v = main_count(&prof, Some((i, j))).map_err(|e| e.to_string())?.value;
                ensure(v == first, || format!("trial {k} ({i}, {j}): {v} vs {first}"))?;
            }
        }
    }
    Ok("200 instances".into())
}

fn reductions() -> Outcome {
    for k in 0..200u64 {
        let mut rng = trial_rng(101, k);
        let n = rng.gen_range(2..=20);
        let p = random_composition(&mut rng, n, 2);
        let target = rng.gen_range(0..n);
        let f = random_forest(&p, &mut rng, target);
        let prof = decompose(&p, &f);
        let main = main_count(&prof, None).map_err(|e| e.to_string())?.value;
        let closed = bipartite_forest(&prof).map_err(|e| e.to_string())?;
        ensure(main == closed, || {
            format!("two parts, {}: {main} vs {closed}", describe(&p, &f))
        })?;
    }
    for k in 0..200u64 {
        let mut rng = trial_rng(102, k);
        let p = mptree::harness::random_partition(&mut rng, 20, 6);
        let prof = decompose(&p, &SpanningForest::empty(&p));
        let main = main_count(&prof, None).map_err(|e| e.to_string())?.value;
        let total = multipartite_total(&p);
        ensure(main == total, || {
            format!("empty forest, {:?}: {main} vs {total}", p.parts())
        })?;
    }
    for k in 0..100u64 {
        let mut rng = trial_rng(103, k);
        let n = rng.gen_range(2..=15);
        let p = part(&vec![1; n]);
        let target = rng.gen_range(0..n);
        let f = random_forest(&p, &mut rng, target);
        let prof = decompose(&p, &f);
        let main = main_count(&prof, None).map_err(|e| e.to_string())?.value;
        let closed = moon(n as u64, prof.sizes()).map_err(|e| e.to_string())?;
        ensure(main == closed, || {
            format!("complete graph, {}: {main} vs {closed}", describe(&p, &f))
        })?;
    }
    Ok("200 two-part, 200 empty-forest, 100 complete-graph instances".into())
}

fn edge_sum() -> Outcome {
    for k in 0..20u64 {
        let mut rng = trial_rng(104, k);
        let p = mptree::harness::random_partition(&mut rng, 10, 5);
        let sum = single_edge_sum(&p).map_err(|e| e.to_string())?;
        let expected = multipartite_total(&p) * BigNat::from(p.order() - 1);
        ensure(sum == expected, || format!("{:?}: {sum} vs {expected}", p.parts()))?;
    }
    Ok("20 partitions".into())
}

fn random_int_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> RatMatrix {
    RatMatrix::from_fn(rows, cols, |_, _| BigRat::from(BigInt::from(rng.gen_range(-4i64..=4))))
}

fn kernel_lemmas() -> Outcome {
    // det(A + UV) = det(A) det(I + V A⁻¹ U) for invertible A.
    let mut done = 0;
    let mut k = 0u64;
    while done < 200 {
        let mut rng = trial_rng(105, k);
        k += 1;
        let n = rng.gen_range(1..=7);
        let s = rng.gen_range(1..=4);
        let a = random_int_matrix(&mut rng, n, n);
        let Some(a_inv) = a.inverse().map_err(|e| e.to_string())? else {
            continue;
        };
        let u = random_int_matrix(&mut rng, n, s);
        let v = random_int_matrix(&mut rng, s, n);
        let lhs = a.checked_add(&(&u * &v)).unwrap().det().unwrap();
        let small = RatMatrix::identity(s).checked_add(&(&(&v * &a_inv) * &u)).unwrap();
        let rhs = a.det().unwrap() * small.det().unwrap();
        ensure(lhs == rhs, || format!("determinant lemma, draw {k}: {lhs} vs {rhs}"))?;
        done += 1;
    }
    // Linear coefficient of det(xI − L) is tr adj(−L) = (−1)^{c−1} c τ.
    for k in 0..200u64 {
        let mut rng = trial_rng(106, k);
        let c = rng.gen_range(1..=8);
        let mut l = IntMatrix::zeros(c, c);
        for i in 0..c {
            for j in i + 1..c {
                let w = BigInt::from(rng.gen_range(0..=3));
                l[(i, j)] -= &w;
                l[(j, i)] -= &w;
                l[(i, i)] += &w;
                l[(j, j)] += &w;
            }
        }
        let a1 = l.char_poly().map_err(|e| e.to_string())?.coefficient(1);
        let neg = l.to_rational().scale(&BigRat::from(BigInt::from(-1)));
        let trace = neg.adjugate().unwrap().trace().unwrap();
        ensure(BigRat::from(a1.clone()) == trace, || {
            format!("linear coefficient, draw {k}: {a1} vs {trace}")
        })?;
        let tau = l.cofactor_bareiss(0, 0).map_err(|e| e.to_string())?;
        let sign = if c % 2 == 1 { 1 } else { -1 };
        let expected = tau * BigInt::from(sign * c as i64);
        ensure(a1 == expected, || {
            format!("linear coefficient, draw {k}: {a1} vs {expected}")
        })?;
    }
    Ok("200 determinant-lemma and 200 linear-coefficient checks".into())
}

fn fuzz_determinism() -> Outcome {
    let cfg = FuzzConfig {
        seed: 42,
        trials: 100,
        max_n: 12,
        max_s: 6,
        brute_threshold: 8,
    };
    let a = fuzz(&cfg).map_err(|e| e.to_string())?;
    let b = fuzz(&cfg).map_err(|e| e.to_string())?;
    ensure(a.to_json() == b.to_json(), || "summaries differ".into())?;
    ensure(a.failed == 0, || a.render_text())?;
    Ok(format!("{} bytes, {} passed", a.to_json().len(), a.passed))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("exhaustive small-instance equivalence", exhaustive_small),
        ("randomized medium-scale equivalence", random_medium),
        ("known closed-form values", known_values),
        ("structural identity suite", structural_suite),
        ("cofactor position independence", ij_independence),
        ("reduction identities", reductions),
        ("edge-sum double counting", edge_sum),
        ("determinant lemma and linear coefficient", kernel_lemmas),
        ("fuzz determinism", fuzz_determinism),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] AC{} {name}: {detail} ({secs:.1}s)", k + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] AC{} {name}: {detail} ({secs:.1}s)", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
