use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use mptree::harness::{
    self, load_instance, parse_ij, parse_instance, FuzzConfig, Instance, MethodSelection, VerifyOptions,
};
use mptree::oracles::MAX_ORIGINAL_ORDER;

/// Exact spanning-tree counts of complete multipartite graphs containing a
/// fixed spanning forest.
#[derive(Parser)]
#[command(name = "mptree", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count spanning trees with one method or all of them.
    Count {
        #[command(flatten)]
        input: InstanceArg,
        /// main, matrix-tree, charpoly, trace, brute or all.
        #[arg(long, default_value = "main")]
        method: MethodSelection,
        /// One-based cofactor position for the main formula.
        #[arg(long, value_name = "I,J")]
        ij: Option<String>,
        /// Also confirm every cofactor position gives the same value.
        #[arg(long)]
        check_all_ij: bool,
        /// Emit one JSON record per computation.
        #[arg(long)]
        machine: bool,
    },
    /// Run every method and structural identity; exit 1 on any mismatch.
    Verify {
        #[command(flatten)]
        input: InstanceArg,
        #[arg(long, default_value_t = MAX_ORIGINAL_ORDER)]
        brute_threshold: usize,
        #[arg(long)]
        machine: bool,
    },
    /// Verify seeded random instances.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 6)]
        max_s: usize,
        #[arg(long, default_value_t = MAX_ORIGINAL_ORDER)]
        brute_threshold: usize,
        #[arg(long)]
        machine: bool,
    },
    /// Time the main formula against the matrix-tree cofactor.
    Bench {
        /// Comma-separated vertex counts.
        #[arg(long, value_delimiter = ',', default_value = "50,100,200")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        parts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct InstanceArg {
    /// Instance JSON file, or `-` for standard input.
    #[arg(long, value_name = "PATH")]
    instance: PathBuf,
}

impl InstanceArg {
    fn load(&self) -> Result<Instance, String> {
        if self.instance.as_os_str() == "-" {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| format!("cannot read standard input: {e}"))?;
            parse_instance(&text).map_err(|e| e.to_string())
        } else {
            load_instance(&self.instance).map_err(|e| format!("{}: {e}", self.instance.display()))
        }
    }
}

/// Invalid input or a guard violation.
fn usage_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn exit(code: i32) -> ExitCode {
    ExitCode::from(code as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Count {
            input,
            method,
            ij,
            check_all_ij,
            machine,
        } => {
            let instance = match input.load() {
                Ok(i) => i,
                Err(e) => return usage_error(e),
            };
            let choice = match ij.as_deref().map(parse_ij).transpose() {
                Ok(c) => c,
                Err(e) => return usage_error(e),
            };
            let records = match harness::count(&instance, method, choice, check_all_ij) {
                Ok(r) => r,
                Err(e) => return usage_error(e),
            };
            for r in &records {
                if machine {
                    println!("{}", serde_json::to_string(r).expect("record serializes"));
                } else if method == MethodSelection::All || records.len() > 1 {
                    println!("{:<17} {}", r.method.to_string(), r.value);
                } else {
                    println!("{}", r.value);
                }
            }
            let agree = records.windows(2).all(|w| w[0].value == w[1].value);
            if agree {
                ExitCode::SUCCESS
            } else {
                eprintln!("methods disagree");
                exit(1)
            }
        }
        Command::Verify {
            input,
            brute_threshold,
            machine,
        } => {
            let instance = match input.load() {
                Ok(i) => i,
                Err(e) => return usage_error(e),
            };
            let report = harness::verify(
                &instance,
                VerifyOptions {
                    brute_threshold,
                    check_all_ij: true,
                },
            );
            if machine {
                println!("{}", serde_json::to_string(&report).expect("report serializes"));
            } else {
                print!("{}", report.render_text());
            }
            exit(report.exit_code())
        }
        Command::Fuzz {
            seed,
            trials,
            max_n,
            max_s,
            brute_threshold,
            machine,
        } => {
            let config = FuzzConfig {
                seed,
                trials,
                max_n,
                max_s,
                brute_threshold,
            };
            let summary = match harness::fuzz(&config) {
                Ok(s) => s,
                Err(e) => return usage_error(e),
            };
            if machine {
                println!("{}", summary.to_json());
            } else {
                print!("{}", summary.render_text());
            }
            exit(summary.exit_code())
        }
        Command::Bench { sizes, parts, seed } => match harness::bench(&sizes, parts, seed) {
            Ok(rows) => {
                print!("{}", harness::render_table(&rows));
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(e),
        },
    }
}
