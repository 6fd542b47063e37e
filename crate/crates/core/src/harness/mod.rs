//! Instance files, method dispatch, verification, fuzzing and benchmarking
//! behind the `mptree` binary.

pub mod bench;
pub mod count;
pub mod fuzz;
pub mod instance;
pub mod verify;

pub use bench::{bench, render_table, BenchRow};
pub use count::{count, parse_ij, special_case_count, CountRecord, MethodSelection};
pub use fuzz::{
    fuzz, random_forest, random_partition, trial_instance, trial_rng, FuzzConfig, FuzzFailure, FuzzSummary,
};
pub use instance::{load_instance, parse_instance, Instance, InstanceError, InstanceFile};
pub use verify::{verify, verify_with_multiplicities, InvariantCheck, VerifyOptions, VerifyReport};
