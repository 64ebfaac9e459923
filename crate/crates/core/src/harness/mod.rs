//! Enumeration, sampling, theorem sweeps and the counterexample registry.

pub mod enumerate;
pub mod registry;
pub mod report;
pub mod theorems;

pub use enumerate::{
    enumerate_monotone, enumerate_tables, exhaustive_cap, monotone_repair, sample_monotone,
    sample_polynomial, table_count, DEFAULT_CAP,
};
pub use registry::{registry, replay, Expectation, RegistryEntry, ReplayLine};
pub use theorems::{theorem_ids, verify_theorem, Discrepancy, Mode, SweepPlan, TheoremRun};
