//! Monte Carlo estimation with Wilson intervals, dominance checks between
//! models, probability sweeps, and the exact chain table on four vertices.

mod config;
mod estimate;
mod exact;
mod run;

pub use config::{Event, ExperimentConfig, Model, Preset};
pub use estimate::{wilson, Estimate, Tally, Z95};
pub use exact::{exact_dominance_suite, exact_dominance_table, ExactTable, EXACT_TOLERANCE};
pub use run::{
    dominance_test, estimate, link_frequency, link_trial, run_trial, sweep, trial_seed,
    DominanceReport, LinkReport, SweepRow, SweepTable,
};
