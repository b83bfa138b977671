//! Fault injection and Monte Carlo estimation under independent gate failures.

mod faults;
mod mc;
mod noise;
mod pbit;
mod rng;

pub use faults::{
    enumerate_faults, enumerate_single_faults, enumerate_single_faults_both, FaultReport,
    FaultViolation,
};
pub use mc::{run_program, run_trials, SimReport, WILSON_BELOW};
pub use noise::{noisy_apply, noisy_evaluate, FaultEvent, NoiseModel, Program};
pub use pbit::{
    estimate_pbit, sweep_threshold, sweep_threshold_with, write_sweep_csv, PbitExperiment,
    SweepRow, SWEEP_COLUMNS,
};
pub use rng::{trial_rng, trial_seed, TrialRng};
