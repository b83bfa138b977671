pub mod analysis;
pub mod build;
pub mod circuit;
pub mod cli;
pub mod error;
pub mod numfmt;
mod scalar;
pub mod sim;

pub use build::{
    build_interleave_1d, build_interleave_2d, build_recovery_1d, build_recovery_2d,
    build_recovery_nonlocal, compile_cycle, compile_cycle_with, encode_value, ideal_decode,
    predicted_counts, CodeLevel, CompiledCycle, InitAccounting, LayoutStrategy,
};
pub use circuit::{
    apply_gate, check_locality, evaluate, gate_census, invert, is_permutation, BitState, Circuit,
    Gate, GateCensus, GateKind, Topology,
};
pub use scalar::Scalar;

/// Default floating type for the calculators.
pub type Real = f64;
/// Exact threshold type.
pub type Rational = num_rational::Ratio<u64>;

pub use error::{AnalysisError, BuildError, CircuitError, SimError};
pub use sim::{
    enumerate_single_faults, estimate_pbit, noisy_apply, run_trials, sweep_threshold, NoiseModel,
    SimReport,
};
