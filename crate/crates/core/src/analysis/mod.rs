//! Closed-form threshold, overhead and entropy calculators.
//!
//! Exact quantities (thresholds, integer blowups) use integer or rational
//! arithmetic; everything involving logs or roots is generic over
//! [`Scalar`](crate::Scalar).

mod blowup;
mod bounds;
mod entropy;
mod threshold;

pub use blowup::{blowup, mixed_table, mixed_threshold, Blowup, MixedThreshold};
pub use bounds::{logical_error_bound, min_concat_level};
pub use entropy::{
    entropy_bounds, entropy_grid, kappa, landauer_energy, max_useful_level, EntropyReport,
    GridPoint, BOLTZMANN, GRID_E, GRID_G, GRID_G_TILDE, GRID_LEVELS,
};
pub use threshold::{threshold, threshold_value};

/// Operations per recovery step for each layout, without and with initialisation.
pub mod gate_counts {
    pub const NONLOCAL: u64 = 9;
    pub const NONLOCAL_WITH_INIT: u64 = 11;
    pub const LATTICE: u64 = 14;
    pub const LATTICE_WITH_INIT: u64 = 16;
    pub const LINE: u64 = 38;
    pub const LINE_WITH_INIT: u64 = 40;
}

/// Threshold pair used for the mixed-layout table: line and lattice
/// thresholds with initialisation left out.
pub fn mixed_layout_thresholds() -> (f64, f64) {
    (1.0 / 2109.0, 1.0 / 273.0)
}
