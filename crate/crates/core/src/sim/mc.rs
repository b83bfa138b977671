use rayon::prelude::*;
use serde::Serialize;

use super::noise::{NoiseModel, Program};
use super::rng::{trial_rng, TrialRng};
use crate::circuit::{BitState, Circuit};
use crate::error::SimError;

/// Trials per parallel work item.
const CHUNK: u64 = 1024;

const Z95: f64 = 1.959_963_984_540_054;

/// Below this many failures the Wilson score interval replaces the normal one.
pub const WILSON_BELOW: u64 = 30;

/// Aggregated outcome of a batch of independent trials.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimReport {
    pub trials: u64,
    pub failures: u64,
    pub p_hat: f64,
    pub ci95_halfwidth: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub interval: &'static str,
    pub seed: u64,
}

impl SimReport {
    pub fn from_counts(trials: u64, failures: u64, seed: u64) -> Self {
        let n = trials as f64;
        let p = failures as f64 / n;
        let (low, high, half, interval) = if failures < WILSON_BELOW {
            let z2 = Z95 * Z95;
            let denom = 1.0 + z2 / n;
            let centre = (p + z2 / (2.0 * n)) / denom;
            let half = Z95 / denom * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
            // at zero failures the lower end is exactly zero; avoid rounding residue
            let low = if failures == 0 { 0.0 } else { (centre - half).max(0.0) };
            (low, (centre + half).min(1.0), half, "wilson")
        } else {
            let half = Z95 * (p * (1.0 - p) / n).sqrt();
            ((p - half).max(0.0), (p + half).min(1.0), half, "normal")
        };
        SimReport {
            trials,
            failures,
            p_hat: p,
            ci95_halfwidth: half,
            ci_low: low,
            ci_high: high,
            interval,
            seed,
        }
    }

    /// True when the two 95% intervals do not overlap and this one is lower.
    pub fn clearly_below(&self, other: &SimReport) -> bool {
        self.ci_high < other.ci_low
    }
}

/// Runs `n` noisy executions of `circuit`.
///
/// Trial `t` draws from its own stream keyed by `(seed, t)`: first `input`
/// builds the starting state and any context the predicate needs, then the
/// gates consume one draw each. `fails` judges the final state.
pub fn run_trials<T, I, F>(
    circuit: &Circuit,
    input: I,
    noise: &NoiseModel,
    n: u64,
    seed: u64,
    fails: F,
) -> Result<SimReport, SimError>
where
    I: Fn(&mut TrialRng) -> (BitState, T) + Sync,
    F: Fn(&T, &BitState) -> bool + Sync,
{
    run_program(&Program::new(circuit), input, noise, n, seed, fails)
}

pub fn run_program<T, I, F>(
    program: &Program,
    input: I,
    noise: &NoiseModel,
    n: u64,
    seed: u64,
    fails: F,
) -> Result<SimReport, SimError>
where
    I: Fn(&mut TrialRng) -> (BitState, T) + Sync,
    F: Fn(&T, &BitState) -> bool + Sync,
{
    if n == 0 {
        return Err(SimError::NoTrials);
    }
    let th = noise.thresholds();
    let chunks = n.div_ceil(CHUNK);
    let failures: u64 = (0..chunks)
        .into_par_iter()
        .map(|c| {
            (c * CHUNK..n.min((c + 1) * CHUNK))
                .map(|t| {
                    let mut rng = trial_rng(seed, t);
                    let (mut state, ctx) = input(&mut rng);
                    assert_eq!(state.len(), program.width(), "input width");
                    program.run_noisy(state.as_mut_slice(), th, &mut rng);
                    u64::from(fails(&ctx, &state))
                })
                .sum::<u64>()
        })
        .sum();
    Ok(SimReport::from_counts(n, failures, seed))
}
