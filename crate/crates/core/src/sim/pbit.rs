use std::io::Write;

use rand::RngCore;
use serde::Serialize;

use super::mc::{run_program, SimReport};
use super::noise::{NoiseModel, Program};
use crate::build::{
    compile_cycle_with, decode_positions, CodeLevel, CompiledCycle, InitAccounting, LayoutStrategy,
};
use crate::circuit::{BitState, GateKind};
use crate::error::{BuildError, SimError};
use crate::numfmt::sig9;

/// A compiled memory cycle ready for repeated sampling.
///
/// The cycle is a TOFFOLI on logical `(x, 0, 0)`, which leaves `x` in
/// place, so it exercises a full encoded gate plus recovery while the
/// expected result of operand 0 is simply its input.
pub struct PbitExperiment {
    pub cycle: CompiledCycle,
    program: Program,
    encoded: [BitState; 2],
}

impl PbitExperiment {
    pub fn new(
        level: CodeLevel,
        layout: LayoutStrategy,
        init: InitAccounting,
    ) -> Result<Self, SimError> {
        if level.0 == 0 {
            return Err(BuildError::LevelZero(level.0).into());
        }
        let cycle = compile_cycle_with(GateKind::Toffoli, level, layout, init)?;
        let program = Program::new(&cycle.circuit);
        let encoded = [
            cycle.encode(&[false, false, false]),
            cycle.encode(&[true, false, false]),
        ];
        Ok(PbitExperiment {
            cycle,
            program,
            encoded,
        })
    }

    /// Fraction of trials in which operand 0 decodes to the wrong value.
    pub fn run(&self, noise: &NoiseModel, trials: u64, seed: u64) -> Result<SimReport, SimError> {
        let out = &self.cycle.logical_outputs[0];
        run_program(
            &self.program,
            |rng| {
                let x = rng.next_u64() & 1 == 1;
                (self.encoded[usize::from(x)].clone(), x)
            },
            noise,
            trials,
            seed,
            |&x, s| decode_positions(s, out) != x,
        )
    }
}

/// Logical error probability of one level-`level` cycle at gate error `g`,
/// with initialisation counted as a gate.
pub fn estimate_pbit(
    level: CodeLevel,
    layout: LayoutStrategy,
    g: f64,
    trials: u64,
    seed: u64,
) -> Result<SimReport, SimError> {
    let noise = NoiseModel::new(g)?;
    PbitExperiment::new(level, layout, InitAccounting::Counted)?.run(&noise, trials, seed)
}

/// One row of a threshold sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub g: f64,
    pub level: u32,
    pub layout: LayoutStrategy,
    #[serde(flatten)]
    pub report: SimReport,
}

/// Estimates the logical error rate at each `g`, all with the same seed so
/// neighbouring rows share their random draws.
pub fn sweep_threshold(
    g_values: &[f64],
    level: CodeLevel,
    layout: LayoutStrategy,
    trials: u64,
    seed: u64,
) -> Result<Vec<SweepRow>, SimError> {
    sweep_threshold_with(g_values, level, layout, InitAccounting::Counted, trials, seed)
}

pub fn sweep_threshold_with(
    g_values: &[f64],
    level: CodeLevel,
    layout: LayoutStrategy,
    init: InitAccounting,
    trials: u64,
    seed: u64,
) -> Result<Vec<SweepRow>, SimError> {
    if g_values.is_empty() {
        return Err(SimError::BadGrid("no g values given".into()));
    }
    if g_values.windows(2).any(|w| w[1] < w[0]) {
        return Err(SimError::BadGrid("g values must be in ascending order".into()));
    }
    let models = g_values
        .iter()
        .map(|&g| NoiseModel::new(g))
        .collect::<Result<Vec<_>, _>>()?;
    let exp = PbitExperiment::new(level, layout, init)?;
    g_values
        .iter()
        .zip(&models)
        .map(|(&g, noise)| {
            Ok(SweepRow {
                g,
                level: level.0,
                layout,
                report: exp.run(noise, trials, seed)?,
            })
        })
        .collect()
}

pub const SWEEP_COLUMNS: [&str; 8] = ["g", "level", "layout", "trials", "failures", "p_hat", "ci95", "seed"];

pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<(), SimError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SWEEP_COLUMNS)?;
    for r in rows {
        w.write_record([
            sig9(r.g),
            r.level.to_string(),
            r.layout.to_string(),
            r.report.trials.to_string(),
            r.report.failures.to_string(),
            sig9(r.report.p_hat),
            sig9(r.report.ci95_halfwidth),
            r.report.seed.to_string(),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}
