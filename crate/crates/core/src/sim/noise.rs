use rand::RngCore;
use serde::Serialize;

use crate::circuit::{apply_kind, BitState, Circuit, Gate, GateKind};
use crate::error::SimError;

/// Independent per-operation failure probabilities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NoiseModel {
    pub g_gate: f64,
    pub g_init: f64,
}

impl NoiseModel {
    /// Same failure rate for gates and initialisation.
    pub fn new(g: f64) -> Result<Self, SimError> {
        Self::with_init(g, g)
    }

    pub fn with_init(g_gate: f64, g_init: f64) -> Result<Self, SimError> {
        for (name, value) in [("g_gate", g_gate), ("g_init", g_init)] {
            if !(0.0..=1.0).contains(&value) {
                return Err(SimError::BadProbability { name, value });
            }
        }
        Ok(NoiseModel { g_gate, g_init })
    }

    pub fn noiseless() -> Self {
        NoiseModel {
            g_gate: 0.0,
            g_init: 0.0,
        }
    }

    pub(crate) fn thresholds(&self) -> Thresholds {
        Thresholds {
            gate: cutoff(self.g_gate),
            init: cutoff(self.g_init),
        }
    }
}

/// A draw `u` fails when `u >> 8 < cutoff`, i.e. with probability cutoff / 2^56.
fn cutoff(g: f64) -> u64 {
    (g * (1u64 << 56) as f64).round() as u64
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Thresholds {
    gate: u64,
    init: u64,
}

/// A forced failure: gate `gate_index` writes `replacement` to its operands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaultEvent {
    pub gate_index: usize,
    pub replacement: Vec<bool>,
}

/// Flat gate list used on the simulation hot path.
#[derive(Debug, Clone)]
pub struct Program {
    width: usize,
    ops: Vec<(GateKind, [usize; 3])>,
}

impl Program {
    pub fn new(circuit: &Circuit) -> Self {
        let ops = circuit
            .gates
            .iter()
            .map(|g| {
                let mut q = [0; 3];
                q[..g.operands.len()].copy_from_slice(&g.operands);
                (g.kind, q)
            })
            .collect();
        Program {
            width: circuit.width,
            ops,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Runs every gate under noise. Each gate consumes exactly one 64-bit
    /// draw whether or not it fails, so runs at different rates with the
    /// same stream see the same draws.
    pub(crate) fn run_noisy(&self, bits: &mut [bool], th: Thresholds, rng: &mut impl RngCore) {
        for &(kind, q) in &self.ops {
            let u = rng.next_u64();
            let cut = if kind == GateKind::Init3 { th.init } else { th.gate };
            if (u >> 8) < cut {
                randomize(kind, &q, bits, u);
            } else {
                apply_kind(kind, &q, bits);
            }
        }
    }

    /// Runs every gate exactly, except for the one named by `fault`.
    pub fn run_with_fault(&self, bits: &mut [bool], fault: &FaultEvent) {
        for (i, &(kind, q)) in self.ops.iter().enumerate() {
            if i == fault.gate_index {
                for (k, &b) in fault.replacement.iter().enumerate() {
                    bits[q[k]] = b;
                }
            } else {
                apply_kind(kind, &q, bits);
            }
        }
    }
}

/// Overwrites the operands with the low `arity` bits of `u`.
#[inline]
fn randomize(kind: GateKind, q: &[usize; 3], bits: &mut [bool], u: u64) {
    for (k, &p) in q.iter().enumerate().take(kind.arity()) {
        bits[p] = (u >> k) & 1 == 1;
    }
}

/// Applies one gate under noise. With probability `g` the operand bits are
/// replaced by a uniformly random value, which may coincide with the
/// correct output.
pub fn noisy_apply(
    gate: &Gate,
    state: &BitState,
    noise: &NoiseModel,
    rng: &mut impl RngCore,
) -> Result<BitState, SimError> {
    gate.validate(state.len())?;
    let th = noise.thresholds();
    let mut next = state.clone();
    let u = rng.next_u64();
    let cut = if gate.kind == GateKind::Init3 { th.init } else { th.gate };
    let mut q = [0; 3];
    q[..gate.operands.len()].copy_from_slice(&gate.operands);
    if (u >> 8) < cut {
        randomize(gate.kind, &q, next.as_mut_slice(), u);
    } else {
        gate.apply_to(next.as_mut_slice());
    }
    Ok(next)
}

/// Runs `circuit` under noise from `input`, skipping the ancilla check.
pub fn noisy_evaluate(
    circuit: &Circuit,
    input: &BitState,
    noise: &NoiseModel,
    rng: &mut impl RngCore,
) -> Result<BitState, SimError> {
    if input.len() != circuit.width {
        return Err(crate::error::CircuitError::WidthMismatch {
            expected: circuit.width,
            got: input.len(),
        }
        .into());
    }
    let mut s = input.clone();
    Program::new(circuit).run_noisy(s.as_mut_slice(), noise.thresholds(), rng);
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::evaluate_unchecked;
    use crate::sim::rng::trial_rng;
    use rand::Rng;

    fn random_circuit(rng: &mut impl Rng, width: usize, len: usize) -> Circuit {
        let gates = (0..len)
            .map(|_| {
                let kind = GateKind::ALL[rng.random_range(0..GateKind::ALL.len())];
                let mut ops: Vec<usize> = (0..width).collect();
                for i in 0..kind.arity() {
                    let j = rng.random_range(i..width);
                    ops.swap(i, j);
                }
                ops.truncate(kind.arity());
                Gate::new(kind, ops)
            })
            .collect();
        Circuit::open(width, gates).unwrap()
    }

    #[test]
    fn rejects_bad_probabilities() {
        assert!(NoiseModel::new(-0.1).is_err());
        assert!(NoiseModel::with_init(0.1, 1.5).is_err());
        assert!(NoiseModel::new(1.0).is_ok());
    }

    #[test]
    fn zero_noise_matches_exact_evaluation() {
        let mut rng = trial_rng(1, 0);
        let quiet = NoiseModel::noiseless();
        for _ in 0..1000 {
            let width = rng.random_range(3..10);
            let c = random_circuit(&mut rng, width, 12);
            let x = BitState::from_u64(width, rng.random::<u64>());
            let y = noisy_evaluate(&c, &x, &quiet, &mut rng).unwrap();
            assert_eq!(y, evaluate_unchecked(&c, &x));
        }
    }

    #[test]
    fn certain_failure_is_uniform() {
        let noise = NoiseModel::new(1.0).unwrap();
        let gate = Gate::maj(0, 1, 2);
        let start = BitState::from_bits([true, false, false]);
        let mut rng = trial_rng(99, 0);
        let n = 80_000;
        let mut counts = [0usize; 8];
        for _ in 0..n {
            let out = noisy_apply(&gate, &start, &noise, &mut rng).unwrap();
            counts[out.to_u64() as usize] += 1;
        }
        let expected = n as f64 / 8.0;
        let chi2: f64 = counts
            .iter()
            .map(|&c| (c as f64 - expected).powi(2) / expected)
            .sum();
        // 7 degrees of freedom, 0.999 quantile
        assert!(chi2 < 24.32, "chi2 = {chi2}, counts {counts:?}");
    }

    #[test]
    fn failures_stay_on_operands() {
        let noise = NoiseModel::new(1.0).unwrap();
        let start = BitState::from_bits([true, false, true, true, false]);
        let mut rng = trial_rng(5, 5);
        for _ in 0..200 {
            let out = noisy_apply(&Gate::maj(1, 2, 3), &start, &noise, &mut rng).unwrap();
            assert_eq!(out.get(0), start.get(0));
            assert_eq!(out.get(4), start.get(4));
        }
    }

    #[test]
    fn failure_rate_matches_g() {
        let noise = NoiseModel::new(0.25).unwrap();
        let th = noise.thresholds();
        let mut rng = trial_rng(3, 3);
        let n = 100_000;
        let fails = (0..n).filter(|_| (rng.next_u64() >> 8) < th.gate).count();
        let p = fails as f64 / n as f64;
        assert!((p - 0.25).abs() < 0.006, "{p}");
    }

    #[test]
    fn forced_fault_writes_replacement() {
        let c = Circuit::open(3, vec![Gate::maj(0, 1, 2), Gate::cnot(0, 1)]).unwrap();
        let p = Program::new(&c);
        let mut bits = vec![false; 3];
        p.run_with_fault(
            &mut bits,
            &FaultEvent {
                gate_index: 0,
                replacement: vec![true, false, true],
            },
        );
        assert_eq!(bits, vec![true, true, true]);
    }
}
