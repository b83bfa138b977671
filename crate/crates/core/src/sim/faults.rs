use serde::Serialize;

use super::noise::{FaultEvent, Program};
use crate::circuit::{BitState, Circuit};

/// A forced fault that pushed the outputs too far from the expected value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaultViolation {
    pub event: FaultEvent,
    pub distance: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaultReport {
    pub runs: usize,
    pub max_distance: usize,
    pub violations: Vec<FaultViolation>,
}

impl FaultReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn merge(&mut self, other: FaultReport) {
        self.runs += other.runs;
        self.max_distance = self.max_distance.max(other.max_distance);
        self.violations.extend(other.violations);
    }
}

/// Forces each possible single fault in turn (every gate, every
/// replacement value) starting from `input`, scores the final state with
/// `distance`, and flags any score above `tolerance`.
pub fn enumerate_faults(
    circuit: &Circuit,
    input: &BitState,
    tolerance: usize,
    distance: impl Fn(&BitState) -> usize,
) -> FaultReport {
    let program = Program::new(circuit);
    let mut report = FaultReport {
        runs: 0,
        max_distance: 0,
        violations: Vec::new(),
    };
    for (i, g) in circuit.gates.iter().enumerate() {
        let arity = g.kind.arity();
        for v in 0..1u32 << arity {
            let event = FaultEvent {
                gate_index: i,
                replacement: (0..arity).map(|k| (v >> k) & 1 == 1).collect(),
            };
            let mut state = input.clone();
            program.run_with_fault(state.as_mut_slice(), &event);
            let d = distance(&state);
            report.runs += 1;
            report.max_distance = report.max_distance.max(d);
            if d > tolerance {
                report.violations.push(FaultViolation { event, distance: d });
            }
        }
    }
    report
}

/// Single-fault sweep of a recovery circuit fed the clean codeword
/// `codeword`. Distance is the Hamming distance of the declared outputs
/// from that codeword; more than one is a violation.
pub fn enumerate_single_faults(circuit: &Circuit, codeword: bool) -> FaultReport {
    let input = circuit
        .load(&vec![codeword; circuit.inputs.len()])
        .expect("input count matches");
    enumerate_faults(circuit, &input, 1, |s| {
        circuit.read_outputs(s).iter().filter(|&&b| b != codeword).count()
    })
}

/// Both codewords of [`enumerate_single_faults`], merged.
pub fn enumerate_single_faults_both(circuit: &Circuit) -> FaultReport {
    let mut r = enumerate_single_faults(circuit, false);
    r.merge(enumerate_single_faults(circuit, true));
    r
}
