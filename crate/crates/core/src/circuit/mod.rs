//! Reversible circuit representation and exact evaluation.

mod census;
mod gate;
mod json;
mod state;
mod topology;

pub use census::GateCensus;
pub use gate::{Gate, GateKind};
pub use json::{from_json, to_json};
pub use state::BitState;
pub use topology::{check_locality, Topology, Violation};

pub(crate) use gate::apply_kind;

use serde::{Deserialize, Serialize};

use crate::error::CircuitError;

/// Widest register `is_permutation` will enumerate exhaustively.
pub const MAX_PERMUTATION_WIDTH: usize = 20;

/// A gate sequence over `width` bits with declared data and ancilla positions.
///
/// `inputs` and `ancillas` partition `0..width`; ancillas are expected to be
/// zero on entry. `outputs` lists where results are read after the last gate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "json::RawCircuit")]
pub struct Circuit {
    pub width: usize,
    pub inputs: Vec<usize>,
    pub outputs: Vec<usize>,
    pub ancillas: Vec<usize>,
    pub gates: Vec<Gate>,
}

impl Circuit {
    /// Builds a circuit whose ancillas are every position not listed in `inputs`.
    pub fn new(
        width: usize,
        inputs: Vec<usize>,
        outputs: Vec<usize>,
        gates: Vec<Gate>,
    ) -> Result<Self, CircuitError> {
        let mut is_input = vec![false; width];
        for &i in &inputs {
            if i < width {
                is_input[i] = true;
            }
        }
        let ancillas = (0..width).filter(|&i| !is_input[i]).collect();
        Circuit::from_parts(width, inputs, outputs, ancillas, gates)
    }

    /// Builds and validates a circuit from explicit position lists.
    pub fn from_parts(
        width: usize,
        inputs: Vec<usize>,
        outputs: Vec<usize>,
        ancillas: Vec<usize>,
        gates: Vec<Gate>,
    ) -> Result<Self, CircuitError> {
        let c = Circuit {
            width,
            inputs,
            outputs,
            ancillas,
            gates,
        };
        c.validate()?;
        Ok(c)
    }

    /// A circuit with every bit as both input and output.
    pub fn open(width: usize, gates: Vec<Gate>) -> Result<Self, CircuitError> {
        let all: Vec<usize> = (0..width).collect();
        Circuit::from_parts(width, all.clone(), all, Vec::new(), gates)
    }

    pub fn validate(&self) -> Result<(), CircuitError> {
        let mut seen = vec![false; self.width];
        for &i in self.inputs.iter().chain(&self.ancillas) {
            if i >= self.width || seen[i] {
                return Err(CircuitError::BadPartition(self.width));
            }
            seen[i] = true;
        }
        if seen.iter().any(|&s| !s) {
            return Err(CircuitError::BadPartition(self.width));
        }
        let mut out_seen = vec![false; self.width];
        for &o in &self.outputs {
            if o >= self.width || out_seen[o] {
                return Err(CircuitError::BadPartition(self.width));
            }
            out_seen[o] = true;
        }
        for g in &self.gates {
            g.validate(self.width)?;
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn census(&self) -> GateCensus {
        gate_census(self)
    }

    pub fn has_init(&self) -> bool {
        self.gates.iter().any(|g| g.kind == GateKind::Init3)
    }

    /// Same circuit with the INIT3 gates dropped.
    pub fn without_init(&self) -> Circuit {
        Circuit {
            gates: self
                .gates
                .iter()
                .filter(|g| g.kind != GateKind::Init3)
                .cloned()
                .collect(),
            ..self.clone()
        }
    }

    /// Places `data` on the input positions, zeroing ancillas.
    pub fn load(&self, data: &[bool]) -> Result<BitState, CircuitError> {
        if data.len() != self.inputs.len() {
            return Err(CircuitError::WidthMismatch {
                expected: self.inputs.len(),
                got: data.len(),
            });
        }
        let mut s = BitState::zeros(self.width);
        for (&pos, &b) in self.inputs.iter().zip(data) {
            s.set(pos, b);
        }
        Ok(s)
    }

    /// Reads the output positions of `state`.
    pub fn read_outputs(&self, state: &BitState) -> Vec<bool> {
        self.outputs.iter().map(|&o| state.get(o)).collect()
    }
}

pub fn apply_gate(gate: &Gate, state: &BitState) -> Result<BitState, CircuitError> {
    gate.validate(state.len())?;
    let mut next = state.clone();
    gate.apply_to(next.as_mut_slice());
    Ok(next)
}

/// Runs the circuit on `input`, rejecting dirty ancillas.
pub fn evaluate(circuit: &Circuit, input: &BitState) -> Result<BitState, CircuitError> {
    if input.len() != circuit.width {
        return Err(CircuitError::WidthMismatch {
            expected: circuit.width,
            got: input.len(),
        });
    }
    if let Some(&a) = circuit.ancillas.iter().find(|&&a| input.get(a)) {
        return Err(CircuitError::DirtyAncilla(a));
    }
    Ok(evaluate_unchecked(circuit, input))
}

/// Runs the circuit without the ancilla precondition.
///
/// Panics if the width of `input` is smaller than the circuit's.
pub fn evaluate_unchecked(circuit: &Circuit, input: &BitState) -> BitState {
    let mut s = input.clone();
    let bits = s.as_mut_slice();
    for g in &circuit.gates {
        g.apply_to(bits);
    }
    s
}

/// Reverses the gate list and inverts each gate.
///
/// The result takes the original outputs first, followed by every other
/// position, as inputs with no ancillas, since bits the original circuit
/// left dirty are part of what the inverse must consume.
pub fn invert(circuit: &Circuit) -> Result<Circuit, CircuitError> {
    let mut gates = Vec::with_capacity(circuit.gates.len());
    for (position, g) in circuit.gates.iter().enumerate().rev() {
        let inv = g.inverse().ok_or(CircuitError::Irreversible {
            position,
            kind: g.kind,
        })?;
        gates.push(inv);
    }
    let mut inputs = circuit.outputs.clone();
    let mut listed = vec![false; circuit.width];
    for &o in &inputs {
        listed[o] = true;
    }
    inputs.extend((0..circuit.width).filter(|&i| !listed[i]));
    Circuit::from_parts(
        circuit.width,
        inputs,
        circuit.inputs.clone(),
        Vec::new(),
        gates,
    )
}

/// True iff the circuit is injective on all `2^width` states.
pub fn is_permutation(circuit: &Circuit) -> Result<bool, CircuitError> {
    let width = circuit.width;
    if width > MAX_PERMUTATION_WIDTH {
        return Err(CircuitError::TooWide {
            width,
            max: MAX_PERMUTATION_WIDTH,
        });
    }
    if circuit.has_init() {
        return Ok(false);
    }
    let n = 1usize << width;
    let mut seen = vec![0u64; n.div_ceil(64)];
    let mut bits = vec![false; width];
    for x in 0..n {
        for (i, b) in bits.iter_mut().enumerate() {
            *b = (x >> i) & 1 == 1;
        }
        for g in &circuit.gates {
            g.apply_to(&mut bits);
        }
        let y = bits
            .iter()
            .enumerate()
            .fold(0usize, |acc, (i, &b)| acc | (usize::from(b) << i));
        let (w, m) = (y / 64, 1u64 << (y % 64));
        if seen[w] & m != 0 {
            return Ok(false);
        }
        seen[w] |= m;
    }
    Ok(true)
}

pub fn gate_census(circuit: &Circuit) -> GateCensus {
    GateCensus::from_gates(&circuit.gates)
}
