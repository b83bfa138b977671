use serde::Deserialize;

use super::{Circuit, Gate, GateKind};
use crate::error::CircuitError;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct RawGate {
    kind: String,
    operands: Vec<usize>,
}

#[derive(Deserialize)]
pub(crate) struct RawCircuit {
    width: usize,
    inputs: Vec<usize>,
    outputs: Vec<usize>,
    ancillas: Vec<usize>,
    gates: Vec<RawGate>,
}

impl TryFrom<RawCircuit> for Circuit {
    type Error = CircuitError;

    fn try_from(raw: RawCircuit) -> Result<Self, Self::Error> {
        let gates = raw
            .gates
            .into_iter()
            .map(|g| Ok(Gate::new(g.kind.parse::<GateKind>()?, g.operands)))
            .collect::<Result<Vec<_>, CircuitError>>()?;
        Circuit::from_parts(raw.width, raw.inputs, raw.outputs, raw.ancillas, gates)
    }
}

pub fn to_json(circuit: &Circuit) -> String {
    serde_json::to_string_pretty(circuit).expect("circuit serialization is infallible")
}

pub fn from_json(text: &str) -> Result<Circuit, CircuitError> {
    Ok(serde_json::from_str(text)?)
}
