use thiserror::Error;

use crate::circuit::GateKind;

#[derive(Debug, Error)]
pub enum CircuitError {
    #[error("unknown gate kind `{0}`")]
    UnknownKind(String),
    #[error("{kind} takes {expected} operands, got {got}")]
    ArityMismatch {
        kind: GateKind,
        expected: usize,
        got: usize,
    },
    #[error("operand {index} out of range for width {width}")]
    OperandOutOfRange { index: usize, width: usize },
    #[error("operand {0} repeated within one gate")]
    DuplicateOperand(usize),
    #[error("state has {got} bits, circuit expects {expected}")]
    WidthMismatch { expected: usize, got: usize },
    #[error("ancilla bit {0} is not zero")]
    DirtyAncilla(usize),
    #[error("input/output lists must each have distinct positions within width {0}")]
    BadPartition(usize),
    #[error("gate {position} ({kind}) is irreversible")]
    Irreversible { position: usize, kind: GateKind },
    #[error("permutation check limited to {max} bits, circuit has {width}")]
    TooWide { width: usize, max: usize },
    #[error("gate {position} ({gate}) is not local: {reason}")]
    NotLocal {
        position: usize,
        gate: String,
        reason: String,
    },
    #[error("topology covers {got} bits, circuit has {expected}")]
    TopologyMismatch { expected: usize, got: usize },
    #[error("invalid circuit json: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Error)]
pub enum BuildError {
    #[error("concatenation level must be at least 1, got {0}")]
    LevelZero(u32),
    #[error("level {0} too large for this machine")]
    LevelTooLarge(u32),
    #[error("unsupported logical gate {0} for a compiled cycle")]
    UnsupportedGate(GateKind),
    #[error("invalid layout `{0}`")]
    BadLayout(String),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}

#[derive(Debug, Error)]
pub enum SimError {
    #[error("probability {name} = {value} outside [0, 1]")]
    BadProbability { name: &'static str, value: f64 },
    #[error("trial count must be positive")]
    NoTrials,
    #[error("invalid g grid: {0}")]
    BadGrid(String),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
}

#[derive(Debug, Error, PartialEq)]
pub enum AnalysisError {
    #[error("gate count G must be at least 2, got {0}")]
    GateCountTooSmall(u64),
    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),
    #[error("{name} = {value} must lie in {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },
    #[error("gate error {g} is not below the threshold {threshold}; concatenation cannot help")]
    AboveThreshold { g: f64, threshold: f64 },
    #[error("expansion factor E must exceed 1/3 for a finite level bound, got {0}")]
    BadExpansion(f64),
}
