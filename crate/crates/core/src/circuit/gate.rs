use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::CircuitError;

/// Operations a circuit may contain. All but INIT3 are reversible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GateKind {
    #[serde(rename = "CNOT")]
    Cnot,
    #[serde(rename = "TOFFOLI")]
    Toffoli,
    #[serde(rename = "MAJ")]
    Maj,
    #[serde(rename = "MAJINV")]
    MajInv,
    #[serde(rename = "SWAP")]
    Swap,
    #[serde(rename = "SWAP3")]
    Swap3,
    #[serde(rename = "INIT3")]
    Init3,
}

impl GateKind {
    pub const ALL: [GateKind; 7] = [
        GateKind::Cnot,
        GateKind::Toffoli,
        GateKind::Maj,
        GateKind::MajInv,
        GateKind::Swap,
        GateKind::Swap3,
        GateKind::Init3,
    ];

    pub const fn arity(self) -> usize {
        match self {
            GateKind::Cnot | GateKind::Swap => 2,
            _ => 3,
        }
    }

    pub const fn is_reversible(self) -> bool {
        !matches!(self, GateKind::Init3)
    }

    pub const fn name(self) -> &'static str {
        match self {
            GateKind::Cnot => "CNOT",
            GateKind::Toffoli => "TOFFOLI",
            GateKind::Maj => "MAJ",
            GateKind::MajInv => "MAJINV",
            GateKind::Swap => "SWAP",
            GateKind::Swap3 => "SWAP3",
            GateKind::Init3 => "INIT3",
        }
    }

    /// Number of nearest-neighbour exchanges a routing gate stands for.
    pub const fn elementary_swaps(self) -> usize {
        match self {
            GateKind::Swap => 1,
            GateKind::Swap3 => 2,
            _ => 0,
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GateKind {
    type Err = CircuitError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GateKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| CircuitError::UnknownKind(s.to_string()))
    }
}

/// A gate bound to an ordered list of bit positions.
///
/// Operand order carries meaning: MAJ leaves the majority on its first
/// operand, CNOT and TOFFOLI put the target last.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Gate {
    pub kind: GateKind,
    pub operands: Vec<usize>,
}

impl Gate {
    pub fn new(kind: GateKind, operands: impl Into<Vec<usize>>) -> Self {
        Gate {
            kind,
            operands: operands.into(),
        }
    }

    pub fn cnot(control: usize, target: usize) -> Self {
        Gate::new(GateKind::Cnot, [control, target])
    }

    pub fn toffoli(c1: usize, c2: usize, target: usize) -> Self {
        Gate::new(GateKind::Toffoli, [c1, c2, target])
    }

    pub fn maj(a: usize, b: usize, c: usize) -> Self {
        Gate::new(GateKind::Maj, [a, b, c])
    }

    pub fn maj_inv(a: usize, b: usize, c: usize) -> Self {
        Gate::new(GateKind::MajInv, [a, b, c])
    }

    pub fn swap(a: usize, b: usize) -> Self {
        Gate::new(GateKind::Swap, [a, b])
    }

    pub fn swap3(a: usize, b: usize, c: usize) -> Self {
        Gate::new(GateKind::Swap3, [a, b, c])
    }

    pub fn init3(a: usize, b: usize, c: usize) -> Self {
        Gate::new(GateKind::Init3, [a, b, c])
    }

    /// Checks arity, distinctness and range against a register of `width` bits.
    pub fn validate(&self, width: usize) -> Result<(), CircuitError> {
        let expected = self.kind.arity();
        if self.operands.len() != expected {
            return Err(CircuitError::ArityMismatch {
                kind: self.kind,
                expected,
                got: self.operands.len(),
            });
        }
        for (i, &q) in self.operands.iter().enumerate() {
            if q >= width {
                return Err(CircuitError::OperandOutOfRange { index: q, width });
            }
            if self.operands[..i].contains(&q) {
                return Err(CircuitError::DuplicateOperand(q));
            }
        }
        Ok(())
    }

    /// The gate undoing this one, or `None` for INIT3.
    pub fn inverse(&self) -> Option<Gate> {
        let kind = self.kind;
        match kind {
            GateKind::Init3 => None,
            GateKind::Maj => Some(Gate::new(GateKind::MajInv, self.operands.clone())),
            GateKind::MajInv => Some(Gate::new(GateKind::Maj, self.operands.clone())),
            // SWAP3(a,b,c) is a 3-cycle; its inverse is the same wires in reverse order.
            GateKind::Swap3 => {
                let mut ops = self.operands.clone();
                ops.reverse();
                Some(Gate::new(kind, ops))
            }
            GateKind::Cnot | GateKind::Toffoli | GateKind::Swap => Some(self.clone()),
        }
    }

    /// Applies the gate to a slice of bits in place.
    ///
    /// Panics if an operand is outside `bits`; callers validate first.
    pub fn apply_to(&self, bits: &mut [bool]) {
        apply_kind(self.kind, &self.operands, bits);
    }

    /// Largest operand index, used for width checks.
    pub fn max_operand(&self) -> Option<usize> {
        self.operands.iter().copied().max()
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.kind)?;
        for (i, q) in self.operands.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{q}")?;
        }
        f.write_str(")")
    }
}

#[inline]
pub(crate) fn apply_kind(kind: GateKind, ops: &[usize], bits: &mut [bool]) {
    match kind {
        GateKind::Cnot => {
            bits[ops[1]] ^= bits[ops[0]];
        }
        GateKind::Toffoli => {
            bits[ops[2]] ^= bits[ops[0]] & bits[ops[1]];
        }
        GateKind::Maj => {
            let a = bits[ops[0]];
            bits[ops[1]] ^= a;
            bits[ops[2]] ^= a;
            bits[ops[0]] ^= bits[ops[1]] & bits[ops[2]];
        }
        GateKind::MajInv => {
            bits[ops[0]] ^= bits[ops[1]] & bits[ops[2]];
            let a = bits[ops[0]];
            bits[ops[2]] ^= a;
            bits[ops[1]] ^= a;
        }
        GateKind::Swap => bits.swap(ops[0], ops[1]),
        GateKind::Swap3 => {
            bits.swap(ops[0], ops[1]);
            bits.swap(ops[1], ops[2]);
        }
        GateKind::Init3 => {
            bits[ops[0]] = false;
            bits[ops[1]] = false;
            bits[ops[2]] = false;
        }
    }
}
