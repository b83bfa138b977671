use serde::{Deserialize, Serialize};

use super::{Circuit, Gate};
use crate::error::CircuitError;

/// Physical arrangement of the bits, used to decide which gates are local.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Topology {
    NonLocal,
    /// Bit `i` sits at position `i` on a line.
    Line1D,
    /// Bit `i` sits at cell `coords[i] = (x, y)` of a `width` by `height` grid.
    Lattice2D {
        width: usize,
        height: usize,
        coords: Vec<(usize, usize)>,
    },
}

impl Topology {
    /// Validates that `coords` fits the grid and places no two bits on one cell.
    pub fn lattice(
        width: usize,
        height: usize,
        coords: Vec<(usize, usize)>,
    ) -> Result<Self, CircuitError> {
        let mut used = vec![false; width * height];
        for (bit, &(x, y)) in coords.iter().enumerate() {
            if x >= width || y >= height {
                return Err(CircuitError::OperandOutOfRange {
                    index: bit,
                    width: width * height,
                });
            }
            let cell = y * width + x;
            if used[cell] {
                return Err(CircuitError::DuplicateOperand(bit));
            }
            used[cell] = true;
        }
        Ok(Topology::Lattice2D {
            width,
            height,
            coords,
        })
    }

    /// Row-major grid: bit `y * width + x` at `(x, y)`.
    pub fn row_major(width: usize, height: usize) -> Self {
        let coords = (0..width * height).map(|i| (i % width, i / width)).collect();
        Topology::Lattice2D {
            width,
            height,
            coords,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Topology::NonLocal => "nonlocal",
            Topology::Line1D => "line1d",
            Topology::Lattice2D { .. } => "lattice2d",
        }
    }
}

/// A gate that does not act on neighbouring bits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub gate_index: usize,
    pub reason: String,
}

/// Lists every gate whose operands are not neighbours under `topology`.
pub fn check_locality(
    circuit: &Circuit,
    topology: &Topology,
) -> Result<Vec<Violation>, CircuitError> {
    match topology {
        Topology::NonLocal => Ok(Vec::new()),
        Topology::Line1D => Ok(circuit
            .gates
            .iter()
            .enumerate()
            .filter(|(_, g)| !line_local(g))
            .map(|(i, g)| Violation {
                gate_index: i,
                reason: format!("{g} operands are not a contiguous run"),
            })
            .collect()),
        Topology::Lattice2D { coords, .. } => {
            if coords.len() < circuit.width {
                return Err(CircuitError::TopologyMismatch {
                    expected: circuit.width,
                    got: coords.len(),
                });
            }
            Ok(circuit
                .gates
                .iter()
                .enumerate()
                .filter(|(_, g)| !lattice_local(g, coords))
                .map(|(i, g)| Violation {
                    gate_index: i,
                    reason: format!("{g} operand cells are not 4-connected"),
                })
                .collect())
        }
    }
}

fn line_local(g: &Gate) -> bool {
    let lo = g.operands.iter().min().copied().unwrap_or(0);
    let hi = g.operands.iter().max().copied().unwrap_or(0);
    // operands are distinct, so a span equal to the count means a contiguous run
    hi - lo + 1 == g.operands.len()
}

fn lattice_local(g: &Gate, coords: &[(usize, usize)]) -> bool {
    let cells: Vec<(usize, usize)> = g.operands.iter().map(|&q| coords[q]).collect();
    let adjacent = |a: (usize, usize), b: (usize, usize)| a.0.abs_diff(b.0) + a.1.abs_diff(b.1) == 1;
    let mut reached = vec![false; cells.len()];
    reached[0] = true;
    let mut frontier = vec![0];
    while let Some(i) = frontier.pop() {
        for j in 0..cells.len() {
            if !reached[j] && adjacent(cells[i], cells[j]) {
                reached[j] = true;
                frontier.push(j);
            }
        }
    }
    reached.into_iter().all(|r| r)
}
