use std::fmt;

use serde::ser::{Serialize, SerializeMap, Serializer};

use super::gate::{Gate, GateKind};

/// Per-kind operation counts. Every gate, SWAP3 and INIT3 included, is one operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GateCensus {
    counts: [usize; 7],
}

impl GateCensus {
    pub fn from_gates<'a>(gates: impl IntoIterator<Item = &'a Gate>) -> Self {
        let mut c = GateCensus::default();
        for g in gates {
            c.add(g.kind, 1);
        }
        c
    }

    pub fn add(&mut self, kind: GateKind, n: usize) {
        self.counts[kind.index()] += n;
    }

    pub fn get(&self, kind: GateKind) -> usize {
        self.counts[kind.index()]
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn total_without_init(&self) -> usize {
        self.total() - self.get(GateKind::Init3)
    }

    /// MAJ and MAJINV together.
    pub fn majority_type(&self) -> usize {
        self.get(GateKind::Maj) + self.get(GateKind::MajInv)
    }

    /// Nearest-neighbour exchanges represented by the SWAP and SWAP3 gates.
    pub fn elementary_swaps(&self) -> usize {
        GateKind::ALL
            .iter()
            .map(|&k| self.get(k) * k.elementary_swaps())
            .sum()
    }

    /// Nonzero kinds in declaration order.
    pub fn iter(&self) -> impl Iterator<Item = (GateKind, usize)> + '_ {
        GateKind::ALL
            .into_iter()
            .map(|k| (k, self.get(k)))
            .filter(|&(_, n)| n > 0)
    }
}

impl Serialize for GateCensus {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        for (k, n) in self.iter() {
            map.serialize_entry(k.name(), &n)?;
        }
        map.serialize_entry("total", &self.total())?;
        map.serialize_entry("total_without_init", &self.total_without_init())?;
        map.end()
    }
}

impl fmt::Display for GateCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, n) in self.iter() {
            write!(f, "{k}:{n} ")?;
        }
        write!(f, "total:{}", self.total())
    }
}
