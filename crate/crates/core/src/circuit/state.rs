use std::fmt;

use serde::{Deserialize, Serialize};

/// A fixed-length register of classical bits.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BitState(Vec<bool>);

impl BitState {
    pub fn zeros(width: usize) -> Self {
        BitState(vec![false; width])
    }

    pub fn from_bits(bits: impl IntoIterator<Item = bool>) -> Self {
        BitState(bits.into_iter().collect())
    }

    /// Bit `i` of the state is bit `i` of `value` (least significant first).
    pub fn from_u64(width: usize, value: u64) -> Self {
        assert!(width <= 64, "from_u64 supports at most 64 bits");
        BitState((0..width).map(|i| (value >> i) & 1 == 1).collect())
    }

    pub fn to_u64(&self) -> u64 {
        assert!(self.0.len() <= 64, "to_u64 supports at most 64 bits");
        self.0
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &b)| acc | (u64::from(b) << i))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> bool {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, value: bool) {
        self.0[i] = value;
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.0
    }

    pub fn as_mut_slice(&mut self) -> &mut [bool] {
        &mut self.0
    }

    pub fn into_inner(self) -> Vec<bool> {
        self.0
    }

    /// Bits at the listed positions, in list order.
    pub fn select(&self, positions: &[usize]) -> Vec<bool> {
        positions.iter().map(|&p| self.0[p]).collect()
    }

    pub fn count_ones(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }
}

impl From<Vec<bool>> for BitState {
    fn from(v: Vec<bool>) -> Self {
        BitState(v)
    }
}

impl fmt::Display for BitState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u64_round_trip() {
        for v in 0..64u64 {
            assert_eq!(BitState::from_u64(6, v).to_u64(), v);
        }
        assert_eq!(BitState::from_u64(3, 0b001).as_slice(), &[true, false, false]);
    }

    #[test]
    fn display_and_select() {
        let s = BitState::from_bits([true, false, true]);
        assert_eq!(s.to_string(), "101");
        assert_eq!(s.select(&[2, 1]), vec![true, false]);
        assert_eq!(s.count_ones(), 2);
    }
}
