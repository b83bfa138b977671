use serde::Serialize;

use crate::error::AnalysisError;
use crate::scalar::Scalar;

/// Growth of gate and bit counts with concatenation depth.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Blowup<S> {
    /// `(3(G - 2))^L`
    pub gate_factor: u64,
    /// `9^L`
    pub bit_factor: u64,
    /// `log2(3(G - 2))`: gates grow as `(log T)` to this power.
    pub gate_exponent: S,
    /// `log2 9`
    pub bit_exponent: S,
}

pub fn blowup<S: Scalar>(g_count: u64, level: u32) -> Result<Blowup<S>, AnalysisError> {
    if g_count < 3 {
        return Err(AnalysisError::OutOfRange {
            name: "G",
            value: g_count as f64,
            range: "[3, inf)",
        });
    }
    let per_level = 3 * (g_count - 2);
    let gate_factor = per_level
        .checked_pow(level)
        .ok_or(AnalysisError::Overflow("gate blowup"))?;
    let bit_factor = 9u64
        .checked_pow(level)
        .ok_or(AnalysisError::Overflow("bit blowup"))?;
    Ok(Blowup {
        gate_factor,
        bit_factor,
        gate_exponent: S::lit(per_level as f64).log2(),
        bit_exponent: S::lit(9.0).log2(),
    })
}

/// Threshold of `k` lattice levels followed by line levels.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MixedThreshold<S> {
    pub k: u32,
    /// `rho2 * (rho1 / rho2)^(1 / 2^k)`
    pub rho: S,
    /// `rho / rho2`
    pub ratio: S,
}

pub fn mixed_threshold<S: Scalar>(k: u32, rho1: S, rho2: S) -> Result<MixedThreshold<S>, AnalysisError> {
    if !(rho1 > S::zero() && rho1 <= rho2) {
        return Err(AnalysisError::OutOfRange {
            name: "rho1",
            value: rho1.to_f64().unwrap_or(f64::NAN),
            range: "(0, rho2]",
        });
    }
    let base = rho1 / rho2;
    let ratio = if k == 0 {
        base
    } else {
        base.powf(S::lit(0.5).powi(k as i32))
    };
    let rho = if k == 0 { rho1 } else { rho2 * ratio };
    Ok(MixedThreshold { k, rho, ratio })
}

/// Ratios `rho(k) / rho2` for `k = 0..=k_max`.
pub fn mixed_table<S: Scalar>(k_max: u32, rho1: S, rho2: S) -> Result<Vec<MixedThreshold<S>>, AnalysisError> {
    (0..=k_max).map(|k| mixed_threshold(k, rho1, rho2)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blowup_examples() {
        let b: Blowup<f64> = blowup(9, 2).unwrap();
        assert_eq!((b.gate_factor, b.bit_factor), (441, 81));
        assert!((b.bit_exponent - 3.169925).abs() < 1e-6);
        let c: Blowup<f64> = blowup(11, 0).unwrap();
        assert_eq!((c.gate_factor, c.bit_factor), (1, 1));
        assert!((c.gate_exponent - 4.754888).abs() < 1e-6);
        assert!(blowup::<f64>(2, 1).is_err());
        assert!(blowup::<f64>(11, 40).is_err());
    }

    #[test]
    fn mixed_endpoints() {
        let (r1, r2) = (1.0 / 2109.0, 1.0 / 273.0);
        let m0 = mixed_threshold(0, r1, r2).unwrap();
        assert_eq!(m0.rho, r1);
        assert_eq!(m0.ratio, r1 / r2);
        assert!(mixed_threshold(1, r2, r1).is_err());
    }

    #[test]
    fn ratio_rises_to_one() {
        let t = mixed_table(30, 1.0 / 2340.0, 1.0 / 360.0).unwrap();
        for w in t.windows(2) {
            assert!(w[1].ratio > w[0].ratio || w[1].ratio == 1.0);
            assert!(w[1].ratio <= 1.0);
        }
        assert!(1.0 - t[30].ratio < 1e-8);
    }

    #[test]
    fn single_precision_table() {
        let t = mixed_table(5, 1.0f32 / 2109.0, 1.0 / 273.0).unwrap();
        assert!((t[1].ratio - 0.3598).abs() < 1e-3);
    }
}
