use serde::Serialize;

use crate::error::AnalysisError;
use crate::scalar::Scalar;

/// Boltzmann constant in J/K.
pub const BOLTZMANN: f64 = 1.380_649e-23;

/// `2 sqrt(7/8) + (7/8) log2 7`, the constant in the entropy upper bound.
pub fn kappa<S: Scalar>() -> S {
    let r = S::lit(7.0) / S::lit(8.0);
    S::lit(2.0) * r.sqrt() + r * S::lit(7.0).log2()
}

/// Entropy generated per level-`L` gate, in bits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntropyReport<S> {
    /// `G~^L * kappa * sqrt(g)`
    pub upper_bound_bits: S,
    /// `g * (3E)^(L - 1)`
    pub lower_bound_bits: S,
    pub max_useful_level: S,
    pub landauer_joules: Option<S>,
}

pub fn entropy_bounds<S: Scalar>(
    g_tilde: u64,
    e: u64,
    level: u32,
    g: S,
) -> Result<EntropyReport<S>, AnalysisError> {
    if level == 0 {
        return Err(AnalysisError::OutOfRange {
            name: "L",
            value: 0.0,
            range: "[1, inf)",
        });
    }
    if !(g > S::zero() && g <= S::one()) {
        return Err(AnalysisError::OutOfRange {
            name: "g",
            value: g.to_f64().unwrap_or(f64::NAN),
            range: "(0, 1]",
        });
    }
    let upper = S::lit(g_tilde as f64).powi(level as i32) * kappa::<S>() * g.sqrt();
    let lower = g * S::lit(3.0 * e as f64).powi(level as i32 - 1);
    let max_level = if g < S::one() {
        max_useful_level(g, e)?
    } else {
        S::one()
    };
    Ok(EntropyReport {
        upper_bound_bits: upper,
        lower_bound_bits: lower,
        max_useful_level: max_level,
        landauer_joules: None,
    })
}

/// Level past which the entropy lower bound stops shrinking:
/// `ln(1/g) / ln(3E) + 1`.
pub fn max_useful_level<S: Scalar>(g: S, e: u64) -> Result<S, AnalysisError> {
    if !(g > S::zero() && g < S::one()) {
        return Err(AnalysisError::OutOfRange {
            name: "g",
            value: g.to_f64().unwrap_or(f64::NAN),
            range: "(0, 1)",
        });
    }
    if e == 0 {
        return Err(AnalysisError::BadExpansion(0.0));
    }
    Ok(g.recip().ln() / S::lit(3.0 * e as f64).ln() + S::one())
}

/// Minimum heat to erase `delta_h_bits` bits at `temperature_kelvin`.
pub fn landauer_energy<S: Scalar>(delta_h_bits: S, temperature_kelvin: S) -> Result<S, AnalysisError> {
    for (name, v) in [("delta_h", delta_h_bits), ("temperature", temperature_kelvin)] {
        if v.is_nan() || v < S::zero() {
            return Err(AnalysisError::OutOfRange {
                name,
                value: v.to_f64().unwrap_or(f64::NAN),
                range: "[0, inf)",
            });
        }
    }
    Ok(S::lit(BOLTZMANN) * temperature_kelvin * S::LN_2() * delta_h_bits)
}

/// One evaluation of both entropy bounds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridPoint {
    pub g_tilde: u64,
    pub e: u64,
    pub level: u32,
    pub g: f64,
    pub lower_bits: f64,
    pub upper_bits: f64,
    pub lower_le_upper: bool,
}

pub const GRID_G_TILDE: [u64; 2] = [9, 11];
pub const GRID_E: [u64; 3] = [6, 8, 11];
pub const GRID_LEVELS: [u32; 3] = [1, 2, 3];
pub const GRID_G: [f64; 3] = [1e-4, 1e-3, 1e-2];

/// Both bounds over the standard parameter grid. Points where the lower
/// bound exceeds the upper one are flagged rather than rejected, since the
/// two count gates differently.
pub fn entropy_grid() -> Vec<GridPoint> {
    let mut out = Vec::new();
    for &gt in &GRID_G_TILDE {
        for &e in &GRID_E {
            for &l in &GRID_LEVELS {
                for &g in &GRID_G {
                    let r = entropy_bounds::<f64>(gt, e, l, g).expect("grid is in range");
                    out.push(GridPoint {
                        g_tilde: gt,
                        e,
                        level: l,
                        g,
                        lower_bits: r.lower_bound_bits,
                        upper_bits: r.upper_bound_bits,
                        lower_le_upper: r.lower_bound_bits <= r.upper_bound_bits,
                    });
                }
            }
        }
    }
    out
}
