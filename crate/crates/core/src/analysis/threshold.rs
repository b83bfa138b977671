use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedMul, PrimInt, ToPrimitive};

use crate::error::AnalysisError;
use crate::scalar::Scalar;

/// Exact error threshold `1 / (3 * C(G, 2))` for `G` operations per
/// encoded bit per cycle.
pub fn threshold<I>(g_count: I) -> Result<Ratio<I>, AnalysisError>
where
    I: PrimInt + Integer + CheckedMul,
{
    let two = I::one() + I::one();
    if g_count < two {
        return Err(AnalysisError::GateCountTooSmall(g_count.to_u64().unwrap_or(0)));
    }
    let (a, b) = if g_count.is_even() {
        (g_count / two, g_count - I::one())
    } else {
        (g_count, (g_count - I::one()) / two)
    };
    let pairs = a
        .checked_mul(&b)
        .and_then(|p| p.checked_mul(&(two + I::one())))
        .ok_or(AnalysisError::Overflow("threshold denominator"))?;
    Ok(Ratio::new(I::one(), pairs))
}

/// Floating rendering of [`threshold`].
pub fn threshold_value<S: Scalar>(g_count: u64) -> Result<S, AnalysisError> {
    let r = threshold(g_count)?;
    Ok(S::lit(r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thresholds_by_gate_count() {
        for (g, d) in [(9u64, 108u64), (11, 165), (14, 273), (16, 360), (38, 2109), (40, 2340)] {
            assert_eq!(threshold(g).unwrap(), Ratio::new(1, d));
        }
        assert_eq!(threshold(2u32).unwrap(), Ratio::new(1, 3));
    }

    #[test]
    fn rejects_small_and_overflowing_counts() {
        assert_eq!(threshold(1u64), Err(AnalysisError::GateCountTooSmall(1)));
        assert!(matches!(threshold(200u8), Err(AnalysisError::Overflow(_))));
        assert!(threshold(u64::MAX).is_err());
    }

    #[test]
    fn strictly_decreasing() {
        let mut prev = threshold(2u64).unwrap();
        for g in 3..200u64 {
            let t = threshold(g).unwrap();
            assert!(t < prev);
            prev = t;
        }
    }

    #[test]
    fn float_rendering() {
        let v: f64 = threshold_value(9).unwrap();
        assert!((v - 1.0 / 108.0).abs() < 1e-15);
        let w: f32 = threshold_value(9).unwrap();
        assert!((w - 1.0 / 108.0).abs() < 1e-7);
    }
}
