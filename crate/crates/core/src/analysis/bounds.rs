use crate::error::AnalysisError;
use crate::scalar::Scalar;

/// Relative slack on `<=` comparisons so that values equal in exact arithmetic are
/// not pushed the wrong way by rounding. Widened for types coarser than f64.
fn slack<S: Scalar>() -> S {
    S::lit(1e-12).max(S::epsilon() * S::lit(64.0))
}

fn check_rate<S: Scalar>(name: &'static str, v: S, range: &'static str, ok: bool) -> Result<(), AnalysisError> {
    if ok {
        Ok(())
    } else {
        Err(AnalysisError::OutOfRange {
            name,
            value: v.to_f64().unwrap_or(f64::NAN),
            range,
        })
    }
}

/// Logical error bound after `k` levels: `rho * (g / rho)^(2^k)`.
pub fn logical_error_bound<S: Scalar>(g: S, rho: S, k: u32) -> Result<S, AnalysisError> {
    check_rate("rho", rho, "(0, inf)", rho > S::zero())?;
    check_rate("g", g, "[0, inf)", g >= S::zero())?;
    if k == 0 {
        return Ok(g);
    }
    let mut x = g / rho;
    for _ in 0..k {
        x = x * x;
    }
    Ok(rho * x)
}

/// Smallest level `L` with `logical_error_bound(g, rho, L) <= 1 / t`.
///
/// Starts from the closed-form estimate `log2(ln(t rho) / ln(rho / g))`
/// and settles the ceiling by evaluating the bound directly.
pub fn min_concat_level<S: Scalar>(t: S, g: S, rho: S) -> Result<u32, AnalysisError> {
    check_rate("T", t, "[1, inf)", t >= S::one())?;
    check_rate("rho", rho, "(0, 1]", rho > S::zero() && rho <= S::one())?;
    check_rate("g", g, "[0, 1]", g >= S::zero() && g <= S::one())?;
    let target = t.recip() * (S::one() + slack::<S>());
    let meets = |l: u32| logical_error_bound(g, rho, l).map(|b| b <= target);
    if meets(0)? {
        return Ok(0);
    }
    if g >= rho {
        return Err(AnalysisError::AboveThreshold {
            g: g.to_f64().unwrap_or(f64::NAN),
            threshold: rho.to_f64().unwrap_or(f64::NAN),
        });
    }
    // g > 1/t and g < rho give t * rho > 1 and rho / g > 1, so both logs are positive
    let estimate = ((t * rho).ln() / (rho / g).ln()).log2().ceil();
    let mut l = estimate.to_u32().unwrap_or(0).max(1);
    while !meets(l)? {
        l += 1;
        if l > 64 {
            return Err(AnalysisError::Overflow("concatenation level"));
        }
    }
    while l > 1 && meets(l - 1)? {
        l -= 1;
    }
    Ok(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::threshold_value;

    #[test]
    fn bound_examples() {
        assert_eq!(logical_error_bound(0.003, 0.01, 0).unwrap(), 0.003);
        for k in 0..6 {
            assert_eq!(logical_error_bound(0.01, 0.01, k).unwrap(), 0.01);
        }
        let b = logical_error_bound(0.001f64, 0.01, 2).unwrap();
        assert!((b - 1e-6).abs() < 1e-18);
        assert!(logical_error_bound(0.1, 0.0, 1).is_err());
        assert!(logical_error_bound(-0.1, 0.1, 1).is_err());
    }

    #[test]
    fn bound_follows_pair_recursion() {
        for g_count in [9u64, 11, 14, 40] {
            let rho: f64 = threshold_value(g_count).unwrap();
            let pairs = 3.0 * (g_count * (g_count - 1) / 2) as f64;
            let mut gk = rho / 7.0;
            for k in 0..5 {
                let next = logical_error_bound(rho / 7.0, rho, k + 1).unwrap();
                let rec = pairs * gk * gk;
                assert!((next - rec).abs() <= 1e-12 * rec, "G={g_count} k={k}");
                gk = next;
            }
        }
    }

    #[test]
    fn level_examples() {
        assert_eq!(min_concat_level(1e6, 1e-3, 1e-2).unwrap(), 2);
        assert_eq!(min_concat_level(1.0, 1e-3, 1e-2).unwrap(), 0);
        // the bare gate already meets 1e-3, so no concatenation is needed
        assert_eq!(min_concat_level(1e3, 1e-3, 1e-2).unwrap(), 0);
        assert_eq!(min_concat_level(1e4, 1e-3, 1e-2).unwrap(), 1);
        assert_eq!(min_concat_level(1e6f32, 1e-3, 1e-2).unwrap(), 2);
        assert!(matches!(
            min_concat_level(1e6, 2e-2, 1e-2),
            Err(AnalysisError::AboveThreshold { .. })
        ));
    }

    #[test]
    fn level_is_minimal() {
        for &t in &[10.0, 1e3, 1e5, 1e9, 1e15] {
            for &frac in &[0.9, 0.5, 0.1, 0.01] {
                let (rho, g) = (1.0 / 165.0, frac / 165.0);
                let l = min_concat_level(t, g, rho).unwrap();
                assert!(logical_error_bound(g, rho, l).unwrap() <= (1.0 + 1e-12) / t);
                if l > 0 {
                    assert!(logical_error_bound(g, rho, l - 1).unwrap() > 1.0 / t);
                }
            }
        }
    }
}
