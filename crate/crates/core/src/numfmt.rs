//! Text rendering of floats for reports.

/// Renders `x` with nine significant digits, trimming trailing zeros.
pub fn sig9(x: f64) -> String {
    sig(x, 9)
}

pub fn sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = digits as i32 - 1 - magnitude;
    if !(-4..=20).contains(&magnitude) || decimals > 24 {
        let s = format!("{:.*e}", digits - 1, x);
        let (mant, exp) = s.split_once('e').expect("exponent form");
        return format!("{}e{}", trim(mant), exp);
    }
    trim(&format!("{:.*}", decimals.max(0) as usize, x)).to_string()
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
