use clap::Subcommand;
use num_rational::Ratio;
use serde_json::{json, Value};

use super::output::{emit, render_json};
use super::CliError;
use crate::analysis::{
    blowup, entropy_bounds, entropy_grid, kappa, landauer_energy, logical_error_bound, max_useful_level,
    min_concat_level, mixed_table, mixed_threshold, mixed_layout_thresholds, threshold, Blowup,
};

#[derive(Debug, Subcommand)]
pub enum AnalyzeCommand {
    /// Exact threshold 1 / (3 C(G, 2)) for G locations per recovery step
    Threshold {
        #[arg(long = "G")]
        g_count: u64,
    },
    /// Logical error bound after k levels of concatenation
    Bound {
        #[arg(long, value_parser = parse_number)]
        g: f64,
        #[arg(long, value_parser = parse_number)]
        rho: f64,
        #[arg(long)]
        k: u32,
    },
    /// Smallest level keeping a computation of T gates reliable
    Level {
        #[arg(long = "T", value_parser = parse_number)]
        t: f64,
        #[arg(long, value_parser = parse_number)]
        g: f64,
        #[arg(long, value_parser = parse_number)]
        rho: f64,
    },
    /// Gate and bit overhead at a given level
    Blowup {
        #[arg(long = "G")]
        g_count: u64,
        #[arg(long)]
        level: u32,
    },
    /// Threshold with k lattice levels below line levels
    Mixed {
        #[arg(long, required_unless_present = "table2")]
        k: Option<u32>,
        #[arg(long, value_parser = parse_number, required_unless_present = "table2")]
        rho1: Option<f64>,
        #[arg(long, value_parser = parse_number, required_unless_present = "table2")]
        rho2: Option<f64>,
        /// Print the standard ratio table instead
        #[arg(long, conflicts_with_all = ["k", "rho1", "rho2"])]
        table2: bool,
    },
    /// Mixed-layout threshold ratios for k = 0..=k-max
    Table2 {
        #[arg(long = "k-max", default_value_t = 5)]
        k_max: u32,
    },
    /// Entropy generated per logical gate
    Entropy {
        #[arg(long, value_parser = parse_number)]
        g: f64,
        #[arg(long = "E")]
        e: u64,
        #[arg(long = "G-tilde", requires = "level")]
        g_tilde: Option<u64>,
        #[arg(long, requires = "g_tilde")]
        level: Option<u32>,
        /// Kelvin; adds the Landauer heat of the lower bound
        #[arg(long, value_parser = parse_number, requires = "level")]
        temperature: Option<f64>,
    },
    /// Minimum heat to erase a number of bits
    Landauer {
        #[arg(long, value_parser = parse_number)]
        bits: f64,
        #[arg(long, value_parser = parse_number)]
        temperature: f64,
    },
    /// Both entropy bounds over the standard grid
    Grid,
}

/// Accepts decimals and `p/q` fractions.
fn parse_number(s: &str) -> Result<f64, String> {
    let v = match s.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.trim().parse().map_err(|e| format!("{e}"))?;
            let q: f64 = q.trim().parse().map_err(|e| format!("{e}"))?;
            p / q
        }
        None => s.trim().parse().map_err(|e| format!("{e}"))?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("`{s}` is not a finite number"))
    }
}

fn fraction(r: Ratio<u64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn blowup_json(g_count: u64, level: u32, b: Blowup<f64>) -> Value {
    json!({
        "G": g_count,
        "level": level,
        "gate_factor": b.gate_factor,
        "bit_factor": b.bit_factor,
        "gate_exponent": b.gate_exponent,
        "bit_exponent": b.bit_exponent,
    })
}

fn ratio_table(k_max: u32) -> Result<Value, CliError> {
    let (rho1, rho2) = mixed_layout_thresholds();
    let rows: Vec<Value> = mixed_table(k_max, rho1, rho2)?
        .into_iter()
        .map(|m| json!({"k": m.k, "rho": m.rho, "ratio": m.ratio, "ratio_2dp": format!("{:.2}", m.ratio)}))
        .collect();
    Ok(json!({"rho1": "1/2109", "rho2": "1/273", "rows": rows}))
}

fn evaluate(cmd: AnalyzeCommand) -> Result<Value, CliError> {
    Ok(match cmd {
        AnalyzeCommand::Threshold { g_count } => {
            let r = threshold::<u64>(g_count)?;
            json!({
                "G": g_count,
                "threshold": fraction(r),
                "value": *r.numer() as f64 / *r.denom() as f64,
            })
        }
        AnalyzeCommand::Bound { g, rho, k } => json!({
            "g": g,
            "rho": rho,
            "k": k,
            "bound": logical_error_bound(g, rho, k)?,
        }),
        AnalyzeCommand::Level { t, g, rho } => json!({
            "T": t,
            "g": g,
            "rho": rho,
            "level": min_concat_level(t, g, rho)?,
        }),
        AnalyzeCommand::Blowup { g_count, level } => blowup_json(g_count, level, blowup(g_count, level)?),
        AnalyzeCommand::Mixed {
            k: Some(k),
            rho1: Some(rho1),
            rho2: Some(rho2),
            table2: false,
        } => {
            let m = mixed_threshold(k, rho1, rho2)?;
            json!({"k": k, "rho1": rho1, "rho2": rho2, "rho": m.rho, "ratio": m.ratio})
        }
        AnalyzeCommand::Mixed { .. } => ratio_table(5)?,
        AnalyzeCommand::Table2 { k_max } => ratio_table(k_max)?,
        AnalyzeCommand::Entropy {
            g,
            e,
            g_tilde,
            level,
            temperature,
        } => {
            let mut v = json!({
                "g": g,
                "E": e,
                "kappa": kappa::<f64>(),
                "max_useful_level": max_useful_level(g, e)?,
            });
            if let (Some(gt), Some(l)) = (g_tilde, level) {
                let mut r = entropy_bounds(gt, e, l, g)?;
                if let Some(t) = temperature {
                    r.landauer_joules = Some(landauer_energy(r.lower_bound_bits, t)?);
                }
                v["G_tilde"] = json!(gt);
                v["level"] = json!(l);
                v["upper_bound_bits"] = json!(r.upper_bound_bits);
                v["lower_bound_bits"] = json!(r.lower_bound_bits);
                v["landauer_joules"] = json!(r.landauer_joules);
            }
            v
        }
        AnalyzeCommand::Landauer { bits, temperature } => json!({
            "bits": bits,
            "temperature": temperature,
            "joules": landauer_energy(bits, temperature)?,
        }),
        AnalyzeCommand::Grid => json!(entropy_grid()),
    })
}

pub fn run(cmd: AnalyzeCommand) -> Result<(), CliError> {
    emit(&render_json(evaluate(cmd)?), None)
}
