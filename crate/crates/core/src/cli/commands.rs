use std::ffi::OsString;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use super::output::{emit, render_json, write_atomic};
use super::{CliError, CompileArgs, Format, SimArgs, SimulateArgs, SweepArgs, VerifyArgs};
use crate::build::{
    build_recovery_1d, build_recovery_2d, build_recovery_nonlocal, compile_cycle_with, recovery_2d_topology,
    CodeLevel, LayoutStrategy,
};
use crate::circuit::{
    check_locality, evaluate, from_json, is_permutation, to_json, Circuit, Gate, Topology,
    MAX_PERMUTATION_WIDTH,
};
use crate::sim::{
    enumerate_single_faults_both, sweep_threshold_with, write_sweep_csv, NoiseModel, PbitExperiment, SweepRow,
};

/// MAJ truth table, first operand written as the leftmost bit.
const MAJ_TABLE: [(u8, u8); 8] = [
    (0b000, 0b000),
    (0b001, 0b001),
    (0b010, 0b010),
    (0b011, 0b111),
    (0b100, 0b011),
    (0b101, 0b110),
    (0b110, 0b101),
    (0b111, 0b100),
];

fn maj_table_holds() -> bool {
    MAJ_TABLE.iter().all(|&(i, o)| {
        let mut bits = [i & 4 != 0, i & 2 != 0, i & 1 != 0];
        Gate::maj(0, 1, 2).apply_to(&mut bits);
        bits == [o & 4 != 0, o & 2 != 0, o & 1 != 0]
    })
}

fn corrects_single_errors(c: &Circuit) -> bool {
    if c.inputs.len() != 3 || c.outputs.len() != 3 {
        return false;
    }
    [false, true].iter().all(|&word| {
        [None, Some(0), Some(1), Some(2)].iter().all(|flip| {
            let mut data = [word; 3];
            if let Some(i) = *flip {
                data[i] = !word;
            }
            c.load(&data)
                .and_then(|s| evaluate(c, &s))
                .map(|out| c.read_outputs(&out) == vec![word; 3])
                .unwrap_or(false)
        })
    })
}

fn verify_one(name: &str, c: &Circuit, topo: &Topology) -> Result<(bool, Value), CliError> {
    let reversible = if c.width <= MAX_PERMUTATION_WIDTH {
        Some(is_permutation(&c.without_init()).map_err(|e| CliError::Usage(e.to_string()))?)
    } else {
        None
    };
    let violations = check_locality(c, topo).map_err(|e| CliError::Usage(e.to_string()))?;
    let correction = corrects_single_errors(c);
    let faults = if c.inputs.len() == 3 {
        Some(enumerate_single_faults_both(c))
    } else {
        None
    };
    let faults_ok = faults.as_ref().is_some_and(|f| f.passed());
    let passed = reversible != Some(false) && violations.is_empty() && correction && faults_ok;
    let report = json!({
        "circuit": name,
        "topology": topo.name(),
        "census": c.census(),
        "reversible_without_init": reversible,
        "locality_violations": violations,
        "corrects_single_errors": correction,
        "single_faults": faults,
        "passed": passed,
    });
    Ok((passed, report))
}

fn builtin_recoveries(layout: LayoutStrategy) -> Vec<(&'static str, Circuit, Topology)> {
    let nonlocal = || ("nonlocal", build_recovery_nonlocal(), Topology::NonLocal);
    let line = || ("1d", build_recovery_1d(), Topology::Line1D);
    let lattice = || ("2d", build_recovery_2d(), recovery_2d_topology());
    match layout {
        LayoutStrategy::NonLocal => vec![nonlocal()],
        LayoutStrategy::OneD | LayoutStrategy::Mixed(0) => vec![line()],
        LayoutStrategy::TwoD => vec![lattice()],
        LayoutStrategy::Mixed(_) => vec![lattice(), line()],
    }
}

fn load_circuit(path: &Path) -> Result<Circuit, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    from_json(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub fn verify(a: VerifyArgs) -> Result<(), CliError> {
    let targets = match &a.circuit {
        Some(path) => {
            let c = load_circuit(path)?;
            let topo = match a.layout {
                LayoutStrategy::NonLocal => Topology::NonLocal,
                LayoutStrategy::OneD | LayoutStrategy::Mixed(0) => Topology::Line1D,
                _ => Topology::row_major(3, c.width.div_ceil(3)),
            };
            vec![("file", c, topo)]
        }
        None => builtin_recoveries(a.layout),
    };
    let table = maj_table_holds();
    let mut passed = table;
    let mut reports = Vec::new();
    for (name, c, topo) in &targets {
        let (ok, r) = verify_one(name, c, topo)?;
        passed &= ok;
        reports.push(r);
    }
    let census = reports.first().map(|r| r["census"].clone()).unwrap_or(Value::Null);
    let report = json!({
        "layout": a.layout,
        "maj_truth_table": table,
        "census": census,
        "circuits": reports,
        "passed": passed,
    });
    let text = render_json(report);
    emit(&text, None)?;
    if let Some(p) = &a.out {
        write_atomic(p, text.as_bytes())?;
    }
    if passed {
        Ok(())
    } else {
        Err(CliError::Verification(format!("{} recovery checks did not all pass", a.layout)))
    }
}

fn meta_path(out: &Path) -> PathBuf {
    let mut s: OsString = out.as_os_str().to_owned();
    s.push(".meta.json");
    PathBuf::from(s)
}

pub fn compile(a: CompileArgs) -> Result<(), CliError> {
    let cycle = compile_cycle_with(a.gate, CodeLevel(a.level), a.layout, a.init)?;
    let predicted = cycle
        .predicted()
        .map(|(gates, bits)| json!({"gates": gates, "bits_per_logical_bit": bits}));
    let summary = json!({
        "level": a.level,
        "layout": a.layout,
        "init": a.init,
        "base": a.gate.name(),
        "width": cycle.circuit.width,
        "census": cycle.census,
        "counted_total": cycle.counted_total(),
        "predicted": predicted,
    });
    let mut meta = summary.clone();
    meta["logical_inputs"] = json!(cycle.logical_inputs);
    meta["logical_outputs"] = json!(cycle.logical_outputs);
    meta["topology"] = serde_json::to_value(&cycle.topology).expect("topology serializes");
    let mut circuit_text = to_json(&cycle.circuit);
    circuit_text.push('\n');
    match &a.out {
        Some(out) => {
            write_atomic(out, circuit_text.as_bytes())?;
            write_atomic(&meta_path(out), render_json(meta).as_bytes())?;
            emit(&render_json(summary), None)
        }
        None => {
            eprint!("{}", render_json(summary));
            emit(&circuit_text, None)
        }
    }
}

fn experiment(c: &SimArgs) -> Result<PbitExperiment, CliError> {
    Ok(PbitExperiment::new(CodeLevel(c.level), c.layout, c.init)?)
}

fn rows_json(rows: &[SweepRow]) -> Value {
    serde_json::to_value(rows).expect("rows serialize")
}

fn render_rows(rows: &[SweepRow], format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(render_json(rows_json(rows))),
        Format::Csv => {
            let mut buf = Vec::new();
            write_sweep_csv(rows, &mut buf)?;
            String::from_utf8(buf).map_err(|e| CliError::Runtime(e.to_string()))
        }
    }
}

pub fn simulate(a: SimulateArgs) -> Result<(), CliError> {
    let noise = NoiseModel::new(a.g)?;
    let exp = experiment(&a.common)?;
    let report = exp.run(&noise, a.common.trials, a.common.seed)?;
    let row = SweepRow {
        g: a.g,
        level: a.common.level,
        layout: a.common.layout,
        report,
    };
    let text = match a.format {
        Format::Json => {
            let mut v = rows_json(std::slice::from_ref(&row))[0].clone();
            v["init"] = json!(a.common.init);
            v["operations"] = json!(exp.cycle.counted_total());
            render_json(v)
        }
        Format::Csv => render_rows(&[row], Format::Csv)?,
    };
    emit(&text, a.common.out.as_deref())
}

pub fn sweep(a: SweepArgs) -> Result<(), CliError> {
    let c = &a.common;
    let rows = sweep_threshold_with(&a.g_list, CodeLevel(c.level), c.layout, c.init, c.trials, c.seed)?;
    emit(&render_rows(&rows, a.format)?, c.out.as_deref())
}
