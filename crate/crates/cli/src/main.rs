mod args;
mod commands;

use std::collections::BTreeSet;
use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::{json, Value};

use args::{extract_tolerances, Cli, ConfigError, Format};
use commands::Outcome;

const SCHEMA: u32 = 1;

fn main() -> ExitCode {
    match real_main() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(ConfigError::Clap(e)) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            ExitCode::SUCCESS
        }
        Err(ConfigError::Clap(e)) => {
            let _ = e.print();
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("ckgeom: {e}");
            ExitCode::from(2)
        }
    }
}

fn real_main() -> Result<bool, ConfigError> {
    let (argv, tolerances) = extract_tolerances(std::env::args().collect())?;
    let cli = Cli::try_parse_from(argv)?;
    let cfg = cli.common.verify_config(tolerances)?;
    let outcome = commands::run(&cli.command, &cfg)?;
    let passed = outcome.passed();

    let text = match cli.common.format {
        Format::Json => {
            let mut v = render_json(cli.command.name(), &cfg, &outcome);
            v["passed"] = json!(passed);
            let mut s = serde_json::to_string_pretty(&v).expect("serializable report");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(&outcome.rows)?,
    };
    match &cli.common.out {
        Some(path) => std::fs::write(path, &text)
            .map_err(|e| ConfigError::Invalid(format!("cannot write {}: {e}", path.display())))?,
        None => {
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
        }
    }

    for c in outcome.checks.iter().filter(|c| !c.passed) {
        eprintln!("FAIL {}: max defect {:e} > tolerance {:e} over {} samples", c.name, c.max_defect, c.tolerance, c.samples);
        for e in &c.errors {
            eprintln!("  {e}");
        }
    }
    Ok(passed)
}

fn render_json(command: &str, cfg: &ck_core::verify::VerifyConfig, o: &Outcome) -> Value {
    let failures: Vec<&str> = o.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    let mut v = json!({
        "schema": SCHEMA,
        "command": command,
        "config": {
            "grid": cfg.grid,
            "z": cfg.z_values,
            "samples": cfg.samples,
            "seed": cfg.seed,
            "tolerances": cfg.tolerances,
        },
        "checks": o.checks,
        "failures": failures,
    });
    match &o.suites {
        Some(s) => v["suites"] = json!(s),
        None => v["results"] = json!(o.rows),
    }
    v
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Rows as CSV with the union of their keys as header, in sorted order.
fn render_csv(rows: &[Value]) -> Result<String, ConfigError> {
    let keys: BTreeSet<&str> = rows
        .iter()
        .filter_map(Value::as_object)
        .flat_map(|m| m.keys().map(String::as_str))
        .collect();
    let io_err = |e: csv::Error| ConfigError::Invalid(format!("csv: {e}"));
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(&keys).map_err(io_err)?;
    for r in rows {
        w.write_record(keys.iter().map(|k| cell(r.get(*k).unwrap_or(&Value::Null)))).map_err(io_err)?;
    }
    let bytes = w.into_inner().map_err(|e| ConfigError::Invalid(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("utf-8 csv"))
}
