//! Emission: compact JSON (no trailing newline, so emitted bytes equal
//! re-serialized bytes) or RFC-4180 CSV with floats at 17 significant
//! digits, plus the colored one-line summary on stderr.

use std::io::{self, IsTerminal, Write};
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;

use crate::records::{CharRow, SweepRow, VerificationRecord};

/// Serialize compactly and write verbatim — to the file if given, else
/// to standard output.
pub fn write_json<T: Serialize>(payload: &T, output: Option<&Path>) -> Result<()> {
    let json = serde_json::to_string(payload).context("serializing output")?;
    write_bytes(json.as_bytes(), output)
}

/// `{:.16e}`: one leading digit plus sixteen fractional digits — the 17
/// significant digits that make a double round-trip losslessly.
fn float(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_csv_records(records: &[VerificationRecord], output: Option<&Path>) -> Result<()> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["statement", "instance", "lhs", "rhs", "margin", "holds"])?;
    for r in records {
        w.write_record([
            r.statement.as_str(),
            r.instance.as_str(),
            &float(r.lhs),
            &float(r.rhs),
            &float(r.margin),
            if r.holds { "true" } else { "false" },
        ])?;
    }
    write_bytes(&w.into_inner()?, output)
}

pub fn write_csv_sweep(rows: &[SweepRow], output: Option<&Path>) -> Result<()> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "q",
        "chi_index",
        "n",
        "measured",
        "trivial",
        "pv_shape",
        "theorem_rhs_relaxed",
        "ratio",
    ])?;
    for r in rows {
        w.write_record([
            r.q.to_string(),
            r.chi_index.to_string(),
            r.n.to_string(),
            float(r.measured),
            float(r.trivial),
            float(r.pv_shape),
            float(r.theorem_rhs_relaxed),
            float(r.ratio),
        ])?;
    }
    write_bytes(&w.into_inner()?, output)
}

pub fn write_csv_chars(rows: &[CharRow], output: Option<&Path>) -> Result<()> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["q", "index", "order", "conductor", "primitive", "principal"])?;
    for r in rows {
        w.write_record([
            r.q.to_string(),
            r.index.to_string(),
            r.order.to_string(),
            r.conductor.to_string(),
            r.primitive.to_string(),
            r.principal.to_string(),
        ])?;
    }
    write_bytes(&w.into_inner()?, output)
}

fn write_bytes(bytes: &[u8], output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, bytes)
            .with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(bytes).context("writing standard output")?;
            stdout.flush().context("flushing standard output")
        }
    }
}

/// One status line on stderr; green/red only when stderr is a terminal
/// and `NO_COLOR` is unset.
pub fn summary_line(command: &str, passed: u64, failed: u64, min_margin: f64) {
    let colored = std::env::var_os("NO_COLOR").is_none() && io::stderr().is_terminal();
    let (verdict, open, close) = if failed == 0 {
        ("ok", "\x1b[32m", "\x1b[0m")
    } else {
        ("FAILED", "\x1b[31m", "\x1b[0m")
    };
    let (open, close) = if colored { (open, close) } else { ("", "") };
    eprintln!(
        "{command}: {open}{verdict}{close} — {} passed, {failed} failed, min margin {min_margin:.6e}",
        passed
    );
}

/// Status line for the tabulation commands, which have no pass/fail.
pub fn table_line(command: &str, rows: usize, note: &str) {
    eprintln!("{command}: {rows} rows ({note})");
}
