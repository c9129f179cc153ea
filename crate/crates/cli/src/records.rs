//! Serializable output shapes. Every struct declares its fields in
//! alphabetical order: `serde_json::Value` maps are sorted, so emitted
//! JSON parsed into a `Value` and re-serialized reproduces the original
//! bytes exactly — the round-trip contract the integration tests pin.

use serde::{Deserialize, Serialize};

use crate::config::QRange;

/// One checked instance of a named statement; `holds ⇔ lhs ≤ rhs + the
/// suite's stated tolerance` (exact-arithmetic suites compute `holds`
/// exactly and report lhs/rhs as doubles).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub holds: bool,
    pub instance: String,
    pub lhs: f64,
    pub margin: f64,
    pub rhs: f64,
    pub statement: String,
}

impl VerificationRecord {
    pub fn new(statement: &str, instance: String, lhs: f64, rhs: f64, holds: bool) -> Self {
        VerificationRecord {
            holds,
            instance,
            lhs,
            margin: rhs - lhs,
            rhs,
            statement: statement.to_string(),
        }
    }
}

/// Echo of the inputs that determine a run byte-for-byte. Parallelism is
/// deliberately absent: worker count must never change the output.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Meta {
    pub command: String,
    pub format: String,
    pub q_range: String,
    pub samples: u64,
    pub seed: u64,
}

impl Meta {
    pub fn new(command: &str, format: &str, q_range: QRange, samples: u64, seed: u64) -> Meta {
        Meta {
            command: command.to_string(),
            format: format.to_string(),
            q_range: q_range.to_string(),
            samples,
            seed,
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Summary {
    pub failed: u64,
    pub min_margin: f64,
    pub passed: u64,
    pub total: u64,
}

impl Summary {
    pub fn of(records: &[VerificationRecord]) -> Summary {
        let failed = records.iter().filter(|r| !r.holds).count() as u64;
        let min_margin =
            records.iter().map(|r| r.margin).fold(f64::INFINITY, f64::min);
        Summary {
            failed,
            min_margin: if records.is_empty() { 0.0 } else { min_margin },
            passed: records.len() as u64 - failed,
            total: records.len() as u64,
        }
    }
}

/// The `{meta, records, summary}` envelope for verification suites.
#[derive(Debug, Serialize, Deserialize)]
pub struct RunOutput {
    pub meta: Meta,
    pub records: Vec<VerificationRecord>,
    pub summary: Summary,
}

/// One row of the bound-comparison sweep (JSON form; the CSV writer
/// orders columns q, chi_index, n, measured, trivial, pv_shape,
/// theorem_rhs_relaxed, ratio).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub chi_index: u64,
    pub measured: f64,
    pub n: u64,
    pub pv_shape: f64,
    pub q: u64,
    pub ratio: f64,
    pub theorem_rhs_relaxed: f64,
    pub trivial: f64,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct SweepSummary {
    pub max_ratio: f64,
    pub min_ratio: f64,
    pub rows: u64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SweepOutput {
    pub meta: Meta,
    pub records: Vec<SweepRow>,
    pub summary: SweepSummary,
}

/// One character of a table (CSV column order: q, index, order,
/// conductor, primitive, principal).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharRow {
    pub conductor: u64,
    pub index: u64,
    pub order: u64,
    pub primitive: bool,
    pub principal: bool,
    pub q: u64,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct CharSummary {
    pub characters: u64,
    pub primitive: u64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CharOutput {
    pub meta: Meta,
    pub records: Vec<CharRow>,
    pub summary: CharSummary,
}

/// A bound value in both scales; `value` is absent when exp(ln) would
/// overflow a double (threshold-scale inputs).
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct BoundValue {
    pub ln: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
}

impl BoundValue {
    pub fn from_ln(ln: f64) -> BoundValue {
        // exp overflows past ~709.8; suppress the linear form there.
        let value = if ln.abs() < 700.0 { Some(ln.exp()) } else { None };
        BoundValue { ln, value }
    }
}

/// Echo block for the single-point `bound` command.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundInputsEcho {
    pub d_ln: f64,
    pub log_n: f64,
    pub log_q: f64,
    pub omega: u32,
    pub phi_ratio: f64,
    pub relaxed: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BoundOutput {
    pub corollary: BoundValue,
    pub inputs: BoundInputsEcho,
    pub out_of_hypothesis: bool,
    pub polya_vinogradov: BoundValue,
    pub theorem: BoundValue,
    pub trivial: BoundValue,
}
