//! Run configuration shared by every subcommand: the inclusive modulus
//! range, output format, and the knobs that must round-trip into the
//! emitted metadata block.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::ValueEnum;

/// An inclusive integer range, written `A..B` or `A..=B` on the command
/// line; both forms mean the closed interval [A, B].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QRange {
    pub start: u64,
    pub end: u64,
}

impl QRange {
    pub fn new(start: u64, end: u64) -> QRange {
        QRange { start, end }
    }

    pub fn iter(self) -> impl Iterator<Item = u64> {
        self.start..=self.end
    }

}

impl fmt::Display for QRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..={}", self.start, self.end)
    }
}

impl FromStr for QRange {
    type Err = String;

    fn from_str(s: &str) -> Result<QRange, String> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| format!("expected A..B or A..=B, got {s:?}"))?;
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let start: u64 = lo.trim().parse().map_err(|e| format!("bad range start {lo:?}: {e}"))?;
        let end: u64 = hi.trim().parse().map_err(|e| format!("bad range end {hi:?}: {e}"))?;
        if start > end {
            return Err(format!("empty range: {start} > {end}"));
        }
        Ok(QRange { start, end })
    }
}

/// `a/b` fractions (`997/996`) or plain decimals (`1.001004`) for the
/// totient ratio q/φ(q).
pub fn parse_ratio(s: &str) -> Result<f64, String> {
    let value = match s.split_once('/') {
        Some((num, den)) => {
            let num: f64 = num.trim().parse().map_err(|e| format!("bad numerator: {e}"))?;
            let den: f64 = den.trim().parse().map_err(|e| format!("bad denominator: {e}"))?;
            if den == 0.0 {
                return Err("zero denominator".into());
            }
            num / den
        }
        None => s.trim().parse().map_err(|e| format!("bad ratio: {e}"))?,
    };
    if !value.is_finite() || value < 1.0 {
        return Err(format!("q/φ(q) must be a finite value ≥ 1, got {value}"));
    }
    Ok(value)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    pub fn as_str(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

/// Everything a suite needs besides its own parameters.
pub struct RunConfig {
    pub q_range: QRange,
    pub seed: u64,
    pub samples: u64,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub parallelism: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_forms_parse() {
        assert_eq!("1..3000".parse::<QRange>().unwrap(), QRange::new(1, 3000));
        assert_eq!("3..=300".parse::<QRange>().unwrap(), QRange::new(3, 300));
        assert_eq!("7..7".parse::<QRange>().unwrap(), QRange::new(7, 7));
        assert!("9..2".parse::<QRange>().is_err());
        assert!("12".parse::<QRange>().is_err());
        assert_eq!(QRange::new(2, 5).to_string(), "2..=5");
    }

    #[test]
    fn ratios_parse() {
        assert_eq!(parse_ratio("997/996").unwrap(), 997.0 / 996.0);
        assert_eq!(parse_ratio("1.5").unwrap(), 1.5);
        assert_eq!(parse_ratio("1").unwrap(), 1.0);
        assert!(parse_ratio("0.5").is_err());
        assert!(parse_ratio("3/0").is_err());
        assert!(parse_ratio("x").is_err());
    }
}
