//! Nonnegative reals stored by natural logarithm. The only representation
//! in which quantities like e^{e^{9.594}} ≈ 10^{6374} are computable at
//! all: its log (≈ 14676) is an ordinary double.

use std::cmp::Ordering;
use std::fmt;

use crate::bounds::BoundsError;
use crate::constants::LN_10;

/// A nonnegative real x held as ln x; zero is the `neg_infinity`
/// representation. Multiplication and powering are exact up to float
/// rounding of the logs; addition uses the stable log-sum identity
/// `ln(a+b) = ln a + ln(1 + e^{ln b − ln a})` with `ln a ≥ ln b`.
#[derive(Clone, Copy, Debug)]
pub struct LogReal {
    neg_infinity: bool,
    log_value: f64,
}

impl LogReal {
    /// The zero representation.
    pub fn zero() -> LogReal {
        LogReal { neg_infinity: true, log_value: f64::NEG_INFINITY }
    }

    pub fn one() -> LogReal {
        LogReal { neg_infinity: false, log_value: 0.0 }
    }

    /// Wrap an ordinary nonnegative double.
    pub fn from_value(x: f64) -> Result<LogReal, BoundsError> {
        if x.is_nan() || x < 0.0 {
            return Err(BoundsError::NegativeValue { value: x });
        }
        if x == 0.0 {
            return Ok(LogReal::zero());
        }
        Ok(LogReal { neg_infinity: false, log_value: x.ln() })
    }

    /// Wrap a value given directly by its natural log (the entry point for
    /// quantities too large to materialize).
    pub fn from_ln(log_value: f64) -> LogReal {
        debug_assert!(!log_value.is_nan());
        if log_value == f64::NEG_INFINITY {
            return LogReal::zero();
        }
        LogReal { neg_infinity: false, log_value }
    }

    pub fn is_zero(&self) -> bool {
        self.neg_infinity
    }

    /// Natural log of the represented value (−∞ for zero).
    pub fn ln(&self) -> f64 {
        self.log_value
    }

    /// The value as a double; overflows to +∞ (and underflows to 0) outside
    /// the double range.
    pub fn value(&self) -> f64 {
        if self.neg_infinity {
            0.0
        } else {
            self.log_value.exp()
        }
    }

    pub fn add(self, other: LogReal) -> LogReal {
        if self.neg_infinity {
            return other;
        }
        if other.neg_infinity {
            return self;
        }
        let (hi, lo) = if self.log_value >= other.log_value {
            (self.log_value, other.log_value)
        } else {
            (other.log_value, self.log_value)
        };
        LogReal { neg_infinity: false, log_value: hi + (lo - hi).exp().ln_1p() }
    }

    pub fn mul(self, other: LogReal) -> LogReal {
        if self.neg_infinity || other.neg_infinity {
            return LogReal::zero();
        }
        LogReal { neg_infinity: false, log_value: self.log_value + other.log_value }
    }

    pub fn pow(self, exponent: f64) -> Result<LogReal, BoundsError> {
        if self.neg_infinity {
            if exponent <= 0.0 {
                return Err(BoundsError::ZeroToNonpositivePower { exponent });
            }
            return Ok(LogReal::zero());
        }
        Ok(LogReal { neg_infinity: false, log_value: self.log_value * exponent })
    }
}

impl PartialEq for LogReal {
    fn eq(&self, other: &LogReal) -> bool {
        self.log_value == other.log_value
    }
}

impl PartialOrd for LogReal {
    fn partial_cmp(&self, other: &LogReal) -> Option<Ordering> {
        self.log_value.partial_cmp(&other.log_value)
    }
}

impl fmt::Display for LogReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.neg_infinity {
            write!(f, "0")
        } else if self.log_value.abs() < 100.0 * LN_10 {
            write!(f, "{:.6e}", self.log_value.exp())
        } else {
            write!(f, "10^{:.4}", self.log_value / LN_10)
        }
    }
}
