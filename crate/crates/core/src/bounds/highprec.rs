//! Fixed-point decimal arithmetic over big integers, used by the
//! constant-consistency and threshold checks. Fifty fractional digits —
//! the narrowest comparison settled here has a margin above 1e−40, so a
//! few units of truncation error in the last place are immaterial.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::constants::LN_10_DIGITS;

/// Number of stored fractional decimal digits.
const SCALE_DIGITS: u32 = 50;

/// A real number represented as `mantissa / 10^50`. Arithmetic truncates
/// toward zero at the 50th fractional digit; every routine below performs
/// few enough operations that the accumulated error stays under 1e−45.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Dec(BigInt);

fn scale() -> BigInt {
    BigInt::from(10u32).pow(SCALE_DIGITS)
}

impl Dec {
    pub fn from_int(n: i64) -> Dec {
        Dec(BigInt::from(n) * scale())
    }

    /// Parse a plain decimal literal such as `"-3.3325"` or
    /// `"0.5772156649…"`. Fractional digits beyond the 50th are dropped.
    pub fn from_decimal_str(s: &str) -> Dec {
        let (sign, digits) = match s.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, s),
        };
        let (int_part, frac_part) = match digits.split_once('.') {
            Some((i, f)) => (i, f),
            None => (digits, ""),
        };
        let mut frac: String = frac_part.chars().take(SCALE_DIGITS as usize).collect();
        while frac.len() < SCALE_DIGITS as usize {
            frac.push('0');
        }
        let mantissa: BigInt = format!("{int_part}{frac}").parse().expect("decimal literal");
        Dec(mantissa * sign)
    }

    pub fn add(&self, other: &Dec) -> Dec {
        Dec(&self.0 + &other.0)
    }

    pub fn sub(&self, other: &Dec) -> Dec {
        Dec(&self.0 - &other.0)
    }

    pub fn mul(&self, other: &Dec) -> Dec {
        Dec(&self.0 * &other.0 / scale())
    }

    pub fn div(&self, other: &Dec) -> Dec {
        assert!(!other.0.is_zero(), "division by zero");
        Dec(&self.0 * scale() / &other.0)
    }

    pub fn abs(&self) -> Dec {
        Dec(self.0.abs())
    }

    /// 10^exp for `exp ≥ −50` (handy for exact tolerances).
    pub fn pow10(exp: i32) -> Dec {
        let shifted = exp + SCALE_DIGITS as i32;
        assert!(shifted >= 0, "below the fixed-point resolution");
        Dec(BigInt::from(10u32).pow(shifted as u32))
    }

    /// Integer part, truncated toward zero.
    pub fn trunc(&self) -> BigInt {
        &self.0 / scale()
    }

    /// e^x by argument halving, a truncated Taylor series, and repeated
    /// squaring. Exact enough for |x| ≤ 20 (the largest argument used is
    /// 9.594).
    pub fn exp(&self) -> Dec {
        let mut halvings = 0u32;
        let mut x = self.clone();
        let half = Dec(scale() / 2);
        while x.abs() > half {
            x = Dec(x.0 / 2);
            halvings += 1;
        }
        // Σ xⁿ/n!: with |x| ≤ 1/2 the terms shrink at least geometrically,
        // reaching the 50-digit floor within a few dozen steps.
        let mut sum = Dec::from_int(1);
        let mut term = Dec::from_int(1);
        let mut n = 1i64;
        while !term.0.is_zero() {
            term = term.mul(&x).div(&Dec::from_int(n));
            sum = sum.add(&term);
            n += 1;
            assert!(n < 500, "exp series failed to terminate");
        }
        for _ in 0..halvings {
            sum = sum.mul(&sum);
        }
        sum
    }

    /// √x via the integer square root of the rescaled mantissa.
    pub fn sqrt(&self) -> Dec {
        assert!(!self.0.is_negative(), "sqrt of a negative value");
        Dec((&self.0 * scale()).sqrt())
    }

    /// Natural log by Newton iteration on `exp(y) = x`, seeded from a
    /// double-precision estimate. Each step doubles the correct digits, so
    /// three steps take the 16-digit seed past the 50-digit scale.
    pub fn ln(&self, seed: f64) -> Dec {
        assert!(self.0.is_positive(), "ln of a nonpositive value");
        let mut y = Dec::from_decimal_str(&format!("{seed:.16}"));
        for _ in 0..3 {
            // y ← y + x·e^{−y} − 1
            let correction = self.mul(&y.neg().exp()).sub(&Dec::from_int(1));
            y = y.add(&correction);
        }
        y
    }

    fn neg(&self) -> Dec {
        Dec(-&self.0)
    }

    pub fn to_f64(&self) -> f64 {
        // Round-trip through the decimal rendering: the standard float
        // parser rounds correctly to nearest, which direct BigInt→f64
        // conversion plus a division would not.
        self.to_decimal_string(SCALE_DIGITS as usize).parse().expect("parsable decimal")
    }

    /// Decimal rendering with the requested number of fractional digits
    /// (≤ 50), truncated.
    pub fn to_decimal_string(&self, frac_digits: usize) -> String {
        assert!(frac_digits <= SCALE_DIGITS as usize);
        let sign = if self.0.is_negative() { "-" } else { "" };
        let abs = self.0.abs();
        let int = &abs / scale();
        let frac = &abs % scale();
        let frac_str = format!("{:0>width$}", frac, width = SCALE_DIGITS as usize);
        format!("{sign}{int}.{}", &frac_str[..frac_digits])
    }
}

/// ln 10 to 50 digits, Newton-refined from the stored 41-digit constant and
/// self-checked against it: a corrupted table entry cannot pass.
pub(crate) fn ln_10() -> Dec {
    let refined = Dec::from_int(10).ln(std::f64::consts::LN_10);
    let table = Dec::from_decimal_str(LN_10_DIGITS);
    let drift = refined.sub(&table).abs();
    assert!(
        drift < Dec::pow10(-39),
        "refined ln 10 disagrees with the stored digit table"
    );
    refined
}
