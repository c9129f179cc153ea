//! The single table of named numeric constants used across the crate.
//!
//! Every tuned constant in the explicit bounds lives here exactly once.
//! Irrational constants are stored twice: as a 41-significant-digit decimal
//! string (consumed by the high-precision checks in [`crate::bounds::highprec`])
//! and as the nearest `f64` for the double-precision evaluators. The digit
//! strings are themselves re-derived from scratch by the test suite, so a
//! typo here cannot survive `cargo test`.

/// Euler–Mascheroni constant γ, 41 significant digits.
pub const EULER_GAMMA_DIGITS: &str = "0.57721566490153286060651209008240243104216";

/// γ rounded to the nearest `f64`.
pub const EULER_GAMMA: f64 = 0.57721566490153286060651209008240243104216;

/// ln 10, 41 significant digits.
pub const LN_10_DIGITS: &str = "2.3025850929940456840179914546843642076011";

/// ln 10 rounded to the nearest `f64`.
pub const LN_10: f64 = 2.3025850929940456840179914546843642076011;

/// √10, 41 significant digits.
pub const SQRT_10_DIGITS: &str = "3.1622776601683793319988935444327185337196";

/// √10 rounded to the nearest `f64`.
pub const SQRT_10: f64 = 3.1622776601683793319988935444327185337196;

/// Leading constant of the single-sum bound
/// `|S(M,N)| ≤ 9.07 √N q^{3/16} (log q)^{1/4} (2^ω d)^{3/4} (q/φ)^{1/2}`.
pub const MAIN_BOUND_CONSTANT: f64 = 9.07;

/// Leading constant of the corollary form that replaces the `q/φ(q)` factor
/// by its loglog ceiling: `12.11 √N q^{3/16} (log q)^{1/4} (2^ω d)^{3/4}
/// (loglog q + 1.69/loglog q)^{1/2}`.
pub const COROLLARY_CONSTANT: f64 = 12.11;

/// Additive coefficient inside the corollary's loglog factor (= a ceiling
/// for 3e^{-γ}).
pub const COROLLARY_LOGLOG_SHIFT: f64 = 1.69;

/// Per-level constant λ₂′/((log q)^{1/4} (q/φ)^{1/2} (2^ω d)^{3/4}) of the
/// shift recursion `M(N) ≤ √N q^{3/16} λ₂′ + 2 M(N/10)`.
pub const RECURSION_LEVEL_CONSTANT: f64 = 3.3325;

/// Geometric decay ratio 2/√10 produced by one unrolling step of the
/// recursion (factor 2 per level, √(1/10) from the shrinking window).
pub const RECURSION_DECAY: f64 = 2.0 / SQRT_10;

/// The explicit bounds assume `loglog q ≥ 9.594`, i.e. `q ≥ e^{e^{9.594}}`.
pub const LOGLOG_Q_THRESHOLD: f64 = 9.594;

/// Exponent in the divisor-count ceiling `d(n) ≤ n^{1.066/loglog n}` (n ≥ 3).
pub const DIVISOR_CEILING_EXPONENT: f64 = 1.066;

/// Second-order coefficient in the prime-count ceiling
/// `ω(n) ≤ log n/loglog n + 1.45743 log n/(loglog n)²` (n ≥ 3).
pub const OMEGA_CEILING_COEFF: f64 = 1.45743;

/// Additive term in the totient floor `φ(n) > n/(e^γ loglog n + 3/loglog n)`.
pub const TOTIENT_FLOOR_SHIFT: f64 = 3.0;

/// Expected 6-significant-figure leading digits of the threshold modulus
/// `e^{e^{9.594}} ≈ 8.03104 × 10^{6373}`.
pub const THRESHOLD_LEADING_DIGITS: f64 = 8.03104;

/// Expected decimal exponent of the threshold modulus.
pub const THRESHOLD_EXPONENT10: i64 = 6373;
