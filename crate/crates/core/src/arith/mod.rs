//! Multiplicative arithmetic over 64-bit integers.
//!
//! Provides the factorization-backed profile (ω(n), d(n), φ(n), μ(n)),
//! exact coprime counting with its inclusion–exclusion error term, and the
//! explicit growth ceilings/floors
//!
//! ```text
//! φ(n) > n / (e^γ loglog n + 3/loglog n)          (n ≥ 3)
//! d(n) ≤ n^{1.066/loglog n}                        (n ≥ 3)
//! ω(n) ≤ log n/loglog n + 1.45743 log n/(loglog n)²  (n ≥ 3)
//! ```
//!
//! that the bound evaluators in [`crate::bounds`] rely on.

mod factor;
mod sieve;

pub use factor::{factorize, is_prime};
pub(crate) use factor::pow_mod;
pub use sieve::Sieve;

use thiserror::Error;

use crate::constants;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("coprime counting requires 1 <= a <= q (got a={a}, q={q})")]
    InvalidCoprimeRange { a: u64, q: u64 },
    #[error("growth ceilings are defined for n >= 3 (got n={n})")]
    BelowGrowthDomain { n: u64 },
}

/// Prime factorization `n = ∏ pᵢ^eᵢ` with the primes strictly ascending.
/// `n = 1` is represented by the empty factor list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub(crate) fn from_parts(n: u64, factors: Vec<(u64, u32)>) -> Factorization {
        debug_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert_eq!(
            factors.iter().map(|&(p, e)| p.pow(e)).product::<u64>(),
            n.max(1)
        );
        Factorization { n, factors }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs, primes ascending.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn omega(&self) -> u32 {
        self.factors.len() as u32
    }

    /// All divisors of `n`, sorted ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.factors {
            let prev = divs.len();
            let mut power = 1u64;
            for _ in 0..e {
                power *= p;
                for i in 0..prev {
                    divs.push(divs[i] * power);
                }
            }
        }
        divs.sort_unstable();
        divs
    }

    /// The squarefree divisors of `n` with their Möbius signs, i.e. every
    /// `(d, μ(d))` with `μ(d) ≠ 0` and `d | n`.
    pub fn squarefree_divisors_signed(&self) -> Vec<(u64, i64)> {
        let primes: Vec<u64> = self.factors.iter().map(|&(p, _)| p).collect();
        let mut out = Vec::with_capacity(1 << primes.len());
        for mask in 0u32..(1 << primes.len()) {
            let mut d = 1u64;
            for (i, &p) in primes.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    d *= p;
                }
            }
            let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            out.push((d, sign));
        }
        out
    }
}

/// The multiplicative profile of `n`: number of distinct primes ω(n),
/// divisor count d(n), totient φ(n), and Möbius value μ(n).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArithProfile {
    pub n: u64,
    pub omega: u32,
    pub d: u64,
    pub phi: u64,
    pub mu: i8,
}

impl ArithProfile {
    pub fn from_factorization(f: &Factorization) -> ArithProfile {
        let mut d = 1u64;
        let mut phi = 1u64;
        for &(p, e) in f.factors() {
            d *= e as u64 + 1;
            phi *= p.pow(e - 1) * (p - 1);
        }
        let mu = if f.factors().iter().any(|&(_, e)| e > 1) {
            0
        } else if f.omega() % 2 == 0 {
            1
        } else {
            -1
        };
        ArithProfile { n: f.n(), omega: f.omega(), d, phi, mu }
    }

    /// `q/φ(q)` as a double.
    pub fn phi_ratio(&self) -> f64 {
        self.n as f64 / self.phi as f64
    }
}

/// The multiplicative profile of `n ≥ 1`.
pub fn profile(n: u64) -> ArithProfile {
    assert!(n >= 1, "profile is defined for n >= 1");
    ArithProfile::from_factorization(&factorize(n))
}

/// Inverse of `a` mod `m` for coprime inputs (extended Euclid).
pub(crate) fn mod_inverse(a: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let quotient = r0 / r1;
        (r0, r1) = (r1, r0 - quotient * r1);
        (t0, t1) = (t1, t0 - quotient * t1);
    }
    debug_assert_eq!(r0, 1, "inputs must be coprime");
    t0.rem_euclid(m as i128) as u64
}

/// Exact count of integers in `1..=a` coprime to `q`, with the exact
/// inclusion–exclusion error `E = count − a·φ(q)/q` carried as the integer
/// numerator of `E = error_num / q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoprimeCount {
    pub a: u64,
    pub q: u64,
    pub count: u64,
    pub omega: u32,
    pub phi: u64,
    /// `count·q − a·φ(q)`; never overflows because `|E| < 2^{ω(q)−1}`.
    pub error_num: i128,
}

impl CoprimeCount {
    /// `E = count − a·φ(q)/q` as a double.
    pub fn error(&self) -> f64 {
        self.error_num as f64 / self.q as f64
    }

    /// The ceiling `2^{ω(q)−1}` (one half when `q = 1`).
    pub fn error_ceiling(&self) -> f64 {
        2f64.powi(self.omega as i32 - 1)
    }

    /// `|E| < 2^{ω(q)−1}` decided in exact integer arithmetic:
    /// `2·|error_num| < 2^{ω(q)}·q`.
    pub fn error_within_ceiling(&self) -> bool {
        let lhs = 2u128 * self.error_num.unsigned_abs();
        let rhs = (1u128 << self.omega) * self.q as u128;
        lhs < rhs
    }

    /// `2^{ω(q)−1} − |E|` as a double (positive when the ceiling holds).
    pub fn margin(&self) -> f64 {
        self.error_ceiling() - self.error().abs()
    }
}

/// Count integers in `1..=a` coprime to `q` by Möbius inclusion–exclusion
/// over the squarefree divisors of `q`. Requires `1 ≤ a ≤ q`.
pub fn coprime_count(a: u64, q: u64) -> Result<CoprimeCount, ArithError> {
    if a == 0 || a > q {
        return Err(ArithError::InvalidCoprimeRange { a, q });
    }
    Ok(coprime_count_from(a, &factorize(q)))
}

/// [`coprime_count`] with a precomputed factorization of `q`, for sweeps
/// that scan many `a` against the same modulus. Requires `1 ≤ a ≤ q`.
pub fn coprime_count_from(a: u64, q_factored: &Factorization) -> CoprimeCount {
    let q = q_factored.n();
    assert!(a >= 1 && a <= q, "coprime_count requires 1 <= a <= q");
    let mut count: i64 = 0;
    for (d, sign) in q_factored.squarefree_divisors_signed() {
        count += sign * (a / d) as i64;
    }
    let count = count as u64;
    let prof = ArithProfile::from_factorization(q_factored);
    let cq = count as u128 * q as u128;
    let ap = a as u128 * prof.phi as u128;
    let error_num = if cq >= ap {
        (cq - ap) as i128
    } else {
        -((ap - cq) as i128)
    };
    CoprimeCount { a, q, count, omega: prof.omega, phi: prof.phi, error_num }
}

/// One explicit ceiling or floor comparison; `slack > 0` means the
/// inequality held with room to spare.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundCheck {
    pub actual: f64,
    pub bound: f64,
    /// Signed so that positive slack always means "holds": `actual − bound`
    /// for floors, `bound − actual` for ceilings.
    pub slack: f64,
    pub holds: bool,
}

/// The three explicit growth comparisons for one `n ≥ 3`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GrowthBounds {
    pub n: u64,
    /// `φ(n) > n/(e^γ loglog n + 3/loglog n)` (strict floor).
    pub totient_floor: BoundCheck,
    /// `d(n) ≤ n^{1.066/loglog n}`.
    pub divisor_ceiling: BoundCheck,
    /// `ω(n) ≤ log n/loglog n + 1.45743 log n/(loglog n)²`.
    pub omega_ceiling: BoundCheck,
}

/// Evaluate the three growth comparisons for `n ≥ 3`.
pub fn growth_bounds(n: u64) -> Result<GrowthBounds, ArithError> {
    if n < 3 {
        return Err(ArithError::BelowGrowthDomain { n });
    }
    Ok(growth_bounds_from(&profile(n)))
}

/// [`growth_bounds`] from a precomputed profile (sieve-backed sweeps).
/// Requires `n ≥ 3`.
pub fn growth_bounds_from(prof: &ArithProfile) -> GrowthBounds {
    assert!(prof.n >= 3, "growth bounds require n >= 3");
    let log_n = (prof.n as f64).ln();
    let loglog_n = log_n.ln();

    let totient_bound =
        prof.n as f64 / (constants::EULER_GAMMA.exp() * loglog_n + constants::TOTIENT_FLOOR_SHIFT / loglog_n);
    let totient_actual = prof.phi as f64;
    let totient_slack = totient_actual - totient_bound;

    let divisor_bound = (log_n * constants::DIVISOR_CEILING_EXPONENT / loglog_n).exp();
    let divisor_actual = prof.d as f64;
    let divisor_slack = divisor_bound - divisor_actual;

    let omega_bound =
        log_n / loglog_n + constants::OMEGA_CEILING_COEFF * log_n / (loglog_n * loglog_n);
    let omega_actual = prof.omega as f64;
    let omega_slack = omega_bound - omega_actual;

    GrowthBounds {
        n: prof.n,
        totient_floor: BoundCheck {
            actual: totient_actual,
            bound: totient_bound,
            slack: totient_slack,
            holds: totient_slack > 0.0,
        },
        divisor_ceiling: BoundCheck {
            actual: divisor_actual,
            bound: divisor_bound,
            slack: divisor_slack,
            holds: divisor_slack >= 0.0,
        },
        omega_ceiling: BoundCheck {
            actual: omega_actual,
            bound: omega_bound,
            slack: omega_slack,
            holds: omega_slack >= 0.0,
        },
    }
}
