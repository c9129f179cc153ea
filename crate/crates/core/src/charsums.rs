//! Character-sum quantities with their explicit ceilings: interval sums
//! S(M,N), the maximal window sums behind 𝓜(y), shifted fourth moments,
//! complete sums of χ over factored quartic polynomials, and the v(l)
//! pair-counting statistics.
//!
//! Values come from exact turn fractions and are accumulated in complex
//! double precision; the inequality checks use an absolute tolerance of
//! 1e−6 on quantities of magnitude ≤ q², far above the accumulated
//! rounding (≤ q·2^{−50}).

use num_complex::Complex64;
use num_integer::gcd;
use thiserror::Error;

use crate::arith::{mod_inverse, profile};
use crate::characters::{Character, UnitGroup};

/// Absolute tolerance for the asserted sum-versus-ceiling comparisons.
pub const SUM_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharsumError {
    #[error("the bound requires a primitive character (conductor {conductor} ≠ modulus {q})")]
    NotPrimitive { q: u64, conductor: u64 },
    #[error("window length must be positive")]
    ZeroWindow,
    #[error("window length {b} must satisfy B² < q (q = {q})")]
    WindowTooWide { b: u64, q: u64 },
    #[error("fewer than three of the residues {m:?} are distinct mod {q}")]
    TooFewDistinct { m: [u64; 4], q: u64 },
    #[error("v-statistics require 1 <= A <= q (got A={a}, q={q})")]
    InvalidCoprimeBound { a: u64, q: u64 },
    #[error("v-statistics require a nonempty interval")]
    EmptyInterval,
}

/// Prefix sums of character values: `P[j] = Σ_{n=1}^{j} χ(n)` for
/// `0 ≤ j ≤ q`, split into re/im arrays, with the periodic extension
/// `P(j) = ⌊j/q⌋·P[q] + P[j mod q]` for arbitrary j. The split-array
/// layout keeps the window scans vectorizable.
struct PrefixTable {
    q: u64,
    re: Vec<f64>,
    im: Vec<f64>,
}

impl PrefixTable {
    fn new(group: &UnitGroup, chi: &Character) -> PrefixTable {
        let q = group.q();
        let mut re = Vec::with_capacity(q as usize + 1);
        let mut im = Vec::with_capacity(q as usize + 1);
        let (mut sum_re, mut sum_im) = (0.0, 0.0);
        re.push(0.0);
        im.push(0.0);
        for n in 1..=q {
            if let Some(v) = chi.eval(group, n) {
                let z = v.to_complex();
                sum_re += z.re;
                sum_im += z.im;
            }
            re.push(sum_re);
            im.push(sum_im);
        }
        PrefixTable { q, re, im }
    }

    #[inline]
    fn at(&self, j: u64) -> (f64, f64) {
        let periods = (j / self.q) as f64;
        let rem = (j % self.q) as usize;
        let full_re = self.re[self.q as usize];
        let full_im = self.im[self.q as usize];
        (periods * full_re + self.re[rem], periods * full_im + self.im[rem])
    }

    /// `S(M,N) = P(M+N) − P(M)`.
    #[inline]
    fn window(&self, m: u64, n: u64) -> (f64, f64) {
        let (ar, ai) = self.at(m + n);
        let (br, bi) = self.at(m);
        (ar - br, ai - bi)
    }
}

/// The interval sum `S(M,N) = Σ_{n=M+1}^{M+N} χ(n)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntervalSum {
    pub m: u64,
    pub n: u64,
    pub value: Complex64,
    pub abs: f64,
}

/// Accumulate `S(M,N)` term by term from exact character values.
pub fn interval_sum(group: &UnitGroup, chi: &Character, m: u64, n: u64) -> IntervalSum {
    let mut value = Complex64::new(0.0, 0.0);
    for k in m + 1..=m + n {
        value += chi.value(group, k);
    }
    IntervalSum { m, n, value, abs: value.norm() }
}

/// The maximal interval sum `max |S(M,N)|` over `0 ≤ M < q`, `1 ≤ N ≤ y`,
/// with the lexicographically smallest witness.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntervalSumMax {
    pub q: u64,
    pub y: u64,
    pub max_abs: f64,
    pub witness_m: u64,
    pub witness_n: u64,
}

/// Evaluate `𝓜(y)` by prefix sums in O(q·y). Ties are broken toward the
/// smallest M, then the smallest N.
pub fn max_interval_sum(group: &UnitGroup, chi: &Character, y: u64) -> IntervalSumMax {
    assert!(y >= 1, "maximal interval sum requires y >= 1");
    let q = group.q();
    let prefix = PrefixTable::new(group, chi);
    let mut best = -1.0f64;
    let (mut witness_m, mut witness_n) = (0u64, 1u64);
    for m in 0..q {
        for n in 1..=y {
            let (re, im) = prefix.window(m, n);
            let norm_sq = re * re + im * im;
            if norm_sq > best {
                best = norm_sq;
                witness_m = m;
                witness_n = n;
            }
        }
    }
    IntervalSumMax { q, y, max_abs: best.max(0.0).sqrt(), witness_m, witness_n }
}

/// Maximum of `|S(M,N)|` over `0 ≤ M < q` at one fixed window length N.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WindowMax {
    pub n: u64,
    pub max_abs: f64,
    pub witness_m: u64,
}

/// Fixed-length window maxima for a batch of lengths, sharing one prefix
/// table; each entry scans all q window positions.
pub fn max_window_sums(group: &UnitGroup, chi: &Character, lengths: &[u64]) -> Vec<WindowMax> {
    let q = group.q();
    let prefix = PrefixTable::new(group, chi);
    lengths
        .iter()
        .map(|&n| {
            assert!(n >= 1, "window length must be positive");
            let mut best = -1.0f64;
            let mut witness_m = 0u64;
            for m in 0..q {
                let (re, im) = prefix.window(m, n);
                let norm_sq = re * re + im * im;
                if norm_sq > best {
                    best = norm_sq;
                    witness_m = m;
                }
            }
            WindowMax { n, max_abs: best.max(0.0).sqrt(), witness_m }
        })
        .collect()
}

/// The log-spaced window-length grid used by the bound sweeps: powers of
/// two up to `n_max`, plus `n_max` itself.
pub fn window_length_grid(n_max: u64) -> Vec<u64> {
    let mut grid = Vec::new();
    let mut n = 1;
    while n < n_max {
        grid.push(n);
        n *= 2;
    }
    grid.push(n_max.max(1));
    grid.dedup();
    grid
}

/// One fourth-moment comparison: the shifted-window moment against its
/// explicit ceiling `(7B²−6B)q + 4·8^{ω(q)}√q·B⁴·d(q)³`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourthMomentCheck {
    pub q: u64,
    pub b: u64,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub holds: bool,
}

/// Compute `Σ_{l=1}^{q} |Σ_{b=1}^{B} χ(l+b)|⁴` for a primitive χ and an
/// integer window `1 ≤ B < √q`, and compare against the ceiling.
pub fn fourth_moment_check(
    group: &UnitGroup,
    chi: &Character,
    b: u64,
) -> Result<FourthMomentCheck, CharsumError> {
    let q = group.q();
    if !chi.is_primitive() {
        return Err(CharsumError::NotPrimitive { q, conductor: chi.conductor() });
    }
    if b == 0 {
        return Err(CharsumError::ZeroWindow);
    }
    if b * b >= q {
        return Err(CharsumError::WindowTooWide { b, q });
    }
    let prefix = PrefixTable::new(group, chi);
    let mut lhs = 0.0f64;
    for l in 1..=q {
        let (re, im) = prefix.window(l, b);
        let norm_sq = re * re + im * im;
        lhs += norm_sq * norm_sq;
    }
    let prof = profile(q);
    let bf = b as f64;
    let rhs = (7.0 * bf * bf - 6.0 * bf) * q as f64
        + 4.0 * 8f64.powi(prof.omega as i32) * (q as f64).sqrt() * bf.powi(4)
            * (prof.d as f64).powi(3);
    let margin = rhs - lhs;
    Ok(FourthMomentCheck { q, b, lhs, rhs, margin, holds: lhs <= rhs + SUM_TOLERANCE })
}

/// One complete polynomial character sum against its ceiling: with
/// `f₁ = (x−m₁)(x−m₂)`, `f₂ = (x−m₃)(x−m₄)`, the sum
/// `Σ_{x=1}^{q} χ(f₁(x))·conj(χ(f₂(x)))` is bounded by
/// `8^{ω(q)}√q·(q, Aᵢ)` for some nonzero `Aᵢ = ∏_{j≠i}(mᵢ−mⱼ)`. The
/// asserted form uses the max over nonzero Aᵢ (the strongest consequence
/// that is unconditionally testable); whether the min-form also suffices
/// is reported, never asserted.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolynomialPairCheck {
    pub q: u64,
    pub m: [u64; 4],
    pub abs: f64,
    /// `max{(q, Aᵢ) : Aᵢ ≠ 0}` and the bound built from it.
    pub max_gcd: u64,
    pub bound: f64,
    pub holds: bool,
    /// `min{(q, Aᵢ) : Aᵢ ≠ 0}` and whether that sharper bound also holds.
    pub min_gcd: u64,
    pub min_bound_holds: bool,
}

/// Evaluate the factored-quartic complete sum for a primitive χ. The
/// conjugating exponent φ(q)−1 acts as conjugation on unit values and
/// annihilates non-units, so each term is `value(f₁)·conj(value(f₂))`
/// with zero-extended values. At least three of the residues must be
/// distinct mod q.
pub fn polynomial_pair_sum_check(
    group: &UnitGroup,
    chi: &Character,
    m: [u64; 4],
) -> Result<PolynomialPairCheck, CharsumError> {
    polynomial_pair_sum_checks(group, chi, &[m]).map(|mut v| v.pop().expect("one tuple in"))
}

/// Batch form of [`polynomial_pair_sum_check`]: amortizes the character
/// value table over many tuples for the same χ. All tuples must be
/// admissible (three distinct residues mod q); the first degenerate one
/// fails the whole call.
pub fn polynomial_pair_sum_checks(
    group: &UnitGroup,
    chi: &Character,
    tuples: &[[u64; 4]],
) -> Result<Vec<PolynomialPairCheck>, CharsumError> {
    let q = group.q();
    if !chi.is_primitive() {
        return Err(CharsumError::NotPrimitive { q, conductor: chi.conductor() });
    }
    let mut values_re = vec![0.0f64; q as usize];
    let mut values_im = vec![0.0f64; q as usize];
    for n in 0..q {
        let v = chi.value(group, n);
        values_re[n as usize] = v.re;
        values_im[n as usize] = v.im;
    }
    let scale = 8f64.powi(profile(q).omega as i32) * (q as f64).sqrt();

    tuples
        .iter()
        .map(|&m| {
            let m = [m[0] % q, m[1] % q, m[2] % q, m[3] % q];
            let mut distinct: Vec<u64> = m.to_vec();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() < 3 {
                return Err(CharsumError::TooFewDistinct { m, q });
            }

            let (mut sum_re, mut sum_im) = (0.0f64, 0.0f64);
            for x in 0..q {
                let f1 = ((x + q - m[0]) % q * ((x + q - m[1]) % q) % q) as usize;
                let f2 = ((x + q - m[2]) % q * ((x + q - m[3]) % q) % q) as usize;
                // χ(f₁)·conj(χ(f₂)), expanded over the split tables.
                sum_re += values_re[f1] * values_re[f2] + values_im[f1] * values_im[f2];
                sum_im += values_im[f1] * values_re[f2] - values_re[f1] * values_im[f2];
            }

            let mut max_gcd = 0u64;
            let mut min_gcd = u64::MAX;
            for i in 0..4 {
                let mut a_i = 1i128;
                for j in 0..4 {
                    if j != i {
                        a_i *= m[i] as i128 - m[j] as i128;
                    }
                }
                if a_i != 0 {
                    let residue = (a_i.unsigned_abs() % q as u128) as u64;
                    let g = if residue == 0 { q } else { gcd(q, residue) };
                    max_gcd = max_gcd.max(g);
                    min_gcd = min_gcd.min(g);
                }
            }
            debug_assert!(max_gcd >= 1, "three distinct residues leave some A_i nonzero");

            let abs = (sum_re * sum_re + sum_im * sum_im).sqrt();
            Ok(PolynomialPairCheck {
                q,
                m,
                abs,
                max_gcd,
                bound: scale * max_gcd as f64,
                holds: abs <= scale * max_gcd as f64 + SUM_TOLERANCE,
                min_gcd,
                min_bound_holds: abs <= scale * min_gcd as f64 + SUM_TOLERANCE,
            })
        })
        .collect()
}

/// The pair-counting statistics of one (q, M, N, A) tuple: v(l) counts the
/// pairs (a, n) with `a ∈ A^q` (a ≤ A coprime to q), `n ∈ [M+1, M+N]`, and
/// `n ≡ a·l (mod q)`.
#[derive(Clone, Debug, PartialEq)]
pub struct VStatistics {
    pub q: u64,
    pub m: u64,
    pub n: u64,
    pub a: u64,
    /// `A_q = |A^q|`.
    pub a_q: u64,
    /// `Σ_l v(l) = A_q·N`, exactly.
    pub sum_v: u64,
    pub sum_v2: u64,
    /// `A_q² + 2AN·log(2A_q)`, the ceiling asserted for admissible tuples.
    pub moment_bound: f64,
}

/// Compute v(l) for every l mod q by direct pair enumeration: each pair
/// (a, n) hits exactly one class l ≡ a^{-1}n, since every a ∈ A^q is
/// coprime to q. O(A_q·N + q).
pub fn v_statistics(q: u64, m: u64, n: u64, a: u64) -> Result<VStatistics, CharsumError> {
    if a == 0 || a > q {
        return Err(CharsumError::InvalidCoprimeBound { a, q });
    }
    if n == 0 {
        return Err(CharsumError::EmptyInterval);
    }
    let mut v = vec![0u64; q as usize];
    let mut a_q = 0u64;
    for unit in (1..=a).filter(|&k| gcd(k, q) == 1) {
        a_q += 1;
        let inv = mod_inverse(unit % q, q);
        for k in m + 1..=m + n {
            v[(inv * (k % q) % q) as usize] += 1;
        }
    }
    let sum_v: u64 = v.iter().sum();
    let sum_v2: u64 = v.iter().map(|&x| x * x).sum();
    assert_eq!(sum_v, a_q * n, "Σv(l) must equal A_q·N");
    let moment_bound =
        (a_q as f64) * (a_q as f64) + 2.0 * (a as f64) * (n as f64) * (2.0 * a_q as f64).ln();
    Ok(VStatistics { q, m, n, a, a_q, sum_v, sum_v2, moment_bound })
}
