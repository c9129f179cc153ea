//! Log-domain evaluation of every explicit bound, constant, and threshold
//! condition: the single-sum ceilings, the per-level recursion constant
//! λ₂′, the geometric unroll of the shift recursion, the q-range
//! conditions, and the named facts about the astronomical threshold
//! modulus e^{e^{9.594}} ≈ 8.03 × 10^{6373}.
//!
//! Two precisions are used deliberately. Parameter sweeps run on
//! [`LogReal`] doubles (the narrowest margin they must resolve is ~3e−3,
//! between 9.0669… and 9.07). The constant-consistency and threshold
//! checks run on 50-digit fixed-point arithmetic so that no comparison
//! rests on float rounding.

mod highprec;
mod logreal;

pub use logreal::LogReal;

use std::f64::consts::LN_2;

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::constants::{
    COROLLARY_CONSTANT, COROLLARY_LOGLOG_SHIFT, DIVISOR_CEILING_EXPONENT, EULER_GAMMA,
    EULER_GAMMA_DIGITS, LOGLOG_Q_THRESHOLD, MAIN_BOUND_CONSTANT, RECURSION_DECAY,
    RECURSION_LEVEL_CONSTANT, SQRT_10, THRESHOLD_EXPONENT10, THRESHOLD_LEADING_DIGITS,
    TOTIENT_FLOOR_SHIFT,
};

use highprec::Dec;

#[derive(Debug, Error, PartialEq)]
pub enum BoundsError {
    #[error("log-domain reals must be nonnegative (got {value})")]
    NegativeValue { value: f64 },
    #[error("zero cannot be raised to a nonpositive power (exponent {exponent})")]
    ZeroToNonpositivePower { exponent: f64 },
    #[error("interval length exceeds the admissible range (log N = {log_n}, limit {limit})")]
    IntervalTooLong { log_n: f64, limit: f64 },
    #[error("requires loglog q ≥ 9.594 (got {loglog_q}); relaxed mode evaluates anyway")]
    BelowThreshold { loglog_q: f64 },
    #[error("q/φ(q) must be at least 1 (got {phi_ratio})")]
    PhiRatioBelowOne { phi_ratio: f64 },
}

/// Divisor-count input for the bound evaluators. At desk scale the count
/// is a small integer; at the threshold, the ceiling q^{1.066/loglog q}
/// has ~708 decimal digits and only its log can be supplied.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DivisorInput {
    Exact(u64),
    Ln(f64),
}

impl DivisorInput {
    pub fn ln(self) -> f64 {
        match self {
            DivisorInput::Exact(d) => {
                assert!(d >= 1, "divisor counts are positive");
                (d as f64).ln()
            }
            DivisorInput::Ln(ln) => ln,
        }
    }
}

/// Whether a bound evaluation was driven by log q directly or by loglog q.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ModulusScale {
    LogQ(f64),
    LogLogQ(f64),
}

/// Exact echo of what an evaluator was given — no silent defaulting.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundInputs {
    pub modulus: ModulusScale,
    pub log_n: f64,
    pub omega: u32,
    pub divisor_count: DivisorInput,
    /// `q/φ(q)` where the evaluated form uses it; `None` where the loglog
    /// substitution has replaced it.
    pub phi_ratio: Option<f64>,
}

/// Result of comparing a bound against a supplied (measured) quantity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Comparison {
    pub supplied: f64,
    /// ln(supplied / bound); −∞ when the supplied quantity is zero.
    pub ratio_ln: f64,
    pub holds: bool,
}

/// One evaluated bound: its value in log domain, the inputs that produced
/// it, and honesty flags.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundReport {
    pub name: &'static str,
    pub value: LogReal,
    pub inputs: BoundInputs,
    /// Set when the modulus sits below the e^{e^{9.594}} hypothesis and the
    /// evaluation was forced through in relaxed mode.
    pub out_of_hypothesis: bool,
    pub holds_vs: Option<Comparison>,
}

fn compare(value: LogReal, supplied: Option<f64>) -> Option<Comparison> {
    supplied.map(|s| {
        assert!(s >= 0.0, "measured quantities are absolute values");
        let supplied_ln =
            if s == 0.0 { f64::NEG_INFINITY } else { s.ln() };
        Comparison { supplied: s, ratio_ln: supplied_ln - value.ln(), holds: supplied_ln <= value.ln() }
    })
}

/// The two classical reference curves: the trivial bound `N` and the
/// Pólya–Vinogradov shape `√q · log q` (implied constant 1 — shape only,
/// no explicit constant is asserted for it).
pub fn classic_bounds(log_q: f64, log_n: f64) -> (LogReal, LogReal) {
    assert!(log_q > 0.0, "modulus must exceed 1");
    assert!(log_n >= 0.0, "interval length must be at least 1");
    let trivial = LogReal::from_ln(log_n);
    let polya_vinogradov = LogReal::from_ln(0.5 * log_q + log_q.ln());
    (trivial, polya_vinogradov)
}

/// The main single-sum ceiling
/// `√N · q^{3/16} · 9.07 · (log q)^{1/4} · (2^ω d)^{3/4} · (q/φ)^{1/2}`,
/// stated for q ≥ e^{e^{9.594}} and N ≤ q^{5/8}. `relaxed` permits moduli
/// below the threshold for empirical sweeps; such reports are flagged
/// out-of-hypothesis. A supplied measurement is compared into `holds_vs`.
pub fn burgess_bound_theorem(
    log_q: f64,
    log_n: f64,
    omega: u32,
    divisor_count: DivisorInput,
    phi_ratio: f64,
    relaxed: bool,
    compare_with: Option<f64>,
) -> Result<BoundReport, BoundsError> {
    assert!(log_q > 0.0 && log_n >= 0.0, "positive modulus, nonempty interval");
    let limit = 0.625 * log_q;
    if log_n > limit {
        return Err(BoundsError::IntervalTooLong { log_n, limit });
    }
    if phi_ratio < 1.0 {
        return Err(BoundsError::PhiRatioBelowOne { phi_ratio });
    }
    let out_of_hypothesis = log_q < LOGLOG_Q_THRESHOLD.exp();
    if out_of_hypothesis && !relaxed {
        return Err(BoundsError::BelowThreshold { loglog_q: log_q.ln() });
    }
    let value = LogReal::from_ln(log_n)
        .pow(0.5)?
        .mul(LogReal::from_ln(log_q).pow(3.0 / 16.0)?)
        .mul(LogReal::from_value(MAIN_BOUND_CONSTANT)?)
        .mul(LogReal::from_value(log_q)?.pow(0.25)?)
        .mul(LogReal::from_ln(omega as f64 * LN_2 + divisor_count.ln()).pow(0.75)?)
        .mul(LogReal::from_value(phi_ratio)?.pow(0.5)?);
    Ok(BoundReport {
        name: "burgess-theorem",
        value,
        inputs: BoundInputs {
            modulus: ModulusScale::LogQ(log_q),
            log_n,
            omega,
            divisor_count,
            phi_ratio: Some(phi_ratio),
        },
        out_of_hypothesis,
        holds_vs: compare(value, compare_with),
    })
}

/// The corollary form with the `(q/φ)^{1/2}` factor replaced by its
/// totient-floor ceiling:
/// `√N · q^{3/16} · 12.11 · (log q)^{1/4} · (2^ω d)^{3/4} ·
/// (loglog q + 1.69/loglog q)^{1/2}`, with `log q = e^{loglog q}`.
pub fn burgess_bound_corollary(
    loglog_q: f64,
    log_n: f64,
    omega: u32,
    divisor_count: DivisorInput,
    relaxed: bool,
    compare_with: Option<f64>,
) -> Result<BoundReport, BoundsError> {
    assert!(loglog_q > 0.0 && log_n >= 0.0, "positive loglog q, nonempty interval");
    let log_q = loglog_q.exp();
    let limit = 0.625 * log_q;
    if log_n > limit {
        return Err(BoundsError::IntervalTooLong { log_n, limit });
    }
    let out_of_hypothesis = loglog_q < LOGLOG_Q_THRESHOLD;
    if out_of_hypothesis && !relaxed {
        return Err(BoundsError::BelowThreshold { loglog_q });
    }
    let loglog_factor = loglog_q + COROLLARY_LOGLOG_SHIFT / loglog_q;
    let value = LogReal::from_ln(log_n)
        .pow(0.5)?
        .mul(LogReal::from_ln(log_q).pow(3.0 / 16.0)?)
        .mul(LogReal::from_value(COROLLARY_CONSTANT)?)
        .mul(LogReal::from_value(log_q)?.pow(0.25)?)
        .mul(LogReal::from_ln(omega as f64 * LN_2 + divisor_count.ln()).pow(0.75)?)
        .mul(LogReal::from_value(loglog_factor)?.pow(0.5)?);
    Ok(BoundReport {
        name: "burgess-corollary",
        value,
        inputs: BoundInputs {
            modulus: ModulusScale::LogLogQ(loglog_q),
            log_n,
            omega,
            divisor_count,
            phi_ratio: None,
        },
        out_of_hypothesis,
        holds_vs: compare(value, compare_with),
    })
}

/// The per-level recursion constant
/// `λ₂′ = 3.3325 · (log q)^{1/4} · (q/φ)^{1/2} · (2^ω d)^{3/4}`.
/// Always ≥ 1 in its domain (log q > 1), which the trivial-bound cases of
/// the recursion rely on.
pub fn lambda2_prime(log_q: f64, omega: u32, divisor_count: DivisorInput, phi_ratio: f64) -> LogReal {
    assert!(log_q > 1.0, "λ₂′ requires log q > 1");
    assert!(phi_ratio >= 1.0, "q/φ(q) is at least 1");
    LogReal::from_value(RECURSION_LEVEL_CONSTANT)
        .expect("positive constant")
        .mul(LogReal::from_value(log_q).expect("positive").pow(0.25).expect("nonzero"))
        .mul(LogReal::from_value(phi_ratio).expect("positive").pow(0.5).expect("nonzero"))
        .mul(
            LogReal::from_ln(omega as f64 * LN_2 + divisor_count.ln())
                .pow(0.75)
                .expect("nonzero"),
        )
}

/// The four q-range conditions, evaluated in log domain with the growth
/// ceilings substituted for 2^{ω(q)} ≤ d(q) ≤ q^{1.066/loglog q} and for
/// q/φ(q). Field names follow the labels used by the verification harness.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QConditions {
    pub loglog_q: f64,
    pub c: f64,
    /// `q^{1/8} ≥ 10·(2^ω·(q/φ)/(2C) + 1)` at the supplied density C, with
    /// the ceilings in place of the arithmetic functions.
    pub cond_2_2: bool,
    /// The threshold `loglog q ≥ 9.594` together with [`Self::cond_2_5`]:
    /// the regime in which the coprime-count ratio A_q/A ≥ φ(q)/(2q) is
    /// guaranteed.
    pub cond_2_4: bool,
    /// [`Self::cond_2_2`] specialized to C = 1/2.
    pub cond_2_5: bool,
    /// The fully explicit variant at C = 1/2:
    /// `q^{1/8} ≥ 10·(q^{1/9}·(e^γ·loglog q + 1/(3·1.066)) + 1)`, which
    /// implies the others once loglog q ≥ 9·1.066 = 9.594.
    pub cond_2_6: bool,
    /// ln of q^{1/8} (the shared left side).
    pub lhs_ln: f64,
    /// ln of the right side of the explicit variant.
    pub rhs_ln_2_6: f64,
}

pub fn check_q_conditions(loglog_q: f64, c: f64) -> QConditions {
    assert!(loglog_q > 0.0, "loglog q must be positive");
    assert!(c > 0.0 && c < 1.0, "density parameter C must lie in (0,1)");
    let l = loglog_q;
    let log_q = l.exp();
    let lhs_ln = log_q / 8.0;
    let phi_ceiling = EULER_GAMMA.exp() * l + TOTIENT_FLOOR_SHIFT / l;
    let divisor_ceiling_ln = DIVISOR_CEILING_EXPONENT * log_q / l;

    // ln of 10·(coeff·e^{main_ln} + 1).
    let rhs_ln = |main_ln: f64, coeff: f64| -> f64 {
        LogReal::from_ln(main_ln)
            .mul(LogReal::from_value(coeff).expect("positive coefficient"))
            .add(LogReal::one())
            .mul(LogReal::from_value(10.0).expect("positive"))
            .ln()
    };

    let rhs_at_c = rhs_ln(divisor_ceiling_ln, phi_ceiling / (2.0 * c));
    let rhs_at_half = rhs_ln(divisor_ceiling_ln, phi_ceiling);
    let explicit_coeff = EULER_GAMMA.exp() * l + 1.0 / (3.0 * DIVISOR_CEILING_EXPONENT);
    let rhs_2_6 = rhs_ln(log_q / 9.0, explicit_coeff);

    QConditions {
        loglog_q: l,
        c,
        cond_2_2: lhs_ln >= rhs_at_c,
        cond_2_4: l >= LOGLOG_Q_THRESHOLD && lhs_ln >= rhs_at_half,
        cond_2_5: lhs_ln >= rhs_at_half,
        cond_2_6: lhs_ln >= rhs_2_6,
        lhs_ln,
        rhs_ln_2_6: rhs_2_6,
    }
}

/// The guaranteed floor on A_q/A relative to φ(q)/q in the threshold
/// regime: `(1/2) / (e^γ·loglog q + 3/loglog q)`, the factor by which the
/// coprime count of an interval of length A ≥ q^{1/8}/10 can fall short of
/// its density heuristic.
pub fn aq_ratio_floor(loglog_q: f64) -> Result<LogReal, BoundsError> {
    if loglog_q < LOGLOG_Q_THRESHOLD {
        return Err(BoundsError::BelowThreshold { loglog_q });
    }
    let denominator = EULER_GAMMA.exp() * loglog_q + TOTIENT_FLOOR_SHIFT / loglog_q;
    Ok(LogReal::from_value(0.5 / denominator).expect("positive"))
}

/// The unrolled shift recursion `𝓜(N) ≤ √N q^{3/16} λ + 2𝓜(N/10)`:
/// partial bounds after k+1 levels and the geometric-series limit.
#[derive(Clone, Debug)]
pub struct RecursionUnroll {
    /// `partials[k] = λ√N q^{3/16}·Σ_{j=0}^{k}(2/√10)^j + N/5^{k+1}`.
    pub partials: Vec<LogReal>,
    /// `(√10/(√10−2))·λ√N q^{3/16}`, the k → ∞ value.
    pub limit: LogReal,
}

pub fn recursion_unroll(lambda: LogReal, log_q: f64, log_n: f64, levels: u32) -> RecursionUnroll {
    assert!(log_q > 0.0 && log_n >= 0.0, "positive modulus, nonempty interval");
    let head = lambda.mul(LogReal::from_ln(0.5 * log_n + 3.0 / 16.0 * log_q));
    let ln_5 = 5f64.ln();
    let mut partials = Vec::with_capacity(levels as usize + 1);
    let mut geometric = 0.0f64;
    let mut power = 1.0f64;
    for k in 0..=levels {
        geometric += power;
        power *= RECURSION_DECAY;
        let tail = LogReal::from_ln(log_n - (k as f64 + 1.0) * ln_5);
        partials.push(head.mul(LogReal::from_value(geometric).expect("positive")).add(tail));
    }
    let limit = head.mul(LogReal::from_value(SQRT_10 / (SQRT_10 - 2.0)).expect("positive"));
    RecursionUnroll { partials, limit }
}

/// The named log-domain facts about the threshold modulus q* = e^{e^{9.594}}.
#[derive(Clone, Debug, PartialEq)]
pub struct ThresholdFacts {
    /// log₁₀ q* ≈ 6373.9047717157.
    pub threshold_log10: f64,
    /// Decimal exponent (6373) and mantissa (≈ 8.031038…) of q*.
    pub threshold_exponent10: i64,
    pub threshold_mantissa: f64,
    /// Whether the mantissa rounds to the printed 6-figure form 8.03104.
    pub mantissa_matches_printed: bool,
    /// log₁₀ of (1/10)·q*^{1/8}, vs log₁₀ of 5·10^795; the former must win.
    pub eighth_root_log10: f64,
    pub comparison_log10: f64,
    pub eighth_root_exceeds: bool,
    /// ln of the window cutoff q*^{3/8}, i.e. (3/8)·e^{9.594}; checked for
    /// agreement between the 50-digit and double evaluation routes.
    pub window_cutoff_ln: f64,
    pub window_cutoff_consistent: bool,
}

/// Evaluate the threshold facts in 50-digit arithmetic and export doubles.
pub fn threshold_facts() -> ThresholdFacts {
    let e_l = Dec::from_decimal_str("9.594").exp(); // ln q* = e^{9.594}
    let ln10 = highprec::ln_10();

    let log10_q = e_l.div(&ln10);
    let exponent10 = log10_q.trunc().to_i64().expect("threshold exponent fits i64");
    let frac = log10_q.sub(&Dec::from_int(exponent10));
    let mantissa = frac.mul(&ln10).exp();
    let rounded_5 = mantissa.mul(&Dec::pow10(5)).add(&Dec::from_decimal_str("0.5")).trunc();
    let printed_5 = (THRESHOLD_LEADING_DIGITS * 1e5).round() as i64;
    let mantissa_matches_printed = exponent10 == THRESHOLD_EXPONENT10
        && rounded_5.to_i64() == Some(printed_5);

    let eighth_root_log10 = e_l.div(&Dec::from_int(8)).div(&ln10).sub(&Dec::from_int(1));
    let ln5 = Dec::from_int(5).ln(5f64.ln());
    let comparison_log10 = ln5.div(&ln10).add(&Dec::from_int(795));
    let eighth_root_exceeds = eighth_root_log10 > comparison_log10;

    let window_cutoff = Dec::from_int(3).mul(&e_l).div(&Dec::from_int(8));
    let window_cutoff_ln = window_cutoff.to_f64();
    let direct = 0.375 * LOGLOG_Q_THRESHOLD.exp();
    let window_cutoff_consistent = (window_cutoff_ln - direct).abs() <= 1e-10 * direct;

    ThresholdFacts {
        threshold_log10: log10_q.to_f64(),
        threshold_exponent10: exponent10,
        threshold_mantissa: mantissa.to_f64(),
        mantissa_matches_printed,
        eighth_root_log10: eighth_root_log10.to_f64(),
        comparison_log10: comparison_log10.to_f64(),
        eighth_root_exceeds,
        window_cutoff_ln,
        window_cutoff_consistent,
    }
}

/// One link of the constant chain: a 50-digit evaluation, its double
/// rendering, and the closed interval it is required to land in.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainConstant {
    /// Decimal expansion truncated after 34 fractional digits.
    pub digits: String,
    pub value: f64,
    pub low: f64,
    pub high: f64,
    pub within: bool,
}

/// The chain of constants tying the recursion to the stated ceilings,
/// recomputed in 50-digit arithmetic:
/// `(√10/(√10−2))·3.3325 ∈ [9.066, 9.07]`, `9.07·e^{γ/2} ∈ [12.10, 12.11]`,
/// `3e^{−γ} ∈ [1.684, 1.69]` — plus the truncated geometric series behind
/// the first of them.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstantChain {
    /// (√10/(√10−2)) · 3.3325, the recursion limit times the per-level
    /// constant; must stay under the printed 9.07.
    pub recursion_total: ChainConstant,
    /// 9.07 · e^{γ/2}, the totient-substitution blowup of the main
    /// constant; must stay under the printed 12.11.
    pub loglog_form: ChainConstant,
    /// 3·e^{−γ}, the additive loglog shift; must stay under 1.69.
    pub totient_shift: ChainConstant,
    /// Terms of Σ (2/√10)^k taken before truncation.
    pub geometric_terms: u32,
    /// |partial sum − √10/(√10−2)| at that truncation, as a double.
    pub geometric_gap: f64,
}

const GEOMETRIC_TERMS: u32 = 133;

fn chain_constant(value: Dec, low: &str, high: &str) -> ChainConstant {
    let within = value >= Dec::from_decimal_str(low) && value <= Dec::from_decimal_str(high);
    ChainConstant {
        digits: value.to_decimal_string(34),
        value: value.to_f64(),
        low: low.parse().expect("decimal literal"),
        high: high.parse().expect("decimal literal"),
        within,
    }
}

pub fn constant_chain() -> ConstantChain {
    let sqrt10 = Dec::from_int(10).sqrt();
    let unroll = sqrt10.div(&sqrt10.sub(&Dec::from_int(2)));
    let gamma = Dec::from_decimal_str(EULER_GAMMA_DIGITS);

    let recursion_total = unroll.mul(&Dec::from_decimal_str("3.3325"));
    let loglog_form = Dec::from_decimal_str("9.07").mul(&gamma.div(&Dec::from_int(2)).exp());
    let totient_shift =
        Dec::from_int(3).mul(&Dec::from_int(0).sub(&gamma).exp());

    let ratio = Dec::from_int(2).div(&sqrt10);
    let mut partial = Dec::from_int(0);
    let mut term = Dec::from_int(1);
    for _ in 0..GEOMETRIC_TERMS {
        partial = partial.add(&term);
        term = term.mul(&ratio);
    }
    let geometric_gap = unroll.sub(&partial).abs().to_f64();

    ConstantChain {
        recursion_total: chain_constant(recursion_total, "9.066", "9.07"),
        loglog_form: chain_constant(loglog_form, "12.10", "12.11"),
        totient_shift: chain_constant(totient_shift, "1.684", "1.69"),
        geometric_terms: GEOMETRIC_TERMS,
        geometric_gap,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct double-precision evaluation of the main ceiling, kept
    /// independent of the LogReal composition it checks.
    fn theorem_direct_f64(log_q: f64, log_n: f64, omega: u32, d: u64, phi_ratio: f64) -> f64 {
        (0.5 * log_n + 3.0 / 16.0 * log_q).exp()
            * MAIN_BOUND_CONSTANT
            * log_q.powf(0.25)
            * (2f64.powi(omega as i32) * d as f64).powf(0.75)
            * phi_ratio.sqrt()
    }

    #[test]
    fn classic_bounds_examples() {
        let (trivial, pv) = classic_bounds(16.0, 8.0);
        assert_eq!(trivial.ln(), 8.0);
        assert_eq!(pv.ln(), 8.0 + 16f64.ln());
        let (t1, _) = classic_bounds(1.0, 0.0);
        assert_eq!(t1.value(), 1.0);
        // q = 10^6, N = 10^3: PV/trivial ≈ 13.8155.
        let (t, p) = classic_bounds(6.0 * 10f64.ln(), 3.0 * 10f64.ln());
        assert!((p.value() / t.value() - 13.8155).abs() < 1e-3);
    }

    #[test]
    fn theorem_desk_value_and_f64_agreement() {
        let (log_q, log_n) = (997f64.ln(), 74f64.ln());
        let report = burgess_bound_theorem(
            log_q, log_n, 1, DivisorInput::Exact(2), 997.0 / 996.0, true, Some(100.0),
        )
        .unwrap();
        let value = report.value.value();
        assert!((value - 1306.2562888640653).abs() < 1e-9 * value);
        let direct = theorem_direct_f64(log_q, log_n, 1, 2, 997.0 / 996.0);
        assert!((value - direct).abs() < 1e-10 * value);
        assert!(report.out_of_hypothesis, "q = 997 sits far below the threshold");
        let cmp = report.holds_vs.unwrap();
        assert!(cmp.holds && cmp.ratio_ln < 0.0);
        // A "measurement" above the bound must be reported as a violation.
        let bad = burgess_bound_theorem(
            log_q, log_n, 1, DivisorInput::Exact(2), 997.0 / 996.0, true, Some(2000.0),
        )
        .unwrap();
        assert!(!bad.holds_vs.unwrap().holds);
        // Inputs echo exactly.
        assert_eq!(report.inputs.modulus, ModulusScale::LogQ(log_q));
        assert_eq!(report.inputs.phi_ratio, Some(997.0 / 996.0));
    }

    #[test]
    fn theorem_rejects_bad_inputs() {
        let log_q = 997f64.ln();
        let too_long = burgess_bound_theorem(
            log_q, 0.63 * log_q, 1, DivisorInput::Exact(2), 1.0, true, None,
        );
        assert!(matches!(too_long, Err(BoundsError::IntervalTooLong { .. })));
        let strict = burgess_bound_theorem(
            log_q, 1.0, 1, DivisorInput::Exact(2), 1.0, false, None,
        );
        assert!(matches!(strict, Err(BoundsError::BelowThreshold { .. })));
        let ratio = burgess_bound_theorem(
            log_q, 1.0, 1, DivisorInput::Exact(2), 0.99, true, None,
        );
        assert_eq!(ratio.unwrap_err(), BoundsError::PhiRatioBelowOne { phi_ratio: 0.99 });
    }

    #[test]
    fn theorem_and_corollary_at_threshold_scale() {
        // Appendix-ceiling inputs at loglog q = 9.594: ω ≤ 1762,
        // ln d ≤ 1.066·log q/loglog q, q/φ ≤ e^γ·loglog q + 3/loglog q.
        let log_q = LOGLOG_Q_THRESHOLD.exp();
        let d_ln = DIVISOR_CEILING_EXPONENT * log_q / LOGLOG_Q_THRESHOLD;
        let phi = EULER_GAMMA.exp() * LOGLOG_Q_THRESHOLD + 3.0 / LOGLOG_Q_THRESHOLD;
        let report = burgess_bound_theorem(
            log_q, 0.625 * log_q, 1762, DivisorInput::Ln(d_ln), phi, false, None,
        )
        .unwrap();
        assert!(!report.out_of_hypothesis);
        assert!(report.value.ln().is_finite() && report.value.ln() > 9000.0);
        assert!(report.value.ln() < 10000.0);

        let corollary = burgess_bound_corollary(
            LOGLOG_Q_THRESHOLD, 0.5 * log_q, 1762, DivisorInput::Ln(d_ln), false, None,
        )
        .unwrap();
        assert!(!corollary.out_of_hypothesis);
        assert!(corollary.value.ln().is_finite() && corollary.value.ln() > 0.0);
    }

    #[test]
    fn corollary_desk_value() {
        let loglog_q = 997f64.ln().ln();
        let report = burgess_bound_corollary(
            loglog_q, 74f64.ln(), 1, DivisorInput::Exact(2), true, None,
        )
        .unwrap();
        let value = report.value.value();
        assert!((value - 2920.501299693803).abs() < 1e-9 * value);
        assert!(report.out_of_hypothesis);
        assert_eq!(report.inputs.phi_ratio, None);
        assert!(burgess_bound_corollary(
            loglog_q, 74f64.ln(), 1, DivisorInput::Exact(2), false, None
        )
        .is_err());
    }

    #[test]
    fn lambda2_prime_examples() {
        let lam = lambda2_prime(997f64.ln(), 1, DivisorInput::Exact(2), 997.0 / 996.0);
        assert!((lam.value() - 15.286922481314251).abs() < 1e-12 * lam.value());
        // ≥ 1 across its whole domain.
        for log_q in [1.01, 2.0, 5.0, 20.0, 1e4] {
            for omega in [0u32, 1, 4] {
                for d in [1u64, 2, 100] {
                    for phi in [1.0, 1.5, 3.0] {
                        assert!(
                            lambda2_prime(log_q, omega, DivisorInput::Exact(d), phi).ln() >= 0.0
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn q_conditions_frozen_values() {
        let at_threshold = check_q_conditions(LOGLOG_Q_THRESHOLD, 0.5);
        assert!(at_threshold.cond_2_2 && at_threshold.cond_2_4);
        assert!(at_threshold.cond_2_5 && at_threshold.cond_2_6);
        assert!((at_threshold.lhs_ln - 1834.55726394).abs() < 1e-5);
        assert!((at_threshold.rhs_ln_2_6 - 1635.87664073).abs() < 1e-5);

        let small = check_q_conditions(2.0, 0.5);
        assert!(!small.cond_2_2 && !small.cond_2_4 && !small.cond_2_5 && !small.cond_2_6);
        assert!((small.lhs_ln - 0.923632012366).abs() < 1e-9);
        assert!((small.rhs_ln_2_6 - 4.58564901405).abs() < 1e-9);
    }

    #[test]
    fn q_conditions_monotone_and_c_consistent() {
        // Once the explicit condition holds it keeps holding on the grid.
        let mut held = false;
        let mut t = 5.0;
        while t <= 12.0 {
            let conditions = check_q_conditions(t, 0.5);
            if held {
                assert!(conditions.cond_2_6, "explicit condition regressed at loglog q = {t}");
            }
            held = held || conditions.cond_2_6;
            // At C = 1/2 the general form and its specialization coincide.
            assert_eq!(conditions.cond_2_2, conditions.cond_2_5);
            t += 0.25;
        }
        assert!(held, "explicit condition never fired on the grid");
        // A tiny C strengthens the requirement; a C near 1 weakens it.
        let tight = check_q_conditions(6.0, 0.01);
        let loose = check_q_conditions(6.0, 0.99);
        assert!(u8::from(tight.cond_2_2) <= u8::from(loose.cond_2_2));
    }

    #[test]
    fn aq_ratio_floor_values() {
        let floor = aq_ratio_floor(LOGLOG_Q_THRESHOLD).unwrap();
        assert!((floor.value() - 0.028735129793357771).abs() < 1e-15);
        assert_eq!(
            aq_ratio_floor(9.5).unwrap_err(),
            BoundsError::BelowThreshold { loglog_q: 9.5 }
        );
        // Decreasing in loglog q.
        let mut last = f64::INFINITY;
        for l in [9.594, 10.0, 11.0, 15.0, 100.0] {
            let v = aq_ratio_floor(l).unwrap().value();
            assert!(v < last);
            last = v;
        }
    }

    #[test]
    fn recursion_unroll_desk_values() {
        let lam = lambda2_prime(997f64.ln(), 1, DivisorInput::Exact(2), 997.0 / 996.0);
        let unrolled = recursion_unroll(lam, 997f64.ln(), 74f64.ln(), 0);
        assert_eq!(unrolled.partials.len(), 1);
        let k0 = unrolled.partials[0].value();
        assert!((k0 - 494.74477206609676).abs() < 1e-9 * k0);
        let limit = unrolled.limit.value();
        assert!((limit - 1305.8141637165688).abs() < 1e-9 * limit);

        // The limit/head ratio is the geometric series value, checked
        // against plain summation.
        let head = lam.value() * 74f64.sqrt() * 997f64.powf(3.0 / 16.0);
        let mut series = 0.0;
        let mut power = 1.0;
        for _ in 0..200 {
            series += power;
            power *= RECURSION_DECAY;
        }
        assert!((limit / head - series).abs() < 1e-9);
        assert!((series - SQRT_10 / (SQRT_10 - 2.0)).abs() < 1e-9);
    }

    #[test]
    fn recursion_partials_converge_with_late_geometric_gap() {
        let lam = lambda2_prime(997f64.ln(), 1, DivisorInput::Exact(2), 997.0 / 996.0);
        let unrolled = recursion_unroll(lam, 997f64.ln(), 74f64.ln(), 40);
        let limit = unrolled.limit.value();
        let final_partial = unrolled.partials[40].value();
        // By K = 40 the N/5^{K+1} term is ~10^{-27}, so the gap to the
        // limit is the geometric tail r^{41} ≈ 6.95e−9 — convergence is
        // genuinely geometric, not faster.
        let gap = (limit - final_partial).abs() / limit;
        assert!(gap < 1e-8, "gap {gap}");
        assert!(gap > 1e-9, "gap {gap} implausibly small for a 2/√10 tail");
    }

    #[test]
    fn recursion_partials_dip_then_rise() {
        // With N huge relative to the head, the N/5^{k+1} term dominates
        // early: partials fall, cross below the limit, then climb back as
        // the geometric head takes over. The step direction must match the
        // sign of head·r^{k+1} − (4/5)·N/5^{k+1} exactly.
        let (log_q, log_n) = (4.0, 20.0);
        let unrolled = recursion_unroll(LogReal::one(), log_q, log_n, 40);
        let head = (0.5 * log_n + 3.0 / 16.0 * log_q).exp();
        let n = log_n.exp();
        let mut crossings = 0;
        for k in 0..40usize {
            let predicted_rise =
                head * RECURSION_DECAY.powi(k as i32 + 1) > 0.8 * n / 5f64.powi(k as i32 + 1);
            let (cur, next) = (unrolled.partials[k].value(), unrolled.partials[k + 1].value());
            if (next - cur).abs() > 1e-9 * cur {
                assert_eq!(next > cur, predicted_rise, "step {k}");
                if k > 0 {
                    let prev = unrolled.partials[k - 1].value();
                    if (cur > prev) != (next > cur) {
                        crossings += 1;
                    }
                }
            }
        }
        assert_eq!(crossings, 1, "one turning point: decrease, then increase");
        assert!(unrolled.partials[0].value() > unrolled.limit.value());
        assert!(unrolled.partials[40].value() < unrolled.limit.value());
    }

    #[test]
    fn threshold_facts_frozen_values() {
        let facts = threshold_facts();
        assert!((facts.threshold_log10 - 6373.9047717157038).abs() < 1e-9);
        assert_eq!(facts.threshold_exponent10, 6373);
        assert!((facts.threshold_mantissa - 8.03103864475).abs() < 1e-9);
        assert!(facts.mantissa_matches_printed);
        assert!((facts.eighth_root_log10 - 795.73809646446298).abs() < 1e-9);
        assert!((facts.comparison_log10 - 795.69897000433602).abs() < 1e-9);
        assert!(facts.eighth_root_exceeds);
        assert!((facts.window_cutoff_ln - 5503.6717918185733).abs() < 1e-8);
        assert!(facts.window_cutoff_consistent);
    }

    #[test]
    fn constant_chain_digits_and_intervals() {
        let chain = constant_chain();
        assert!(chain
            .recursion_total
            .digits
            .starts_with("9.066930100837041374628770912274"));
        assert!(chain.loglog_form.digits.starts_with("12.104534041371515686769939932"));
        assert!(chain.totient_shift.digits.starts_with("1.68437845070065550947242964437"));
        assert!(chain.recursion_total.within);
        assert!(chain.loglog_form.within);
        assert!(chain.totient_shift.within);
        assert_eq!(chain.geometric_terms, 133);
        assert!(chain.geometric_gap < 1e-25, "gap {}", chain.geometric_gap);
        assert!(chain.geometric_gap > 5e-27, "gap {}", chain.geometric_gap);
    }

    #[test]
    fn divisor_input_forms() {
        assert_eq!(DivisorInput::Exact(2).ln(), 2f64.ln());
        assert_eq!(DivisorInput::Ln(5.0).ln(), 5.0);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn theorem_ln(log_q: f64, log_n: f64, omega: u32, d: u64, phi: f64) -> f64 {
            burgess_bound_theorem(log_q, log_n, omega, DivisorInput::Exact(d), phi, true, None)
                .unwrap()
                .value
                .ln()
        }

        proptest! {
            #[test]
            fn theorem_nondecreasing_in_each_input(
                log_q in 2.0..50.0f64,
                frac in 0.0..0.9f64,
                omega in 0u32..6,
                d in 1u64..100,
                phi in 1.0..3.0f64,
            ) {
                let log_n = frac * 0.625 * log_q;
                let base = theorem_ln(log_q, log_n, omega, d, phi);
                prop_assert!(theorem_ln(log_q, 0.625 * log_q, omega, d, phi) >= base);
                prop_assert!(theorem_ln(log_q, log_n, omega + 1, d, phi) >= base);
                prop_assert!(theorem_ln(log_q, log_n, omega, d + 7, phi) >= base);
                prop_assert!(theorem_ln(log_q, log_n, omega, d, phi + 0.5) >= base);
            }

            #[test]
            fn corollary_dominates_theorem_under_totient_substitution(
                loglog_q in 0.5..20.0f64,
                frac in 0.0..1.0f64,
                omega in 0u32..6,
                d in 1u64..100,
            ) {
                let log_q = loglog_q.exp();
                let log_n = frac * 0.625 * log_q;
                let phi_ceiling = EULER_GAMMA.exp() * loglog_q
                    + TOTIENT_FLOOR_SHIFT / loglog_q;
                let theorem = theorem_ln(log_q, log_n, omega, d, phi_ceiling);
                let corollary = burgess_bound_corollary(
                    loglog_q, log_n, omega, DivisorInput::Exact(d), true, None,
                ).unwrap().value.ln();
                prop_assert!(theorem <= corollary + 1e-12);
            }
        }
    }
}
