//! The acceptance gate: nine exhaustive / seeded verification criteria,
//! one test per criterion, each printing a single PASS line with its
//! headline numbers (visible under `--nocapture`). Every tolerance is
//! pinned here as a named constant.

use std::collections::HashMap;

use num_complex::Complex64;

use burgess_core::{
    burgess_bound_theorem, check_q_conditions, constant_chain, factorize, fourth_moment_check,
    growth_bounds_from, max_window_sums, polynomial_pair_sum_checks, profile, threshold_facts,
    v_statistics, window_length_grid, DivisorInput, Sieve, TurnFraction, UnitGroup,
};

/// Absolute tolerance on the fourth-moment and pair-sum comparisons
/// (magnitudes up to ~q²; float accumulation error is below 1e−9).
const SUM_TOLERANCE: f64 = 1e-6;

/// Absolute tolerance on full-row character sums that cancel to zero.
const ORTHOGONALITY_TOLERANCE: f64 = 1e-9;

/// Tolerance on the truncated geometric series against its closed form.
const GEOMETRIC_TOLERANCE: f64 = 1e-25;

/// Seeds for the randomized-but-reproducible criteria.
const PAIR_SUM_SEED: u64 = 0xA5A5_0003;
const MOMENT_SEED: u64 = 0xA5A5_0004;

/// SplitMix64; the same generator the CLI uses, inlined so the acceptance
/// gate has no dependencies beyond the library under test.
struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }
}

/// Criterion 1 — coprime-count error, exhaustively: for every
/// 1 ≤ A ≤ q ≤ 3000, the count A_q of integers in [1, A] coprime to q
/// satisfies |A_q − A·φ(q)/q| < 2^{ω(q)−1}, checked in exact integer
/// arithmetic as 2·|q·A_q − A·φ(q)| < 2^{ω(q)}·q.
#[test]
fn criterion_1_coprime_count_error_exhaustive() {
    let sieve = Sieve::new(3000);
    let mut pairs = 0u64;
    for q in 1..=3000u64 {
        let phi = sieve.phi(q);
        let omega = sieve.omega(q);
        let primes: Vec<u64> = sieve.factorize(q).factors().iter().map(|&(p, _)| p).collect();
        let mut running = 0u64; // A_q for the current prefix [1, a]
        for a in 1..=q {
            if primes.iter().all(|&p| a % p != 0) {
                running += 1;
            }
            let error_doubled =
                2 * (q as i128 * running as i128 - a as i128 * phi as i128).unsigned_abs();
            assert!(
                error_doubled < (1u128 << omega) * q as u128,
                "coprime-count error ceiling failed at q={q}, A={a}"
            );
            pairs += 1;
        }
        assert_eq!(running, phi, "full interval must count exactly φ(q) units");
    }
    println!("criterion 1: PASS — {pairs} (A,q) pairs, exact arithmetic, zero failures");
}

/// Criterion 2 — fourth moment, exhaustively: for every q ≤ 200, every
/// primitive χ mod q, every 1 ≤ B < √q, the shifted fourth moment stays
/// under (7B²−6B)q + 4·8^{ω(q)}√q·B⁴·d(q)³ (tolerance 1e−6).
#[test]
fn criterion_2_fourth_moment_exhaustive() {
    let mut checks = 0u64;
    let mut min_margin = f64::INFINITY;
    for q in 1..=200u64 {
        let group = UnitGroup::new(q).unwrap();
        for chi in group.characters().filter(|c| c.is_primitive()) {
            let mut b = 1u64;
            while b * b < q {
                let check = fourth_moment_check(&group, &chi, b).unwrap();
                assert!(
                    check.lhs <= check.rhs + SUM_TOLERANCE,
                    "fourth moment exceeded its ceiling at q={q}, B={b}"
                );
                min_margin = min_margin.min(check.margin / check.rhs);
                checks += 1;
                b += 1;
            }
        }
    }
    println!(
        "criterion 2: PASS — {checks} (q,χ,B) fourth-moment checks, \
         smallest relative margin {min_margin:.3e}"
    );
}

/// Criterion 3 — complete polynomial pair sums, sampled: for every
/// q ≤ 300, every primitive χ, 200 seeded admissible residue 4-tuples:
/// |Σ χ(f₁)·conj(χ(f₂))| ≤ 8^{ω(q)}√q·max{(q,Aᵢ) : Aᵢ ≠ 0} + 1e−6.
#[test]
fn criterion_3_polynomial_pair_sums_sampled() {
    let mut checks = 0u64;
    for q in 3..=300u64 {
        let group = UnitGroup::new(q).unwrap();
        for chi in group.characters().filter(|c| c.is_primitive()) {
            let mut rng = SplitMix64(PAIR_SUM_SEED ^ (q << 24) ^ chi.index(&group));
            let mut tuples = Vec::with_capacity(200);
            while tuples.len() < 200 {
                let m = [rng.below(q), rng.below(q), rng.below(q), rng.below(q)];
                let mut distinct = m.to_vec();
                distinct.sort_unstable();
                distinct.dedup();
                if distinct.len() >= 3 {
                    tuples.push(m);
                }
            }
            for check in polynomial_pair_sum_checks(&group, &chi, &tuples).unwrap() {
                assert!(
                    check.holds,
                    "pair sum exceeded its ceiling at q={q}, m={:?}: |S|={} > {}",
                    check.m, check.abs, check.bound
                );
                checks += 1;
            }
        }
    }
    println!("criterion 3: PASS — {checks} seeded pair-sum checks, zero failures");
}

/// Criterion 4 — pair-counting moment bound, sampled: ≥ 10⁴ seeded tuples
/// (q ≤ 500, M ≤ q^{5/8}, N ≤ q^{5/8}, A = ⌊N·q^{−1/4}/10⌋ ≥ 1):
/// Σ v(l) = A_q·N exactly, and Σ v(l)² ≤ A_q² + 2AN·log(2A_q).
#[test]
fn criterion_4_moment_bound_sampled() {
    let mut rng = SplitMix64(MOMENT_SEED);
    let mut samples = 0u64;
    while samples < 10_000 {
        let q = 2 + rng.below(499); // 2..=500
        let interval_cap = (q as f64).powf(0.625).floor() as u64;
        // Admissible N: A = ⌊N·q^{−1/4}/10⌋ ≥ 1 needs N ≥ 10·q^{1/4}.
        let n_min = (10.0 * (q as f64).powf(0.25)).ceil() as u64;
        if n_min > interval_cap {
            continue; // no admissible interval length at this q
        }
        let n = n_min + rng.below(interval_cap - n_min + 1);
        let m = rng.below(interval_cap + 1);
        let a = ((n as f64) * (q as f64).powf(-0.25) / 10.0).floor() as u64;
        assert!(a >= 1);

        let stats = v_statistics(q, m, n, a).unwrap();
        // Σv = A_q·N is also asserted inside v_statistics in exact
        // arithmetic; re-assert here so the criterion reads off this test.
        assert_eq!(stats.sum_v, stats.a_q * n, "pair total mismatch at q={q}");
        assert!(
            (stats.sum_v2 as f64) <= stats.moment_bound,
            "second moment exceeded its bound at q={q}, M={m}, N={n}, A={a}"
        );
        samples += 1;
    }
    println!("criterion 4: PASS — {samples} seeded (q,M,N,A) tuples, zero failures");
}

/// Criterion 5 — the constant chain at 50-digit precision:
/// √10/(√10−2)·3.3325 ∈ [9.066, 9.07], 9.07·e^{γ/2} ∈ [12.10, 12.11],
/// 3e^{−γ} ∈ [1.684, 1.69], and the truncated geometric series
/// Σ (2/√10)^k matches √10/(√10−2) within 1e−25.
#[test]
fn criterion_5_constant_chain() {
    let chain = constant_chain();
    for (label, link) in [
        ("recursion total", &chain.recursion_total),
        ("loglog form", &chain.loglog_form),
        ("totient shift", &chain.totient_shift),
    ] {
        assert!(
            link.within,
            "{label} = {} fell outside [{}, {}]",
            link.digits, link.low, link.high
        );
        // ≥ 30 digits actually present in the recomputation.
        let digits = link.digits.chars().filter(|c| c.is_ascii_digit()).count();
        assert!(digits >= 30, "{label} carries only {digits} digits");
    }
    assert!(
        chain.geometric_gap < GEOMETRIC_TOLERANCE,
        "geometric series gap {} too large",
        chain.geometric_gap
    );
    println!(
        "criterion 5: PASS — {} / {} / {} all within bounds; geometric gap {:.2e} after {} terms",
        chain.recursion_total.digits,
        chain.loglog_form.digits,
        chain.totient_shift.digits,
        chain.geometric_gap,
        chain.geometric_terms
    );
}

/// Criterion 6 — threshold facts in log domain: e^{e^{9.594}} prints as
/// 8.03104·10^{6373} to 6 significant figures; (1/10)·q^{1/8} > 5·10^{795}
/// at the threshold; the explicit q-range condition holds at
/// loglog q = 9.594 and fails at loglog q = 2.
#[test]
fn criterion_6_threshold_facts() {
    let facts = threshold_facts();
    assert!(facts.mantissa_matches_printed, "mantissa {}", facts.threshold_mantissa);
    assert_eq!(facts.threshold_exponent10, 6373);
    assert!(facts.eighth_root_exceeds, "eighth-root comparison failed");
    assert!(facts.window_cutoff_consistent);

    let at_threshold = check_q_conditions(9.594, 0.5);
    let small = check_q_conditions(2.0, 0.5);
    assert!(at_threshold.cond_2_6, "explicit condition must hold at the threshold");
    assert!(!small.cond_2_6, "explicit condition must fail at loglog q = 2");
    println!(
        "criterion 6: PASS — mantissa {:.6} · 10^{}, eighth-root margin {:.4} decades, \
         explicit condition holds at 9.594 / fails at 2",
        facts.threshold_mantissa,
        facts.threshold_exponent10,
        facts.eighth_root_log10 - facts.comparison_log10
    );
}

/// Criterion 7 — the three growth ceilings for every 3 ≤ n ≤ 10⁶:
/// φ(n) > n/(e^γ loglog n + 3/loglog n), d(n) ≤ n^{1.066/loglog n},
/// ω(n) ≤ log n/loglog n + 1.45743·log n/(loglog n)².
#[test]
fn criterion_7_growth_ceilings_exhaustive() {
    let sieve = Sieve::new(1_000_000);
    let mut worst_totient_slack = f64::INFINITY;
    for n in 3..=1_000_000u64 {
        let bounds = growth_bounds_from(&sieve.profile(n));
        assert!(bounds.totient_floor.holds, "totient floor failed at n={n}");
        assert!(bounds.divisor_ceiling.holds, "divisor ceiling failed at n={n}");
        assert!(bounds.omega_ceiling.holds, "omega ceiling failed at n={n}");
        worst_totient_slack = worst_totient_slack.min(bounds.totient_floor.slack);
    }
    println!(
        "criterion 7: PASS — 3..=10^6 exhaustive, tightest totient slack {worst_totient_slack:.6}"
    );
}

/// Criterion 8 — character infrastructure for all q ≤ 1000: every
/// non-principal character sums to zero over a full period (within 1e−9),
/// the primitive-character count matches Σ_{d|q} μ(q/d)·φ(d), and every
/// character is recovered by inducing from its conductor restriction.
#[test]
fn criterion_8_character_infrastructure() {
    let sieve = Sieve::new(1000);
    let mut conductor_groups: HashMap<u64, UnitGroup> = HashMap::new();
    let mut characters = 0u64;
    for q in 1..=1000u64 {
        let group = UnitGroup::new(q).unwrap();
        let units: Vec<u64> =
            if q == 1 { vec![0] } else { (0..q).filter(|&n| group.is_unit(n)).collect() };
        assert_eq!(units.len() as u64, group.phi(), "unit count mismatch at q={q}");

        // Character values are λ(q)-th roots of unity; index a shared
        // table instead of re-evaluating trig per (χ, n). Each entry is
        // bit-identical to `TurnFraction::to_complex` on the reduced
        // fraction, so the rows summed here are the table's own values.
        let l = group.exponent();
        let roots: Vec<Complex64> = (0..l).map(|k| TurnFraction::new(k, l).to_complex()).collect();

        let mut primitive_count = 0u64;
        for chi in group.characters() {
            characters += 1;
            let mut row = Complex64::new(0.0, 0.0);
            for &n in &units {
                let v = chi.eval(&group, n).expect("enumerated units evaluate nonzero");
                row += roots[(v.num() * (l / v.den())) as usize];
            }
            if chi.is_principal() {
                assert!(
                    (row.re - group.phi() as f64).abs() < ORTHOGONALITY_TOLERANCE
                        && row.im.abs() < ORTHOGONALITY_TOLERANCE,
                    "principal row must sum to φ(q) at q={q}"
                );
            } else {
                assert!(
                    row.norm() < ORTHOGONALITY_TOLERANCE,
                    "non-principal row sum |{row}| at q={q}"
                );
            }
            if chi.is_primitive() {
                primitive_count += 1;
            }

            // Conductor round-trip: restrict to the conductor, induce back.
            let cond = chi.conductor();
            let conductor_group = conductor_groups
                .entry(cond)
                .or_insert_with(|| UnitGroup::new(cond).unwrap());
            let core = chi.restrict_to(&group, conductor_group).unwrap();
            assert!(core.is_primitive(), "conductor restriction must be primitive");
            assert_eq!(core.q(), cond);
            let induced = group.induced_from(conductor_group, &core).unwrap();
            assert_eq!(induced, chi, "conductor round trip failed at q={q}");
        }

        let expected: i64 = factorize(q)
            .divisors()
            .into_iter()
            .map(|d| sieve.mu(q / d) as i64 * sieve.phi(d) as i64)
            .sum();
        assert_eq!(primitive_count as i64, expected, "primitive count mismatch at q={q}");
    }
    println!("criterion 8: PASS — {characters} characters over q ≤ 1000, zero failures");
}

/// Criterion 9 — empirical sweep of the main ceiling, out of hypothesis:
/// for every q ≤ 1000, every primitive χ, window lengths on a doubling
/// grid up to ⌊q^{5/8}⌋: max_M |S(M,N)| never exceeds the ceiling
/// evaluated with exact ω(q), d(q), φ(q). The minimum ratio is reported;
/// only the inequality is asserted.
#[test]
fn criterion_9_relaxed_bound_sweep() {
    let mut checks = 0u64;
    let mut min_ratio = f64::INFINITY;
    let mut max_ratio = 0.0f64;
    for q in 3..=1000u64 {
        let group = UnitGroup::new(q).unwrap();
        let prof = profile(q);
        let n_max = (q as f64).powf(0.625).floor() as u64;
        let grid = window_length_grid(n_max);
        let log_q = (q as f64).ln();
        let phi_ratio = q as f64 / prof.phi as f64;
        for chi in group.characters().filter(|c| c.is_primitive()) {
            for window in max_window_sums(&group, &chi, &grid) {
                let report = burgess_bound_theorem(
                    log_q,
                    (window.n as f64).ln(),
                    prof.omega,
                    DivisorInput::Exact(prof.d),
                    phi_ratio,
                    true,
                    Some(window.max_abs),
                )
                .unwrap();
                assert!(report.out_of_hypothesis, "desk-scale q is always below threshold");
                let comparison = report.holds_vs.unwrap();
                assert!(
                    comparison.holds,
                    "measured sum exceeded the ceiling at q={q}, N={}: {} vs {}",
                    window.n,
                    window.max_abs,
                    report.value.value()
                );
                let ratio = window.max_abs / report.value.value();
                min_ratio = min_ratio.min(ratio);
                max_ratio = max_ratio.max(ratio);
                checks += 1;
            }
        }
    }
    println!(
        "criterion 9: PASS — {checks} (q,χ,N) sweeps held out of hypothesis; \
         measured/bound ratio in [{min_ratio:.3e}, {max_ratio:.3e}]"
    );
}
