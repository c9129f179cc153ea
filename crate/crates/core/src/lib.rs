//! Dirichlet character arithmetic and explicit composite-modulus
//! character-sum bounds.
//!
//! The crate is organized bottom-up:
//!
//! - [`arith`] — factorization, multiplicative profiles (ω, d, φ, μ), exact
//!   coprime counting with its inclusion–exclusion error, and the explicit
//!   growth floors/ceilings those profiles satisfy.
//! - [`characters`] — the unit group `(ℤ/qℤ)^×` as an explicit product of
//!   cyclic blocks, Dirichlet characters as exponent vectors, exact
//!   root-of-unity evaluation, conductors, and primitivity.
//! - [`charsums`] — exact complex character sums: maximal interval sums,
//!   shifted fourth moments, and factored polynomial pair sums, each paired
//!   with its explicit ceiling.
//! - [`bounds`] — log-domain evaluation of the explicit interval-sum bounds
//!   (main theorem, corollary, large-modulus conditions, recursion tail),
//!   plus the high-precision rational arithmetic used to certify the
//!   floating-point constants.
//!
//! All inequalities are evaluated as *checks*: each evaluator returns both
//! sides plus the slack, never just a boolean, so sweeps can report margins.

pub mod arith;
pub mod bounds;
pub mod characters;
pub mod charsums;
pub mod constants;

pub use arith::{
    coprime_count, coprime_count_from, factorize, growth_bounds, growth_bounds_from, is_prime,
    profile, ArithError, ArithProfile, BoundCheck, CoprimeCount, Factorization, GrowthBounds,
    Sieve,
};
pub use bounds::{
    aq_ratio_floor, burgess_bound_corollary, burgess_bound_theorem, check_q_conditions,
    classic_bounds, constant_chain, lambda2_prime, recursion_unroll, threshold_facts,
    BoundInputs, BoundReport, BoundsError, ChainConstant, Comparison, ConstantChain,
    DivisorInput, LogReal, ModulusScale, QConditions, RecursionUnroll, ThresholdFacts,
};
pub use characters::{
    turn_sum_cancels_exactly, Character, CharacterError, TurnFraction, UnitGroup,
};
pub use charsums::{
    fourth_moment_check, interval_sum, max_interval_sum, max_window_sums,
    polynomial_pair_sum_check, polynomial_pair_sum_checks, v_statistics, window_length_grid,
    CharsumError, FourthMomentCheck, IntervalSum, IntervalSumMax, PolynomialPairCheck,
    VStatistics, WindowMax,
};
