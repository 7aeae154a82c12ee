//! Numerical tolerances and budget guards shared across the crate.
//!
//! The underlying conditions (completeness, positivity, scalar compression)
//! are exact algebraic statements; these constants pin down their numerical
//! meaning so the same inputs always classify the same way.

/// Relative Hermiticity tolerance: `‖X − X†‖_max ≤ HERM_REL_TOL · (1 + ‖X‖_max)`.
pub const HERM_REL_TOL: f64 = 1e-12;

/// Absolute Hermiticity bound for projections, `‖p − p†‖_max`.
pub const PROJ_HERM_TOL: f64 = 1e-12;

/// Idempotency bound for projections, `‖p² − p‖_max`.
pub const PROJ_IDEM_TOL: f64 = 1e-10;

/// How far the trace of a projection may sit from the nearest integer.
pub const PROJ_TRACE_TOL: f64 = 1e-8;

/// Most negative eigenvalue a density matrix may carry; anything in
/// `[-EIG_NEG_TOL, 0)` is treated as round-off and clipped, anything below
/// is an error.
pub const EIG_NEG_TOL: f64 = 1e-10;

/// Allowed deviation of `tr θ` from 1 for density matrices.
pub const TRACE_TOL: f64 = 1e-10;

/// Completeness residual bound `‖Σ aᵢ†aᵢ − 1‖_max` for instruments.
pub const COMPLETENESS_TOL: f64 = 1e-10;

/// Relative eigenvalue threshold separating "zero" from "strictly positive"
/// in supports, positive determinants, and polar decompositions.
pub const RANK_TOL: f64 = 1e-8;

/// Outcome probabilities at or below this floor count as impossible.
pub const PROB_FLOOR: f64 = 1e-14;

/// Allowed deviation of `Σ πᵢ` from 1 before sampling refuses to proceed.
pub const PROB_SUM_TOL: f64 = 1e-9;

/// Max-norm tolerance for the scalar-compression condition `p aᵢ†aᵢ p = λᵢ p`.
pub const DARK_TOL: f64 = 1e-8;

/// Purity level that counts as pure for trajectory classification.
pub const PURITY_THRESHOLD: f64 = 1.0 - 1e-8;

/// Trailing window (in steps) over which classification statistics are taken.
pub const CLASSIFY_WINDOW: usize = 50;

/// Maximum purity drift over the window for a plateau verdict.
pub const PLATEAU_TOL: f64 = 1e-9;

/// A plateau must sit at purity ≤ 1 − PLATEAU_MARGIN to count as mixed.
pub const PLATEAU_MARGIN: f64 = 1e-3;

/// Bound on the summed squared-increment functionals under which a plateaued
/// state qualifies as a dark candidate.
pub const DELTA_TOL: f64 = 1e-8;

/// Fraction of an ensemble that must plateau mixed before dark detection
/// extracts a candidate.
pub const SIGNIFICANT_FRACTION: f64 = 0.05;

/// Hard cap on `k^m` for exhaustive outcome-word enumeration.
pub const WORD_BUDGET: u64 = 10_000_000;

/// Default closure budget for dark verification, per unit of dimension.
pub const MAX_CLOSURE_PER_DIM: usize = 4;
