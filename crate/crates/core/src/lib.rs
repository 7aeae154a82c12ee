//! Discrete-time quantum trajectories of repeated perfect measurements.
//!
//! A perfect measurement on a d-dimensional quantum system is a family of
//! Kraus operators `a_1, ..., a_k` with `Σ aᵢ† aᵢ = 1`; outcome `i` occurs
//! with probability `tr(aᵢ θ aᵢ†)` and maps the state `θ` to the normalized
//! posterior `aᵢ θ aᵢ† / tr(aᵢ θ aᵢ†)`. Repeating the measurement yields a
//! Markov chain of density matrices — the quantum trajectory.
//!
//! This crate samples those chains with seeded, reproducible randomness,
//! tracks the moment submartingales `tr(Θₙᵐ)`, and decides between the two
//! asymptotic regimes: almost-sure purification of the trajectory, or the
//! presence of *dark subspaces* — subspaces on which every outcome operator
//! acts as a scaled isometry, so that no information ever leaks out and the
//! trajectory performs a random walk of unitarily related projections.
//!
//! Modules:
//! - [`linalg`]: dense complex primitives (Hermitian eigendecomposition,
//!   polar decomposition, support projections, moment traces).
//! - [`instrument`]: construction and validation of perfect measurements.
//! - [`trajectory`]: trajectory sampling, cylinder-set probabilities,
//!   seeded ensembles.
//! - [`diagnostics`]: moment series, the Nielsen-inequality gap, plateau
//!   classification, the purification/dark dichotomy report.
//! - [`darkspace`]: scalar-compression checks, dark-projection
//!   verification and detection, the dark random walk.

pub mod consts;
pub mod darkspace;
pub mod diagnostics;
mod error;
pub mod instrument;
pub mod jsonio;
pub mod linalg;
pub mod trajectory;

pub use error::{Error, Result};
pub use instrument::{AncillaSpec, KrausInstrument};
pub use linalg::{C64, CMat, DensityMatrix, HermitianMatrix, Projection};
pub use trajectory::{OutcomeWord, PathRecord, TrajectoryConfig};
