//! Dense complex matrix primitives for small dimensions (d ≤ ~64).
//!
//! Everything operates on `nalgebra` dynamic matrices over `Complex64`.
//! The newtypes here ([`HermitianMatrix`], [`DensityMatrix`], [`Projection`])
//! enforce their class invariants at construction, so downstream code can
//! rely on them without re-checking.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::consts;
use crate::{Error, Result};

pub type C64 = Complex64;
pub type CMat = DMatrix<C64>;

/// Entrywise max modulus, `‖m‖_max`.
pub fn max_norm(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `‖a − b‖_max`; the matrices must have equal shape.
pub fn max_norm_diff(a: &CMat, b: &CMat) -> f64 {
    debug_assert_eq!(a.shape(), b.shape());
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// `‖m − m†‖_max`.
pub fn adjoint_deviation(m: &CMat) -> f64 {
    max_norm_diff(m, &m.adjoint())
}

pub fn all_finite(m: &CMat) -> bool {
    m.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

/// Real part of the trace. The imaginary part of the trace of any matrix
/// appearing in a probability is round-off; callers that care assert on it.
pub fn trace_re(m: &CMat) -> f64 {
    m.trace().re
}

fn check_square(m: &CMat) -> Result<usize> {
    if m.nrows() == 0 || m.nrows() != m.ncols() {
        return Err(Error::DimensionMismatch(format!(
            "expected a nonempty square matrix, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    if !all_finite(m) {
        return Err(Error::InvalidArgument("matrix has non-finite entries".into()));
    }
    Ok(m.nrows())
}

fn symmetrize(m: &CMat) -> CMat {
    (m + m.adjoint()) * C64::new(0.5, 0.0)
}

// ---------------------------------------------------------------------------
// Hermitian matrices
// ---------------------------------------------------------------------------

/// A self-adjoint matrix. Construction checks the deviation `‖X − X†‖_max`
/// against the relative tolerance and stores the symmetrization `(X + X†)/2`,
/// which keeps the eigensolver contracts downstream.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix {
    mat: CMat,
}

impl HermitianMatrix {
    pub fn new(mat: CMat) -> Result<Self> {
        check_square(&mat)?;
        let deviation = adjoint_deviation(&mat);
        let tol = consts::HERM_REL_TOL * (1.0 + max_norm(&mat));
        if deviation > tol {
            return Err(Error::NotHermitian { deviation, tol });
        }
        Ok(Self { mat: symmetrize(&mat) })
    }

    /// Wrap a matrix that is Hermitian by construction (e.g. `a† X a` of a
    /// Hermitian `X`). Symmetrizes unconditionally; debug builds assert the
    /// deviation was round-off.
    pub(crate) fn from_trusted(mat: CMat) -> Self {
        debug_assert!(
            adjoint_deviation(&mat) <= 1e-9 * (1.0 + max_norm(&mat)),
            "from_trusted received a matrix far from Hermitian"
        );
        Self { mat: symmetrize(&mat) }
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &CMat {
        &self.mat
    }

    pub fn into_matrix(self) -> CMat {
        self.mat
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut vals: Vec<f64> = self.mat.clone().symmetric_eigenvalues().iter().copied().collect();
        vals.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
        vals
    }
}

/// Hermitian eigendecomposition: returns eigenvalues in ascending order and
/// the matching orthonormal eigenvectors as columns, so that
/// `X = Σ λⱼ vⱼ vⱼ†`.
pub fn hermitian_eigen(x: &HermitianMatrix) -> (Vec<f64>, CMat) {
    let n = x.dim();
    let se = x.mat.clone().symmetric_eigen();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| {
        se.eigenvalues[a]
            .partial_cmp(&se.eigenvalues[b])
            .expect("finite eigenvalues")
    });
    let vals: Vec<f64> = idx.iter().map(|&j| se.eigenvalues[j]).collect();
    let vecs = CMat::from_fn(n, n, |r, c| se.eigenvectors[(r, idx[c])]);
    (vals, vecs)
}

/// Product of all eigenvalues strictly above `rank_tol · λ_max`, counted with
/// multiplicity. The empty product (zero matrix) is 1.
///
/// Fails if an eigenvalue sits below `−rank_tol · ‖X‖`, i.e. the input is not
/// positive semidefinite within tolerance.
pub fn det_pos(x: &HermitianMatrix, rank_tol: f64) -> Result<f64> {
    if rank_tol <= 0.0 {
        return Err(Error::InvalidArgument("rank_tol must be positive".into()));
    }
    let vals = x.eigenvalues();
    let spectral_norm = vals.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
    let min = vals[0];
    if min < -rank_tol * spectral_norm {
        return Err(Error::NotPositive { min_eig: min });
    }
    let lambda_max = vals.last().copied().unwrap_or(0.0).max(0.0);
    let cut = rank_tol * lambda_max;
    Ok(vals.iter().filter(|&&v| v > cut).product())
}

/// Projection onto the span of eigenvectors with eigenvalue above
/// `rank_tol · λ_max`. A (numerically) zero input yields the zero projection.
pub fn support_projection(x: &HermitianMatrix, rank_tol: f64) -> Result<Projection> {
    if rank_tol <= 0.0 {
        return Err(Error::InvalidArgument("rank_tol must be positive".into()));
    }
    let n = x.dim();
    let (vals, vecs) = hermitian_eigen(x);
    let lambda_max = vals.last().copied().unwrap_or(0.0).max(0.0);
    let cut = rank_tol * lambda_max;
    let mut p = CMat::zeros(n, n);
    for (j, &v) in vals.iter().enumerate() {
        if v > cut {
            let col = vecs.column(j);
            // p += v v†
            for r in 0..n {
                for c in 0..n {
                    p[(r, c)] += col[r] * col[c].conj();
                }
            }
        }
    }
    Projection::new(p)
}

/// Polar decomposition `A = V·P` with `P = √(A†A)` positive semidefinite and
/// `V` the partial isometry `A·P⁺`, so that `V†V` is the support projection
/// of `P`. `V` vanishes on the kernel of `P`, which makes the decomposition
/// canonical and reproducible.
pub fn polar_decompose(a: &CMat) -> Result<(CMat, HermitianMatrix)> {
    let n = check_square(a)?;
    let h = HermitianMatrix::from_trusted(a.adjoint() * a);
    let (vals, vecs) = hermitian_eigen(&h);
    let singulars: Vec<f64> = vals.iter().map(|&v| v.max(0.0).sqrt()).collect();
    let s_max = singulars.iter().fold(0.0f64, |m, &s| m.max(s));
    let cut = consts::RANK_TOL * s_max;
    let mut p = CMat::zeros(n, n);
    let mut p_pinv = CMat::zeros(n, n);
    for j in 0..n {
        let s = singulars[j];
        let col = vecs.column(j);
        let inv = if s > cut { 1.0 / s } else { 0.0 };
        for r in 0..n {
            for c in 0..n {
                let outer = col[r] * col[c].conj();
                p[(r, c)] += outer * C64::new(s, 0.0);
                p_pinv[(r, c)] += outer * C64::new(inv, 0.0);
            }
        }
    }
    let v = a * p_pinv;
    Ok((v, HermitianMatrix::from_trusted(p)))
}

// ---------------------------------------------------------------------------
// Density matrices
// ---------------------------------------------------------------------------

/// Positive unit-trace matrix: the state of the system.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    mat: CMat,
}

impl DensityMatrix {
    /// Validate Hermiticity, positivity (min eigenvalue ≥ −1e−10) and unit
    /// trace, then store the symmetrized matrix.
    pub fn new(mat: CMat) -> Result<Self> {
        let herm = HermitianMatrix::new(mat)?;
        let vals = herm.eigenvalues();
        if vals[0] < -consts::EIG_NEG_TOL {
            return Err(Error::NotPositive { min_eig: vals[0] });
        }
        let trace = trace_re(herm.matrix());
        if (trace - 1.0).abs() > consts::TRACE_TOL {
            return Err(Error::TraceNotOne { trace, tol: consts::TRACE_TOL });
        }
        Ok(Self { mat: herm.into_matrix() })
    }

    /// Re-project a near-state back onto the density-matrix manifold:
    /// symmetrize, clip eigenvalues in `[−1e−10, 0)` to zero, renormalize
    /// the trace. Eigenvalues below −1e−10 are an error, not round-off.
    pub fn project(mat: &CMat) -> Result<Self> {
        check_square(mat)?;
        let sym = symmetrize(mat);
        let herm = HermitianMatrix { mat: sym };
        let (vals, vecs) = hermitian_eigen(&herm);
        if vals[0] < -consts::EIG_NEG_TOL * (1.0 + vals.last().copied().unwrap_or(0.0).abs()) {
            return Err(Error::NotPositive { min_eig: vals[0] });
        }
        let clipped: Vec<f64> = vals.iter().map(|&v| v.max(0.0)).collect();
        let total: f64 = clipped.iter().sum();
        if total <= 0.0 {
            return Err(Error::InvalidArgument("cannot normalize a zero state".into()));
        }
        let n = herm.dim();
        let mut out = CMat::zeros(n, n);
        for (j, &w) in clipped.iter().enumerate() {
            if w > 0.0 {
                let col = vecs.column(j);
                let scale = C64::new(w / total, 0.0);
                for r in 0..n {
                    for c in 0..n {
                        out[(r, c)] += col[r] * col[c].conj() * scale;
                    }
                }
            }
        }
        Ok(Self { mat: out })
    }

    pub(crate) fn from_trusted(mat: CMat) -> Self {
        debug_assert!((trace_re(&mat) - 1.0).abs() <= 1e-8, "trusted state trace off");
        debug_assert!(adjoint_deviation(&mat) <= 1e-9, "trusted state not Hermitian");
        Self { mat }
    }

    pub fn maximally_mixed(d: usize) -> Self {
        let w = C64::new(1.0 / d as f64, 0.0);
        Self { mat: CMat::identity(d, d) * w }
    }

    /// Pure state `ψψ†` from an amplitude vector; the vector is normalized.
    pub fn pure(amplitudes: &[C64]) -> Result<Self> {
        let d = amplitudes.len();
        if d == 0 {
            return Err(Error::InvalidArgument("empty amplitude vector".into()));
        }
        let norm2: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if !norm2.is_finite() || norm2 <= 0.0 {
            return Err(Error::InvalidArgument("amplitude vector has zero or non-finite norm".into()));
        }
        let mut mat = CMat::zeros(d, d);
        for r in 0..d {
            for c in 0..d {
                mat[(r, c)] = amplitudes[r] * amplitudes[c].conj() / norm2;
            }
        }
        Ok(Self { mat })
    }

    pub fn from_diagonal(weights: &[f64]) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidArgument("empty weight vector".into()));
        }
        if weights.iter().any(|&w| !w.is_finite() || w < -consts::EIG_NEG_TOL) {
            return Err(Error::InvalidArgument("weights must be nonnegative and finite".into()));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > consts::TRACE_TOL {
            return Err(Error::TraceNotOne { trace: total, tol: consts::TRACE_TOL });
        }
        let d = weights.len();
        let mat = CMat::from_fn(d, d, |r, c| {
            if r == c { C64::new(weights[r], 0.0) } else { C64::new(0.0, 0.0) }
        });
        Ok(Self { mat })
    }

    /// Full-rank random state `GG†/tr(GG†)` with complex Gaussian `G`.
    pub fn random_mixed<R: Rng>(d: usize, rng: &mut R) -> Self {
        let g = gaussian_matrix(d, d, rng);
        let w = &g * g.adjoint();
        let t = trace_re(&w);
        Self { mat: w * C64::new(1.0 / t, 0.0) }
    }

    /// Haar-random pure state.
    pub fn random_pure<R: Rng>(d: usize, rng: &mut R) -> Self {
        let v = gaussian_vector(d, rng);
        Self::pure(&v).expect("gaussian vector is almost surely nonzero")
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &CMat {
        &self.mat
    }

    pub fn trace(&self) -> f64 {
        trace_re(&self.mat)
    }

    /// `tr(θ²)` without an eigendecomposition: for Hermitian θ this is the
    /// squared Frobenius norm, `Σ |θᵢⱼ|²`.
    pub fn purity(&self) -> f64 {
        self.mat.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        HermitianMatrix { mat: self.mat.clone() }.eigenvalues()
    }

    /// `tr(θᵐ)` for m = 1..=m_max from a single eigendecomposition.
    /// Eigenvalues are clipped at zero before powering, which keeps high
    /// moments stable against −1e−10-scale round-off.
    pub fn moments(&self, m_max: usize) -> Result<Vec<f64>> {
        if m_max < 1 {
            return Err(Error::InvalidArgument("moment order must be ≥ 1".into()));
        }
        let vals = self.eigenvalues();
        let clipped: Vec<f64> = vals.iter().map(|&v| v.max(0.0)).collect();
        let mut out = Vec::with_capacity(m_max);
        let mut powers = clipped.clone();
        out.push(powers.iter().sum());
        for _ in 2..=m_max {
            for (pw, &lam) in powers.iter_mut().zip(clipped.iter()) {
                *pw *= lam;
            }
            out.push(powers.iter().sum());
        }
        Ok(out)
    }
}

/// `tr(θᵐ)` computed from the eigenvalue vector.
pub fn moment_trace(theta: &DensityMatrix, m: usize) -> Result<f64> {
    Ok(*theta.moments(m)?.last().expect("m ≥ 1"))
}

/// True iff the sorted spectra of the two states differ by at most `tol`
/// in max norm — i.e. the states are unitarily equivalent within tolerance.
pub fn spectra_unitarily_equivalent(
    theta: &DensityMatrix,
    rho: &DensityMatrix,
    tol: f64,
) -> Result<bool> {
    if theta.dim() != rho.dim() {
        return Err(Error::DimensionMismatch(format!(
            "state dimensions differ: {} vs {}",
            theta.dim(),
            rho.dim()
        )));
    }
    let a = theta.eigenvalues();
    let b = rho.eigenvalues();
    let max_diff = a
        .iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    Ok(max_diff <= tol)
}

// ---------------------------------------------------------------------------
// Projections
// ---------------------------------------------------------------------------

/// An orthogonal projection with integer rank `round(tr p)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Projection {
    mat: CMat,
    rank: usize,
}

impl Projection {
    pub fn new(mat: CMat) -> Result<Self> {
        check_square(&mat)?;
        let herm_dev = adjoint_deviation(&mat);
        if herm_dev > consts::PROJ_HERM_TOL {
            return Err(Error::NotHermitian { deviation: herm_dev, tol: consts::PROJ_HERM_TOL });
        }
        let sym = symmetrize(&mat);
        let idem = max_norm_diff(&(&sym * &sym), &sym);
        if idem > consts::PROJ_IDEM_TOL {
            return Err(Error::NotProjection { residual: idem });
        }
        let trace = trace_re(&sym);
        let rank = trace.round();
        if (trace - rank).abs() > consts::PROJ_TRACE_TOL || rank < 0.0 {
            return Err(Error::NotProjection { residual: (trace - rank).abs() });
        }
        Ok(Self { mat: sym, rank: rank as usize })
    }

    pub fn identity(d: usize) -> Self {
        Self { mat: CMat::identity(d, d), rank: d }
    }

    /// Projection onto the span of the given standard-basis indices.
    pub fn from_basis_indices(d: usize, indices: &[usize]) -> Result<Self> {
        let mut seen = vec![false; d];
        for &i in indices {
            if i >= d {
                return Err(Error::InvalidArgument(format!("basis index {i} out of range for dim {d}")));
            }
            if seen[i] {
                return Err(Error::InvalidArgument(format!("basis index {i} repeated")));
            }
            seen[i] = true;
        }
        let mut mat = CMat::zeros(d, d);
        for &i in indices {
            mat[(i, i)] = C64::new(1.0, 0.0);
        }
        Ok(Self { mat, rank: indices.len() })
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrix(&self) -> &CMat {
        &self.mat
    }
}

// ---------------------------------------------------------------------------
// Random generators and tensor helpers
// ---------------------------------------------------------------------------

fn gaussian_matrix<R: Rng>(rows: usize, cols: usize, rng: &mut R) -> CMat {
    // column-major fill, real part before imaginary part
    let mut m = CMat::zeros(rows, cols);
    for c in 0..cols {
        for r in 0..rows {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            m[(r, c)] = C64::new(re, im);
        }
    }
    m
}

fn gaussian_vector<R: Rng>(d: usize, rng: &mut R) -> Vec<C64> {
    (0..d)
        .map(|_| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            C64::new(re, im)
        })
        .collect()
}

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of the R diagonal folded into Q.
pub fn haar_unitary<R: Rng>(n: usize, rng: &mut R) -> CMat {
    let g = gaussian_matrix(n, n, rng);
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..n {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { C64::new(1.0, 0.0) };
        for i in 0..n {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// Haar-distributed unit vector.
pub fn haar_unit_vector<R: Rng>(d: usize, rng: &mut R) -> Vec<C64> {
    let mut v = gaussian_vector(d, rng);
    let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for z in &mut v {
        *z /= norm;
    }
    v
}

/// Partial trace over the second tensor factor of a `(d1·d2) × (d1·d2)`
/// matrix, with the first factor as the major index.
pub fn partial_trace_second(m: &CMat, d1: usize, d2: usize) -> Result<CMat> {
    let n = check_square(m)?;
    if n != d1 * d2 {
        return Err(Error::DimensionMismatch(format!(
            "matrix is {n}x{n} but d1·d2 = {}",
            d1 * d2
        )));
    }
    let mut out = CMat::zeros(d1, d1);
    for a in 0..d1 {
        for b in 0..d1 {
            let mut acc = C64::new(0.0, 0.0);
            for c in 0..d2 {
                acc += m[(a * d2 + c, b * d2 + c)];
            }
            out[(a, b)] = acc;
        }
    }
    Ok(out)
}
