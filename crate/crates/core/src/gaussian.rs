//! Covariance-matrix algebra for zero-mean Gaussian states.
//!
//! Two orderings are in play. The bosonic form orders phase-space variables
//! as `(α₁*, α₁, …, αₙ*, αₙ)` and is Hermitian; the quadrature form orders
//! them as `(x₁, p₁, …, xₙ, pₙ)` and is real symmetric. Both use the
//! convention where the vacuum covariance matrix is `½·I`. Per mode the two
//! are related by `V = T γ T†` with `T = [[1, i], [1, -i]] / √2`.
//!
//! [`MultiModeCM`] stores the quadrature form and materializes the bosonic
//! form on demand.

use nalgebra::{DMatrix, Matrix2, Schur};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Slack allowed on `a² − |b|² = 1/4` before a state stops counting as pure.
pub const PURITY_TOLERANCE: f64 = 1e-9;

/// Maximum separation between the two members of a `±iν` eigenvalue pair.
pub const PAIRING_TOLERANCE: f64 = 1e-8;

/// Largest imaginary residue tolerated when mapping a bosonic matrix back to
/// real quadrature form.
const REALITY_TOLERANCE: f64 = 1e-10;

const SYMMETRY_TOLERANCE: f64 = 1e-12;

/// Single-mode covariance matrix `[[a, b], [b*, a]]` in bosonic form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingleModeCM {
    a: f64,
    b: Complex64,
}

/// Eigen-structure of a single-mode covariance matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralSummary {
    /// Minimum eigenvalue `a − |b|`.
    pub lambda_min: f64,
    /// Maximum eigenvalue `a + |b|`.
    pub lambda_max: f64,
    /// `−log₂(2λ)` in bits; negative for states noisier than vacuum.
    pub nonclassicality: f64,
    /// `max(0, ½ − λ)`.
    pub nonclassical_depth: f64,
}

impl SingleModeCM {
    pub fn new(a: f64, b: Complex64) -> Result<Self> {
        if !a.is_finite() || !b.re.is_finite() || !b.im.is_finite() {
            return Err(Error::NonFinite("single-mode covariance entries"));
        }
        if a <= 0.0 {
            return Err(Error::NonPositive(a));
        }
        let det = a * a - b.norm_sqr();
        if det < 0.25 - PURITY_TOLERANCE {
            return Err(Error::UncertaintyViolation {
                a,
                b_mag: b.norm(),
                det,
            });
        }
        Ok(Self { a, b })
    }

    pub fn vacuum() -> Self {
        Self {
            a: 0.5,
            b: Complex64::new(0.0, 0.0),
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    /// `a² − |b|²`, the determinant of the 2×2 block.
    pub fn determinant(&self) -> f64 {
        self.a * self.a - self.b.norm_sqr()
    }

    pub fn is_pure(&self) -> bool {
        (self.determinant() - 0.25).abs() <= PURITY_TOLERANCE
    }

    pub fn spectral(&self) -> SpectralSummary {
        let mag = self.b.norm();
        let lambda_min = self.a - mag;
        SpectralSummary {
            lambda_min,
            lambda_max: self.a + mag,
            nonclassicality: -(2.0 * lambda_min).log2(),
            nonclassical_depth: (0.5 - lambda_min).max(0.0),
        }
    }

    pub fn bosonic(&self) -> Matrix2<Complex64> {
        Matrix2::new(
            Complex64::new(self.a, 0.0),
            self.b,
            self.b.conj(),
            Complex64::new(self.a, 0.0),
        )
    }

    /// `[[a + Re b, Im b], [Im b, a − Re b]]`.
    pub fn quadrature(&self) -> Matrix2<f64> {
        Matrix2::new(self.a + self.b.re, self.b.im, self.b.im, self.a - self.b.re)
    }
}

/// Builds a validated single-mode state with `b = b_mag·e^{i·b_arg}`.
pub fn make_state(a: f64, b_mag: f64, b_arg: f64) -> Result<SingleModeCM> {
    if !b_mag.is_finite() || !b_arg.is_finite() {
        return Err(Error::NonFinite("off-diagonal magnitude or phase"));
    }
    SingleModeCM::new(a, Complex64::from_polar(b_mag, b_arg))
}

/// Pure squeezed state with off-diagonal `b_mag·e^{i·b_arg}`; the diagonal is
/// fixed to `√(1/4 + b_mag²)` so the uncertainty bound is saturated.
pub fn pure_state(b_mag: f64, b_arg: f64) -> SingleModeCM {
    SingleModeCM {
        a: (0.25 + b_mag * b_mag).sqrt(),
        b: Complex64::from_polar(b_mag, b_arg),
    }
}

pub fn spectral(state: &SingleModeCM) -> SpectralSummary {
    state.spectral()
}

/// Which representation a [`convert`] call starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    Bosonic,
    Quadrature,
}

fn mode_transform(n: usize) -> DMatrix<Complex64> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut t = DMatrix::zeros(2 * n, 2 * n);
    for k in 0..n {
        let (r, c) = (2 * k, 2 * k);
        t[(r, c)] = Complex64::new(s, 0.0);
        t[(r, c + 1)] = Complex64::new(0.0, s);
        t[(r + 1, c)] = Complex64::new(s, 0.0);
        t[(r + 1, c + 1)] = Complex64::new(0.0, -s);
    }
    t
}

fn even_dimension(rows: usize, cols: usize) -> Result<usize> {
    if rows != cols || !rows.is_multiple_of(2) || rows == 0 {
        return Err(Error::ShapeMismatch(format!(
            "covariance matrix must be 2n×2n with n ≥ 1, got {rows}×{cols}"
        )));
    }
    Ok(rows / 2)
}

pub fn quadrature_to_bosonic(gamma: &DMatrix<f64>) -> Result<DMatrix<Complex64>> {
    let n = even_dimension(gamma.nrows(), gamma.ncols())?;
    let t = mode_transform(n);
    let g = gamma.map(|x| Complex64::new(x, 0.0));
    Ok(&t * g * t.adjoint())
}

/// Inverse of [`quadrature_to_bosonic`]. Fails if the input does not have the
/// conjugate-pair structure of a bosonic covariance matrix.
pub fn bosonic_to_quadrature(v: &DMatrix<Complex64>) -> Result<DMatrix<f64>> {
    let n = even_dimension(v.nrows(), v.ncols())?;
    let t = mode_transform(n);
    let g = t.adjoint() * v * &t;
    let scale = g.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let residue = g.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    if residue > REALITY_TOLERANCE * scale {
        return Err(Error::NumericalFailure(format!(
            "bosonic matrix maps to a non-real quadrature matrix (imaginary residue {residue:e})"
        )));
    }
    Ok(g.map(|z| z.re))
}

/// Representation change on a raw matrix. Returns the other representation
/// as a complex matrix (real entries for the quadrature target).
pub fn convert(matrix: &DMatrix<Complex64>, from: Representation) -> Result<DMatrix<Complex64>> {
    match from {
        Representation::Bosonic => bosonic_to_quadrature(matrix).map(|g| g.map(|x| Complex64::new(x, 0.0))),
        Representation::Quadrature => {
            even_dimension(matrix.nrows(), matrix.ncols())?;
            let residue = matrix.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
            if residue > REALITY_TOLERANCE {
                return Err(Error::ShapeMismatch("quadrature covariance matrix must be real".into()));
            }
            quadrature_to_bosonic(&matrix.map(|z| z.re))
        }
    }
}

/// Standard symplectic form `⊕ [[0, 1], [−1, 0]]` in `(x, p)` ordering.
pub fn symplectic_form(n: usize) -> DMatrix<f64> {
    let mut omega = DMatrix::zeros(2 * n, 2 * n);
    for k in 0..n {
        omega[(2 * k, 2 * k + 1)] = 1.0;
        omega[(2 * k + 1, 2 * k)] = -1.0;
    }
    omega
}

/// Covariance matrix of `n` labelled modes, stored in quadrature form.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiModeCM {
    labels: Vec<String>,
    quadrature: DMatrix<f64>,
}

impl MultiModeCM {
    /// Wraps a real symmetric `2n×2n` matrix. Physicality is not enforced
    /// here because partial transposes are legitimately unphysical; use
    /// [`MultiModeCM::is_physical`] for that.
    pub fn from_quadrature(labels: Vec<String>, gamma: DMatrix<f64>) -> Result<Self> {
        let n = even_dimension(gamma.nrows(), gamma.ncols())?;
        if labels.len() != n {
            return Err(Error::ShapeMismatch(format!(
                "{} labels for a {n}-mode covariance matrix",
                labels.len()
            )));
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        if gamma.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("covariance matrix entries"));
        }
        let scale = gamma.amax().max(1.0);
        let asym = (&gamma - gamma.transpose()).amax();
        if asym > SYMMETRY_TOLERANCE * scale {
            return Err(Error::ShapeMismatch(format!(
                "quadrature covariance matrix is not symmetric (deviation {asym:e})"
            )));
        }
        let quadrature = (&gamma + gamma.transpose()) * 0.5;
        Ok(Self { labels, quadrature })
    }

    pub fn from_bosonic(labels: Vec<String>, v: &DMatrix<Complex64>) -> Result<Self> {
        even_dimension(v.nrows(), v.ncols())?;
        let scale = v.iter().map(|z| z.norm()).fold(1.0, f64::max);
        let herm = (v - v.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
        if herm > SYMMETRY_TOLERANCE * scale {
            return Err(Error::ShapeMismatch(format!(
                "bosonic covariance matrix is not Hermitian (deviation {herm:e})"
            )));
        }
        Self::from_quadrature(labels, bosonic_to_quadrature(v)?)
    }

    /// Block-diagonal product state in the given order.
    pub fn product<S: AsRef<str>>(modes: &[(S, SingleModeCM)]) -> Result<Self> {
        let n = modes.len();
        if n == 0 {
            return Err(Error::ShapeMismatch("product of zero modes".into()));
        }
        let mut gamma = DMatrix::zeros(2 * n, 2 * n);
        for (k, (_, state)) in modes.iter().enumerate() {
            gamma
                .fixed_view_mut::<2, 2>(2 * k, 2 * k)
                .copy_from(&state.quadrature());
        }
        let labels = modes.iter().map(|(l, _)| l.as_ref().to_string()).collect();
        Self::from_quadrature(labels, gamma)
    }

    pub fn n_modes(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn quadrature(&self) -> &DMatrix<f64> {
        &self.quadrature
    }

    pub fn bosonic(&self) -> DMatrix<Complex64> {
        quadrature_to_bosonic(&self.quadrature).expect("stored matrix has even dimension")
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn contains(&self, label: &str) -> bool {
        self.labels.iter().any(|l| l == label)
    }

    /// Reduced single-mode state of `label`.
    pub fn mode(&self, label: &str) -> Result<SingleModeCM> {
        let k = self.index_of(label)?;
        let g = self.quadrature.fixed_view::<2, 2>(2 * k, 2 * k);
        let a = 0.5 * (g[(0, 0)] + g[(1, 1)]);
        let b = Complex64::new(0.5 * (g[(0, 0)] - g[(1, 1)]), g[(0, 1)]);
        SingleModeCM::new(a, b)
    }

    pub fn determinant(&self) -> f64 {
        self.quadrature.determinant()
    }

    /// Robertson–Schrödinger condition `γ + iΩ/2 ≥ 0`, with the smallest
    /// eigenvalue allowed down to `-tolerance`.
    pub fn is_physical(&self, tolerance: f64) -> bool {
        let n = self.n_modes();
        let omega = symplectic_form(n);
        let m = DMatrix::from_fn(2 * n, 2 * n, |i, j| {
            Complex64::new(self.quadrature[(i, j)], 0.5 * omega[(i, j)])
        });
        m.symmetric_eigenvalues().iter().all(|&e| e >= -tolerance)
    }

    pub(crate) fn with_quadrature(&self, quadrature: DMatrix<f64>) -> Self {
        Self {
            labels: self.labels.clone(),
            quadrature,
        }
    }

    /// Resolves a label group to indices, rejecting unknown or repeated labels.
    pub fn indices_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(labels.len());
        for l in labels {
            let k = self.index_of(l.as_ref())?;
            if out.contains(&k) {
                return Err(Error::DuplicateLabel(l.as_ref().to_string()));
            }
            out.push(k);
        }
        Ok(out)
    }
}

/// Symplectic spectrum of a real symmetric `2n×2n` matrix, ascending.
pub fn symplectic_spectrum(gamma: &DMatrix<f64>) -> Result<Vec<f64>> {
    let n = even_dimension(gamma.nrows(), gamma.ncols())?;
    let m = symplectic_form(n) * gamma;
    let schur = Schur::try_new(m, f64::EPSILON, 10_000)
        .ok_or_else(|| Error::NumericalFailure("Schur decomposition did not converge".into()))?;
    let eig = schur.complex_eigenvalues();

    // Eigenvalues of Ωγ are ±iν, so those of iΩγ are ∓ν; the moduli coincide.
    let mut moduli: Vec<f64> = Vec::with_capacity(2 * n);
    for z in eig.iter() {
        let modulus = z.norm();
        if z.re.abs() > PAIRING_TOLERANCE * modulus.max(1.0) {
            return Err(Error::NumericalFailure(format!(
                "eigenvalue {z} of Ωγ is not purely imaginary"
            )));
        }
        moduli.push(modulus);
    }
    moduli.sort_by(f64::total_cmp);
    let mut nus = Vec::with_capacity(n);
    for pair in moduli.chunks_exact(2) {
        if (pair[1] - pair[0]).abs() > PAIRING_TOLERANCE * pair[1].max(1.0) {
            return Err(Error::NumericalFailure(format!(
                "symplectic eigenvalues fail to pair: {} vs {}",
                pair[0], pair[1]
            )));
        }
        nus.push(0.5 * (pair[0] + pair[1]));
    }
    Ok(nus)
}

pub fn symplectic_eigenvalues(cm: &MultiModeCM) -> Result<Vec<f64>> {
    symplectic_spectrum(&cm.quadrature)
}

/// Flips the sign of the momentum row and column of every listed mode.
pub fn partial_transpose<S: AsRef<str>>(cm: &MultiModeCM, modes: &[S]) -> Result<MultiModeCM> {
    let idx = cm.indices_of(modes)?;
    let mut g = cm.quadrature.clone();
    for k in idx {
        let p = 2 * k + 1;
        g.row_mut(p).neg_mut();
        g.column_mut(p).neg_mut();
    }
    Ok(cm.with_quadrature(g))
}

/// `‖ρ²‖₁ = Tr ρ² = 2⁻ⁿ·det(γ)^{−1/2}`.
pub fn purity_norm(cm: &MultiModeCM) -> Result<f64> {
    let det = cm.determinant();
    if det.is_nan() || det <= 0.0 {
        return Err(Error::NumericalFailure(format!(
            "covariance determinant {det:e} is not positive"
        )));
    }
    Ok(0.5f64.powi(cm.n_modes() as i32) / det.sqrt())
}

/// Checks that `party_a` is a nonempty proper subset of the modes of `cm`.
pub(crate) fn check_bipartition<S: AsRef<str>>(cm: &MultiModeCM, party_a: &[S]) -> Result<Vec<usize>> {
    if party_a.is_empty() {
        return Err(Error::InvalidBipartition("first party is empty".into()));
    }
    let idx = cm.indices_of(party_a)?;
    if idx.len() == cm.n_modes() {
        return Err(Error::InvalidBipartition(
            "second party is empty; first party covers every mode".into(),
        ));
    }
    Ok(idx)
}

/// `‖ρ^{T_A}‖₁ = ∏ₖ max(1, 1/(2ν̃ₖ))` over the symplectic eigenvalues of the
/// partially transposed covariance matrix. The bipartition is `party_a`
/// against every remaining mode of `cm`.
pub fn ppt_norm<S: AsRef<str>>(cm: &MultiModeCM, party_a: &[S]) -> Result<f64> {
    check_bipartition(cm, party_a)?;
    let transposed = partial_transpose(cm, party_a)?;
    let nus = symplectic_eigenvalues(&transposed)?;
    Ok(nus.iter().map(|&nu| (0.5 / nu).max(1.0)).product())
}
