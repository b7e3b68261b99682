//! Lossless beam splitters acting on covariance matrices by unitary
//! congruence, and sequential execution of beam-splitter networks.

use std::f64::consts::PI;

use nalgebra::{DMatrix, Matrix4};
use num_complex::Complex64;

use crate::entanglement::ReportRequest;
use crate::error::{Error, Result};
use crate::gaussian::{MultiModeCM, SingleModeCM};

/// Off-diagonal magnitudes below this are treated as zero by [`matched_phase`].
const ZERO_OFFDIAGONAL: f64 = 1e-12;

/// A lossless two-port beam splitter with transmittance `cos²θ`.
///
/// `modes.0` is the port whose rows come first in [`bs_unitary`]. Exchanging
/// the two ports is equivalent to keeping the order and using `(−θ, −φ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BeamSplitter {
    theta: f64,
    phi: f64,
    modes: (String, String),
}

impl BeamSplitter {
    /// `theta` must lie in `[0, π]`; `phi` is wrapped onto `(−π, π]`.
    pub fn new(theta: f64, phi: f64, first: impl Into<String>, second: impl Into<String>) -> Result<Self> {
        let (first, second) = (first.into(), second.into());
        if !theta.is_finite() || !phi.is_finite() {
            return Err(Error::NonFinite("beam splitter angle"));
        }
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::InvalidSplitter(format!("theta = {theta} lies outside [0, π]")));
        }
        if first == second {
            return Err(Error::InvalidSplitter(format!("both ports refer to mode `{first}`")));
        }
        Ok(Self {
            theta,
            phi: wrap_phase(phi),
            modes: (first, second),
        })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn modes(&self) -> (&str, &str) {
        (&self.modes.0, &self.modes.1)
    }

    pub fn transmittance(&self) -> f64 {
        self.theta.cos().powi(2)
    }
}

/// Maps any finite angle onto `(−π, π]`.
pub fn wrap_phase(phi: f64) -> f64 {
    if phi > -PI && phi <= PI {
        return phi;
    }
    let two_pi = 2.0 * PI;
    let mut w = phi.rem_euclid(two_pi);
    if w > PI {
        w -= two_pi;
    }
    w
}

/// Beam-splitter matrix in bosonic ordering `(α₁*, α₁, α₂*, α₂)`:
///
/// ```text
/// [  cosθ          0             sinθ·e^{iφ}   0           ]
/// [  0             cosθ          0             sinθ·e^{−iφ} ]
/// [ −sinθ·e^{−iφ}  0             cosθ          0           ]
/// [  0            −sinθ·e^{iφ}   0             cosθ        ]
/// ```
pub fn bs_unitary(theta: f64, phi: f64) -> Matrix4<Complex64> {
    let c = Complex64::new(theta.cos(), 0.0);
    let s = theta.sin();
    let z = Complex64::new(0.0, 0.0);
    let e = Complex64::from_polar(s, phi);
    let e_conj = Complex64::from_polar(s, -phi);
    Matrix4::new(
        c, z, e, z, //
        z, c, z, e_conj, //
        -e_conj, z, c, z, //
        z, -e, z, c,
    )
}

/// `V' = Ũ† V Ũ`, where `Ũ` is [`bs_unitary`] on the two target modes and
/// the identity elsewhere. Applied in bosonic form.
pub fn apply_bs(cm: &MultiModeCM, bs: &BeamSplitter) -> Result<MultiModeCM> {
    let i = cm.index_of(&bs.modes.0)?;
    let j = cm.index_of(&bs.modes.1)?;
    let dim = 2 * cm.n_modes();
    let u = bs_unitary(bs.theta, bs.phi);
    let idx = [2 * i, 2 * i + 1, 2 * j, 2 * j + 1];
    let mut embedded = DMatrix::<Complex64>::identity(dim, dim);
    for (r, &row) in idx.iter().enumerate() {
        for (c, &col) in idx.iter().enumerate() {
            embedded[(row, col)] = u[(r, c)];
        }
    }
    let v = cm.bosonic();
    let out = embedded.adjoint() * v * &embedded;
    MultiModeCM::from_bosonic(cm.labels().to_vec(), &out)
}

/// `½[arg(prev) − arg(next)]`, the phase that aligns the off-diagonal of the
/// second port with that of the first. Zero when either off-diagonal vanishes.
pub fn matched_phase(prev_offdiag: Complex64, next_offdiag: Complex64) -> f64 {
    if prev_offdiag.norm() < ZERO_OFFDIAGONAL || next_offdiag.norm() < ZERO_OFFDIAGONAL {
        return 0.0;
    }
    0.5 * (prev_offdiag.arg() - next_offdiag.arg())
}

/// Sub-covariance matrix on `keep`, in the original mode order.
pub fn partial_trace<S: AsRef<str>>(cm: &MultiModeCM, keep: &[S]) -> Result<MultiModeCM> {
    if keep.is_empty() {
        return Err(Error::EmptyKeepSet);
    }
    let mut idx = cm.indices_of(keep)?;
    idx.sort_unstable();
    let rows: Vec<usize> = idx.iter().flat_map(|&k| [2 * k, 2 * k + 1]).collect();
    let g = cm.quadrature().select_rows(&rows).select_columns(&rows);
    let labels = idx.iter().map(|&k| cm.labels()[k].clone()).collect();
    MultiModeCM::from_quadrature(labels, g)
}

/// Phase of a splitter in a [`NetworkSpec`], either given or resolved from
/// the state reaching the splitter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PhaseSetting {
    Fixed(f64),
    Matched,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SplitterSpec {
    pub name: String,
    pub modes: (String, String),
    pub theta: f64,
    pub phi: PhaseSetting,
}

/// Input states, an ordered list of splitters and the reports to evaluate.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct NetworkSpec {
    pub inputs: Vec<(String, SingleModeCM)>,
    pub splitters: Vec<SplitterSpec>,
    pub reports: Vec<ReportRequest>,
}

impl NetworkSpec {
    pub fn validate(&self) -> Result<()> {
        if self.inputs.is_empty() {
            return Err(Error::ShapeMismatch("network declares no modes".into()));
        }
        let declared = |l: &str| self.inputs.iter().any(|(name, _)| name == l);
        for (i, (name, _)) in self.inputs.iter().enumerate() {
            if self.inputs[..i].iter().any(|(other, _)| other == name) {
                return Err(Error::DuplicateLabel(name.clone()));
            }
        }
        for s in &self.splitters {
            for m in [&s.modes.0, &s.modes.1] {
                if !declared(m) {
                    return Err(Error::UnknownLabel(m.clone()));
                }
            }
            if s.modes.0 == s.modes.1 {
                return Err(Error::InvalidSplitter(format!(
                    "splitter `{}` couples mode `{}` to itself",
                    s.name, s.modes.0
                )));
            }
        }
        for r in &self.reports {
            r.validate()?;
            for m in r.party_a.iter().chain(&r.party_b) {
                if !declared(m) {
                    return Err(Error::UnknownLabel(m.clone()));
                }
            }
        }
        Ok(())
    }
}

/// Result of [`run_network`]: the assembled input, the state after every
/// splitter, and the splitters with their phases resolved.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkRun {
    pub input: MultiModeCM,
    pub steps: Vec<MultiModeCM>,
    pub splitters: Vec<BeamSplitter>,
}

impl NetworkRun {
    pub fn output(&self) -> &MultiModeCM {
        self.steps.last().unwrap_or(&self.input)
    }

    /// State immediately before splitter `i`.
    pub fn before(&self, i: usize) -> &MultiModeCM {
        if i == 0 {
            &self.input
        } else {
            &self.steps[i - 1]
        }
    }
}

pub fn run_network(spec: &NetworkSpec) -> Result<NetworkRun> {
    spec.validate()?;
    let input = MultiModeCM::product(&spec.inputs)?;
    let mut steps = Vec::with_capacity(spec.splitters.len());
    let mut resolved = Vec::with_capacity(spec.splitters.len());
    let mut current = input.clone();
    for s in &spec.splitters {
        let phi = match s.phi {
            PhaseSetting::Fixed(phi) => phi,
            PhaseSetting::Matched => {
                let first = current.mode(&s.modes.0)?;
                let second = current.mode(&s.modes.1)?;
                matched_phase(first.b(), second.b())
            }
        };
        let bs = BeamSplitter::new(s.theta, phi, s.modes.0.clone(), s.modes.1.clone())?;
        current = apply_bs(&current, &bs)?;
        steps.push(current.clone());
        resolved.push(bs);
    }
    Ok(NetworkRun {
        input,
        steps,
        splitters: resolved,
    })
}
