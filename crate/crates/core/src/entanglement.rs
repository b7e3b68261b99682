//! Bipartite entanglement quantifiers on Gaussian covariance matrices.
//!
//! * logarithmic negativity `E_N`, from the two-mode determinant formula or
//!   from the partially transposed symplectic spectrum;
//! * residual nonclassicality `S_N`, the drop in single-mode nonclassicality
//!   across one beam splitter;
//! * `ξ`, evaluated from block determinants (`S − ½ − 8·det V`) for 1:1
//!   bipartitions or from trace norms
//!   (`½(1 − 1/‖ρ^{T_A}‖₁²)(‖ρ^{T_A}‖₁²/‖ρ²‖₁² − 1)`) for any bipartition;
//! * contangle `E_N²` and residual entanglement.
//!
//! Every quantifier whose magnitude falls below [`ZERO_THRESHOLD`] is
//! reported as exactly zero.

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, Matrix2};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gaussian::{check_bipartition, ppt_norm, purity_norm, MultiModeCM, SingleModeCM};
use crate::network::{partial_trace, NetworkRun};

pub const ZERO_THRESHOLD: f64 = 1e-12;

pub fn snap(x: f64) -> f64 {
    if x.abs() < ZERO_THRESHOLD {
        0.0
    } else {
        x
    }
}

fn det2(m: &Matrix2<Complex64>) -> f64 {
    (m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]).re
}

/// Block determinants of a two-mode bosonic covariance matrix
/// `[[A₁, (AB)₁], [(AB)₁†, B₁]]`.
struct TwoModeBlocks {
    det_a: f64,
    det_b: f64,
    det_c: f64,
    det_v: f64,
}

impl TwoModeBlocks {
    fn of(cm: &MultiModeCM) -> Result<Self> {
        if cm.n_modes() != 2 {
            return Err(Error::ShapeMismatch(format!(
                "two-mode formula applied to a {}-mode state",
                cm.n_modes()
            )));
        }
        let v: DMatrix<Complex64> = cm.bosonic();
        let block = |r: usize, c: usize| -> Matrix2<Complex64> { v.fixed_view::<2, 2>(r, c).into_owned() };
        Ok(Self {
            det_a: det2(&block(0, 0)),
            det_b: det2(&block(2, 2)),
            det_c: det2(&block(0, 2)),
            det_v: v.determinant().re,
        })
    }

    /// `S = 2·Det[A₁] + 2·Det[B₁] − 4·Det[(AB)₁]`.
    fn seralian(&self) -> f64 {
        2.0 * self.det_a + 2.0 * self.det_b - 4.0 * self.det_c
    }
}

/// Two-mode logarithmic negativity,
/// `max{0, −½·log₂(S − √(S² − 16·Det V))}`.
///
/// The discriminant vanishes when both partially transposed symplectic
/// eigenvalues coincide, where the square root amplifies roundoff to about
/// `√ε`. Discriminants within a few ulps of zero are taken as exactly zero;
/// elsewhere agreement with [`logneg_bipartition`] is limited to ~1e−8 near
/// that point.
pub fn logneg_two_mode(cm: &MultiModeCM) -> Result<f64> {
    let blocks = TwoModeBlocks::of(cm)?;
    let s = blocks.seralian();
    let mut disc = s * s - 16.0 * blocks.det_v;
    if disc <= 4.0 * f64::EPSILON * s * s {
        disc = 0.0;
    }
    let arg = s - disc.sqrt();
    if arg.is_nan() || arg <= 0.0 {
        return Err(Error::NumericalFailure(format!(
            "logarithmic-negativity argument {arg:e} is not positive"
        )));
    }
    Ok(snap((-0.5 * arg.log2()).max(0.0)))
}

/// `max(0, log₂‖ρ^{T_A}‖₁)` for `party_a` against the rest of `cm`.
pub fn logneg_bipartition<S: AsRef<str>>(cm: &MultiModeCM, party_a: &[S]) -> Result<f64> {
    Ok(snap(ppt_norm(cm, party_a)?.log2().max(0.0)))
}

/// `S_N = log₂(λ_{A₁}λ_{B₁}/(λ_Aλ_B))` for two inputs mixed at a splitter of
/// angle `theta` with matched phase, where
/// `λ_{A₁} = cos²θ·λ_A + sin²θ·λ_B` and `λ_{B₁} = sin²θ·λ_A + cos²θ·λ_B`.
pub fn residual_nonclassicality(state_a: &SingleModeCM, state_b: &SingleModeCM, theta: f64) -> f64 {
    let la = state_a.spectral().lambda_min;
    let lb = state_b.spectral().lambda_min;
    let (c2, s2) = (theta.cos().powi(2), theta.sin().powi(2));
    let la1 = c2 * la + s2 * lb;
    let lb1 = s2 * la + c2 * lb;
    snap(((la1 * lb1) / (la * lb)).log2())
}

/// `N_A + N_B − N_{A₁} − N_{B₁}` read off the reduced single-mode states of
/// `before` and `after`.
pub fn nonclassicality_drop(before: &MultiModeCM, after: &MultiModeCM, a: &str, b: &str) -> Result<f64> {
    let n = |cm: &MultiModeCM, l: &str| cm.mode(l).map(|s| s.spectral().nonclassicality);
    Ok(snap(n(before, a)? + n(before, b)? - n(after, a)? - n(after, b)?))
}

/// `ξ = S − ½ − 8·Det V` from the block determinants of a two-mode state.
pub fn xi_two_mode(cm: &MultiModeCM) -> Result<f64> {
    let blocks = TwoModeBlocks::of(cm)?;
    Ok(snap(blocks.seralian() - 0.5 - 8.0 * blocks.det_v))
}

/// `ξ = ½(1 − 1/P²)(P²/Q² − 1)` with `P = ‖ρ^{T_A}‖₁` and `Q = ‖ρ²‖₁`.
pub fn xi_trace_norm_path<S: AsRef<str>>(cm: &MultiModeCM, party_a: &[S]) -> Result<f64> {
    let p2 = ppt_norm(cm, party_a)?.powi(2);
    let q2 = purity_norm(cm)?.powi(2);
    Ok(snap(0.5 * (1.0 - 1.0 / p2) * (p2 / q2 - 1.0)))
}

/// `ξ` for `party_a` against the rest of `cm`: the determinant formula when
/// both sides are single modes, the trace-norm formula otherwise.
pub fn xi<S: AsRef<str>>(cm: &MultiModeCM, party_a: &[S]) -> Result<f64> {
    check_bipartition(cm, party_a)?;
    if cm.n_modes() == 2 {
        xi_two_mode(cm)
    } else {
        xi_trace_norm_path(cm, party_a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormXi {
    /// `2(λ_B − λ_A)(Λ_A − Λ_B)·sin²(2θ)`.
    pub xi: f64,
    /// `8λ_Aλ_B(Λ_A − Λ_B)/(λ_B − λ_A)`, the factor relating `ξ` to
    /// `λ_{A₁}λ_{B₁}/(λ_Aλ_B) − 1`. `None` when `λ_A = λ_B`.
    pub coefficient: Option<f64>,
}

/// Closed form of `ξ` after one splitter for pure inputs with matched phase.
pub fn xi_closed_form(lam_a: f64, cap_a: f64, lam_b: f64, cap_b: f64, theta: f64) -> ClosedFormXi {
    let dl = lam_b - lam_a;
    if dl.abs() <= ZERO_THRESHOLD * lam_a.abs().max(lam_b.abs()).max(1.0) {
        return ClosedFormXi {
            xi: 0.0,
            coefficient: None,
        };
    }
    let s = (2.0 * theta).sin();
    ClosedFormXi {
        xi: snap(2.0 * dl * (cap_a - cap_b) * s * s),
        coefficient: Some(8.0 * lam_a * lam_b * (cap_a - cap_b) / dl),
    }
}

/// Squared logarithmic negativity.
pub fn contangle<S: AsRef<str>>(cm: &MultiModeCM, party_a: &[S]) -> Result<f64> {
    Ok(snap(logneg_bipartition(cm, party_a)?.powi(2)))
}

/// Partial trace onto `party_a ∪ party_b` after checking the two groups are
/// nonempty and disjoint. Modes keep their order in `cm`.
pub fn reduce<S: AsRef<str>>(cm: &MultiModeCM, party_a: &[S], party_b: &[S]) -> Result<MultiModeCM> {
    if party_a.is_empty() || party_b.is_empty() {
        return Err(Error::InvalidBipartition("both parties must be nonempty".into()));
    }
    let keep: Vec<&str> = party_a.iter().chain(party_b).map(|s| s.as_ref()).collect();
    partial_trace(cm, &keep)
}

fn between<S, F>(cm: &MultiModeCM, party_a: &[S], party_b: &[S], f: F) -> Result<f64>
where
    S: AsRef<str>,
    F: Fn(&MultiModeCM, &[S]) -> Result<f64>,
{
    let reduced = reduce(cm, party_a, party_b)?;
    f(&reduced, party_a)
}

/// Which quantifier a monogamy comparison uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonogamyMetric {
    LogNeg,
    Xi,
    Contangle,
}

impl MonogamyMetric {
    fn between<S: AsRef<str>>(self, cm: &MultiModeCM, a: &[S], b: &[S]) -> Result<f64> {
        match self {
            MonogamyMetric::LogNeg => between(cm, a, b, logneg_bipartition),
            MonogamyMetric::Xi => between(cm, a, b, xi),
            MonogamyMetric::Contangle => between(cm, a, b, contangle),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Monogamy {
    /// `E(A : B∪C)`.
    pub lhs: f64,
    /// `E(A : B) + E(A : C)`.
    pub rhs: f64,
    /// `lhs − rhs`; negative values violate monogamy.
    pub slack: f64,
}

pub fn monogamy_check<S: AsRef<str>>(
    cm: &MultiModeCM,
    a: &[S],
    b: &[S],
    c: &[S],
    metric: MonogamyMetric,
) -> Result<Monogamy> {
    let bc: Vec<&str> = b.iter().chain(c).map(|s| s.as_ref()).collect();
    let a_ref: Vec<&str> = a.iter().map(|s| s.as_ref()).collect();
    let b_ref: Vec<&str> = b.iter().map(|s| s.as_ref()).collect();
    let c_ref: Vec<&str> = c.iter().map(|s| s.as_ref()).collect();
    for l in &a_ref {
        if bc.contains(l) {
            return Err(Error::InvalidBipartition(format!("mode `{l}` appears in two parties")));
        }
    }
    let lhs = metric.between(cm, &a_ref, &bc)?;
    let rhs = metric.between(cm, &a_ref, &b_ref)? + metric.between(cm, &a_ref, &c_ref)?;
    Ok(Monogamy {
        lhs,
        rhs,
        slack: lhs - rhs,
    })
}

/// `𝓡(A:BC) = 𝓒(A:BC) − 𝓒(A:B) − 𝓒(A:C)` with contangle `𝓒`.
pub fn residual_entanglement(cm: &MultiModeCM, a: &str, b: &str, c: &str) -> Result<f64> {
    monogamy_check(cm, &[a], &[b], &[c], MonogamyMetric::Contangle).map(|m| m.slack)
}

/// `ξ(A:BC) − ξ(A:B) − ξ(A:C)`.
pub fn residual_xi(cm: &MultiModeCM, a: &str, b: &str, c: &str) -> Result<f64> {
    monogamy_check(cm, &[a], &[b], &[c], MonogamyMetric::Xi).map(|m| m.slack)
}

/// All quantifiers for one bipartition of a state.
#[derive(Debug, Clone, PartialEq)]
pub struct EntanglementReport {
    pub party_a: Vec<String>,
    pub party_b: Vec<String>,
    pub log_negativity: f64,
    pub xi: f64,
    /// Only populated for a 1:1 bipartition freshly produced by one splitter.
    pub residual_nonclassicality: Option<f64>,
    pub contangle: f64,
    pub ppt_trace_norm: f64,
    pub purity_trace_norm: f64,
}

impl EntanglementReport {
    pub fn evaluate<S: AsRef<str>>(cm: &MultiModeCM, party_a: &[S], party_b: &[S]) -> Result<Self> {
        let reduced = reduce(cm, party_a, party_b)?;
        let ppt = ppt_norm(&reduced, party_a)?;
        let log_negativity = snap(ppt.log2().max(0.0));
        Ok(Self {
            party_a: party_a.iter().map(|s| s.as_ref().to_string()).collect(),
            party_b: party_b.iter().map(|s| s.as_ref().to_string()).collect(),
            log_negativity,
            xi: xi(&reduced, party_a)?,
            residual_nonclassicality: None,
            contangle: snap(log_negativity * log_negativity),
            ppt_trace_norm: ppt,
            purity_trace_norm: purity_norm(&reduced)?,
        })
    }
}

/// Quantity a netfile `report` line asks for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Metric {
    LogNeg,
    Xi,
    Sn,
    Contangle,
    Residual,
}

impl Metric {
    pub const ALL: [Metric; 5] = [
        Metric::LogNeg,
        Metric::Xi,
        Metric::Sn,
        Metric::Contangle,
        Metric::Residual,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Metric::LogNeg => "logneg",
            Metric::Xi => "xi",
            Metric::Sn => "sn",
            Metric::Contangle => "contangle",
            Metric::Residual => "residual",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Metric::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown metric `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportRequest {
    pub metric: Metric,
    pub party_a: Vec<String>,
    pub party_b: Vec<String>,
}

impl ReportRequest {
    pub fn new(metric: Metric, party_a: &[&str], party_b: &[&str]) -> Self {
        Self {
            metric,
            party_a: party_a.iter().map(|s| s.to_string()).collect(),
            party_b: party_b.iter().map(|s| s.to_string()).collect(),
        }
    }

    /// `<metric>_<partyA><partyB>`, e.g. `xi_AB` or `logneg_ABC`.
    pub fn column_name(&self) -> String {
        format!("{}_{}{}", self.metric, self.party_a.concat(), self.party_b.concat())
    }

    pub fn validate(&self) -> Result<()> {
        if self.party_a.is_empty() || self.party_b.is_empty() {
            return Err(Error::InvalidBipartition(format!("{}: empty party", self.metric)));
        }
        let all: Vec<&String> = self.party_a.iter().chain(&self.party_b).collect();
        for (i, l) in all.iter().enumerate() {
            if all[..i].contains(l) {
                return Err(Error::InvalidBipartition(format!(
                    "{}: mode `{l}` listed twice",
                    self.metric
                )));
            }
        }
        match self.metric {
            Metric::Sn if self.party_a.len() != 1 || self.party_b.len() != 1 => {
                Err(Error::InvalidBipartition("sn needs one mode on each side".into()))
            }
            Metric::Residual if self.party_a.len() != 1 || self.party_b.len() != 2 => {
                Err(Error::InvalidBipartition("residual needs one mode against two".into()))
            }
            _ => Ok(()),
        }
    }
}

/// Evaluates one report against a network run. Everything except `sn` is a
/// function of the final state; `sn` is taken across the last splitter that
/// couples exactly the two requested modes.
pub fn evaluate_request(run: &NetworkRun, request: &ReportRequest) -> Result<f64> {
    request.validate()?;
    let cm = run.output();
    let (a, b) = (&request.party_a, &request.party_b);
    match request.metric {
        Metric::LogNeg => between(cm, a, b, logneg_bipartition),
        Metric::Xi => between(cm, a, b, xi),
        Metric::Contangle => between(cm, a, b, contangle),
        Metric::Residual => residual_entanglement(cm, &a[0], &b[0], &b[1]),
        Metric::Sn => {
            let (x, y) = (a[0].as_str(), b[0].as_str());
            let step = run
                .splitters
                .iter()
                .rposition(|bs| {
                    let (p, q) = bs.modes();
                    (p == x && q == y) || (p == y && q == x)
                })
                .ok_or_else(|| Error::InvalidBipartition(format!("sn: no splitter couples `{x}` and `{y}`")))?;
            nonclassicality_drop(run.before(step), &run.steps[step], x, y)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::{make_state, partial_transpose, pure_state, symplectic_eigenvalues};
    use crate::network::{apply_bs, BeamSplitter};
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn mix(a: SingleModeCM, b: SingleModeCM, theta: f64, phi: f64) -> MultiModeCM {
        let cm = MultiModeCM::product(&[("A", a), ("B", b)]).unwrap();
        apply_bs(&cm, &BeamSplitter::new(theta, phi, "A", "B").unwrap()).unwrap()
    }

    fn fig1() -> MultiModeCM {
        mix(pure_state(0.3, 0.0), pure_state(0.5, 0.0), PI / 4.0, 0.0)
    }

    // Reference values below come from evaluating the closed forms by hand at
    // double precision (λ = √(1/4+|b|²) − |b|, Λ = √(1/4+|b|²) + |b|):
    //   ξ   = 2(λ_B − λ_A)(Λ_A − Λ_B)·sin²(π/2)        = 0.04924225024706…
    //   E_N = −log₂(2ν̃) with ν̃² = (Δ̃ − √(Δ̃² − 1/4))/2  = 0.22545622131…
    // They differ from the rounded figures 0.049244 / 0.225461 by < 1e-5.
    const XI_FIG1: f64 = 0.049_242_250_247_064;
    const EN_FIG1: f64 = 0.225_456_221_314_2;

    fn lam(b: f64) -> (f64, f64) {
        let a = (0.25 + b * b).sqrt();
        (a - b, a + b)
    }

    #[test]
    fn closed_form_oracle_matches_frozen_values() {
        let (la, ca) = lam(0.3);
        let (lb, cb) = lam(0.5);
        let xi = 2.0 * (lb - la) * (ca - cb);
        assert_relative_eq!(xi, XI_FIG1, epsilon = 1e-14);
        // At θ = π/4 the output blocks are A₁ = B₁ = (A+B)/2 and (AB)₁ = (A−B)/2,
        // so S = 4·det((A+B)/2) − 4·det((A−B)/2) and Det V = 1/16.
        let det = |x: f64, y: f64| x * x - y * y;
        let (a, b) = (0.34f64.sqrt(), 0.3);
        let (c, d) = (0.5f64.sqrt(), 0.5);
        let s = 4.0 * det((a + c) / 2.0, (b + d) / 2.0) - 4.0 * det((a - c) / 2.0, (b - d) / 2.0);
        let en = -0.5 * (s - (s * s - 1.0).sqrt()).log2();
        assert_relative_eq!(en, EN_FIG1, epsilon = 1e-12);
        assert_relative_eq!(s - 0.5 - 0.5, XI_FIG1, epsilon = 1e-14);
    }

    #[test]
    fn logneg_two_mode_examples() {
        assert_relative_eq!(logneg_two_mode(&fig1()).unwrap(), EN_FIG1, epsilon = 1e-12);
        assert!((logneg_two_mode(&fig1()).unwrap() - 0.225461).abs() < 1e-5);
        let same = mix(pure_state(0.4, 0.0), pure_state(0.4, 0.0), 0.9, 0.0);
        assert_eq!(logneg_two_mode(&same).unwrap(), 0.0);
        let none = mix(pure_state(0.3, 0.0), pure_state(0.5, 0.0), 0.0, 0.0);
        assert_eq!(logneg_two_mode(&none).unwrap(), 0.0);

        let three = MultiModeCM::product(&[
            ("A", SingleModeCM::vacuum()),
            ("B", SingleModeCM::vacuum()),
            ("C", SingleModeCM::vacuum()),
        ])
        .unwrap();
        assert!(matches!(logneg_two_mode(&three), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn logneg_paths_agree_and_match_min_eigenvalue() {
        let cm = fig1();
        let nu_min = symplectic_eigenvalues(&partial_transpose(&cm, &["A"]).unwrap()).unwrap()[0];
        assert_relative_eq!(nu_min, 0.427_662_25, epsilon = 1e-8);
        assert_relative_eq!(-(2.0 * nu_min).log2(), EN_FIG1, epsilon = 1e-12);
        assert_relative_eq!(logneg_bipartition(&cm, &["A"]).unwrap(), EN_FIG1, epsilon = 1e-12);
        assert_relative_eq!(ppt_norm(&cm, &["A"]).unwrap(), 2f64.powf(EN_FIG1), epsilon = 1e-12);
    }

    #[test]
    fn residual_nonclassicality_examples() {
        let (a, b) = (pure_state(0.3, 0.0), pure_state(0.5, 0.0));
        let (la, _) = lam(0.3);
        let (lb, _) = lam(0.5);
        let expect = (((la + lb) / 2.0).powi(2) / (la * lb)).log2();
        let sn = residual_nonclassicality(&a, &b, PI / 4.0);
        assert_relative_eq!(sn, expect, epsilon = 1e-15);
        assert!((sn - 0.035086).abs() < 1e-5);
        assert_eq!(residual_nonclassicality(&a, &a, 1.0), 0.0);
        assert_eq!(residual_nonclassicality(&a, &b, 0.0), 0.0);

        let out = fig1();
        let input = MultiModeCM::product(&[("A", a), ("B", b)]).unwrap();
        assert_relative_eq!(
            nonclassicality_drop(&input, &out, "A", "B").unwrap(),
            sn,
            epsilon = 1e-12
        );
    }

    #[test]
    fn xi_two_mode_examples() {
        assert_relative_eq!(xi_two_mode(&fig1()).unwrap(), XI_FIG1, epsilon = 1e-13);
        let none = mix(pure_state(0.3, 0.0), pure_state(0.5, 0.0), 0.0, 0.0);
        assert_eq!(xi_two_mode(&none).unwrap(), 0.0);
        let same = mix(pure_state(0.6, 1.0), pure_state(0.6, 1.0), 0.4, 0.0);
        assert_eq!(xi_two_mode(&same).unwrap(), 0.0);
    }

    #[test]
    fn xi_paths_agree() {
        let cm = fig1();
        assert_relative_eq!(
            xi_trace_norm_path(&cm, &["A"]).unwrap(),
            xi_two_mode(&cm).unwrap(),
            epsilon = 1e-12
        );
        let prod = MultiModeCM::product(&[("A", pure_state(0.3, 0.0)), ("B", pure_state(0.7, 0.0))]).unwrap();
        assert_eq!(xi_trace_norm_path(&prod, &["A"]).unwrap(), 0.0);
    }

    #[test]
    fn closed_form_examples() {
        let (la, ca) = lam(0.3);
        let (lb, cb) = lam(0.5);
        let cf = xi_closed_form(la, ca, lb, cb, PI / 4.0);
        assert_relative_eq!(cf.xi, XI_FIG1, epsilon = 1e-14);
        assert!((cf.xi - 0.049244).abs() < 1e-5);
        assert!(cf.coefficient.unwrap() > 0.0);
        assert_eq!(xi_closed_form(la, ca, lb, cb, 0.0).xi, 0.0);
        assert_eq!(xi_closed_form(la, ca, lb, cb, PI / 2.0).xi, 0.0);
        let degenerate = xi_closed_form(la, ca, la, ca, 1.0);
        assert_eq!(degenerate.xi, 0.0);
        assert!(degenerate.coefficient.is_none());

        // ξ = 𝒞·(λ_{A₁}λ_{B₁}/(λ_Aλ_B) − 1)
        let t: f64 = 0.6;
        let (c2, s2) = (t.cos().powi(2), t.sin().powi(2));
        let ratio = (c2 * la + s2 * lb) * (s2 * la + c2 * lb) / (la * lb) - 1.0;
        let cf = xi_closed_form(la, ca, lb, cb, t);
        assert_relative_eq!(cf.xi, cf.coefficient.unwrap() * ratio, epsilon = 1e-14);
    }

    #[test]
    fn product_state_has_no_entanglement() {
        let prod = MultiModeCM::product(&[
            ("A", pure_state(0.3, 0.0)),
            ("B", pure_state(0.5, 0.0)),
            ("C", make_state(0.9, 0.2, 0.0).unwrap()),
        ])
        .unwrap();
        assert_eq!(contangle(&prod, &["A"]).unwrap(), 0.0);
        assert_eq!(residual_entanglement(&prod, "A", "B", "C").unwrap(), 0.0);
        for metric in [MonogamyMetric::LogNeg, MonogamyMetric::Contangle] {
            let m = monogamy_check(&prod, &["A"], &["B"], &["C"], metric).unwrap();
            assert_eq!((m.lhs, m.rhs, m.slack), (0.0, 0.0, 0.0));
        }
    }

    #[test]
    fn report_is_consistent() {
        let r = EntanglementReport::evaluate(&fig1(), &["A"], &["B"]).unwrap();
        assert_relative_eq!(r.log_negativity, r.ppt_trace_norm.log2(), epsilon = 1e-15);
        assert_eq!(r.contangle, r.log_negativity.powi(2));
        assert!(r.xi > 0.0 && r.ppt_trace_norm > 1.0);
        assert_relative_eq!(r.purity_trace_norm, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn request_validation() {
        assert!(ReportRequest::new(Metric::Xi, &["A"], &["A"]).validate().is_err());
        assert!(ReportRequest::new(Metric::Xi, &[], &["A"]).validate().is_err());
        assert!(ReportRequest::new(Metric::Sn, &["A"], &["B", "C"]).validate().is_err());
        assert!(ReportRequest::new(Metric::Residual, &["A"], &["B"]).validate().is_err());
        assert!(ReportRequest::new(Metric::Residual, &["A"], &["B", "C"])
            .validate()
            .is_ok());
        assert_eq!(
            ReportRequest::new(Metric::LogNeg, &["A"], &["B", "C"]).column_name(),
            "logneg_ABC"
        );
        for m in Metric::ALL {
            assert_eq!(m.name().parse::<Metric>().unwrap(), m);
        }
        assert!("negativity".parse::<Metric>().is_err());
    }
}
