use std::f64::consts::PI;

use nalgebra::{Matrix2, Matrix4};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::gen::{angle, case_rng, equal_diagonal, phase, Params, StateDraw};
use super::{Counterexample, Gate, VerifyConfig, VerifyOutcome};
use crate::entanglement::{
    logneg_two_mode, monogamy_check, reduce, residual_nonclassicality, snap, xi, xi_closed_form, xi_trace_norm_path,
    xi_two_mode, MonogamyMetric,
};
use crate::error::{Error, Result};
use crate::gaussian::{ppt_norm, purity_norm, MultiModeCM, SingleModeCM};
use crate::network::{run_network, NetworkRun, PhaseSetting};
use crate::scenarios::{ancilla_label, chain, grid, reference_two_splitter, single_splitter, two_splitter};

/// Skip threshold for `|det|` where an identity needs an inverse.
const SINGULAR: f64 = 1e-3;

/// Stable 64-bit FNV-1a of the check name, used as the stream id.
fn check_id(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

/// Per-case statistic of a sampled check: `Ok(None)` skips the instance,
/// `Err` counts as a failing (NaN) instance.
type CaseResult = Result<Option<f64>>;

/// Draws `cfg.cases` instances and keeps the largest value.
fn sample<F>(cfg: &VerifyConfig, check: &str, gate: Gate, mut case_fn: F) -> VerifyOutcome
where
    F: FnMut(&mut ChaCha8Rng, &mut Params) -> CaseResult,
{
    let id = check_id(check);
    let mut skipped = 0;
    let mut worst: Option<(f64, Counterexample)> = None;
    for case in 0..cfg.cases as u64 {
        let mut rng = case_rng(cfg.seed, id, case);
        let mut params = Params::new();
        let value = match case_fn(&mut rng, &mut params) {
            Ok(Some(v)) => v,
            Ok(None) => {
                skipped += 1;
                continue;
            }
            Err(_) => f64::NAN,
        };
        let replace = match &worst {
            None => true,
            Some((w, _)) => !w.is_nan() && (value.is_nan() || value > *w),
        };
        if replace {
            worst = Some((value, Counterexample { case, params }));
        }
    }
    let deviation = worst.as_ref().map_or(0.0, |(v, _)| *v);
    VerifyOutcome::new(check, cfg.cases, skipped, deviation, gate, worst.map(|(_, c)| c))
}

fn at_most(cfg: &VerifyConfig, check: &str, default: f64) -> Gate {
    Gate::AtMost(cfg.tolerance(check, default))
}

fn class(a: f64, b: f64) -> Matrix2<f64> {
    Matrix2::new(a, b, b, a)
}

fn draw_class(rng: &mut ChaCha8Rng, params: &mut Params, name: &str) -> Matrix2<f64> {
    let (a, b) = equal_diagonal(rng);
    params.insert(format!("{name}.diag"), a);
    params.insert(format!("{name}.off"), b);
    class(a, b)
}

fn max_abs(m: Matrix2<f64>) -> f64 {
    m.iter().fold(0.0, |acc, x| acc.max(x.abs()))
}

fn invertible(m: &Matrix2<f64>) -> Option<Matrix2<f64>> {
    if m.determinant().abs() < SINGULAR {
        None
    } else {
        m.try_inverse()
    }
}

/// Five 2×2 identities on real symmetric matrices with equal diagonals:
///
/// * `blocks.commute`: `AB = BA`;
/// * `blocks.sum_determinant`: `|A+B| = |A| + |B| + Tr(AB⁻¹)|B|`, and the
///   same with A and B exchanged;
/// * `blocks.adjugate_sum`: `|A+B|(A+B)⁻¹ = |A|A⁻¹ + |B|B⁻¹`;
/// * `blocks.block_determinant`: `det[[A, B], [B, C]] = |A|·|C − BA⁻¹B| = |AC − BB|`;
/// * `blocks.mixed_product`: `A₁B₁ − (AB)₁² = AB` with `A₁ = cos²θA + sin²θB`,
///   `B₁ = cos²θB + sin²θA`, `(AB)₁ = (A − B) sinθ cosθ`.
///
/// Instances needing an inverse of a matrix with `|det| < 1e−3` are skipped.
pub fn check_block_theorems(cfg: &VerifyConfig) -> Vec<VerifyOutcome> {
    let t1 = "blocks.commute";
    let t2 = "blocks.sum_determinant";
    let t3 = "blocks.adjugate_sum";
    let t4 = "blocks.block_determinant";
    let t5 = "blocks.mixed_product";
    vec![
        sample(cfg, t1, at_most(cfg, t1, 1e-12), |rng, p| {
            let a = draw_class(rng, p, "A");
            let b = draw_class(rng, p, "B");
            Ok(Some(max_abs(a * b - b * a)))
        }),
        sample(cfg, t2, at_most(cfg, t2, 1e-12), |rng, p| {
            let a = draw_class(rng, p, "A");
            let b = draw_class(rng, p, "B");
            let (Some(ai), Some(bi)) = (invertible(&a), invertible(&b)) else {
                return Ok(None);
            };
            let (da, db) = (a.determinant(), b.determinant());
            let lhs = (a + b).determinant();
            let via_b = da + db + (a * bi).trace() * db;
            let via_a = da + db + (b * ai).trace() * da;
            Ok(Some((lhs - via_b).abs().max((lhs - via_a).abs())))
        }),
        sample(cfg, t3, at_most(cfg, t3, 1e-12), |rng, p| {
            let a = draw_class(rng, p, "A");
            let b = draw_class(rng, p, "B");
            let s = a + b;
            let (Some(ai), Some(bi), Some(si)) = (invertible(&a), invertible(&b), invertible(&s)) else {
                return Ok(None);
            };
            let lhs = si * s.determinant();
            let rhs = ai * a.determinant() + bi * b.determinant();
            Ok(Some(max_abs(lhs - rhs)))
        }),
        sample(cfg, t4, at_most(cfg, t4, 1e-12), |rng, p| {
            let a = draw_class(rng, p, "A");
            let b = draw_class(rng, p, "B");
            let c = draw_class(rng, p, "C");
            let Some(ai) = invertible(&a) else {
                return Ok(None);
            };
            let mut m = Matrix4::zeros();
            m.fixed_view_mut::<2, 2>(0, 0).copy_from(&a);
            m.fixed_view_mut::<2, 2>(0, 2).copy_from(&b);
            m.fixed_view_mut::<2, 2>(2, 0).copy_from(&b);
            m.fixed_view_mut::<2, 2>(2, 2).copy_from(&c);
            let full = m.determinant();
            let schur = a.determinant() * (c - b * ai * b).determinant();
            let product = (a * c - b * b).determinant();
            Ok(Some((full - schur).abs().max((full - product).abs())))
        }),
        sample(cfg, t5, at_most(cfg, t5, 1e-12), |rng, p| {
            let a = draw_class(rng, p, "A");
            let b = draw_class(rng, p, "B");
            let theta = angle(rng);
            p.insert("theta".into(), theta);
            let (c2, s2) = (theta.cos().powi(2), theta.sin().powi(2));
            let a1 = a * c2 + b * s2;
            let b1 = b * c2 + a * s2;
            let ab1 = (a - b) * (theta.sin() * theta.cos());
            Ok(Some(max_abs(a1 * b1 - ab1 * ab1 - a * b)))
        }),
    ]
}

fn draw_pure(rng: &mut ChaCha8Rng, params: &mut Params, name: &str) -> SingleModeCM {
    let d = StateDraw::pure(rng);
    d.record(name, params);
    d.state()
}

fn draw_mixed(rng: &mut ChaCha8Rng, params: &mut Params, name: &str) -> SingleModeCM {
    let d = StateDraw::mixed(rng);
    d.record(name, params);
    d.state()
}

fn draw_angle(rng: &mut ChaCha8Rng, params: &mut Params, name: &str) -> f64 {
    let t = angle(rng);
    params.insert(name.into(), t);
    t
}

fn draw_phase(rng: &mut ChaCha8Rng, params: &mut Params, name: &str) -> f64 {
    let t = phase(rng);
    params.insert(name.into(), t);
    t
}

fn lambda(cm: &MultiModeCM, label: &str) -> Result<f64> {
    Ok(cm.mode(label)?.spectral().lambda_min)
}

/// `ξ` between two groups of `cm` after tracing out everything else.
fn xi_between(cm: &MultiModeCM, a: &[&str], b: &[&str]) -> Result<f64> {
    xi(&reduce(cm, a, b)?, a)
}

/// One splitter at matched phase with inputs that are pure or mixed with
/// equal odds.
fn mixed_or_pure(rng: &mut ChaCha8Rng, params: &mut Params) -> Result<(SingleModeCM, SingleModeCM, f64, NetworkRun)> {
    let mut draw = |rng: &mut ChaCha8Rng, name: &str| {
        if rng.random_bool(0.5) {
            draw_mixed(rng, params, name)
        } else {
            draw_pure(rng, params, name)
        }
    };
    let a = draw(rng, "A");
    let b = draw(rng, "B");
    let theta = draw_angle(rng, params, "theta");
    let run = run_network(&single_splitter(a, b, theta, PhaseSetting::Matched))?;
    Ok((a, b, theta, run))
}

/// The `λ` mixing law and the product identity for one matched splitter.
pub fn check_mixing_laws(cfg: &VerifyConfig) -> Vec<VerifyOutcome> {
    let c4 = "mixing.lambda_law";
    let c5 = "mixing.product_identity";
    vec![
        sample(cfg, c4, at_most(cfg, c4, 1e-10), |rng, p| {
            let (a, b, theta, run) = mixed_or_pure(rng, p)?;
            let (la, lb) = (a.spectral().lambda_min, b.spectral().lambda_min);
            let (c2, s2) = (theta.cos().powi(2), theta.sin().powi(2));
            let out = run.output();
            let da = (lambda(out, "A")? - (c2 * la + s2 * lb)).abs();
            let db = (lambda(out, "B")? - (s2 * la + c2 * lb)).abs();
            Ok(Some(da.max(db)))
        }),
        sample(cfg, c5, at_most(cfg, c5, 1e-10), |rng, p| {
            let (a, b, theta, run) = mixed_or_pure(rng, p)?;
            let (la, lb) = (a.spectral().lambda_min, b.spectral().lambda_min);
            let out = run.output();
            let lhs = lambda(out, "A")? * lambda(out, "B")? / (la * lb) - 1.0;
            let rhs = (lb - la).powi(2) / (4.0 * la * lb) * (2.0 * theta).sin().powi(2);
            Ok(Some((lhs - rhs).abs()))
        }),
    ]
}

/// `ξ` on one-splitter outputs of pure inputs: determinant path against
/// trace-norm path (any phase), against the closed form (matched phase),
/// and the sign of the closed-form coefficient. The coefficient outcome's
/// deviation is the number of instances with `𝒞 ≤ 0`.
pub fn check_xi_paths(cfg: &VerifyConfig) -> Vec<VerifyOutcome> {
    let two = "xi.two_path";
    let closed = "xi.closed_form";
    let coef = "xi.coefficient_positive";
    let mut nonpositive = 0usize;
    let coefficient = sample(cfg, coef, Gate::AtMost(0.0), |rng, p| {
        let a = draw_pure(rng, p, "A").spectral();
        let b = draw_pure(rng, p, "B").spectral();
        let theta = draw_angle(rng, p, "theta");
        let cf = xi_closed_form(a.lambda_min, a.lambda_max, b.lambda_min, b.lambda_max, theta);
        match cf.coefficient {
            None => Ok(None),
            Some(c) if c > 0.0 => Ok(Some(0.0)),
            Some(_) => {
                nonpositive += 1;
                Ok(Some(1.0))
            }
        }
    });
    let coefficient = counted(coefficient, nonpositive, at_most(cfg, coef, 0.0));
    vec![
        sample(cfg, two, at_most(cfg, two, 1e-9), |rng, p| {
            let a = draw_pure(rng, p, "A");
            let b = draw_pure(rng, p, "B");
            let theta = draw_angle(rng, p, "theta");
            let phi = draw_phase(rng, p, "phi");
            let run = run_network(&single_splitter(a, b, theta, PhaseSetting::Fixed(phi)))?;
            let out = run.output();
            Ok(Some((xi_two_mode(out)? - xi_trace_norm_path(out, &["A"])?).abs()))
        }),
        sample(cfg, closed, at_most(cfg, closed, 1e-9), |rng, p| {
            let a = draw_pure(rng, p, "A");
            let b = draw_pure(rng, p, "B");
            let theta = draw_angle(rng, p, "theta");
            let run = run_network(&single_splitter(a, b, theta, PhaseSetting::Matched))?;
            let (sa, sb) = (a.spectral(), b.spectral());
            let cf = xi_closed_form(sa.lambda_min, sa.lambda_max, sb.lambda_min, sb.lambda_max, theta);
            Ok(Some((xi_two_mode(run.output())? - cf.xi).abs()))
        }),
        coefficient,
    ]
}

/// Replaces the deviation of a 0/1-valued sampled outcome by the number of
/// failing instances, keeping the first worst counterexample.
fn counted(outcome: VerifyOutcome, failures: usize, gate: Gate) -> VerifyOutcome {
    VerifyOutcome::new(
        &outcome.check,
        outcome.cases,
        outcome.skipped,
        failures as f64,
        gate,
        outcome.counterexample,
    )
}

fn sign(x: f64) -> i8 {
    let x = snap(x);
    if x > 0.0 {
        1
    } else if x < 0.0 {
        -1
    } else {
        0
    }
}

/// `sign S_N = sign E_N = sign ξ` after one matched splitter on pure inputs.
/// The deviation is the number of disagreeing instances.
pub fn check_sign_equivalence(cfg: &VerifyConfig) -> VerifyOutcome {
    let name = "sign.equivalence";
    let mut mismatches = 0usize;
    let per_case = sample(cfg, name, Gate::AtMost(0.0), |rng, p| {
        let a = draw_pure(rng, p, "A");
        let b = draw_pure(rng, p, "B");
        let theta = draw_angle(rng, p, "theta");
        let run = run_network(&single_splitter(a, b, theta, PhaseSetting::Matched))?;
        let out = run.output();
        let signs = [
            sign(residual_nonclassicality(&a, &b, theta)),
            sign(logneg_two_mode(out)?),
            sign(xi_two_mode(out)?),
        ];
        let bad = signs[0] != signs[1] || signs[1] != signs[2];
        if bad {
            mismatches += 1;
        }
        Ok(Some(if bad { 1.0 } else { 0.0 }))
    });
    counted(per_case, mismatches, at_most(cfg, name, 0.0))
}

/// Two splitters in series with random angles and phases.
fn random_two_splitter(
    rng: &mut ChaCha8Rng,
    p: &mut Params,
    c: SingleModeCM,
    a: SingleModeCM,
    b: SingleModeCM,
) -> Result<NetworkRun> {
    let t1 = draw_angle(rng, p, "theta1");
    let f1 = draw_phase(rng, p, "phi1");
    let t2 = draw_angle(rng, p, "theta2");
    let f2 = draw_phase(rng, p, "phi2");
    run_network(&two_splitter(
        [a, b, c],
        t1,
        PhaseSetting::Fixed(f1),
        t2,
        PhaseSetting::Fixed(f2),
    ))
}

/// Trace norms across the second splitter: `‖ρ^{T_A}‖₁` of `A₁ : B₂C₁`
/// against `A₁ : B₁`, and `‖ρ²‖₁` of the three-mode output against the
/// two-mode state after the first splitter. Both must agree for pure `ρ_C`.
/// The mixed-`ρ_C` outcome is informational and reports the smallest
/// purity-norm gap observed.
pub fn check_tracenorm_equalities(cfg: &VerifyConfig) -> Vec<VerifyOutcome> {
    let ppt = "tracenorm.ppt";
    let purity = "tracenorm.purity";
    let mixed = "tracenorm.mixed_purity_gap";
    let norms = |rng: &mut ChaCha8Rng, p: &mut Params, mixed_c: bool| -> Result<[f64; 4]> {
        let a = draw_pure(rng, p, "A");
        let b = draw_pure(rng, p, "B");
        let c = if mixed_c {
            draw_mixed(rng, p, "C")
        } else {
            draw_pure(rng, p, "C")
        };
        let run = random_two_splitter(rng, p, c, a, b)?;
        let first = reduce(&run.steps[0], &["A"], &["B"])?;
        let out = run.output();
        Ok([
            ppt_norm(out, &["A"])?,
            ppt_norm(&first, &["A"])?,
            purity_norm(out)?,
            purity_norm(&first)?,
        ])
    };
    let gap = sample(cfg, mixed, Gate::Informational, |rng, p| {
        let n = norms(rng, p, true)?;
        Ok(Some(-(n[2] - n[3]).abs()))
    });
    vec![
        sample(cfg, ppt, at_most(cfg, ppt, 1e-8), |rng, p| {
            let n = norms(rng, p, false)?;
            Ok(Some((n[0] - n[1]).abs()))
        }),
        sample(cfg, purity, at_most(cfg, purity, 1e-8), |rng, p| {
            let n = norms(rng, p, false)?;
            Ok(Some((n[2] - n[3]).abs()))
        }),
        VerifyOutcome::new(mixed, gap.cases, gap.skipped, -gap.deviation, Gate::Informational, None),
    ]
}

/// Default tolerance for a chain of `n` splitters.
pub fn chain_tolerance(n: usize) -> f64 {
    if n <= 4 {
        1e-9
    } else {
        1e-8
    }
}

/// Product formulas and conservation for a chain of `chain_length`
/// matched splitters with random pure `A`, `B` and vacuum ancillas.
///
/// Per instance the deviation is the largest of
/// `|ξ(A₁,Bₙ) − ∏_{i≥2} cos²θᵢ·ξ₁|`,
/// `|ξ(A₁,C_k) − sin²θ_{k+1}∏_{2≤i≤k} cos²θᵢ·ξ₁|`,
/// `|ξ(A₁,Bₙ) + Σ ξ(A₁,C_k) − ξ(A₁ : rest)|` and `|ξ(A₁ : rest) − ξ₁|`,
/// where `ξ₁ = ξ(A₁,B₁)`.
pub fn check_distribution(cfg: &VerifyConfig, chain_length: usize) -> Result<VerifyOutcome> {
    if !super::CHAIN_LENGTHS.contains(&chain_length) {
        return Err(Error::ShapeMismatch(format!(
            "chain length {chain_length} outside 2..=8"
        )));
    }
    let name = format!("distribution.n{chain_length}");
    let gate = at_most(cfg, &name, chain_tolerance(chain_length));
    Ok(sample(cfg, &name, gate, |rng, p| {
        let a = draw_pure(rng, p, "A");
        let b = draw_pure(rng, p, "B");
        let thetas: Vec<f64> = (1..=chain_length)
            .map(|i| draw_angle(rng, p, &format!("theta{i}")))
            .collect();
        let ancillas = vec![SingleModeCM::vacuum(); chain_length - 1];
        let run = run_network(&chain(a, b, &ancillas, &thetas))?;
        chain_deviation(&run, &thetas).map(Some)
    }))
}

fn chain_deviation(run: &NetworkRun, thetas: &[f64]) -> Result<f64> {
    let xi1 = xi_between(&run.steps[0], &["A"], &["B"])?;
    let out = run.output();
    let mut dev: f64 = 0.0;
    let mut carried = 1.0;
    let mut total = xi_between(out, &["A"], &["B"])?;
    for (k, theta) in thetas.iter().enumerate().skip(1) {
        let factor = carried * theta.sin().powi(2);
        let label = ancilla_label(k);
        let xk = xi_between(out, &["A"], &[label.as_str()])?;
        dev = dev.max((xk - factor * xi1).abs());
        total += xk;
        carried *= theta.cos().powi(2);
    }
    let xbn = xi_between(out, &["A"], &["B"])?;
    dev = dev.max((xbn - carried * xi1).abs());
    let whole = xi(out, &["A"])?;
    dev = dev.max((total - whole).abs()).max((whole - xi1).abs());
    Ok(dev)
}

/// Monogamy balances on two splitters in series.
///
/// * `monogamy.xi_pure`: `|ξ(A₁:B₂C₁) − ξ(A₁,B₂) − ξ(A₁,C₁)|` for pure inputs.
/// * `monogamy.xi_mixed`: with mixed `ρ_C`, both
///   `ξ(A₁,B₁) − ξ(A₁,B₂) − ξ(A₁,C₁)` and the monogamy slack must be
///   positive; the deviation is the negated smallest of them.
/// * `monogamy.logneg_violation`: the smallest `E_N` monogamy slack on the
///   reference example over 200 values of `θ₂` in `[0.01, π − 0.01]`; it
///   must fall below `−1e−6`.
pub fn check_monogamy_regimes(cfg: &VerifyConfig) -> Vec<VerifyOutcome> {
    let pure = "monogamy.xi_pure";
    let mixed = "monogamy.xi_mixed";
    let logneg = "monogamy.logneg_violation";
    let matched = |rng: &mut ChaCha8Rng, p: &mut Params, c: SingleModeCM, a: SingleModeCM, b: SingleModeCM| {
        let t1 = draw_angle(rng, p, "theta1");
        let t2 = draw_angle(rng, p, "theta2");
        run_network(&two_splitter(
            [a, b, c],
            t1,
            PhaseSetting::Matched,
            t2,
            PhaseSetting::Matched,
        ))
    };
    let mut out = vec![
        sample(cfg, pure, at_most(cfg, pure, 1e-9), |rng, p| {
            let a = draw_pure(rng, p, "A");
            let b = draw_pure(rng, p, "B");
            let c = draw_pure(rng, p, "C");
            let run = matched(rng, p, c, a, b)?;
            let m = monogamy_check(run.output(), &["A"], &["B"], &["C"], MonogamyMetric::Xi)?;
            Ok(Some(m.slack.abs()))
        }),
        sample(cfg, mixed, Gate::Below(cfg.tolerance(mixed, 0.0)), |rng, p| {
            let a = draw_pure(rng, p, "A");
            let b = draw_pure(rng, p, "B");
            let c = draw_mixed(rng, p, "C");
            let run = matched(rng, p, c, a, b)?;
            let out = run.output();
            let xi1 = xi_between(&run.steps[0], &["A"], &["B"])?;
            let m = monogamy_check(out, &["A"], &["B"], &["C"], MonogamyMetric::Xi)?;
            let split = xi1 - m.rhs;
            Ok(Some(-split.min(m.slack)))
        }),
    ];
    let thetas = grid(0.01, PI - 0.01, 200);
    let mut min_slack = f64::INFINITY;
    let mut at = None;
    for (i, &t2) in thetas.iter().enumerate() {
        let slack = run_network(&reference_two_splitter(t2))
            .and_then(|run| monogamy_check(run.output(), &["A"], &["B"], &["C"], MonogamyMetric::LogNeg))
            .map_or(f64::NAN, |m| m.slack);
        if slack.is_nan() || slack < min_slack {
            min_slack = slack;
            at = Some(Counterexample {
                case: i as u64,
                params: Params::from([("theta2".to_string(), t2)]),
            });
            if slack.is_nan() {
                break;
            }
        }
    }
    out.push(VerifyOutcome::new(
        logneg,
        thetas.len(),
        0,
        min_slack,
        Gate::Below(cfg.tolerance(logneg, -1e-6)),
        at,
    ));
    out
}

/// Measurements for questions the theory leaves open; never fail.
///
/// * `open.unmatched_phase`: largest deviation from the two-splitter
///   distribution law when both phases are random rather than matched.
/// * `open.unequal_ancillas`: largest deviation from the third-splitter law
///   `ξ(A₁,B₃) = cos²θ₃·ξ(A₁,B₂)`, `ξ(A₁,C₂) = sin²θ₃·ξ(A₁,B₂)` when the
///   two ancillas are distinct random pure states.
pub fn check_open_questions(cfg: &VerifyConfig) -> Vec<VerifyOutcome> {
    vec![
        sample(cfg, "open.unmatched_phase", Gate::Informational, |rng, p| {
            let a = draw_pure(rng, p, "A");
            let b = draw_pure(rng, p, "B");
            let c = draw_pure(rng, p, "C");
            let run = random_two_splitter(rng, p, c, a, b)?;
            let t2 = p["theta2"];
            let xi1 = xi_between(&run.steps[0], &["A"], &["B"])?;
            let out = run.output();
            let db = (xi_between(out, &["A"], &["B"])? - t2.cos().powi(2) * xi1).abs();
            let dc = (xi_between(out, &["A"], &["C"])? - t2.sin().powi(2) * xi1).abs();
            Ok(Some(db.max(dc)))
        }),
        sample(cfg, "open.unequal_ancillas", Gate::Informational, |rng, p| {
            let a = draw_pure(rng, p, "A");
            let b = draw_pure(rng, p, "B");
            let c1 = draw_pure(rng, p, "C1");
            let c2 = draw_pure(rng, p, "C2");
            let thetas: Vec<f64> = (1..=3).map(|i| draw_angle(rng, p, &format!("theta{i}"))).collect();
            let run = run_network(&chain(a, b, &[c1, c2], &thetas))?;
            let xi2 = xi_between(&run.steps[1], &["A"], &["B"])?;
            let out = run.output();
            let t3 = thetas[2];
            let db = (xi_between(out, &["A"], &["B"])? - t3.cos().powi(2) * xi2).abs();
            let dc = (xi_between(out, &["A"], &["C2"])? - t3.sin().powi(2) * xi2).abs();
            Ok(Some(db.max(dc)))
        }),
    ]
}
