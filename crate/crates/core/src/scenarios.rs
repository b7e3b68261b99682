//! Network topologies used throughout: one splitter (A, B), two splitters in
//! series (A, B, then B with C), and a linear chain feeding fresh ancillas
//! into the B arm.

use std::f64::consts::PI;

use crate::gaussian::{pure_state, SingleModeCM};
use crate::network::{NetworkSpec, PhaseSetting, SplitterSpec};

/// Off-diagonals `|b|, |d|, |f|` of the three pure inputs in the reference
/// two-splitter example.
pub const REFERENCE_OFFDIAGONALS: [f64; 3] = [0.3, 0.5, 0.7];
pub const REFERENCE_THETA1: f64 = PI / 4.0;
pub const REFERENCE_PHI1: f64 = 0.0;
pub const REFERENCE_PHI2: f64 = 1.0;

/// Pure inputs of the reference example (`a = √0.34`, `c = √0.5`, `g = √0.74`).
pub fn reference_inputs() -> [SingleModeCM; 3] {
    REFERENCE_OFFDIAGONALS.map(|b| pure_state(b, 0.0))
}

fn splitter(name: &str, first: &str, second: &str, theta: f64, phi: PhaseSetting) -> SplitterSpec {
    SplitterSpec {
        name: name.to_string(),
        modes: (first.to_string(), second.to_string()),
        theta,
        phi,
    }
}

/// `A, B → BS₁`.
pub fn single_splitter(a: SingleModeCM, b: SingleModeCM, theta: f64, phi: PhaseSetting) -> NetworkSpec {
    NetworkSpec {
        inputs: vec![("A".into(), a), ("B".into(), b)],
        splitters: vec![splitter("BS1", "A", "B", theta, phi)],
        reports: vec![],
    }
}

/// `A, B → BS₁`, then `B₁, C → BS₂`.
pub fn two_splitter(
    inputs: [SingleModeCM; 3],
    theta1: f64,
    phi1: PhaseSetting,
    theta2: f64,
    phi2: PhaseSetting,
) -> NetworkSpec {
    let [a, b, c] = inputs;
    NetworkSpec {
        inputs: vec![("A".into(), a), ("B".into(), b), ("C".into(), c)],
        splitters: vec![
            splitter("BS1", "A", "B", theta1, phi1),
            splitter("BS2", "B", "C", theta2, phi2),
        ],
        reports: vec![],
    }
}

/// The reference two-splitter example at a given `θ₂`.
pub fn reference_two_splitter(theta2: f64) -> NetworkSpec {
    two_splitter(
        reference_inputs(),
        REFERENCE_THETA1,
        PhaseSetting::Fixed(REFERENCE_PHI1),
        theta2,
        PhaseSetting::Fixed(REFERENCE_PHI2),
    )
}

/// Ancilla label for the `k`-th chain stage, `k ≥ 1`.
pub fn ancilla_label(k: usize) -> String {
    format!("C{k}")
}

/// Linear chain of `thetas.len()` splitters: `BS₁` mixes A and B, and
/// `BSₖ` (k ≥ 2) mixes the B arm with ancilla `C_{k−1}`. All phases are
/// matched.
pub fn chain(a: SingleModeCM, b: SingleModeCM, ancillas: &[SingleModeCM], thetas: &[f64]) -> NetworkSpec {
    assert_eq!(
        ancillas.len() + 1,
        thetas.len(),
        "a chain of n splitters needs n − 1 ancillas"
    );
    let mut inputs = vec![("A".to_string(), a), ("B".to_string(), b)];
    let mut splitters = vec![splitter("BS1", "A", "B", thetas[0], PhaseSetting::Matched)];
    for (k, (anc, &theta)) in ancillas.iter().zip(&thetas[1..]).enumerate() {
        let label = ancilla_label(k + 1);
        inputs.push((label.clone(), *anc));
        splitters.push(splitter(
            &format!("BS{}", k + 2),
            "B",
            &label,
            theta,
            PhaseSetting::Matched,
        ));
    }
    NetworkSpec {
        inputs,
        splitters,
        reports: vec![],
    }
}

/// Uniform grid of `steps` points on `[from, to]`, endpoints included.
pub fn grid(from: f64, to: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => vec![],
        1 => vec![from],
        _ => (0..steps)
            .map(|i| {
                if i == steps - 1 {
                    to
                } else {
                    from + (to - from) * (i as f64) / ((steps - 1) as f64)
                }
            })
            .collect(),
    }
}
