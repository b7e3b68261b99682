use gaussnet_core::entanglement::{logneg_bipartition, logneg_two_mode, xi_trace_norm_path, xi_two_mode};
use gaussnet_core::gaussian::{
    bosonic_to_quadrature, make_state, partial_transpose, ppt_norm, pure_state, purity_norm, symplectic_eigenvalues,
    MultiModeCM, SingleModeCM,
};
use gaussnet_core::network::{run_network, NetworkSpec, PhaseSetting, SplitterSpec};
use proptest::prelude::*;

const LABELS: [&str; 4] = ["A", "B", "C", "D"];

fn single_mode(pure_only: bool) -> impl Strategy<Value = SingleModeCM> {
    let excess = if pure_only {
        Just(0.0).boxed()
    } else {
        prop_oneof![Just(0.0), 0.0..0.8f64].boxed()
    };
    (0.0..1.2f64, -3.1..3.1f64, excess).prop_map(|(b, arg, extra)| {
        if extra == 0.0 {
            pure_state(b, arg)
        } else {
            make_state((0.25 + b * b).sqrt() + extra, b, arg).unwrap()
        }
    })
}

/// Output of a random splitter network on `n` random input modes.
fn network_state(n: std::ops::Range<usize>, pure_only: bool) -> impl Strategy<Value = MultiModeCM> {
    n.prop_flat_map(move |n| {
        let inputs = prop::collection::vec(single_mode(pure_only), n);
        let splitters = prop::collection::vec((0..n, 1..n, 0.0..std::f64::consts::PI, -3.1..3.1f64), 0..5);
        (inputs, splitters).prop_map(move |(inputs, splitters)| {
            let spec = NetworkSpec {
                inputs: LABELS.iter().map(|l| l.to_string()).zip(inputs).collect(),
                splitters: splitters
                    .into_iter()
                    .enumerate()
                    .map(|(k, (i, shift, theta, phi))| SplitterSpec {
                        name: format!("S{k}"),
                        modes: (LABELS[i].to_string(), LABELS[(i + shift) % n].to_string()),
                        theta,
                        phi: PhaseSetting::Fixed(phi),
                    })
                    .collect(),
                reports: vec![],
            };
            run_network(&spec).unwrap().output().clone()
        })
    })
}

fn max_abs_diff(a: &nalgebra::DMatrix<f64>, b: &nalgebra::DMatrix<f64>) -> f64 {
    (a - b).abs().max()
}

proptest! {
    #[test]
    fn conversion_round_trips(cm in network_state(2..5, false)) {
        let back = bosonic_to_quadrature(&cm.bosonic()).unwrap();
        let scale = cm.quadrature().abs().max().max(1.0);
        prop_assert!(max_abs_diff(&back, cm.quadrature()) <= 1e-12 * scale);
    }

    #[test]
    fn splitters_preserve_determinant_and_physicality(
        inputs in prop::collection::vec(single_mode(false), 3),
        theta in 0.0..std::f64::consts::PI,
        phi in -3.1..3.1f64,
    ) {
        let spec = |with_bs: bool| NetworkSpec {
            inputs: LABELS[..3].iter().map(|l| l.to_string()).zip(inputs.clone()).collect(),
            splitters: if with_bs {
                vec![SplitterSpec { name: "S".into(), modes: ("A".into(), "C".into()), theta, phi: PhaseSetting::Fixed(phi) }]
            } else {
                vec![]
            },
            reports: vec![],
        };
        let before = run_network(&spec(false)).unwrap();
        let after = run_network(&spec(true)).unwrap();
        let (d0, d1) = (before.output().determinant(), after.output().determinant());
        prop_assert!((d1 - d0).abs() <= 1e-10 * d0.abs());
        prop_assert!(after.output().is_physical(1e-9));
        for nu in symplectic_eigenvalues(after.output()).unwrap() {
            prop_assert!(nu >= 0.5 - 1e-9);
        }
    }

    #[test]
    fn partial_transpose_is_an_involution(cm in network_state(2..5, false), k in 0usize..4) {
        let label = &cm.labels()[k % cm.n_modes()].clone();
        let twice = partial_transpose(&partial_transpose(&cm, &[label]).unwrap(), &[label]).unwrap();
        prop_assert_eq!(twice.quadrature(), cm.quadrature());
    }

    #[test]
    fn pure_networks_stay_pure(cm in network_state(2..5, true)) {
        prop_assert!((purity_norm(&cm).unwrap() - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn ppt_norm_is_at_least_one(cm in network_state(2..5, false)) {
        prop_assert!(ppt_norm(&cm, &["A"]).unwrap() >= 1.0 - 1e-12);
    }

    #[test]
    fn two_mode_formulas_agree_with_spectra(cm in network_state(2..3, false)) {
        let direct = logneg_two_mode(&cm).unwrap();
        let spectral = logneg_bipartition(&cm, &["A"]).unwrap();
        // The determinant formula is only √ε-conditioned where the two
        // partially transposed eigenvalues meet.
        prop_assert!((direct - spectral).abs() <= 1e-7);
    }

    #[test]
    fn xi_paths_agree_for_pure_pairs(cm in network_state(2..3, true)) {
        let det = xi_two_mode(&cm).unwrap();
        let trace = xi_trace_norm_path(&cm, &["A"]).unwrap();
        prop_assert!((det - trace).abs() <= 1e-9);
    }
}
