//! End-to-end acceptance criteria. Every criterion is evaluated even if an
//! earlier one fails; one status line per criterion goes to stdout.

use std::f64::consts::PI;
use std::io::Write;
use std::time::{Duration, Instant};

use gaussnet::figure::{self, Point};
use gaussnet_core::scenarios::grid;
use gaussnet_core::verify::{
    check_block_theorems, check_distribution, check_mixing_laws, check_monogamy_regimes, check_sign_equivalence,
    check_tracenorm_equalities, check_xi_paths, run_all, Gate, VerifyConfig, VerifyOutcome,
};

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: String) -> Verdict {
    Verdict { pass, detail }
}

fn interior_points() -> Vec<Point> {
    grid(0.01, PI - 0.01, 200)
        .into_iter()
        .map(|t| figure::evaluate(t).unwrap())
        .collect()
}

fn max_over(points: &[Point], f: impl Fn(&Point) -> f64) -> f64 {
    points.iter().map(f).fold(f64::NEG_INFINITY, f64::max)
}

fn min_over(points: &[Point], f: impl Fn(&Point) -> f64) -> f64 {
    points.iter().map(f).fold(f64::INFINITY, f64::min)
}

fn logneg_conserved(points: &[Point]) -> Verdict {
    let dev = max_over(points, |p| (p.logneg_a1b2c1 - p.logneg_a1b1).abs());
    verdict(
        dev <= 1e-9,
        format!(
            "max |E_N(A1:B2C1) - E_N(A1:B1)| = {dev:.3e} over {} points",
            points.len()
        ),
    )
}

fn xi_distribution(points: &[Point]) -> Verdict {
    let b = max_over(points, |p| (p.xi_a1b2 - p.theta2.cos().powi(2) * p.xi_a1b1).abs());
    let c = max_over(points, |p| (p.xi_a1c1 - p.theta2.sin().powi(2) * p.xi_a1b1).abs());
    let sum = max_over(points, |p| ((p.xi_a1b2 + p.xi_a1c1) / p.xi_a1b1 - 1.0).abs());
    verdict(
        b <= 1e-10 && c <= 1e-10 && sum <= 1e-10,
        format!("cos² law {b:.3e}, sin² law {c:.3e}, sum ratio {sum:.3e}"),
    )
}

fn spot_values() -> Verdict {
    let p = figure::evaluate(0.0).unwrap();
    let (xi, en) = (p.xi_a1b1, p.logneg_a1b1);
    verdict(
        (xi - 0.049244).abs() <= 1e-5 && (en - 0.225461).abs() <= 1e-5,
        format!("xi(A1,B1) = {xi:.9}, E_N(A1,B1) = {en:.9}"),
    )
}

fn logneg_violation(points: &[Point]) -> Verdict {
    let v = max_over(points, |p| p.logneg_a1b2 + p.logneg_a1c1 - p.logneg_a1b2c1);
    verdict(
        v > 1e-6,
        format!("max E_N(A1,B2) + E_N(A1,C1) - E_N(A1:B2C1) = {v:.6e}"),
    )
}

fn contangle_monogamy(points: &[Point]) -> Verdict {
    let slack = |p: &Point| p.logneg_a1b2c1.powi(2) - p.logneg_a1b2.powi(2) - p.logneg_a1c1.powi(2);
    let (lo, hi) = (min_over(points, slack), max_over(points, slack));
    verdict(
        lo >= -1e-10 && hi > 1e-6,
        format!("contangle slack in [{lo:.3e}, {hi:.3e}]"),
    )
}

fn gated(outcomes: &[VerifyOutcome]) -> Verdict {
    let checked: Vec<_> = outcomes.iter().filter(|o| o.gate != Gate::Informational).collect();
    let failed: Vec<&str> = checked.iter().filter(|o| !o.pass).map(|o| o.check.as_str()).collect();
    let detail = if failed.is_empty() {
        format!("{} checks passed", checked.len())
    } else {
        format!("failed: {}", failed.join(", "))
    };
    verdict(failed.is_empty(), detail)
}

fn property_suite() -> Verdict {
    let cfg = VerifyConfig::new(42, 1000).unwrap();
    let mut outcomes = check_block_theorems(&cfg);
    outcomes.extend(check_mixing_laws(&cfg));
    outcomes.extend(check_xi_paths(&cfg));
    outcomes.push(check_sign_equivalence(&cfg));
    outcomes.extend(check_tracenorm_equalities(&cfg));
    gated(&outcomes)
}

fn mixed_regime() -> Verdict {
    let cfg = VerifyConfig::new(42, 500).unwrap();
    let out = check_monogamy_regimes(&cfg)
        .into_iter()
        .find(|o| o.check == "monogamy.xi_mixed")
        .unwrap();
    verdict(
        out.pass && out.cases == 500,
        format!(
            "smallest positive margin {:.3e} over {} instances",
            -out.deviation, out.cases
        ),
    )
}

fn chain_law() -> Verdict {
    let cfg = VerifyConfig::new(7, 200).unwrap();
    let start = Instant::now();
    let outcomes: Vec<_> = [3, 5, 8]
        .into_iter()
        .map(|n| check_distribution(&cfg, n).unwrap())
        .collect();
    let elapsed = start.elapsed();
    let worst = outcomes.iter().map(|o| o.deviation).fold(0.0, f64::max);
    let all = outcomes.iter().all(|o| o.pass && o.deviation <= 1e-8);
    verdict(
        all && elapsed < Duration::from_secs(30),
        format!("max deviation {worst:.3e}, {:.2} s", elapsed.as_secs_f64()),
    )
}

fn determinism() -> Verdict {
    let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
    let written: Vec<Vec<Vec<u8>>> = dirs
        .iter()
        .map(|d| {
            figure::write_figure("fig3", d.path())
                .unwrap()
                .into_iter()
                .map(|p| std::fs::read(p).unwrap())
                .collect()
        })
        .collect();
    let csv_same = written[0].len() == 4 && written[0] == written[1];
    let cfg = VerifyConfig::new(42, 100).unwrap();
    let reports: Vec<String> = (0..2).map(|_| serde_json::to_string(&run_all(&cfg)).unwrap()).collect();
    let verify_same = reports[0] == reports[1];
    verdict(
        csv_same && verify_same,
        format!("fig3 CSVs identical: {csv_same}, verify reports identical: {verify_same}"),
    )
}

#[test]
fn acceptance_criteria() {
    let points = interior_points();
    let results = [
        ("1 E_N conservation across BS2", logneg_conserved(&points)),
        ("2 xi distribution law", xi_distribution(&points)),
        ("3 spot values", spot_values()),
        ("4 E_N monogamy violation", logneg_violation(&points)),
        ("5 contangle monogamy", contangle_monogamy(&points)),
        ("6 property suite", property_suite()),
        ("7 mixed ancilla strict inequality", mixed_regime()),
        ("8 n-splitter chain law", chain_law()),
        ("9 determinism", determinism()),
    ];
    let mut out = std::io::stdout().lock();
    for (name, v) in &results {
        let status = if v.pass { "PASS" } else { "FAIL" };
        writeln!(out, "acceptance {status} {name}: {}", v.detail).unwrap();
    }
    let failed: Vec<&str> = results.iter().filter(|(_, v)| !v.pass).map(|(n, _)| *n).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
