//! Built-in θ₂ sweeps of the reference two-splitter example: pure inputs with
//! `|b|, |d|, |f| = 0.3, 0.5, 0.7`, `θ₁ = π/4`, `φ₁ = 0`, `φ₂ = 1`, and
//! 200 values of `θ₂` on `[0, π]`.
//!
//! Column names follow `<metric>_<A><B>` with output subscripts: `A1` is A
//! after the first splitter, `B1` is B between the splitters, `B2` and `C1`
//! are B and C after the second.

use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use gaussnet_core::entanglement::{logneg_bipartition, reduce, xi};
use gaussnet_core::gaussian::MultiModeCM;
use gaussnet_core::network::run_network;
use gaussnet_core::scenarios::{grid, reference_two_splitter};

use crate::error::{CliError, Result};
use crate::table::Table;

pub const FIGURES: [&str; 2] = ["fig3", "fig6"];
pub const GRID_POINTS: usize = 200;

/// All quantities at one `θ₂`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub theta2: f64,
    pub logneg_a1b1: f64,
    pub logneg_a1b2c1: f64,
    pub logneg_a1b2: f64,
    pub logneg_a1c1: f64,
    pub xi_a1b1: f64,
    pub xi_a1b2: f64,
    pub xi_a1c1: f64,
}

#[derive(Clone, Copy)]
enum Quantity {
    LogNeg,
    Xi,
}

fn pair(cm: &MultiModeCM, b: &str, q: Quantity) -> Result<f64> {
    let reduced = reduce(cm, &["A"], &[b])?;
    Ok(match q {
        Quantity::LogNeg => logneg_bipartition(&reduced, &["A"])?,
        Quantity::Xi => xi(&reduced, &["A"])?,
    })
}

pub fn evaluate(theta2: f64) -> Result<Point> {
    let run = run_network(&reference_two_splitter(theta2))?;
    let first = &run.steps[0];
    let out = run.output();
    Ok(Point {
        theta2,
        logneg_a1b1: pair(first, "B", Quantity::LogNeg)?,
        logneg_a1b2c1: logneg_bipartition(out, &["A"])?,
        logneg_a1b2: pair(out, "B", Quantity::LogNeg)?,
        logneg_a1c1: pair(out, "C", Quantity::LogNeg)?,
        xi_a1b1: pair(first, "B", Quantity::Xi)?,
        xi_a1b2: pair(out, "B", Quantity::Xi)?,
        xi_a1c1: pair(out, "C", Quantity::Xi)?,
    })
}

pub fn points() -> Result<Vec<Point>> {
    grid(0.0, PI, GRID_POINTS).into_iter().map(evaluate).collect()
}

/// `x / y`, or NaN when `y` is exactly zero.
fn ratio(x: f64, y: f64) -> f64 {
    if y == 0.0 {
        f64::NAN
    } else {
        x / y
    }
}

fn table(columns: &[&str], points: &[Point], row: impl Fn(&Point) -> Vec<f64>) -> Table {
    let mut t = Table::new(columns.iter().map(|c| c.to_string()).collect());
    for p in points {
        let mut r = vec![p.theta2];
        r.extend(row(p));
        t.push(r);
    }
    t
}

/// The CSV files of one figure as `(file name, table)` pairs.
pub fn figure(name: &str) -> Result<Vec<(String, Table)>> {
    let pts = points()?;
    let files = match name {
        "fig3" => vec![
            (
                "fig3a.csv",
                table(&["theta2", "logneg_A1B1", "logneg_A1B2C1", "ratio_EN"], &pts, |p| {
                    vec![p.logneg_a1b1, p.logneg_a1b2c1, ratio(p.logneg_a1b1, p.logneg_a1b2c1)]
                }),
            ),
            (
                "fig3b.csv",
                table(&["theta2", "xi_A1B1", "xi_A1B2", "xi_A1C1"], &pts, |p| {
                    vec![p.xi_a1b1, p.xi_a1b2, p.xi_a1c1]
                }),
            ),
            (
                "fig3c.csv",
                table(
                    &["theta2", "ratio_xi_A1B2", "ratio_xi_A1C1", "ratio_xi_sum"],
                    &pts,
                    |p| {
                        let (b, c) = (ratio(p.xi_a1b2, p.xi_a1b1), ratio(p.xi_a1c1, p.xi_a1b1));
                        vec![b, c, b + c]
                    },
                ),
            ),
            (
                "fig3d.csv",
                table(
                    &["theta2", "logneg_A1B2", "logneg_A1C1", "logneg_sum", "logneg_A1B2C1"],
                    &pts,
                    |p| {
                        vec![
                            p.logneg_a1b2,
                            p.logneg_a1c1,
                            p.logneg_a1b2 + p.logneg_a1c1,
                            p.logneg_a1b2c1,
                        ]
                    },
                ),
            ),
        ],
        "fig6" => vec![(
            "fig6.csv",
            table(
                &[
                    "theta2",
                    "contangle_A1B2C1",
                    "contangle_A1B2",
                    "contangle_A1C1",
                    "contangle_sum",
                    "residual_A1B2C1",
                ],
                &pts,
                |p| {
                    let whole = p.logneg_a1b2c1.powi(2);
                    let sum = p.logneg_a1b2.powi(2) + p.logneg_a1c1.powi(2);
                    vec![whole, p.logneg_a1b2.powi(2), p.logneg_a1c1.powi(2), sum, whole - sum]
                },
            ),
        )],
        other => {
            return Err(CliError::Core(gaussnet_core::Error::UnknownLabel(format!(
                "figure `{other}`; expected one of {}",
                FIGURES.join(", ")
            ))))
        }
    };
    Ok(files.into_iter().map(|(n, t)| (n.to_string(), t)).collect())
}

/// Writes every CSV of `name` into `dir` and returns the paths written.
pub fn write_figure(name: &str, dir: &Path) -> Result<Vec<PathBuf>> {
    let files = figure(name)?;
    std::fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    files
        .into_iter()
        .map(|(file, t)| {
            let path = dir.join(file);
            t.save(&path)?;
            Ok(path)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoints() {
        let p0 = evaluate(0.0).unwrap();
        assert!((p0.xi_a1b2 - p0.xi_a1b1).abs() < 1e-14);
        assert_eq!(p0.xi_a1c1, 0.0);
        assert!((p0.xi_a1b1 - 0.049_244).abs() < 1e-5);
        let p = evaluate(PI / 2.0).unwrap();
        assert!((p.xi_a1c1 - p.xi_a1b1).abs() < 1e-10);
        assert!(p.xi_a1b2.abs() < 1e-10);
    }

    #[test]
    fn ratio_of_zero_is_nan() {
        assert!(ratio(0.0, 0.0).is_nan());
        assert_eq!(ratio(1.0, 2.0), 0.5);
    }

    #[test]
    fn unknown_figure() {
        assert!(figure("fig9").is_err());
    }
}
