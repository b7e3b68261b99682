//! Seeded randomized verification of the algebraic identities, distribution
//! laws and monogamy regimes.
//!
//! Each check draws `cases` independent instances (see [`gen`] for the
//! per-case streams) and reduces them to one statistic, compared against a
//! [`Gate`]. Failures are reported as outcomes, never as errors, and carry
//! the parameters of the worst instance so it can be rebuilt exactly.

mod checks;
pub mod gen;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};

pub use checks::{
    check_block_theorems, check_distribution, check_mixing_laws, check_monogamy_regimes, check_open_questions,
    check_sign_equivalence, check_tracenorm_equalities, check_xi_paths,
};
pub use gen::Params;

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub cases: usize,
    /// Per-check tolerance overrides keyed by check name.
    pub tolerances: BTreeMap<String, f64>,
}

impl VerifyConfig {
    pub fn new(seed: u64, cases: usize) -> Result<Self> {
        if cases == 0 {
            return Err(Error::NonPositive(0.0));
        }
        Ok(Self {
            seed,
            cases,
            tolerances: BTreeMap::new(),
        })
    }

    pub fn tolerance(&self, check: &str, default: f64) -> f64 {
        self.tolerances.get(check).copied().unwrap_or(default)
    }
}

/// Pass criterion applied to an outcome's `deviation`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Gate {
    /// Pass iff `deviation ≤ bound`.
    AtMost(f64),
    /// Pass iff `deviation < bound`; used for strict sign requirements.
    Below(f64),
    /// Measured and reported, never fails.
    Informational,
}

impl Gate {
    pub fn passes(self, deviation: f64) -> bool {
        match self {
            Gate::AtMost(bound) => deviation <= bound,
            Gate::Below(bound) => deviation < bound,
            Gate::Informational => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub case: u64,
    pub params: Params,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyOutcome {
    pub check: String,
    pub cases: usize,
    /// Instances dropped because they violate the check's precondition.
    pub skipped: usize,
    /// Largest per-instance deviation, or the check-specific statistic
    /// documented on the check.
    pub deviation: f64,
    pub gate: Gate,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
}

impl VerifyOutcome {
    pub(crate) fn new(
        check: &str,
        cases: usize,
        skipped: usize,
        deviation: f64,
        gate: Gate,
        worst: Option<Counterexample>,
    ) -> Self {
        let pass = gate.passes(deviation);
        Self {
            check: check.to_string(),
            cases,
            skipped,
            deviation,
            gate,
            pass,
            counterexample: if pass { None } else { worst },
        }
    }
}

/// Group names accepted by [`run_selected`], in execution order.
pub const GROUPS: [&str; 8] = [
    "blocks",
    "mixing",
    "xi",
    "sign",
    "tracenorm",
    "distribution",
    "monogamy",
    "open",
];

/// Chain lengths covered by the `distribution` group.
pub const CHAIN_LENGTHS: std::ops::RangeInclusive<usize> = 2..=8;

fn run_group(cfg: &VerifyConfig, group: &str) -> Vec<VerifyOutcome> {
    match group {
        "blocks" => check_block_theorems(cfg),
        "mixing" => check_mixing_laws(cfg),
        "xi" => check_xi_paths(cfg),
        "sign" => vec![check_sign_equivalence(cfg)],
        "tracenorm" => check_tracenorm_equalities(cfg),
        "distribution" => CHAIN_LENGTHS
            .map(|n| check_distribution(cfg, n).expect("chain length in range"))
            .collect(),
        "monogamy" => check_monogamy_regimes(cfg),
        "open" => check_open_questions(cfg),
        _ => unreachable!("unknown group {group}"),
    }
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<VerifyOutcome> {
    GROUPS.iter().flat_map(|g| run_group(cfg, g)).collect()
}

/// Runs one group (`"xi"`) or one check (`"xi.two_path"`); `None` runs all.
pub fn run_selected(cfg: &VerifyConfig, filter: Option<&str>) -> Result<Vec<VerifyOutcome>> {
    let Some(filter) = filter else {
        return Ok(run_all(cfg));
    };
    let group = filter.split('.').next().unwrap_or(filter);
    if !GROUPS.contains(&group) {
        return Err(Error::UnknownLabel(filter.to_string()));
    }
    let outcomes: Vec<_> = run_group(cfg, group)
        .into_iter()
        .filter(|o| o.check == filter || group == filter)
        .collect();
    if outcomes.is_empty() {
        return Err(Error::UnknownLabel(filter.to_string()));
    }
    Ok(outcomes)
}

pub fn all_passed(outcomes: &[VerifyOutcome]) -> bool {
    outcomes.iter().all(|o| o.pass)
}
