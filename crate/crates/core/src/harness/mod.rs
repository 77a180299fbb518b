//! Scenario registry, reports, fuzzing, and the kernel lemma sweeps.
//!
//! A scenario names an operation, a universe, and a list of checks with their
//! expected outcomes. Running it yields a [`RunReport`] whose JSON form is
//! canonical: keys sorted, formulas printed by [`crate::kernel::Formula`]'s
//! `Display`.

mod fuzz;
mod scenario;
mod sweeps;

use std::collections::BTreeMap;
use std::path::Path;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

pub use fuzz::run_fuzz;
pub use scenario::{Check, CheckSpec, ClaimVia, Expectation, Scenario, ScenarioSummary, UniverseConfig};
pub use sweeps::{sweep_admissibility, sweep_arrow_set, sweep_strong_admissibility};

use crate::error::{LabError, Result};
use crate::properties::PropertyVerdict;
use scenario::{evaluate, mismatch, Context};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Embedded scenario documents, in id order.
const BUILTIN: &[&str] = &[
    include_str!("../../scenarios/cn-baseline.json"),
    include_str!("../../scenarios/cwa-extension.json"),
    include_str!("../../scenarios/cwa-inconsistent-explosion.json"),
    include_str!("../../scenarios/cwa-maximality.json"),
    include_str!("../../scenarios/cwa-not-cumulative.json"),
    include_str!("../../scenarios/cwa-representable.json"),
    include_str!("../../scenarios/gcwa-or-failure.json"),
    include_str!("../../scenarios/kernel-admissibility.json"),
    include_str!("../../scenarios/paper-gcwa-deductivity.json"),
    include_str!("../../scenarios/paper-gcwa-not-representable.json"),
    include_str!("../../scenarios/paper-two-variable-separation.json"),
    include_str!("../../scenarios/poole-empty-defaults-is-cn.json"),
    include_str!("../../scenarios/poole-natural-not-antitonic.json"),
    include_str!("../../scenarios/poole-suite.json"),
    include_str!("../../scenarios/poole-two-defaults.json"),
];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub tool_version: String,
    pub scenario: String,
    pub verdicts: Vec<PropertyVerdict>,
    pub wall_time_ms: u64,
    /// Sorted union of the verdicts' flags.
    pub triviality_flags: Vec<String>,
    /// Expectations that the verdicts did not meet.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub mismatches: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub summary: BTreeMap<String, u64>,
}

impl RunReport {
    pub(crate) fn new(
        scenario: String,
        verdicts: Vec<PropertyVerdict>,
        elapsed: Duration,
        mismatches: Vec<String>,
    ) -> Self {
        let mut flags: Vec<String> = verdicts
            .iter()
            .flat_map(|v| v.triviality_flags.iter().cloned())
            .collect();
        flags.sort();
        flags.dedup();
        RunReport {
            tool_version: TOOL_VERSION.to_string(),
            scenario,
            verdicts,
            wall_time_ms: elapsed.as_millis() as u64,
            triviality_flags: flags,
            mismatches,
            summary: BTreeMap::new(),
        }
    }

    pub(crate) fn with_summary(mut self, summary: BTreeMap<String, u64>) -> Self {
        self.summary = summary;
        self
    }

    /// Every expectation met.
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_json(&self) -> String {
        canonical_json(self)
    }

    /// The verdicts alone: the part of a report that is stable across runs.
    pub fn verdicts_json(&self) -> String {
        canonical_json(&self.verdicts)
    }
}

/// Pretty JSON with object keys sorted.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    // serde_json's Value map is ordered by key.
    let v = serde_json::to_value(value).expect("reports serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

/// The built-in scenarios, sorted by id.
pub fn registry() -> Vec<Scenario> {
    BUILTIN
        .iter()
        .map(|text| Scenario::from_json(text).expect("built-in scenarios parse"))
        .collect()
}

pub fn list_scenarios() -> Vec<ScenarioSummary> {
    registry().iter().map(Scenario::summary).collect()
}

/// Runs a built-in scenario by id, or a scenario document at a path.
pub fn run_scenario(id_or_path: &str) -> Result<RunReport> {
    if let Some(s) = registry().into_iter().find(|s| s.id == id_or_path) {
        return run(&s);
    }
    let path = Path::new(id_or_path);
    if path.is_file() {
        return run(&Scenario::from_json(&std::fs::read_to_string(path)?)?);
    }
    Err(LabError::UnknownScenario(id_or_path.to_string()))
}

/// Executes every check of `s` in order and compares with the expectations.
pub fn run(s: &Scenario) -> Result<RunReport> {
    let started = Instant::now();
    let ctx = Context::new(s)?;
    let mut verdicts = Vec::with_capacity(s.checks.len());
    let mut mismatches = Vec::new();
    for (i, spec) in s.checks.iter().enumerate() {
        let v = evaluate(&ctx, &spec.check)?;
        mismatches.extend(mismatch(i, &v, &spec.expect));
        verdicts.push(v);
    }
    Ok(RunReport::new(s.id.clone(), verdicts, started.elapsed(), mismatches))
}

/// Runs every built-in scenario, one thread each; reports come back in id
/// order.
pub fn run_all() -> Result<Vec<RunReport>> {
    let scenarios = registry();
    std::thread::scope(|scope| {
        let handles: Vec<_> = scenarios.iter().map(|s| scope.spawn(move || run(s))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scenario thread panicked"))
            .collect()
    })
}
