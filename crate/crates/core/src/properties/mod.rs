//! Bounded checkers for the eight properties of inference operations.
//!
//! Every checker enumerates a [`Universe`] in its fixed order and stops at the
//! first violated instance, so verdicts (witness included) are deterministic.
//! An emitted witness is replayed against the schema in debug builds.

mod checks;
mod replay;
pub(crate) mod sweep;
mod universe;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use replay::replay;
pub use universe::{default_pool, Universe, UniverseDescriptor, DEFAULT_CAP};

use crate::error::{LabError, Result};
use crate::kernel::{Formula, FormulaSet};
use crate::operations::InferenceOp;
use sweep::Sweep;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PropertyKind {
    /// `Cn(X) ⊆ C(X)`
    Supraclassicality,
    /// `Cn(C(X)) = C(X)`
    LeftAbsorption,
    /// `Cn(X) = Cn(Y) ⇒ C(X) = C(Y)`
    RightAbsorption,
    /// `Y ⊆ X ⇒ C(X) ⊆ Cn(X ∪ C(Y))`
    Deductivity,
    /// `Y ⊆ Cn(C(X)) ⇒ Cn(C(X ∪ Y)) = Cn(C(X))`
    Cumulativity,
    /// `X ⊆ Y ⇒ C(Y) ⊆ C(X)`
    Antitonicity,
    Compactness,
    Supracompactness,
}

impl PropertyKind {
    pub const ALL: [PropertyKind; 8] = [
        PropertyKind::Supraclassicality,
        PropertyKind::LeftAbsorption,
        PropertyKind::RightAbsorption,
        PropertyKind::Deductivity,
        PropertyKind::Cumulativity,
        PropertyKind::Antitonicity,
        PropertyKind::Compactness,
        PropertyKind::Supracompactness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PropertyKind::Supraclassicality => "supraclassicality",
            PropertyKind::LeftAbsorption => "left_absorption",
            PropertyKind::RightAbsorption => "right_absorption",
            PropertyKind::Deductivity => "deductivity",
            PropertyKind::Cumulativity => "cumulativity",
            PropertyKind::Antitonicity => "antitonicity",
            PropertyKind::Compactness => "compactness",
            PropertyKind::Supracompactness => "supracompactness",
        }
    }
}

impl fmt::Display for PropertyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PropertyKind {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().replace('-', "_");
        PropertyKind::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| LabError::config("--props", format!("unknown property `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Counterexample,
    NoCounterexampleInUniverse,
    /// The hypotheses of a theorem-level check failed; the verdict that
    /// failed is carried by [`LabError::Precondition`].
    PreconditionFailed,
}

/// Formula strings of a violating instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(rename = "X")]
    pub x: Vec<String>,
    #[serde(rename = "Y", default, skip_serializing_if = "Option::is_none")]
    pub y: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formula: Option<String>,
}

impl Witness {
    pub fn new(x: &FormulaSet, y: Option<&FormulaSet>, formula: Option<&Formula>) -> Self {
        Witness {
            x: x.to_strings(),
            y: y.map(FormulaSet::to_strings),
            formula: formula.map(Formula::to_string),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X={{{}}}", self.x.join(", "))?;
        if let Some(y) = &self.y {
            write!(f, " Y={{{}}}", y.join(", "))?;
        }
        if let Some(x) = &self.formula {
            write!(f, " formula {x}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyVerdict {
    /// A property name, or the name of a theorem-level check such as
    /// `representation/largest`.
    pub property: String,
    pub operation: String,
    pub universe: UniverseDescriptor,
    pub outcome: Outcome,
    pub witness: Option<Witness>,
    pub triviality_flags: Vec<String>,
}

impl PropertyVerdict {
    pub(crate) fn new(
        property: impl Into<String>,
        op: &InferenceOp,
        u: &Universe,
        witness: Option<Witness>,
        flags: Vec<String>,
    ) -> Self {
        PropertyVerdict::named(property, op.name(), u, witness, flags)
    }

    pub(crate) fn named(
        property: impl Into<String>,
        operation: &str,
        u: &Universe,
        witness: Option<Witness>,
        flags: Vec<String>,
    ) -> Self {
        PropertyVerdict {
            property: property.into(),
            operation: operation.to_string(),
            universe: u.descriptor(),
            outcome: if witness.is_some() {
                Outcome::Counterexample
            } else {
                Outcome::NoCounterexampleInUniverse
            },
            witness,
            triviality_flags: flags,
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::NoCounterexampleInUniverse
    }
}

impl fmt::Display for PropertyVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let outcome = match self.outcome {
            Outcome::Counterexample => "counterexample",
            Outcome::NoCounterexampleInUniverse => "no counterexample in universe",
            Outcome::PreconditionFailed => "precondition failed",
        };
        write!(f, "{} [{}]: {outcome}", self.property, self.operation)?;
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        if !self.triviality_flags.is_empty() {
            write!(f, " ({})", self.triviality_flags.join(", "))?;
        }
        Ok(())
    }
}

pub(crate) fn flags_for(prop: PropertyKind, op: &InferenceOp) -> Vec<String> {
    match prop {
        PropertyKind::LeftAbsorption => vec!["left_absorption_structural".into()],
        PropertyKind::RightAbsorption if op.is_right_absorbing() => {
            vec!["right_absorbing_by_construction".into()]
        }
        PropertyKind::Compactness => vec!["finite_language_triviality".into()],
        PropertyKind::Supracompactness => vec!["finite_language_triviality".into()],
        _ => Vec::new(),
    }
}

fn verdict_from_sweep(sweep: &Sweep, prop: PropertyKind) -> Result<PropertyVerdict> {
    let witness = checks::run(sweep, prop)?;
    if let Some(w) = &witness {
        debug_assert!(
            replay(sweep.op, prop, w).unwrap_or(false),
            "{prop} witness {w} does not replay for {}",
            sweep.op.name()
        );
    }
    Ok(PropertyVerdict::new(
        prop.name(),
        sweep.op,
        sweep.u,
        witness,
        flags_for(prop, sweep.op),
    ))
}

/// Checks one property over every instance in `u`.
pub fn check_property(op: &InferenceOp, prop: PropertyKind, u: &Universe) -> Result<PropertyVerdict> {
    verdict_from_sweep(&Sweep::new(op, u)?, prop)
}

/// One verdict per property, in [`PropertyKind::ALL`] order.
pub fn check_all(op: &InferenceOp, u: &Universe) -> Result<Vec<PropertyVerdict>> {
    check_many(op, &PropertyKind::ALL, u)
}

pub fn check_many(op: &InferenceOp, props: &[PropertyKind], u: &Universe) -> Result<Vec<PropertyVerdict>> {
    let sweep = Sweep::new(op, u)?;
    props.iter().map(|&p| verdict_from_sweep(&sweep, p)).collect()
}

/// Checks `props` in order and fails with [`LabError::Precondition`] at the
/// first one with a counterexample.
pub(crate) fn require(check: &str, op: &InferenceOp, props: &[PropertyKind], u: &Universe) -> Result<()> {
    let sweep = Sweep::new(op, u)?;
    for &p in props {
        let v = verdict_from_sweep(&sweep, p)?;
        if !v.passed() {
            return Err(LabError::Precondition {
                check: check.to_string(),
                failed: Box::new(v),
            });
        }
    }
    Ok(())
}
