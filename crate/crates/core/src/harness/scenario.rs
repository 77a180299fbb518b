//! Scenario documents and the execution of their checks.

use serde::{Deserialize, Serialize};

use super::sweeps::{sweep_admissibility, sweep_arrow_set, sweep_strong_admissibility};
use crate::error::{LabError, Result};
use crate::extension::{
    check_cocompact, extend, verify_cumuni, verify_extension_agreement, verify_unique_extension, CoCompactKind,
    ExtensionKind,
};
use crate::kernel::{FormulaSet, Language, Theory};
use crate::operations::{AssumptionConfig, InferenceOp, OpConfig};
use crate::properties::{check_property, default_pool, Outcome, PropertyKind, PropertyVerdict, Universe, Witness};
use crate::representations::{
    check_maximality, check_supracompact_equiv, represent, verify_cuminters, verify_representation, ReprKind,
};

fn default_max_set_size() -> usize {
    3
}

fn default_family() -> usize {
    4
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UniverseConfig {
    #[serde(default = "default_max_set_size")]
    pub max_set_size: usize,
    /// Defaults to [`default_pool`].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pool: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<u64>,
}

impl Default for UniverseConfig {
    fn default() -> Self {
        UniverseConfig {
            max_set_size: default_max_set_size(),
            pool: None,
            cap: None,
        }
    }
}

impl UniverseConfig {
    pub fn build(&self, lang: &Language) -> Result<Universe> {
        let pool = match &self.pool {
            None => default_pool(lang),
            Some(items) => {
                let mut pool = FormulaSet::new();
                for (i, s) in items.iter().enumerate() {
                    let f = lang
                        .parse(s)
                        .map_err(|e| LabError::config(format!("universe.pool[{i}]"), e))?;
                    pool.insert(f);
                }
                pool
            }
        };
        let u = Universe::new(lang, pool, self.max_set_size)?;
        Ok(match self.cap {
            Some(cap) => u.with_cap(cap),
            None => u,
        })
    }
}

/// Which operation a membership claim is about.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimVia {
    #[default]
    Op,
    Largest,
    Trace,
    CumulativeTrace,
    PlainExtension,
    RaExtension,
}

impl ClaimVia {
    pub fn name(self) -> &'static str {
        match self {
            ClaimVia::Op => "op",
            ClaimVia::Largest => "largest",
            ClaimVia::Trace => "trace",
            ClaimVia::CumulativeTrace => "cumulative_trace",
            ClaimVia::PlainExtension => "plain_extension",
            ClaimVia::RaExtension => "ra_extension",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "check", rename_all = "snake_case")]
pub enum Check {
    Property {
        property: PropertyKind,
    },
    Representation {
        kind: ReprKind,
    },
    Maximality {
        kind: ReprKind,
        assumptions: AssumptionConfig,
    },
    Cuminters,
    SupracompactEquiv,
    Cocompact {
        kind: CoCompactKind,
    },
    UniqueExtension,
    Cumuni,
    ExtensionAgreement,
    /// `formula ∈ via(input)` when `member`, else `formula ∉ via(input)`.
    Claim {
        input: String,
        formula: String,
        member: bool,
        #[serde(default)]
        via: ClaimVia,
    },
    AssumptionAntitonicity {
        assumptions: AssumptionConfig,
    },
    Admissibility,
    StrongAdmissibility {
        #[serde(default = "default_family")]
        max_family: usize,
    },
    ArrowSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectation {
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSpec {
    #[serde(flatten)]
    pub check: Check,
    pub expect: Expectation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub id: String,
    pub description: String,
    #[serde(default)]
    pub tags: Vec<String>,
    pub atoms: Vec<String>,
    pub op: OpConfig,
    #[serde(default)]
    pub universe: UniverseConfig,
    pub checks: Vec<CheckSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioSummary {
    pub id: String,
    pub description: String,
    pub tags: Vec<String>,
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Scenario> {
        serde_json::from_str(text).map_err(|e| LabError::config("$", e))
    }

    pub fn summary(&self) -> ScenarioSummary {
        ScenarioSummary {
            id: self.id.clone(),
            description: self.description.clone(),
            tags: self.tags.clone(),
        }
    }
}

/// Everything a check needs.
pub(crate) struct Context {
    pub lang: Language,
    pub op: InferenceOp,
    pub u: Universe,
}

impl Context {
    pub(crate) fn new(s: &Scenario) -> Result<Context> {
        let lang = Language::new(s.atoms.iter().map(String::as_str)).map_err(|e| LabError::config("atoms", e))?;
        let op = s.op.build(&lang)?;
        let u = s.universe.build(&lang)?;
        Ok(Context { lang, op, u })
    }
}

fn claim(ctx: &Context, input: &str, formula: &str, member: bool, via: ClaimVia) -> Result<PropertyVerdict> {
    let lang = &ctx.lang;
    let x = lang.parse_set(input).map_err(|e| LabError::config("input", e))?;
    let phi = lang.parse(formula).map_err(|e| LabError::config("formula", e))?;
    let t: Theory = match via {
        ClaimVia::Op => ctx.op.apply(&x),
        ClaimVia::Largest => represent(&ctx.op, &x, ReprKind::Largest)?,
        ClaimVia::Trace => represent(&ctx.op, &x, ReprKind::Trace)?,
        ClaimVia::CumulativeTrace => represent(&ctx.op, &x, ReprKind::CumulativeTrace)?,
        ClaimVia::PlainExtension => extend(&ctx.op, ExtensionKind::Plain)?.apply(&x),
        ClaimVia::RaExtension => extend(&ctx.op, ExtensionKind::RightAbsorbing)?.apply(&x),
    };
    let rel = if member { "in" } else { "not in" };
    let name = format!("claim/{}: {phi} {rel} {{{}}}", via.name(), x.to_strings().join(", "));
    let witness = (lang.entails(&t, &phi) != member).then(|| Witness::new(&x, None, Some(&phi)));
    Ok(PropertyVerdict::new(name, &ctx.op, &ctx.u, witness, Vec::new()))
}

fn run_check(ctx: &Context, check: &Check) -> Result<PropertyVerdict> {
    let (op, u) = (&ctx.op, &ctx.u);
    match check {
        Check::Property { property } => check_property(op, *property, u),
        Check::Representation { kind } => verify_representation(op, *kind, u),
        Check::Maximality { kind, assumptions } => check_maximality(&assumptions.build(&ctx.lang)?, op, *kind, u),
        Check::Cuminters => verify_cuminters(op, u),
        Check::SupracompactEquiv => check_supracompact_equiv(op, u),
        Check::Cocompact { kind } => check_cocompact(op, *kind, u),
        Check::UniqueExtension => verify_unique_extension(op, u),
        Check::Cumuni => verify_cumuni(op, u),
        Check::ExtensionAgreement => verify_extension_agreement(op, u),
        Check::Claim {
            input,
            formula,
            member,
            via,
        } => claim(ctx, input, formula, *member, *via),
        Check::AssumptionAntitonicity { assumptions } => {
            let s = assumptions.build(&ctx.lang)?;
            let v = check_property(&s.as_operation(), PropertyKind::Antitonicity, u)?;
            Ok(PropertyVerdict {
                property: "assumptions/antitonicity".into(),
                ..v
            })
        }
        Check::Admissibility => sweep_admissibility(u),
        Check::StrongAdmissibility { max_family } => sweep_strong_admissibility(u, *max_family),
        Check::ArrowSet => sweep_arrow_set(u),
    }
}

/// Runs one check; a failed hypothesis becomes a `precondition_failed`
/// verdict carrying the counterexample to that hypothesis.
pub(crate) fn evaluate(ctx: &Context, check: &Check) -> Result<PropertyVerdict> {
    match run_check(ctx, check) {
        Err(LabError::Precondition { check, failed }) => Ok(PropertyVerdict {
            property: format!("{check}/precondition/{}", failed.property),
            outcome: Outcome::PreconditionFailed,
            ..*failed
        }),
        other => other,
    }
}

/// Differences between a verdict and its expectation.
pub(crate) fn mismatch(index: usize, v: &PropertyVerdict, want: &Expectation) -> Option<String> {
    if v.outcome != want.outcome {
        return Some(format!(
            "checks[{index}] {}: expected {}, got {}",
            v.property,
            outcome_name(want.outcome),
            outcome_name(v.outcome)
        ));
    }
    match &want.witness {
        Some(w) if v.witness.as_ref() != Some(w) => Some(format!(
            "checks[{index}] {}: expected witness {w}, got {}",
            v.property,
            v.witness.as_ref().map_or("none".to_string(), |w| w.to_string())
        )),
        _ => None,
    }
}

fn outcome_name(o: Outcome) -> &'static str {
    match o {
        Outcome::Counterexample => "counterexample",
        Outcome::NoCounterexampleInUniverse => "no_counterexample_in_universe",
        Outcome::PreconditionFailed => "precondition_failed",
    }
}
