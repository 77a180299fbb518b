//! The canonical antitonic representations of an operation and the checks
//! that characterize when they exist.
//!
//! All three are intersections of conclusions, so on models they are unions:
//!
//! * `largest`: `⋂ C(Y)` over the subsets `Y` of `X`, taken syntactically;
//! * `trace`: `⋂ C(Y)` over all `Y` with `X ⊨ Y`;
//! * `cumulative_trace`: `⋂ C(Y)` over all `Y ⊆ C(X)`.
//!
//! The last two range over theories `M ⊇ models(X)` (resp. `models(C(X))`)
//! through canonical axioms, which is exact only for right-absorbing
//! operations.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{LabError, Result};
use crate::kernel::{FormulaSet, ModelSet, Theory};
use crate::operations::{AssumptionFn, InferenceOp};
use crate::properties::sweep::{differing, Budget, Sweep};
use crate::properties::{check_property, require, PropertyKind, PropertyVerdict, Universe, Witness, DEFAULT_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReprKind {
    Largest,
    Trace,
    CumulativeTrace,
}

impl ReprKind {
    pub const ALL: [ReprKind; 3] = [ReprKind::Largest, ReprKind::Trace, ReprKind::CumulativeTrace];

    pub fn name(self) -> &'static str {
        match self {
            ReprKind::Largest => "largest",
            ReprKind::Trace => "trace",
            ReprKind::CumulativeTrace => "cumulative_trace",
        }
    }
}

impl fmt::Display for ReprKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ReprKind {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().replace('-', "_");
        ReprKind::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| LabError::config("--kind", format!("unknown representation `{s}`")))
    }
}

/// Models of the representation at a theory, for right-absorbing operations.
pub(crate) fn represent_models(op: &InferenceOp, m: ModelSet, kind: ReprKind) -> Result<ModelSet> {
    let f = op.require_right_absorbing()?;
    let base = match kind {
        ReprKind::Trace => m,
        ReprKind::CumulativeTrace => f(m),
        ReprKind::Largest => {
            return Err(LabError::Unsupported(
                "the largest representation depends on the syntax of X".into(),
            ))
        }
    };
    Budget::new(kind.name(), DEFAULT_CAP).spend(base.superset_count())?;
    Ok(base
        .supersets()
        .fold(ModelSet::empty(op.lang()), |acc, t| acc.union(f(t))))
}

/// The assumption theory `S(X)` of the chosen representation.
pub fn represent(op: &InferenceOp, x: &FormulaSet, kind: ReprKind) -> Result<Theory> {
    match kind {
        ReprKind::Largest => {
            Budget::new(kind.name(), DEFAULT_CAP).spend(1u64.checked_shl(x.len() as u32).unwrap_or(u64::MAX))?;
            let models = x
                .subsets()
                .iter()
                .fold(ModelSet::empty(op.lang()), |acc, y| acc.union(op.apply(y).models()));
            Ok(Theory::from_models(models))
        }
        _ => Ok(Theory::from_models(represent_models(op, op.lang().models_of(x), kind)?)),
    }
}

/// `S(X)` for every test set, through the sweep's memo.
fn represent_all(s: &Sweep, kind: ReprKind, check: &str) -> Result<Vec<ModelSet>> {
    let mut b = s.budget(check);
    let u = s.u;
    match kind {
        ReprKind::Largest => (0..u.set_count())
            .map(|id| {
                let subs = u.subsets_of(id);
                b.spend(subs.len() as u64)?;
                Ok(subs
                    .iter()
                    .fold(ModelSet::empty(u.lang()), |acc, &y| acc.union(s.out[y])))
            })
            .collect(),
        _ => {
            s.op.require_right_absorbing()?;
            let mut memo: HashMap<ModelSet, ModelSet> = HashMap::new();
            (0..u.set_count())
                .map(|id| {
                    let m = u.models(id);
                    if let Some(&r) = memo.get(&m) {
                        return Ok(r);
                    }
                    let base = if kind == ReprKind::Trace { m } else { s.out[id] };
                    b.spend(base.superset_count())?;
                    let r = base
                        .supersets()
                        .fold(ModelSet::empty(u.lang()), |acc, t| acc.union(s.c_theory(t)));
                    memo.insert(m, r);
                    Ok(r)
                })
                .collect()
        }
    }
}

/// Checks `C(X) = Cn(X ∪ S(X))` for every `X` in `u`.
pub fn verify_representation(op: &InferenceOp, kind: ReprKind, u: &Universe) -> Result<PropertyVerdict> {
    let check = format!("representation/{kind}");
    let s = Sweep::new(op, u)?;
    let reps = represent_all(&s, kind, &check)?;
    let witness = (0..u.set_count()).find_map(|id| {
        let rhs = u.models(id).intersection(reps[id]);
        (rhs != s.out[id]).then(|| Witness::new(&u.set(id), None, Some(&differing(u, s.out[id], rhs))))
    });
    Ok(PropertyVerdict::new(check, op, u, witness, Vec::new()))
}

/// One line of a representation table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReprRow {
    pub input: Vec<String>,
    /// Canonical axiom of `Cn(X)`.
    pub theory: String,
    /// Canonical axiom of `S(X)`.
    pub assumptions: String,
}

pub fn representation_table(op: &InferenceOp, kind: ReprKind, u: &Universe) -> Result<Vec<ReprRow>> {
    let s = Sweep::new(op, u)?;
    let reps = represent_all(&s, kind, &format!("representation/{kind}"))?;
    let lang = u.lang();
    Ok((0..u.set_count())
        .map(|id| ReprRow {
            input: u.set(id).to_strings(),
            theory: lang.canonical_axiom(u.models(id)).to_string(),
            assumptions: lang.canonical_axiom(reps[id]).to_string(),
        })
        .collect())
}

fn precondition(check: &str, name: &str, op: &InferenceOp, u: &Universe, w: Witness) -> LabError {
    LabError::Precondition {
        check: check.to_string(),
        failed: Box::new(PropertyVerdict::new(
            format!("{check}/{name}"),
            op,
            u,
            Some(w),
            Vec::new(),
        )),
    }
}

/// Checks that `S` is contained in the representation of `kind`, i.e. that
/// the representation is the largest antitonic one (for `trace`: the largest
/// right-absorbing antitonic one).
///
/// The hypotheses are validated first: `C(X) = Cn(X ∪ S(X))` and `S`
/// antitonic. For `largest` they are checked on the universe; for `trace`
/// on every theory weaker than some test set, which needs `S` right-absorbing.
pub fn check_maximality(s: &AssumptionFn, op: &InferenceOp, kind: ReprKind, u: &Universe) -> Result<PropertyVerdict> {
    let check = format!("maximality/{kind}");
    let sweep = Sweep::new(op, u)?;
    let lang = u.lang();
    let s_of = |id: usize| s.apply(&u.set(id)).models();
    let reps = match kind {
        ReprKind::CumulativeTrace => {
            return Err(LabError::Unsupported(
                "maximality is only characterized for the largest and trace representations".into(),
            ))
        }
        ReprKind::Largest => {
            for id in 0..u.set_count() {
                let rhs = u.models(id).intersection(s_of(id));
                if rhs != sweep.out[id] {
                    let f = differing(u, sweep.out[id], rhs);
                    return Err(precondition(
                        &check,
                        "representation",
                        op,
                        u,
                        Witness::new(&u.set(id), None, Some(&f)),
                    ));
                }
            }
            let anti = check_property(&s.as_operation(), PropertyKind::Antitonicity, u)?;
            if !anti.passed() {
                return Err(LabError::Precondition {
                    check,
                    failed: Box::new(anti),
                });
            }
            represent_all(&sweep, kind, &check)?
        }
        ReprKind::Trace => {
            if !s.is_right_absorbing() {
                return Err(LabError::NotRightAbsorbing(s.name().to_string()));
            }
            let so = s.as_operation();
            let mut b = sweep.budget(&check);
            let mut seen = std::collections::HashSet::new();
            for id in 0..u.set_count() {
                let m = u.models(id);
                if !seen.insert(m) {
                    continue;
                }
                b.spend(m.superset_count())?;
                let sm = so.apply_models(m);
                for t in m.supersets() {
                    let st = so.apply_models(t);
                    let y = FormulaSet::from_iter([lang.canonical_axiom(t)]);
                    let ct = sweep.c_theory(t);
                    if t.intersection(st) != ct {
                        let f = differing(u, ct, t.intersection(st));
                        return Err(precondition(
                            &check,
                            "representation",
                            op,
                            u,
                            Witness::new(&y, None, Some(&f)),
                        ));
                    }
                    if !st.is_subset(sm) {
                        // The weaker facts t carry more assumptions than m.
                        let f = differing(u, sm, st);
                        let w = Witness::new(&u.set(id), Some(&y), Some(&f));
                        return Err(precondition(&check, "antitonicity", op, u, w));
                    }
                }
            }
            represent_all(&sweep, kind, &check)?
        }
    };
    let witness = (0..u.set_count()).find_map(|id| {
        let sx = s_of(id);
        // S(X) ⊆ rep(X) as theories.
        (!reps[id].is_subset(sx)).then(|| Witness::new(&u.set(id), None, Some(&sweep.separating(sx, reps[id]))))
    });
    Ok(PropertyVerdict::new(check, op, u, witness, Vec::new()))
}

/// For supraclassical, left-absorbing, deductive, cumulative operations the
/// trace and the cumulative trace coincide.
pub fn verify_cuminters(op: &InferenceOp, u: &Universe) -> Result<PropertyVerdict> {
    let check = "cuminters";
    op.require_right_absorbing()?;
    require(
        check,
        op,
        &[
            PropertyKind::Supraclassicality,
            PropertyKind::LeftAbsorption,
            PropertyKind::Deductivity,
            PropertyKind::Cumulativity,
        ],
        u,
    )?;
    let s = Sweep::new(op, u)?;
    let trace = represent_all(&s, ReprKind::Trace, check)?;
    let cumulative = represent_all(&s, ReprKind::CumulativeTrace, check)?;
    let witness = (0..u.set_count())
        .find(|&id| trace[id] != cumulative[id])
        .map(|id| Witness::new(&u.set(id), None, Some(&differing(u, trace[id], cumulative[id]))));
    Ok(PropertyVerdict::new(check, op, u, witness, Vec::new()))
}

/// Under supraclassicality, left absorption, deductivity and cumulativity,
/// compactness and supracompactness give the same verdict.
pub fn check_supracompact_equiv(op: &InferenceOp, u: &Universe) -> Result<PropertyVerdict> {
    let check = "supracompact_equiv";
    require(
        check,
        op,
        &[
            PropertyKind::Supraclassicality,
            PropertyKind::LeftAbsorption,
            PropertyKind::Deductivity,
            PropertyKind::Cumulativity,
        ],
        u,
    )?;
    let comp = check_property(op, PropertyKind::Compactness, u)?;
    let supra = check_property(op, PropertyKind::Supracompactness, u)?;
    let mut flags = comp.triviality_flags.clone();
    for f in &supra.triviality_flags {
        if !flags.contains(f) {
            flags.push(f.clone());
        }
    }
    let witness = if comp.passed() == supra.passed() {
        None
    } else {
        comp.witness.or(supra.witness)
    };
    Ok(PropertyVerdict::new(check, op, u, witness, flags))
}

#[cfg(test)]
mod tests;
