//! Canonical extensions of finitary operations and co-compactness.
//!
//! `plain` extends `F` by `C(X) = Cn(X ∪ ⋂_{B ⊆ X} F(B))`. The
//! right-absorbing extension replaces the subsets of `X` by all finite
//! `B ⊆ Cn(X)`; up to `Cn` those are the canonical axioms of the theories
//! weaker than `X`, so on models it is `M ∩ ⋃_{M' ⊇ M} F(M')`.
//!
//! Uniqueness of these extensions among all infinitary operations cannot be
//! checked on a finite language. The checks here verify their bounded
//! consequences and flag verdicts as `bounded_evidence`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{LabError, Result};
use crate::kernel::{FormulaSet, ModelSet};
use crate::operations::InferenceOp;
use crate::properties::sweep::{differing, Budget, Sweep};
use crate::properties::{check_many, require, PropertyKind, PropertyVerdict, Universe, Witness, DEFAULT_CAP};
use crate::representations::{verify_representation, ReprKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionKind {
    Plain,
    RightAbsorbing,
}

impl ExtensionKind {
    pub fn name(self) -> &'static str {
        match self {
            ExtensionKind::Plain => "plain",
            ExtensionKind::RightAbsorbing => "right_absorbing",
        }
    }
}

impl fmt::Display for ExtensionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExtensionKind {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().replace('-', "_").as_str() {
            "plain" => Ok(ExtensionKind::Plain),
            "ra" | "right_absorbing" => Ok(ExtensionKind::RightAbsorbing),
            _ => Err(LabError::config(
                "--kind",
                format!("unknown extension `{s}` (plain or ra)"),
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoCompactKind {
    /// `x ∉ C(X)` ⇒ some finite `A ⊆ X` has `x ∉ C(A)`.
    Strong,
    /// `x ∉ C(X)` ⇒ some finite `A` with `X ⊨ A` has `x ∉ C(A)`.
    Weak,
}

impl CoCompactKind {
    pub fn name(self) -> &'static str {
        match self {
            CoCompactKind::Strong => "strong",
            CoCompactKind::Weak => "weak",
        }
    }
}

/// The canonical extension of `f`.
pub fn extend(f: &InferenceOp, kind: ExtensionKind) -> Result<InferenceOp> {
    let lang = f.lang().clone();
    match kind {
        ExtensionKind::Plain => {
            let g = f.clone();
            Ok(InferenceOp::on_sets(
                format!("plain_extension({})", f.name()),
                f.lang(),
                move |x| {
                    let core = x
                        .subsets()
                        .iter()
                        .fold(ModelSet::empty(&lang), |acc, b| acc.union(g.apply(b).models()));
                    lang.models_of(x).intersection(core)
                },
            ))
        }
        ExtensionKind::RightAbsorbing => {
            let g = f.require_right_absorbing()?.clone();
            Budget::new("extend", DEFAULT_CAP).spend(f.lang().theory_count())?;
            Ok(InferenceOp::on_theories(
                format!("ra_extension({})", f.name()),
                f.lang(),
                move |m| {
                    let core = m.supersets().fold(ModelSet::empty(&lang), |acc, t| acc.union(g(t)));
                    m.intersection(core)
                },
            ))
        }
    }
}

/// Both kinds hold trivially for finite `X` (take `A = X`); the check is
/// literal and the verdict carries the triviality flag.
pub fn check_cocompact(op: &InferenceOp, kind: CoCompactKind, u: &Universe) -> Result<PropertyVerdict> {
    let check = format!("cocompactness/{}", kind.name());
    let s = Sweep::new(op, u)?;
    let mut b = s.budget(&check);
    let pool = u.pool_models();
    let mut witness = None;
    for x in 0..u.set_count() {
        let c = s.out[x];
        // Models of ⋂ C(A) over the admissible A: x fails iff it lies in all.
        let all = match kind {
            CoCompactKind::Strong => {
                let subs = u.subsets_of(x);
                b.spend(subs.len() as u64)?;
                subs.into_iter().fold(c, |acc, a| acc.union(s.out[a]))
            }
            CoCompactKind::Weak => {
                let m = u.models(x);
                b.spend(m.superset_count())?;
                m.supersets().fold(c, |acc, t| acc.union(s.c_theory(t)))
            }
        };
        b.spend(pool.len() as u64)?;
        if let Some(i) = (0..pool.len()).find(|&i| !c.is_subset(pool[i]) && all.is_subset(pool[i])) {
            witness = Some(Witness::new(&u.set(x), None, u.pool().get(i)));
            break;
        }
    }
    Ok(PropertyVerdict::new(
        check,
        op,
        u,
        witness,
        vec!["finite_language_triviality".into()],
    ))
}

fn sub_verdict(check: &str, v: PropertyVerdict, flags: &[String]) -> Option<PropertyVerdict> {
    (!v.passed()).then(|| PropertyVerdict {
        property: format!("{check}/{}", v.property),
        triviality_flags: flags.to_vec(),
        ..v
    })
}

/// `ext` agrees with `f` on every test set.
fn agreement(f: &InferenceOp, ext: &InferenceOp, u: &Universe) -> Result<PropertyVerdict> {
    let (sf, se) = (Sweep::new(f, u)?, Sweep::new(ext, u)?);
    let witness = (0..u.set_count())
        .find(|&id| sf.out[id] != se.out[id])
        .map(|id| Witness::new(&u.set(id), None, Some(&differing(u, sf.out[id], se.out[id]))));
    Ok(PropertyVerdict::new("agreement", ext, u, witness, Vec::new()))
}

/// Bounded evidence that `f` has a unique supraclassical, left-absorbing,
/// deductive, compact, strongly co-compact extension: the plain extension
/// agrees with `f`, has those properties on `u`, and `f` satisfies
/// `F(A) = Cn(A ∪ ⋂_{B ⊆ A} F(B))`. A right-absorbing `f` also gets the
/// right-absorbing, co-compact extension checked.
pub fn verify_unique_extension(f: &InferenceOp, u: &Universe) -> Result<PropertyVerdict> {
    let check = "unique_extension";
    let flags = vec!["bounded_evidence".to_string()];
    let base = vec![
        PropertyKind::Supraclassicality,
        PropertyKind::LeftAbsorption,
        PropertyKind::Deductivity,
    ];
    require(check, f, &base, u)?;
    let mut variants = vec![(ExtensionKind::Plain, CoCompactKind::Strong)];
    if f.is_right_absorbing() {
        variants.push((ExtensionKind::RightAbsorbing, CoCompactKind::Weak));
    }
    for (kind, co) in variants {
        let ext = extend(f, kind)?;
        let mut suite = base.clone();
        suite.push(PropertyKind::Compactness);
        if kind == ExtensionKind::RightAbsorbing {
            suite.push(PropertyKind::RightAbsorption);
        }
        let mut verdicts = vec![agreement(f, &ext, u)?];
        verdicts.extend(check_many(&ext, &suite, u)?);
        verdicts.push(check_cocompact(&ext, co, u)?);
        for v in verdicts {
            if let Some(v) = sub_verdict(check, v, &flags) {
                return Ok(v);
            }
        }
    }
    let rep = verify_representation(f, ReprKind::Largest, u)?;
    let rep = PropertyVerdict {
        property: "rep_identity".into(),
        ..rep
    };
    if let Some(v) = sub_verdict(check, rep, &flags) {
        return Ok(v);
    }
    Ok(PropertyVerdict::new(check, f, u, None, flags))
}

/// The right-absorbing extension of a cumulative operation is cumulative.
pub fn verify_cumuni(f: &InferenceOp, u: &Universe) -> Result<PropertyVerdict> {
    let check = "cumuni";
    require(
        check,
        f,
        &[
            PropertyKind::Supraclassicality,
            PropertyKind::LeftAbsorption,
            PropertyKind::RightAbsorption,
            PropertyKind::Deductivity,
            PropertyKind::Cumulativity,
        ],
        u,
    )?;
    let ext = extend(f, ExtensionKind::RightAbsorbing)?;
    let v = check_many(&ext, &[PropertyKind::Cumulativity], u)?.remove(0);
    Ok(PropertyVerdict {
        property: check.into(),
        ..v
    })
}

/// Both extensions agree with `f` on every theory given by its canonical
/// axiom, and `F(A) = Cn(A ∪ ⋂_{B ⊆ A} F(B))` holds on the universe.
pub fn verify_extension_agreement(f: &InferenceOp, u: &Universe) -> Result<PropertyVerdict> {
    let check = "extension_agreement";
    let lang = f.lang();
    let plain = extend(f, ExtensionKind::Plain)?;
    let ra = extend(f, ExtensionKind::RightAbsorbing)?;
    let mut b = Budget::new(check, u.cap());
    b.spend(lang.theory_count())?;
    for m in ModelSet::all(lang) {
        let x = FormulaSet::from_iter([lang.canonical_axiom(m)]);
        let want = f.apply(&x).models();
        for ext in [&plain, &ra] {
            let got = ext.apply(&x).models();
            if got != want {
                let w = Witness::new(&x, None, Some(&differing(u, want, got)));
                return Ok(PropertyVerdict::new(
                    format!("{check}/{}", ext.name()),
                    f,
                    u,
                    Some(w),
                    Vec::new(),
                ));
            }
        }
    }
    let rep = verify_representation(f, ReprKind::Largest, u)?;
    if !rep.passed() {
        return Ok(PropertyVerdict {
            property: format!("{check}/rep_identity"),
            ..rep
        });
    }
    Ok(PropertyVerdict::new(check, f, u, None, Vec::new()))
}

#[cfg(test)]
mod tests;
