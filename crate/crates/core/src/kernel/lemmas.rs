//! Implication sets and the admissibility identities of `Cn`.

use super::{Formula, FormulaSet, Language, ModelSet};
use crate::error::{LabError, Result};

/// `A → Y`: the set `{χ_A → y : y ∈ Y}` where `χ_A` is the left-to-right
/// conjunction of `A` (`top` when `A` is empty).
///
/// For every `X`, `arrow_set(A, Y) ⊆ Cn(X)` iff `Y ⊆ Cn(X ∪ A)`.
pub fn arrow_set(a: &FormulaSet, y: &FormulaSet) -> FormulaSet {
    let chi = Formula::conjunction(a.iter().cloned());
    y.iter().map(|yi| Formula::implies(chi.clone(), yi.clone())).collect()
}

/// `Cn(X, Y) ∩ Cn(X, Z) = Cn(X, Cn(Y) ∩ Cn(Z))`.
///
/// The right side goes through the canonical axiom of `Cn(Y) ∩ Cn(Z)`, so the
/// two sides are computed along different routes.
pub fn verify_admissibility(lang: &Language, x: &FormulaSet, y: &FormulaSet, z: &FormulaSet) -> bool {
    let (mx, my, mz) = (lang.models_of(x), lang.models_of(y), lang.models_of(z));
    admissibility_holds(mx, my, mz, |m| lang.models(&lang.canonical_axiom(m)))
}

pub(crate) fn admissibility_holds(
    mx: ModelSet,
    my: ModelSet,
    mz: ModelSet,
    axiom_models: impl Fn(ModelSet) -> ModelSet,
) -> bool {
    let lhs = mx.intersection(my).union(mx.intersection(mz));
    let rhs = mx.intersection(axiom_models(my.union(mz)));
    lhs == rhs
}

/// `Cn(A, ⋂ Cn(Y_i)) = ⋂ Cn(A, Y_i)` over a nonempty family.
pub fn verify_strong_admissibility(lang: &Language, a: &FormulaSet, family: &[FormulaSet]) -> Result<bool> {
    if family.is_empty() {
        return Err(LabError::EmptyFamily);
    }
    let ma = lang.models_of(a);
    let members: Vec<ModelSet> = family.iter().map(|y| lang.models_of(y)).collect();
    Ok(strong_admissibility_holds(ma, &members, |m| {
        lang.models(&lang.canonical_axiom(m))
    }))
}

pub(crate) fn strong_admissibility_holds(
    ma: ModelSet,
    family: &[ModelSet],
    axiom_models: impl Fn(ModelSet) -> ModelSet,
) -> bool {
    let meet = family[1..].iter().fold(family[0], |acc, m| acc.union(*m));
    let lhs = ma.intersection(axiom_models(meet));
    let rhs = family[1..]
        .iter()
        .fold(ma.intersection(family[0]), |acc, m| acc.union(ma.intersection(*m)));
    lhs == rhs
}

/// The defining equivalence of `A → Y` at one `X`.
pub fn arrow_equivalence_holds(lang: &Language, a: &FormulaSet, y: &FormulaSet, x: &FormulaSet) -> bool {
    let arrows = lang.models_of(&arrow_set(a, y));
    arrow_equivalence_on_models(lang.models_of(x), lang.models_of(a), lang.models_of(y), arrows)
}

pub(crate) fn arrow_equivalence_on_models(mx: ModelSet, ma: ModelSet, my: ModelSet, arrows: ModelSet) -> bool {
    let left = mx.is_subset(arrows);
    let right = mx.intersection(ma).is_subset(my);
    left == right
}
