//! Finite propositional language, its semantics, and classical consequence.
//!
//! Theories are never stored as formula lists. A Cn-closed set is infinite
//! syntactically but is determined by its models, so [`Theory`] holds a
//! [`ModelSet`] and membership becomes model-set inclusion.

mod formula;
mod lemmas;
mod parse;
mod semantics;

pub use formula::Formula;
pub(crate) use lemmas::{admissibility_holds, arrow_equivalence_on_models, strong_admissibility_holds};
pub use lemmas::{arrow_equivalence_holds, arrow_set, verify_admissibility, verify_strong_admissibility};
pub(crate) use semantics::index_subsets;
pub use semantics::{FormulaSet, Language, ModelSet, Theory, Valuation, MAX_ATOMS};

use crate::error::Result;

pub fn parse_formula(text: &str, lang: &Language) -> Result<Formula> {
    lang.parse(text)
}

pub fn models(phi: &Formula, lang: &Language) -> ModelSet {
    lang.models(phi)
}

pub fn cn(lang: &Language, x: &FormulaSet) -> Theory {
    lang.cn(x)
}

pub fn entails(lang: &Language, t: &Theory, x: &Formula) -> bool {
    lang.entails(t, x)
}

pub fn canonical_axiom(lang: &Language, m: ModelSet) -> Formula {
    lang.canonical_axiom(m)
}
