//! Inference operations and the concrete nonmonotonic systems.
//!
//! An [`InferenceOp`] maps a finite formula set to a [`Theory`]. Operations
//! built from a function on theories (every system here, and all tables) see
//! their input only through `Cn(X)`; they carry the
//! `right_absorbing_by_construction` flag and expose that function, which the
//! checkers use to quantify over theories instead of syntax.

mod config;
mod systems;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub use config::{load_op, AssumptionConfig, OpConfig, TableEntry};
pub use systems::{op_cn, op_cwa, op_gcwa, op_poole, poole_basis, PooleSystem};

use crate::error::{LabError, Result};
use crate::kernel::{Formula, FormulaSet, Language, ModelSet, Theory};

/// Function on model sets: models of `Cn(X)` to models of the result.
pub type TheoryFn = dyn Fn(ModelSet) -> ModelSet + Send + Sync;
/// Function on finite formula sets, returning models of the result.
pub type SetFn = dyn Fn(&FormulaSet) -> ModelSet + Send + Sync;

#[derive(Clone)]
pub(crate) enum Mechanism {
    OnTheories(Arc<TheoryFn>),
    OnSets(Arc<SetFn>),
}

impl Mechanism {
    fn apply(&self, lang: &Language, x: &FormulaSet) -> ModelSet {
        match self {
            Mechanism::OnTheories(f) => f(lang.models_of(x)),
            Mechanism::OnSets(f) => f(x),
        }
    }

    fn apply_theory(&self, lang: &Language, m: ModelSet) -> ModelSet {
        match self {
            Mechanism::OnTheories(f) => f(m),
            Mechanism::OnSets(f) => f(&FormulaSet::from_iter([lang.canonical_axiom(m)])),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OpFlags {
    /// The operation factors through `Cn`: equal closures give equal results.
    pub right_absorbing_by_construction: bool,
    /// Defined on every finite input.
    pub total: bool,
}

/// A named finitary inference operation over a fixed language.
#[derive(Clone)]
pub struct InferenceOp {
    name: String,
    lang: Language,
    mechanism: Mechanism,
}

impl fmt::Debug for InferenceOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InferenceOp")
            .field("name", &self.name)
            .field("lang", &self.lang)
            .field("flags", &self.flags())
            .finish()
    }
}

impl InferenceOp {
    /// An operation that depends on its input only through `Cn(X)`.
    pub fn on_theories<F>(name: impl Into<String>, lang: &Language, f: F) -> Self
    where
        F: Fn(ModelSet) -> ModelSet + Send + Sync + 'static,
    {
        InferenceOp {
            name: name.into(),
            lang: lang.clone(),
            mechanism: Mechanism::OnTheories(Arc::new(f)),
        }
    }

    /// An operation that may look at the syntax of its input.
    pub fn on_sets<F>(name: impl Into<String>, lang: &Language, f: F) -> Self
    where
        F: Fn(&FormulaSet) -> ModelSet + Send + Sync + 'static,
    {
        InferenceOp {
            name: name.into(),
            lang: lang.clone(),
            mechanism: Mechanism::OnSets(Arc::new(f)),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn lang(&self) -> &Language {
        &self.lang
    }

    pub fn flags(&self) -> OpFlags {
        OpFlags {
            right_absorbing_by_construction: self.theory_fn().is_some(),
            total: true,
        }
    }

    pub fn is_right_absorbing(&self) -> bool {
        self.flags().right_absorbing_by_construction
    }

    pub fn apply(&self, x: &FormulaSet) -> Theory {
        Theory::from_models(self.mechanism.apply(&self.lang, x))
    }

    /// The operation at the canonical axiomatization of `t`. For a
    /// right-absorbing operation this is `C(X)` for any `X` with `Cn(X) = t`.
    pub fn apply_theory(&self, t: &Theory) -> Theory {
        Theory::from_models(self.mechanism.apply_theory(&self.lang, t.models()))
    }

    pub(crate) fn apply_models(&self, m: ModelSet) -> ModelSet {
        self.mechanism.apply_theory(&self.lang, m)
    }

    pub(crate) fn theory_fn(&self) -> Option<&Arc<TheoryFn>> {
        match &self.mechanism {
            Mechanism::OnTheories(f) => Some(f),
            Mechanism::OnSets(_) => None,
        }
    }

    pub(crate) fn require_right_absorbing(&self) -> Result<&Arc<TheoryFn>> {
        self.theory_fn()
            .ok_or_else(|| LabError::NotRightAbsorbing(self.name.clone()))
    }
}

/// An assumption operator `S`: facts to the theory of assumptions held with them.
#[derive(Clone)]
pub struct AssumptionFn {
    name: String,
    lang: Language,
    mechanism: Mechanism,
}

impl fmt::Debug for AssumptionFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AssumptionFn")
            .field("name", &self.name)
            .field("right_absorbing", &self.is_right_absorbing())
            .finish()
    }
}

impl AssumptionFn {
    pub fn on_theories<F>(name: impl Into<String>, lang: &Language, f: F) -> Self
    where
        F: Fn(ModelSet) -> ModelSet + Send + Sync + 'static,
    {
        AssumptionFn {
            name: name.into(),
            lang: lang.clone(),
            mechanism: Mechanism::OnTheories(Arc::new(f)),
        }
    }

    pub fn on_sets<F>(name: impl Into<String>, lang: &Language, f: F) -> Self
    where
        F: Fn(&FormulaSet) -> ModelSet + Send + Sync + 'static,
    {
        AssumptionFn {
            name: name.into(),
            lang: lang.clone(),
            mechanism: Mechanism::OnSets(Arc::new(f)),
        }
    }

    /// `S(X) = ∅`.
    pub fn empty(lang: &Language) -> Self {
        let full = ModelSet::full(lang);
        AssumptionFn::on_theories("empty", lang, move |_| full)
    }

    /// Negations of the atoms `X` does not entail.
    pub fn cwa(lang: &Language) -> Self {
        let l = lang.clone();
        AssumptionFn::on_theories("cwa_negations", lang, move |m| systems::cwa_negations(&l, m))
    }

    /// `S(X) = Cn(f)` when `Cn(X) = Cn(∅)`, and `∅` otherwise.
    pub fn when_tautological(lang: &Language, f: &Formula) -> Self {
        let fm = lang.models(f);
        let full = ModelSet::full(lang);
        AssumptionFn::on_theories(format!("when_tautological({f})"), lang, move |m| {
            if m.is_full() {
                fm
            } else {
                full
            }
        })
    }

    /// `⋂_{B ∈ basis(X)} Cn(B)`, the assumptions a Poole system is usually
    /// presented with. The empty intersection is the whole language.
    pub fn poole_natural(sys: &PooleSystem) -> Self {
        let sys2 = sys.clone();
        AssumptionFn::on_theories(format!("poole_natural{}", sys.defaults()), sys.lang(), move |m| {
            sys2.basis_meet(m)
        })
    }

    /// `S` given pointwise on theories; theories not listed get `∅`.
    pub fn from_table(lang: &Language, entries: BTreeMap<ModelSet, ModelSet>) -> Self {
        let full = ModelSet::full(lang);
        AssumptionFn::on_theories("assumption_table", lang, move |m| {
            entries.get(&m).copied().unwrap_or(full)
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn lang(&self) -> &Language {
        &self.lang
    }

    pub fn is_right_absorbing(&self) -> bool {
        matches!(self.mechanism, Mechanism::OnTheories(_))
    }

    pub fn apply(&self, x: &FormulaSet) -> Theory {
        Theory::from_models(self.mechanism.apply(&self.lang, x))
    }

    /// `S` itself viewed as an operation, so the property checkers can test it.
    pub fn as_operation(&self) -> InferenceOp {
        InferenceOp {
            name: self.name.clone(),
            lang: self.lang.clone(),
            mechanism: self.mechanism.clone(),
        }
    }
}

/// `C(X) = Theory(entries[models(Cn(X))])`, identity closure for missing keys.
///
/// With `enforce_supraclassical`, every entry must satisfy `result ⊆ theory`
/// on models.
pub fn op_from_table(
    lang: &Language,
    entries: BTreeMap<ModelSet, ModelSet>,
    enforce_supraclassical: bool,
) -> Result<InferenceOp> {
    if enforce_supraclassical {
        if let Some((k, v)) = entries.iter().find(|(k, v)| !v.is_subset(**k)) {
            return Err(LabError::NotSupraclassical {
                theory: lang.canonical_axiom(*k).to_string(),
                result: lang.canonical_axiom(*v).to_string(),
            });
        }
    }
    Ok(InferenceOp::on_theories("table", lang, move |m| {
        entries.get(&m).copied().unwrap_or(m)
    }))
}

/// `C(X) = Cn(X ∪ S(X))`.
pub fn op_from_assumptions(s: &AssumptionFn) -> InferenceOp {
    let name = format!("from_assumptions({})", s.name);
    match &s.mechanism {
        Mechanism::OnTheories(f) => {
            let f = f.clone();
            InferenceOp::on_theories(name, &s.lang, move |m| m.intersection(f(m)))
        }
        Mechanism::OnSets(f) => {
            let f = f.clone();
            let lang = s.lang.clone();
            InferenceOp::on_sets(name, &s.lang, move |x| lang.models_of(x).intersection(f(x)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pq() -> Language {
        Language::new(["p", "q"]).unwrap()
    }

    fn m(l: &Language, s: &str) -> ModelSet {
        l.models(&l.parse(s).unwrap())
    }

    #[test]
    fn table_ops() {
        let l = pq();
        let id = op_from_table(&l, BTreeMap::new(), true).unwrap();
        for t in ModelSet::all(&l) {
            assert_eq!(id.apply_theory(&Theory::from_models(t)).models(), t);
        }
        let mut entries = BTreeMap::new();
        entries.insert(ModelSet::full(&l), m(&l, "p"));
        let op = op_from_table(&l, entries, true).unwrap();
        assert_eq!(op.apply(&FormulaSet::new()).models(), m(&l, "p"));
        assert!(op.is_right_absorbing());

        let mut bad = BTreeMap::new();
        bad.insert(m(&l, "p"), m(&l, "q"));
        assert!(matches!(
            op_from_table(&l, bad.clone(), true),
            Err(LabError::NotSupraclassical { .. })
        ));
        assert!(op_from_table(&l, bad, false).is_ok());
    }

    #[test]
    fn assumption_ops() {
        let l = pq();
        let cn = op_cn(&l);
        let from_empty = op_from_assumptions(&AssumptionFn::empty(&l));
        let cwa = op_cwa(&l);
        let from_cwa = op_from_assumptions(&AssumptionFn::cwa(&l));
        for t in ModelSet::all(&l) {
            let t = Theory::from_models(t);
            assert_eq!(cn.apply_theory(&t), from_empty.apply_theory(&t));
            assert_eq!(cwa.apply_theory(&t), from_cwa.apply_theory(&t));
        }
    }

    #[test]
    fn two_variable_example() {
        let l = pq();
        let s = AssumptionFn::when_tautological(&l, &l.parse("p").unwrap());
        let op = op_from_assumptions(&s);
        let p = l.parse("p").unwrap();
        assert!(l.entails(&op.apply(&FormulaSet::new()), &p));
        assert!(l.entails(&op.apply(&l.parse_set("p").unwrap()), &p));
        assert!(!l.entails(&op.apply(&l.parse_set("q -> p").unwrap()), &p));
    }

    #[test]
    fn syntactic_assumptions_stay_syntactic() {
        let l = pq();
        let p = l.models(&l.parse("p").unwrap());
        let full = ModelSet::full(&l);
        // Assume p only when the facts are literally empty.
        let s = AssumptionFn::on_sets("empty_facts", &l, move |x| if x.is_empty() { p } else { full });
        let op = op_from_assumptions(&s);
        assert!(!op.is_right_absorbing());
        assert_eq!(op.apply(&FormulaSet::new()).models(), p);
        assert!(op.apply(&l.parse_set("top").unwrap()).models().is_full());
    }

    #[test]
    fn ops_are_shareable() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<InferenceOp>();
        assert_send_sync::<AssumptionFn>();
    }
}
