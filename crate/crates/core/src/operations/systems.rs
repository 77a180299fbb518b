use super::InferenceOp;
use crate::kernel::{index_subsets, Formula, FormulaSet, Language, ModelSet, Valuation};

/// Classical consequence as an operation.
pub fn op_cn(lang: &Language) -> InferenceOp {
    InferenceOp::on_theories("cn", lang, |m| m)
}

fn negated_atom(lang: &Language, i: usize) -> ModelSet {
    lang.models(&Formula::not(Formula::atom(lang.atoms()[i].clone())))
}

/// Models of `{¬a : a atom, m ⊭ a}`.
pub(crate) fn cwa_negations(lang: &Language, m: ModelSet) -> ModelSet {
    (0..lang.atom_count())
        .filter(|&i| !m.valuations().all(|v| v.holds(i)))
        .fold(ModelSet::full(lang), |acc, i| acc.intersection(negated_atom(lang, i)))
}

/// Closed world assumption: add `¬a` for every atom `a` not entailed.
pub fn op_cwa(lang: &Language) -> InferenceOp {
    let l = lang.clone();
    InferenceOp::on_theories("cwa", lang, move |m| m.intersection(cwa_negations(&l, m)))
}

/// Models of `m` minimal under inclusion of their true-atom sets.
pub(crate) fn minimal_models(m: ModelSet) -> Vec<Valuation> {
    let vals: Vec<Valuation> = m.valuations().collect();
    vals.iter()
        .copied()
        .filter(|&v| !vals.iter().any(|&w| w != v && w.below(v)))
        .collect()
}

/// Generalized closed world assumption: add `¬a` for every atom false in all
/// minimal models. An inconsistent input stays inconsistent.
pub fn op_gcwa(lang: &Language) -> InferenceOp {
    let l = lang.clone();
    InferenceOp::on_theories("gcwa", lang, move |m| {
        let minimal = minimal_models(m);
        (0..l.atom_count())
            .filter(|&i| minimal.iter().all(|v| !v.holds(i)))
            .fold(m, |acc, i| acc.intersection(negated_atom(&l, i)))
    })
}

/// A Poole system without constraints: a finite set of defaults.
#[derive(Clone, Debug)]
pub struct PooleSystem {
    lang: Language,
    defaults: FormulaSet,
    default_models: Vec<ModelSet>,
}

impl PooleSystem {
    pub fn new(lang: &Language, defaults: FormulaSet) -> Self {
        let default_models = defaults.iter().map(|d| lang.models(d)).collect();
        PooleSystem {
            lang: lang.clone(),
            defaults,
            default_models,
        }
    }

    pub fn lang(&self) -> &Language {
        &self.lang
    }

    pub fn defaults(&self) -> &FormulaSet {
        &self.defaults
    }

    /// Index lists of the maximal subsets of the defaults consistent with a
    /// theory, by size and then lexicographically.
    pub(crate) fn basis_indices(&self, m: ModelSet) -> Vec<Vec<usize>> {
        let n = self.defaults.len();
        let consistent = |ix: &[usize]| {
            !ix.iter()
                .fold(m, |acc, &i| acc.intersection(self.default_models[i]))
                .is_empty()
        };
        index_subsets(n)
            .into_iter()
            .filter(|ix| consistent(ix))
            .filter(|ix| {
                // Consistency is antitone in B, so single additions suffice.
                (0..n).filter(|i| !ix.contains(i)).all(|i| {
                    let mut bigger = ix.clone();
                    bigger.push(i);
                    !consistent(&bigger)
                })
            })
            .collect()
    }

    /// Models of `⋂_{B ∈ basis} Cn(B)`; empty when the basis is empty.
    pub(crate) fn basis_meet(&self, m: ModelSet) -> ModelSet {
        self.basis_indices(m)
            .iter()
            .fold(ModelSet::empty(&self.lang), |acc, ix| {
                let mb = ix.iter().fold(ModelSet::full(&self.lang), |a, &i| {
                    a.intersection(self.default_models[i])
                });
                acc.union(mb)
            })
    }
}

/// Maximal subsets of the defaults consistent with `x`; empty iff `x` is
/// inconsistent.
pub fn poole_basis(sys: &PooleSystem, x: &FormulaSet) -> Vec<FormulaSet> {
    sys.basis_indices(sys.lang.models_of(x))
        .iter()
        .map(|ix| sys.defaults.select(ix))
        .collect()
}

/// `C(X) = Cn(X, ⋂_{B ∈ basis(X)} Cn(B))`, inconsistent when the basis is empty.
pub fn op_poole(sys: &PooleSystem) -> InferenceOp {
    let s = sys.clone();
    InferenceOp::on_theories(format!("poole{}", sys.defaults), &sys.lang, move |m| {
        m.intersection(s.basis_meet(m))
    })
}
