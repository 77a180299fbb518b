use std::cell::RefCell;
use std::collections::HashMap;

use super::Universe;
use crate::error::{LabError, Result};
use crate::kernel::{Formula, ModelSet};
use crate::operations::InferenceOp;

/// Counts schema instantiations against the universe cap.
pub(crate) struct Budget {
    check: String,
    used: u64,
    cap: u64,
}

impl Budget {
    pub(crate) fn new(check: impl Into<String>, cap: u64) -> Self {
        Budget {
            check: check.into(),
            used: 0,
            cap,
        }
    }

    pub(crate) fn spend(&mut self, n: u64) -> Result<()> {
        self.used = self.used.saturating_add(n);
        if self.used > self.cap {
            return Err(LabError::UniverseTooLarge {
                check: self.check.clone(),
                needed: self.used,
                cap: self.cap,
            });
        }
        Ok(())
    }
}

/// An operation evaluated once on every test set of a universe, with a
/// memo of its values on theories.
pub(crate) struct Sweep<'a> {
    pub op: &'a InferenceOp,
    pub u: &'a Universe,
    /// `C(X)` for every test set, by id.
    pub out: Vec<ModelSet>,
    theories: RefCell<HashMap<u32, ModelSet>>,
}

impl<'a> Sweep<'a> {
    pub(crate) fn new(op: &'a InferenceOp, u: &'a Universe) -> Result<Self> {
        if op.lang().atoms() != u.lang().atoms() {
            return Err(LabError::InvalidLanguage(format!(
                "operation `{}` is over [{}] but the universe is over [{}]",
                op.name(),
                op.lang().atoms().join(", "),
                u.lang().atoms().join(", ")
            )));
        }
        let mut s = Sweep {
            op,
            u,
            out: Vec::new(),
            theories: RefCell::new(HashMap::new()),
        };
        s.out = (0..u.set_count())
            .map(|id| {
                if s.semantic() {
                    s.c_theory(u.models(id))
                } else {
                    op.apply(&u.set(id)).models()
                }
            })
            .collect();
        Ok(s)
    }

    /// Whether the operation sees its input only through `Cn`.
    pub(crate) fn semantic(&self) -> bool {
        self.op.is_right_absorbing()
    }

    /// The operation at the canonical axiom of `m`.
    pub(crate) fn c_theory(&self, m: ModelSet) -> ModelSet {
        if let Some(r) = self.theories.borrow().get(&m.bits()) {
            return *r;
        }
        let r = self.op.apply_models(m);
        self.theories.borrow_mut().insert(m.bits(), r);
        r
    }

    /// `C(X ∪ {canonical_axiom(m)})` for test set `id`.
    pub(crate) fn c_with(&self, id: usize, m: ModelSet) -> ModelSet {
        if self.semantic() {
            self.c_theory(self.u.models(id).intersection(m))
        } else {
            let x = self.u.set(id).with(self.u.lang().canonical_axiom(m));
            self.op.apply(&x).models()
        }
    }

    /// `C(X ∪ Y)` for two test sets.
    pub(crate) fn c_union(&self, x: usize, y: usize) -> ModelSet {
        if self.semantic() {
            self.c_theory(self.u.models(x).intersection(self.u.models(y)))
        } else {
            self.op.apply(&self.u.set(x).union(&self.u.set(y))).models()
        }
    }

    pub(crate) fn budget(&self, check: &str) -> Budget {
        Budget::new(check, self.u.cap())
    }

    pub(crate) fn separating(&self, inside: ModelSet, outside: ModelSet) -> Formula {
        separating(self.u, inside, outside)
    }
}

/// A formula true in every model of `inside` but not in every model of
/// `outside`: the first such pool formula, else the canonical axiom of
/// `inside`. Requires `outside ⊄ inside`.
pub(crate) fn separating(u: &Universe, inside: ModelSet, outside: ModelSet) -> Formula {
    debug_assert!(!outside.is_subset(inside));
    u.pool_models()
        .iter()
        .position(|&m| inside.is_subset(m) && !outside.is_subset(m))
        .map(|i| u.pool().get(i).unwrap().clone())
        .unwrap_or_else(|| u.lang().canonical_axiom(inside))
}

/// A formula in exactly one of the two theories given by their models.
pub(crate) fn differing(u: &Universe, a: ModelSet, b: ModelSet) -> Formula {
    if !b.is_subset(a) {
        separating(u, a, b)
    } else {
        separating(u, b, a)
    }
}

/// Formulas of the theory with models `theory`: pool members first, then its
/// canonical axiom.
pub(crate) fn members(u: &Universe, theory: ModelSet) -> Vec<(Formula, ModelSet)> {
    let mut out: Vec<(Formula, ModelSet)> = u
        .pool()
        .iter()
        .zip(u.pool_models())
        .filter(|(_, &m)| theory.is_subset(m))
        .map(|(f, &m)| (f.clone(), m))
        .collect();
    let canon = u.lang().canonical_axiom(theory);
    if !u.pool().contains(&canon) {
        out.push((canon, theory));
    }
    out
}
