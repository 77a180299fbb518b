//! Exhaustive sweeps of the admissibility identities and of `A → Y` over a
//! universe. Every sweep spends its instantiations against `u.cap()`.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::error::Result;
use crate::kernel::{
    admissibility_holds, arrow_equivalence_on_models, arrow_set, strong_admissibility_holds, Formula, ModelSet,
};
use crate::properties::sweep::Budget;
use crate::properties::{PropertyVerdict, Universe, Witness};

const OPERATION: &str = "cn";

/// Models of the canonical axiom of a theory, memoized. This is the route
/// the right-hand sides take, so both sides are computed differently.
struct AxiomModels<'a> {
    u: &'a Universe,
    memo: RefCell<HashMap<u32, ModelSet>>,
}

impl<'a> AxiomModels<'a> {
    fn new(u: &'a Universe) -> Self {
        AxiomModels {
            u,
            memo: RefCell::new(HashMap::new()),
        }
    }

    fn get(&self, m: ModelSet) -> ModelSet {
        let lang = self.u.lang();
        *self
            .memo
            .borrow_mut()
            .entry(m.bits())
            .or_insert_with(|| lang.models(&lang.canonical_axiom(m)))
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// `Cn(X, Y) ∩ Cn(X, Z) = Cn(X, Cn(Y) ∩ Cn(Z))` for all `X, Y, Z` in `u`.
pub fn sweep_admissibility(u: &Universe) -> Result<PropertyVerdict> {
    let check = "admissibility";
    let n = u.set_count() as u64;
    Budget::new(check, u.cap()).spend(n.saturating_mul(n).saturating_mul(n))?;
    let ax = AxiomModels::new(u);
    let ms: Vec<ModelSet> = (0..u.set_count()).map(|i| u.models(i)).collect();
    for (x, &mx) in ms.iter().enumerate() {
        for (y, &my) in ms.iter().enumerate() {
            for (z, &mz) in ms.iter().enumerate() {
                if !admissibility_holds(mx, my, mz, |m| ax.get(m)) {
                    // Z is reported as its conjunction.
                    let zf = Formula::conjunction(u.set(z).iter().cloned());
                    let w = Witness::new(&u.set(x), Some(&u.set(y)), Some(&zf));
                    return Ok(PropertyVerdict::named(check, OPERATION, u, Some(w), Vec::new()));
                }
            }
        }
    }
    Ok(PropertyVerdict::named(check, OPERATION, u, None, Vec::new()))
}

/// `Cn(A, ⋂ Cn(Y_i)) = ⋂ Cn(A, Y_i)` for every `A` in `u` and every family
/// of 1 to `max_family` distinct sets of `u`.
pub fn sweep_strong_admissibility(u: &Universe, max_family: usize) -> Result<PropertyVerdict> {
    let check = "strong_admissibility";
    let n = u.set_count();
    let families: u64 = (1..=max_family as u64).map(|k| binomial(n as u64, k)).sum();
    Budget::new(check, u.cap()).spend(families.saturating_mul(n as u64))?;
    let ax = AxiomModels::new(u);
    let ms: Vec<ModelSet> = (0..n).map(|i| u.models(i)).collect();
    for a in 0..n {
        let mut chosen = Family::default();
        if let Some(fam) = search_families(&ms, ms[a], 0, max_family, &mut chosen, &ax) {
            let family: Vec<String> = fam.iter().map(|&i| u.set(i).to_string()).collect();
            let w = Witness {
                x: u.set(a).to_strings(),
                y: Some(family),
                formula: None,
            };
            return Ok(PropertyVerdict::named(check, OPERATION, u, Some(w), Vec::new()));
        }
    }
    Ok(PropertyVerdict::named(check, OPERATION, u, None, Vec::new()))
}

#[derive(Default)]
struct Family {
    ids: Vec<usize>,
    models: Vec<ModelSet>,
}

/// Depth-first over increasing index tuples; returns the first failing family.
fn search_families(
    ms: &[ModelSet],
    ma: ModelSet,
    start: usize,
    left: usize,
    chosen: &mut Family,
    ax: &AxiomModels,
) -> Option<Vec<usize>> {
    if left == 0 {
        return None;
    }
    for i in start..ms.len() {
        chosen.ids.push(i);
        chosen.models.push(ms[i]);
        if !strong_admissibility_holds(ma, &chosen.models, |m| ax.get(m)) {
            return Some(chosen.ids.clone());
        }
        if let Some(f) = search_families(ms, ma, i + 1, left - 1, chosen, ax) {
            return Some(f);
        }
        chosen.ids.pop();
        chosen.models.pop();
    }
    None
}

/// `A → Y ⊆ Cn(X)` iff `Y ⊆ Cn(X ∪ A)` for all `A, Y, X` in `u`.
pub fn sweep_arrow_set(u: &Universe) -> Result<PropertyVerdict> {
    let check = "arrow_set";
    let n = u.set_count() as u64;
    Budget::new(check, u.cap()).spend(n.saturating_mul(n).saturating_mul(n))?;
    let lang = u.lang();
    let sets: Vec<_> = (0..u.set_count()).map(|i| u.set(i)).collect();
    for a in &sets {
        let ma = lang.models_of(a);
        for y in &sets {
            let arrows = lang.models_of(&arrow_set(a, y));
            let my = lang.models_of(y);
            for x in 0..u.set_count() {
                if !arrow_equivalence_on_models(u.models(x), ma, my, arrows) {
                    let w = Witness::new(&u.set(x), Some(y), Some(&Formula::conjunction(a.iter().cloned())));
                    return Ok(PropertyVerdict::named(check, OPERATION, u, Some(w), Vec::new()));
                }
            }
        }
    }
    Ok(PropertyVerdict::named(check, OPERATION, u, None, Vec::new()))
}
