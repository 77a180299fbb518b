use std::collections::HashMap;

use super::sweep::{differing, members, Sweep};
use super::{PropertyKind, Witness};
use crate::error::Result;
use crate::kernel::{Formula, FormulaSet, ModelSet, Theory};

pub(super) fn run(s: &Sweep, prop: PropertyKind) -> Result<Option<Witness>> {
    match prop {
        PropertyKind::Supraclassicality => supraclassicality(s),
        PropertyKind::LeftAbsorption => left_absorption(s),
        PropertyKind::RightAbsorption => right_absorption(s),
        PropertyKind::Deductivity => deductivity(s),
        PropertyKind::Cumulativity => cumulativity(s),
        PropertyKind::Antitonicity => antitonicity(s),
        PropertyKind::Compactness => compactness(s),
        PropertyKind::Supracompactness => supracompactness(s),
    }
}

fn witness(s: &Sweep, x: usize, y: Option<usize>, formula: Option<&Formula>) -> Witness {
    Witness::new(&s.u.set(x), y.map(|y| s.u.set(y)).as_ref(), formula)
}

fn supraclassicality(s: &Sweep) -> Result<Option<Witness>> {
    let mut b = s.budget("supraclassicality");
    for id in 0..s.u.set_count() {
        b.spend(1)?;
        let (cn, c) = (s.u.models(id), s.out[id]);
        if !c.is_subset(cn) {
            return Ok(Some(witness(s, id, None, Some(&s.separating(cn, c)))));
        }
    }
    Ok(None)
}

/// Re-closes each result through its canonical axiomatization. Results are
/// theories, so this can only fail if the kernel is broken.
fn left_absorption(s: &Sweep) -> Result<Option<Witness>> {
    let mut b = s.budget("left_absorption");
    let lang = s.u.lang();
    for id in 0..s.u.set_count() {
        b.spend(1)?;
        let c = s.out[id];
        let reclosed = lang.models_of(&lang.axiomatize(&Theory::from_models(c)));
        if reclosed != c {
            return Ok(Some(witness(s, id, None, None)));
        }
    }
    Ok(None)
}

/// Pairs each set with the canonical axiom of its closure and with the first
/// set of the universe having the same closure.
fn right_absorption(s: &Sweep) -> Result<Option<Witness>> {
    let mut b = s.budget("right_absorption");
    let lang = s.u.lang();
    let mut first: HashMap<ModelSet, usize> = HashMap::new();
    for id in 0..s.u.set_count() {
        b.spend(2)?;
        let cn = s.u.models(id);
        match first.get(&cn) {
            Some(&r) if s.out[r] != s.out[id] => {
                let f = differing(s.u, s.out[r], s.out[id]);
                return Ok(Some(witness(s, r, Some(id), Some(&f))));
            }
            Some(_) => {}
            None => {
                first.insert(cn, id);
            }
        }
        let canon = s.c_theory(cn);
        if canon != s.out[id] {
            let f = differing(s.u, s.out[id], canon);
            let y = FormulaSet::from_iter([lang.canonical_axiom(cn)]);
            return Ok(Some(Witness::new(&s.u.set(id), Some(&y), Some(&f))));
        }
    }
    Ok(None)
}

fn deductivity(s: &Sweep) -> Result<Option<Witness>> {
    let mut b = s.budget("deductivity");
    for x in 0..s.u.set_count() {
        let subs = s.u.subsets_of(x);
        b.spend(subs.len() as u64)?;
        let (cn, c) = (s.u.models(x), s.out[x]);
        for y in subs {
            let rhs = cn.intersection(s.out[y]);
            if !rhs.is_subset(c) {
                return Ok(Some(witness(s, x, Some(y), Some(&s.separating(c, rhs)))));
            }
        }
    }
    Ok(None)
}

/// `Y` ranges over the test sets satisfying the hypothesis and over
/// `{canonical_axiom(M)}` for every `M ⊇ models(C(X))`.
fn cumulativity(s: &Sweep) -> Result<Option<Witness>> {
    let mut b = s.budget("cumulativity");
    let lang = s.u.lang();
    let n = s.u.set_count();
    let mut settled: HashMap<ModelSet, bool> = HashMap::new();
    for x in 0..n {
        let c = s.out[x];
        if s.semantic() {
            // The instance depends on X only through Cn(X).
            let cn = s.u.models(x);
            let ok = match settled.get(&cn) {
                Some(&ok) => ok,
                None => {
                    b.spend(c.superset_count())?;
                    let ok = c.supersets().all(|m| s.c_theory(cn.intersection(m)) == c);
                    settled.insert(cn, ok);
                    ok
                }
            };
            if ok {
                continue;
            }
            b.spend(n as u64)?;
        } else {
            b.spend(n as u64 + c.superset_count())?;
        }
        for y in 0..n {
            if c.is_subset(s.u.models(y)) {
                let r = s.c_union(x, y);
                if r != c {
                    return Ok(Some(witness(s, x, Some(y), Some(&differing(s.u, r, c)))));
                }
            }
        }
        for m in c.supersets() {
            let r = s.c_with(x, m);
            if r != c {
                let y = FormulaSet::from_iter([lang.canonical_axiom(m)]);
                let f = differing(s.u, r, c);
                return Ok(Some(Witness::new(&s.u.set(x), Some(&y), Some(&f))));
            }
        }
    }
    Ok(None)
}

fn antitonicity(s: &Sweep) -> Result<Option<Witness>> {
    let mut b = s.budget("antitonicity");
    for y in 0..s.u.set_count() {
        let subs = s.u.subsets_of(y);
        b.spend(subs.len() as u64)?;
        for x in subs {
            if !s.out[x].is_subset(s.out[y]) {
                let f = s.separating(s.out[y], s.out[x]);
                return Ok(Some(witness(s, x, Some(y), Some(&f))));
            }
        }
    }
    Ok(None)
}

/// `x ∈ C(X) ⇒ ∃ A ⊆ X ∀ Y (A ⊆ Y ⊆ X ⇒ x ∈ C(Y))`, with `x` over the pool
/// members of `C(X)` and its canonical axiom. `A = X` always works for finite
/// `X`, so this cannot fail; it is evaluated literally anyway.
fn compactness(s: &Sweep) -> Result<Option<Witness>> {
    let mut b = s.budget("compactness");
    for x in 0..s.u.set_count() {
        let subs = s.u.subsets_of(x);
        b.spend((subs.len() * subs.len()) as u64)?;
        // Models of ⋂ C(Y) over the interval [A, X], per A.
        let spans: Vec<ModelSet> = subs
            .iter()
            .map(|&a| {
                subs.iter()
                    .filter(|&&y| s.u.is_subset(a, y))
                    .fold(ModelSet::empty(s.u.lang()), |acc, &y| acc.union(s.out[y]))
            })
            .collect();
        let candidates = members(s.u, s.out[x]);
        b.spend(candidates.len() as u64)?;
        for (f, fm) in candidates {
            if !spans.iter().any(|span| span.is_subset(fm)) {
                return Ok(Some(witness(s, x, None, Some(&f))));
            }
        }
    }
    Ok(None)
}

/// `x ∈ C(X) ⇒ ∃ A ⊆ X ∀ Y (A ⊆ Y ⊆ C(X) ⇒ x ∈ C(Y))`. Up to `Cn`, the sets
/// `Y` are `A ∪ {canonical_axiom(M)}` for `M ⊇ models(C(X))`, plus `A`
/// itself. An `A` not contained in `C(X)` satisfies the inner clause vacuously.
fn supracompactness(s: &Sweep) -> Result<Option<Witness>> {
    let mut b = s.budget("supracompactness");
    let mut memo: HashMap<(ModelSet, ModelSet), ModelSet> = HashMap::new();
    for x in 0..s.u.set_count() {
        let c = s.out[x];
        let subs = s.u.subsets_of(x);
        let mut spans = Vec::with_capacity(subs.len());
        for &a in &subs {
            let ma = s.u.models(a);
            if !c.is_subset(ma) {
                spans.push(ModelSet::empty(s.u.lang()));
                continue;
            }
            let key = (ma, c);
            let span = match memo.get(&key).filter(|_| s.semantic()) {
                Some(&span) => span,
                None => {
                    b.spend(c.superset_count())?;
                    let span = c.supersets().fold(s.out[a], |acc, m| acc.union(s.c_with(a, m)));
                    if s.semantic() {
                        memo.insert(key, span);
                    }
                    span
                }
            };
            spans.push(span);
        }
        let candidates = members(s.u, c);
        b.spend(candidates.len() as u64)?;
        for (f, fm) in candidates {
            if !spans.iter().any(|span| span.is_subset(fm)) {
                return Ok(Some(witness(s, x, None, Some(&f))));
            }
        }
    }
    Ok(None)
}
