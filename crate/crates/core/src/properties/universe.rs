use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{LabError, Result};
use crate::kernel::{Formula, FormulaSet, Language, ModelSet};

/// Default cap on schema instantiations per check.
pub const DEFAULT_CAP: u64 = 1_000_000;

/// The bounded test space: every duplicate-free subset of `pool` with at most
/// `max_set_size` members.
///
/// Test sets are numbered by size and then lexicographically by pool
/// position; that numbering is the enumeration order every checker uses, so
/// the first counterexample found is the lexicographically first one.
#[derive(Clone, Debug)]
pub struct Universe {
    lang: Language,
    pool: FormulaSet,
    pool_models: Vec<ModelSet>,
    max_set_size: usize,
    cap: u64,
    sets: Vec<Vec<usize>>,
    set_models: Vec<ModelSet>,
    index: HashMap<Vec<usize>, usize>,
}

/// The `universe` block of a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniverseDescriptor {
    pub atoms: Vec<String>,
    pub pool: Vec<String>,
    pub max_set_size: usize,
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul((n - i) as u64) / (i as u64 + 1))
}

/// Atoms, negated atoms, then `a | b` and `a & b` over unordered pairs of
/// distinct literals and `a -> b` over ordered pairs.
pub fn default_pool(lang: &Language) -> FormulaSet {
    let atoms: Vec<Formula> = lang.atoms().iter().map(|a| Formula::atom(a.clone())).collect();
    let literals: Vec<Formula> = atoms
        .iter()
        .cloned()
        .chain(atoms.iter().cloned().map(Formula::not))
        .collect();
    let mut pool: FormulaSet = literals.iter().cloned().collect();
    let n = literals.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    for &(i, j) in &pairs {
        pool.insert(Formula::or(literals[i].clone(), literals[j].clone()));
    }
    for &(i, j) in &pairs {
        pool.insert(Formula::and(literals[i].clone(), literals[j].clone()));
    }
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            pool.insert(Formula::implies(literals[i].clone(), literals[j].clone()));
        }
    }
    pool
}

impl Universe {
    pub fn new(lang: &Language, pool: FormulaSet, max_set_size: usize) -> Result<Self> {
        for f in pool.iter() {
            lang.check(f)?;
        }
        let k = max_set_size.min(pool.len());
        let count: u64 = (0..=k).map(|i| binomial(pool.len(), i)).sum();
        if count > DEFAULT_CAP {
            return Err(LabError::UniverseTooLarge {
                check: "universe".into(),
                needed: count,
                cap: DEFAULT_CAP,
            });
        }
        let mut sets = Vec::with_capacity(count as usize);
        for size in 0..=k {
            push_combinations(pool.len(), size, &mut sets);
        }
        let pool_models: Vec<ModelSet> = pool.iter().map(|f| lang.models(f)).collect();
        let full = ModelSet::full(lang);
        let set_models = sets
            .iter()
            .map(|ix| ix.iter().fold(full, |acc, &i| acc.intersection(pool_models[i])))
            .collect();
        let index = sets.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        Ok(Universe {
            lang: lang.clone(),
            pool,
            pool_models,
            max_set_size,
            cap: DEFAULT_CAP,
            sets,
            set_models,
            index,
        })
    }

    pub fn with_default_pool(lang: &Language, max_set_size: usize) -> Result<Self> {
        Universe::new(lang, default_pool(lang), max_set_size)
    }

    /// Replaces the instantiation cap.
    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    pub fn lang(&self) -> &Language {
        &self.lang
    }

    pub fn pool(&self) -> &FormulaSet {
        &self.pool
    }

    pub fn max_set_size(&self) -> usize {
        self.max_set_size
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn set_count(&self) -> usize {
        self.sets.len()
    }

    /// Pool positions of test set `id`.
    pub fn indices(&self, id: usize) -> &[usize] {
        &self.sets[id]
    }

    pub fn set(&self, id: usize) -> FormulaSet {
        self.pool.select(&self.sets[id])
    }

    /// Models of `Cn` of test set `id`.
    pub fn models(&self, id: usize) -> ModelSet {
        self.set_models[id]
    }

    pub(crate) fn pool_models(&self) -> &[ModelSet] {
        &self.pool_models
    }

    pub fn id_of(&self, indices: &[usize]) -> Option<usize> {
        self.index.get(indices).copied()
    }

    /// Ids of all subsets of test set `id`, ascending (so by size, then
    /// lexicographically). The last one is `id` itself.
    pub fn subsets_of(&self, id: usize) -> Vec<usize> {
        let ix = &self.sets[id];
        let n = ix.len();
        let mut out: Vec<usize> = (0..1u32 << n)
            .map(|mask| {
                let sub: Vec<usize> = (0..n).filter(|b| mask >> b & 1 == 1).map(|b| ix[b]).collect();
                self.index[&sub]
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Whether test set `a` is a subset of test set `b`.
    pub fn is_subset(&self, a: usize, b: usize) -> bool {
        let sb = &self.sets[b];
        self.sets[a].iter().all(|i| sb.binary_search(i).is_ok())
    }

    pub fn descriptor(&self) -> UniverseDescriptor {
        UniverseDescriptor {
            atoms: self.lang.atoms().to_vec(),
            pool: self.pool.to_strings(),
            max_set_size: self.max_set_size,
        }
    }
}

fn push_combinations(n: usize, k: usize, out: &mut Vec<Vec<usize>>) {
    let mut combo: Vec<usize> = (0..k).collect();
    if k > n {
        return;
    }
    loop {
        out.push(combo.clone());
        // Advance to the next combination in lexicographic order.
        let Some(i) = (0..k).rev().find(|&i| combo[i] != i + n - k) else {
            return;
        };
        combo[i] += 1;
        for j in i + 1..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_pool_shape() {
        let l = Language::new(["p", "q"]).unwrap();
        let pool = default_pool(&l);
        assert_eq!(pool.len(), 28);
        let s = pool.to_strings();
        assert_eq!(&s[..5], &["p", "q", "!p", "!q", "p | q"]);
        assert!(s.contains(&"!p & !q".to_string()));
        assert!(s.contains(&"!q -> p".to_string()));
        assert_eq!(default_pool(&Language::new(["p", "q", "r"]).unwrap()).len(), 66);
    }

    #[test]
    fn enumeration_order_and_counts() {
        let l = Language::new(["p", "q"]).unwrap();
        let u = Universe::with_default_pool(&l, 3).unwrap();
        assert_eq!(u.set_count(), 1 + 28 + 378 + 3276);
        assert_eq!(u.indices(0), &[] as &[usize]);
        assert_eq!(u.indices(1), &[0]);
        assert_eq!(u.indices(29), &[0, 1]);
        assert_eq!(u.indices(30), &[0, 2]);
        let id = u.id_of(&[0, 4]).unwrap();
        assert_eq!(u.set(id).to_strings(), vec!["p", "p | q"]);
        let subs = u.subsets_of(id);
        let shown: Vec<String> = subs.iter().map(|&s| u.set(s).to_string()).collect();
        assert_eq!(shown, vec!["{}", "{p}", "{p | q}", "{p, p | q}"]);
        assert!(u.is_subset(1, id));
        assert!(!u.is_subset(id, 1));
    }

    #[test]
    fn small_pools_and_limits() {
        let l = Language::new(["p"]).unwrap();
        let pool = l.parse_set("p, !p").unwrap();
        let u = Universe::new(&l, pool, 5).unwrap();
        assert_eq!(u.set_count(), 4);
        let l5 = Language::new(["a", "b", "c", "d", "e"]).unwrap();
        assert!(matches!(
            Universe::with_default_pool(&l5, 3),
            Err(LabError::UniverseTooLarge { .. })
        ));
        let bad = Language::new(["p", "q"]).unwrap().parse_set("q").unwrap();
        assert!(Universe::new(&l, bad, 1).is_err());
    }
}
