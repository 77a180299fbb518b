use std::fmt;
use std::sync::Arc;

use super::{parse, Formula};
use crate::error::{LabError, Result};

/// Largest supported atom count; 2^5 valuations fill a `u32` model mask.
pub const MAX_ATOMS: usize = 5;

/// A finite propositional language: an ordered list of atom names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Language {
    atoms: Arc<[String]>,
}

impl fmt::Debug for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.atoms.iter()).finish()
    }
}

fn valid_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some('a'..='z'))
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
        && name != "top"
        && name != "bot"
}

impl Language {
    pub fn new<I, S>(atoms: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        if atoms.is_empty() || atoms.len() > MAX_ATOMS {
            return Err(LabError::InvalidLanguage(format!(
                "need between 1 and {MAX_ATOMS} atoms, got {}",
                atoms.len()
            )));
        }
        for (i, a) in atoms.iter().enumerate() {
            if !valid_atom_name(a) {
                return Err(LabError::InvalidLanguage(format!("bad atom name `{a}`")));
            }
            if atoms[..i].contains(a) {
                return Err(LabError::InvalidLanguage(format!("duplicate atom `{a}`")));
            }
        }
        Ok(Language { atoms: atoms.into() })
    }

    /// Parses a comma-separated atom list such as `"p,q"`.
    pub fn from_list(list: &str) -> Result<Self> {
        Language::new(list.split(',').map(str::trim).filter(|s| !s.is_empty()))
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn valuation_count(&self) -> u32 {
        1 << self.atoms.len()
    }

    /// Number of distinct theories, `2^(2^n)`.
    pub fn theory_count(&self) -> u64 {
        1u64 << self.valuation_count()
    }

    pub fn atom_index(&self, name: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a == name)
    }

    pub fn parse(&self, text: &str) -> Result<Formula> {
        parse::parse(text, Some(&self.atoms))
    }

    /// Parses a comma-separated list of formulas. An empty string is the empty set.
    pub fn parse_set(&self, text: &str) -> Result<FormulaSet> {
        let mut out = FormulaSet::new();
        let mut base = 0;
        for piece in text.split(',') {
            if piece.trim().is_empty() {
                if text.trim().is_empty() {
                    break;
                }
                return Err(LabError::Syntax {
                    offset: base,
                    message: "empty formula in list".into(),
                });
            }
            let f = self.parse(piece).map_err(|e| match e {
                LabError::Syntax { offset, message } => LabError::Syntax {
                    offset: offset + base,
                    message,
                },
                other => other,
            })?;
            out.insert(f);
            base += piece.len() + 1;
        }
        Ok(out)
    }

    /// Errors if `f` mentions an atom outside the language.
    pub fn check(&self, f: &Formula) -> Result<()> {
        match f.atoms().into_iter().find(|a| self.atom_index(a).is_none()) {
            Some(a) => Err(LabError::UnknownAtom(a.to_string())),
            None => Ok(()),
        }
    }

    fn atom_mask(&self, i: usize) -> u32 {
        (0..self.valuation_count())
            .filter(|v| v >> i & 1 == 1)
            .fold(0, |acc, v| acc | 1 << v)
    }

    fn eval(&self, f: &Formula) -> u32 {
        let full = ModelSet::full(self).bits;
        match f {
            Formula::Top => full,
            Formula::Bottom => 0,
            Formula::Atom(a) => {
                let i = self
                    .atom_index(a)
                    .unwrap_or_else(|| panic!("atom `{a}` is not in language {self:?}"));
                self.atom_mask(i)
            }
            Formula::Not(g) => !self.eval(g) & full,
            Formula::And(a, b) => self.eval(a) & self.eval(b),
            Formula::Or(a, b) => self.eval(a) | self.eval(b),
            Formula::Implies(a, b) => (!self.eval(a) & full) | self.eval(b),
        }
    }

    /// The valuations satisfying `f`.
    ///
    /// Panics if `f` mentions an atom outside the language; formulas obtained
    /// from [`Language::parse`] never do.
    pub fn models(&self, f: &Formula) -> ModelSet {
        ModelSet {
            bits: self.eval(f),
            atoms: self.atoms.len() as u8,
        }
    }

    /// Models of a set: the intersection of the members' models.
    pub fn models_of(&self, set: &FormulaSet) -> ModelSet {
        set.iter()
            .fold(ModelSet::full(self), |acc, f| acc.intersection(self.models(f)))
    }

    /// Classical consequence.
    pub fn cn(&self, set: &FormulaSet) -> Theory {
        Theory::from_models(self.models_of(set))
    }

    pub fn entails(&self, theory: &Theory, f: &Formula) -> bool {
        theory.models().is_subset(self.models(f))
    }

    /// The disjunction of minterms of `models` in ascending valuation order:
    /// `bot` when empty, `top` when full.
    pub fn canonical_axiom(&self, models: ModelSet) -> Formula {
        if models.is_full() {
            return Formula::Top;
        }
        Formula::disjunction(models.valuations().map(|v| self.minterm(v)))
    }

    fn minterm(&self, v: Valuation) -> Formula {
        Formula::conjunction(self.atoms.iter().enumerate().map(|(i, a)| {
            if v.holds(i) {
                Formula::atom(a.clone())
            } else {
                Formula::not(Formula::atom(a.clone()))
            }
        }))
    }

    /// `{canonical_axiom(models)}`, the one-formula axiomatization of a theory.
    pub fn axiomatize(&self, theory: &Theory) -> FormulaSet {
        FormulaSet::from_iter([self.canonical_axiom(theory.models())])
    }
}

/// Truth assignment; bit `i` is the value of atom `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Valuation(pub u8);

impl Valuation {
    pub fn holds(self, atom: usize) -> bool {
        self.0 >> atom & 1 == 1
    }

    /// True atoms of `self` are a subset of those of `other`.
    pub fn below(self, other: Valuation) -> bool {
        self.0 & !other.0 == 0
    }
}

/// Set of valuations, one bit per valuation.
///
/// The empty set is the inconsistent theory, the full set is `Cn(∅)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModelSet {
    bits: u32,
    atoms: u8,
}

impl ModelSet {
    pub fn empty(lang: &Language) -> Self {
        ModelSet {
            bits: 0,
            atoms: lang.atom_count() as u8,
        }
    }

    pub fn full(lang: &Language) -> Self {
        ModelSet {
            bits: u32::MAX >> (32 - lang.valuation_count()),
            atoms: lang.atom_count() as u8,
        }
    }

    /// Builds a model set from a raw mask; bits beyond `2^n` are dropped.
    pub fn from_bits(lang: &Language, bits: u32) -> Self {
        let full = ModelSet::full(lang);
        ModelSet {
            bits: bits & full.bits,
            atoms: full.atoms,
        }
    }

    pub fn from_valuations<I: IntoIterator<Item = Valuation>>(lang: &Language, vals: I) -> Self {
        let bits = vals.into_iter().fold(0u32, |acc, v| acc | 1 << v.0);
        ModelSet::from_bits(lang, bits)
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn atom_count(self) -> usize {
        self.atoms as usize
    }

    fn full_bits(self) -> u32 {
        u32::MAX >> (32 - (1u32 << self.atoms))
    }

    pub fn len(self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn is_full(self) -> bool {
        self.bits == self.full_bits()
    }

    pub fn contains(self, v: Valuation) -> bool {
        self.bits >> v.0 & 1 == 1
    }

    pub fn is_subset(self, other: ModelSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(self, other: ModelSet) -> ModelSet {
        ModelSet {
            bits: self.bits | other.bits,
            atoms: self.atoms,
        }
    }

    pub fn intersection(self, other: ModelSet) -> ModelSet {
        ModelSet {
            bits: self.bits & other.bits,
            atoms: self.atoms,
        }
    }

    pub fn complement(self) -> ModelSet {
        ModelSet {
            bits: !self.bits & self.full_bits(),
            atoms: self.atoms,
        }
    }

    pub fn valuations(self) -> impl Iterator<Item = Valuation> {
        let bits = self.bits;
        (0..32u8).filter(move |v| bits >> v & 1 == 1).map(Valuation)
    }

    /// Number of model sets containing `self`.
    pub fn superset_count(self) -> u64 {
        1u64 << self.complement().len()
    }

    /// All model sets containing `self`, in ascending mask order. `self` comes
    /// first and the full set last.
    pub fn supersets(self) -> impl Iterator<Item = ModelSet> {
        let free = self.complement().bits;
        let base = self.bits;
        let atoms = self.atoms;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let s = next?;
            next = if s == free {
                None
            } else {
                Some((s | !free).wrapping_add(1) & free)
            };
            Some(ModelSet { bits: base | s, atoms })
        })
    }

    /// Every model set over `lang`, in ascending mask order.
    pub fn all(lang: &Language) -> impl Iterator<Item = ModelSet> {
        ModelSet::empty(lang).supersets()
    }
}

impl fmt::Debug for ModelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `{10, 01, 11}`: one string per valuation, atom 0 first.
impl fmt::Display for ModelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.valuations().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            for i in 0..self.atoms as usize {
                f.write_str(if v.holds(i) { "1" } else { "0" })?;
            }
        }
        f.write_str("}")
    }
}

/// A Cn-closed set of formulas, held as its models.
///
/// Inclusion is reversed on models: `T1 ⊆ T2` iff `models(T2) ⊆ models(T1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Theory {
    models: ModelSet,
}

impl Theory {
    pub fn from_models(models: ModelSet) -> Self {
        Theory { models }
    }

    pub fn tautologies(lang: &Language) -> Self {
        Theory::from_models(ModelSet::full(lang))
    }

    pub fn inconsistent(lang: &Language) -> Self {
        Theory::from_models(ModelSet::empty(lang))
    }

    pub fn models(&self) -> ModelSet {
        self.models
    }

    pub fn is_consistent(&self) -> bool {
        !self.models.is_empty()
    }

    /// Formula-set inclusion `self ⊆ other`.
    pub fn is_subtheory_of(&self, other: &Theory) -> bool {
        other.models.is_subset(self.models)
    }

    /// `self ∩ other` as formula sets.
    pub fn meet(&self, other: &Theory) -> Theory {
        Theory::from_models(self.models.union(other.models))
    }

    /// `Cn(self ∪ other)`.
    pub fn join(&self, other: &Theory) -> Theory {
        Theory::from_models(self.models.intersection(other.models))
    }
}

/// Finite, duplicate-free, ordered set of formulas.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FormulaSet {
    elems: Vec<Formula>,
}

impl FormulaSet {
    pub fn new() -> Self {
        FormulaSet::default()
    }

    /// Inserts `f` unless an identical formula is present; returns whether it was added.
    pub fn insert(&mut self, f: Formula) -> bool {
        if self.elems.contains(&f) {
            false
        } else {
            self.elems.push(f);
            true
        }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Formula> {
        self.elems.iter()
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.elems.contains(f)
    }

    pub fn get(&self, i: usize) -> Option<&Formula> {
        self.elems.get(i)
    }

    pub fn is_subset(&self, other: &FormulaSet) -> bool {
        self.elems.iter().all(|f| other.contains(f))
    }

    pub fn union(&self, other: &FormulaSet) -> FormulaSet {
        let mut out = self.clone();
        for f in other.iter() {
            out.insert(f.clone());
        }
        out
    }

    pub fn with(&self, f: Formula) -> FormulaSet {
        let mut out = self.clone();
        out.insert(f);
        out
    }

    /// The members picked by `indices`, in that order.
    pub fn select(&self, indices: &[usize]) -> FormulaSet {
        FormulaSet {
            elems: indices.iter().map(|&i| self.elems[i].clone()).collect(),
        }
    }

    /// All `2^len` subsets, ordered by size and then lexicographically by
    /// position.
    pub fn subsets(&self) -> Vec<FormulaSet> {
        index_subsets(self.len()).iter().map(|ix| self.select(ix)).collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.elems.iter().map(ToString::to_string).collect()
    }
}

/// Index lists of all subsets of `0..n`, by size and then lexicographically.
pub(crate) fn index_subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..1u64 << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

impl FromIterator<Formula> for FormulaSet {
    fn from_iter<I: IntoIterator<Item = Formula>>(iter: I) -> Self {
        let mut out = FormulaSet::new();
        for f in iter {
            out.insert(f);
        }
        out
    }
}

impl<'a> IntoIterator for &'a FormulaSet {
    type Item = &'a Formula;
    type IntoIter = std::slice::Iter<'a, Formula>;

    fn into_iter(self) -> Self::IntoIter {
        self.elems.iter()
    }
}

impl fmt::Display for FormulaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.elems.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}
