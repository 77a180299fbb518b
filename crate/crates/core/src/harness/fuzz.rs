//! Seeded random table operations against the bounded representation
//! biconditionals.
//!
//! On a universe that realizes every pair of theories `M' ⊇ M`, the
//! representation equations hold exactly when:
//!
//! * `largest`: supraclassicality, left absorption and deductivity;
//! * `trace`: the same plus right absorption;
//! * `cumulative_trace`: the same plus cumulativity.
//!
//! Table operations are right-absorbing and left-absorbing by construction, so
//! the generators vary the remaining properties.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{LabError, Result};
use crate::kernel::{FormulaSet, Language, ModelSet};
use crate::operations::{op_from_table, op_poole, InferenceOp, PooleSystem};
use crate::properties::{check_many, default_pool, PropertyKind, PropertyVerdict, Universe};
use crate::representations::{verify_representation, ReprKind};

/// Biconditional sides, in checking order.
const PROPS: [PropertyKind; 5] = [
    PropertyKind::Supraclassicality,
    PropertyKind::LeftAbsorption,
    PropertyKind::RightAbsorption,
    PropertyKind::Deductivity,
    PropertyKind::Cumulativity,
];

fn required(kind: ReprKind) -> &'static [PropertyKind] {
    use PropertyKind::*;
    match kind {
        ReprKind::Largest => &[Supraclassicality, LeftAbsorption, Deductivity],
        ReprKind::Trace => &[Supraclassicality, LeftAbsorption, RightAbsorption, Deductivity],
        ReprKind::CumulativeTrace => &PROPS,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Generator {
    /// Each theory maps to a random subset of its models.
    Submask,
    /// `M ∩ s(M)` for an antitone `s`; always represented.
    Antitone,
    /// A Poole system over random defaults, tabulated.
    Poole,
    /// Arbitrary results; only when supraclassicality is not enforced.
    Unrestricted,
}

impl Generator {
    fn name(self) -> &'static str {
        match self {
            Generator::Submask => "submask",
            Generator::Antitone => "antitone",
            Generator::Poole => "poole",
            Generator::Unrestricted => "unrestricted",
        }
    }
}

fn tabulate(lang: &Language, op: &InferenceOp) -> BTreeMap<ModelSet, ModelSet> {
    ModelSet::all(lang)
        .map(|m| (m, op.apply(&FormulaSet::from_iter([lang.canonical_axiom(m)])).models()))
        .collect()
}

fn generate(lang: &Language, gen: Generator, rng: &mut ChaCha8Rng) -> BTreeMap<ModelSet, ModelSet> {
    let full = ModelSet::full(lang).bits();
    let random = |rng: &mut ChaCha8Rng| ModelSet::from_bits(lang, rng.gen::<u32>() & full);
    match gen {
        Generator::Submask => ModelSet::all(lang).map(|m| (m, m.intersection(random(rng)))).collect(),
        Generator::Unrestricted => ModelSet::all(lang).map(|m| (m, random(rng))).collect(),
        Generator::Antitone => {
            let r: BTreeMap<ModelSet, ModelSet> = ModelSet::all(lang).map(|m| (m, random(rng))).collect();
            ModelSet::all(lang)
                .map(|m| {
                    let s = m.supersets().fold(ModelSet::empty(lang), |acc, t| acc.union(r[&t]));
                    (m, m.intersection(s))
                })
                .collect()
        }
        Generator::Poole => {
            let pool = default_pool(lang);
            let k = rng.gen_range(1..=3);
            let defaults: FormulaSet = (0..k)
                .map(|_| pool.get(rng.gen_range(0..pool.len())).unwrap().clone())
                .collect();
            tabulate(lang, &op_poole(&PooleSystem::new(lang, defaults)))
        }
    }
}

/// Runs `count` generated operations over `n` atoms. `enforce` lists the
/// properties every generated table must have; supraclassicality is the
/// only one not already structural.
pub fn run_fuzz(seed: u64, count: usize, n: usize, enforce: &[PropertyKind]) -> Result<super::RunReport> {
    let started = std::time::Instant::now();
    if n == 0 || n > 2 {
        return Err(LabError::config(
            "--atoms-count",
            "full-theory tables need 1 or 2 atoms",
        ));
    }
    for p in enforce {
        if !matches!(
            p,
            PropertyKind::Supraclassicality | PropertyKind::LeftAbsorption | PropertyKind::RightAbsorption
        ) {
            return Err(LabError::config(
                "--enforce",
                format!("{p} cannot be enforced by the generators"),
            ));
        }
    }
    let supra = enforce.contains(&PropertyKind::Supraclassicality);
    let names = ["p", "q"];
    let lang = Language::new(names[..n].iter().copied())?;
    let u = Universe::with_default_pool(&lang, 3)?;
    let mut gens = vec![Generator::Submask, Generator::Antitone, Generator::Poole];
    if !supra {
        gens.push(Generator::Unrestricted);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = BTreeMap::new();
    let mut verdicts = Vec::new();
    for i in 0..count {
        let gen = gens[rng.gen_range(0..gens.len())];
        let entries = generate(&lang, gen, &mut rng);
        let is_supra = entries.iter().all(|(m, r)| r.is_subset(*m));
        let op = op_from_table(&lang, entries, is_supra)?.renamed(format!("fuzz{i}:{}", gen.name()));
        *summary.entry(format!("generator/{}", gen.name())).or_insert(0) += 1;
        let props = check_many(&op, &PROPS, &u)?;
        for kind in ReprKind::ALL {
            let rep = verify_representation(&op, kind, &u)?;
            let failing = props
                .iter()
                .zip(PROPS)
                .find(|(v, p)| required(kind).contains(p) && !v.passed())
                .map(|(v, _)| v);
            if rep.passed() {
                *summary.entry(format!("{kind}_holds")).or_insert(0) += 1;
            }
            if rep.passed() == failing.is_none() {
                continue;
            }
            let witness = match failing {
                Some(v) => v.witness.clone(),
                None => rep.witness.clone(),
            };
            verdicts.push(PropertyVerdict::named(
                format!("fuzz/{kind}"),
                op.name(),
                &u,
                witness,
                Vec::new(),
            ));
        }
    }
    summary.insert("ops".into(), count as u64);
    summary.insert("violations".into(), verdicts.len() as u64);
    Ok(super::RunReport::new(
        format!("fuzz(seed={seed}, count={count}, n={n})"),
        verdicts,
        started.elapsed(),
        Vec::new(),
    )
    .with_summary(summary))
}
