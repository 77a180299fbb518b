//! The built-in systems against brute-force oracles that evaluate formulas
//! on their own and never touch model sets.

use nmlab::kernel::{Formula, FormulaSet, Language};
use nmlab::operations::{op_cwa, op_gcwa, op_poole, InferenceOp, PooleSystem};
use nmlab::properties::{default_pool, Universe};

fn eval(f: &Formula, atoms: &[String], v: u32) -> bool {
    match f {
        Formula::Top => true,
        Formula::Bottom => false,
        Formula::Atom(a) => v >> atoms.iter().position(|x| x == a).unwrap() & 1 == 1,
        Formula::Not(a) => !eval(a, atoms, v),
        Formula::And(a, b) => eval(a, atoms, v) && eval(b, atoms, v),
        Formula::Or(a, b) => eval(a, atoms, v) || eval(b, atoms, v),
        Formula::Implies(a, b) => !eval(a, atoms, v) || eval(b, atoms, v),
    }
}

/// Valuations satisfying every formula, as a sorted list.
fn sat(fs: &[&Formula], atoms: &[String]) -> Vec<u32> {
    (0..1u32 << atoms.len())
        .filter(|&v| fs.iter().all(|f| eval(f, atoms, v)))
        .collect()
}

fn follows(models: &[u32], phi: &Formula, atoms: &[String]) -> bool {
    models.iter().all(|&v| eval(phi, atoms, v))
}

fn cwa_models(x: &[&Formula], atoms: &[String]) -> Vec<u32> {
    let base = sat(x, atoms);
    let forced: Vec<usize> = (0..atoms.len())
        .filter(|&i| base.iter().all(|v| v >> i & 1 == 1))
        .collect();
    // Unforced atoms are assumed false.
    base.into_iter()
        .filter(|v| (0..atoms.len()).all(|i| forced.contains(&i) || v >> i & 1 == 0))
        .collect()
}

fn gcwa_models(x: &[&Formula], atoms: &[String]) -> Vec<u32> {
    let base = sat(x, atoms);
    let minimal: Vec<u32> = base
        .iter()
        .copied()
        .filter(|&v| !base.iter().any(|&w| w != v && w & v == w))
        .collect();
    let false_everywhere: Vec<usize> = (0..atoms.len())
        .filter(|&i| minimal.iter().all(|v| v >> i & 1 == 0))
        .collect();
    base.into_iter()
        .filter(|v| false_everywhere.iter().all(|&i| v >> i & 1 == 0))
        .collect()
}

fn poole_models(x: &[&Formula], defaults: &[Formula], atoms: &[String]) -> Vec<u32> {
    let n = defaults.len();
    let consistent = |mask: u32| {
        let mut fs: Vec<&Formula> = x.to_vec();
        fs.extend((0..n).filter(|i| mask >> i & 1 == 1).map(|i| &defaults[i]));
        !sat(&fs, atoms).is_empty()
    };
    let maximal: Vec<u32> = (0..1u32 << n)
        .filter(|&m| consistent(m))
        .filter(|&m| !(0..n).any(|i| m >> i & 1 == 0 && consistent(m | 1 << i)))
        .collect();
    let mut out: Vec<u32> = Vec::new();
    for m in maximal {
        let mut fs: Vec<&Formula> = x.to_vec();
        fs.extend((0..n).filter(|i| m >> i & 1 == 1).map(|i| &defaults[i]));
        out.extend(sat(&fs, atoms));
    }
    out.sort();
    out.dedup();
    out
}

/// Compares membership of every pool formula over every test set.
fn agree(op: &InferenceOp, u: &Universe, oracle: impl Fn(&[&Formula]) -> Vec<u32>) {
    let lang = op.lang();
    let atoms = lang.atoms();
    let pool = default_pool(lang);
    for id in 0..u.set_count() {
        let x = u.set(id);
        let xs: Vec<&Formula> = x.iter().collect();
        let want = oracle(&xs);
        let got = op.apply(&x);
        for phi in pool.iter() {
            assert_eq!(
                lang.entails(&got, phi),
                follows(&want, phi, atoms),
                "{} X={x} formula {phi}",
                op.name()
            );
        }
    }
}

fn setup() -> (Language, Universe) {
    let lang = Language::new(["p", "q"]).unwrap();
    let u = Universe::with_default_pool(&lang, 2).unwrap();
    (lang, u)
}

#[test]
fn cwa_matches_oracle() {
    let (lang, u) = setup();
    agree(&op_cwa(&lang), &u, |x| cwa_models(x, lang.atoms()));
}

#[test]
fn gcwa_matches_oracle() {
    let (lang, u) = setup();
    agree(&op_gcwa(&lang), &u, |x| gcwa_models(x, lang.atoms()));
}

#[test]
fn poole_matches_oracle() {
    let (lang, u) = setup();
    for d in ["p, !p", "p, q, !p | !q", "", "p -> q, !q"] {
        let defaults: FormulaSet = lang.parse_set(d).unwrap();
        let ds: Vec<Formula> = defaults.iter().cloned().collect();
        let sys = PooleSystem::new(&lang, defaults);
        agree(&op_poole(&sys), &u, |x| poole_models(x, &ds, lang.atoms()));
    }
}

#[test]
fn gcwa_disjunction_judgments() {
    // From {p | q} GCWA concludes neither !p | !q nor p -> !q, while a single
    // atom closes off the other.
    let (lang, _) = setup();
    let g = op_gcwa(&lang);
    let c = |x: &str, f: &str| lang.entails(&g.apply(&lang.parse_set(x).unwrap()), &lang.parse(f).unwrap());
    assert!(!c("p | q", "!p | !q"));
    assert!(!c("p | q", "p -> !q"));
    assert!(c("p", "!q"));
    assert!(c("q", "!p"));
    assert!(c("p, p | q", "!q"));
}

#[test]
fn oracle_sanity() {
    let atoms = vec!["p".to_string(), "q".to_string()];
    let lang = Language::new(["p", "q"]).unwrap();
    let pq = lang.parse("p | q").unwrap();
    assert_eq!(gcwa_models(&[&pq], &atoms), vec![1, 2, 3]);
    assert!(cwa_models(&[&pq], &atoms).is_empty());
}
