use proptest::prelude::*;

use super::*;
use crate::kernel::Language;
use crate::operations::{op_cn, op_cwa, op_from_assumptions, op_gcwa, op_poole, PooleSystem};
use crate::properties::Outcome;

fn pq() -> Language {
    Language::new(["p", "q"]).unwrap()
}

fn u3() -> Universe {
    Universe::with_default_pool(&pq(), 3).unwrap()
}

fn two_variable(l: &Language) -> (AssumptionFn, InferenceOp) {
    let s = AssumptionFn::when_tautological(l, &l.parse("p").unwrap());
    let op = op_from_assumptions(&s);
    (s, op)
}

#[test]
fn two_variable_separation() {
    let l = pq();
    let (_, op) = two_variable(&l);
    let x = l.parse_set("p").unwrap();
    let p = l.parse("p").unwrap();
    assert!(l.entails(&represent(&op, &x, ReprKind::Largest).unwrap(), &p));
    let trace = represent(&op, &x, ReprKind::Trace).unwrap();
    assert!(!l.entails(&trace, &p));
    // The weakening q -> p of p is where p is lost.
    let y = l.parse_set("q -> p").unwrap();
    assert!(!l.entails(&op.apply(&y), &p));
}

#[test]
fn cn_largest_is_tautologies() {
    let l = pq();
    for x in ["", "p", "p, q", "p & !q"] {
        let x = l.parse_set(x).unwrap();
        assert_eq!(
            represent(&op_cn(&l), &x, ReprKind::Largest).unwrap(),
            Theory::tautologies(&l)
        );
    }
}

#[test]
fn trace_needs_right_absorption() {
    let l = pq();
    let full = ModelSet::full(&l);
    let op = InferenceOp::on_sets("syntactic", &l, move |_| full);
    let x = FormulaSet::new();
    assert!(matches!(
        represent(&op, &x, ReprKind::Trace),
        Err(LabError::NotRightAbsorbing(_))
    ));
    assert!(represent(&op, &x, ReprKind::Largest).is_ok());
}

#[test]
fn representation_verdicts() {
    let l = pq();
    let u = u3();
    assert!(verify_representation(&op_cwa(&l), ReprKind::Largest, &u)
        .unwrap()
        .passed());
    let g = verify_representation(&op_gcwa(&l), ReprKind::Largest, &u).unwrap();
    assert_eq!(g.outcome, Outcome::Counterexample);
    assert_eq!(g.witness.unwrap().x, ["p", "p | q"]);
    let sys = PooleSystem::new(&l, l.parse_set("p, !p").unwrap());
    let v = verify_representation(&op_poole(&sys), ReprKind::CumulativeTrace, &u).unwrap();
    assert!(v.passed());
}

#[test]
fn maximality() {
    let l = pq();
    let u = u3();
    let v = check_maximality(&AssumptionFn::cwa(&l), &op_cwa(&l), ReprKind::Largest, &u).unwrap();
    assert!(v.passed());
    let v = check_maximality(&AssumptionFn::empty(&l), &op_cn(&l), ReprKind::Largest, &u).unwrap();
    assert!(v.passed());
    let (s, op) = two_variable(&l);
    assert!(check_maximality(&s, &op, ReprKind::Trace, &u).unwrap().passed());
    assert!(matches!(
        check_maximality(&s, &op, ReprKind::CumulativeTrace, &u),
        Err(LabError::Unsupported(_))
    ));
    // The natural Poole assumptions are not antitonic.
    let sys = PooleSystem::new(&l, l.parse_set("p, !p").unwrap());
    let err = check_maximality(
        &AssumptionFn::poole_natural(&sys),
        &op_poole(&sys),
        ReprKind::Largest,
        &u,
    )
    .unwrap_err();
    assert!(matches!(err, LabError::Precondition { .. }), "{err}");
    // CWA assumptions do not represent Cn.
    let err = check_maximality(&AssumptionFn::cwa(&l), &op_cn(&l), ReprKind::Largest, &u).unwrap_err();
    match err {
        LabError::Precondition { failed, .. } => assert_eq!(failed.property, "maximality/largest/representation"),
        e => panic!("{e}"),
    }
}

#[test]
fn cuminters_and_compactness_equivalence() {
    let l = pq();
    let u = u3();
    let sys = PooleSystem::new(&l, l.parse_set("p, !p").unwrap());
    assert!(verify_cuminters(&op_poole(&sys), &u).unwrap().passed());
    assert!(verify_cuminters(&op_cn(&l), &u).unwrap().passed());
    match verify_cuminters(&op_gcwa(&l), &u) {
        Err(LabError::Precondition { failed, .. }) => assert_eq!(failed.property, "deductivity"),
        other => panic!("{other:?}"),
    }
    let sys = PooleSystem::new(&l, l.parse_set("p").unwrap());
    let v = check_supracompact_equiv(&op_poole(&sys), &u).unwrap();
    assert!(v.passed());
    assert_eq!(v.triviality_flags, ["finite_language_triviality"]);
    assert!(matches!(
        check_supracompact_equiv(&op_gcwa(&l), &u),
        Err(LabError::Precondition { .. })
    ));
}

#[test]
fn representation_table_rows() {
    let l = pq();
    let u = Universe::new(&l, l.parse_set("p, q").unwrap(), 2).unwrap();
    let rows = representation_table(&op_cwa(&l), ReprKind::Trace, &u).unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0].theory, "top");
    assert_eq!(rows[3].input, ["p", "q"]);
}

fn table_op(l: &Language, picks: &[u32]) -> InferenceOp {
    let entries = ModelSet::all(l)
        .zip(picks.iter().cycle())
        .map(|(m, &r)| (m, ModelSet::from_bits(l, m.bits() & r)))
        .collect();
    crate::operations::op_from_table(l, entries, true).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn largest_is_antitonic(picks in proptest::collection::vec(0u32..16, 16)) {
        let l = pq();
        let op = table_op(&l, &picks);
        let u = Universe::with_default_pool(&l, 2).unwrap();
        for id in 0..u.set_count() {
            let big = represent(&op, &u.set(id), ReprKind::Largest).unwrap();
            for sub in u.subsets_of(id) {
                let small = represent(&op, &u.set(sub), ReprKind::Largest).unwrap();
                prop_assert!(big.is_subtheory_of(&small));
            }
        }
    }

    #[test]
    fn trace_depends_only_on_cn(picks in proptest::collection::vec(0u32..16, 16)) {
        let l = pq();
        let op = table_op(&l, &picks);
        let u = Universe::with_default_pool(&l, 2).unwrap();
        let mut seen = HashMap::new();
        for id in 0..u.set_count() {
            let t = represent(&op, &u.set(id), ReprKind::Trace).unwrap();
            let prev = *seen.entry(u.models(id)).or_insert(t);
            prop_assert_eq!(prev, t);
        }
    }
}
