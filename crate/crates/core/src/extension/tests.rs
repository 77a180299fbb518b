use proptest::prelude::*;

use super::*;
use crate::kernel::{Language, Theory};
use crate::operations::{op_cn, op_cwa, op_from_assumptions, op_from_table, op_gcwa, op_poole};
use crate::operations::{AssumptionFn, PooleSystem};

fn pq() -> Language {
    Language::new(["p", "q"]).unwrap()
}

fn u3() -> Universe {
    Universe::with_default_pool(&pq(), 3).unwrap()
}

/// Membership oracle for the right-absorbing extension: `x ∈ C(X)` iff some
/// `A ⊆ X` has `x ∈ F(A ∪ {canonical_axiom(M)})` for every `M ⊇ models(X)`.
fn ra_member(f: &InferenceOp, x: &FormulaSet, fm: ModelSet) -> bool {
    let l = f.lang();
    let mx = l.models_of(x);
    x.subsets().iter().any(|a| {
        mx.supersets()
            .all(|m| f.apply(&a.with(l.canonical_axiom(m))).models().is_subset(fm))
    })
}

#[test]
fn plain_extension_of_cn_is_cn() {
    let l = pq();
    let ext = extend(&op_cn(&l), ExtensionKind::Plain).unwrap();
    let u = u3();
    for id in 0..u.set_count() {
        assert_eq!(ext.apply(&u.set(id)), l.cn(&u.set(id)));
    }
}

#[test]
fn ra_extension_of_cwa_is_cwa() {
    let l = pq();
    let cwa = op_cwa(&l);
    let ext = extend(&cwa, ExtensionKind::RightAbsorbing).unwrap();
    for m in ModelSet::all(&l) {
        let t = Theory::from_models(m);
        assert_eq!(ext.apply_theory(&t), cwa.apply_theory(&t));
    }
    assert!(verify_extension_agreement(&cwa, &u3()).unwrap().passed());
}

#[test]
fn ra_extension_matches_membership_oracle() {
    let l = pq();
    let sys = PooleSystem::new(&l, l.parse_set("p, !p").unwrap());
    let pool = crate::properties::default_pool(&l);
    for f in [op_cwa(&l), op_cn(&l), op_poole(&sys)] {
        let ext = extend(&f, ExtensionKind::RightAbsorbing).unwrap();
        for x in ["", "p", "p | q", "p, q", "!p | q, q"] {
            let x = l.parse_set(x).unwrap();
            let got = ext.apply(&x).models();
            for phi in pool.iter() {
                let fm = l.models(phi);
                assert_eq!(got.is_subset(fm), ra_member(&f, &x, fm), "{} X={x} x={phi}", f.name());
            }
        }
    }
}

#[test]
fn two_variable_plain_extension_keeps_p() {
    let l = pq();
    let op = op_from_assumptions(&AssumptionFn::when_tautological(&l, &l.parse("p").unwrap()));
    let ext = extend(&op, ExtensionKind::Plain).unwrap();
    assert!(l.entails(&ext.apply(&l.parse_set("p").unwrap()), &l.parse("p").unwrap()));
}

#[test]
fn ra_extension_needs_right_absorption() {
    let l = pq();
    let full = ModelSet::full(&l);
    let op = InferenceOp::on_sets("syntactic", &l, move |_| full);
    assert!(matches!(
        extend(&op, ExtensionKind::RightAbsorbing),
        Err(LabError::NotRightAbsorbing(_))
    ));
    assert!("ra".parse::<ExtensionKind>().is_ok());
    assert!("sideways".parse::<ExtensionKind>().is_err());
}

#[test]
fn cocompactness_is_trivial_on_finite_sets() {
    let l = pq();
    let u = u3();
    for op in [op_cwa(&l), op_gcwa(&l), op_cn(&l)] {
        for kind in [CoCompactKind::Strong, CoCompactKind::Weak] {
            let v = check_cocompact(&op, kind, &u).unwrap();
            assert!(v.passed());
            assert_eq!(v.triviality_flags, ["finite_language_triviality"]);
        }
    }
}

#[test]
fn unique_extension_verdicts() {
    let l = pq();
    let u = u3();
    for op in [op_cwa(&l), op_cn(&l)] {
        let v = verify_unique_extension(&op, &u).unwrap();
        assert!(v.passed(), "{v}");
        assert_eq!(v.triviality_flags, ["bounded_evidence"]);
    }
    match verify_unique_extension(&op_gcwa(&l), &u) {
        Err(LabError::Precondition { failed, .. }) => assert_eq!(failed.property, "deductivity"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn cumuni_verdicts() {
    let l = pq();
    let u = u3();
    let sys = PooleSystem::new(&l, l.parse_set("p, !p").unwrap());
    assert!(verify_cumuni(&op_poole(&sys), &u).unwrap().passed());
    assert!(verify_cumuni(&op_cn(&l), &u).unwrap().passed());
    assert!(matches!(
        verify_cumuni(&op_gcwa(&l), &u),
        Err(LabError::Precondition { .. })
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn plain_extension_agrees_with_deductive_ops(picks in proptest::collection::vec(0u32..16, 16)) {
        // Antitonic assumptions give supraclassical, left-absorbing, deductive ops.
        let l = pq();
        let r: Vec<ModelSet> = picks.iter().map(|&b| ModelSet::from_bits(&l, b)).collect();
        let s = ModelSet::all(&l)
            .map(|m| {
                let sm = m.supersets().fold(ModelSet::empty(&l), |acc, t| acc.union(r[t.bits() as usize]));
                (m, sm)
            })
            .collect();
        let f = op_from_assumptions(&AssumptionFn::from_table(&l, s));
        let ext = extend(&f, ExtensionKind::Plain).unwrap();
        let u = Universe::with_default_pool(&l, 2).unwrap();
        for id in 0..u.set_count() {
            prop_assert_eq!(ext.apply(&u.set(id)), f.apply(&u.set(id)));
        }
    }

    #[test]
    fn assumption_core_is_antitonic(picks in proptest::collection::vec(0u32..16, 16)) {
        let l = pq();
        let entries = ModelSet::all(&l)
            .zip(picks.iter())
            .map(|(m, &b)| (m, ModelSet::from_bits(&l, m.bits() & b)))
            .collect();
        let f = op_from_table(&l, entries, true).unwrap();
        let u = Universe::with_default_pool(&l, 2).unwrap();
        let core = |x: &FormulaSet| {
            x.subsets().iter().fold(ModelSet::empty(&l), |acc, b| acc.union(f.apply(b).models()))
        };
        for id in 0..u.set_count() {
            for sub in u.subsets_of(id) {
                prop_assert!(core(&u.set(sub)).is_subset(core(&u.set(id))));
            }
        }
    }

    #[test]
    fn plain_and_ra_agree_on_closed_inputs(picks in proptest::collection::vec(0u32..16, 16)) {
        let l = pq();
        let entries = ModelSet::all(&l)
            .zip(picks.iter())
            .map(|(m, &b)| (m, ModelSet::from_bits(&l, m.bits() & b)))
            .collect();
        let f = op_from_table(&l, entries, true).unwrap();
        let plain = extend(&f, ExtensionKind::Plain).unwrap();
        let ra = extend(&f, ExtensionKind::RightAbsorbing).unwrap();
        // On a single canonical axiom, the plain core is F(∅) ∪ F(X); the
        // ra core ranges over all weaker theories, so it can only be larger.
        for m in ModelSet::all(&l) {
            let x = FormulaSet::from_iter([l.canonical_axiom(m)]);
            prop_assert!(plain.apply(&x).models().is_subset(ra.apply(&x).models()));
        }
    }

    #[test]
    fn extensions_agree_on_closed_inputs_for_represented_ops(picks in proptest::collection::vec(0u32..16, 16)) {
        let l = pq();
        let r: Vec<ModelSet> = picks.iter().map(|&b| ModelSet::from_bits(&l, b)).collect();
        let s = ModelSet::all(&l)
            .map(|m| {
                let sm = m.supersets().fold(ModelSet::empty(&l), |acc, t| acc.union(r[t.bits() as usize]));
                (m, sm)
            })
            .collect();
        let f = op_from_assumptions(&AssumptionFn::from_table(&l, s));
        let plain = extend(&f, ExtensionKind::Plain).unwrap();
        let ra = extend(&f, ExtensionKind::RightAbsorbing).unwrap();
        for m in ModelSet::all(&l) {
            let x = FormulaSet::from_iter([l.canonical_axiom(m)]);
            prop_assert_eq!(plain.apply(&x), f.apply(&x));
            prop_assert_eq!(ra.apply(&x), f.apply(&x));
        }
    }
}
