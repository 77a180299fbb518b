//! The eight acceptance criteria, each with its runtime budget. Prints one
//! PASS/FAIL line per criterion and exits nonzero on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use nmlab::extension::{extend, verify_cumuni, verify_extension_agreement, ExtensionKind};
use nmlab::harness::{run_fuzz, run_scenario, sweep_admissibility, sweep_arrow_set, sweep_strong_admissibility};
use nmlab::kernel::{verify_admissibility, verify_strong_admissibility, FormulaSet, Language, ModelSet, Theory};
use nmlab::operations::{op_cwa, op_from_assumptions, op_poole, AssumptionFn, PooleSystem};
use nmlab::properties::{check_many, check_property, Outcome, PropertyKind, Universe};
use nmlab::representations::{check_supracompact_equiv, represent, verify_cuminters, verify_representation, ReprKind};

type Check = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn pq() -> Language {
    Language::new(["p", "q"]).unwrap()
}

fn u3(l: &Language) -> Universe {
    Universe::with_default_pool(l, 3).unwrap()
}

fn gcwa_deductivity() -> Check {
    let r = run_scenario("paper-gcwa-deductivity").map_err(|e| e.to_string())?;
    ensure(r.ok(), format!("mismatches: {:?}", r.mismatches))?;
    let v = &r.verdicts[0];
    ensure(
        v.property == "deductivity" && v.outcome == Outcome::Counterexample,
        "no deductivity counterexample",
    )?;
    let w = v.witness.as_ref().unwrap();
    ensure(w.x == ["p", "p | q"], format!("X = {:?}", w.x))?;
    ensure(
        w.y.as_deref() == Some(&["p | q".to_string()][..]),
        format!("Y = {:?}", w.y),
    )?;
    ensure(w.formula.as_deref() == Some("!q"), format!("formula = {:?}", w.formula))?;
    for claim in ["!p | !q not in {p | q}", "!q in {p}", "!p in {q}"] {
        let found = r.verdicts.iter().any(|v| v.property.ends_with(claim) && v.passed());
        ensure(found, format!("claim `{claim}` not confirmed"))?;
    }
    Ok(format!("witness {w}"))
}

fn two_variable_separation() -> Check {
    let l = pq();
    let p = l.parse("p").unwrap();
    let op = op_from_assumptions(&AssumptionFn::when_tautological(&l, &p));
    let x = l.parse_set("p").unwrap();
    let largest = represent(&op, &x, ReprKind::Largest).map_err(|e| e.to_string())?;
    let trace = represent(&op, &x, ReprKind::Trace).map_err(|e| e.to_string())?;
    ensure(l.entails(&largest, &p), "p missing from the largest representation")?;
    ensure(!l.entails(&trace, &p), "p present in the trace")?;
    Ok("p in largest({p}), p not in trace({p})".into())
}

fn cwa_representability() -> Check {
    let l = pq();
    let u = u3(&l);
    let cwa = op_cwa(&l);
    let mut vs = check_many(&cwa, &[PropertyKind::Supraclassicality, PropertyKind::Deductivity], &u)
        .map_err(|e| e.to_string())?;
    vs.push(verify_representation(&cwa, ReprKind::Largest, &u).map_err(|e| e.to_string())?);
    for v in &vs {
        ensure(v.passed(), v.to_string())?;
    }
    Ok(format!("{} sets, 0 counterexamples", u.set_count()))
}

fn poole_suite() -> Check {
    let l = pq();
    let u = u3(&l);
    let sys = PooleSystem::new(&l, l.parse_set("p, !p").unwrap());
    let op = op_poole(&sys);
    let props = [
        PropertyKind::Supraclassicality,
        PropertyKind::LeftAbsorption,
        PropertyKind::Deductivity,
        PropertyKind::Cumulativity,
    ];
    for v in check_many(&op, &props, &u).map_err(|e| e.to_string())? {
        ensure(v.passed(), v.to_string())?;
    }
    let rep = verify_representation(&op, ReprKind::CumulativeTrace, &u).map_err(|e| e.to_string())?;
    ensure(rep.passed(), rep.to_string())?;
    let natural = AssumptionFn::poole_natural(&sys).as_operation();
    let anti = check_property(&natural, PropertyKind::Antitonicity, &u).map_err(|e| e.to_string())?;
    let w = anti.witness.as_ref().ok_or("natural assumptions look antitonic")?;
    ensure(
        w.x.is_empty() && w.y.as_deref() == Some(&["p".to_string()][..]),
        format!("witness {w}"),
    )?;
    let cumuni = verify_cumuni(&op, &u).map_err(|e| e.to_string())?;
    ensure(cumuni.passed(), cumuni.to_string())?;
    Ok(format!("non-antitonic at {w}"))
}

fn admissibility_identities() -> Check {
    let l = Language::new(["p", "q", "r"]).unwrap();
    let pool = l.parse_set("p, q, r, !p, !q, !r, p | q, q | r, p & r, p -> q").unwrap();
    let u = Universe::new(&l, pool, 2).unwrap().with_cap(30_000_000);
    for v in [
        sweep_admissibility(&u).map_err(|e| e.to_string())?,
        sweep_strong_admissibility(&u, 4).map_err(|e| e.to_string())?,
        sweep_arrow_set(&u).map_err(|e| e.to_string())?,
    ] {
        ensure(v.passed(), v.to_string())?;
    }
    // The public entry points agree with the sweeps on a sample.
    let sets: Vec<FormulaSet> = (0..u.set_count()).step_by(7).map(|i| u.set(i)).collect();
    for a in &sets {
        for y in &sets {
            ensure(
                verify_admissibility(&l, a, y, &sets[1]),
                format!("admissibility at {a} {y}"),
            )?;
            let fam = [y.clone(), sets[2].clone(), sets[3].clone()];
            ensure(
                verify_strong_admissibility(&l, a, &fam).unwrap(),
                format!("strong at {a} {y}"),
            )?;
        }
    }
    Ok(format!("{} sets, pool 10, families up to 4", u.set_count()))
}

fn biconditional_fuzz() -> Check {
    let r = run_fuzz(1, 100, 2, &[PropertyKind::Supraclassicality]).map_err(|e| e.to_string())?;
    ensure(r.verdicts.is_empty(), format!("violations: {:?}", r.verdicts))?;
    let holds = |k: &str| r.summary.get(k).copied().unwrap_or(0);
    // Both sides of each biconditional must occur for the run to mean anything.
    for k in ["largest_holds", "trace_holds", "cumulative_trace_holds"] {
        ensure(
            holds(k) > 0 && holds(k) < 100,
            format!("{k} = {} is degenerate", holds(k)),
        )?;
    }
    Ok(format!(
        "0 violations; largest {} / trace {} / cumulative {} of 100 hold",
        holds("largest_holds"),
        holds("trace_holds"),
        holds("cumulative_trace_holds")
    ))
}

fn extension_agreement() -> Check {
    let l = pq();
    let cwa = op_cwa(&l);
    let plain = extend(&cwa, ExtensionKind::Plain).map_err(|e| e.to_string())?;
    let ra = extend(&cwa, ExtensionKind::RightAbsorbing).map_err(|e| e.to_string())?;
    let mut n = 0;
    for m in ModelSet::all(&l) {
        let t = Theory::from_models(m);
        let x = FormulaSet::from_iter([l.canonical_axiom(m)]);
        let want = cwa.apply_theory(&t);
        ensure(
            plain.apply(&x) == want,
            format!("plain differs at {}", l.canonical_axiom(m)),
        )?;
        ensure(
            ra.apply_theory(&t) == want,
            format!("ra differs at {}", l.canonical_axiom(m)),
        )?;
        n += 1;
    }
    let v = verify_extension_agreement(&cwa, &u3(&l)).map_err(|e| e.to_string())?;
    ensure(v.passed(), v.to_string())?;
    Ok(format!("{n} theories agree; rep identity holds on the universe"))
}

fn cuminters_and_compactness() -> Check {
    let l = pq();
    let u = u3(&l);
    let op = op_poole(&PooleSystem::new(&l, l.parse_set("p, !p").unwrap()));
    let v = verify_cuminters(&op, &u).map_err(|e| e.to_string())?;
    ensure(v.passed(), v.to_string())?;
    let eq = check_supracompact_equiv(&op, &u).map_err(|e| e.to_string())?;
    ensure(eq.passed(), eq.to_string())?;
    ensure(
        eq.triviality_flags.iter().any(|f| f == "finite_language_triviality"),
        "triviality flag missing",
    )?;
    Ok(format!("flags {:?}", eq.triviality_flags))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 gcwa deductivity failure", Duration::from_secs(1), gcwa_deductivity),
        (
            "2 two-variable separation",
            Duration::from_secs(1),
            two_variable_separation,
        ),
        ("3 cwa representability", Duration::from_secs(10), cwa_representability),
        ("4 poole suite", Duration::from_secs(30), poole_suite),
        (
            "5 admissibility identities",
            Duration::from_secs(60),
            admissibility_identities,
        ),
        ("6 biconditional fuzz", Duration::from_secs(120), biconditional_fuzz),
        ("7 extension agreement", Duration::from_secs(10), extension_agreement),
        (
            "8 cumulative intersections and compactness",
            Duration::from_secs(30),
            cuminters_and_compactness,
        ),
    ];
    let mut failed = 0;
    for (name, budget, f) in criteria {
        let start = Instant::now();
        let result = f();
        let took = start.elapsed();
        let line = match result {
            Ok(detail) if took <= budget => format!(
                "PASS {name} ({:.2}s <= {}s): {detail}",
                took.as_secs_f64(),
                budget.as_secs()
            ),
            Ok(detail) => format!(
                "FAIL {name} ({:.2}s > {}s): {detail}",
                took.as_secs_f64(),
                budget.as_secs()
            ),
            Err(e) => format!("FAIL {name} ({:.2}s): {e}", took.as_secs_f64()),
        };
        if line.starts_with("FAIL") {
            failed += 1;
        }
        println!("{line}");
    }
    println!("acceptance: {} of 8 passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
