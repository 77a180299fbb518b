//! Verdicts of every built-in scenario against `tests/golden/<id>.json`.
//! Set `UPDATE_GOLDEN=1` to rewrite the files.

use std::path::PathBuf;

use nmlab::harness::{registry, run};

fn golden_path(id: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{id}.json"))
}

#[test]
fn builtin_scenarios_match_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut failures = Vec::new();
    for s in registry() {
        let report = run(&s).unwrap();
        assert!(report.ok(), "{}: {:?}", s.id, report.mismatches);
        let got = report.verdicts_json();
        let path = golden_path(&s.id);
        if update {
            std::fs::write(&path, &got).unwrap();
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(want) if want == got => {}
            Ok(_) => failures.push(format!("{} differs from {}", s.id, path.display())),
            Err(e) => failures.push(format!("{}: {e}", path.display())),
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn no_stale_golden_files() {
    let ids: Vec<String> = registry().into_iter().map(|s| s.id).collect();
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for entry in std::fs::read_dir(dir).unwrap() {
        let name = entry.unwrap().file_name().into_string().unwrap();
        let id = name.trim_end_matches(".json");
        assert!(ids.iter().any(|i| i == id), "stale golden file {name}");
    }
}
