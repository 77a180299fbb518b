//! Operation config documents.
//!
//! ```json
//! {"type": "poole", "defaults": ["p", "!p"]}
//! {"type": "table", "entries": [{"theory": "top", "result": "p"}], "supraclassical": true}
//! ```
//!
//! Theories are written as one formula; its models identify the theory.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{op_cn, op_cwa, op_from_assumptions, op_from_table, op_gcwa, op_poole};
use super::{AssumptionFn, InferenceOp, PooleSystem};
use crate::error::{LabError, Result};
use crate::kernel::{FormulaSet, Language, ModelSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub theory: String,
    pub result: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum OpConfig {
    Cn,
    Cwa,
    Gcwa,
    Poole {
        defaults: Vec<String>,
    },
    Table {
        entries: Vec<TableEntry>,
        #[serde(default, skip_serializing_if = "std::ops::Not::not")]
        supraclassical: bool,
    },
    /// `C(X) = Cn(X ∪ S(X))` with `S` given by a table; unlisted theories get `S = ∅`.
    Assumptions {
        entries: Vec<TableEntry>,
    },
}

/// Assumption operators that scenarios can name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum AssumptionConfig {
    Empty,
    Cwa,
    PooleNatural { defaults: Vec<String> },
    WhenTautological { formula: String },
    Table { entries: Vec<TableEntry> },
}

fn parse_defaults(lang: &Language, defaults: &[String]) -> Result<FormulaSet> {
    let mut out = FormulaSet::new();
    for (i, d) in defaults.iter().enumerate() {
        let f = lang
            .parse(d)
            .map_err(|e| LabError::config(format!("defaults[{i}]"), e))?;
        out.insert(f);
    }
    Ok(out)
}

fn parse_entries(lang: &Language, entries: &[TableEntry]) -> Result<BTreeMap<ModelSet, ModelSet>> {
    let mut out = BTreeMap::new();
    for (i, e) in entries.iter().enumerate() {
        let theory = lang
            .parse(&e.theory)
            .map_err(|err| LabError::config(format!("entries[{i}].theory"), err))?;
        let result = lang
            .parse(&e.result)
            .map_err(|err| LabError::config(format!("entries[{i}].result"), err))?;
        let key = lang.models(&theory);
        if out.insert(key, lang.models(&result)).is_some() {
            return Err(LabError::config(
                format!("entries[{i}].theory"),
                format!("theory {} listed twice", e.theory),
            ));
        }
    }
    Ok(out)
}

impl OpConfig {
    /// Named operations accepted wherever a config is: `cn`, `cwa`, `gcwa`, and
    /// `two-variable` (assume the first atom exactly when the facts are
    /// tautological).
    pub fn builtin(name: &str, lang: &Language) -> Option<OpConfig> {
        Some(match name {
            "cn" => OpConfig::Cn,
            "cwa" => OpConfig::Cwa,
            "gcwa" => OpConfig::Gcwa,
            "two-variable" => OpConfig::Assumptions {
                entries: vec![TableEntry {
                    theory: "top".into(),
                    result: lang.atoms()[0].clone(),
                }],
            },
            _ => return None,
        })
    }

    pub fn build(&self, lang: &Language) -> Result<InferenceOp> {
        Ok(match self {
            OpConfig::Cn => op_cn(lang),
            OpConfig::Cwa => op_cwa(lang),
            OpConfig::Gcwa => op_gcwa(lang),
            OpConfig::Poole { defaults } => op_poole(&PooleSystem::new(lang, parse_defaults(lang, defaults)?)),
            OpConfig::Table {
                entries,
                supraclassical,
            } => op_from_table(lang, parse_entries(lang, entries)?, *supraclassical)
                .map_err(|e| LabError::config("entries", e))?,
            OpConfig::Assumptions { entries } => {
                op_from_assumptions(&AssumptionFn::from_table(lang, parse_entries(lang, entries)?))
                    .renamed("assumptions")
            }
        })
    }

    pub fn from_json(text: &str) -> Result<OpConfig> {
        serde_json::from_str(text).map_err(|e| LabError::config("$", e))
    }
}

impl AssumptionConfig {
    pub fn build(&self, lang: &Language) -> Result<AssumptionFn> {
        Ok(match self {
            AssumptionConfig::Empty => AssumptionFn::empty(lang),
            AssumptionConfig::Cwa => AssumptionFn::cwa(lang),
            AssumptionConfig::PooleNatural { defaults } => {
                AssumptionFn::poole_natural(&PooleSystem::new(lang, parse_defaults(lang, defaults)?))
            }
            AssumptionConfig::WhenTautological { formula } => {
                let f = lang.parse(formula).map_err(|e| LabError::config("formula", e))?;
                AssumptionFn::when_tautological(lang, &f)
            }
            AssumptionConfig::Table { entries } => AssumptionFn::from_table(lang, parse_entries(lang, entries)?),
        })
    }
}

/// Resolves `spec` as inline JSON, a builtin name, or a path to a config file.
pub fn load_op(spec: &str, lang: &Language) -> Result<InferenceOp> {
    let trimmed = spec.trim();
    if trimmed.starts_with('{') {
        return OpConfig::from_json(trimmed)?.build(lang);
    }
    if let Some(cfg) = OpConfig::builtin(trimmed, lang) {
        return cfg.build(lang);
    }
    let path = Path::new(trimmed);
    if !path.exists() {
        return Err(LabError::config(
            "--op",
            format!("`{trimmed}` is neither a builtin (cn, cwa, gcwa, two-variable) nor a config file"),
        ));
    }
    let text = std::fs::read_to_string(path)?;
    OpConfig::from_json(&text)?.build(lang)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Theory;

    fn pq() -> Language {
        Language::new(["p", "q"]).unwrap()
    }

    #[test]
    fn parses_documents() {
        let cfg = OpConfig::from_json(r#"{"type": "poole", "defaults": ["p", "!p"]}"#).unwrap();
        assert_eq!(
            cfg,
            OpConfig::Poole {
                defaults: vec!["p".into(), "!p".into()]
            }
        );
        let op = cfg.build(&pq()).unwrap();
        assert_eq!(op.name(), "poole{p, !p}");
        let table = OpConfig::from_json(r#"{"type": "table", "entries": [{"theory": "top", "result": "p"}]}"#).unwrap();
        let op = table.build(&pq()).unwrap();
        let l = pq();
        assert_eq!(op.apply(&FormulaSet::new()), l.cn(&l.parse_set("p").unwrap()));
    }

    #[test]
    fn reports_paths() {
        let l = pq();
        let err = OpConfig::from_json(r#"{"type": "poole", "defaults": ["p", "r"]}"#)
            .unwrap()
            .build(&l)
            .unwrap_err();
        assert!(
            matches!(&err, LabError::Config { path, .. } if path == "defaults[1]"),
            "{err}"
        );
        let err = OpConfig::from_json(
            r#"{"type": "table", "entries": [{"theory": "p", "result": "q"}], "supraclassical": true}"#,
        )
        .unwrap()
        .build(&l)
        .unwrap_err();
        assert!(matches!(err, LabError::Config { .. }));
        assert!(OpConfig::from_json(r#"{"type": "magic"}"#).is_err());
        let err = OpConfig::from_json(r#"{"type": "table", "entries": [{"theory": "p &", "result": "p"}]}"#)
            .unwrap()
            .build(&l)
            .unwrap_err();
        assert!(matches!(&err, LabError::Config { path, .. } if path == "entries[0].theory"));
    }

    #[test]
    fn builtins_and_inline_specs() {
        let l = pq();
        for name in ["cn", "cwa", "gcwa", "two-variable"] {
            assert!(load_op(name, &l).is_ok(), "{name}");
        }
        let op = load_op("two-variable", &l).unwrap();
        assert_eq!(op.apply(&FormulaSet::new()), l.cn(&l.parse_set("p").unwrap()));
        assert_eq!(
            op.apply_theory(&Theory::from_models(l.models(&l.parse("q -> p").unwrap()))),
            l.cn(&l.parse_set("q -> p").unwrap())
        );
        assert!(load_op(r#"{"type":"cwa"}"#, &l).is_ok());
        assert!(matches!(load_op("no-such-op", &l), Err(LabError::Config { .. })));
    }
}
