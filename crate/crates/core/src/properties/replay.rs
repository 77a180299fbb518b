use super::{PropertyKind, Witness};
use crate::error::{LabError, Result};
use crate::kernel::{FormulaSet, ModelSet};
use crate::operations::InferenceOp;

fn parse_list(op: &InferenceOp, items: &[String]) -> Result<FormulaSet> {
    let lang = op.lang();
    items.iter().map(|s| lang.parse(s)).collect()
}

/// Whether `w` violates the schema of `prop` for `op`, recomputed from the
/// formulas alone.
pub fn replay(op: &InferenceOp, prop: PropertyKind, w: &Witness) -> Result<bool> {
    let lang = op.lang();
    let x = parse_list(op, &w.x)?;
    let y = w.y.as_ref().map(|y| parse_list(op, y)).transpose()?;
    let f = w.formula.as_ref().map(|f| lang.parse(f)).transpose()?;
    let fm = f.as_ref().map(|f| lang.models(f));
    let need = |what: &str| LabError::Unsupported(format!("{prop} witness lacks {what}"));
    let c = |s: &FormulaSet| op.apply(s).models();
    let holds_in = |theory: ModelSet| fm.map(|m| theory.is_subset(m));
    let mx = lang.models_of(&x);
    let cx = c(&x);
    Ok(match prop {
        PropertyKind::Supraclassicality => holds_in(mx).ok_or_else(|| need("formula"))? && !holds_in(cx).unwrap(),
        PropertyKind::LeftAbsorption => {
            let t = crate::kernel::Theory::from_models(cx);
            lang.models_of(&lang.axiomatize(&t)) != cx
        }
        PropertyKind::RightAbsorption => {
            let y = y.ok_or_else(|| need("Y"))?;
            let cy = c(&y);
            mx == lang.models_of(&y) && cx != cy
        }
        PropertyKind::Deductivity => {
            let y = y.ok_or_else(|| need("Y"))?;
            let inside = holds_in(cx).ok_or_else(|| need("formula"))?;
            y.is_subset(&x) && inside && !holds_in(mx.intersection(c(&y))).unwrap()
        }
        PropertyKind::Cumulativity => {
            let y = y.ok_or_else(|| need("Y"))?;
            cx.is_subset(lang.models_of(&y)) && c(&x.union(&y)) != cx
        }
        PropertyKind::Antitonicity => {
            let y = y.ok_or_else(|| need("Y"))?;
            let cy = c(&y);
            x.is_subset(&y) && holds_in(cy).ok_or_else(|| need("formula"))? && !holds_in(cx).unwrap()
        }
        PropertyKind::Compactness => {
            let fm = fm.ok_or_else(|| need("formula"))?;
            let subs = x.subsets();
            // No A works: every A has some Y in [A, X] with the formula outside C(Y).
            cx.is_subset(fm)
                && subs
                    .iter()
                    .all(|a| subs.iter().any(|y| a.is_subset(y) && !c(y).is_subset(fm)))
        }
        PropertyKind::Supracompactness => {
            let fm = fm.ok_or_else(|| need("formula"))?;
            cx.is_subset(fm)
                && x.subsets().iter().all(|a| {
                    let ma = lang.models_of(a);
                    cx.is_subset(ma)
                        && (!c(a).is_subset(fm)
                            || cx
                                .supersets()
                                .any(|m| !c(&a.with(lang.canonical_axiom(m))).is_subset(fm)))
                })
        }
    })
}
