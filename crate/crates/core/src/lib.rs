//! A finite propositional laboratory for deductive nonmonotonic inference
//! operations.
//!
//! An operation `C` has an *antitonic representation* when
//! `C(X) = Cn(X ∪ S(X))` for some assumption operator `S` that shrinks as the
//! facts grow. This crate builds the closed world assumption, its generalized
//! form, and Poole default systems over a language of at most five atoms,
//! constructs the canonical representations, and checks the characterizing
//! properties by exhaustive enumeration over a bounded universe of formula sets.
//!
//! ```
//! use nmlab::kernel::Language;
//! use nmlab::operations::op_gcwa;
//! use nmlab::properties::{check_property, Outcome, PropertyKind, Universe};
//!
//! let lang = Language::new(["p", "q"]).unwrap();
//! let universe = Universe::with_default_pool(&lang, 3).unwrap();
//! let verdict = check_property(&op_gcwa(&lang), PropertyKind::Deductivity, &universe).unwrap();
//! assert_eq!(verdict.outcome, Outcome::Counterexample);
//! let w = verdict.witness.unwrap();
//! assert_eq!(w.x, ["p", "p | q"]);
//! assert_eq!(w.formula.as_deref(), Some("!q"));
//! ```
//!
//! The guide in `book/` walks through each module; its code listings are
//! compiled and run as doc-tests.

pub mod error;
pub mod extension;
pub mod harness;
pub mod kernel;
pub mod operations;
pub mod properties;
pub mod representations;

pub use error::{LabError, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/kernel.md")]
    mod kernel {}
    #[doc = include_str!("../../../book/src/operations.md")]
    mod operations {}
    #[doc = include_str!("../../../book/src/properties.md")]
    mod properties {}
    #[doc = include_str!("../../../book/src/representations.md")]
    mod representations {}
    #[doc = include_str!("../../../book/src/extension.md")]
    mod extension {}
    #[doc = include_str!("../../../book/src/harness.md")]
    mod harness {}
}
