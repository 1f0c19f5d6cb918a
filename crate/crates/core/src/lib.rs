//! A workbench for modal incompleteness over Boolean algebras with
//! operators.
//!
//! The library makes a body of modal-incompleteness mathematics executable:
//!
//! - [`formula`]: polymodal formulas with indexed, converse and universal
//!   boxes, nominals, a parser/printer, substitution, necessity forms and
//!   the standard translation;
//! - [`finite`]: finite Kripke models, finite general frames and finite
//!   modal algebras with brute-force model checking, validity and
//!   complete-additivity checks;
//! - [`cofin`]: the finitely presented infinite general frames whose
//!   admissible sets are the finite/cofinite ones, with exact evaluation
//!   by threshold analysis and least-upper-bound computation for the set
//!   families the incompleteness arguments quantify over;
//! - [`decision`]: the collapse-based decision procedure for validity over
//!   the e-extended frame (membership in `IDe`, and in `ID` for unimodal
//!   input);
//! - [`additivity`]: the first-order condition equivalent to complete
//!   additivity, failure search, explicit failure witnesses, and the
//!   fixed-point-style incompatibility report;
//! - [`proof`]: a Hilbert-style proof-script checker for normal modal
//!   calculi extended with residuation, the COV rule, and the
//!   additivity-sound rules, together with a corpus of derivation
//!   fixtures.
//!
//! Every runnable capability has an example under `examples/`; the `vbao`
//! binary exposes the same operations as subcommands.

pub mod additivity;
pub mod cofin;
pub mod decision;
pub mod finite;
pub mod formula;
pub mod proof;
pub mod sampling;

pub use formula::{parse, Formula};
