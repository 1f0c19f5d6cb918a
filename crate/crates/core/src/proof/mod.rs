//! Hilbert-style proof-script checking for normal modal calculi and their
//! extensions: residuation for tense pairs, the COV rule of nominal
//! calculi, and the rules sound over completely additive algebras.
//!
//! A script is a numbered list of formulas, each justified by exactly one
//! rule application; the checker verifies every line against its stated
//! justification and nothing else. Proof search is out of scope.

mod calculi;
mod check;
mod fixtures;
mod script_text;

pub use calculi::{builtin_calculi, calculus_by_name, vb_axiom, NOMINAL_SCHEMA_DEPTH};
pub use check::{check_script, CheckOutcome, RejectReason};
pub use fixtures::{fixture_corpus, Fixture};
pub use script_text::{parse_script, print_script, ScriptParseError};

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::formula::{Formula, Substitution};

/// Rules a calculus may enable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    Taut,
    AxiomInst,
    Mp,
    Nec,
    Us,
    Rk,
    Residuation,
    Cov,
    VInf,
    VSpec,
    VMod,
    VlMod,
}

/// A Hilbert-style calculus: language, axiom schemata, enabled rules and
/// non-logical premises. Serializes as JSON with formulas in their textual
/// form, so custom calculi can be fed to the checker from files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CalculusSpec {
    pub name: String,
    /// Box indices of the language.
    pub modalities: Vec<u32>,
    /// Indices with a declared converse (tense) partner.
    #[serde(default)]
    pub converse_modalities: Vec<u32>,
    /// Whether the universal modality is part of the language.
    #[serde(default)]
    pub has_ubox: bool,
    /// Whether nominals are part of the language.
    #[serde(default)]
    pub nominals: bool,
    /// Named axiom schemata; schema variables are propositional variables,
    /// schema nominals match any nominal.
    pub axioms: Vec<(String, Formula)>,
    pub rules: BTreeSet<Rule>,
    /// Non-logical premises, closed under necessitation and (unless
    /// disabled) uniform substitution.
    #[serde(default)]
    pub premises: Vec<Formula>,
    /// Modalities declared completely additive; the additivity rules may
    /// only conclude through these, and principal boxes of the necessity
    /// form in the generalized rule are restricted to them.
    #[serde(default)]
    pub ca_modalities: BTreeSet<u32>,
    /// When false, uniform substitution may not be applied to lines that
    /// depend on a premise (derivation from premises rather than axioms).
    #[serde(default = "default_true")]
    pub us_from_premises: bool,
}

fn default_true() -> bool {
    true
}

impl CalculusSpec {
    pub fn axiom(&self, name: &str) -> Option<&Formula> {
        self.axioms.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }
}

/// Target of necessitation and of the derived normality rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NecTarget {
    Box(u32),
    ConvBox(u32),
    UBox,
}

impl NecTarget {
    pub fn apply(&self, f: Formula) -> Formula {
        match self {
            NecTarget::Box(i) => Formula::bx(*i, f),
            NecTarget::ConvBox(i) => Formula::conv_box(*i, f),
            NecTarget::UBox => Formula::ubox(f),
        }
    }
}

impl std::fmt::Display for NecTarget {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NecTarget::Box(i) if *i == crate::formula::EMOD => write!(f, "[e]"),
            NecTarget::Box(i) => write!(f, "[{i}]"),
            NecTarget::ConvBox(i) => write!(f, "[~{i}]"),
            NecTarget::UBox => write!(f, "A"),
        }
    }
}

/// Justification of a single line; indices reference earlier lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    /// The line is one of the calculus's premises.
    Premise,
    /// Substitution instance of a propositional tautology over its maximal
    /// non-Boolean subformulas.
    Taut,
    /// Instance of the named axiom schema (the matching substitution is
    /// inferred).
    Axiom {
        name: String,
    },
    Mp {
        imp: usize,
        ant: usize,
    },
    Nec {
        from: usize,
        target: NecTarget,
    },
    Us {
        from: usize,
        subst: Substitution,
    },
    /// From `φ1 & ... & φn -> ψ` infer the boxed implication.
    Rk {
        from: usize,
        count: usize,
        target: NecTarget,
    },
    /// Residuation between `φ -> [i]ψ` and `<~i>φ -> ψ` (and the converse
    /// pair), in the stated direction.
    Res {
        from: usize,
        forward: bool,
    },
    /// From `ℓ(~i)` with `i` not in `ℓ` infer `ℓ(bot)`; the necessity form
    /// is recovered from the premise/conclusion pair.
    Cov {
        from: usize,
    },
    /// From `p -> χ(p)`, `A χ(p) -> A p`, `α -> [j]χ(p)` with `p` fresh
    /// for `α`, infer `α -> [j]bot`.
    VSpec {
        imp_chi: usize,
        ubox_imp: usize,
        box_imp: usize,
        var: u32,
    },
    /// From `p -> χ(p)`, `[.i]χ(p) -> p`, `α -> [j]χ(p)` with `p` fresh
    /// for `α`, infer `α -> [j]bot`.
    VMod {
        imp_chi: usize,
        boxdot_imp: usize,
        box_imp: usize,
        var: u32,
    },
    /// From `p -> χ(p)`, `ℓ1(χ(p)) -> ... -> ℓn(χ(p)) -> p` and `ℓ(χ(p))`
    /// with `p` fresh for `ℓ`, infer `ℓ(bot)`.
    VlMod {
        imp_chi: usize,
        forms_imp: usize,
        applied: usize,
        var: u32,
    },
    /// Declared but not mechanized; always rejected.
    VInf,
}

impl Justification {
    /// The rule a justification exercises, if any (premises are always
    /// available).
    pub fn rule(&self) -> Option<Rule> {
        Some(match self {
            Justification::Premise => return None,
            Justification::Taut => Rule::Taut,
            Justification::Axiom { .. } => Rule::AxiomInst,
            Justification::Mp { .. } => Rule::Mp,
            Justification::Nec { .. } => Rule::Nec,
            Justification::Us { .. } => Rule::Us,
            Justification::Rk { .. } => Rule::Rk,
            Justification::Res { .. } => Rule::Residuation,
            Justification::Cov { .. } => Rule::Cov,
            Justification::VSpec { .. } => Rule::VSpec,
            Justification::VMod { .. } => Rule::VMod,
            Justification::VlMod { .. } => Rule::VlMod,
            Justification::VInf => Rule::VInf,
        })
    }

    pub fn references(&self) -> Vec<usize> {
        match self {
            Justification::Premise | Justification::Taut | Justification::Axiom { .. } => vec![],
            Justification::Mp { imp, ant } => vec![*imp, *ant],
            Justification::Nec { from, .. }
            | Justification::Us { from, .. }
            | Justification::Rk { from, .. }
            | Justification::Res { from, .. }
            | Justification::Cov { from } => vec![*from],
            Justification::VSpec {
                imp_chi,
                ubox_imp,
                box_imp,
                ..
            } => vec![*imp_chi, *ubox_imp, *box_imp],
            Justification::VMod {
                imp_chi,
                boxdot_imp,
                box_imp,
                ..
            } => vec![*imp_chi, *boxdot_imp, *box_imp],
            Justification::VlMod {
                imp_chi,
                forms_imp,
                applied,
                ..
            } => vec![*imp_chi, *forms_imp, *applied],
            Justification::VInf => vec![],
        }
    }
}

/// One line of a proof script.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    pub index: usize,
    pub formula: Formula,
    pub just: Justification,
}

/// A numbered sequence of justified formulas.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ProofScript {
    pub lines: Vec<Line>,
}

impl ProofScript {
    pub fn final_formula(&self) -> Option<&Formula> {
        self.lines.last().map(|l| &l.formula)
    }
}
