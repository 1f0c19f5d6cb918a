//! Finitely presented infinite general frames and their fin/cofin algebras
//! of admissible sets, with exact formula evaluation.
//!
//! The carrier of each family is a finite "head" of named points plus the
//! naturals. Admissible sets are finite sets avoiding the limit point, or
//! cofinite sets containing it. All operations are exact: relations are
//! eventually uniform beyond a computable index, so membership questions
//! about the infinite tail reduce to finitely many pointwise tests plus one
//! representative beyond the threshold.

mod family;
mod lub;
mod names;
pub mod truncation;

pub use family::{vb, vb_i, vbe, FrameFamily};
pub use lub::{lub_of_family, lub_of_family_with_bound, FamilyDescriptor, TEMPLATE_BOUND};
pub use names::{alpha, eval_name_a, eval_name_c, name_a, name_c};

use std::collections::{BTreeMap, BTreeSet};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::formula::Formula;

/// A point of a frame family's carrier: a natural-number point of the tail
/// or a named point of the finite head.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PointId {
    Named(String),
    Nat(u64),
}

impl PointId {
    pub fn named(s: &str) -> Self {
        PointId::Named(s.to_string())
    }
}

impl std::fmt::Display for PointId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PointId::Named(s) => f.write_str(s),
            PointId::Nat(n) => write!(f, "n:{n}"),
        }
    }
}

impl std::str::FromStr for PointId {
    type Err = std::convert::Infallible;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(rest) = s.strip_prefix("n:") {
            if let Ok(n) = rest.parse::<u64>() {
                return Ok(PointId::Nat(n));
            }
        }
        Ok(PointId::Named(s.to_string()))
    }
}

impl Serialize for PointId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for PointId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(|_| D::Error::custom("bad point id"))
    }
}

/// Finite or cofinite mode of an admissible set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Finite,
    Cofinite,
}

/// A finite-or-cofinite admissible subset of a frame family's carrier.
///
/// `support` is the set itself in `Finite` mode and the complement in
/// `Cofinite` mode; in both modes the support excludes the family's limit
/// point, so finite sets avoid it and cofinite sets contain it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AdmSet {
    pub mode: Mode,
    pub support: BTreeSet<PointId>,
}

impl AdmSet {
    pub fn finite(support: BTreeSet<PointId>) -> Self {
        AdmSet {
            mode: Mode::Finite,
            support,
        }
    }
    pub fn cofinite(support: BTreeSet<PointId>) -> Self {
        AdmSet {
            mode: Mode::Cofinite,
            support,
        }
    }
    pub fn finite_of(points: impl IntoIterator<Item = PointId>) -> Self {
        Self::finite(points.into_iter().collect())
    }
    pub fn cofinite_of(points: impl IntoIterator<Item = PointId>) -> Self {
        Self::cofinite(points.into_iter().collect())
    }
    pub fn bot() -> Self {
        Self::finite(BTreeSet::new())
    }
    pub fn top() -> Self {
        Self::cofinite(BTreeSet::new())
    }
    pub fn singleton(p: PointId) -> Self {
        Self::finite_of([p])
    }

    pub fn is_empty(&self) -> bool {
        self.mode == Mode::Finite && self.support.is_empty()
    }
    pub fn is_top(&self) -> bool {
        self.mode == Mode::Cofinite && self.support.is_empty()
    }

    pub fn contains(&self, p: &PointId) -> bool {
        match self.mode {
            Mode::Finite => self.support.contains(p),
            Mode::Cofinite => !self.support.contains(p),
        }
    }

    /// Largest natural index mentioned in the support.
    pub fn max_nat(&self) -> Option<u64> {
        self.support
            .iter()
            .filter_map(|p| match p {
                PointId::Nat(n) => Some(*n),
                _ => None,
            })
            .max()
    }
}

impl std::fmt::Display for AdmSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let body = self
            .support
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        match self.mode {
            Mode::Finite => write!(f, "{{{body}}}"),
            Mode::Cofinite => write!(f, "co{{{body}}}"),
        }
    }
}

/// A map from variable indices to admissible sets; unmapped variables
/// denote the empty set.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Valuation(pub BTreeMap<u32, AdmSet>);

impl Valuation {
    pub fn new() -> Self {
        Self::default()
    }
    pub fn single(var: u32, set: AdmSet) -> Self {
        let mut m = BTreeMap::new();
        m.insert(var, set);
        Self(m)
    }
    pub fn insert(&mut self, var: u32, set: AdmSet) {
        self.0.insert(var, set);
    }
    pub fn get(&self, var: u32) -> AdmSet {
        self.0.get(&var).cloned().unwrap_or_else(AdmSet::bot)
    }
}

/// Errors from the fin/cofin semantics.
#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum CofinError {
    #[error("modality index {0} has no rule table entry in this family")]
    UnknownModality(String),
    #[error("formula is not evaluable over a frame family: {0}")]
    Unsupported(&'static str),
    #[error("set is not admissible in this family: {0}")]
    NotAdmissible(String),
    #[error("bad family parameter: {0}")]
    BadFamilyParam(String),
    #[error("descriptor references a different frame family")]
    FamilyMismatch,
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// Compositional evaluation of a formula to an admissible set.
///
/// Boxes go through `~<i>~`; the universal modality takes the whole carrier
/// when its argument does and the empty set otherwise. Nominals and
/// converse boxes have no interpretation here.
pub fn eval(family: &FrameFamily, val: &Valuation, f: &Formula) -> Result<AdmSet, CofinError> {
    match f {
        Formula::Var(n) => Ok(val.get(*n)),
        Formula::Nominal(_) => Err(CofinError::Unsupported("nominal")),
        Formula::Bot => Ok(AdmSet::bot()),
        Formula::Top => Ok(AdmSet::top()),
        Formula::Neg(a) => Ok(family.adm_neg(&eval(family, val, a)?)),
        Formula::And(a, b) => Ok(family.adm_meet(&eval(family, val, a)?, &eval(family, val, b)?)),
        Formula::Or(a, b) => Ok(family.adm_join(&eval(family, val, a)?, &eval(family, val, b)?)),
        Formula::Imp(a, b) => {
            let na = family.adm_neg(&eval(family, val, a)?);
            Ok(family.adm_join(&na, &eval(family, val, b)?))
        }
        Formula::Iff(a, b) => {
            let va = eval(family, val, a)?;
            let vb = eval(family, val, b)?;
            let fwd = family.adm_join(&family.adm_neg(&va), &vb);
            let bwd = family.adm_join(&family.adm_neg(&vb), &va);
            Ok(family.adm_meet(&fwd, &bwd))
        }
        Formula::Box_(i, a) => {
            let inner = eval(family, val, a)?;
            family.adm_box(*i, &inner)
        }
        Formula::ConvBox(..) => Err(CofinError::Unsupported("converse box")),
        Formula::UBox(a) => {
            let inner = eval(family, val, a)?;
            Ok(if inner.is_top() {
                AdmSet::top()
            } else {
                AdmSet::bot()
            })
        }
    }
}
