//! The shipped frame families and their relation rule tables.

use std::collections::BTreeSet;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{AdmSet, CofinError, Mode, PointId};
use crate::formula::EMOD;

/// A finitely presented infinite general frame over `head ∪ ℕ`.
///
/// Relation rules quantify over naturals with order comparisons only, so
/// for naturals beyond `rule_constant_bound` the relation rows and columns
/// toward the head are uniform. That eventual uniformity is what licenses
/// the threshold analysis in the algebra operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrameFamily {
    /// `W = ℕ ∪ {inf, inf+1}`; `inf+1 → inf`, `inf → inf`, `inf → n`,
    /// `m → n` iff `m > n`. The limit point `inf` is kept reflexive.
    Vb,
    /// `Vb` extended with an `e`-modality whose relation is universal.
    Vbe,
    /// The doubled-layer family over `{b, c} ∪ ⋃ ā_k`: `Nat(k)` is `a_k`
    /// and `a<k>'` the primed copy for `k` in `doubled`. Relations:
    /// `c → b`; `b → ā_k` for `k ≥ 1`; `ā_k → ā_l` for `k > l ≥ 1`;
    /// `a_1 → a_0` and `a_1 → c`. Admissible sets avoid/contain `b`.
    /// Only `a_1` sees layer 0; anything more would push the preimage of
    /// `{a_0}` outside the fin/cofin algebra.
    VbI { doubled: BTreeSet<u64> },
}

/// The `Vb` family.
pub fn vb() -> FrameFamily {
    FrameFamily::Vb
}

/// The `Vbe` family: `Vb` plus the universal `e`-relation.
pub fn vbe() -> FrameFamily {
    FrameFamily::Vbe
}

/// The doubled-layer family for a finite `I ⊆ {2, 3, ...}`.
pub fn vb_i(doubled: impl IntoIterator<Item = u64>) -> Result<FrameFamily, CofinError> {
    let doubled: BTreeSet<u64> = doubled.into_iter().collect();
    if let Some(bad) = doubled.iter().find(|k| **k < 2) {
        return Err(CofinError::BadFamilyParam(format!(
            "doubled layer index {bad} must be at least 2"
        )));
    }
    Ok(FrameFamily::VbI { doubled })
}

fn prime_tag(k: u64) -> String {
    format!("a{k}'")
}

fn parse_prime(tag: &str) -> Option<u64> {
    tag.strip_prefix('a')?.strip_suffix('\'')?.parse().ok()
}

impl FrameFamily {
    pub fn name(&self) -> &'static str {
        match self {
            FrameFamily::Vb => "vb",
            FrameFamily::Vbe => "vbe",
            FrameFamily::VbI { .. } => "vbi",
        }
    }

    /// Modality indices with a rule table entry.
    pub fn modalities(&self) -> Vec<u32> {
        match self {
            FrameFamily::Vb | FrameFamily::VbI { .. } => vec![0],
            FrameFamily::Vbe => vec![0, EMOD],
        }
    }

    /// The named points of the finite head.
    pub fn head_points(&self) -> Vec<PointId> {
        match self {
            FrameFamily::Vb | FrameFamily::Vbe => {
                vec![PointId::named("inf"), PointId::named("inf+1")]
            }
            FrameFamily::VbI { doubled } => {
                let mut out = vec![PointId::named("b"), PointId::named("c")];
                out.extend(doubled.iter().map(|k| PointId::Named(prime_tag(*k))));
                out
            }
        }
    }

    /// The unique named point contained in every cofinite admissible set.
    pub fn limit_point(&self) -> PointId {
        match self {
            FrameFamily::Vb | FrameFamily::Vbe => PointId::named("inf"),
            FrameFamily::VbI { .. } => PointId::named("b"),
        }
    }

    /// Bound on the natural constants mentioned by the relation rules;
    /// rows and columns of `Nat(m)` are uniform for `m` beyond it.
    pub fn rule_constant_bound(&self) -> u64 {
        match self {
            FrameFamily::Vb | FrameFamily::Vbe => 2,
            FrameFamily::VbI { doubled } => doubled.iter().max().copied().unwrap_or(0) + 2,
        }
    }

    /// Layer index of a point of the `VbI` carrier (`a_k` and `a_k'` share
    /// layer `k`); `None` for `b` and `c`.
    fn layer(&self, p: &PointId) -> Option<u64> {
        match p {
            PointId::Nat(k) => Some(*k),
            PointId::Named(tag) => parse_prime(tag),
        }
    }

    fn is_carrier_point(&self, p: &PointId) -> bool {
        match self {
            FrameFamily::Vb | FrameFamily::Vbe => match p {
                PointId::Nat(_) => true,
                PointId::Named(tag) => tag == "inf" || tag == "inf+1",
            },
            FrameFamily::VbI { doubled } => match p {
                PointId::Nat(_) => true,
                PointId::Named(tag) => {
                    tag == "b"
                        || tag == "c"
                        || parse_prime(tag).is_some_and(|k| doubled.contains(&k))
                }
            },
        }
    }

    /// The total, decidable relation rule table.
    pub fn related(&self, modality: u32, x: &PointId, y: &PointId) -> Result<bool, CofinError> {
        match self {
            FrameFamily::Vb | FrameFamily::Vbe => {
                if modality == EMOD {
                    return if matches!(self, FrameFamily::Vbe) {
                        Ok(true)
                    } else {
                        Err(CofinError::UnknownModality("e".into()))
                    };
                }
                if modality != 0 {
                    return Err(CofinError::UnknownModality(modality.to_string()));
                }
                let inf = PointId::named("inf");
                Ok(match (x, y) {
                    (PointId::Named(a), b) if a == "inf+1" => *b == inf,
                    (PointId::Named(a), PointId::Named(b)) if a == "inf" => b == "inf",
                    (PointId::Named(a), PointId::Nat(_)) if a == "inf" => true,
                    (PointId::Nat(m), PointId::Nat(n)) => m > n,
                    _ => false,
                })
            }
            FrameFamily::VbI { .. } => {
                if modality != 0 {
                    let name = if modality == EMOD {
                        "e".to_string()
                    } else {
                        modality.to_string()
                    };
                    return Err(CofinError::UnknownModality(name));
                }
                let (b, c) = (PointId::named("b"), PointId::named("c"));
                if *x == c {
                    return Ok(*y == b);
                }
                if *x == b {
                    return Ok(self.layer(y).is_some_and(|l| l >= 1));
                }
                match (self.layer(x), self.layer(y)) {
                    (Some(k), Some(l)) if k > l && l >= 1 => Ok(true),
                    _ => Ok(*x == PointId::Nat(1) && (*y == PointId::Nat(0) || *y == c)),
                }
            }
        }
    }

    /// Checks the admissibility invariants of a set against this family.
    pub fn validate_adm(&self, set: &AdmSet) -> Result<(), CofinError> {
        let limit = self.limit_point();
        for p in &set.support {
            if *p == limit {
                return Err(CofinError::NotAdmissible(format!(
                    "support mentions the limit point {limit}"
                )));
            }
            if !self.is_carrier_point(p) {
                return Err(CofinError::NotAdmissible(format!(
                    "{p} is not a point of the {} carrier",
                    self.name()
                )));
            }
        }
        Ok(())
    }

    /// All named points plus the naturals up to `bound`, the finite region
    /// a threshold argument reduces to.
    pub fn pool(&self, bound: u64) -> Vec<PointId> {
        let mut out = self.head_points();
        out.extend((0..=bound).map(PointId::Nat));
        out
    }

    /// Threshold index for operations whose inputs have the given supports:
    /// max mentioned natural + max rule constant + 1.
    pub fn threshold<'a>(&self, inputs: impl IntoIterator<Item = &'a AdmSet>) -> u64 {
        let max_nat = inputs
            .into_iter()
            .filter_map(|s| s.max_nat())
            .max()
            .unwrap_or(0);
        max_nat + self.rule_constant_bound() + 1
    }

    /// Whether some successor of `w` lies in `x`, decided by checking the
    /// head, the naturals below the combined threshold, and a single
    /// representative beyond it.
    pub fn exists_successor_in(
        &self,
        modality: u32,
        w: &PointId,
        x: &AdmSet,
    ) -> Result<bool, CofinError> {
        for h in self.head_points() {
            if x.contains(&h) && self.related(modality, w, &h)? {
                return Ok(true);
            }
        }
        let w_nat = match w {
            PointId::Nat(n) => *n,
            _ => 0,
        };
        let bound = self.threshold([x]).max(w_nat) + 1;
        for n in 0..=bound {
            let p = PointId::Nat(n);
            if x.contains(&p) && self.related(modality, w, &p)? {
                return Ok(true);
            }
        }
        // representative for "sees arbitrarily large naturals"
        let rep = PointId::Nat(bound + 1);
        Ok(x.contains(&rep) && self.related(modality, w, &rep)?)
    }
}

// ---------------------------------------------------------------------------
// Boolean algebra structure on admissible sets. Negation, join and meet are
// family independent; only the operator needs the rule table.
// ---------------------------------------------------------------------------

impl FrameFamily {
    pub fn adm_neg(&self, x: &AdmSet) -> AdmSet {
        AdmSet {
            mode: match x.mode {
                Mode::Finite => Mode::Cofinite,
                Mode::Cofinite => Mode::Finite,
            },
            support: x.support.clone(),
        }
    }

    pub fn adm_join(&self, x: &AdmSet, y: &AdmSet) -> AdmSet {
        match (x.mode, y.mode) {
            (Mode::Finite, Mode::Finite) => {
                AdmSet::finite(x.support.union(&y.support).cloned().collect())
            }
            (Mode::Cofinite, Mode::Cofinite) => {
                AdmSet::cofinite(x.support.intersection(&y.support).cloned().collect())
            }
            (Mode::Finite, Mode::Cofinite) => {
                AdmSet::cofinite(y.support.difference(&x.support).cloned().collect())
            }
            (Mode::Cofinite, Mode::Finite) => {
                AdmSet::cofinite(x.support.difference(&y.support).cloned().collect())
            }
        }
    }

    pub fn adm_meet(&self, x: &AdmSet, y: &AdmSet) -> AdmSet {
        self.adm_neg(&self.adm_join(&self.adm_neg(x), &self.adm_neg(y)))
    }

    pub fn adm_leq(&self, x: &AdmSet, y: &AdmSet) -> bool {
        self.adm_meet(x, &self.adm_neg(y)).is_empty()
    }

    /// Exact `R⁻¹` image under the rule table, assembled from pointwise
    /// membership below the threshold and the constant tail beyond it.
    pub fn adm_dia(&self, modality: u32, x: &AdmSet) -> Result<AdmSet, CofinError> {
        let t = self.threshold([x]);
        let limit = self.limit_point();

        let mut members: BTreeSet<PointId> = BTreeSet::new();
        for h in self.head_points() {
            if self.exists_successor_in(modality, &h, x)? {
                members.insert(h);
            }
        }
        for n in 0..=t {
            let p = PointId::Nat(n);
            if self.exists_successor_in(modality, &p, x)? {
                members.insert(p);
            }
        }
        let tail = self.exists_successor_in(modality, &PointId::Nat(t + 1), x)?;
        let limit_in = members.contains(&limit);
        if tail {
            if !limit_in {
                return Err(CofinError::Internal(
                    "diamond image is infinite but misses the limit point".into(),
                ));
            }
            let mut support: BTreeSet<PointId> = BTreeSet::new();
            for h in self.head_points() {
                if !members.contains(&h) {
                    support.insert(h);
                }
            }
            for n in 0..=t {
                let p = PointId::Nat(n);
                if !members.contains(&p) {
                    support.insert(p);
                }
            }
            Ok(AdmSet::cofinite(support))
        } else {
            if limit_in {
                return Err(CofinError::Internal(
                    "diamond image contains the limit point but has a finite tail".into(),
                ));
            }
            Ok(AdmSet::finite(members))
        }
    }

    /// Dual operator, `[i]x = ~<i>~x`.
    pub fn adm_box(&self, modality: u32, x: &AdmSet) -> Result<AdmSet, CofinError> {
        Ok(self.adm_neg(&self.adm_dia(modality, &self.adm_neg(x))?))
    }
}

// ---------------------------------------------------------------------------
// Serialization: family selected by name + parameters.
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct FamilyDoc {
    family: String,
    #[serde(rename = "I", default, skip_serializing_if = "Option::is_none")]
    doubled: Option<Vec<u64>>,
}

impl Serialize for FrameFamily {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let doc = FamilyDoc {
            family: self.name().to_string(),
            doubled: match self {
                FrameFamily::VbI { doubled } => Some(doubled.iter().copied().collect()),
                _ => None,
            },
        };
        doc.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FrameFamily {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let doc = FamilyDoc::deserialize(d)?;
        match doc.family.as_str() {
            "vb" => Ok(FrameFamily::Vb),
            "vbe" => Ok(FrameFamily::Vbe),
            "vbi" => vb_i(doc.doubled.unwrap_or_default()).map_err(D::Error::custom),
            other => Err(D::Error::custom(format!("unknown family {other}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(n: u64) -> PointId {
        PointId::Nat(n)
    }

    #[test]
    fn vbe_relation_rules() {
        let f = vbe();
        let inf = PointId::named("inf");
        let inf1 = PointId::named("inf+1");
        assert!(f.related(0, &inf1, &inf).unwrap());
        assert!(f.related(0, &inf, &inf).unwrap());
        assert!(f.related(0, &inf, &nat(17)).unwrap());
        assert!(f.related(0, &nat(3), &nat(2)).unwrap());
        assert!(!f.related(0, &nat(2), &nat(3)).unwrap());
        assert!(!f.related(0, &nat(2), &nat(2)).unwrap());
        assert!(!f.related(0, &nat(2), &inf).unwrap());
        assert!(!f.related(0, &inf1, &nat(0)).unwrap());
        assert!(f.related(EMOD, &nat(0), &inf1).unwrap());
        assert!(vb().related(EMOD, &nat(0), &inf1).is_err());
    }

    #[test]
    fn vbi_relation_rules() {
        let f = vb_i([2]).unwrap();
        let b = PointId::named("b");
        let c = PointId::named("c");
        let a2p = PointId::named("a2'");
        assert!(f.related(0, &c, &b).unwrap());
        assert!(!f.related(0, &b, &c).unwrap());
        assert!(!f.related(0, &b, &b).unwrap());
        // only a_1 sees layer 0
        assert!(!f.related(0, &b, &nat(0)).unwrap());
        assert!(f.related(0, &b, &nat(1)).unwrap());
        assert!(f.related(0, &b, &a2p).unwrap());
        assert!(f.related(0, &nat(1), &nat(0)).unwrap());
        assert!(f.related(0, &nat(1), &c).unwrap());
        assert!(!f.related(0, &nat(1), &b).unwrap());
        // a_2 sees a_1 but not a_0
        assert!(f.related(0, &nat(2), &nat(1)).unwrap());
        assert!(!f.related(0, &nat(2), &nat(0)).unwrap());
        assert!(f.related(0, &a2p, &nat(1)).unwrap());
        assert!(f.related(0, &nat(3), &a2p).unwrap());
        assert!(f.related(0, &nat(3), &nat(1)).unwrap());
        assert!(!f.related(0, &a2p, &nat(2)).unwrap());
        assert!(vb_i([0]).is_err());
        assert!(vb_i([1]).is_err());
    }

    #[test]
    fn join_meet_examples() {
        let f = vb();
        assert_eq!(f.adm_neg(&AdmSet::bot()), AdmSet::top());
        let a = AdmSet::finite_of([nat(1)]);
        let b = AdmSet::cofinite_of([nat(1), nat(2)]);
        assert_eq!(f.adm_join(&a, &b), AdmSet::cofinite_of([nat(2)]));
        assert!(f.adm_leq(
            &AdmSet::finite_of([PointId::named("inf+1")]),
            &AdmSet::top()
        ));
        assert!(!f.adm_leq(&AdmSet::top(), &AdmSet::bot()));
    }

    #[test]
    fn dia_examples() {
        let f = vb();
        // <>{3} = {m > 3} ∪ {inf}
        let d = f.adm_dia(0, &AdmSet::finite_of([nat(3)])).unwrap();
        assert_eq!(
            d,
            AdmSet::cofinite_of([nat(0), nat(1), nat(2), nat(3), PointId::named("inf+1")])
        );
        // <>top = everything except 0
        let d = f.adm_dia(0, &AdmSet::top()).unwrap();
        assert_eq!(d, AdmSet::cofinite_of([nat(0)]));
        // normality
        assert_eq!(f.adm_dia(0, &AdmSet::bot()).unwrap(), AdmSet::bot());
        // nothing sees inf+1
        let d = f
            .adm_dia(0, &AdmSet::finite_of([PointId::named("inf+1")]))
            .unwrap();
        assert_eq!(d, AdmSet::bot());
    }

    #[test]
    fn validate_rejects_limit_in_support() {
        let f = vb();
        let bad = AdmSet::finite_of([PointId::named("inf")]);
        assert!(f.validate_adm(&bad).is_err());
        let bad2 = AdmSet::finite_of([PointId::named("b")]);
        assert!(f.validate_adm(&bad2).is_err());
        assert!(f.validate_adm(&AdmSet::finite_of([nat(7)])).is_ok());
    }

    #[test]
    fn family_json_round_trip() {
        let f = vb_i([2, 5]).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"family":"vbi","I":[2,5]}"#);
        let back: FrameFamily = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        let v: FrameFamily = serde_json::from_str(r#"{"family":"vb"}"#).unwrap();
        assert_eq!(v, vb());
    }
}
