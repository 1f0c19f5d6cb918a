//! Finite Kripke models, finite general frames and finite modal algebras,
//! with brute-force model checking, validity and complete-additivity
//! checks. Everything here is small and exhaustive by design; it doubles
//! as the independent oracle layer for the exact infinite-frame machinery.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::formula::{Formula, EMOD};

/// Cap on variables for general-frame validity; the assignment enumeration
/// is exponential in variables times admissibles.
pub const VALIDITY_VAR_CAP: usize = 3;

/// Cap on atoms of a finite modal algebra (carrier at most 16 elements).
pub const MA_ATOM_CAP: u32 = 4;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum FiniteError {
    #[error("unknown world id {0:?}")]
    UnknownWorld(String),
    #[error("relation mentions unknown world id {0:?}")]
    RelationWorld(String),
    #[error("valuation of p{0} mentions unknown world id {1:?}")]
    ValuationWorld(u32, String),
    #[error("admissible family member mentions unknown world id {0:?}")]
    AdmissibleWorld(String),
    #[error("admissible family is not closed under {op}: witness {witness}")]
    NotClosed { op: &'static str, witness: String },
    #[error("formula has {0} variables, above the configured cap {1}")]
    VarCapExceeded(usize, usize),
    #[error("algebra has {0} atoms, above the configured cap {1}")]
    AtomCapExceeded(u32, u32),
    #[error("formula is not evaluable on a finite model: {0}")]
    Unsupported(&'static str),
    #[error("no relation for modality index {0}")]
    NoRelation(String),
}

/// Set of world indices, kept as a bitmask (worlds are capped well below
/// 64 in all uses).
pub type WorldMask = u64;

/// A refuting assignment of admissible sets to variables, with a world
/// where the formula fails.
pub type Countervaluation = (BTreeMap<u32, WorldMask>, String);

/// A finite Kripke model over opaque string world ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteModel {
    pub worlds: Vec<String>,
    /// Per modality index, the set of ordered pairs; the key "e" stands for
    /// the reserved e-modality.
    pub relations: BTreeMap<String, Vec<(String, String)>>,
    /// Variable index to the set of worlds where it holds.
    pub valuation: BTreeMap<u32, Vec<String>>,
}

/// A finite general frame: worlds, relations, and an explicit admissible
/// family (or the full powerset) closed under union, relative complement
/// and preimage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGeneralFrame {
    pub worlds: Vec<String>,
    pub relations: BTreeMap<String, Vec<(String, String)>>,
    pub admissibles: AdmissibleFamily,
}

/// Explicit admissible sets, or the full powerset (trivially closed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AdmissibleFamily {
    Explicit(Vec<WorldMask>),
    Powerset,
}

pub fn modality_key(i: u32) -> String {
    if i == EMOD {
        "e".to_string()
    } else {
        i.to_string()
    }
}

/// Compiled form of a model or frame: worlds as indices, relations as
/// per-world successor masks.
#[derive(Debug, Clone)]
pub struct Compiled {
    pub worlds: Vec<String>,
    pub index: BTreeMap<String, usize>,
    /// modality key -> successor mask per world
    pub succ: BTreeMap<String, Vec<WorldMask>>,
    /// modality key -> predecessor mask per world (for converse boxes)
    pub pred: BTreeMap<String, Vec<WorldMask>>,
}

fn compile(
    worlds: &[String],
    relations: &BTreeMap<String, Vec<(String, String)>>,
) -> Result<Compiled, FiniteError> {
    let index: BTreeMap<String, usize> = worlds
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i))
        .collect();
    let mut succ = BTreeMap::new();
    let mut pred = BTreeMap::new();
    for (key, pairs) in relations {
        let mut s = vec![0u64; worlds.len()];
        let mut p = vec![0u64; worlds.len()];
        for (a, b) in pairs {
            let ia = *index
                .get(a)
                .ok_or_else(|| FiniteError::RelationWorld(a.clone()))?;
            let ib = *index
                .get(b)
                .ok_or_else(|| FiniteError::RelationWorld(b.clone()))?;
            s[ia] |= 1 << ib;
            p[ib] |= 1 << ia;
        }
        succ.insert(key.clone(), s);
        pred.insert(key.clone(), p);
    }
    Ok(Compiled {
        worlds: worlds.to_vec(),
        index,
        succ,
        pred,
    })
}

impl Compiled {
    pub fn full_mask(&self) -> WorldMask {
        if self.worlds.len() >= 64 {
            u64::MAX
        } else {
            (1u64 << self.worlds.len()) - 1
        }
    }

    /// Truth set of a formula under a valuation given as masks.
    pub fn truth_set(
        &self,
        valuation: &BTreeMap<u32, WorldMask>,
        f: &Formula,
    ) -> Result<WorldMask, FiniteError> {
        let full = self.full_mask();
        Ok(match f {
            Formula::Var(n) => valuation.get(n).copied().unwrap_or(0),
            Formula::Nominal(_) => return Err(FiniteError::Unsupported("nominal")),
            Formula::Bot => 0,
            Formula::Top => full,
            Formula::Neg(a) => full & !self.truth_set(valuation, a)?,
            Formula::And(a, b) => self.truth_set(valuation, a)? & self.truth_set(valuation, b)?,
            Formula::Or(a, b) => self.truth_set(valuation, a)? | self.truth_set(valuation, b)?,
            Formula::Imp(a, b) => {
                (full & !self.truth_set(valuation, a)?) | self.truth_set(valuation, b)?
            }
            Formula::Iff(a, b) => {
                let x = self.truth_set(valuation, a)?;
                let y = self.truth_set(valuation, b)?;
                full & !(x ^ y)
            }
            Formula::Box_(i, a) => {
                let inner = self.truth_set(valuation, a)?;
                let succ = self
                    .succ
                    .get(&modality_key(*i))
                    .ok_or_else(|| FiniteError::NoRelation(modality_key(*i)))?;
                let mut out = 0u64;
                for (w, s) in succ.iter().enumerate() {
                    if s & !inner == 0 {
                        out |= 1 << w;
                    }
                }
                out
            }
            Formula::ConvBox(i, a) => {
                let inner = self.truth_set(valuation, a)?;
                let pred = self
                    .pred
                    .get(&modality_key(*i))
                    .ok_or_else(|| FiniteError::NoRelation(modality_key(*i)))?;
                let mut out = 0u64;
                for (w, s) in pred.iter().enumerate() {
                    if s & !inner == 0 {
                        out |= 1 << w;
                    }
                }
                out
            }
            Formula::UBox(a) => {
                if self.truth_set(valuation, a)? == full {
                    full
                } else {
                    0
                }
            }
        })
    }
}

impl FiniteModel {
    pub fn compile(&self) -> Result<(Compiled, BTreeMap<u32, WorldMask>), FiniteError> {
        let compiled = compile(&self.worlds, &self.relations)?;
        let mut val = BTreeMap::new();
        for (v, ws) in &self.valuation {
            let mut mask = 0u64;
            for w in ws {
                let i = *compiled
                    .index
                    .get(w)
                    .ok_or_else(|| FiniteError::ValuationWorld(*v, w.clone()))?;
                mask |= 1 << i;
            }
            val.insert(*v, mask);
        }
        Ok((compiled, val))
    }
}

/// Truth of a formula at a world of a finite model. The universal modality
/// means truth at all worlds; converse boxes use the converse relation.
pub fn mc(model: &FiniteModel, world: &str, f: &Formula) -> Result<bool, FiniteError> {
    let (compiled, val) = model.compile()?;
    let w = *compiled
        .index
        .get(world)
        .ok_or_else(|| FiniteError::UnknownWorld(world.to_string()))?;
    let t = compiled.truth_set(&val, f)?;
    Ok(t & (1 << w) != 0)
}

impl FiniteGeneralFrame {
    /// Builds the frame, verifying that the explicit admissible family is
    /// closed under union, relative complement and preimage under every
    /// relation.
    pub fn new(
        worlds: Vec<String>,
        relations: BTreeMap<String, Vec<(String, String)>>,
        admissibles: AdmissibleFamily,
    ) -> Result<Self, FiniteError> {
        let compiled = compile(&worlds, &relations)?;
        if let AdmissibleFamily::Explicit(sets) = &admissibles {
            let family: BTreeSet<WorldMask> = sets.iter().copied().collect();
            let full = compiled.full_mask();
            for s in sets {
                if s & !full != 0 {
                    return Err(FiniteError::AdmissibleWorld(format!("{s:#b}")));
                }
                if !family.contains(&(full & !s)) {
                    return Err(FiniteError::NotClosed {
                        op: "relative complement",
                        witness: mask_to_string(&compiled, *s),
                    });
                }
                for t in sets {
                    if !family.contains(&(s | t)) {
                        return Err(FiniteError::NotClosed {
                            op: "union",
                            witness: mask_to_string(&compiled, s | t),
                        });
                    }
                }
                for succ in compiled.succ.values() {
                    let mut pre = 0u64;
                    for (w, sm) in succ.iter().enumerate() {
                        if sm & s != 0 {
                            pre |= 1 << w;
                        }
                    }
                    if !family.contains(&pre) {
                        return Err(FiniteError::NotClosed {
                            op: "preimage",
                            witness: mask_to_string(&compiled, pre),
                        });
                    }
                }
            }
        }
        Ok(FiniteGeneralFrame {
            worlds,
            relations,
            admissibles,
        })
    }

    pub fn compile(&self) -> Result<Compiled, FiniteError> {
        compile(&self.worlds, &self.relations)
    }

    fn admissible_masks(&self, compiled: &Compiled) -> Vec<WorldMask> {
        match &self.admissibles {
            AdmissibleFamily::Explicit(sets) => sets.clone(),
            AdmissibleFamily::Powerset => (0..=compiled.full_mask()).collect(),
        }
    }

    /// Validity over the general frame: global truth under every assignment
    /// of admissible sets to the formula's variables.
    pub fn valid(&self, f: &Formula) -> Result<bool, FiniteError> {
        Ok(self.countervaluation(f)?.is_none())
    }

    /// The first assignment (in canonical order) refuting the formula
    /// somewhere, if any.
    pub fn countervaluation(&self, f: &Formula) -> Result<Option<Countervaluation>, FiniteError> {
        let compiled = self.compile()?;
        let vars: Vec<u32> = f.vars().into_iter().collect();
        if vars.len() > VALIDITY_VAR_CAP {
            return Err(FiniteError::VarCapExceeded(vars.len(), VALIDITY_VAR_CAP));
        }
        let adm = self.admissible_masks(&compiled);
        let full = compiled.full_mask();
        let mut choice = vec![0usize; vars.len()];
        loop {
            let mut valuation = BTreeMap::new();
            for (k, v) in vars.iter().enumerate() {
                valuation.insert(*v, adm[choice[k]]);
            }
            let t = compiled.truth_set(&valuation, f)?;
            if t != full {
                let w = (0..compiled.worlds.len())
                    .find(|w| t & (1 << w) == 0)
                    .expect("some world refutes");
                return Ok(Some((valuation, compiled.worlds[w].clone())));
            }
            // next assignment in canonical order
            let mut k = 0;
            loop {
                if k == vars.len() {
                    return Ok(None);
                }
                choice[k] += 1;
                if choice[k] < adm.len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if vars.is_empty() {
                return Ok(None);
            }
        }
    }
}

// JSON document shape shared by models and general frames:
// {"worlds": [...], "relations": {"0": [["a","b"], ...]},
//  "admissibles": [["a"], ...], "valuation": {"0": ["a", ...]}}
// A missing "admissibles" field denotes the full powerset.
#[derive(Serialize, Deserialize)]
struct FrameDoc {
    worlds: Vec<String>,
    relations: BTreeMap<String, Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    admissibles: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    valuation: BTreeMap<u32, Vec<String>>,
}

impl Serialize for FiniteGeneralFrame {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let admissibles = match &self.admissibles {
            AdmissibleFamily::Powerset => None,
            AdmissibleFamily::Explicit(sets) => Some(
                sets.iter()
                    .map(|mask| {
                        self.worlds
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| mask & (1 << i) != 0)
                            .map(|(_, w)| w.clone())
                            .collect()
                    })
                    .collect(),
            ),
        };
        FrameDoc {
            worlds: self.worlds.clone(),
            relations: self.relations.clone(),
            admissibles,
            valuation: BTreeMap::new(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiniteGeneralFrame {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let doc = FrameDoc::deserialize(d)?;
        let admissibles = match doc.admissibles {
            None => AdmissibleFamily::Powerset,
            Some(sets) => {
                let index: BTreeMap<&String, usize> =
                    doc.worlds.iter().enumerate().map(|(i, w)| (w, i)).collect();
                let mut masks = Vec::with_capacity(sets.len());
                for set in sets {
                    let mut mask = 0u64;
                    for w in &set {
                        let i = index
                            .get(w)
                            .ok_or_else(|| D::Error::custom(format!("unknown world {w:?}")))?;
                        mask |= 1 << i;
                    }
                    masks.push(mask);
                }
                AdmissibleFamily::Explicit(masks)
            }
        };
        FiniteGeneralFrame::new(doc.worlds, doc.relations, admissibles).map_err(D::Error::custom)
    }
}

fn mask_to_string(compiled: &Compiled, mask: WorldMask) -> String {
    let names: Vec<&str> = compiled
        .worlds
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, w)| w.as_str())
        .collect();
    format!("{{{}}}", names.join(", "))
}

// ---------------------------------------------------------------------------
// Finite modal algebras.
// ---------------------------------------------------------------------------

/// A finite modal algebra presented by its atoms: the carrier is the
/// powerset of `atoms`, and each operator is given by its action on atoms
/// and extended by unions, so it is an operator by construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteMA {
    pub atoms: u32,
    /// Per modality, the image mask of each atom.
    pub operators: Vec<Vec<u16>>,
}

impl FiniteMA {
    pub fn new(atoms: u32, operators: Vec<Vec<u16>>) -> Result<Self, FiniteError> {
        if atoms > MA_ATOM_CAP {
            return Err(FiniteError::AtomCapExceeded(atoms, MA_ATOM_CAP));
        }
        Ok(FiniteMA { atoms, operators })
    }

    pub fn carrier(&self) -> impl Iterator<Item = u16> {
        0..(1u16 << self.atoms)
    }

    pub fn top(&self) -> u16 {
        ((1u32 << self.atoms) - 1) as u16
    }

    /// The operator of the given modality applied to an element.
    pub fn dia(&self, modality: usize, x: u16) -> u16 {
        let images = &self.operators[modality];
        let mut out = 0u16;
        for a in 0..self.atoms {
            if x & (1 << a) != 0 {
                out |= images[a as usize];
            }
        }
        out
    }
}

/// Literal three-quantifier evaluation of the first-order condition
/// equivalent to complete additivity: for all `a`, `b` with
/// `a ∧ <>b ≠ ⊥` there is a nonzero `c ≤ b` all of whose nonzero
/// `d ≤ c` satisfy `a ∧ <>d ≠ ⊥`.
pub fn check_r_finite_ma(alg: &FiniteMA, modality: usize) -> bool {
    for a in alg.carrier() {
        for b in alg.carrier() {
            if a & alg.dia(modality, b) == 0 {
                continue;
            }
            let mut witness = false;
            'c: for c in alg.carrier() {
                if c == 0 || c & !b != 0 {
                    continue;
                }
                for d in alg.carrier() {
                    if d == 0 || d & !c != 0 {
                        continue;
                    }
                    if a & alg.dia(modality, d) == 0 {
                        continue 'c;
                    }
                }
                witness = true;
                break;
            }
            if !witness {
                return false;
            }
        }
    }
    true
}

/// Complete additivity checked literally: for every subset `X` of the
/// carrier, `<>(⋁X) = ⋁{<>x : x ∈ X}` (all joins exist; the empty join is
/// `⊥`).
pub fn check_v_finite_ma(alg: &FiniteMA, modality: usize) -> bool {
    let carrier: Vec<u16> = alg.carrier().collect();
    let n = carrier.len();
    for selection in 0u32..(1u32 << n) {
        let mut join = 0u16;
        let mut dia_join = 0u16;
        for (i, x) in carrier.iter().enumerate() {
            if selection & (1 << i) != 0 {
                join |= x;
                dia_join |= alg.dia(modality, *x);
            }
        }
        if alg.dia(modality, join) != dia_join {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_chain() -> FiniteModel {
        FiniteModel {
            worlds: vec!["a".into(), "b".into()],
            relations: [("0".to_string(), vec![("a".to_string(), "b".to_string())])]
                .into_iter()
                .collect(),
            valuation: BTreeMap::new(),
        }
    }

    #[test]
    fn mc_basics() {
        let m = two_chain();
        assert!(mc(&m, "a", &Formula::Top).unwrap());
        let boxbot = Formula::bx(0, Formula::Bot);
        assert!(!mc(&m, "a", &boxbot).unwrap());
        assert!(mc(&m, "b", &boxbot).unwrap());
        assert!(mc(&m, "zzz", &Formula::Top).is_err());
    }

    #[test]
    fn single_point_frames() {
        // reflexive point validates []p -> p
        let refl = FiniteGeneralFrame::new(
            vec!["w".into()],
            [("0".to_string(), vec![("w".to_string(), "w".to_string())])]
                .into_iter()
                .collect(),
            AdmissibleFamily::Explicit(vec![0b0, 0b1]),
        )
        .unwrap();
        let f = Formula::imp(Formula::bx(0, Formula::var(0)), Formula::var(0));
        assert!(refl.valid(&f).unwrap());

        // irreflexive point validates []bot
        let irr = FiniteGeneralFrame::new(
            vec!["w".into()],
            [("0".to_string(), vec![])].into_iter().collect(),
            AdmissibleFamily::Powerset,
        )
        .unwrap();
        assert!(irr.valid(&Formula::bx(0, Formula::Bot)).unwrap());
    }

    #[test]
    fn closure_is_enforced() {
        // family missing the complement of {a}
        let r = FiniteGeneralFrame::new(
            vec!["a".into(), "b".into()],
            [("0".to_string(), vec![])].into_iter().collect(),
            AdmissibleFamily::Explicit(vec![0b00, 0b01, 0b11]),
        );
        assert!(matches!(
            r,
            Err(FiniteError::NotClosed {
                op: "relative complement",
                ..
            })
        ));
    }

    #[test]
    fn var_cap() {
        let frame = FiniteGeneralFrame::new(
            vec!["w".into()],
            [("0".to_string(), vec![])].into_iter().collect(),
            AdmissibleFamily::Powerset,
        )
        .unwrap();
        let f = Formula::and(
            Formula::and(Formula::var(0), Formula::var(1)),
            Formula::and(Formula::var(2), Formula::var(3)),
        );
        assert!(matches!(
            frame.valid(&f),
            Err(FiniteError::VarCapExceeded(4, _))
        ));
    }

    #[test]
    fn finite_ma_checks() {
        // 1 atom, diamond = identity on the atom
        let a = FiniteMA::new(1, vec![vec![0b1]]).unwrap();
        assert!(check_r_finite_ma(&a, 0));
        assert!(check_v_finite_ma(&a, 0));

        // 2 atoms, both atoms mapped to top
        let b = FiniteMA::new(2, vec![vec![0b11, 0b11]]).unwrap();
        assert!(check_r_finite_ma(&b, 0));
        assert!(check_v_finite_ma(&b, 0));

        assert!(FiniteMA::new(5, vec![vec![0; 5]]).is_err());
    }
}
