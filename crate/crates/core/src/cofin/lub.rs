//! Least upper bounds of the set families the incompleteness proofs
//! quantify over.
//!
//! The descriptor catalog covers exactly the families used in the proofs;
//! anything else is rejected rather than guessed. For the parametric
//! descriptors the family is downward closed among nonzero admissibles, so
//! the union is decided pointwise by singleton tests, with limit-point
//! membership decided by a bounded search over cofinite templates carved
//! out of the descriptor's bounding set.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{AdmSet, CofinError, FrameFamily, Mode, PointId};

/// Bound on the template complement size in the cofinite search. Complete
/// for the shipped families: the membership predicates are eventually
/// constant, so a cofinite member can always be normalized to one whose
/// complement beyond the bounding set lies inside the threshold pool.
pub const TEMPLATE_BOUND: u32 = 8;

/// A family of admissible sets given by one of the catalogued descriptors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilyDescriptor {
    /// An explicit finite list.
    Explicit { sets: Vec<AdmSet> },
    /// `{d admissible | ⊥ ≠ d ≤ b, a ∧ <i>d = ⊥}`.
    BelowWithEmptyDia { modality: u32, a: AdmSet, b: AdmSet },
    /// `{x admissible | x ≤ y, <i>x ≤ z}`.
    BelowWithBoundedDia { modality: u32, y: AdmSet, z: AdmSet },
    /// All finite admissible subsets of a given set.
    FiniteSubsetsOf { of: AdmSet },
}

impl FamilyDescriptor {
    fn params(&self) -> Vec<&AdmSet> {
        match self {
            FamilyDescriptor::Explicit { sets } => sets.iter().collect(),
            FamilyDescriptor::BelowWithEmptyDia { a, b, .. } => vec![a, b],
            FamilyDescriptor::BelowWithBoundedDia { y, z, .. } => vec![y, z],
            FamilyDescriptor::FiniteSubsetsOf { of } => vec![of],
        }
    }

    /// The set bounding every member from above, when the descriptor has
    /// one.
    fn bounding_set(&self) -> Option<&AdmSet> {
        match self {
            FamilyDescriptor::Explicit { .. } => None,
            FamilyDescriptor::BelowWithEmptyDia { b, .. } => Some(b),
            FamilyDescriptor::BelowWithBoundedDia { y, .. } => Some(y),
            FamilyDescriptor::FiniteSubsetsOf { of } => Some(of),
        }
    }

    /// Membership of a candidate set in the described family.
    pub fn member(&self, f: &FrameFamily, candidate: &AdmSet) -> Result<bool, CofinError> {
        match self {
            FamilyDescriptor::Explicit { sets } => Ok(sets.contains(candidate)),
            FamilyDescriptor::BelowWithEmptyDia { modality, a, b } => {
                if candidate.is_empty() || !f.adm_leq(candidate, b) {
                    return Ok(false);
                }
                let dia = f.adm_dia(*modality, candidate)?;
                Ok(f.adm_meet(a, &dia).is_empty())
            }
            FamilyDescriptor::BelowWithBoundedDia { modality, y, z } => {
                if !f.adm_leq(candidate, y) {
                    return Ok(false);
                }
                let dia = f.adm_dia(*modality, candidate)?;
                Ok(f.adm_leq(&dia, z))
            }
            FamilyDescriptor::FiniteSubsetsOf { of } => {
                Ok(candidate.mode == Mode::Finite && f.adm_leq(candidate, of))
            }
        }
    }
}

/// Returns the least admissible upper bound of the described family, if it
/// exists in the algebra; templates in the cofinite search carve out at
/// most [`TEMPLATE_BOUND`] points.
pub fn lub_of_family(f: &FrameFamily, d: &FamilyDescriptor) -> Result<Option<AdmSet>, CofinError> {
    lub_of_family_with_bound(f, d, TEMPLATE_BOUND)
}

/// As [`lub_of_family`], with an explicit template bound.
pub fn lub_of_family_with_bound(
    f: &FrameFamily,
    d: &FamilyDescriptor,
    template_bound: u32,
) -> Result<Option<AdmSet>, CofinError> {
    for p in d.params() {
        f.validate_adm(p)?;
    }
    if let FamilyDescriptor::Explicit { sets } = d {
        // a finite union of admissible sets is admissible and is the join
        let mut u = AdmSet::bot();
        for s in sets {
            u = f.adm_join(&u, s);
        }
        return Ok(Some(u));
    }

    let limit = f.limit_point();
    let k = f.threshold(d.params()) + 1;
    let pool: Vec<PointId> = f.pool(k).into_iter().filter(|p| *p != limit).collect();

    // pointwise union over non-limit points via singleton members
    let mut members: BTreeSet<PointId> = BTreeSet::new();
    for p in &pool {
        if d.member(f, &AdmSet::singleton(p.clone()))? {
            members.insert(p.clone());
        }
    }
    let tail = d.member(f, &AdmSet::singleton(PointId::Nat(k + 1)))?;

    // limit-point membership: some cofinite member must exist; search
    // templates base minus a small finite part of the pool, smallest
    // complements first
    let limit_in = match d.bounding_set() {
        Some(base) if base.mode == Mode::Cofinite => {
            let n = pool.len().min(24);
            let mut found = false;
            let mut stack: Vec<Vec<usize>> = vec![vec![]];
            'outer: for size in 0..=(template_bound as usize).min(n) {
                let combos = std::mem::take(&mut stack);
                for combo in combos {
                    let mut support = base.support.clone();
                    support.extend(combo.iter().map(|i| pool[*i].clone()));
                    if d.member(f, &AdmSet::cofinite(support))? {
                        found = true;
                        break 'outer;
                    }
                    if size < (template_bound as usize).min(n) {
                        let start = combo.last().map(|i| i + 1).unwrap_or(0);
                        for next in start..n {
                            let mut bigger = combo.clone();
                            bigger.push(next);
                            stack.push(bigger);
                        }
                    }
                }
            }
            found
        }
        _ => false,
    };

    if tail {
        // U is infinite; the least admissible superset is the cofinite set
        // with the observed finite complement (adding the limit point if U
        // itself misses it).
        let mut support: BTreeSet<PointId> = BTreeSet::new();
        for p in &pool {
            if !members.contains(p) {
                support.insert(p.clone());
            }
        }
        Ok(Some(AdmSet::cofinite(support)))
    } else if limit_in {
        // U is a finite set plus the limit point: admissible upper bounds
        // are cofinite supersets, which have no least element.
        Ok(None)
    } else {
        Ok(Some(AdmSet::finite(members)))
    }
}

#[cfg(test)]
mod tests {
    use super::super::{eval, vb, Valuation};
    use super::*;
    use crate::formula::Formula;

    fn nat(n: u64) -> PointId {
        PointId::Nat(n)
    }

    #[test]
    fn explicit_list_joins() {
        let f = vb();
        let d = FamilyDescriptor::Explicit {
            sets: vec![AdmSet::finite_of([nat(1)]), AdmSet::finite_of([nat(2)])],
        };
        assert_eq!(
            lub_of_family(&f, &d).unwrap(),
            Some(AdmSet::finite_of([nat(1), nat(2)]))
        );
        let empty = FamilyDescriptor::Explicit { sets: vec![] };
        assert_eq!(lub_of_family(&f, &empty).unwrap(), Some(AdmSet::bot()));
    }

    #[test]
    fn finite_subsets_of_cofinite() {
        let f = vb();
        let of = AdmSet::cofinite_of([PointId::named("inf+1")]);
        let d = FamilyDescriptor::FiniteSubsetsOf { of: of.clone() };
        assert_eq!(lub_of_family(&f, &d).unwrap(), Some(of));
    }

    #[test]
    fn join_of_b_family_is_b() {
        // B = {d nonzero | d ≤ top, a ∧ <>d = ⊥} has join top for the
        // guard's value a; the dead end 0 sits in every box set, so the
        // guard evaluates to {0, inf+1}
        let f = vb();
        let a = eval(
            &f,
            &Valuation::new(),
            &Formula::bx(0, Formula::dia(0, Formula::Top)),
        )
        .unwrap();
        assert_eq!(a, AdmSet::finite_of([PointId::named("inf+1"), nat(0)]));
        for a in [a, AdmSet::finite_of([PointId::named("inf+1")])] {
            let d = FamilyDescriptor::BelowWithEmptyDia {
                modality: 0,
                a,
                b: AdmSet::top(),
            };
            assert_eq!(lub_of_family(&f, &d).unwrap(), Some(AdmSet::top()));
        }
    }

    #[test]
    fn bounded_dia_family_below_y_with_trivial_z_joins_to_y() {
        let f = vb();
        let y = AdmSet::cofinite_of([nat(0)]);
        let d = FamilyDescriptor::BelowWithBoundedDia {
            modality: 0,
            y: y.clone(),
            z: AdmSet::top(),
        };
        assert_eq!(lub_of_family(&f, &d).unwrap(), Some(y));
    }

    #[test]
    fn x_family_with_empty_dia_bound_joins_below_limit() {
        // X = {x ≤ top : <>x ≤ cofinite{inf+1}} = all sets avoiding inf;
        // its union misses only inf, so the lub is top.
        let f = vb();
        let d = FamilyDescriptor::BelowWithBoundedDia {
            modality: 0,
            y: AdmSet::top(),
            z: AdmSet::cofinite_of([PointId::named("inf+1")]),
        };
        assert_eq!(lub_of_family(&f, &d).unwrap(), Some(AdmSet::top()));
    }
}
