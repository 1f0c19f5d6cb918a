//! Executable complete-additivity analysis on the fin/cofin algebras: the
//! first-order condition equivalent to complete additivity, search for its
//! failures, explicit witnesses that the diamond fails to distribute over
//! an existing join, the correspondence reformulation, and the
//! incompatibility report combining a fixed-point-style premise with the
//! conclusion it forces on completely additive algebras.
//!
//! The condition is checked through its atomic reduction: in these
//! algebras every nonzero element has an admissible atom (a non-limit
//! singleton) below it, so the inner two quantifiers collapse to a scan
//! over atoms below `b`.

use serde::{Deserialize, Serialize};

use crate::cofin::{
    eval, lub_of_family, AdmSet, CofinError, FamilyDescriptor, FrameFamily, Mode, PointId,
    Valuation,
};
use crate::formula::Formula;

/// Certifies failure of the first-order condition at `(a, b)`: the meet of
/// `a` with `<>b` is nonzero, yet every admissible atom below `b` has its
/// diamond disjoint from `a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RFailureWitness {
    pub family: FrameFamily,
    pub modality: u32,
    pub a: AdmSet,
    pub b: AdmSet,
}

/// Certifies the induced failure of complete additivity: the family
/// `B = {d | ⊥ ≠ d ≤ b, a ∧ <>d = ⊥}` has join `b`, yet `a` separates
/// `<>(⋁B)` from every `<>d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VWitness {
    pub rfailure: RFailureWitness,
    pub descriptor: FamilyDescriptor,
    pub join: AdmSet,
    /// Members of the family whose disjointness from `a` was re-verified.
    pub sampled_members: Vec<AdmSet>,
}

/// A box operator on the algebra: one of the signature, or term-defined by
/// a formula template with a single argument variable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OperatorContext {
    Modality { index: u32 },
    Defined { template: Formula, hole: u32 },
}

impl OperatorContext {
    pub fn modality(index: u32) -> Self {
        OperatorContext::Modality { index }
    }

    /// A term-defined operator; the hole variable must occur exactly once.
    pub fn defined(template: Formula, hole: u32) -> Result<Self, CofinError> {
        let mut count = 0usize;
        fn occurrences(f: &Formula, var: u32, count: &mut usize) {
            if let Formula::Var(n) = f {
                if *n == var {
                    *count += 1;
                }
            }
            for c in f.children() {
                occurrences(c, var, count);
            }
        }
        occurrences(&template, hole, &mut count);
        if count != 1 {
            return Err(CofinError::Internal(format!(
                "operator template must contain its hole variable exactly once, found {count}"
            )));
        }
        // a stray variable would silently read as the empty set
        if template.vars().into_iter().any(|v| v != hole) {
            return Err(CofinError::Internal(
                "operator template must be variable-free apart from its hole".into(),
            ));
        }
        Ok(OperatorContext::Defined { template, hole })
    }

    /// Applies the operator to an element of the algebra.
    pub fn apply(&self, family: &FrameFamily, x: &AdmSet) -> Result<AdmSet, CofinError> {
        match self {
            OperatorContext::Modality { index } => family.adm_box(*index, x),
            OperatorContext::Defined { template, hole } => {
                eval(family, &Valuation::single(*hole, x.clone()), template)
            }
        }
    }
}

/// The first-order condition at a specific pair `(a, b)`, via the atomic
/// reduction: either `a ∧ <>b = ⊥`, or some admissible atom `{x} ≤ b` has
/// `a ∧ <>{x} ≠ ⊥`.
pub fn check_r_at(
    family: &FrameFamily,
    modality: u32,
    a: &AdmSet,
    b: &AdmSet,
) -> Result<bool, CofinError> {
    family.validate_adm(a)?;
    family.validate_adm(b)?;
    let dia_b = family.adm_dia(modality, b)?;
    if family.adm_meet(a, &dia_b).is_empty() {
        return Ok(true);
    }
    let limit = family.limit_point();
    let k = family.threshold([a, b]) + 1;
    for x in family.pool(k) {
        if x == limit || !b.contains(&x) {
            continue;
        }
        let dia_x = family.adm_dia(modality, &AdmSet::singleton(x))?;
        if !family.adm_meet(a, &dia_x).is_empty() {
            return Ok(true);
        }
    }
    // representative for the constant tail
    let rep = PointId::Nat(k + 1);
    if b.contains(&rep) {
        let dia_x = family.adm_dia(modality, &AdmSet::singleton(rep))?;
        if !family.adm_meet(a, &dia_x).is_empty() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Canonical enumeration key: (max support index, mode, support), with
/// named head points counting as index 0.
fn candidate_key(s: &AdmSet) -> (u64, u8, Vec<PointId>) {
    let max_idx = s.max_nat().unwrap_or(0);
    let mode = match s.mode {
        Mode::Finite => 0u8,
        Mode::Cofinite => 1u8,
    };
    (max_idx, mode, s.support.iter().cloned().collect())
}

/// All admissible sets with support drawn from the family's pool up to
/// `bound`, in canonical order.
pub fn candidates(family: &FrameFamily, bound: u64) -> Vec<AdmSet> {
    let limit = family.limit_point();
    let pool: Vec<PointId> = family
        .pool(bound)
        .into_iter()
        .filter(|p| *p != limit)
        .collect();
    let n = pool.len();
    let mut out = Vec::with_capacity(2 << n);
    for mask in 0u64..(1 << n) {
        let support: std::collections::BTreeSet<PointId> = pool
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, p)| p.clone())
            .collect();
        out.push(AdmSet::finite(support.clone()));
        out.push(AdmSet::cofinite(support));
    }
    out.sort_by_key(candidate_key);
    out
}

/// Searches for a failure of the condition among candidate pairs with
/// support indices up to `bound`, pairs with `a ≤ b` first; the first
/// verified witness in canonical order is returned.
pub fn find_r_failure(
    family: &FrameFamily,
    modality: u32,
    bound: u64,
) -> Result<Option<RFailureWitness>, CofinError> {
    let cands = candidates(family, bound);
    let mut passes: [Vec<(usize, usize)>; 2] = [Vec::new(), Vec::new()];
    for (i, a) in cands.iter().enumerate() {
        for (j, b) in cands.iter().enumerate() {
            if family.adm_leq(a, b) {
                passes[0].push((i, j));
            } else {
                passes[1].push((i, j));
            }
        }
    }
    for pass in &passes {
        for (i, j) in pass {
            let (a, b) = (&cands[*i], &cands[*j]);
            if !check_r_at(family, modality, a, b)? {
                return Ok(Some(RFailureWitness {
                    family: family.clone(),
                    modality,
                    a: a.clone(),
                    b: b.clone(),
                }));
            }
        }
    }
    Ok(None)
}

/// Upgrades a condition failure to an explicit complete-additivity failure:
/// the join of `B = {d | ⊥ ≠ d ≤ b, a ∧ <>d = ⊥}` is recomputed and must
/// equal `b`, and the separation facts are re-verified.
pub fn v_witness(family: &FrameFamily, w: &RFailureWitness) -> Result<VWitness, CofinError> {
    if w.family != *family {
        return Err(CofinError::FamilyMismatch);
    }
    let descriptor = FamilyDescriptor::BelowWithEmptyDia {
        modality: w.modality,
        a: w.a.clone(),
        b: w.b.clone(),
    };
    let join = lub_of_family(family, &descriptor)?
        .ok_or_else(|| CofinError::Internal("the family B has no least upper bound".into()))?;
    if join != w.b {
        return Err(CofinError::Internal(format!(
            "join of B is {join}, expected b = {}",
            w.b
        )));
    }
    // a ∧ <>(⋁B) must be nonzero
    let dia_join = family.adm_dia(w.modality, &join)?;
    if family.adm_meet(&w.a, &dia_join).is_empty() {
        return Err(CofinError::Internal(
            "a ∧ <>(⋁B) is empty; not a condition failure".into(),
        ));
    }
    // sample members and re-verify their disjointness
    let limit = family.limit_point();
    let k = family.threshold([&w.a, &w.b]) + 1;
    let mut sampled = Vec::new();
    for x in family.pool(k) {
        if sampled.len() >= 5 {
            break;
        }
        if x == limit {
            continue;
        }
        let s = AdmSet::singleton(x);
        if descriptor.member(family, &s)? {
            sampled.push(s);
        }
    }
    for d in &sampled {
        let dia_d = family.adm_dia(w.modality, d)?;
        if !family.adm_meet(&w.a, &dia_d).is_empty() {
            return Err(CofinError::Internal(format!(
                "sampled member {d} is not disjoint from a under the diamond"
            )));
        }
    }
    Ok(VWitness {
        rfailure: w.clone(),
        descriptor,
        join,
        sampled_members: sampled,
    })
}

/// The correspondence form of complete additivity at `(y, z)`: if `y` is
/// the join of `{x | x ≤ y, <>x ≤ z}`, then `<>y ≤ z`. Returns true when
/// the antecedent fails.
pub fn check_jvb(
    family: &FrameFamily,
    modality: u32,
    y: &AdmSet,
    z: &AdmSet,
) -> Result<bool, CofinError> {
    family.validate_adm(y)?;
    family.validate_adm(z)?;
    let d = FamilyDescriptor::BelowWithBoundedDia {
        modality,
        y: y.clone(),
        z: z.clone(),
    };
    match lub_of_family(family, &d)? {
        Some(u) if u == *y => {
            let dia_y = family.adm_dia(modality, y)?;
            Ok(family.adm_leq(&dia_y, z))
        }
        _ => Ok(true),
    }
}

/// Outcome of the incompatibility report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Every sampled premise holds but the conclusion fails: on this
    /// algebra the second operator's dual cannot be completely additive.
    IncompatibleWithCompleteAdditivity,
    /// The conclusion holds; nothing is forced.
    Consistent,
    /// Some sampled premise already fails.
    PremiseFailed,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::IncompatibleWithCompleteAdditivity => {
                write!(
                    f,
                    "complete additivity of the second box's dual operator must fail"
                )
            }
            Verdict::Consistent => write!(f, "consistent: the conclusion already holds"),
            Verdict::PremiseFailed => write!(f, "premise fails on a sample; nothing is forced"),
        }
    }
}

/// Per-sample premise results and the conclusion check for the report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreatReport {
    pub a: AdmSet,
    pub premise_results: Vec<(AdmSet, bool)>,
    pub conclusion_holds: bool,
    pub box1_bot: AdmSet,
    pub verdict: Verdict,
}

/// Checks, for each sample `x`, whether
/// `a ≤ box1(box0(box0 x -> x) -> x)`, and whether `a ≤ box1 ⊥`. When all
/// sampled premises pass but the conclusion fails, the report records that
/// a completely additive reading of the second operator is impossible.
pub fn theorem_great_report(
    family: &FrameFamily,
    box0: &OperatorContext,
    box1: &OperatorContext,
    a: &AdmSet,
    samples: &[AdmSet],
) -> Result<GreatReport, CofinError> {
    family.validate_adm(a)?;
    let mut premise_results = Vec::new();
    let mut all_pass = true;
    for x in samples {
        family.validate_adm(x)?;
        let b0x = box0.apply(family, x)?;
        let inner = family.adm_join(&family.adm_neg(&b0x), x); // box0 x -> x
        let boxed = box0.apply(family, &inner)?;
        let body = family.adm_join(&family.adm_neg(&boxed), x); // box0(..) -> x
        let premise = box1.apply(family, &body)?;
        let holds = family.adm_leq(a, &premise);
        all_pass &= holds;
        premise_results.push((x.clone(), holds));
    }
    let box1_bot = box1.apply(family, &AdmSet::bot())?;
    let conclusion_holds = family.adm_leq(a, &box1_bot);
    let verdict = if conclusion_holds {
        Verdict::Consistent
    } else if all_pass {
        Verdict::IncompatibleWithCompleteAdditivity
    } else {
        Verdict::PremiseFailed
    };
    Ok(GreatReport {
        a: a.clone(),
        premise_results,
        conclusion_holds,
        box1_bot,
        verdict,
    })
}

/// A deterministic sample list for the report: small finite sets, small
/// cofinite sets, and the non-limit head singletons.
pub fn default_samples(family: &FrameFamily) -> Vec<AdmSet> {
    let limit = family.limit_point();
    let mut out = vec![AdmSet::bot(), AdmSet::top()];
    for h in family.head_points() {
        if h != limit {
            out.push(AdmSet::singleton(h));
        }
    }
    for n in 0..3u64 {
        out.push(AdmSet::singleton(PointId::Nat(n)));
    }
    out.push(AdmSet::finite_of([PointId::Nat(0), PointId::Nat(2)]));
    out.push(AdmSet::cofinite_of([PointId::Nat(0)]));
    out.push(AdmSet::cofinite_of([PointId::Nat(1), PointId::Nat(3)]));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cofin::{vb, vb_i};

    fn inf_plus_one() -> AdmSet {
        AdmSet::singleton(PointId::named("inf+1"))
    }

    #[test]
    fn check_r_spec_cases() {
        let f = vb();
        // a = {inf+1}, b = top: fails (inf+1 sees only inf)
        assert!(!check_r_at(&f, 0, &inf_plus_one(), &AdmSet::top()).unwrap());
        // a = {0}: vacuous antecedent, 0 has no successors
        assert!(check_r_at(&f, 0, &AdmSet::singleton(PointId::Nat(0)), &AdmSet::top()).unwrap());
        // a = {5}, b = {3}: the atom {3} works
        assert!(check_r_at(
            &f,
            0,
            &AdmSet::singleton(PointId::Nat(5)),
            &AdmSet::singleton(PointId::Nat(3))
        )
        .unwrap());
    }

    #[test]
    fn find_r_failure_within_small_bounds() {
        let f = vb();
        for bound in [0, 2] {
            let w = find_r_failure(&f, 0, bound)
                .unwrap()
                .expect("failure exists");
            assert!(!check_r_at(&f, 0, &w.a, &w.b).unwrap());
        }
    }

    #[test]
    fn v_witness_reproduces_join_equation() {
        let f = vb();
        let w = RFailureWitness {
            family: f.clone(),
            modality: 0,
            a: inf_plus_one(),
            b: AdmSet::top(),
        };
        let v = v_witness(&f, &w).unwrap();
        assert_eq!(v.join, AdmSet::top());
        assert!(v.sampled_members.contains(&inf_plus_one()));
        assert!(!v.sampled_members.contains(&AdmSet::top()));
        // b itself is excluded from the family by definition
        assert!(!v.descriptor.member(&f, &AdmSet::top()).unwrap());
        // and singleton membership mirrors the diamond test
        assert!(v
            .descriptor
            .member(&f, &AdmSet::singleton(PointId::Nat(7)))
            .unwrap());
    }

    #[test]
    fn universal_modality_is_completely_additive() {
        // the e-relation is universal, so its diamond sends every nonzero
        // set to top; the condition can never fail for it
        let f = crate::cofin::vbe();
        assert!(find_r_failure(&f, crate::formula::EMOD, 2)
            .unwrap()
            .is_none());
        assert!(check_r_at(&f, crate::formula::EMOD, &inf_plus_one(), &AdmSet::top()).unwrap());
    }

    #[test]
    fn defined_operator_rejects_stray_variables() {
        let bad = Formula::bx(0, Formula::imp(Formula::var(3), Formula::var(9)));
        assert!(OperatorContext::defined(bad, 9).is_err());
        let two_holes = Formula::and(Formula::var(9), Formula::var(9));
        assert!(OperatorContext::defined(two_holes, 9).is_err());
    }

    #[test]
    fn find_r_failure_is_deterministic_and_golden() {
        // the canonical enumeration makes the first witness reproducible:
        // ({inf+1}, top) on the base family, at every bound that reaches it
        let f = vb();
        for bound in [0, 1, 2, 3] {
            let w = find_r_failure(&f, 0, bound).unwrap().unwrap();
            assert_eq!(w.a, inf_plus_one());
            assert_eq!(w.b, AdmSet::top());
        }
    }

    #[test]
    fn jvb_spec_cases() {
        let f = vb();
        // y = top, z = co{inf+1}: antecedent holds, <>top reaches inf+1
        assert!(!check_jvb(
            &f,
            0,
            &AdmSet::top(),
            &AdmSet::cofinite_of([PointId::named("inf+1")])
        )
        .unwrap());
        // y = bot: join is bot and <>bot = bot
        assert!(check_jvb(&f, 0, &AdmSet::bot(), &AdmSet::bot()).unwrap());
        // z = top: always true
        assert!(check_jvb(
            &f,
            0,
            &AdmSet::cofinite_of([PointId::Nat(4)]),
            &AdmSet::top()
        )
        .unwrap());
    }

    #[test]
    fn great_report_on_vb() {
        let f = vb();
        let report = theorem_great_report(
            &f,
            &OperatorContext::modality(0),
            &OperatorContext::modality(0),
            &inf_plus_one(),
            &default_samples(&f),
        )
        .unwrap();
        assert!(report.premise_results.iter().all(|(_, ok)| *ok));
        assert!(!report.conclusion_holds);
        assert_eq!(report.box1_bot, AdmSet::singleton(PointId::Nat(0)));
        assert_eq!(report.verdict, Verdict::IncompatibleWithCompleteAdditivity);

        // a = bot: trivially consistent
        let trivial = theorem_great_report(
            &f,
            &OperatorContext::modality(0),
            &OperatorContext::modality(0),
            &AdmSet::bot(),
            &default_samples(&f),
        )
        .unwrap();
        assert_eq!(trivial.verdict, Verdict::Consistent);
    }

    #[test]
    fn great_report_on_doubled_family_with_defined_operator() {
        let f = vb_i([2]).unwrap();
        // box0 φ := [](<.0>a̲1 -> φ), a term-defined normal box
        let hole = 7u32;
        let template = Formula::bx(
            0,
            Formula::imp(
                Formula::diadot(0, crate::cofin::name_a(1)),
                Formula::var(hole),
            ),
        );
        let box0 = OperatorContext::defined(template, hole).unwrap();
        let a = crate::cofin::eval_name_c(&f).unwrap();
        let report = theorem_great_report(
            &f,
            &box0,
            &OperatorContext::modality(0),
            &a,
            &default_samples(&f),
        )
        .unwrap();
        assert!(report.premise_results.iter().all(|(_, ok)| *ok));
        assert!(!report.conclusion_holds);
        assert_eq!(report.verdict, Verdict::IncompatibleWithCompleteAdditivity);
    }
}
