//! The checking kernel: each line is verified against exactly its stated
//! justification.

use std::collections::BTreeMap;

use super::{CalculusSpec, Justification, Line, NecTarget, ProofScript};
use crate::formula::{Formula, NecessityForm, Substitution};

/// Skeleton atoms above this count must be split into smaller steps.
pub const TAUT_ATOM_CAP: usize = 12;

/// Machine-readable rejection: the offending line index, a stable code and
/// a human-readable message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RejectReason {
    pub code: &'static str,
    pub message: String,
}

impl RejectReason {
    fn new(code: &'static str, message: impl Into<String>) -> Self {
        RejectReason {
            code,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Accepted,
    Rejected { line: usize, reason: RejectReason },
}

impl CheckOutcome {
    pub fn is_accepted(&self) -> bool {
        matches!(self, CheckOutcome::Accepted)
    }
}

struct Ctx<'a> {
    calc: &'a CalculusSpec,
    /// index -> (line, depends on a premise)
    seen: BTreeMap<usize, (&'a Line, bool)>,
}

macro_rules! reject {
    ($line:expr, $code:expr, $($msg:tt)*) => {
        return CheckOutcome::Rejected {
            line: $line,
            reason: RejectReason::new($code, format!($($msg)*)),
        }
    };
}

/// Verifies a script line by line against the calculus.
pub fn check_script(calc: &CalculusSpec, script: &ProofScript) -> CheckOutcome {
    let mut ctx = Ctx {
        calc,
        seen: BTreeMap::new(),
    };
    let mut last_index: Option<usize> = None;
    for line in &script.lines {
        if let Some(prev) = last_index {
            if line.index <= prev {
                reject!(
                    line.index,
                    "line-order",
                    "line indices must be strictly increasing"
                );
            }
        }
        last_index = Some(line.index);

        // resolve references
        let mut refs = Vec::new();
        let mut tainted = matches!(line.just, Justification::Premise);
        for r in line.just.references() {
            match ctx.seen.get(&r) {
                Some((l, t)) => {
                    tainted |= *t;
                    refs.push(*l);
                }
                None => reject!(line.index, "bad-ref", "reference to missing line {r}"),
            }
        }

        if let Some(rule) = line.just.rule() {
            if !calc.rules.contains(&rule) {
                reject!(
                    line.index,
                    "rule-disabled",
                    "rule {rule:?} is not enabled in calculus {}",
                    calc.name
                );
            }
        }

        if let Some(reason) = verify_line(&ctx, line, &refs) {
            return CheckOutcome::Rejected {
                line: line.index,
                reason,
            };
        }

        ctx.seen.insert(line.index, (line, tainted));
    }
    CheckOutcome::Accepted
}

fn verify_line(ctx: &Ctx<'_>, line: &Line, refs: &[&Line]) -> Option<RejectReason> {
    let calc = ctx.calc;
    let f = &line.formula;
    match &line.just {
        Justification::Premise => {
            if calc.premises.contains(f) {
                None
            } else {
                Some(RejectReason::new(
                    "premise-unknown",
                    format!("{f} is not a premise of {}", calc.name),
                ))
            }
        }
        Justification::Taut => check_taut(f),
        Justification::Axiom { name } => {
            let Some(schema) = calc.axiom(name) else {
                return Some(RejectReason::new(
                    "axiom-unknown",
                    format!("no axiom named {name} in {}", calc.name),
                ));
            };
            if match_schema(schema, f).is_some() {
                None
            } else {
                Some(RejectReason::new(
                    "axiom-mismatch",
                    format!("{f} is not an instance of axiom {name}"),
                ))
            }
        }
        Justification::Mp { .. } => {
            let (imp, ant) = (refs[0], refs[1]);
            match &imp.formula {
                Formula::Imp(a, b) if **a == ant.formula && **b == *f => None,
                _ => Some(RejectReason::new(
                    "mp-mismatch",
                    format!(
                        "modus ponens does not yield {f} from lines {} and {}",
                        imp.index, ant.index
                    ),
                )),
            }
        }
        Justification::Nec { target, .. } => {
            if let Some(r) = check_target(calc, *target) {
                return Some(r);
            }
            if *f == target.apply(refs[0].formula.clone()) {
                None
            } else {
                Some(RejectReason::new(
                    "nec-mismatch",
                    format!("{f} is not {target} applied to line {}", refs[0].index),
                ))
            }
        }
        Justification::Us { subst, .. } => {
            let (from, tainted) = (refs[0], ctx.seen[&refs[0].index].1);
            if tainted && !calc.us_from_premises {
                return Some(RejectReason::new(
                    "us-from-premise",
                    "uniform substitution into premise-dependent lines is disabled",
                ));
            }
            if from.formula.substitute(subst) == *f {
                None
            } else {
                Some(RejectReason::new(
                    "us-mismatch",
                    format!(
                        "{f} is not the stated substitution instance of line {}",
                        from.index
                    ),
                ))
            }
        }
        Justification::Rk { count, target, .. } => {
            if let Some(r) = check_target(calc, *target) {
                return Some(r);
            }
            if *count == 0 {
                return Some(RejectReason::new("rk-count", "normality needs a premise"));
            }
            let Formula::Imp(ants, c) = &refs[0].formula else {
                return Some(RejectReason::new(
                    "rk-shape",
                    format!("line {} is not an implication", refs[0].index),
                ));
            };
            let Some(parts) = split_conj(ants, *count) else {
                return Some(RejectReason::new(
                    "rk-shape",
                    format!(
                        "antecedent of line {} does not split into {count} conjuncts",
                        refs[0].index
                    ),
                ));
            };
            let boxed: Vec<Formula> = parts.iter().map(|p| target.apply((*p).clone())).collect();
            let expect = Formula::imp(join_conj(&boxed), target.apply((**c).clone()));
            if *f == expect {
                None
            } else {
                Some(RejectReason::new(
                    "rk-mismatch",
                    format!(
                        "{f} is not the {target}-normality image of line {}",
                        refs[0].index
                    ),
                ))
            }
        }
        Justification::Res { forward, .. } => {
            let from = refs[0];
            let Some(expect) = residuate(calc, &from.formula, *forward) else {
                return Some(RejectReason::new(
                    "res-shape",
                    format!(
                        "line {} has no residuation image in this direction",
                        from.index
                    ),
                ));
            };
            if *f == expect {
                None
            } else {
                Some(RejectReason::new(
                    "res-mismatch",
                    format!("{f} is not the residuation image of line {}", from.index),
                ))
            }
        }
        Justification::Cov { .. } => {
            if !calc.nominals {
                return Some(RejectReason::new(
                    "cov-no-nominals",
                    "the COV rule needs a nominal language",
                ));
            }
            let premise = &refs[0].formula;
            for i in premise.nominals() {
                let neg_i = Formula::neg(Formula::nom(i));
                if let Some(l) = NecessityForm::infer(premise, &neg_i, f, &Formula::Bot) {
                    if l.nominals().contains(&i) {
                        continue;
                    }
                    if l.principal_boxes()
                        .iter()
                        .any(|b| !calc.modalities.contains(b))
                    {
                        continue;
                    }
                    return None;
                }
            }
            Some(RejectReason::new(
                "cov-mismatch",
                format!(
                    "no necessity form takes line {} to {f} by closing off a fresh nominal",
                    refs[0].index
                ),
            ))
        }
        Justification::VSpec { var, .. } => {
            if !calc.has_ubox {
                return Some(RejectReason::new(
                    "vspec-no-ubox",
                    "the specialization rule needs the universal modality",
                ));
            }
            let (l1, l2, l3) = (refs[0], refs[1], refs[2]);
            let Formula::Imp(alpha, boxed) = &l3.formula else {
                return Some(RejectReason::new(
                    "vrule-shape",
                    "third premise must be an implication",
                ));
            };
            let Formula::Box_(j, chi) = &**boxed else {
                return Some(RejectReason::new(
                    "vrule-shape",
                    "third premise must box its consequent",
                ));
            };
            if !calc.ca_modalities.contains(j) {
                return Some(RejectReason::new(
                    "vrule-not-ca",
                    format!("box index {j} is not declared completely additive"),
                ));
            }
            if l1.formula != Formula::imp(Formula::var(*var), (**chi).clone()) {
                return Some(RejectReason::new(
                    "vrule-shape",
                    "first premise must be p -> χ(p)",
                ));
            }
            if l2.formula
                != Formula::imp(
                    Formula::ubox((**chi).clone()),
                    Formula::ubox(Formula::var(*var)),
                )
            {
                return Some(RejectReason::new(
                    "vrule-shape",
                    "second premise must be A χ(p) -> A p",
                ));
            }
            if alpha.vars().contains(var) {
                return Some(RejectReason::new(
                    "freshness-violated",
                    format!("p{var} occurs in the guard of the conclusion"),
                ));
            }
            if *f == Formula::imp((**alpha).clone(), Formula::bx(*j, Formula::Bot)) {
                None
            } else {
                Some(RejectReason::new(
                    "vrule-conclusion",
                    "conclusion must be α -> [j]bot",
                ))
            }
        }
        Justification::VMod { var, .. } => {
            let (l1, l2, l3) = (refs[0], refs[1], refs[2]);
            let Formula::Imp(alpha, boxed) = &l3.formula else {
                return Some(RejectReason::new(
                    "vrule-shape",
                    "third premise must be an implication",
                ));
            };
            let Formula::Box_(j, chi) = &**boxed else {
                return Some(RejectReason::new(
                    "vrule-shape",
                    "third premise must box its consequent",
                ));
            };
            if !calc.ca_modalities.contains(j) {
                return Some(RejectReason::new(
                    "vrule-not-ca",
                    format!("box index {j} is not declared completely additive"),
                ));
            }
            if l1.formula != Formula::imp(Formula::var(*var), (**chi).clone()) {
                return Some(RejectReason::new(
                    "vrule-shape",
                    "first premise must be p -> χ(p)",
                ));
            }
            // second premise: (χ & [i]χ) -> p for a declared i
            let ok2 = match &l2.formula {
                Formula::Imp(a, p) if **p == Formula::var(*var) => match &**a {
                    Formula::And(x, bx) => {
                        **x == **chi
                            && matches!(&**bx, Formula::Box_(i, y)
                                if **y == **chi && calc.modalities.contains(i))
                    }
                    _ => false,
                },
                _ => false,
            };
            if !ok2 {
                return Some(RejectReason::new(
                    "vrule-shape",
                    "second premise must be [.i]χ(p) -> p",
                ));
            }
            if alpha.vars().contains(var) {
                return Some(RejectReason::new(
                    "freshness-violated",
                    format!("p{var} occurs in the guard of the conclusion"),
                ));
            }
            if *f == Formula::imp((**alpha).clone(), Formula::bx(*j, Formula::Bot)) {
                None
            } else {
                Some(RejectReason::new(
                    "vrule-conclusion",
                    "conclusion must be α -> [j]bot",
                ))
            }
        }
        Justification::VlMod { var, .. } => {
            let (l1, l2, l3) = (refs[0], refs[1], refs[2]);
            let Formula::Imp(p_var, chi) = &l1.formula else {
                return Some(RejectReason::new(
                    "vrule-shape",
                    "first premise must be p -> χ(p)",
                ));
            };
            if **p_var != Formula::var(*var) {
                return Some(RejectReason::new(
                    "vrule-shape",
                    "first premise must be p -> χ(p)",
                ));
            }
            let chi = &**chi;
            let Some(l) = NecessityForm::infer(&l3.formula, chi, f, &Formula::Bot) else {
                return Some(RejectReason::new(
                    "vlmod-form",
                    "no necessity form takes the applied premise to the conclusion",
                ));
            };
            if l.vars().contains(var) {
                return Some(RejectReason::new(
                    "freshness-violated",
                    format!("p{var} occurs in the necessity form"),
                ));
            }
            if let Some(bad) = l
                .principal_boxes()
                .iter()
                .find(|b| !calc.ca_modalities.contains(b))
            {
                return Some(RejectReason::new(
                    "principal-box-not-ca",
                    format!("principal box [{bad}] is not declared completely additive"),
                ));
            }
            // second premise: ℓ1(χ) -> ... -> ℓn(χ) -> p, each antecedent a
            // necessity-form instance of χ
            let mut cur = &l2.formula;
            let mut peeled = 0usize;
            loop {
                if *cur == Formula::var(*var) {
                    break;
                }
                let Formula::Imp(a, rest) = cur else {
                    return Some(RejectReason::new(
                        "vlmod-chain",
                        "second premise must be a chain of necessity-form instances ending in p",
                    ));
                };
                if !is_nf_instance(calc, a, chi) {
                    return Some(RejectReason::new(
                        "vlmod-chain",
                        format!("antecedent {a} is not a necessity form applied to χ"),
                    ));
                }
                peeled += 1;
                cur = rest;
            }
            if peeled == 0 {
                return Some(RejectReason::new(
                    "vlmod-chain",
                    "second premise must mention χ at least once",
                ));
            }
            None
        }
        Justification::VInf => Some(RejectReason::new(
            "rule-unsupported",
            "the quantified inference rule is not mechanized; use the specialized rules",
        )),
    }
}

fn check_target(calc: &CalculusSpec, target: NecTarget) -> Option<RejectReason> {
    let ok = match target {
        NecTarget::Box(i) => calc.modalities.contains(&i),
        NecTarget::ConvBox(i) => calc.converse_modalities.contains(&i),
        NecTarget::UBox => calc.has_ubox,
    };
    if ok {
        None
    } else {
        Some(RejectReason::new(
            "target-undeclared",
            format!("{target} is not part of the calculus language"),
        ))
    }
}

/// Is `f` of the shape `ℓ(chi)` for some necessity form over declared
/// modalities?
fn is_nf_instance(calc: &CalculusSpec, f: &Formula, chi: &Formula) -> bool {
    if f == chi {
        return true;
    }
    match f {
        Formula::Imp(_, rest) => is_nf_instance(calc, rest, chi),
        Formula::Box_(i, rest) => calc.modalities.contains(i) && is_nf_instance(calc, rest, chi),
        _ => false,
    }
}

fn split_conj(f: &Formula, count: usize) -> Option<Vec<&Formula>> {
    if count == 1 {
        return Some(vec![f]);
    }
    match f {
        Formula::And(a, b) => {
            let mut left = split_conj(a, count - 1)?;
            left.push(b);
            Some(left)
        }
        _ => None,
    }
}

fn join_conj(parts: &[Formula]) -> Formula {
    let mut it = parts.iter().cloned();
    let first = it.next().expect("nonempty");
    it.fold(first, Formula::and)
}

fn residuate(calc: &CalculusSpec, f: &Formula, forward: bool) -> Option<Formula> {
    let Formula::Imp(a, b) = f else { return None };
    if forward {
        match &**b {
            Formula::Box_(i, psi) if calc.converse_modalities.contains(i) => Some(Formula::imp(
                Formula::conv_dia(*i, (**a).clone()),
                (**psi).clone(),
            )),
            Formula::ConvBox(i, psi) if calc.converse_modalities.contains(i) => Some(Formula::imp(
                Formula::dia(*i, (**a).clone()),
                (**psi).clone(),
            )),
            _ => None,
        }
    } else {
        // antecedent must be <~i>φ or <i>φ
        match &**a {
            Formula::Neg(x) => match &**x {
                Formula::ConvBox(i, n) if calc.converse_modalities.contains(i) => match &**n {
                    Formula::Neg(phi) => Some(Formula::imp(
                        (**phi).clone(),
                        Formula::bx(*i, (**b).clone()),
                    )),
                    _ => None,
                },
                Formula::Box_(i, n) if calc.converse_modalities.contains(i) => match &**n {
                    Formula::Neg(phi) => Some(Formula::imp(
                        (**phi).clone(),
                        Formula::conv_box(*i, (**b).clone()),
                    )),
                    _ => None,
                },
                _ => None,
            },
            _ => None,
        }
    }
}

/// One-sided matching of a schema against a formula: schema variables bind
/// formulas, schema nominals bind nominals, everything else must agree.
pub fn match_schema(schema: &Formula, target: &Formula) -> Option<Substitution> {
    let mut vars: BTreeMap<u32, Formula> = BTreeMap::new();
    let mut noms: BTreeMap<u32, u32> = BTreeMap::new();
    fn go(
        s: &Formula,
        t: &Formula,
        vars: &mut BTreeMap<u32, Formula>,
        noms: &mut BTreeMap<u32, u32>,
    ) -> bool {
        match (s, t) {
            (Formula::Var(n), _) => match vars.get(n) {
                Some(bound) => bound == t,
                None => {
                    vars.insert(*n, t.clone());
                    true
                }
            },
            (Formula::Nominal(n), Formula::Nominal(m)) => match noms.get(n) {
                Some(bound) => bound == m,
                None => {
                    noms.insert(*n, *m);
                    true
                }
            },
            (Formula::Bot, Formula::Bot) | (Formula::Top, Formula::Top) => true,
            (Formula::Neg(a), Formula::Neg(b)) => go(a, b, vars, noms),
            (Formula::And(a1, a2), Formula::And(b1, b2))
            | (Formula::Or(a1, a2), Formula::Or(b1, b2))
            | (Formula::Imp(a1, a2), Formula::Imp(b1, b2))
            | (Formula::Iff(a1, a2), Formula::Iff(b1, b2)) => {
                go(a1, b1, vars, noms) && go(a2, b2, vars, noms)
            }
            (Formula::Box_(i, a), Formula::Box_(j, b))
            | (Formula::ConvBox(i, a), Formula::ConvBox(j, b)) => i == j && go(a, b, vars, noms),
            (Formula::UBox(a), Formula::UBox(b)) => go(a, b, vars, noms),
            _ => false,
        }
    }
    if go(schema, target, &mut vars, &mut noms) {
        Some(vars.into_iter().collect())
    } else {
        None
    }
}

/// Tautology check over the maximal non-Boolean subformulas.
fn check_taut(f: &Formula) -> Option<RejectReason> {
    let mut atoms: Vec<&Formula> = Vec::new();
    fn collect<'a>(f: &'a Formula, atoms: &mut Vec<&'a Formula>) {
        match f {
            Formula::Bot | Formula::Top => {}
            Formula::Neg(a) => collect(a, atoms),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                collect(a, atoms);
                collect(b, atoms);
            }
            other => {
                if !atoms.contains(&other) {
                    atoms.push(other);
                }
            }
        }
    }
    collect(f, &mut atoms);
    if atoms.len() > TAUT_ATOM_CAP {
        return Some(RejectReason::new(
            "skeleton-too-large",
            format!(
                "{} skeleton atoms exceed the cap of {TAUT_ATOM_CAP}; split the step",
                atoms.len()
            ),
        ));
    }
    fn eval(f: &Formula, atoms: &[&Formula], assignment: u32) -> bool {
        match f {
            Formula::Bot => false,
            Formula::Top => true,
            Formula::Neg(a) => !eval(a, atoms, assignment),
            Formula::And(a, b) => eval(a, atoms, assignment) && eval(b, atoms, assignment),
            Formula::Or(a, b) => eval(a, atoms, assignment) || eval(b, atoms, assignment),
            Formula::Imp(a, b) => !eval(a, atoms, assignment) || eval(b, atoms, assignment),
            Formula::Iff(a, b) => eval(a, atoms, assignment) == eval(b, atoms, assignment),
            other => {
                let i = atoms.iter().position(|a| *a == other).expect("collected");
                assignment & (1 << i) != 0
            }
        }
    }
    for assignment in 0u32..(1 << atoms.len()) {
        if !eval(f, &atoms, assignment) {
            return Some(RejectReason::new(
                "not-tautology",
                format!("{f} fails on a skeleton assignment"),
            ));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::super::calculi::calculus_by_name;
    use super::*;
    use crate::formula::parse;

    fn k1() -> CalculusSpec {
        calculus_by_name("k").unwrap()
    }

    fn line(index: usize, text: &str, just: Justification) -> Line {
        Line {
            index,
            formula: parse(text).unwrap(),
            just,
        }
    }

    #[test]
    fn taut_accepts_skeleton_instances_only() {
        let calc = k1();
        let ok = ProofScript {
            lines: vec![line(1, "[]p0 -> []p0", Justification::Taut)],
        };
        assert!(check_script(&calc, &ok).is_accepted());

        // the K axiom is not a skeleton tautology
        let not = ProofScript {
            lines: vec![line(
                1,
                "[](p0 -> p1) -> ([]p0 -> []p1)",
                Justification::Taut,
            )],
        };
        assert!(!check_script(&calc, &not).is_accepted());
    }

    #[test]
    fn axiom_matching_and_mp() {
        let calc = k1();
        let script = ProofScript {
            lines: vec![
                line(
                    1,
                    "[](bot -> top) -> ([]bot -> []top)",
                    Justification::Axiom { name: "k.0".into() },
                ),
                line(2, "bot -> top", Justification::Taut),
                line(
                    3,
                    "[](bot -> top)",
                    Justification::Nec {
                        from: 2,
                        target: NecTarget::Box(0),
                    },
                ),
                line(4, "[]bot -> []top", Justification::Mp { imp: 1, ant: 3 }),
            ],
        };
        assert!(check_script(&calc, &script).is_accepted());
    }

    #[test]
    fn rejects_wrong_reference_and_order() {
        let calc = k1();
        let script = ProofScript {
            lines: vec![
                line(1, "bot -> bot", Justification::Taut),
                line(
                    2,
                    "[](bot -> bot)",
                    Justification::Nec {
                        from: 3,
                        target: NecTarget::Box(0),
                    },
                ),
            ],
        };
        let CheckOutcome::Rejected { line: l, reason } = check_script(&calc, &script) else {
            panic!("must reject");
        };
        assert_eq!(l, 2);
        assert_eq!(reason.code, "bad-ref");
    }

    #[test]
    fn rk_normality() {
        let calc = k1();
        let script = ProofScript {
            lines: vec![
                line(1, "p0 & p1 -> p0", Justification::Taut),
                line(
                    2,
                    "[]p0 & []p1 -> []p0",
                    Justification::Rk {
                        from: 1,
                        count: 2,
                        target: NecTarget::Box(0),
                    },
                ),
            ],
        };
        assert!(check_script(&calc, &script).is_accepted());
    }

    #[test]
    fn us_respects_premise_flag() {
        let mut calc = k1();
        calc.premises.push(parse("p0").unwrap());
        let script = ProofScript {
            lines: vec![
                line(1, "p0", Justification::Premise),
                line(
                    2,
                    "[]p1",
                    Justification::Us {
                        from: 1,
                        subst: Substitution::single(0, parse("[]p1").unwrap()),
                    },
                ),
            ],
        };
        assert!(check_script(&calc, &script).is_accepted());
        calc.us_from_premises = false;
        let CheckOutcome::Rejected { reason, .. } = check_script(&calc, &script) else {
            panic!("must reject");
        };
        assert_eq!(reason.code, "us-from-premise");
    }

    #[test]
    fn residuation_shapes() {
        let calc = calculus_by_name("vb.t").unwrap();
        let script = ProofScript {
            lines: vec![
                line(1, "p0 -> []p1", Justification::Premise),
                line(
                    2,
                    "<~0>p0 -> p1",
                    Justification::Res {
                        from: 1,
                        forward: true,
                    },
                ),
                line(
                    3,
                    "p0 -> []p1",
                    Justification::Res {
                        from: 2,
                        forward: false,
                    },
                ),
            ],
        };
        let mut with_premise = calc.clone();
        with_premise.premises.push(parse("p0 -> []p1").unwrap());
        assert!(check_script(&with_premise, &script).is_accepted());
    }

    #[test]
    fn vmod_freshness() {
        let calc = calculus_by_name("glb+vmod").unwrap();
        let mut bad = calc.clone();
        bad.premises = vec![
            parse("p0 -> ([0]p0 -> p0)").unwrap(),
            parse("([0]p0 -> p0) & [0]([0]p0 -> p0) -> p0").unwrap(),
            parse("p0 -> [1]([0]p0 -> p0)").unwrap(),
        ];
        let script = ProofScript {
            lines: vec![
                line(1, "p0 -> ([0]p0 -> p0)", Justification::Premise),
                line(
                    2,
                    "([0]p0 -> p0) & [0]([0]p0 -> p0) -> p0",
                    Justification::Premise,
                ),
                line(3, "p0 -> [1]([0]p0 -> p0)", Justification::Premise),
                line(
                    4,
                    "p0 -> [1]bot",
                    Justification::VMod {
                        imp_chi: 1,
                        boxdot_imp: 2,
                        box_imp: 3,
                        var: 0,
                    },
                ),
            ],
        };
        let CheckOutcome::Rejected { line: l, reason } = check_script(&bad, &script) else {
            panic!("must reject: α = p0 is not fresh for p0");
        };
        assert_eq!(l, 4);
        assert_eq!(reason.code, "freshness-violated");
    }
}
