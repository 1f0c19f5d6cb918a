//! The builtin calculus catalog.

use std::collections::BTreeSet;

use super::{CalculusSpec, Rule};
use crate::formula::Formula;

/// Depth bound for the nominal box-iteration schema family.
pub const NOMINAL_SCHEMA_DEPTH: u32 = 3;

fn p(n: u32) -> Formula {
    Formula::var(n)
}

/// `[]<>top -> []([]([]p0 -> p0) -> p0)`.
pub fn vb_axiom() -> Formula {
    Formula::imp(
        Formula::bx(0, Formula::dia(0, Formula::Top)),
        Formula::bx(
            0,
            Formula::imp(
                Formula::bx(0, Formula::imp(Formula::bx(0, p(0)), p(0))),
                p(0),
            ),
        ),
    )
}

fn base_rules() -> BTreeSet<Rule> {
    [
        Rule::Taut,
        Rule::AxiomInst,
        Rule::Mp,
        Rule::Nec,
        Rule::Us,
        Rule::Rk,
    ]
    .into_iter()
    .collect()
}

fn k_axiom(i: u32) -> (String, Formula) {
    (
        format!("k.{i}"),
        Formula::imp(
            Formula::bx(i, Formula::imp(p(0), p(1))),
            Formula::imp(Formula::bx(i, p(0)), Formula::bx(i, p(1))),
        ),
    )
}

fn conv_k_axiom(i: u32) -> (String, Formula) {
    (
        format!("k.~{i}"),
        Formula::imp(
            Formula::conv_box(i, Formula::imp(p(0), p(1))),
            Formula::imp(Formula::conv_box(i, p(0)), Formula::conv_box(i, p(1))),
        ),
    )
}

/// The smallest normal polymodal calculus with boxes `0..n`.
pub fn k(n: u32) -> CalculusSpec {
    CalculusSpec {
        name: if n == 1 { "k".into() } else { format!("k{n}") },
        modalities: (0..n).collect(),
        converse_modalities: vec![],
        has_ubox: false,
        nominals: false,
        axioms: (0..n).map(k_axiom).collect(),
        rules: base_rules(),
        premises: vec![],
        ca_modalities: BTreeSet::new(),
        us_from_premises: true,
    }
}

/// The smallest normal logic of the guarded fixed-point axiom.
pub fn vb() -> CalculusSpec {
    let mut c = k(1);
    c.name = "vb".into();
    c.axioms.push(("vb".into(), vb_axiom()));
    c
}

/// The minimal tense extension of `vb`: converse box, both K axioms, the
/// two interaction axioms and the residuation rule.
pub fn vb_t() -> CalculusSpec {
    let mut c = vb();
    c.name = "vb.t".into();
    c.converse_modalities = vec![0];
    c.axioms.push(conv_k_axiom(0));
    c.axioms.push((
        "t.fut".into(),
        Formula::imp(p(0), Formula::bx(0, Formula::conv_dia(0, p(0)))),
    ));
    c.axioms.push((
        "t.past".into(),
        Formula::imp(p(0), Formula::conv_box(0, Formula::dia(0, p(0)))),
    ));
    c.rules.insert(Rule::Residuation);
    c
}

fn box_upto(n: u32, f: Formula) -> Formula {
    // f & []f & [][]f & ... up to n boxes
    let mut out = f.clone();
    let mut boxed = f;
    for _ in 0..n {
        boxed = Formula::bx(0, boxed);
        out = Formula::and(out, boxed.clone());
    }
    out
}

/// The minimal nominal extension of `vb`: the box-iteration schema family
/// and the COV rule.
pub fn vb_n() -> CalculusSpec {
    let mut c = vb();
    c.name = "vb.n".into();
    c.nominals = true;
    for n in 0..=NOMINAL_SCHEMA_DEPTH {
        let pos = box_upto(n, Formula::imp(Formula::nom(0), p(0)));
        let neg = box_upto(n, Formula::imp(Formula::nom(0), Formula::neg(p(0))));
        c.axioms.push((format!("nom.b{n}"), Formula::or(pos, neg)));
    }
    c.rules.insert(Rule::Cov);
    c
}

/// `vb` extended with an S5 universal modality above the box, plus the
/// specialization rule for the completely additive box.
pub fn vb_a() -> CalculusSpec {
    let mut c = vb();
    c.name = "vb.a".into();
    c.has_ubox = true;
    c.axioms.push((
        "a.k".into(),
        Formula::imp(
            Formula::ubox(Formula::imp(p(0), p(1))),
            Formula::imp(Formula::ubox(p(0)), Formula::ubox(p(1))),
        ),
    ));
    c.axioms
        .push(("a.t".into(), Formula::imp(Formula::ubox(p(0)), p(0))));
    c.axioms.push((
        "a.4".into(),
        Formula::imp(Formula::ubox(p(0)), Formula::ubox(Formula::ubox(p(0)))),
    ));
    c.axioms.push((
        "a.5".into(),
        Formula::imp(
            Formula::neg(Formula::ubox(p(0))),
            Formula::ubox(Formula::neg(Formula::ubox(p(0)))),
        ),
    ));
    c.axioms.push((
        "a.box".into(),
        Formula::imp(Formula::ubox(p(0)), Formula::bx(0, p(0))),
    ));
    c.rules.insert(Rule::VSpec);
    c.ca_modalities.insert(0);
    c
}

/// The bimodal provability calculus: both transfinite-induction axioms,
/// monotonicity between the boxes, and the push axiom.
pub fn glb() -> CalculusSpec {
    let mut c = k(2);
    c.name = "glb".into();
    c.axioms.push((
        "lob.0".into(),
        Formula::imp(
            Formula::bx(0, Formula::imp(Formula::bx(0, p(0)), p(0))),
            Formula::bx(0, p(0)),
        ),
    ));
    c.axioms.push((
        "lob.1".into(),
        Formula::imp(
            Formula::bx(1, Formula::imp(Formula::bx(1, p(0)), p(0))),
            Formula::bx(1, p(0)),
        ),
    ));
    c.axioms.push((
        "glb.mono".into(),
        Formula::imp(Formula::bx(0, p(0)), Formula::bx(1, p(0))),
    ));
    c.axioms.push((
        "glb.push".into(),
        Formula::imp(Formula::dia(0, p(0)), Formula::bx(1, Formula::dia(0, p(0)))),
    ));
    c
}

/// `glb` plus the modal additivity rule concluding through `[1]`.
pub fn glb_vmod() -> CalculusSpec {
    let mut c = glb();
    c.name = "glb+vmod".into();
    c.rules.insert(Rule::VMod);
    c.ca_modalities.insert(1);
    c
}

/// The full catalog.
pub fn builtin_calculi() -> Vec<CalculusSpec> {
    vec![k(1), k(2), vb(), vb_t(), vb_n(), vb_a(), glb(), glb_vmod()]
}

/// Lookup by name (`k`, `k2`, `vb`, `vb.t`, `vb.n`, `vb.a`, `glb`,
/// `glb+vmod`).
pub fn calculus_by_name(name: &str) -> Option<CalculusSpec> {
    builtin_calculi().into_iter().find(|c| c.name == name)
}
