//! Derivation fixtures: the non-conservativity and provability-logic
//! derivations shipped as checkable scripts. Normal-modal-reasoning steps
//! are expanded into primitive tautology/normality/modus-ponens steps; the
//! kernel never accepts an unexpanded step.

use super::calculi::{glb, glb_vmod, k, vb_a, vb_n, vb_t};
use super::{CalculusSpec, Justification, Line, NecTarget, ProofScript};
use crate::formula::{Formula, NecessityForm, Substitution};

/// A named, checkable derivation with its expected final formula.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub calculus: CalculusSpec,
    pub script: ProofScript,
    pub expected_final: Formula,
}

/// Script builder that computes each conclusion from its justification, so
/// fixtures cannot drift from the rules they claim to use.
struct Sb {
    calc: CalculusSpec,
    lines: Vec<Line>,
    next: usize,
}

impl Sb {
    fn new(calc: CalculusSpec) -> Self {
        Sb {
            calc,
            lines: Vec::new(),
            next: 1,
        }
    }

    fn formula_of(&self, index: usize) -> &Formula {
        &self
            .lines
            .iter()
            .find(|l| l.index == index)
            .expect("fixture references an existing line")
            .formula
    }

    fn push(&mut self, formula: Formula, just: Justification) -> usize {
        let index = self.next;
        self.next += 1;
        self.lines.push(Line {
            index,
            formula,
            just,
        });
        index
    }

    fn premise(&mut self, f: Formula) -> usize {
        self.push(f, Justification::Premise)
    }

    fn taut(&mut self, f: Formula) -> usize {
        self.push(f, Justification::Taut)
    }

    fn axiom(&mut self, name: &str, sigma: Substitution) -> usize {
        let schema = self
            .calc
            .axiom(name)
            .unwrap_or_else(|| panic!("axiom {name}"))
            .clone();
        self.push(
            schema.substitute(&sigma),
            Justification::Axiom { name: name.into() },
        )
    }

    fn mp(&mut self, imp: usize, ant: usize) -> usize {
        let Formula::Imp(a, b) = self.formula_of(imp) else {
            panic!("mp on non-implication");
        };
        assert_eq!(**a, *self.formula_of(ant), "mp antecedent mismatch");
        let conclusion = (**b).clone();
        self.push(conclusion, Justification::Mp { imp, ant })
    }

    /// Tautological glue: push `imp_chain` as a tautology and eliminate the
    /// given antecedent lines left to right.
    fn glue(&mut self, imp_chain: Formula, ants: &[usize]) -> usize {
        let mut cur = self.taut(imp_chain);
        for a in ants {
            cur = self.mp(cur, *a);
        }
        cur
    }

    fn nec(&mut self, from: usize, target: NecTarget) -> usize {
        let f = target.apply(self.formula_of(from).clone());
        self.push(f, Justification::Nec { from, target })
    }

    fn us(&mut self, from: usize, subst: Substitution) -> usize {
        let f = self.formula_of(from).substitute(&subst);
        self.push(f, Justification::Us { from, subst })
    }

    fn rk(&mut self, from: usize, count: usize, target: NecTarget) -> usize {
        let Formula::Imp(ants, c) = self.formula_of(from).clone() else {
            panic!("rk on non-implication");
        };
        fn split(f: &Formula, count: usize, out: &mut Vec<Formula>) {
            if count == 1 {
                out.push(f.clone());
                return;
            }
            let Formula::And(a, b) = f else {
                panic!("rk antecedent does not split")
            };
            split(a, count - 1, out);
            out.push((**b).clone());
        }
        let mut parts = Vec::new();
        split(&ants, count, &mut parts);
        let mut boxed = parts.iter().map(|p| target.apply(p.clone()));
        let first = boxed.next().expect("count >= 1");
        let lhs = boxed.fold(first, Formula::and);
        let f = Formula::imp(lhs, target.apply((*c).clone()));
        self.push(
            f,
            Justification::Rk {
                from,
                count,
                target,
            },
        )
    }

    fn res(&mut self, from: usize, forward: bool) -> usize {
        let Formula::Imp(a, b) = self.formula_of(from).clone() else {
            panic!("res on non-implication");
        };
        let f = if forward {
            match *b {
                Formula::Box_(i, psi) => {
                    Formula::imp(Formula::conv_dia(i, (*a).clone()), (*psi).clone())
                }
                Formula::ConvBox(i, psi) => {
                    Formula::imp(Formula::dia(i, (*a).clone()), (*psi).clone())
                }
                _ => panic!("res forward needs a boxed consequent"),
            }
        } else {
            match *a {
                Formula::Neg(x) => match *x {
                    Formula::ConvBox(i, n) => match *n {
                        Formula::Neg(phi) => {
                            Formula::imp((*phi).clone(), Formula::bx(i, (*b).clone()))
                        }
                        _ => panic!("res backward shape"),
                    },
                    Formula::Box_(i, n) => match *n {
                        Formula::Neg(phi) => {
                            Formula::imp((*phi).clone(), Formula::conv_box(i, (*b).clone()))
                        }
                        _ => panic!("res backward shape"),
                    },
                    _ => panic!("res backward shape"),
                },
                _ => panic!("res backward shape"),
            }
        };
        self.push(f, Justification::Res { from, forward })
    }

    fn cov(&mut self, from: usize, l: &NecessityForm, nominal: u32) -> usize {
        assert_eq!(
            l.apply(&Formula::neg(Formula::nom(nominal))),
            *self.formula_of(from),
            "cov premise mismatch"
        );
        let f = l.apply(&Formula::Bot);
        self.push(f, Justification::Cov { from })
    }

    fn vspec(&mut self, imp_chi: usize, ubox_imp: usize, box_imp: usize, var: u32) -> usize {
        let Formula::Imp(alpha, boxed) = self.formula_of(box_imp).clone() else {
            panic!("vspec third premise shape");
        };
        let Formula::Box_(j, _) = *boxed else {
            panic!("vspec third premise shape");
        };
        let f = Formula::imp((*alpha).clone(), Formula::bx(j, Formula::Bot));
        self.push(
            f,
            Justification::VSpec {
                imp_chi,
                ubox_imp,
                box_imp,
                var,
            },
        )
    }

    fn vmod(&mut self, imp_chi: usize, boxdot_imp: usize, box_imp: usize, var: u32) -> usize {
        let Formula::Imp(alpha, boxed) = self.formula_of(box_imp).clone() else {
            panic!("vmod third premise shape");
        };
        let Formula::Box_(j, _) = *boxed else {
            panic!("vmod third premise shape");
        };
        let f = Formula::imp((*alpha).clone(), Formula::bx(j, Formula::Bot));
        self.push(
            f,
            Justification::VMod {
                imp_chi,
                boxdot_imp,
                box_imp,
                var,
            },
        )
    }

    fn finish(self, name: &'static str) -> Fixture {
        let expected_final = self.lines.last().expect("nonempty fixture").formula.clone();
        Fixture {
            name,
            calculus: self.calc,
            script: ProofScript { lines: self.lines },
            expected_final,
        }
    }
}

fn p() -> Formula {
    Formula::var(0)
}

/// `[]<>top`.
fn guard() -> Formula {
    Formula::bx(0, Formula::dia(0, Formula::Top))
}

/// `[i]([i]x -> x) -> x` with the box index `i`.
fn lob_body(i: u32, x: Formula) -> Formula {
    Formula::imp(
        Formula::bx(i, Formula::imp(Formula::bx(i, x.clone()), x.clone())),
        x,
    )
}

// ---------------------------------------------------------------------------
// The tense derivation: from the guarded axiom, residuation yields
// `[]<>top -> []bot`.
// ---------------------------------------------------------------------------

fn tense_fixture() -> Fixture {
    let mut sb = Sb::new(vb_t());
    let g = guard();
    // χ := <~0>[]<>top, the backward-looking witness
    let chi = Formula::conv_dia(0, g.clone());
    let nc = Formula::neg(chi.clone());
    // B1 := []([]~χ -> ~χ)
    let b1 = Formula::bx(0, Formula::imp(Formula::bx(0, nc.clone()), nc.clone()));

    // 0-style opening: the axiom instance and the tense axiom instance
    let a0 = sb.axiom("vb", Substitution::single(0, nc.clone())); // G -> [](B1's body -> ~χ) built from the schema
    let a1 = sb.axiom("t.fut", Substitution::single(0, g.clone())); // G -> []<~0>G = G -> []χ

    // G -> []~B1
    let inner = sb.taut(Formula::imp(
        Formula::and(Formula::imp(b1.clone(), nc.clone()), chi.clone()),
        Formula::neg(b1.clone()),
    ));
    let boxed = sb.rk(inner, 2, NecTarget::Box(0));
    let a0f = sb.formula_of(a0).clone();
    let a1f = sb.formula_of(a1).clone();
    let boxedf = sb.formula_of(boxed).clone();
    let g_to_notb1 = Formula::imp(g.clone(), Formula::bx(0, Formula::neg(b1.clone())));
    let step3 = sb.glue(
        Formula::imp(
            a0f,
            Formula::imp(a1f, Formula::imp(boxedf, g_to_notb1.clone())),
        ),
        &[a0, a1, boxed],
    );

    // residuate: χ -> ~B1
    let step4 = sb.res(step3, true);

    // χ -> <>(χ & []~χ)
    let a = Formula::and(chi.clone(), Formula::bx(0, nc.clone()));
    let dia_a = Formula::dia(0, a.clone());
    let t9 = sb.taut(Formula::imp(
        Formula::neg(a.clone()),
        Formula::imp(Formula::bx(0, nc.clone()), nc.clone()),
    ));
    let t10 = sb.rk(t9, 1, NecTarget::Box(0));
    let t10f = sb.formula_of(t10).clone();
    let step4f = sb.formula_of(step4).clone();
    let chi_dia_a = Formula::imp(chi.clone(), dia_a.clone());
    let step6 = sb.glue(
        Formula::imp(t10f, Formula::imp(step4f, chi_dia_a.clone())),
        &[t10, step4],
    );

    // χ -> <>(<>(χ & []~χ) & []~χ)
    let b = Formula::and(dia_a.clone(), Formula::bx(0, nc.clone()));
    let step6f = sb.formula_of(step6).clone();
    let t14 = sb.glue(
        Formula::imp(step6f, Formula::imp(a.clone(), b.clone())),
        &[step6],
    );
    let t14f = sb.formula_of(t14).clone();
    let t16 = sb.glue(
        Formula::imp(
            t14f,
            Formula::imp(Formula::neg(b.clone()), Formula::neg(a.clone())),
        ),
        &[t14],
    );
    let t17 = sb.rk(t16, 1, NecTarget::Box(0));
    let t17f = sb.formula_of(t17).clone();
    let dia_b = Formula::dia(0, b.clone());
    let t19 = sb.glue(
        Formula::imp(t17f, Formula::imp(dia_a.clone(), dia_b.clone())),
        &[t17],
    );
    let step6f = sb.formula_of(step6).clone();
    let t19f = sb.formula_of(t19).clone();
    let step7 = sb.glue(
        Formula::imp(
            step6f,
            Formula::imp(t19f, Formula::imp(chi.clone(), dia_b.clone())),
        ),
        &[step6, t19],
    );

    // <>B -> bot: the two conjuncts of B contradict each other one level in
    let t24 = sb.taut(Formula::imp(
        Formula::neg(chi.clone()),
        Formula::neg(a.clone()),
    ));
    let t25 = sb.rk(t24, 1, NecTarget::Box(0));
    let t25f = sb.formula_of(t25).clone();
    let dia_chi = Formula::dia(0, chi.clone());
    let t27 = sb.glue(
        Formula::imp(t25f, Formula::imp(dia_a.clone(), dia_chi.clone())),
        &[t25],
    );
    let t27f = sb.formula_of(t27).clone();
    let t29 = sb.glue(
        Formula::imp(
            t27f,
            Formula::imp(
                b.clone(),
                Formula::and(dia_chi.clone(), Formula::bx(0, nc.clone())),
            ),
        ),
        &[t27],
    );
    let t29f = sb.formula_of(t29).clone();
    let b_to_bot = Formula::imp(b.clone(), Formula::Bot);
    let t31 = sb.glue(Formula::imp(t29f, b_to_bot.clone()), &[t29]);
    let t31f = sb.formula_of(t31).clone();
    let t33 = sb.glue(
        Formula::imp(
            t31f,
            Formula::imp(Formula::neg(Formula::Bot), Formula::neg(b.clone())),
        ),
        &[t31],
    );
    let t35 = sb.rk(t33, 1, NecTarget::Box(0));
    let t36 = sb.taut(Formula::neg(Formula::Bot));
    let t37 = sb.nec(t36, NecTarget::Box(0));
    let t38 = sb.mp(t35, t37); // []~B
    let t38f = sb.formula_of(t38).clone();
    let t40 = sb.glue(
        Formula::imp(t38f, Formula::imp(dia_b.clone(), Formula::Bot)),
        &[t38],
    );

    // χ -> bot and the closing residuation
    let step7f = sb.formula_of(step7).clone();
    let t40f = sb.formula_of(t40).clone();
    let chi_bot = sb.glue(
        Formula::imp(
            step7f,
            Formula::imp(t40f, Formula::imp(chi.clone(), Formula::Bot)),
        ),
        &[step7, t40],
    );
    sb.res(chi_bot, false);
    sb.finish("tense-nonconservativity")
}

// ---------------------------------------------------------------------------
// The nominal derivation: the box-iteration schema plus COV yield
// `[]<>top -> []bot`.
// ---------------------------------------------------------------------------

fn nominal_fixture() -> Fixture {
    let mut sb = Sb::new(vb_n());
    let g = guard();
    let i = Formula::nom(0);
    let dia_i = Formula::dia(0, i.clone());
    let ni = Formula::neg(i.clone());

    // instance of the depth-1 schema with p := <>i
    let b1 = {
        let mut s = Substitution::new();
        s.insert(0, dia_i.clone());
        sb.axiom("nom.b1", s)
    };
    // i -> [](i -> <>i)
    let k_pos = Formula::bx(0, Formula::imp(i.clone(), dia_i.clone()));
    let b2 = sb.taut(Formula::imp(
        ni.clone(),
        Formula::imp(i.clone(), dia_i.clone()),
    ));
    let b3 = sb.rk(b2, 1, NecTarget::Box(0));
    let b1f = sb.formula_of(b1).clone();
    let b3f = sb.formula_of(b3).clone();
    let i_to_k = Formula::imp(i.clone(), k_pos.clone());
    let b6 = sb.glue(
        Formula::imp(b3f, Formula::imp(b1f, i_to_k.clone())),
        &[b3, b1],
    );
    let b7 = sb.nec(b6, NecTarget::Box(0));

    // axiom instance with p := ~i, inner conditional contraposed
    let b8 = sb.axiom("vb", Substitution::single(0, ni.clone()));
    let b1n = Formula::bx(0, Formula::imp(Formula::bx(0, ni.clone()), ni.clone()));
    let h = Formula::imp(b1n.clone(), ni.clone());
    let witness = Formula::and(i.clone(), Formula::bx(0, ni.clone()));
    let c = Formula::bx(0, Formula::neg(witness.clone()));
    let t = Formula::imp(i.clone(), Formula::neg(c.clone()));
    let b9 = sb.taut(Formula::imp(
        Formula::neg(witness.clone()),
        Formula::imp(Formula::bx(0, ni.clone()), ni.clone()),
    ));
    let b10 = sb.rk(b9, 1, NecTarget::Box(0)); // C -> B1n
    let b10f = sb.formula_of(b10).clone();
    let b12 = sb.glue(
        Formula::imp(b10f, Formula::imp(h.clone(), t.clone())),
        &[b10],
    );
    let b13 = sb.rk(b12, 1, NecTarget::Box(0)); // []H -> []T
    let b8f = sb.formula_of(b8).clone();
    let b13f = sb.formula_of(b13).clone();
    let g_to_boxt = Formula::imp(g.clone(), Formula::bx(0, t.clone()));
    let b16 = sb.glue(
        Formula::imp(b8f, Formula::imp(b13f, g_to_boxt.clone())),
        &[b8, b13],
    );

    // combine: G -> []~i
    let s1 = sb.taut(Formula::imp(
        Formula::and(witness.clone(), Formula::imp(i.clone(), dia_i.clone())),
        Formula::Bot,
    ));
    let s1f = sb.formula_of(s1).clone();
    let s3 = sb.glue(
        Formula::imp(
            s1f,
            Formula::imp(
                Formula::imp(i.clone(), dia_i.clone()),
                Formula::neg(witness.clone()),
            ),
        ),
        &[s1],
    );
    let s4 = sb.rk(s3, 1, NecTarget::Box(0)); // K -> C
    let s4f = sb.formula_of(s4).clone();
    let s6 = sb.glue(
        Formula::imp(
            s4f,
            Formula::imp(Formula::and(i_to_k.clone(), t.clone()), ni.clone()),
        ),
        &[s4],
    );
    let s7 = sb.rk(s6, 2, NecTarget::Box(0));
    let s7f = sb.formula_of(s7).clone();
    let b7f = sb.formula_of(b7).clone();
    let b16f = sb.formula_of(b16).clone();
    let g_to_boxni = Formula::imp(g.clone(), Formula::bx(0, ni.clone()));
    let s11 = sb.glue(
        Formula::imp(
            s7f,
            Formula::imp(b7f, Formula::imp(b16f, g_to_boxni.clone())),
        ),
        &[s7, b7, b16],
    );

    // close off the nominal
    let l = NecessityForm::guard(g, NecessityForm::box_form(0, NecessityForm::Hole));
    sb.cov(s11, &l, 0);
    sb.finish("nominal-nonconservativity")
}

// ---------------------------------------------------------------------------
// The universal-modality derivation with the specialization rule.
// ---------------------------------------------------------------------------

fn vspec_fixture() -> Fixture {
    let mut sb = Sb::new(vb_a());
    let chi = lob_body(0, p()); // [](p -> ...) body: []([]p -> p) -> p
    let boxp_to_p = Formula::imp(Formula::bx(0, p()), p());
    let box_inner = Formula::bx(0, boxp_to_p.clone());

    let c1 = sb.taut(Formula::imp(p(), chi.clone()));
    let c2 = sb.taut(Formula::imp(p(), boxp_to_p.clone()));
    let c3 = sb.rk(c2, 1, NecTarget::Box(0)); // []p -> [](...)
    let c3f = sb.formula_of(c3).clone();
    let c5 = sb.glue(
        Formula::imp(c3f, Formula::imp(chi.clone(), boxp_to_p.clone())),
        &[c3],
    );
    let c6 = sb.rk(c5, 1, NecTarget::UBox); // Aχ -> A([]p -> p)
    let c7 = sb.axiom("a.4", Substitution::single(0, boxp_to_p.clone()));
    let c8 = sb.axiom("a.box", Substitution::single(0, boxp_to_p.clone()));
    let c9 = sb.nec(c8, NecTarget::UBox);
    let c10 = {
        let mut s = Substitution::new();
        s.insert(0, Formula::ubox(boxp_to_p.clone()));
        s.insert(1, box_inner.clone());
        sb.axiom("a.k", s)
    };
    let c11 = sb.mp(c10, c9); // AA(..) -> A[](..)
    let c7f = sb.formula_of(c7).clone();
    let c11f = sb.formula_of(c11).clone();
    let x_to_z = Formula::imp(
        Formula::ubox(boxp_to_p.clone()),
        Formula::ubox(box_inner.clone()),
    );
    let c14 = sb.glue(
        Formula::imp(c7f, Formula::imp(c11f, x_to_z.clone())),
        &[c7, c11],
    );
    let c6f = sb.formula_of(c6).clone();
    let c14f = sb.formula_of(c14).clone();
    let achi_to_abox = Formula::imp(Formula::ubox(chi.clone()), Formula::ubox(box_inner.clone()));
    let c17 = sb.glue(
        Formula::imp(c6f, Formula::imp(c14f, achi_to_abox.clone())),
        &[c6, c14],
    );
    let c18 = {
        let mut s = Substitution::new();
        s.insert(0, box_inner.clone());
        s.insert(1, p());
        sb.axiom("a.k", s)
    };
    let c17f = sb.formula_of(c17).clone();
    let c18f = sb.formula_of(c18).clone();
    let achi_to_ap = Formula::imp(Formula::ubox(chi.clone()), Formula::ubox(p()));
    let c21 = sb.glue(
        Formula::imp(c17f, Formula::imp(c18f, achi_to_ap.clone())),
        &[c17, c18],
    );
    let c22 = sb.axiom("vb", Substitution::new());
    sb.vspec(c1, c21, c22, 0);
    sb.finish("vspec-nonconservativity")
}

// ---------------------------------------------------------------------------
// Provability-logic scripts.
// ---------------------------------------------------------------------------

/// Lines deriving `[1]([0]p -> p)` and then `[1]([0]([0]p -> p) -> p)`;
/// returns the index of the latter.
fn glb_core(sb: &mut Sb) -> usize {
    let nn = Formula::neg(Formula::neg(p()));
    let d = Formula::dia(0, Formula::neg(p())); // ~[0]~~p
    let x = Formula::bx(0, nn.clone());
    let y = Formula::bx(1, d.clone());
    let z = Formula::bx(1, nn.clone());

    let l1 = sb.axiom("glb.push", Substitution::single(0, Formula::neg(p())));
    let l1f = sb.formula_of(l1).clone();
    let l3 = sb.glue(Formula::imp(l1f, Formula::or(y.clone(), x.clone())), &[l1]);
    let l4 = sb.axiom("glb.mono", Substitution::single(0, nn.clone()));
    let l3f = sb.formula_of(l3).clone();
    let l4f = sb.formula_of(l4).clone();
    let l7 = sb.glue(
        Formula::imp(l3f, Formula::imp(l4f, Formula::or(y.clone(), z.clone()))),
        &[l3, l4],
    );

    let a_or = Formula::or(d.clone(), nn.clone());
    let l13 = sb.taut(Formula::imp(d.clone(), a_or.clone()));
    let l14 = sb.rk(l13, 1, NecTarget::Box(1));
    let l15 = sb.taut(Formula::imp(nn.clone(), a_or.clone()));
    let l16 = sb.rk(l15, 1, NecTarget::Box(1));
    let w = Formula::bx(1, a_or.clone());
    let l7f = sb.formula_of(l7).clone();
    let l14f = sb.formula_of(l14).clone();
    let l16f = sb.formula_of(l16).clone();
    let l20 = sb.glue(
        Formula::imp(l7f, Formula::imp(l14f, Formula::imp(l16f, w.clone()))),
        &[l7, l14, l16],
    );

    let l8 = sb.taut(Formula::imp(p(), nn.clone()));
    let l9 = sb.rk(l8, 1, NecTarget::Box(0)); // [0]p -> [0]~~p
    let l10 = sb.nec(l9, NecTarget::Box(1));
    let inner_target = Formula::imp(Formula::bx(0, p()), p());
    let l11 = sb.taut(Formula::imp(
        Formula::and(a_or.clone(), Formula::imp(Formula::bx(0, p()), x.clone())),
        inner_target.clone(),
    ));
    let l12 = sb.rk(l11, 2, NecTarget::Box(1));
    let u = Formula::bx(1, inner_target.clone());
    let l12f = sb.formula_of(l12).clone();
    let l10f = sb.formula_of(l10).clone();
    let box1_lob_base = sb.glue(
        Formula::imp(l12f, Formula::imp(w.clone(), Formula::imp(l10f, u.clone()))),
        &[l12, l20, l10],
    );

    // now [1]([0]([0]p -> p) -> p)
    let l25 = sb.axiom("lob.0", Substitution::new());
    let l26 = sb.nec(l25, NecTarget::Box(1));
    let chi0 = lob_body(0, p());
    let l27 = sb.taut(Formula::imp(
        Formula::and(
            Formula::imp(Formula::bx(0, inner_target.clone()), Formula::bx(0, p())),
            inner_target.clone(),
        ),
        chi0.clone(),
    ));
    let l28 = sb.rk(l27, 2, NecTarget::Box(1));
    let l28f = sb.formula_of(l28).clone();
    let l26f = sb.formula_of(l26).clone();
    let final_f = Formula::bx(1, chi0);
    sb.glue(
        Formula::imp(l28f, Formula::imp(l26f, Formula::imp(u.clone(), final_f))),
        &[l28, l26, box1_lob_base],
    )
}

fn glb_box1_fixture() -> Fixture {
    let mut sb = Sb::new(glb());
    // stop after the first theorem
    let nn = Formula::neg(Formula::neg(p()));
    let d = Formula::dia(0, Formula::neg(p()));
    let x = Formula::bx(0, nn.clone());
    let y = Formula::bx(1, d.clone());
    let z = Formula::bx(1, nn.clone());

    let l1 = sb.axiom("glb.push", Substitution::single(0, Formula::neg(p())));
    let l1f = sb.formula_of(l1).clone();
    let l3 = sb.glue(Formula::imp(l1f, Formula::or(y.clone(), x.clone())), &[l1]);
    let l4 = sb.axiom("glb.mono", Substitution::single(0, nn.clone()));
    let l3f = sb.formula_of(l3).clone();
    let l4f = sb.formula_of(l4).clone();
    let l7 = sb.glue(
        Formula::imp(l3f, Formula::imp(l4f, Formula::or(y.clone(), z.clone()))),
        &[l3, l4],
    );

    let a_or = Formula::or(d.clone(), nn.clone());
    let l13 = sb.taut(Formula::imp(d.clone(), a_or.clone()));
    let l14 = sb.rk(l13, 1, NecTarget::Box(1));
    let l15 = sb.taut(Formula::imp(nn.clone(), a_or.clone()));
    let l16 = sb.rk(l15, 1, NecTarget::Box(1));
    let w = Formula::bx(1, a_or.clone());
    let l7f = sb.formula_of(l7).clone();
    let l14f = sb.formula_of(l14).clone();
    let l16f = sb.formula_of(l16).clone();
    let l20 = sb.glue(
        Formula::imp(l7f, Formula::imp(l14f, Formula::imp(l16f, w.clone()))),
        &[l7, l14, l16],
    );

    let l8 = sb.taut(Formula::imp(p(), nn.clone()));
    let l9 = sb.rk(l8, 1, NecTarget::Box(0));
    let l10 = sb.nec(l9, NecTarget::Box(1));
    let inner_target = Formula::imp(Formula::bx(0, p()), p());
    let l11 = sb.taut(Formula::imp(
        Formula::and(a_or.clone(), Formula::imp(Formula::bx(0, p()), x.clone())),
        inner_target.clone(),
    ));
    let l12 = sb.rk(l11, 2, NecTarget::Box(1));
    let u = Formula::bx(1, inner_target);
    let l12f = sb.formula_of(l12).clone();
    let l10f = sb.formula_of(l10).clone();
    sb.glue(
        Formula::imp(l12f, Formula::imp(w.clone(), Formula::imp(l10f, u))),
        &[l12, l20, l10],
    );
    sb.finish("glb-box1-reflection")
}

fn glb_box1_lob_fixture() -> Fixture {
    let mut sb = Sb::new(glb());
    glb_core(&mut sb);
    sb.finish("glb-box1-lob-body")
}

/// The plain-K theorem `[.0]χ(p) -> p` for the fixed-point body χ.
fn k_boxdot_fixture() -> Fixture {
    let mut sb = Sb::new(k(1));
    boxdot_core(&mut sb, 0);
    sb.finish("k-boxdot-reflection")
}

/// Lines deriving `(χ & [i]χ) -> p` for `χ = [i]([i]p -> p) -> p`; returns
/// the final index.
fn boxdot_core(sb: &mut Sb, i: u32) -> usize {
    let chi = lob_body(i, p());
    let boxp_to_p = Formula::imp(Formula::bx(i, p()), p());

    let m1 = sb.taut(Formula::imp(p(), boxp_to_p.clone()));
    let m2 = sb.rk(m1, 1, NecTarget::Box(i)); // [i]p -> B
    let m2f = sb.formula_of(m2).clone();
    let m4 = sb.glue(
        Formula::imp(m2f, Formula::imp(chi.clone(), boxp_to_p.clone())),
        &[m2],
    );
    let m5 = sb.rk(m4, 1, NecTarget::Box(i)); // [i]χ -> [i](...) = [i]χ -> B
    let m5f = sb.formula_of(m5).clone();
    let target = Formula::imp(Formula::and(chi.clone(), Formula::bx(i, chi.clone())), p());
    sb.glue(Formula::imp(m5f, target), &[m5])
}

fn glb_vmod_fixture() -> Fixture {
    let mut sb = Sb::new(glb_vmod());
    let box1_chi = glb_core(&mut sb);
    let chi0 = lob_body(0, p());
    let n1 = sb.taut(Formula::imp(p(), chi0.clone()));
    let n8 = boxdot_core(&mut sb, 0);
    let box1_chi_f = sb.formula_of(box1_chi).clone();
    let n10 = sb.glue(
        Formula::imp(box1_chi_f.clone(), Formula::imp(Formula::Top, box1_chi_f)),
        &[box1_chi],
    );
    let n11 = sb.vmod(n1, n8, n10, 0);
    let n12 = sb.taut(Formula::Top);
    sb.mp(n11, n12);
    sb.finish("glb-vmod-collapse")
}

// ---------------------------------------------------------------------------
// The tense admissibility derivation of the modal additivity rule: its
// three premises, instantiated at the backward witness, yield the rule's
// conclusion using residuation only.
// ---------------------------------------------------------------------------

fn tense_admissibility_fixture() -> Fixture {
    let mut calc = vb_t();
    calc.name = "vb.t+vmod-premises".into();
    let chi = lob_body(0, p());
    let g = guard();
    calc.premises = vec![
        Formula::imp(p(), chi.clone()),
        Formula::imp(Formula::and(chi.clone(), Formula::bx(0, chi.clone())), p()),
        Formula::imp(g.clone(), Formula::bx(0, chi.clone())),
    ];

    let mut sb = Sb::new(calc);
    // w := [~0]~α, the substitution target for p
    let w = Formula::conv_box(0, Formula::neg(g.clone()));
    let sigma = Substitution::single(0, w.clone());
    let chi_w = chi.substitute(&sigma);
    let x = Formula::and(chi_w.clone(), Formula::bx(0, chi_w.clone()));

    let p2 = sb.premise(Formula::imp(
        Formula::and(chi.clone(), Formula::bx(0, chi.clone())),
        p(),
    ));
    let d1 = sb.us(p2, sigma.clone()); // [.0]χ(w) -> w
    let d2 = sb.res(d1, true); // <0>[.0]χ(w) -> ~α
    let d2f = sb.formula_of(d2).clone();
    let d3 = sb.glue(
        Formula::imp(
            d2f,
            Formula::imp(g.clone(), Formula::bx(0, Formula::neg(x.clone()))),
        ),
        &[d2],
    );

    let p3 = sb.premise(Formula::imp(g.clone(), Formula::bx(0, chi.clone())));
    let d4 = sb.us(p3, sigma.clone()); // α -> [0]χ(w)

    // α -> [0]<0>~χ(w), with the double-negation bridge carried inside
    let nn_chi = Formula::neg(Formula::neg(chi_w.clone()));
    let bridge = sb.taut(Formula::imp(nn_chi.clone(), chi_w.clone()));
    let bridge_boxed = sb.rk(bridge, 1, NecTarget::Box(0));
    let bridge_nec = sb.nec(bridge_boxed, NecTarget::Box(0));
    let dia_not_chi = Formula::dia(0, Formula::neg(chi_w.clone()));
    let inner = sb.taut(Formula::imp(
        Formula::and(
            Formula::and(Formula::neg(x.clone()), chi_w.clone()),
            Formula::imp(
                Formula::bx(0, nn_chi.clone()),
                Formula::bx(0, chi_w.clone()),
            ),
        ),
        dia_not_chi.clone(),
    ));
    let inner_boxed = sb.rk(inner, 3, NecTarget::Box(0));
    let d3f = sb.formula_of(d3).clone();
    let d4f = sb.formula_of(d4).clone();
    let inner_boxed_f = sb.formula_of(inner_boxed).clone();
    let bridge_nec_f = sb.formula_of(bridge_nec).clone();
    let d5_target = Formula::imp(g.clone(), Formula::bx(0, dia_not_chi.clone()));
    let d5 = sb.glue(
        Formula::imp(
            inner_boxed_f,
            Formula::imp(
                d3f,
                Formula::imp(d4f, Formula::imp(bridge_nec_f, d5_target.clone())),
            ),
        ),
        &[inner_boxed, d3, d4, bridge_nec],
    );

    let d6 = sb.res(d4, true); // <~0>α -> χ(w)
    let p1 = sb.premise(Formula::imp(p(), chi.clone()));
    let p1w = sb.us(p1, sigma); // w -> χ(w)
    let p1wf = sb.formula_of(p1w).clone();
    let d7 = sb.glue(
        Formula::imp(
            p1wf,
            Formula::imp(Formula::neg(chi_w.clone()), Formula::neg(w.clone())),
        ),
        &[p1w],
    );
    let d6f = sb.formula_of(d6).clone();
    let d7f = sb.formula_of(d7).clone();
    let d8 = sb.glue(
        Formula::imp(
            d7f,
            Formula::imp(d6f, Formula::imp(Formula::neg(chi_w.clone()), Formula::Bot)),
        ),
        &[d7, d6],
    );

    // <0>~χ(w) -> bot
    let d8f = sb.formula_of(d8).clone();
    let d9a = sb.glue(
        Formula::imp(
            d8f,
            Formula::imp(
                Formula::neg(Formula::Bot),
                Formula::neg(Formula::neg(chi_w.clone())),
            ),
        ),
        &[d8],
    );
    let d9b = sb.rk(d9a, 1, NecTarget::Box(0));
    let d9c = sb.taut(Formula::neg(Formula::Bot));
    let d9d = sb.nec(d9c, NecTarget::Box(0));
    let d9e = sb.mp(d9b, d9d); // [0]~~χ(w)
    let d9ef = sb.formula_of(d9e).clone();
    let d9 = sb.glue(
        Formula::imp(d9ef, Formula::imp(dia_not_chi.clone(), Formula::Bot)),
        &[d9e],
    );
    let d10a = sb.rk(d9, 1, NecTarget::Box(0));
    let d5f = sb.formula_of(d5).clone();
    let d10af = sb.formula_of(d10a).clone();
    sb.glue(
        Formula::imp(
            d5f,
            Formula::imp(d10af, Formula::imp(g.clone(), Formula::bx(0, Formula::Bot))),
        ),
        &[d5, d10a],
    );
    sb.finish("tense-admissibility-of-vmod")
}

/// The shipped corpus.
pub fn fixture_corpus() -> Vec<Fixture> {
    vec![
        tense_fixture(),
        nominal_fixture(),
        vspec_fixture(),
        glb_box1_fixture(),
        glb_box1_lob_fixture(),
        k_boxdot_fixture(),
        glb_vmod_fixture(),
        tense_admissibility_fixture(),
    ]
}
