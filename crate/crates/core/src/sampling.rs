//! Seeded random generators for formulas and admissible sets. Used by the
//! property suites, the runnable examples and the reproduction targets; all
//! consumers pass explicit seeds so runs are deterministic.

use rand::Rng;

use crate::cofin::{AdmSet, FrameFamily, PointId};
use crate::formula::Formula;

/// Which connectives the generator may produce.
#[derive(Debug, Clone, Copy)]
pub struct FormulaProfile {
    pub max_depth: usize,
    pub num_vars: u32,
    /// Box indices to draw from (use `EMOD` to include the e-modality).
    pub modalities: &'static [u32],
    pub allow_conv: bool,
    pub allow_ubox: bool,
    pub num_nominals: u32,
}

impl FormulaProfile {
    /// Plain unimodal formulas, the profile of the decision-procedure corpus.
    pub fn unimodal(max_depth: usize, num_vars: u32) -> Self {
        FormulaProfile {
            max_depth,
            num_vars,
            modalities: &[0],
            allow_conv: false,
            allow_ubox: false,
            num_nominals: 0,
        }
    }

    /// Everything the grammar offers; used by the parser round-trip suite.
    pub fn full(max_depth: usize, num_vars: u32) -> Self {
        FormulaProfile {
            max_depth,
            num_vars,
            modalities: &[0, 1, 2, crate::formula::EMOD],
            allow_conv: true,
            allow_ubox: true,
            num_nominals: 2,
        }
    }
}

/// Draws one random formula.
pub fn random_formula(rng: &mut impl Rng, profile: &FormulaProfile) -> Formula {
    gen_formula(rng, profile, profile.max_depth)
}

fn gen_formula(rng: &mut impl Rng, p: &FormulaProfile, depth: usize) -> Formula {
    let atom = depth == 0 || rng.gen_ratio(1, 4);
    if atom {
        let mut choices: Vec<u8> = vec![1, 2];
        if p.num_vars > 0 {
            choices.push(0);
            choices.push(0);
        }
        if p.num_nominals > 0 {
            choices.push(3);
        }
        match choices[rng.gen_range(0..choices.len())] {
            0 => Formula::var(rng.gen_range(0..p.num_vars)),
            1 => Formula::Bot,
            2 => Formula::Top,
            _ => Formula::nom(rng.gen_range(0..p.num_nominals)),
        }
    } else {
        let mut ops: Vec<u8> = vec![0, 1, 2, 3, 4, 5];
        if p.allow_conv {
            ops.push(6);
        }
        if p.allow_ubox {
            ops.push(7);
        }
        // diamonds and dotted sugar exercise the printer's sugared paths
        ops.push(8);
        ops.push(9);
        let op = ops[rng.gen_range(0..ops.len())];
        match op {
            0 => Formula::neg(gen_formula(rng, p, depth - 1)),
            1 => Formula::and(
                gen_formula(rng, p, depth - 1),
                gen_formula(rng, p, depth - 1),
            ),
            2 => Formula::or(
                gen_formula(rng, p, depth - 1),
                gen_formula(rng, p, depth - 1),
            ),
            3 => Formula::imp(
                gen_formula(rng, p, depth - 1),
                gen_formula(rng, p, depth - 1),
            ),
            4 => Formula::iff(
                gen_formula(rng, p, depth - 1),
                gen_formula(rng, p, depth - 1),
            ),
            5 => {
                let i = p.modalities[rng.gen_range(0..p.modalities.len())];
                Formula::bx(i, gen_formula(rng, p, depth - 1))
            }
            6 => Formula::conv_box(0, gen_formula(rng, p, depth - 1)),
            7 => Formula::ubox(gen_formula(rng, p, depth - 1)),
            8 => {
                let i = p.modalities[rng.gen_range(0..p.modalities.len())];
                Formula::dia(i, gen_formula(rng, p, depth - 1))
            }
            _ => {
                let i = p.modalities[rng.gen_range(0..p.modalities.len())];
                if rng.gen_bool(0.5) {
                    Formula::boxdot(i, gen_formula(rng, p, depth - 1))
                } else {
                    Formula::diadot(i, gen_formula(rng, p, depth - 1))
                }
            }
        }
    }
}

/// Draws a random admissible set of the family with support indices below
/// `bound`.
pub fn random_admset(rng: &mut impl Rng, family: &FrameFamily, bound: u64) -> AdmSet {
    let mut support = std::collections::BTreeSet::new();
    for h in family.head_points() {
        if h != family.limit_point() && rng.gen_bool(0.3) {
            support.insert(h);
        }
    }
    for n in 0..=bound {
        if rng.gen_bool(0.4) {
            support.insert(PointId::Nat(n));
        }
    }
    if rng.gen_bool(0.5) {
        AdmSet::finite(support)
    } else {
        AdmSet::cofinite(support)
    }
}
