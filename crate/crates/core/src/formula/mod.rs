//! Polymodal formula trees and the syntactic toolkit built on them:
//! parsing, printing, substitution, subformula machinery, necessity forms,
//! and the standard translation into first-order syntax.
//!
//! Boxes are primitive; diamonds, the existential modality and the dotted
//! operators are sugar expanded at construction/parse time and never appear
//! as distinct tree nodes.

mod parse;
mod print;

pub use parse::{parse, ParseError};

use std::collections::{BTreeMap, BTreeSet};

/// Modality index reserved for the `e`-modality (printed `[e]`/`<e>`).
///
/// The index is deliberately outside the range a user can write with
/// `[<N>]`, so `[e]` never collides with a numbered box.
pub const EMOD: u32 = u32::MAX;

/// A polymodal formula with indexed boxes, converse (tense) boxes, the
/// universal modality and nominals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    /// Propositional variable `p<n>`.
    Var(u32),
    /// Nominal `i<n>`; evaluated as a singleton in the intended semantics.
    Nominal(u32),
    Bot,
    Top,
    Neg(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    /// `[i]φ`.
    Box_(u32, Box<Formula>),
    /// Converse box `[~i]φ` of the tense extension.
    ConvBox(u32, Box<Formula>),
    /// Universal modality `A φ`.
    UBox(Box<Formula>),
}

use Formula::*;

impl Formula {
    pub fn var(n: u32) -> Self {
        Var(n)
    }
    pub fn nom(n: u32) -> Self {
        Nominal(n)
    }
    // an associated constructor, not a unary-minus reading
    #[allow(clippy::should_implement_trait)]
    pub fn neg(f: Formula) -> Self {
        Neg(Box::new(f))
    }
    pub fn and(a: Formula, b: Formula) -> Self {
        And(Box::new(a), Box::new(b))
    }
    pub fn or(a: Formula, b: Formula) -> Self {
        Or(Box::new(a), Box::new(b))
    }
    pub fn imp(a: Formula, b: Formula) -> Self {
        Imp(Box::new(a), Box::new(b))
    }
    pub fn iff(a: Formula, b: Formula) -> Self {
        Iff(Box::new(a), Box::new(b))
    }
    pub fn bx(i: u32, f: Formula) -> Self {
        Box_(i, Box::new(f))
    }
    pub fn conv_box(i: u32, f: Formula) -> Self {
        ConvBox(i, Box::new(f))
    }
    pub fn ubox(f: Formula) -> Self {
        UBox(Box::new(f))
    }

    /// `<i>φ`, sugar for `~[i]~φ`.
    pub fn dia(i: u32, f: Formula) -> Self {
        Self::neg(Self::bx(i, Self::neg(f)))
    }
    /// `<~i>φ`, sugar for `~[~i]~φ`.
    pub fn conv_dia(i: u32, f: Formula) -> Self {
        Self::neg(Self::conv_box(i, Self::neg(f)))
    }
    /// `E φ`, sugar for `~A~φ`.
    pub fn ex(f: Formula) -> Self {
        Self::neg(Self::ubox(Self::neg(f)))
    }
    /// `[.i]φ`, sugar for `φ & [i]φ`.
    pub fn boxdot(i: u32, f: Formula) -> Self {
        Self::and(f.clone(), Self::bx(i, f))
    }
    /// `<.i>φ`, sugar for `φ | <i>φ`.
    pub fn diadot(i: u32, f: Formula) -> Self {
        Self::or(f.clone(), Self::dia(i, f))
    }

    /// Direct children of the node.
    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Var(_) | Nominal(_) | Bot | Top => vec![],
            Neg(a) | Box_(_, a) | ConvBox(_, a) | UBox(a) => vec![a],
            And(a, b) | Or(a, b) | Imp(a, b) | Iff(a, b) => vec![a, b],
        }
    }

    /// The ordinary subformula set (including the formula itself).
    pub fn sub(&self) -> BTreeSet<Formula> {
        let mut out = BTreeSet::new();
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            if out.insert(f.clone()) {
                stack.extend(f.children());
            }
        }
        out
    }

    /// The single-negation-closed subformula set: `sub(φ)` together with
    /// `~ψ` for every `ψ ∈ sub(φ)` that is not itself a negation.
    pub fn nsub(&self) -> BTreeSet<Formula> {
        let mut out = self.sub();
        let extra: Vec<Formula> = out
            .iter()
            .filter(|f| !matches!(f, Neg(_)))
            .map(|f| Self::neg(f.clone()))
            .collect();
        out.extend(extra);
        out
    }

    /// `l(φ) = |nsub(φ)|`, the size parameter of the collapse procedure.
    pub fn l(&self) -> usize {
        self.nsub().len()
    }

    /// Maximal nesting of modalities; converse boxes and the universal
    /// modality count.
    pub fn modal_depth(&self) -> usize {
        match self {
            Var(_) | Nominal(_) | Bot | Top => 0,
            Neg(a) => a.modal_depth(),
            And(a, b) | Or(a, b) | Imp(a, b) | Iff(a, b) => a.modal_depth().max(b.modal_depth()),
            Box_(_, a) | ConvBox(_, a) | UBox(a) => 1 + a.modal_depth(),
        }
    }

    /// Indices of propositional variables occurring in the formula.
    pub fn vars(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.walk(&mut |f| {
            if let Var(n) = f {
                out.insert(*n);
            }
        });
        out
    }

    /// Indices of nominals occurring in the formula.
    pub fn nominals(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.walk(&mut |f| {
            if let Nominal(n) = f {
                out.insert(*n);
            }
        });
        out
    }

    /// Indices of boxes occurring in the formula (converse boxes report the
    /// underlying index; the universal modality is not included).
    pub fn box_indices(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.walk(&mut |f| {
            if let Box_(i, _) | ConvBox(i, _) = f {
                out.insert(*i);
            }
        });
        out
    }

    pub fn has_nominal(&self) -> bool {
        !self.nominals().is_empty()
    }
    pub fn has_conv_box(&self) -> bool {
        let mut found = false;
        self.walk(&mut |f| found |= matches!(f, ConvBox(..)));
        found
    }
    pub fn has_ubox(&self) -> bool {
        let mut found = false;
        self.walk(&mut |f| found |= matches!(f, UBox(_)));
        found
    }

    fn walk<'a>(&'a self, f: &mut impl FnMut(&'a Formula)) {
        f(self);
        match self {
            Var(_) | Nominal(_) | Bot | Top => {}
            Neg(a) | Box_(_, a) | ConvBox(_, a) | UBox(a) => a.walk(f),
            And(a, b) | Or(a, b) | Imp(a, b) | Iff(a, b) => {
                a.walk(f);
                b.walk(f);
            }
        }
    }

    /// Simultaneous substitution of formulas for propositional variables.
    /// Nominals are untouched.
    pub fn substitute(&self, sigma: &Substitution) -> Formula {
        match self {
            Var(n) => sigma.get(*n).cloned().unwrap_or_else(|| self.clone()),
            Nominal(_) | Bot | Top => self.clone(),
            Neg(a) => Self::neg(a.substitute(sigma)),
            And(a, b) => Self::and(a.substitute(sigma), b.substitute(sigma)),
            Or(a, b) => Self::or(a.substitute(sigma), b.substitute(sigma)),
            Imp(a, b) => Self::imp(a.substitute(sigma), b.substitute(sigma)),
            Iff(a, b) => Self::iff(a.substitute(sigma), b.substitute(sigma)),
            Box_(i, a) => Self::bx(*i, a.substitute(sigma)),
            ConvBox(i, a) => Self::conv_box(*i, a.substitute(sigma)),
            UBox(a) => Self::ubox(a.substitute(sigma)),
        }
    }

    /// Textual form; inverse of [`parse`].
    pub fn print(&self) -> String {
        self.to_string()
    }
}

/// A finite map from variable indices to formulas, the identity elsewhere.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Substitution(BTreeMap<u32, Formula>);

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }
    pub fn single(var: u32, f: Formula) -> Self {
        let mut m = BTreeMap::new();
        m.insert(var, f);
        Self(m)
    }
    pub fn insert(&mut self, var: u32, f: Formula) {
        self.0.insert(var, f);
    }
    pub fn get(&self, var: u32) -> Option<&Formula> {
        self.0.get(&var)
    }
    pub fn domain(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.keys().copied()
    }
    pub fn iter(&self) -> impl Iterator<Item = (u32, &Formula)> {
        self.0.iter().map(|(k, v)| (*k, v))
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<(u32, Formula)> for Substitution {
    fn from_iter<T: IntoIterator<Item = (u32, Formula)>>(iter: T) -> Self {
        Self(iter.into_iter().collect())
    }
}

// The canonical textual form round-trips exactly, so formulas cross
// serialization boundaries as strings.
impl serde::Serialize for Formula {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Formula {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map_err(serde::de::Error::custom)
    }
}

/// A formula context with a single hole, built from guards `φ -> ℓ(♮)` and
/// boxes `[i]ℓ(♮)`. Every box node of a necessity form is a principal one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NecessityForm {
    Hole,
    Guard(Formula, Box<NecessityForm>),
    BoxForm(u32, Box<NecessityForm>),
}

impl NecessityForm {
    pub fn guard(g: Formula, rest: NecessityForm) -> Self {
        NecessityForm::Guard(g, Box::new(rest))
    }
    pub fn box_form(i: u32, rest: NecessityForm) -> Self {
        NecessityForm::BoxForm(i, Box::new(rest))
    }

    /// Substitutes `φ` for the hole.
    pub fn apply(&self, f: &Formula) -> Formula {
        match self {
            NecessityForm::Hole => f.clone(),
            NecessityForm::Guard(g, rest) => Formula::imp(g.clone(), rest.apply(f)),
            NecessityForm::BoxForm(i, rest) => Formula::bx(*i, rest.apply(f)),
        }
    }

    /// Indices of the (principal) boxes along the spine.
    pub fn principal_boxes(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        let mut cur = self;
        loop {
            match cur {
                NecessityForm::Hole => return out,
                NecessityForm::Guard(_, rest) => cur = rest,
                NecessityForm::BoxForm(i, rest) => {
                    out.insert(*i);
                    cur = rest;
                }
            }
        }
    }

    /// Nominal indices occurring in the guard formulas.
    pub fn nominals(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        let mut cur = self;
        loop {
            match cur {
                NecessityForm::Hole => return out,
                NecessityForm::Guard(g, rest) => {
                    out.extend(g.nominals());
                    cur = rest;
                }
                NecessityForm::BoxForm(_, rest) => cur = rest,
            }
        }
    }

    /// Variable indices occurring in the guard formulas.
    pub fn vars(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        let mut cur = self;
        loop {
            match cur {
                NecessityForm::Hole => return out,
                NecessityForm::Guard(g, rest) => {
                    out.extend(g.vars());
                    cur = rest;
                }
                NecessityForm::BoxForm(_, rest) => cur = rest,
            }
        }
    }

    /// Recovers the unique necessity form `ℓ` with `ℓ(at_hole_a) = a` and
    /// `ℓ(at_hole_b) = b`, if one exists. The two applications must agree
    /// everywhere outside the hole, and the hole must sit on a valid
    /// guard/box spine.
    pub fn infer(
        a: &Formula,
        at_hole_a: &Formula,
        b: &Formula,
        at_hole_b: &Formula,
    ) -> Option<NecessityForm> {
        if a == at_hole_a && b == at_hole_b {
            return Some(NecessityForm::Hole);
        }
        match (a, b) {
            (Imp(ga, ra), Imp(gb, rb)) if ga == gb => {
                // A guard node; the hole must be in the consequent.
                let rest = NecessityForm::infer(ra, at_hole_a, rb, at_hole_b)?;
                Some(NecessityForm::guard((**ga).clone(), rest))
            }
            (Box_(ia, ra), Box_(ib, rb)) if ia == ib => {
                let rest = NecessityForm::infer(ra, at_hole_a, rb, at_hole_b)?;
                Some(NecessityForm::box_form(*ia, rest))
            }
            _ => None,
        }
    }
}

/// Errors from the standard translation.
#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum StError {
    #[error("standard translation does not support nominals")]
    Nominal,
    #[error("standard translation does not support the universal modality")]
    UBox,
    #[error("standard translation does not support converse boxes")]
    ConvBox,
    #[error("standard translation is unimodal; found box index {0}")]
    NonZeroBox(u32),
}

/// The standard translation `ST_x(φ)` into first-order syntax with unary
/// predicates `P<i>` and a binary relation `R`. Fresh individual variables
/// are `y0, y1, ...` in traversal order, so output is byte-stable.
pub fn standard_translation(f: &Formula, x: &str) -> Result<String, StError> {
    let mut fresh = 0u32;
    let mut out = String::new();
    st_rec(f, x, &mut fresh, 0, &mut out)?;
    Ok(out)
}

// Precedence levels for the first-order printer: 0 iff, 1 imp, 2 or, 3 and,
// 4 unary/atom. Mirrors the modal printer.
fn st_rec(
    f: &Formula,
    x: &str,
    fresh: &mut u32,
    prec: u8,
    out: &mut String,
) -> Result<(), StError> {
    let paren = |lvl: u8| lvl < prec;
    match f {
        Var(n) => out.push_str(&format!("P{n}({x})")),
        Nominal(_) => return Err(StError::Nominal),
        Bot => out.push_str("false"),
        Top => out.push_str("true"),
        Neg(a) => {
            out.push('~');
            st_rec(a, x, fresh, 4, out)?;
        }
        And(a, b) => {
            let wrap = paren(3);
            if wrap {
                out.push('(');
            }
            st_rec(a, x, fresh, 3, out)?;
            out.push_str(" & ");
            st_rec(b, x, fresh, 4, out)?;
            if wrap {
                out.push(')');
            }
        }
        Or(a, b) => {
            let wrap = paren(2);
            if wrap {
                out.push('(');
            }
            st_rec(a, x, fresh, 2, out)?;
            out.push_str(" | ");
            st_rec(b, x, fresh, 3, out)?;
            if wrap {
                out.push(')');
            }
        }
        Imp(a, b) => {
            let wrap = paren(1);
            if wrap {
                out.push('(');
            }
            st_rec(a, x, fresh, 2, out)?;
            out.push_str(" -> ");
            st_rec(b, x, fresh, 1, out)?;
            if wrap {
                out.push(')');
            }
        }
        Iff(a, b) => {
            let wrap = paren(0);
            if wrap {
                out.push('(');
            }
            st_rec(a, x, fresh, 1, out)?;
            out.push_str(" <-> ");
            st_rec(b, x, fresh, 0, out)?;
            if wrap {
                out.push(')');
            }
        }
        Box_(i, a) => {
            if *i != 0 {
                return Err(StError::NonZeroBox(*i));
            }
            let y = format!("y{fresh}");
            *fresh += 1;
            out.push_str(&format!("forall {y} (R({x},{y}) -> "));
            st_rec(a, &y, fresh, 1, out)?;
            out.push(')');
        }
        ConvBox(..) => return Err(StError::ConvBox),
        UBox(_) => return Err(StError::UBox),
    }
    Ok(())
}
