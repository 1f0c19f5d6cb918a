//! The variable-free name formulas of the doubled-layer family: `α_k`,
//! `a̲_k`, `γ` and `c̲`. Under any valuation, `a̲_k` evaluates to the layer
//! `ā_k` and `c̲` to `{c}`.

use super::{eval, AdmSet, CofinError, FrameFamily, Valuation};
use crate::formula::Formula;

/// `α_0(p) = p`, `α_1(p) = <>α_0(p) & [][]~α_0(p)`,
/// `α_{k+2}(p) = <>α_{k+1}(p) & [][]~α_{k+1}(p) & <>α_1(p)`.
pub fn alpha(k: u64, p: &Formula) -> Formula {
    match k {
        0 => p.clone(),
        1 => {
            let a0 = alpha(0, p);
            Formula::and(
                Formula::dia(0, a0.clone()),
                Formula::bx(0, Formula::bx(0, Formula::neg(a0))),
            )
        }
        _ => {
            let prev = alpha(k - 1, p);
            Formula::and(
                Formula::and(
                    Formula::dia(0, prev.clone()),
                    Formula::bx(0, Formula::bx(0, Formula::neg(prev))),
                ),
                Formula::dia(0, alpha(1, p)),
            )
        }
    }
}

/// `a̲_k = α_k([]bot)`.
pub fn name_a(k: u64) -> Formula {
    alpha(k, &Formula::bx(0, Formula::Bot))
}

/// `γ(p) = <><>α_1(p) & ~<>α_1(p)`.
pub fn gamma(p: &Formula) -> Formula {
    let a1 = alpha(1, p);
    Formula::and(
        Formula::dia(0, Formula::dia(0, a1.clone())),
        Formula::neg(Formula::dia(0, a1)),
    )
}

/// `c̲ = γ([]bot)`.
pub fn name_c() -> Formula {
    gamma(&Formula::bx(0, Formula::Bot))
}

/// Evaluates `a̲_k` over a doubled-layer family; the formulas are variable
/// free, so no valuation is needed.
pub fn eval_name_a(family: &FrameFamily, k: u64) -> Result<AdmSet, CofinError> {
    if !matches!(family, FrameFamily::VbI { .. }) {
        return Err(CofinError::FamilyMismatch);
    }
    eval(family, &Valuation::new(), &name_a(k))
}

/// Evaluates `c̲` over a doubled-layer family.
pub fn eval_name_c(family: &FrameFamily) -> Result<AdmSet, CofinError> {
    if !matches!(family, FrameFamily::VbI { .. }) {
        return Err(CofinError::FamilyMismatch);
    }
    eval(family, &Valuation::new(), &name_c())
}
