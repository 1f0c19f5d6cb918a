//! The incompatibility report: when every sampled fixed-point premise
//! holds but the boxed-bottom conclusion fails, no completely additive
//! reading of the second operator exists.
//!
//! ```bash
//! cargo run --example incompatibility_report
//! ```

use vbao::additivity::{default_samples, theorem_great_report, OperatorContext};
use vbao::cofin::{eval, eval_name_c, name_a, vb, vb_i, Valuation};
use vbao::formula::{parse, Formula};

fn main() -> anyhow::Result<()> {
    // over the base family with both operators the frame box and
    // a := the guard's value
    let fam = vb();
    let a = eval(&fam, &Valuation::new(), &parse("[]<>top")?)?;
    let report = theorem_great_report(
        &fam,
        &OperatorContext::modality(0),
        &OperatorContext::modality(0),
        &a,
        &default_samples(&fam),
    )?;
    println!("base family, a = {}:", report.a);
    println!(
        "  premises hold on {}/{} samples; conclusion a <= []bot: {}",
        report.premise_results.iter().filter(|(_, ok)| *ok).count(),
        report.premise_results.len(),
        report.conclusion_holds
    );
    println!("  verdict: {}", report.verdict);

    // over the doubled-layer family with a term-defined first operator
    // box0 φ := [](<.0>a_1 -> φ) and a := the value of the c-name
    let fam = vb_i([2])?;
    let hole = 9u32;
    let template = Formula::bx(
        0,
        Formula::imp(Formula::diadot(0, name_a(1)), Formula::var(hole)),
    );
    let box0 = OperatorContext::defined(template, hole)?;
    let a = eval_name_c(&fam)?;
    let report = theorem_great_report(
        &fam,
        &box0,
        &OperatorContext::modality(0),
        &a,
        &default_samples(&fam),
    )?;
    println!("\ndoubled-layer family, a = {}:", report.a);
    println!(
        "  premises hold on {}/{} samples; conclusion holds: {}",
        report.premise_results.iter().filter(|(_, ok)| *ok).count(),
        report.premise_results.len(),
        report.conclusion_holds
    );
    println!("  verdict: {}", report.verdict);
    Ok(())
}
