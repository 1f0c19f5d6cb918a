//! Exact evaluation over the infinite fin/cofin frame: admissible sets,
//! the algebra operations, and formula evaluation by threshold analysis.
//!
//! ```bash
//! cargo run --example evaluate_over_the_frame
//! ```

use vbao::cofin::{eval, vb, vbe, AdmSet, PointId, Valuation};
use vbao::formula::parse;

fn main() -> anyhow::Result<()> {
    let fam = vb();

    // the operator on a finite set: everything above 3, plus the limit
    let x = AdmSet::finite_of([PointId::Nat(3)]);
    println!("<>{x} = {}", fam.adm_dia(0, &x)?);
    println!("<>top = {}", fam.adm_dia(0, &AdmSet::top())?);

    // joins across the finite/cofinite boundary stay in the algebra
    let a = AdmSet::finite_of([PointId::Nat(1)]);
    let b = AdmSet::cofinite_of([PointId::Nat(1), PointId::Nat(2)]);
    println!("{a} v {b} = {}", fam.adm_join(&a, &b));

    // the guard formula is valuation independent; the dead end 0 sits in
    // every box set, so its value is {0, inf+1}
    let guard = parse("[]<>top")?;
    println!("guard value = {}", eval(&fam, &Valuation::new(), &guard)?);

    // a variable under a cofinite valuation
    let val = Valuation::single(0, AdmSet::cofinite_of([PointId::Nat(5)]));
    println!(
        "[[ []p0 ]] with p0 = co{{5}}: {}",
        eval(&fam, &val, &parse("[]p0")?)?
    );

    // the e-modality over the extended family is global
    let fam = vbe();
    let probe = parse("<e>([]<>top & <>top)")?;
    println!(
        "[[ {probe} ]] over the e-extension = {}",
        eval(&fam, &Valuation::new(), &probe)?
    );
    Ok(())
}
