//! The doubled-layer frame: variable-free name formulas pick out the
//! layers, and the box-case formula distinguishes doubled layers from
//! single ones.
//!
//! ```bash
//! cargo run --example doubled_layer_names
//! ```

use vbao::additivity::candidates;
use vbao::cofin::{
    eval, eval_name_a, eval_name_c, name_a, name_c, vb_i, AdmSet, PointId, Valuation,
};
use vbao::formula::Formula;

fn main() -> anyhow::Result<()> {
    let fam = vb_i([2, 4, 5])?;

    for k in 0..=6u64 {
        println!("a_{k} name evaluates to {}", eval_name_a(&fam, k)?);
    }
    println!("c name evaluates to {}", eval_name_c(&fam)?);
    println!("(name formula for layer 2: {})", name_a(2));
    println!("(name formula for the bottom point: {})", name_c());

    // box-case formula over a layer: valid exactly when the layer is not
    // doubled
    let distinguish = |i: u64| {
        let ai = name_a(i);
        Formula::or(
            Formula::bx(0, Formula::imp(ai.clone(), Formula::var(0))),
            Formula::bx(0, Formula::imp(ai, Formula::neg(Formula::var(0)))),
        )
    };
    for i in [2u64, 3, 4] {
        let counter = Valuation::single(0, AdmSet::singleton(PointId::Nat(i)));
        let value = eval(&fam, &counter, &distinguish(i))?;
        println!(
            "layer {i}: box-case formula under p = {{a_{i}}} evaluates to {value}{}",
            if value.is_top() {
                " (not refuted)"
            } else {
                " (refuted)"
            }
        );
    }

    // bounded search confirms no valuation refutes the undoubled layer 3
    let f3 = distinguish(3);
    let refuted = candidates(&fam, 7).into_iter().any(|set| {
        !eval(&fam, &Valuation::single(0, set), &f3)
            .unwrap()
            .is_top()
    });
    println!("bounded valuation search refutes layer 3: {refuted}");
    Ok(())
}
