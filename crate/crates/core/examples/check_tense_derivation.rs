//! The tense route to non-conservativity: residuation turns the guarded
//! axiom into the boxed-bottom collapse formula, which the decision
//! procedure confirms lies outside the base logic.
//!
//! ```bash
//! cargo run --example check_tense_derivation
//! ```

use vbao::decision::in_id;
use vbao::proof::{check_script, fixture_corpus, print_script};

fn main() -> anyhow::Result<()> {
    let fx = fixture_corpus()
        .into_iter()
        .find(|f| f.name == "tense-nonconservativity")
        .expect("fixture");
    println!("calculus: {}", fx.calculus.name);
    println!("{}", print_script(&fx.script));
    println!("checker: {:?}", check_script(&fx.calculus, &fx.script));
    println!(
        "conclusion {} in the base logic: {}",
        fx.expected_final,
        in_id(&fx.expected_final)?
    );
    Ok(())
}
