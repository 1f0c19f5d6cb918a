//! The collapse decision procedure: membership in the logic of the base
//! frame and of its e-extension.
//!
//! ```bash
//! cargo run --example decide_membership
//! ```

use vbao::decision::{in_id, in_ide};
use vbao::formula::parse;
use vbao::proof::vb_axiom;

fn main() -> anyhow::Result<()> {
    let axiom = vb_axiom();
    println!("{axiom}\n  in ID: {}", in_id(&axiom)?);

    let collapse_formula = parse("[]<>top -> []bot")?;
    println!("{collapse_formula}\n  in ID: {}", in_id(&collapse_formula)?);

    // together those two facts witness Kripke incompleteness: every Kripke
    // frame validating the first validates the second

    let probe = parse("<e>([]<>top & <>top)")?;
    println!("{probe}\n  in IDe: {}", in_ide(&probe)?);

    for text in ["top", "[]([]p0 -> p0) | <>top | []bot", "<>top"] {
        let f = parse(text)?;
        println!("{f}\n  in ID: {}", in_id(&f)?);
    }
    Ok(())
}
