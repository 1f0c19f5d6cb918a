//! Satisfiability witnesses from the collapse procedure: a good valuation
//! over the finite collapse, re-checked by the finite model checker and
//! serialized as JSON.
//!
//! ```bash
//! cargo run --example collapse_witness
//! ```

use vbao::cofin::vbe;
use vbao::decision::{collapse, good_sat};
use vbao::formula::parse;

fn main() -> anyhow::Result<()> {
    let f = parse("[]<>top & ~[]bot")?;
    println!("formula: {f}  (l = {})", f.l());

    let witness = good_sat(&f)?.expect("satisfiable at the top sister point");
    println!("witness world: {}", witness.witness_world);
    println!("collapse size: {} points", witness.collapse_m + 3);
    println!("{}", serde_json::to_string_pretty(&witness)?);

    // the collapse itself is an ordinary finite general frame
    let c = collapse(&vbe(), 2)?;
    println!("\n2-collapse worlds: {:?}", c.frame.worlds);
    println!(
        "base relation: {:?}",
        c.frame.relations["0"]
            .iter()
            .map(|(a, b)| format!("{a}->{b}"))
            .collect::<Vec<_>>()
    );
    Ok(())
}
