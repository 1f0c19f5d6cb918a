//! Tour of the formula grammar: parsing, sugar expansion, precedence-aware
//! printing, and the standard translation into first-order syntax.
//!
//! ```bash
//! cargo run --example parse_and_print
//! ```

use vbao::formula::{parse, standard_translation};

fn main() -> anyhow::Result<()> {
    for text in [
        "[]<>top -> []([]([]p0 -> p0) -> p0)",
        "[.0]p0 -> <.1>p1",
        "<~0>[]<>top",
        "A (p0 -> p1) & E ~p0",
        "[e](p0 | i0)",
        "p0 & p1 -> p2 <-> p2",
    ] {
        let f = parse(text)?;
        println!("{text:45} => {f}");
    }

    println!();
    for text in ["p0", "[]bot", "[](p0 -> <>p0)"] {
        let f = parse(text)?;
        println!("ST_x({text}) = {}", standard_translation(&f, "x")?);
    }

    // parse errors carry a byte offset and the accepted alternatives
    let err = parse("p0 & q").unwrap_err();
    println!("\nexpected failure: {err}");
    Ok(())
}
