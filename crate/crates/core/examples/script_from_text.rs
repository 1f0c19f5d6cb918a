//! Checking a proof script written in the textual format, including a
//! deliberately broken variant to show the rejection diagnostics.
//!
//! ```bash
//! cargo run --example script_from_text
//! ```

use vbao::proof::{calculus_by_name, check_script, parse_script};

const SCRIPT: &str = "\
# normality of the box, from scratch
1. [](p0 -> p1) -> ([]p0 -> []p1) ; AX(k.0)
2. bot -> top ; TAUT
3. [](bot -> top) ; NEC(2, [])
4. [](bot -> top) -> ([]bot -> []top) ; US(1; p0 := bot, p1 := top)
5. []bot -> []top ; MP(4, 3)
";

fn main() -> anyhow::Result<()> {
    let calc = calculus_by_name("k").expect("builtin");
    let script = parse_script(SCRIPT)?;
    println!("well-formed script: {:?}", check_script(&calc, &script));

    // pointing modus ponens at the wrong line is caught with a reason code
    let broken = SCRIPT.replace("MP(4, 3)", "MP(4, 2)");
    let script = parse_script(&broken)?;
    println!("broken script:      {:?}", check_script(&calc, &script));
    Ok(())
}
