//! Defining a calculus programmatically (or from JSON) and checking a
//! script against it: a reflexive monomodal logic with the reflection
//! axiom.
//!
//! ```bash
//! cargo run --example custom_calculus
//! ```

use vbao::proof::{check_script, parse_script, CalculusSpec};

const CALCULUS: &str = r#"{
  "name": "kt",
  "modalities": [0],
  "axioms": [
    ["k.0", "[](p0 -> p1) -> ([]p0 -> []p1)"],
    ["t", "[]p0 -> p0"]
  ],
  "rules": ["taut", "axiom_inst", "mp", "nec", "us", "rk"]
}"#;

const SCRIPT: &str = "\
# the diamond reflection dual to the t axiom
1. []~p0 -> ~p0 ; US(2; p0 := ~p0)
2. []p0 -> p0 ; AX(t)
3. p0 -> <>p0 ; TAUT
";

fn main() -> anyhow::Result<()> {
    let calc: CalculusSpec = serde_json::from_str(CALCULUS)?;
    println!("calculus {} with axioms:", calc.name);
    for (name, schema) in &calc.axioms {
        println!("  {name}: {schema}");
    }

    // line 1 references line 2 before it exists, and line 3 is not a
    // skeleton tautology; fix both and check again
    let bad = parse_script(SCRIPT)?;
    println!("\nfirst attempt: {:?}", check_script(&calc, &bad));

    let good = parse_script(
        "\
1. []p0 -> p0 ; AX(t)
2. []~p0 -> ~p0 ; US(1; p0 := ~p0)
3. ([]~p0 -> ~p0) -> (p0 -> <>p0) ; TAUT
4. p0 -> <>p0 ; MP(3, 2)
",
    )?;
    println!("fixed attempt: {:?}", check_script(&calc, &good));
    Ok(())
}
