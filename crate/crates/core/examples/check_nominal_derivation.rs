//! The nominal route to non-conservativity: the box-iteration schema plus
//! closing off a fresh nominal derive the collapse formula.
//!
//! ```bash
//! cargo run --example check_nominal_derivation
//! ```

use vbao::proof::{check_script, fixture_corpus, print_script};

fn main() {
    for name in [
        "nominal-nonconservativity",
        "vspec-nonconservativity",
        "tense-admissibility-of-vmod",
    ] {
        let fx = fixture_corpus()
            .into_iter()
            .find(|f| f.name == name)
            .expect("fixture");
        println!(
            "=== {name} ({} lines over {}) => {:?}",
            fx.script.lines.len(),
            fx.calculus.name,
            check_script(&fx.calculus, &fx.script)
        );
        // the closing steps show the rule applications
        let tail: Vec<String> = print_script(&fx.script)
            .lines()
            .rev()
            .take(3)
            .map(str::to_string)
            .collect();
        for line in tail.iter().rev() {
            println!("  {line}");
        }
        println!();
    }
}
