//! The provability-logic scripts: the reflection theorems for the second
//! box, the plain-K dotted-box theorem, and the additivity-rule
//! application collapsing the second box.
//!
//! ```bash
//! cargo run --example check_glb_derivations
//! ```

use vbao::proof::{check_script, fixture_corpus};

fn main() {
    for name in [
        "glb-box1-reflection",
        "glb-box1-lob-body",
        "k-boxdot-reflection",
        "glb-vmod-collapse",
    ] {
        let fx = fixture_corpus()
            .into_iter()
            .find(|f| f.name == name)
            .expect("fixture");
        let outcome = check_script(&fx.calculus, &fx.script);
        println!(
            "{name:24} over {:9} [{:3} lines]  final: {:45} => {:?}",
            fx.calculus.name,
            fx.script.lines.len(),
            fx.expected_final.to_string(),
            outcome
        );
    }
}
