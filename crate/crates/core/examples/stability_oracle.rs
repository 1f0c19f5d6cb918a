//! The decision procedure against its stability oracle: plain
//! satisfiability search on growing truncations with pattern-constrained
//! valuations must agree with the goodness-based collapse search.
//!
//! ```bash
//! cargo run --example stability_oracle
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use vbao::decision::{good_sat, truncation_sat};
use vbao::formula::Formula;
use vbao::sampling::{random_formula, FormulaProfile};

fn main() -> anyhow::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let profile = FormulaProfile::unimodal(4, 2);
    let mut shown = 0;
    while shown < 8 {
        let f = random_formula(&mut rng, &profile);
        let l = f.l() as u64;
        if l > 30 {
            continue;
        }
        shown += 1;
        let sat = good_sat(&f)?.is_some();
        let oracle: Vec<bool> = [0u64, 2, 5]
            .iter()
            .map(|extra| truncation_sat(&f, l + 3 + extra).unwrap())
            .collect();
        println!("l={l:2}  sat={sat:5}  truncations(l+3,l+5,l+8)={oracle:?}  {f}");
        assert!(oracle.iter().all(|o| *o == sat), "oracle disagreement");
    }

    // the negated guarded axiom is the interesting case: satisfiable on a
    // plain finite collapse under an inadmissible valuation, but neither
    // good-satisfiable nor pattern-satisfiable at any size
    let neg_axiom = Formula::neg(vbao::proof::vb_axiom());
    let l = neg_axiom.l() as u64;
    println!(
        "\nnegated axiom: good_sat={:?}, truncations={:?}",
        good_sat(&neg_axiom)?.is_some(),
        [0u64, 2, 5]
            .iter()
            .map(|e| truncation_sat(&neg_axiom, l + 3 + e).unwrap())
            .collect::<Vec<_>>()
    );
    Ok(())
}
