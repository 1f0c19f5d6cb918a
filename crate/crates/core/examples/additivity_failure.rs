//! Complete-additivity analysis: the first-order condition, search for its
//! failure, and the explicit witness that a diamond fails to distribute
//! over an existing join.
//!
//! ```bash
//! cargo run --example additivity_failure
//! ```

use vbao::additivity::{check_r_at, find_r_failure, v_witness};
use vbao::cofin::{vb, AdmSet, PointId};

fn main() -> anyhow::Result<()> {
    let fam = vb();

    // the condition holds at harmless pairs...
    let zero = AdmSet::singleton(PointId::Nat(0));
    println!(
        "condition at (a = {zero}, b = top): {}",
        check_r_at(&fam, 0, &zero, &AdmSet::top())?
    );

    // ...and fails where the top sister sees only the limit point
    let sister = AdmSet::singleton(PointId::named("inf+1"));
    println!(
        "condition at (a = {sister}, b = top): {}",
        check_r_at(&fam, 0, &sister, &AdmSet::top())?
    );

    // canonical search finds a failure within a tiny support bound
    let w = find_r_failure(&fam, 0, 2)?.expect("failure exists");
    println!(
        "\nfirst failure in canonical order: a = {}, b = {}",
        w.a, w.b
    );

    // upgrade to a distribution failure: B = {d nonzero <= b with a
    // disjoint from <>d} has join b, yet a meets <>b
    let v = v_witness(&fam, &w)?;
    println!("join of the family B: {}", v.join);
    println!(
        "sampled members of B: {}",
        v.sampled_members
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    println!(
        "\nfull witness JSON:\n{}",
        serde_json::to_string_pretty(&v)?
    );
    Ok(())
}
