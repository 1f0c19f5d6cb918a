//! The correspondence form of complete additivity: if y is the join of
//! {x <= y with <>x <= z} then <>y <= z. Its failure pairs up exactly with
//! the condition-failure search.
//!
//! ```bash
//! cargo run --example correspondence_condition
//! ```

use vbao::additivity::{check_jvb, find_r_failure};
use vbao::cofin::{vb, AdmSet, PointId};

fn main() -> anyhow::Result<()> {
    let fam = vb();

    // trivial cases
    println!(
        "at (bot, bot): {}",
        check_jvb(&fam, 0, &AdmSet::bot(), &AdmSet::bot())?
    );
    println!(
        "at (co{{4}}, top): {}",
        check_jvb(
            &fam,
            0,
            &AdmSet::cofinite_of([PointId::Nat(4)]),
            &AdmSet::top()
        )?
    );

    // the genuine failure: every x avoiding the limit point has <>x inside
    // z, their join is all of y = top, yet <>top escapes z
    let z = AdmSet::cofinite_of([PointId::named("inf+1")]);
    println!("at (top, {z}): {}", check_jvb(&fam, 0, &AdmSet::top(), &z)?);

    // the same failure, derived from the condition witness
    let w = find_r_failure(&fam, 0, 2)?.expect("failure exists");
    let derived = check_jvb(&fam, 0, &w.b, &fam.adm_neg(&w.a))?;
    println!(
        "derived pair (y = {}, z = ~a = {}): {}",
        w.b,
        fam.adm_neg(&w.a),
        derived
    );
    Ok(())
}
