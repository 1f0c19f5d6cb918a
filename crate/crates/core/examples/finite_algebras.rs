//! Finite modal algebras: operators given on atoms, and brute-force checks
//! that finite additivity already implies the complete-additivity
//! condition at this scale.
//!
//! ```bash
//! cargo run --example finite_algebras
//! ```

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use vbao::finite::{check_r_finite_ma, check_v_finite_ma, FiniteMA};

fn main() -> anyhow::Result<()> {
    // one atom, diamond the identity on it
    let identity = FiniteMA::new(1, vec![vec![0b1]])?;
    println!(
        "identity algebra: condition {}  complete additivity {}",
        check_r_finite_ma(&identity, 0),
        check_v_finite_ma(&identity, 0)
    );

    // two atoms, both sent to top
    let smear = FiniteMA::new(2, vec![vec![0b11, 0b11]])?;
    println!(
        "smearing algebra: condition {}  complete additivity {}",
        check_r_finite_ma(&smear, 0),
        check_v_finite_ma(&smear, 0)
    );

    // both checks agree (and hold) on random instances
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut all = true;
    for _ in 0..50 {
        let atoms = rng.gen_range(1..=4u32);
        let images: Vec<u16> = (0..atoms)
            .map(|_| rng.gen_range(0..(1u32 << atoms)) as u16)
            .collect();
        let alg = FiniteMA::new(atoms, vec![images])?;
        all &= check_r_finite_ma(&alg, 0) && check_v_finite_ma(&alg, 0);
    }
    println!("50 random algebras satisfy both: {all}");
    Ok(())
}
