//! Finite Kripke models and general frames: model checking, validity by
//! valuation enumeration, and admissible-family closure checking.
//!
//! ```bash
//! cargo run --example finite_model_checking
//! ```

use std::collections::BTreeMap;

use vbao::finite::{mc, AdmissibleFamily, FiniteGeneralFrame, FiniteModel};
use vbao::formula::parse;

fn main() -> anyhow::Result<()> {
    // a two-world chain
    let model = FiniteModel {
        worlds: vec!["a".into(), "b".into()],
        relations: [("0".to_string(), vec![("a".to_string(), "b".to_string())])]
            .into_iter()
            .collect(),
        valuation: BTreeMap::new(),
    };
    for w in ["a", "b"] {
        println!("[]bot at {w}: {}", mc(&model, w, &parse("[]bot")?)?);
    }

    // the single reflexive point validates the reflection axiom
    let refl = FiniteGeneralFrame::new(
        vec!["w".into()],
        [("0".to_string(), vec![("w".to_string(), "w".to_string())])]
            .into_iter()
            .collect(),
        AdmissibleFamily::Explicit(vec![0b0, 0b1]),
    )?;
    println!(
        "reflexive point validates []p0 -> p0: {}",
        refl.valid(&parse("[]p0 -> p0")?)?
    );

    // a family missing a complement is rejected at construction
    let bad = FiniteGeneralFrame::new(
        vec!["a".into(), "b".into()],
        [("0".to_string(), vec![])].into_iter().collect(),
        AdmissibleFamily::Explicit(vec![0b00, 0b01, 0b11]),
    );
    println!("non-closed family rejected: {}", bad.is_err());

    // countervaluations are reported in canonical order
    let frame = FiniteGeneralFrame::new(
        vec!["a".into(), "b".into()],
        [("0".to_string(), vec![("a".to_string(), "b".to_string())])]
            .into_iter()
            .collect(),
        AdmissibleFamily::Powerset,
    )?;
    let f = parse("[]p0 -> p0")?;
    match frame.countervaluation(&f)? {
        Some((val, world)) => {
            let pretty: Vec<String> = val
                .iter()
                .map(|(v, mask)| {
                    let worlds: Vec<&str> = frame
                        .worlds
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, w)| w.as_str())
                        .collect();
                    format!("p{v} = {{{}}}", worlds.join(", "))
                })
                .collect();
            println!("{f} refuted at {world} under {}", pretty.join(", "));
        }
        None => println!("{f} is valid here"),
    }
    Ok(())
}
