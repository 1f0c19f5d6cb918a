//! Shared test helpers: script mutations for the rejection suites.

use vbao::formula::Formula;
use vbao::proof::{check_script, Fixture, Justification, ProofScript};

/// Single-line corruptions of a script; each must be rejected by the
/// checker if the kernel is doing its job.
pub fn mutations(script: &ProofScript) -> Vec<(String, ProofScript)> {
    let mut out = Vec::new();

    // altered final formula
    {
        let mut s = script.clone();
        let last = s.lines.last_mut().unwrap();
        last.formula = Formula::neg(last.formula.clone());
        out.push(("negated final formula".to_string(), s));
    }

    // altered formula in the middle
    if script.lines.len() >= 2 {
        let mut s = script.clone();
        let mid = s.lines.len() / 2;
        let f = s.lines[mid].formula.clone();
        s.lines[mid].formula = Formula::and(f, Formula::Top);
        out.push((format!("altered formula at position {mid}"), s));
    }

    // wrong reference: point the first referencing line at line index 1
    // if it does not already, else at a different earlier line
    for (pos, line) in script.lines.iter().enumerate() {
        let refs = line.just.references();
        if refs.is_empty() {
            continue;
        }
        let mut s = script.clone();
        let target = if refs[0] == s.lines[0].index && s.lines.len() > 1 {
            s.lines[1].index
        } else {
            s.lines[0].index
        };
        if target == refs[0] || target >= line.index {
            continue;
        }
        retarget_first_ref(&mut s.lines[pos].just, target);
        out.push((format!("wrong reference at position {pos}"), s));
        break;
    }

    // dropped line that something later references
    {
        let referenced: std::collections::BTreeSet<usize> = script
            .lines
            .iter()
            .flat_map(|l| l.just.references())
            .collect();
        if let Some(pos) = script
            .lines
            .iter()
            .position(|l| referenced.contains(&l.index))
        {
            let mut s = script.clone();
            s.lines.remove(pos);
            out.push((format!("dropped referenced line at position {pos}"), s));
        }
    }

    // flipped residuation direction
    if let Some(pos) = script
        .lines
        .iter()
        .position(|l| matches!(l.just, Justification::Res { .. }))
    {
        let mut s = script.clone();
        if let Justification::Res { forward, .. } = &mut s.lines[pos].just {
            *forward = !*forward;
        }
        out.push((format!("flipped residuation at position {pos}"), s));
    }

    // corrupted additivity-rule variable (a freshness/shape break)
    if let Some(pos) = script.lines.iter().position(|l| {
        matches!(
            l.just,
            Justification::VSpec { .. } | Justification::VMod { .. } | Justification::VlMod { .. }
        )
    }) {
        let mut s = script.clone();
        match &mut s.lines[pos].just {
            Justification::VSpec { var, .. }
            | Justification::VMod { var, .. }
            | Justification::VlMod { var, .. } => *var += 1,
            _ => unreachable!(),
        }
        out.push((format!("corrupted rule variable at position {pos}"), s));
    }

    out
}

/// Number of mutations of the fixture the checker rejects; panics if any
/// mutation slips through.
pub fn rejected_mutation_count(fx: &Fixture) -> usize {
    let muts = mutations(&fx.script);
    let mut rejected = 0;
    for (label, script) in &muts {
        let outcome = check_script(&fx.calculus, script);
        assert!(
            !outcome.is_accepted(),
            "{}: mutation {label} was accepted",
            fx.name
        );
        rejected += 1;
    }
    rejected
}

fn retarget_first_ref(just: &mut Justification, target: usize) {
    match just {
        Justification::Mp { imp, .. } => *imp = target,
        Justification::Nec { from, .. }
        | Justification::Us { from, .. }
        | Justification::Rk { from, .. }
        | Justification::Res { from, .. }
        | Justification::Cov { from } => *from = target,
        Justification::VSpec { imp_chi, .. }
        | Justification::VMod { imp_chi, .. }
        | Justification::VlMod { imp_chi, .. } => *imp_chi = target,
        _ => {}
    }
}
