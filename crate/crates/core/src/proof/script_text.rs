//! Textual proof-script format: one line per step,
//! `<idx>. <formula> ; <RULE>(<args>)`, e.g.
//!
//! ```text
//! 1. p0 -> ([]p0 -> p0) ; TAUT
//! 2. [](p0 -> p1) -> ([]p0 -> []p1) ; AX(k.0)
//! 3. [](p1 -> p1) -> ([]p1 -> []p1) ; US(2; p0 := p1)
//! 4. <~0>[]<>top -> ~[]([]~p0 -> ~p0) ; RES(3, fwd)
//! ```
//!
//! (The residuation line illustrates syntax; it needs a tense calculus and
//! a matching source line.) Blank lines and lines starting with `#` are
//! ignored.

use super::{Justification, Line, NecTarget, ProofScript};
use crate::formula::{parse, Substitution};

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
#[error("script parse error on line {line}: {message}")]
pub struct ScriptParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ScriptParseError {
    ScriptParseError {
        line,
        message: message.into(),
    }
}

fn parse_target(s: &str, lineno: usize) -> Result<NecTarget, ScriptParseError> {
    let s = s.trim();
    if s == "A" {
        return Ok(NecTarget::UBox);
    }
    if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        if let Some(conv) = inner.strip_prefix('~') {
            let i = conv
                .parse::<u32>()
                .map_err(|_| err(lineno, format!("bad converse box target {s}")))?;
            return Ok(NecTarget::ConvBox(i));
        }
        if inner.is_empty() {
            return Ok(NecTarget::Box(0));
        }
        if inner == "e" {
            return Ok(NecTarget::Box(crate::formula::EMOD));
        }
        let i = inner
            .parse::<u32>()
            .map_err(|_| err(lineno, format!("bad box target {s}")))?;
        return Ok(NecTarget::Box(i));
    }
    Err(err(lineno, format!("bad necessitation target {s}")))
}

fn parse_index(s: &str, lineno: usize) -> Result<usize, ScriptParseError> {
    s.trim()
        .parse::<usize>()
        .map_err(|_| err(lineno, format!("bad line reference {s:?}")))
}

fn parse_subst(s: &str, lineno: usize) -> Result<Substitution, ScriptParseError> {
    let mut subst = Substitution::new();
    for item in s.split(',') {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        let (lhs, rhs) = item
            .split_once(":=")
            .ok_or_else(|| err(lineno, format!("bad substitution item {item:?}")))?;
        let var = lhs
            .trim()
            .strip_prefix('p')
            .and_then(|v| v.parse::<u32>().ok())
            .ok_or_else(|| err(lineno, format!("bad substitution variable {lhs:?}")))?;
        let f = parse(rhs.trim()).map_err(|e| err(lineno, e.to_string()))?;
        subst.insert(var, f);
    }
    Ok(subst)
}

fn parse_var(s: &str, lineno: usize) -> Result<u32, ScriptParseError> {
    s.trim()
        .strip_prefix('p')
        .and_then(|v| v.parse::<u32>().ok())
        .ok_or_else(|| err(lineno, format!("bad variable {s:?}")))
}

fn parse_rule(text: &str, lineno: usize) -> Result<Justification, ScriptParseError> {
    let text = text.trim();
    let (name, args) = match text.find('(') {
        Some(open) => {
            let close = text
                .rfind(')')
                .ok_or_else(|| err(lineno, "unclosed rule arguments"))?;
            (text[..open].trim(), text[open + 1..close].trim())
        }
        None => (text, ""),
    };
    let commas = |s: &str| -> Vec<String> {
        s.split(',')
            .map(|x| x.trim().to_string())
            .filter(|x| !x.is_empty())
            .collect()
    };
    match name.to_ascii_uppercase().as_str() {
        "PREM" => Ok(Justification::Premise),
        "TAUT" => Ok(Justification::Taut),
        "AX" => Ok(Justification::Axiom {
            name: args.to_string(),
        }),
        "MP" => {
            let a = commas(args);
            if a.len() != 2 {
                return Err(err(lineno, "MP takes two line references"));
            }
            Ok(Justification::Mp {
                imp: parse_index(&a[0], lineno)?,
                ant: parse_index(&a[1], lineno)?,
            })
        }
        "NEC" => {
            let a = commas(args);
            if a.len() != 2 {
                return Err(err(lineno, "NEC takes a line reference and a target"));
            }
            Ok(Justification::Nec {
                from: parse_index(&a[0], lineno)?,
                target: parse_target(&a[1], lineno)?,
            })
        }
        "US" => {
            let (line_part, subst_part) = args
                .split_once(';')
                .ok_or_else(|| err(lineno, "US takes `line; substitution`"))?;
            Ok(Justification::Us {
                from: parse_index(line_part, lineno)?,
                subst: parse_subst(subst_part, lineno)?,
            })
        }
        "RK" => {
            let a = commas(args);
            if a.len() != 3 {
                return Err(err(lineno, "RK takes line, conjunct count, target"));
            }
            Ok(Justification::Rk {
                from: parse_index(&a[0], lineno)?,
                count: parse_index(&a[1], lineno)?,
                target: parse_target(&a[2], lineno)?,
            })
        }
        "RES" => {
            let a = commas(args);
            if a.len() != 2 {
                return Err(err(lineno, "RES takes a line reference and fwd|bwd"));
            }
            let forward = match a[1].as_str() {
                "fwd" => true,
                "bwd" => false,
                other => return Err(err(lineno, format!("bad direction {other:?}"))),
            };
            Ok(Justification::Res {
                from: parse_index(&a[0], lineno)?,
                forward,
            })
        }
        "COV" => Ok(Justification::Cov {
            from: parse_index(args, lineno)?,
        }),
        "VSPEC" | "VMOD" | "VLMOD" => {
            let (lines_part, var_part) = args
                .split_once(';')
                .ok_or_else(|| err(lineno, "rule takes `l1, l2, l3; p<N>`"))?;
            let a = commas(lines_part);
            if a.len() != 3 {
                return Err(err(lineno, "rule takes three line references"));
            }
            let (l1, l2, l3) = (
                parse_index(&a[0], lineno)?,
                parse_index(&a[1], lineno)?,
                parse_index(&a[2], lineno)?,
            );
            let var = parse_var(var_part, lineno)?;
            Ok(match name.to_ascii_uppercase().as_str() {
                "VSPEC" => Justification::VSpec {
                    imp_chi: l1,
                    ubox_imp: l2,
                    box_imp: l3,
                    var,
                },
                "VMOD" => Justification::VMod {
                    imp_chi: l1,
                    boxdot_imp: l2,
                    box_imp: l3,
                    var,
                },
                _ => Justification::VlMod {
                    imp_chi: l1,
                    forms_imp: l2,
                    applied: l3,
                    var,
                },
            })
        }
        "VINF" => Ok(Justification::VInf),
        other => Err(err(lineno, format!("unknown rule {other:?}"))),
    }
}

/// Parses the textual script format.
pub fn parse_script(text: &str) -> Result<ProofScript, ScriptParseError> {
    let mut lines = Vec::new();
    for (lineno0, raw) in text.lines().enumerate() {
        let lineno = lineno0 + 1;
        let raw = raw.trim();
        if raw.is_empty() || raw.starts_with('#') {
            continue;
        }
        let (idx_part, rest) = raw
            .split_once('.')
            .ok_or_else(|| err(lineno, "expected `<idx>. <formula> ; <rule>`"))?;
        let index = idx_part
            .trim()
            .parse::<usize>()
            .map_err(|_| err(lineno, format!("bad line index {idx_part:?}")))?;
        let (formula_part, rule_part) = rest
            .split_once(';')
            .ok_or_else(|| err(lineno, "missing `;` before the rule"))?;
        let formula = parse(formula_part.trim()).map_err(|e| err(lineno, e.to_string()))?;
        let just = parse_rule(rule_part, lineno)?;
        lines.push(Line {
            index,
            formula,
            just,
        });
    }
    Ok(ProofScript { lines })
}

fn print_rule(just: &Justification) -> String {
    match just {
        Justification::Premise => "PREM".into(),
        Justification::Taut => "TAUT".into(),
        Justification::Axiom { name } => format!("AX({name})"),
        Justification::Mp { imp, ant } => format!("MP({imp}, {ant})"),
        Justification::Nec { from, target } => format!("NEC({from}, {target})"),
        Justification::Us { from, subst } => {
            let items: Vec<String> = subst.iter().map(|(v, f)| format!("p{v} := {f}")).collect();
            format!("US({from}; {})", items.join(", "))
        }
        Justification::Rk {
            from,
            count,
            target,
        } => format!("RK({from}, {count}, {target})"),
        Justification::Res { from, forward } => {
            format!("RES({from}, {})", if *forward { "fwd" } else { "bwd" })
        }
        Justification::Cov { from } => format!("COV({from})"),
        Justification::VSpec {
            imp_chi,
            ubox_imp,
            box_imp,
            var,
        } => format!("VSPEC({imp_chi}, {ubox_imp}, {box_imp}; p{var})"),
        Justification::VMod {
            imp_chi,
            boxdot_imp,
            box_imp,
            var,
        } => format!("VMOD({imp_chi}, {boxdot_imp}, {box_imp}; p{var})"),
        Justification::VlMod {
            imp_chi,
            forms_imp,
            applied,
            var,
        } => format!("VLMOD({imp_chi}, {forms_imp}, {applied}; p{var})"),
        Justification::VInf => "VINF".into(),
    }
}

/// Renders a script in the textual format; inverse of [`parse_script`].
pub fn print_script(script: &ProofScript) -> String {
    let mut out = String::new();
    for line in &script.lines {
        out.push_str(&format!(
            "{}. {} ; {}\n",
            line.index,
            line.formula,
            print_rule(&line.just)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_reference_line() {
        let s = parse_script("4. <~0>[]<>top -> ~[]([]~p0 -> ~p0) ; RES(3, fwd)").unwrap();
        assert_eq!(s.lines.len(), 1);
        assert_eq!(s.lines[0].index, 4);
        assert_eq!(
            s.lines[0].just,
            Justification::Res {
                from: 3,
                forward: true
            }
        );
    }

    #[test]
    fn round_trips_fixture_scripts() {
        for fx in super::super::fixture_corpus() {
            let text = print_script(&fx.script);
            let back = parse_script(&text).unwrap_or_else(|e| panic!("{}: {e}", fx.name));
            assert_eq!(back, fx.script, "{}", fx.name);
        }
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let s = parse_script("# a comment\n\n1. top ; TAUT\n").unwrap();
        assert_eq!(s.lines.len(), 1);
    }

    #[test]
    fn us_argument_parsing() {
        let s = parse_script("2. []p1 ; US(1; p0 := []p1)").unwrap();
        let Justification::Us { from, subst } = &s.lines[0].just else {
            panic!()
        };
        assert_eq!(*from, 1);
        assert_eq!(subst.get(0), Some(&parse("[]p1").unwrap()));
    }
}
