//! Pretty-printer. Output reparses to an identical tree; derived diamonds
//! and the existential modality are printed in their sugared form, which is
//! round-trip safe because the parser expands the same sugar.

use super::{Formula, EMOD};

// Precedence levels: 0 iff, 1 imp, 2 or, 3 and, 4 unary/atom.
fn level(f: &Formula) -> u8 {
    match f {
        Formula::Iff(..) => 0,
        Formula::Imp(..) => 1,
        Formula::Or(..) => 2,
        Formula::And(..) => 3,
        _ => 4,
    }
}

fn box_token(i: u32) -> String {
    if i == EMOD {
        "[e]".into()
    } else if i == 0 {
        "[]".into()
    } else {
        format!("[{i}]")
    }
}

fn dia_token(i: u32) -> String {
    if i == EMOD {
        "<e>".into()
    } else if i == 0 {
        "<>".into()
    } else {
        format!("<{i}>")
    }
}

fn write_at(f: &Formula, min: u8, out: &mut String) {
    let wrap = level(f) < min;
    if wrap {
        out.push('(');
    }
    match f {
        Formula::Var(n) => out.push_str(&format!("p{n}")),
        Formula::Nominal(n) => out.push_str(&format!("i{n}")),
        Formula::Bot => out.push_str("bot"),
        Formula::Top => out.push_str("top"),
        Formula::Neg(a) => match &**a {
            // ~[i]~x prints as <i>x, and similarly for the other duals
            Formula::Box_(i, inner) => {
                if let Formula::Neg(x) = &**inner {
                    out.push_str(&dia_token(*i));
                    write_at(x, 4, out);
                } else {
                    out.push('~');
                    write_at(a, 4, out);
                }
            }
            Formula::ConvBox(i, inner) => {
                if let Formula::Neg(x) = &**inner {
                    out.push_str(&format!("<~{i}>"));
                    write_at(x, 4, out);
                } else {
                    out.push('~');
                    write_at(a, 4, out);
                }
            }
            Formula::UBox(inner) => {
                if let Formula::Neg(x) = &**inner {
                    out.push_str("E ");
                    write_at(x, 4, out);
                } else {
                    out.push('~');
                    write_at(a, 4, out);
                }
            }
            _ => {
                out.push('~');
                write_at(a, 4, out);
            }
        },
        Formula::And(a, b) => {
            write_at(a, 3, out);
            out.push_str(" & ");
            write_at(b, 4, out);
        }
        Formula::Or(a, b) => {
            write_at(a, 2, out);
            out.push_str(" | ");
            write_at(b, 3, out);
        }
        Formula::Imp(a, b) => {
            write_at(a, 2, out);
            out.push_str(" -> ");
            write_at(b, 1, out);
        }
        Formula::Iff(a, b) => {
            write_at(a, 1, out);
            out.push_str(" <-> ");
            write_at(b, 0, out);
        }
        Formula::Box_(i, a) => {
            out.push_str(&box_token(*i));
            write_at(a, 4, out);
        }
        Formula::ConvBox(i, a) => {
            out.push_str(&format!("[~{i}]"));
            write_at(a, 4, out);
        }
        Formula::UBox(a) => {
            out.push_str("A ");
            write_at(a, 4, out);
        }
    }
    if wrap {
        out.push(')');
    }
}

impl std::fmt::Display for Formula {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut out = String::new();
        write_at(self, 0, &mut out);
        f.write_str(&out)
    }
}
