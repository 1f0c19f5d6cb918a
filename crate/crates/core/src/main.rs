//! Command-line front end. Exit codes: 0 affirmative / all checks passed,
//! 1 negative, 2 usage or runtime error.

use std::collections::BTreeMap;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use rand::SeedableRng;

use vbao::additivity::{
    check_jvb, check_r_at, default_samples, find_r_failure, theorem_great_report, v_witness,
    GreatReport, OperatorContext, RFailureWitness, Verdict,
};
use vbao::cofin::{eval, vb, vb_i, vbe, AdmSet, FrameFamily, Valuation};
use vbao::decision::{good_sat, in_id, in_ide};
use vbao::formula::{parse, standard_translation, Formula};
use vbao::proof::{calculus_by_name, check_script, fixture_corpus, parse_script, CheckOutcome};
use vbao::sampling::random_admset;

#[derive(Parser)]
#[command(
    name = "vbao",
    version,
    about = "workbench for modal incompleteness over BAOs"
)]
struct Cli {
    /// Emit machine-readable JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a formula and print its canonical form.
    Parse {
        formula: String,
        /// Also print the standard translation at this individual variable.
        #[arg(long)]
        st: Option<String>,
    },
    /// Evaluate a formula to an admissible set over a frame family.
    Eval {
        #[arg(long, default_value = "vb")]
        family: String,
        #[arg(long)]
        formula: String,
        /// Valuation as JSON: {"0": {"mode": "finite", "support": [...]}}.
        #[arg(long)]
        valuation: Option<String>,
    },
    /// Decide membership in the logic of the base or e-extended frame.
    Decide {
        #[arg(long, value_parser = ["id", "ide"])]
        logic: String,
        #[arg(long)]
        formula: String,
        /// On the negative answer, emit the satisfying countermodel.
        #[arg(long)]
        witness: bool,
    },
    /// Check the first-order additivity condition at a pair (a, b).
    CheckR {
        #[arg(long, default_value = "vb")]
        family: String,
        #[arg(long, default_value_t = 0)]
        modality: u32,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Search for a condition failure within a support bound.
    FindRFailure {
        #[arg(long, default_value = "vb")]
        family: String,
        #[arg(long, default_value_t = 0)]
        modality: u32,
        #[arg(long, default_value_t = 2)]
        bound: u64,
    },
    /// Upgrade a condition failure to a complete-additivity failure witness.
    VWitness {
        #[arg(long, default_value = "vb")]
        family: String,
        #[arg(long, default_value_t = 0)]
        modality: u32,
        /// Full witness JSON; alternatively give --a and --b.
        #[arg(long)]
        witness: Option<String>,
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        b: Option<String>,
    },
    /// Check the correspondence form of complete additivity at (y, z).
    Jvb {
        #[arg(long, default_value = "vb")]
        family: String,
        #[arg(long, default_value_t = 0)]
        modality: u32,
        #[arg(long)]
        y: String,
        #[arg(long)]
        z: String,
    },
    /// Premise/conclusion incompatibility report for a pair of operators.
    GreatReport {
        #[arg(long, default_value = "vb")]
        family: String,
        #[arg(long)]
        a: String,
        /// Operator: a modality index, or `tpl:p<N>:<formula>`.
        #[arg(long, default_value = "0")]
        box0: String,
        #[arg(long, default_value = "0")]
        box1: String,
        /// Extra samples as a JSON list of admissible sets.
        #[arg(long)]
        samples: Option<String>,
    },
    /// Check a proof script against a calculus.
    Prove {
        #[arg(long)]
        calculus: String,
        /// Path to the script; `-` reads stdin.
        #[arg(long)]
        script: String,
    },
    /// Check the shipped derivation fixtures.
    Fixtures {
        /// Print the named fixture's script in the textual format instead.
        #[arg(long)]
        dump: Option<String>,
    },
    /// Reproduction targets; each prints a pass/fail summary.
    Repro { target: String },
}

fn parse_family(s: &str) -> Result<FrameFamily> {
    match s {
        "vb" => Ok(vb()),
        "vbe" => Ok(vbe()),
        _ => {
            if let Some(rest) = s.strip_prefix("vbi:") {
                let idx: Result<Vec<u64>, _> =
                    rest.split(',').map(|x| x.trim().parse::<u64>()).collect();
                return Ok(vb_i(idx.context("bad layer list")?)?);
            }
            if s.trim_start().starts_with('{') {
                return serde_json::from_str(s).context("bad family JSON");
            }
            bail!("unknown family {s:?}; use vb, vbe, vbi:2,4 or JSON")
        }
    }
}

fn parse_admset(family: &FrameFamily, s: &str) -> Result<AdmSet> {
    let set: AdmSet = serde_json::from_str(s).context("bad admissible-set JSON")?;
    family.validate_adm(&set)?;
    Ok(set)
}

fn parse_operator(s: &str) -> Result<OperatorContext> {
    if let Ok(i) = s.parse::<u32>() {
        return Ok(OperatorContext::modality(i));
    }
    if let Some(rest) = s.strip_prefix("tpl:") {
        let (hole, tpl) = rest
            .split_once(':')
            .ok_or_else(|| anyhow!("template operator syntax: tpl:p<N>:<formula>"))?;
        let var = hole
            .strip_prefix('p')
            .and_then(|v| v.parse::<u32>().ok())
            .ok_or_else(|| anyhow!("bad hole variable {hole:?}"))?;
        let template = parse(tpl)?;
        return Ok(OperatorContext::defined(template, var)?);
    }
    bail!("bad operator spec {s:?}")
}

fn print_report(report: &GreatReport, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(report).unwrap());
        return;
    }
    println!("a = {}", report.a);
    for (x, ok) in &report.premise_results {
        println!(
            "premise a <= box1(box0(box0 x -> x) -> x) at x = {x}: {}",
            if *ok { "holds" } else { "fails" }
        );
    }
    println!("box1 bot = {}", report.box1_bot);
    println!(
        "conclusion a <= box1 bot: {}",
        if report.conclusion_holds {
            "holds"
        } else {
            "fails"
        }
    );
    println!("verdict: {}", report.verdict);
}

fn vb_axiom() -> Formula {
    vbao::proof::vb_axiom()
}

fn run() -> Result<ExitCode> {
    let cli = Cli::parse();
    let json = cli.json;
    let yes_no = |b: bool| if b { "yes" } else { "no" };

    match cli.command {
        Command::Parse { formula, st } => {
            let f = parse(&formula)?;
            if json {
                let mut doc = serde_json::json!({ "formula": f.to_string() });
                if let Some(x) = st {
                    doc["standard_translation"] =
                        serde_json::Value::String(standard_translation(&f, &x)?);
                }
                println!("{doc}");
            } else {
                println!("{f}");
                if let Some(x) = st {
                    println!("{}", standard_translation(&f, &x)?);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Eval {
            family,
            formula,
            valuation,
        } => {
            let fam = parse_family(&family)?;
            let f = parse(&formula)?;
            let val: Valuation = match valuation {
                Some(v) => {
                    let map: BTreeMap<u32, AdmSet> =
                        serde_json::from_str(&v).context("bad valuation JSON")?;
                    for set in map.values() {
                        fam.validate_adm(set)?;
                    }
                    Valuation(map)
                }
                None => Valuation::new(),
            };
            let out = eval(&fam, &val, &f)?;
            if json {
                println!("{}", serde_json::to_string(&out).unwrap());
            } else {
                println!("{out}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decide {
            logic,
            formula,
            witness,
        } => {
            let f = parse(&formula)?;
            let valid = match logic.as_str() {
                "id" => in_id(&f)?,
                _ => in_ide(&f)?,
            };
            if witness && !valid {
                let w = good_sat(&Formula::neg(f))?.expect("invalid formulas have countermodels");
                println!("{}", serde_json::to_string_pretty(&w).unwrap());
            } else if json {
                println!("{}", serde_json::json!({ "in_logic": valid }));
            } else {
                println!("in {}: {}", logic, yes_no(valid));
            }
            Ok(if valid {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::CheckR {
            family,
            modality,
            a,
            b,
        } => {
            let fam = parse_family(&family)?;
            let a = parse_admset(&fam, &a)?;
            let b = parse_admset(&fam, &b)?;
            let holds = check_r_at(&fam, modality, &a, &b)?;
            if json {
                println!("{}", serde_json::json!({ "holds": holds }));
            } else {
                println!("condition holds at (a, b): {}", yes_no(holds));
            }
            Ok(if holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::FindRFailure {
            family,
            modality,
            bound,
        } => {
            let fam = parse_family(&family)?;
            match find_r_failure(&fam, modality, bound)? {
                Some(w) => {
                    println!("{}", serde_json::to_string_pretty(&w).unwrap());
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    if !json {
                        println!("no failure within bound {bound}");
                    }
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::VWitness {
            family,
            modality,
            witness,
            a,
            b,
        } => {
            let fam = parse_family(&family)?;
            let w: RFailureWitness = match (witness, a, b) {
                (Some(w), _, _) => serde_json::from_str(&w).context("bad witness JSON")?,
                (None, Some(a), Some(b)) => RFailureWitness {
                    family: fam.clone(),
                    modality,
                    a: parse_admset(&fam, &a)?,
                    b: parse_admset(&fam, &b)?,
                },
                _ => bail!("give --witness or both --a and --b"),
            };
            let v = v_witness(&fam, &w)?;
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Jvb {
            family,
            modality,
            y,
            z,
        } => {
            let fam = parse_family(&family)?;
            let y = parse_admset(&fam, &y)?;
            let z = parse_admset(&fam, &z)?;
            let holds = check_jvb(&fam, modality, &y, &z)?;
            if json {
                println!("{}", serde_json::json!({ "holds": holds }));
            } else {
                println!("correspondence condition at (y, z): {}", yes_no(holds));
            }
            Ok(if holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::GreatReport {
            family,
            a,
            box0,
            box1,
            samples,
        } => {
            let fam = parse_family(&family)?;
            let a = parse_admset(&fam, &a)?;
            let box0 = parse_operator(&box0)?;
            let box1 = parse_operator(&box1)?;
            let mut sample_sets = default_samples(&fam);
            if let Some(s) = samples {
                let extra: Vec<AdmSet> = serde_json::from_str(&s).context("bad samples JSON")?;
                sample_sets.extend(extra);
            }
            let report = theorem_great_report(&fam, &box0, &box1, &a, &sample_sets)?;
            print_report(&report, json);
            Ok(match report.verdict {
                Verdict::IncompatibleWithCompleteAdditivity => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            })
        }
        Command::Prove { calculus, script } => {
            // a builtin name, inline JSON, or a path to a JSON spec
            let calc = if calculus.trim_start().starts_with('{') {
                serde_json::from_str(&calculus).context("bad calculus JSON")?
            } else if calculus.ends_with(".json") {
                let text = std::fs::read_to_string(&calculus)
                    .with_context(|| format!("reading {calculus}"))?;
                serde_json::from_str(&text).context("bad calculus JSON")?
            } else {
                calculus_by_name(&calculus)
                    .ok_or_else(|| anyhow!("unknown calculus {calculus:?}"))?
            };
            let text = if script == "-" {
                std::io::read_to_string(std::io::stdin())?
            } else {
                std::fs::read_to_string(&script).with_context(|| format!("reading {script}"))?
            };
            let parsed = parse_script(&text)?;
            match check_script(&calc, &parsed) {
                CheckOutcome::Accepted => {
                    if !json {
                        println!("accepted");
                    } else {
                        println!("{}", serde_json::json!({ "accepted": true }));
                    }
                    Ok(ExitCode::SUCCESS)
                }
                CheckOutcome::Rejected { line, reason } => {
                    if json {
                        println!(
                            "{}",
                            serde_json::json!({
                                "accepted": false,
                                "line": line,
                                "code": reason.code,
                                "message": reason.message,
                            })
                        );
                    } else {
                        println!(
                            "rejected at line {line}: {} ({})",
                            reason.message, reason.code
                        );
                    }
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Fixtures { dump } => {
            if let Some(name) = dump {
                let fx = fixture_corpus()
                    .into_iter()
                    .find(|f| f.name == name)
                    .ok_or_else(|| anyhow!("no fixture named {name:?}"))?;
                print!("{}", vbao::proof::print_script(&fx.script));
                return Ok(ExitCode::SUCCESS);
            }
            let mut all_ok = true;
            let mut docs = Vec::new();
            for fx in fixture_corpus() {
                let outcome = check_script(&fx.calculus, &fx.script);
                let ok = outcome.is_accepted();
                all_ok &= ok;
                if json {
                    docs.push(serde_json::json!({
                        "name": fx.name,
                        "calculus": fx.calculus.name,
                        "lines": fx.script.lines.len(),
                        "final": fx.expected_final.to_string(),
                        "accepted": ok,
                    }));
                } else {
                    println!(
                        "{}: {} ({} lines, final {})",
                        fx.name,
                        if ok { "accepted" } else { "REJECTED" },
                        fx.script.lines.len(),
                        fx.expected_final
                    );
                }
            }
            if json {
                println!("{}", serde_json::Value::Array(docs));
            }
            Ok(if all_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Repro { target } => repro(&target),
    }
}

fn repro(target: &str) -> Result<ExitCode> {
    let mut pass = true;
    let mut check = |label: &str, ok: bool| {
        println!("{}: {}", label, if ok { "PASS" } else { "FAIL" });
        pass &= ok;
    };
    match target {
        "lemma2" => {
            let valid_vb = in_id(&vb_axiom())?;
            let gs = parse("[]<>top -> []bot").unwrap();
            let valid_gs = in_id(&gs)?;
            println!(
                "vB-axiom valid over VB: {}; Box Dia top -> Box bot valid: {}",
                if valid_vb { "yes" } else { "no" },
                if valid_gs { "yes" } else { "no" }
            );
            // the guard is variable-free, so its value is constant across
            // admissible valuations; the value contains the dead end 0,
            // which satisfies every box vacuously
            let fam = vb();
            let guard = parse("[]<>top").unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x1dea);
            let mut values = Vec::new();
            for _ in 0..20 {
                let mut val = Valuation::new();
                val.insert(0, random_admset(&mut rng, &fam, 6));
                values.push(eval(&fam, &val, &guard)?);
            }
            let constant = values.windows(2).all(|w| w[0] == w[1]);
            println!("guard value under 20 random valuations: {}", values[0]);
            check("guard value constant across valuations", constant);
            check("vB-axiom in ID", valid_vb);
            check("guarded collapse formula outside ID", !valid_gs);
        }
        "vinc-vb" => {
            let fam = vb();
            let w = find_r_failure(&fam, 0, 2)?;
            check("condition failure found within bound 2", w.is_some());
            if let Some(w) = w {
                println!("witness: a = {}, b = {}", w.a, w.b);
                let v = v_witness(&fam, &w)?;
                check("join of B equals b", v.join == w.b);
                check(
                    "sampled members verified disjoint under the diamond",
                    !v.sampled_members.is_empty(),
                );
            }
            let guard_val = eval(&fam, &Valuation::new(), &parse("[]<>top").unwrap())?;
            let report = theorem_great_report(
                &fam,
                &OperatorContext::modality(0),
                &OperatorContext::modality(0),
                &guard_val,
                &default_samples(&fam),
            )?;
            print_report(&report, false);
            check(
                "incompatibility verdict",
                report.verdict == Verdict::IncompatibleWithCompleteAdditivity,
            );
        }
        "vbe-inconsistent" => {
            let probe = parse("<e>([]<>top & <>top)").unwrap();
            check("soundness side: probe formula in IDe", in_ide(&probe)?);
            let fam = vbe();
            let guard_val = eval(&fam, &Valuation::new(), &parse("[]<>top").unwrap())?;
            let report = theorem_great_report(
                &fam,
                &OperatorContext::modality(0),
                &OperatorContext::modality(0),
                &guard_val,
                &default_samples(&fam),
            )?;
            print_report(&report, false);
            check(
                "any completely additive algebra validating the axiom forces the probe empty",
                report.verdict == Verdict::IncompatibleWithCompleteAdditivity,
            );
            let probe_val = eval(&fam, &Valuation::new(), &parse("[]<>top & <>top").unwrap())?;
            println!("probe body evaluates to {probe_val} here");
            check(
                "probe body nonempty on the witness family",
                !probe_val.is_empty(),
            );
        }
        "glb-theorems" => {
            for name in [
                "glb-box1-reflection",
                "glb-box1-lob-body",
                "k-boxdot-reflection",
                "glb-vmod-collapse",
            ] {
                let fx = fixture_corpus()
                    .into_iter()
                    .find(|f| f.name == name)
                    .expect("fixture exists");
                let ok = check_script(&fx.calculus, &fx.script).is_accepted();
                check(
                    &format!("{name} accepted (final {})", fx.expected_final),
                    ok,
                );
            }
        }
        "tense-nonconservativity" | "nominal-nonconservativity" => {
            let name = if target.starts_with("tense") {
                "tense-nonconservativity"
            } else {
                "nominal-nonconservativity"
            };
            let fx = fixture_corpus()
                .into_iter()
                .find(|f| f.name == name)
                .expect("fixture exists");
            let ok = check_script(&fx.calculus, &fx.script).is_accepted();
            check(&format!("{name} derivation accepted"), ok);
            let concl = fx.expected_final;
            check(
                "derived conclusion matches the guarded collapse formula",
                concl == parse("[]<>top -> []bot").unwrap(),
            );
            check("conclusion outside ID", !in_id(&concl)?);
        }
        other => bail!("unknown repro target {other:?}"),
    }
    Ok(if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
