//! Command-line front end.
//!
//! Exit status: 0 on success, 1 on a domain error (for example total
//! conflict under Dempster's rule), 2 on a usage or parse error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::combination::{combine_sequence, conflict_coefficient, gbel, gpl, Rule};
use crate::conflict::{conflict_measure, judge_conflict, ConflictModel};
use crate::distance::gbpa_distance;
use crate::error::EvidenceError;
use crate::experiments::{run_sweep, Experiment, SweepSpec, DEFAULT_STEP};
use crate::frame::Subset;
use crate::gbpa::Gbpa;
use crate::io::{
    emit_table, parse_evidence_document_with, EvidenceDocument, FocalRow, TableFormat,
};
use crate::transforms::{betp, dif_betp};

#[derive(Debug, Parser)]
#[command(
    name = "gevidence",
    version,
    about = "Open-world evidence combination and conflict analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and validate an evidence document
    Validate {
        doc: PathBuf,
        /// Rescale every body to unit mass instead of rejecting it
        #[arg(long)]
        renormalize: bool,
    },
    /// Combine two or more bodies of evidence
    Combine {
        #[arg(long, value_enum)]
        rule: RuleArg,
        doc: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        bodies: Vec<String>,
        #[arg(long, value_enum, default_value = "json")]
        out: OutArg,
    },
    /// Generalized belief of a set
    Bel(SetQuery),
    /// Generalized plausibility of a set
    Pl(SetQuery),
    /// Pignistic probabilities of a body
    Betp {
        doc: PathBuf,
        #[arg(long)]
        body: String,
    },
    /// Pairwise measure between two bodies
    Measure {
        #[arg(long, value_enum)]
        metric: MetricArg,
        doc: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        bodies: Vec<String>,
    },
    /// Two-component conflict model and verdict.
    ///
    /// With m(∅) > 0 the coefficient is usually the more telling component;
    /// on a complete frame the distance is.
    Conflict {
        #[arg(long, value_enum)]
        model: ModelArg,
        doc: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        bodies: Vec<String>,
        #[arg(long)]
        epsilon: f64,
    },
    /// Reproduce a numerical experiment as a CSV grid
    Sweep {
        #[arg(long, value_enum)]
        experiment: ExperimentArg,
        #[arg(long, default_value_t = DEFAULT_STEP)]
        step: f64,
        /// Output file; `.json` selects JSON, anything else CSV. Defaults to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct SetQuery {
    doc: PathBuf,
    #[arg(long)]
    body: String,
    /// Comma-separated labels; "" is the empty set
    #[arg(long, allow_hyphen_values = true)]
    set: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RuleArg {
    Dempster,
    Gcr,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutArg {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MetricArg {
    K,
    Jousselme,
    BetpDist,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModelArg {
    Liu,
    Modified,
    Generalized,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExperimentArg {
    Table1,
    Fig1,
    Fig2,
    Fig4,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<EvidenceError> for Failure {
    fn from(e: EvidenceError) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<Vec<u8>, Failure>;

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(rendered.as_bytes())
            } else {
                stderr.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command) {
        Ok(bytes) => {
            if stdout.write_all(&bytes).is_err() {
                return 1;
            }
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
    }
}

fn load(path: &PathBuf, renormalize: bool) -> Result<EvidenceDocument, Failure> {
    let bytes =
        std::fs::read(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_evidence_document_with(&bytes, renormalize)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn pick<'a>(doc: &'a EvidenceDocument, id: &str) -> Result<&'a Gbpa, Failure> {
    doc.body(id)
        .ok_or_else(|| Failure::Usage(format!("no body with id `{id}`")))
}

fn pick_pair<'a>(
    doc: &'a EvidenceDocument,
    ids: &[String],
) -> Result<(&'a Gbpa, &'a Gbpa), Failure> {
    match ids {
        [a, b] => Ok((pick(doc, a)?, pick(doc, b)?)),
        _ => Err(Failure::Usage(format!(
            "expected exactly two body ids, got {}",
            ids.len()
        ))),
    }
}

fn require_closed_world(doc: &EvidenceDocument, ids: &[String]) -> Result<(), Failure> {
    for id in ids {
        let m = pick(doc, id)?;
        if !m.is_classical() {
            return Err(Failure::Domain(format!(
                "body `{id}` has m(∅) = {}; closed-world operation needs m(∅) = 0 (use the generalized variant)",
                m.empty_mass()
            )));
        }
    }
    Ok(())
}

fn focal_json(m: &Gbpa) -> Value {
    Value::Array(
        m.focal_elements()
            .map(|(s, v)| json!({"focal": labels_of(m, &s), "mass": v}))
            .collect(),
    )
}

fn labels_of(m: &Gbpa, s: &Subset) -> Vec<String> {
    s.indices().map(|i| m.frame().labels()[i].clone()).collect()
}

fn to_json_bytes(v: &Value) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(v).expect("json serializes");
    out.push(b'\n');
    out
}

fn execute(command: Command) -> Outcome {
    match command {
        Command::Validate { doc, renormalize } => {
            let d = load(&doc, renormalize)?;
            let bodies: Vec<Value> = d
                .bodies
                .iter()
                .map(|(id, m)| {
                    json!({
                        "id": id,
                        "focal_elements": m.focal_count(),
                        "empty_mass": m.empty_mass(),
                        "classical": m.is_classical(),
                    })
                })
                .collect();
            Ok(to_json_bytes(
                &json!({"valid": true, "frame": d.frame.labels(), "bodies": bodies}),
            ))
        }
        Command::Combine {
            rule,
            doc,
            bodies,
            out,
        } => {
            let d = load(&doc, false)?;
            if bodies.len() < 2 {
                return Err(Failure::Usage("combine needs at least two body ids".into()));
            }
            let rule = match rule {
                RuleArg::Dempster => {
                    require_closed_world(&d, &bodies)?;
                    Rule::Dempster
                }
                RuleArg::Gcr => Rule::Gcr,
            };
            let inputs = bodies
                .iter()
                .map(|id| pick(&d, id).cloned())
                .collect::<Result<Vec<_>, _>>()?;
            let outcome = combine_sequence(rule, &inputs)?;
            Ok(match out {
                OutArg::Csv => emit_table(&FocalRow::from_gbpa(&outcome.result), TableFormat::Csv),
                OutArg::Json => to_json_bytes(&json!({
                    "rule": rule.to_string(),
                    "bodies": bodies,
                    "conflict_k": outcome.conflict_k,
                    "empty_mass": outcome.result.empty_mass(),
                    "masses": focal_json(&outcome.result),
                })),
            })
        }
        Command::Bel(q) => set_query(q, "bel"),
        Command::Pl(q) => set_query(q, "pl"),
        Command::Betp { doc, body } => {
            let d = load(&doc, false)?;
            let m = pick(&d, &body)?;
            let p = betp(m)?;
            let probs: serde_json::Map<String, Value> = d
                .frame
                .labels()
                .iter()
                .cloned()
                .zip(p.probs().iter().map(|&x| json!(x)))
                .collect();
            Ok(to_json_bytes(&json!({"body": body, "betp": probs})))
        }
        Command::Measure {
            metric,
            doc,
            bodies,
        } => {
            let d = load(&doc, false)?;
            let (m1, m2) = pick_pair(&d, &bodies)?;
            let (name, value) = match metric {
                MetricArg::K => ("k", conflict_coefficient(m1, m2)?),
                MetricArg::Jousselme => ("jousselme", gbpa_distance(m1, m2)?),
                MetricArg::BetpDist => ("betp-dist", dif_betp(m1, m2)?),
            };
            Ok(to_json_bytes(
                &json!({"metric": name, "bodies": bodies, "value": value}),
            ))
        }
        Command::Conflict {
            model,
            doc,
            bodies,
            epsilon,
        } => {
            let d = load(&doc, false)?;
            let (m1, m2) = pick_pair(&d, &bodies)?;
            let model = match model {
                ModelArg::Liu => ConflictModel::Liu,
                ModelArg::Modified => ConflictModel::Modified,
                ModelArg::Generalized => ConflictModel::Generalized,
            };
            if !matches!(model, ConflictModel::Generalized) {
                require_closed_world(&d, &bodies)?;
            }
            let cf = conflict_measure(model, m1, m2)?;
            let verdict =
                judge_conflict(&cf, epsilon).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(to_json_bytes(&json!({
                "model": model.to_string(),
                "bodies": bodies,
                "coefficient": cf.coefficient,
                "distance": cf.distance,
                "epsilon": epsilon,
                "in_conflict": verdict.in_conflict,
                "verdict": verdict.to_string(),
            })))
        }
        Command::Sweep {
            experiment,
            step,
            out,
        } => {
            let experiment = match experiment {
                ExperimentArg::Table1 => Experiment::Table1,
                ExperimentArg::Fig1 => Experiment::Fig1,
                ExperimentArg::Fig2 => Experiment::Fig2,
                ExperimentArg::Fig4 => Experiment::Fig4,
            };
            let output = match &out {
                Some(p) if p.extension().is_some_and(|e| e == "json") => TableFormat::Json,
                _ => TableFormat::Csv,
            };
            let bytes = run_sweep(&SweepSpec {
                experiment,
                step,
                output,
            })
            .map_err(|e| Failure::Usage(e.to_string()))?;
            match out {
                Some(path) => {
                    std::fs::write(&path, &bytes)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    Ok(Vec::new())
                }
                None => Ok(bytes),
            }
        }
    }
}

fn set_query(q: SetQuery, which: &str) -> Outcome {
    let d = load(&q.doc, false)?;
    let m = pick(&d, &q.body)?;
    let members: Vec<&str> = q
        .set
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    let subset = d
        .frame
        .subset(&members)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let value = if which == "bel" {
        gbel(m, &subset)?
    } else {
        gpl(m, &subset)?
    };
    Ok(to_json_bytes(
        &json!({"body": q.body, "set": members, which: value}),
    ))
}
