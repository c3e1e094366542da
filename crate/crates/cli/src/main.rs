use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use lineshatter::abstract_sets::FiniteSetSystem;
use lineshatter::affine_nd::{reduce_to, vc_equal_check};
use lineshatter::axioms::{check_a1, check_a2, check_b1, check_b2, check_f2, check_o, characterize_f3};
use lineshatter::fuzz::{run_campaign, CampaignParams};
use lineshatter::io::{from_json, to_json};
use lineshatter::shatter::{shatters_with_limit, DEFAULT_SIZE_LIMIT};
use lineshatter::{
    classify_case, representatives, shatter_isomorphic, shatter_structure, AffineConfig, B2Reading, Error,
    PointConfig,
};

/// Exact shattering of planar point sets by unions of lines.
///
/// Every command prints one JSON document (to stdout or `--out`). Exit
/// status: 0 when the checked property holds, 3 when it fails, 2 for bad
/// usage or invalid input, 1 for internal errors.
#[derive(Parser, Debug)]
#[command(name = "lineshatter", version)]
struct Cli {
    /// Seed for generated data; recorded in every output.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Largest configuration the exhaustive checks accept.
    #[arg(
        long,
        global = true,
        env = "LINESHATTER_SIZE_LIMIT",
        default_value_t = DEFAULT_SIZE_LIMIT as u64,
        value_parser = clap::value_parser!(u64).range(1..=63)
    )]
    size_limit: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Output {
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Reading {
    /// Cross-lines must share a configuration point.
    WithinP,
    /// Cross-lines may meet anywhere in the plane.
    Plane,
}

impl From<Reading> for B2Reading {
    fn from(r: Reading) -> Self {
        match r {
            Reading::WithinP => B2Reading::WithinP,
            Reading::Plane => B2Reading::Plane,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether unions of k lines shatter a configuration.
    CheckShatter {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        input: PathBuf,
        /// Include one isolating family of lines per subset.
        #[arg(long)]
        witnesses: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Evaluate the covering and incidence conditions on a configuration.
    Axioms {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Reading::WithinP)]
        b2_reading: Reading,
        #[command(flatten)]
        output: Output,
    },
    /// Name the isomorphism type of a maximum shattered set.
    Classify {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Test two configurations for shatter-isomorphism.
    Iso {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Write one representative configuration per isomorphism type.
    Reps {
        #[arg(long)]
        k: usize,
        /// Directory for the `<label>.json` files.
        #[arg(long)]
        out: PathBuf,
    },
    /// Cut codimension-two flats down to a lower dimension.
    ReduceDim {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        to_dim: usize,
        /// Also compare shattering by k hyperplanes before and after.
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Finite set systems.
    Abstract {
        #[command(subcommand)]
        command: AbstractCommand,
    },
    /// Compare a characterization with the shattering oracle on random samples.
    FuzzEquivalence {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        /// Bound on coordinate heights.
        #[arg(long, default_value_t = 64)]
        height: i64,
        /// Points per line, e.g. `3,3,3`; by default each sample picks a layout.
        #[arg(long, value_delimiter = ',')]
        line_sizes: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t = Reading::WithinP)]
        b2_reading: Reading,
        /// Directory receiving one file per mismatching sample.
        #[arg(long, default_value = ".")]
        dump_dir: PathBuf,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand, Debug)]
enum AbstractCommand {
    /// VC-dimension of the k-fold union.
    Vc {
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Number of isomorphism types of maximum sets shattered by the k-fold union.
    Sk {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BoundExceeded { .. } | Error::Unclassified(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::Internal(format!("{}: {e}", path.display()))
}

fn read<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    from_json(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(seed: u64, body: impl Serialize, output: &Output) -> Result<(), Failure> {
    let mut value = serde_json::to_value(body).expect("reports serialize");
    if let Value::Object(map) = &mut value {
        map.insert("seed".into(), json!(seed));
    }
    let text = to_json(&value);
    match &output.out {
        Some(path) => fs::write(path, text).map_err(|e| io_failure(path, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn flag(holds: bool) -> ExitCode {
    ExitCode::from(if holds { 0 } else { 3 })
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let seed = cli.seed;
    let limit = cli.size_limit as usize;
    match cli.command {
        Command::CheckShatter {
            k,
            input,
            witnesses,
            output,
        } => {
            let cfg: PointConfig = read(&input)?;
            let report = shatters_with_limit(&cfg, k, witnesses, limit)?;
            let holds = report.shattered;
            emit(seed, report, &output)?;
            Ok(flag(holds))
        }
        Command::Axioms {
            input,
            b2_reading,
            output,
        } => {
            let cfg: PointConfig = read(&input)?;
            let reading = B2Reading::from(b2_reading);
            let mut verdicts = vec![check_o(&cfg), check_a1(&cfg), check_a2(&cfg)];
            let mut skipped = Vec::new();
            if cfg.collin() <= 3 {
                verdicts.push(check_b1(&cfg)?);
                verdicts.push(check_b2(&cfg, reading)?);
            } else {
                skipped.extend(["B1", "B2"]);
            }
            let mut body = json!({
                "points": cfg.len(),
                "collin": cfg.collin(),
                "b2_reading": reading,
                "verdicts": verdicts,
                "skipped": skipped,
            });
            if cfg.len() == 5 {
                let (cover, collin) = check_f2(&cfg)?;
                body["f2"] = json!({ "verdicts": [cover, collin], "predicted_shattered": cover.holds && collin.holds });
            }
            if cfg.len() == 9 {
                body["f3"] = serde_json::to_value(characterize_f3(&cfg, reading)?).unwrap();
            }
            let holds = verdicts.iter().all(|v| v.holds);
            emit(seed, body, &output)?;
            Ok(flag(holds))
        }
        Command::Classify { k, input, output } => {
            let cfg: PointConfig = read(&input)?;
            if cfg.len() > limit {
                return Err(Error::SizeLimit { found: cfg.len(), limit }.into());
            }
            match classify_case(&cfg, k) {
                Ok(label) => {
                    emit(seed, json!({ "k": k, "shattered": true, "label": label }), &output)?;
                    Ok(flag(true))
                }
                Err(Error::NotShattered { .. }) => {
                    let report = shatters_with_limit(&cfg, k, false, limit)?;
                    let body = json!({
                        "k": k,
                        "shattered": false,
                        "message": "not shattered",
                        "failing_subset": report.failing_subset,
                    });
                    emit(seed, body, &output)?;
                    Ok(flag(false))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Iso { a, b, output } => {
            let (ca, cb): (PointConfig, PointConfig) = (read(&a)?, read(&b)?);
            let (sa, sb) = (shatter_structure(&ca), shatter_structure(&cb));
            let cert = shatter_isomorphic(&sa, &sb);
            let holds = cert.is_some();
            emit(seed, json!({ "isomorphic": holds, "certificate": cert }), &output)?;
            Ok(flag(holds))
        }
        Command::Reps { k, out } => {
            if !(2..=3).contains(&k) {
                return Err(Failure::Usage(format!("representatives are known for k = 2 and 3, not {k}")));
            }
            fs::create_dir_all(&out).map_err(|e| io_failure(&out, e))?;
            let mut files = Vec::new();
            for (label, cfg) in representatives(k) {
                let path = out.join(format!("{}.json", label.name()));
                fs::write(&path, to_json(&cfg)).map_err(|e| io_failure(&path, e))?;
                files.push(json!({ "label": label, "file": path }));
            }
            emit(seed, json!({ "k": k, "files": files }), &Output { out: None })?;
            Ok(flag(true))
        }
        Command::ReduceDim {
            input,
            to_dim,
            k,
            output,
        } => {
            let cfg: AffineConfig = read(&input)?;
            if cfg.len() > limit {
                return Err(Error::SizeLimit { found: cfg.len(), limit }.into());
            }
            let (reduced, steps) = reduce_to(&cfg, to_dim)?;
            let steps: Vec<Value> = steps
                .iter()
                .map(|s| {
                    json!({
                        "translate": s.translate,
                        "dropped_coordinate": s.dropped_coordinate,
                        "check": s.check,
                        "structure_preserved": s.structure_preserved,
                    })
                })
                .collect();
            let mut body = json!({
                "from_dim": cfg.ambient_dim(),
                "to_dim": to_dim,
                "reduced": reduced,
                "steps": steps,
            });
            if to_dim == 2 {
                body["points"] = serde_json::to_value(reduced.to_points()?).unwrap();
            }
            let mut holds = true;
            if let Some(k) = k {
                let report = vc_equal_check(&cfg, k)?;
                holds = report.agree;
                body["vc"] = serde_json::to_value(report).unwrap();
            }
            emit(seed, body, &output)?;
            Ok(flag(holds))
        }
        Command::Abstract { command } => match command {
            AbstractCommand::Vc { k, input, output } => {
                let sys: FiniteSetSystem = read(&input)?;
                let d = sys.k_fold_union(k)?.vc_dim()?;
                emit(seed, json!({ "k": k, "ground": sys.ground(), "vc_dim": d }), &output)?;
                Ok(flag(true))
            }
            AbstractCommand::Sk { k, input, output } => {
                let sys: FiniteSetSystem = read(&input)?;
                let (d, s) = sys.maximal_shattering(k)?;
                let body = json!({
                    "k": k,
                    "ground": sys.ground(),
                    "d_k": d,
                    "s_k": s,
                    "note": "computed on this finite system only",
                });
                emit(seed, body, &output)?;
                Ok(flag(true))
            }
        },
        Command::FuzzEquivalence {
            k,
            samples,
            height,
            line_sizes,
            b2_reading,
            dump_dir,
            output,
        } => {
            let params = CampaignParams {
                k,
                samples,
                seed,
                height,
                line_sizes,
                b2_reading: b2_reading.into(),
            };
            let summary = run_campaign(&params)?;
            let mut dumped = Vec::new();
            if !summary.mismatches.is_empty() {
                fs::create_dir_all(&dump_dir).map_err(|e| io_failure(&dump_dir, e))?;
                for m in &summary.mismatches {
                    let path = dump_dir.join(format!("counterexample-k{k}-seed{seed}-{}.json", m.index));
                    fs::write(&path, to_json(&m.config)).map_err(|e| io_failure(&path, e))?;
                    dumped.push(path);
                }
            }
            let holds = summary.mismatches.is_empty();
            let body = json!({
                "params": summary.params,
                "shattered": summary.shattered,
                "not_shattered": summary.not_shattered,
                "mismatch_count": summary.mismatches.len(),
                "mismatches": summary.mismatches,
                "dumped": dumped,
            });
            emit(seed, body, &output)?;
            Ok(flag(holds))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
