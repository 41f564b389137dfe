//! Command-line front end: graph exports, parameter values, witnesses
//! and reproducible verification campaigns.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use praeger_xu::campaign::{self, CheckKind, Config};
use praeger_xu::error::Error;
use praeger_xu::graph::{ExportFormat, PxGraph, PxParams, Vertex};
use praeger_xu::group::{a_order, enumerate_a, full_aut};
use praeger_xu::report::{params_report, summary, WitnessReport};
use praeger_xu::symmetry::{
    generic_automorphisms_of, interchangeable_bruteforce, is_determining, is_distinguishing,
    Coloring, SearchBudget,
};
use praeger_xu::twins::{twin_classes, twin_quotient};
use praeger_xu::witnesses::{cost_witness, det_witness, dist_witness, InterchangeQuery};
use praeger_xu::Result;

#[derive(Parser)]
#[command(
    name = "px",
    about = "Praeger-Xu graphs: construction, groups, symmetry parameters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum WitnessKind {
    Det,
    Dist,
    Cost,
    Interchange,
}

#[derive(Clone, Copy, ValueEnum)]
enum AutMode {
    Count,
    List,
    Oracle,
}

#[derive(Subcommand)]
enum Command {
    /// Build PX(n,k) and export it.
    Build {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Output format: dot, edges or json.
        #[arg(long, default_value = "edges")]
        format: String,
        /// Output file (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form parameter values as JSON.
    Params {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Emit a constructive witness, optionally verified.
    Witness {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        kind: WitnessKind,
        /// First vertex (i:bits), for interchange queries.
        #[arg(long)]
        u: Option<String>,
        /// Second vertex (i:bits), for interchange queries.
        #[arg(long)]
        v: Option<String>,
        /// Verify the witness against the full automorphism group.
        #[arg(long)]
        check: bool,
    },
    /// Run a verification campaign (newline-delimited JSON reports).
    Verify {
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        k_max: Option<usize>,
        #[arg(long)]
        vertex_cap: Option<usize>,
        /// Restrict to a single instance (requires --k).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated checks: params,aut,relations,xi,phi,twins,interchange,witness.
        #[arg(long)]
        checks: Option<String>,
        #[arg(long)]
        workers: Option<usize>,
        /// key=value configuration file.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Output file for the reports (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Automorphism group: algebraic count/list or search oracle.
    Aut {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "count")]
        mode: AutMode,
    },
    /// Twin classes and the twin quotient graph.
    Twins {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Output format: edges or json.
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Interchangeability of a vertex pair.
    Interchange {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        /// Also scan the group exhaustively.
        #[arg(long)]
        brute: bool,
    },
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => {
            let mut file = std::fs::File::create(path)
                .map_err(|e| Error::NotApplicable(format!("cannot create output file: {e}")))?;
            file.write_all(content.as_bytes())
                .map_err(|e| Error::NotApplicable(format!("write failed: {e}")))?;
        }
        None => print!("{content}"),
    }
    Ok(())
}

fn witness_command(
    params: PxParams,
    kind: WitnessKind,
    u: Option<String>,
    v: Option<String>,
    check: bool,
) -> Result<bool> {
    let g = PxGraph::build(params);
    let budget = SearchBudget::default();
    let report = match kind {
        WitnessKind::Det => {
            let witness = det_witness(params)?;
            let verified = if check {
                let ids: Vec<u32> = witness
                    .iter()
                    .map(|&w| g.vertex_id(w))
                    .collect::<Result<Vec<_>>>()?;
                Some(is_determining(full_aut(&g, &budget)?.iter(), &ids))
            } else {
                None
            };
            WitnessReport {
                kind: "det".into(),
                n: params.n(),
                k: params.k(),
                vertices: witness.iter().map(|w| w.to_string()).collect(),
                classes: None,
                element: None,
                verified,
            }
        }
        WitnessKind::Cost => {
            let red = cost_witness(params)?;
            let verified = if check {
                let ids: Vec<u32> = red
                    .iter()
                    .map(|&w| g.vertex_id(w))
                    .collect::<Result<Vec<_>>>()?;
                let coloring = Coloring::two_class(g.vertex_count(), &ids)?;
                Some(is_distinguishing(full_aut(&g, &budget)?.iter(), &coloring))
            } else {
                None
            };
            WitnessReport {
                kind: "cost".into(),
                n: params.n(),
                k: params.k(),
                vertices: red.iter().map(|w| w.to_string()).collect(),
                classes: None,
                element: None,
                verified,
            }
        }
        WitnessKind::Dist => {
            let coloring = dist_witness(params)?;
            let verified = if check {
                Some(is_distinguishing(full_aut(&g, &budget)?.iter(), &coloring))
            } else {
                None
            };
            let classes: Vec<Vec<String>> = (0..coloring.num_colors() as u8)
                .map(|color| {
                    coloring
                        .class(color)
                        .into_iter()
                        .map(|id| g.vertex_from_id(id).unwrap().to_string())
                        .collect()
                })
                .collect();
            WitnessReport {
                kind: "dist".into(),
                n: params.n(),
                k: params.k(),
                vertices: classes[0].clone(),
                classes: Some(classes),
                element: None,
                verified,
            }
        }
        WitnessKind::Interchange => {
            let u: Vertex = u
                .ok_or_else(|| Error::InvalidParams("interchange needs --u".into()))?
                .parse()?;
            let v: Vertex = v
                .ok_or_else(|| Error::InvalidParams("interchange needs --v".into()))?
                .parse()?;
            let query = InterchangeQuery::new(params, u, v)?;
            let element = query.witness().ok();
            let verified = if check {
                match &element {
                    Some(alpha) => Some(alpha.apply(u)? == v && alpha.apply(v)? == u),
                    None => Some(false),
                }
            } else {
                None
            };
            WitnessReport {
                kind: "interchange".into(),
                n: params.n(),
                k: params.k(),
                vertices: vec![u.to_string(), v.to_string()],
                classes: None,
                element: element.map(|alpha| alpha.to_string()),
                verified,
            }
        }
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("witness json")
    );
    Ok(report.verified != Some(false))
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Build { n, k, format, out } => {
            let params = PxParams::new(n, k)?;
            let format: ExportFormat = format.parse()?;
            let g = PxGraph::build(params);
            emit(&out, &g.export(format))?;
            Ok(true)
        }
        Command::Params { n, k } => {
            let params = PxParams::new(n, k)?;
            let report = params_report(params);
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("params json")
            );
            Ok(true)
        }
        Command::Witness {
            n,
            k,
            kind,
            u,
            v,
            check,
        } => witness_command(PxParams::new(n, k)?, kind, u, v, check),
        Command::Verify {
            n_max,
            k_max,
            vertex_cap,
            n,
            k,
            checks,
            workers,
            config,
            out,
        } => {
            let mut cfg = Config::default();
            if let Some(path) = config {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::Parse(format!("cannot read config: {e}")))?;
                cfg.apply_config_file(&text)?;
            }
            cfg.apply_env()?;
            if let Some(n_max) = n_max {
                cfg.n_max = n_max;
            }
            if let Some(k_max) = k_max {
                cfg.k_max = k_max;
            }
            if let Some(vertex_cap) = vertex_cap {
                cfg.vertex_cap = vertex_cap;
            }
            cfg.workers = workers.or(cfg.workers);
            if let Some(list) = checks {
                cfg.checks = list
                    .split(',')
                    .map(|s| s.trim().parse())
                    .collect::<Result<Vec<CheckKind>>>()?;
            }
            match (n, k) {
                (Some(n), Some(k)) => cfg.only = Some(PxParams::new(n, k)?),
                (None, None) => {}
                _ => {
                    return Err(Error::InvalidParams(
                        "single-instance verify needs both --n and --k".into(),
                    ))
                }
            }
            let reports = campaign::run_campaign(&cfg)?;
            let mut text = String::new();
            for report in &reports {
                text.push_str(&report.to_json_line());
                text.push('\n');
            }
            text.push_str(&summary(&reports).to_string());
            text.push('\n');
            emit(&out, &text)?;
            Ok(reports.iter().all(|r| r.passed()))
        }
        Command::Aut { n, k, mode } => {
            let params = PxParams::new(n, k)?;
            match mode {
                AutMode::Count => {
                    println!(
                        "{}",
                        serde_json::json!({ "n": n, "k": k, "semidirect_product_order": a_order(params)? })
                    );
                }
                AutMode::List => {
                    for alpha in enumerate_a(params)? {
                        println!("{alpha}");
                    }
                }
                AutMode::Oracle => {
                    let g = PxGraph::build(params);
                    let found = generic_automorphisms_of(&g, &SearchBudget::default())?;
                    println!(
                        "{}",
                        serde_json::json!({ "n": n, "k": k, "full_group_order": found.len() })
                    );
                }
            }
            Ok(true)
        }
        Command::Twins { n, k, format } => {
            let params = PxParams::new(n, k)?;
            let g = PxGraph::build(params);
            let partition = twin_classes(&g);
            let quotient = twin_quotient(&g, &partition);
            match format.as_str() {
                "edges" => print!("{}", quotient.export_edges(&g)),
                "json" => print!("{}", quotient.export_json(&g, &partition)),
                other => return Err(Error::Parse(format!("unknown twins format {other:?}"))),
            }
            Ok(true)
        }
        Command::Interchange { n, k, u, v, brute } => {
            let params = PxParams::new(n, k)?;
            let u: Vertex = u.parse()?;
            let v: Vertex = v.parse()?;
            let query = InterchangeQuery::new(params, u, v)?;
            let by_formula = query.interchangeable_in_a();
            let element = query.witness().ok().map(|alpha| alpha.to_string());
            let by_search = if brute {
                let g = PxGraph::build(params);
                let witness = interchangeable_bruteforce(
                    enumerate_a(params)?,
                    g.vertex_id(u)?,
                    g.vertex_id(v)?,
                )?;
                Some(witness.is_some())
            } else {
                None
            };
            let value = serde_json::json!({
                "u": u.to_string(),
                "v": v.to_string(),
                "interchangeable": by_formula,
                "witness": element,
                "bruteforce": by_search,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&value).expect("interchange json")
            );
            Ok(by_search.is_none_or(|found| found == by_formula))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(error) => {
            eprintln!("error: {error}");
            let code = match error {
                Error::InvalidParams(_)
                | Error::Parse(_)
                | Error::BitIndex { .. }
                | Error::ParamMismatch(_)
                | Error::ForeignVertex(_) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}
