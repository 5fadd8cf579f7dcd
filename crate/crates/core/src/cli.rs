//! Command-line front end. Every command prints one JSON document.
//!
//! Exit codes: 0 success, 1 disagreement or failed verification, 2 usage or
//! schema error, 3 resource limit hit.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::algebra::MonomialIdeal;
use crate::classify::{self, HarnessReport};
use crate::duality::{self, DEFAULT_SIZE_CAP};
use crate::error::{Error, Result};
use crate::graph::{parse_graph6, Graph, Shape};
use crate::lpdual;
use crate::packing;
use crate::tconn::{cycle_cover_gens, path_cover_gens, TConnInstance};

#[derive(Debug, Parser)]
#[command(name = "tconn", version, about = "Cover ideals of t-connected ideals of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Indented JSON, or a table for harness reports.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Largest intermediate ideal, in generators.
    #[arg(long, global = true, env = "TCONN_CAP", default_value_t = DEFAULT_SIZE_CAP)]
    pub cap: usize,
}

#[derive(Debug, Args)]
pub struct Instance {
    /// graph6 string, path:N, cycle:N, star:K, complete:N or file:PATH
    #[arg(long)]
    pub graph: String,
    #[arg(long)]
    pub t: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal generators of J_t(G).
    Gens {
        #[command(flatten)]
        instance: Instance,
        /// Use the closed form (paths and cycles only).
        #[arg(long, conflicts_with = "brute_force")]
        closed_form: bool,
        /// Enumerate minimal transversals (the default).
        #[arg(long)]
        brute_force: bool,
    },
    /// Compare symbolic and ordinary powers of J_t(G) up to --smax.
    Simis {
        #[command(flatten)]
        instance: Instance,
        /// Defaults to t.
        #[arg(long)]
        smax: Option<u32>,
    },
    /// König test for J_t(G).
    Konig {
        #[command(flatten)]
        instance: Instance,
    },
    /// Packing property of J_t(G) by full minor enumeration.
    Packing {
        #[command(flatten)]
        instance: Instance,
    },
    /// τ and ν for one weight vector.
    Lp {
        #[command(flatten)]
        instance: Instance,
        /// Comma-separated weights, one per vertex.
        #[arg(long, value_delimiter = ',')]
        alpha: Vec<u64>,
    },
    /// Search weight vectors with entries up to --bound for τ ≠ ν.
    GapSearch {
        #[command(flatten)]
        instance: Instance,
        #[arg(long, default_value_t = 2)]
        bound: u64,
    },
    /// Verified non-packing minor of J_t(C_n), followed down to t = 2.
    CycleMinor {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
    },
    /// Compare the classification with computation on all small graphs.
    VerifyTheorem {
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        t_min: usize,
        /// Defaults to n-max.
        #[arg(long)]
        t_max: Option<usize>,
        /// Defaults to t for each instance.
        #[arg(long)]
        smax: Option<u32>,
    },
    /// Validate a harness report and print it back.
    CheckReport {
        #[arg(long)]
        input: PathBuf,
    },
}

/// Parses a `--graph` value.
pub fn parse_graph_spec(spec: &str) -> Result<Graph> {
    let number = |text: &str| {
        text.parse::<usize>().map_err(|_| Error::InvalidArgument(format!("bad vertex count in graph spec {spec:?}")))
    };
    match spec.split_once(':') {
        Some(("path", k)) => Graph::path(number(k)?),
        Some(("cycle", k)) => Graph::cycle(number(k)?),
        Some(("star", k)) => Graph::star(number(k)?),
        Some(("complete", k)) => Graph::complete(number(k)?),
        Some(("file", path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}")))?;
            let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
            parse_graph6(line.trim())
        }
        _ => parse_graph6(spec),
    }
}

fn instance(inst: &Instance) -> Result<TConnInstance> {
    TConnInstance::new(parse_graph_spec(&inst.graph)?, inst.t)
}

struct Outcome {
    compact: String,
    pretty: String,
    exit: i32,
}

fn ok<T: Serialize>(value: &T) -> Outcome {
    Outcome {
        compact: serde_json::to_string(value).expect("report serializes"),
        pretty: serde_json::to_string_pretty(value).expect("report serializes"),
        exit: 0,
    }
}

#[derive(Serialize)]
struct GensReport {
    graph: String,
    t: usize,
    method: &'static str,
    gens: MonomialIdeal,
}

#[derive(Serialize)]
struct LpReport {
    incidence: lpdual::IncidenceMatrix,
    covers: lpdual::CoverMatrix,
    alpha: Vec<u64>,
    tau: u64,
    nu: u64,
}

fn harness(report: &HarnessReport) -> Outcome {
    let mut table = String::from("graph      t  predicted  packed  simis        agrees\n");
    for r in &report.rows {
        let simis = match &r.witness {
            Some(w) => format!("s={} {}", w.s, w.monomial),
            None => serde_json::to_string(&r.simis_bounded).expect("status").trim_matches('"').to_string(),
        };
        table.push_str(&format!(
            "{:<10} {:<2} {:<10} {:<7} {:<12} {}\n",
            r.graph, r.t, r.predicted, r.packed_computed, simis, r.agrees
        ));
    }
    table.push_str(&format!("rows: {}  disagreements: {}\n", report.rows.len(), report.disagreements));
    let mut out = ok(report);
    out.exit = i32::from(report.disagreements > 0);
    out.pretty = table;
    out
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Gens { instance: inst, closed_form, .. } => {
            let tc = instance(inst)?;
            let (ideal, method) = if *closed_form {
                let n = tc.graph().n();
                let standard = |g: &Graph| (1..n).all(|v| g.has_edge(v, v + 1));
                let ideal = match tc.graph().classify_shape()? {
                    Shape::Path(_) if standard(tc.graph()) => path_cover_gens(n, inst.t)?,
                    Shape::Cycle(_) if standard(tc.graph()) => cycle_cover_gens(n, inst.t)?,
                    _ => {
                        return Err(Error::InvalidArgument(
                            "--closed-form needs path:N or cycle:N (vertices in order)".into(),
                        ))
                    }
                };
                (ideal, "closed_form")
            } else {
                (tc.cover_ideal(), "brute_force")
            };
            Ok(ok(&GensReport { graph: tc.graph().to_graph6(), t: inst.t, method, gens: ideal }))
        }
        Command::Simis { instance: inst, smax } => {
            let j = instance(inst)?.cover_ideal();
            Ok(ok(&duality::simis_check(&j, smax.unwrap_or(inst.t as u32), cli.cap)?))
        }
        Command::Konig { instance: inst } => Ok(ok(&packing::is_konig(&instance(inst)?.cover_ideal())?)),
        Command::Packing { instance: inst } => Ok(ok(&packing::is_packed(&instance(inst)?.cover_ideal())?)),
        Command::Lp { instance: inst, alpha } => {
            let tc = instance(inst)?;
            let a = lpdual::incidence_matrix(tc.graph(), inst.t)?;
            let b = lpdual::minimal_solutions(&a)?;
            let alpha = if alpha.is_empty() { vec![1; tc.graph().n()] } else { alpha.clone() };
            let (tau, nu) = (lpdual::tau(&b, &alpha)?, lpdual::nu(&b, &alpha)?);
            Ok(ok(&LpReport { incidence: a, covers: b, alpha, tau, nu }))
        }
        Command::GapSearch { instance: inst, bound } => {
            let tc = instance(inst)?;
            let cap = (cli.cap as u64).max(lpdual::DEFAULT_GAP_CAP);
            Ok(ok(&lpdual::duality_gap_search(tc.graph(), inst.t, *bound, cap)?))
        }
        Command::CycleMinor { n, t } => Ok(ok(&packing::cycle_descent(*n, *t)?)),
        Command::VerifyTheorem { n_max, t_min, t_max, smax } => {
            let t_values: Vec<usize> = (*t_min..=t_max.unwrap_or(*n_max)).collect();
            Ok(harness(&classify::verify_theorem_with_cap(*n_max, &t_values, *smax, cli.cap)?))
        }
        Command::CheckReport { input } => {
            let text = std::fs::read_to_string(input)
                .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", input.display())))?;
            Ok(harness(&HarnessReport::from_json(text.trim_end())?))
        }
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::SizeLimit { .. } => 3,
        Error::Verification(_) => 1,
        _ => 2,
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = if e.use_stderr() { write!(stderr, "{e}") } else { write!(stdout, "{e}") };
            return e.exit_code();
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            let _ = writeln!(stderr, "error: --jobs must be positive");
            return 2;
        }
        pool = pool.num_threads(jobs);
    }
    let result = match pool.build() {
        Ok(pool) => pool.install(|| dispatch(&cli)),
        Err(e) => Err(Error::InvalidArgument(format!("thread pool: {e}"))),
    };
    let outcome = match result {
        Ok(outcome) => outcome,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return exit_code(&e);
        }
    };
    let mut text = if cli.pretty { outcome.pretty } else { outcome.compact };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &text),
        None => stdout.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return 2;
    }
    outcome.exit
}
