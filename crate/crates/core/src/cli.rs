//! Command-line front end. Every verb prints a JSON report (the `join` verb
//! prints an edge list unless `--json` is given).
//!
//! Exit status: 0 on success, 1 when a checked identity or hypothesis
//! fails, 2 on input errors. `-` stands for standard input or output.
//! `HMJOIN_THREADS` caps the worker threads used for internal parallelism.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::cospectral::{check_cospectral_conditions, generalized_universal_charpoly, search_pairs, search_pairs_universal, shipped_catalog, MatrixKind};
use crate::error::{Error, Result};
use crate::families::Family;
use crate::graph::UniversalParams;
use crate::io::{graph_to_json, join_spec_to_json, parse_generalized_spec, parse_join_spec, parse_spec, to_pretty, SpecDocument};
use crate::join::{hm_join, reduce_labels, ReductionMode};
use crate::spectra::{block_charpoly, classify_e_main, universal_block_charpoly};

/// Environment variable read for the worker thread count.
pub const THREADS_ENV: &str = "HMJOIN_THREADS";

#[derive(Parser, Debug)]
#[command(name = "hmjoin", version, about = "Exact spectra of H_m-joins of graphs")]
pub struct Cli {
    /// Output file, `-` for standard output.
    #[arg(short, long, global = true, default_value = "-")]
    pub output: PathBuf,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the join graph of a specification.
    Join {
        spec: PathBuf,
        /// Emit the graph as JSON instead of an edge list.
        #[arg(long)]
        json: bool,
    },
    /// Characteristic polynomial through the block route, checked directly.
    Charpoly { spec: PathBuf },
    /// E-main classification of every factor under its indexing matrix.
    Classify { spec: PathBuf },
    /// Check the block identity and the carry-forward ledger.
    Verify { spec: PathBuf },
    /// Delete redundant labels.
    Reduce {
        spec: PathBuf,
        #[arg(long, default_value = "unused")]
        mode: String,
    },
    /// Build a graph family as a direct graph and as a join specification.
    Family {
        name: String,
        args: Vec<String>,
        /// Also report the block characteristic polynomial.
        #[arg(long)]
        charpoly: bool,
    },
    /// Universal characteristic polynomial of a join or generalized join.
    Universal {
        spec: PathBuf,
        /// A, L, Q, seidel or Aalpha:<r>; overrides coefficients in the file.
        #[arg(long)]
        preset: Option<String>,
    },
    /// Certify a cospectral pair, or search the shipped catalog.
    Cospectral {
        specs: Vec<PathBuf>,
        /// A, S, L or U.
        #[arg(long, default_value = "A")]
        kind: String,
        /// Search the shipped catalog instead of reading two specs.
        #[arg(long)]
        catalog: bool,
        /// Subsets tried per catalog graph.
        #[arg(long, default_value_t = 256)]
        budget: usize,
        /// Coefficients for kind U searches.
        #[arg(long)]
        preset: Option<String>,
    },
}

fn read_input(path: &Path, stdin: &mut dyn Read) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| Error::Io(format!("standard input: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

/// Attaches the file name to parse errors.
fn in_file<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { pointer, message } => Error::Parse { pointer: format!("{} {pointer}", path.display()), message },
        other => other,
    })
}

fn class_list(classes: &[crate::spectra::EigenClass]) -> Value {
    Value::Array(
        classes
            .iter()
            .map(|c| {
                let j = crate::spectra::EigenClassJson::from(c);
                json!({ "class_poly": j.polynomial, "eigenvalue": j.eigenvalue, "multiplicity": j.multiplicity, "flag": j.e_main })
            })
            .collect(),
    )
}

fn parse_preset(s: &str) -> Result<UniversalParams> {
    s.parse()
}

fn execute(cmd: &Command, stdin: &mut dyn Read) -> Result<String> {
    let join_spec = |path: &PathBuf, stdin: &mut dyn Read| -> Result<crate::join::JoinSpec> {
        let text = read_input(path, stdin)?;
        in_file(path, parse_join_spec(&text))
    };
    let out = match cmd {
        Command::Join { spec, json } => {
            let g = hm_join(&join_spec(spec, stdin)?);
            if *json {
                to_pretty(&graph_to_json(&g))
            } else {
                g.to_edge_list()
            }
        }
        Command::Charpoly { spec } => {
            let report = block_charpoly(&join_spec(spec, stdin)?)?;
            to_pretty(&json!({
                "order": report.order,
                "charpoly": report.charpoly_block,
                "factored": report.charpoly_block.factored(),
                "matches_direct": report.charpoly_direct == report.charpoly_block,
            }))
        }
        Command::Classify { spec } => {
            let spec = join_spec(spec, stdin)?;
            let per_factor = spec
                .factors()
                .iter()
                .zip(spec.indexing())
                .map(|(g, map)| Ok(class_list(&classify_e_main(&g.adjacency_matrix(), &map.matrix())?)))
                .collect::<Result<Vec<_>>>()?;
            to_pretty(&json!({ "e_main_flags": per_factor }))
        }
        Command::Verify { spec } => {
            let report = block_charpoly(&join_spec(spec, stdin)?)?;
            let mut v = report.to_json();
            v["verified"] = json!(true);
            to_pretty(&v)
        }
        Command::Reduce { spec, mode } => {
            let mode: ReductionMode = mode.parse()?;
            let r = reduce_labels(&join_spec(spec, stdin)?, mode);
            to_pretty(&json!({
                "deleted_labels": r.deleted,
                "deleted_count": r.deleted_count(),
                "remaining": r.remaining,
                "spec": join_spec_to_json(&r.spec),
            }))
        }
        Command::Family { name, args, charpoly } => {
            let family: Family = name.parse()?;
            let real = family.realize(args)?;
            real.check()?;
            let g = &real.direct;
            let mut v = json!({
                "order": g.n(),
                "edge_count": g.edge_count(),
                "regular_degree": g.regular_degree(),
                "graph": graph_to_json(g),
                "spec": join_spec_to_json(&real.spec),
            });
            if *charpoly {
                let report = block_charpoly(&real.spec)?;
                v["charpoly"] = json!(report.charpoly_block);
                v["factored"] = json!(report.charpoly_block.factored());
            }
            to_pretty(&v)
        }
        Command::Universal { spec, preset } => {
            let text = read_input(spec, stdin)?;
            let preset = preset.as_deref().map(parse_preset).transpose()?;
            match in_file(spec, parse_spec(&text))? {
                SpecDocument::Join(js) => {
                    let params = preset.unwrap_or_else(UniversalParams::adjacency);
                    let report = universal_block_charpoly(&js, &params)?;
                    to_pretty(&json!({
                        "params": crate::io::params_to_json(&params),
                        "charpoly": report.charpoly_block,
                        "factored": report.charpoly_block.factored(),
                        "matches_direct": true,
                    }))
                }
                SpecDocument::Generalized(gs) => {
                    let gs = match preset {
                        Some(p) => gs.with_params(p),
                        None => gs,
                    };
                    let cp = generalized_universal_charpoly(&gs)?;
                    to_pretty(&json!({
                        "params": crate::io::params_to_json(gs.params()),
                        "charpoly": cp,
                        "factored": cp.factored(),
                        "matches_direct": true,
                    }))
                }
            }
        }
        Command::Cospectral { specs, kind, catalog, budget, preset } => {
            let kind: MatrixKind = kind.parse()?;
            if *catalog {
                let entries = shipped_catalog();
                let graphs: Vec<_> = entries.iter().map(|(_, g)| g.clone()).collect();
                let certs = match (kind, preset) {
                    (MatrixKind::Universal, Some(p)) => search_pairs_universal(&graphs, *budget, parse_preset(p)?),
                    _ => search_pairs(&graphs, *budget, kind),
                };
                for c in &certs {
                    if !c.reverify()? {
                        return Err(Error::IdentityViolated("certificate failed re-verification".into()));
                    }
                }
                to_pretty(&json!({
                    "kind": kind.symbol(),
                    "catalog": entries.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>(),
                    "certificates": certs.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
                }))
            } else {
                let [a, b] = specs.as_slice() else {
                    return Err(Error::InvalidParameters("cospectral expects two spec files or --catalog".into()));
                };
                let ta = read_input(a, stdin)?;
                let tb = read_input(b, stdin)?;
                let sa = in_file(a, parse_generalized_spec(&ta))?;
                let sb = in_file(b, parse_generalized_spec(&tb))?;
                to_pretty(&check_cospectral_conditions(&sa, &sb, kind)?.to_json())
            }
        }
    };
    Ok(out)
}

/// Configures the global thread pool from [`THREADS_ENV`], once.
fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
        // A second call fails harmlessly if the pool already exists.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Runs the command line with explicit streams and returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(stdout, "{e}") } else { write!(stderr, "{e}") };
            return code;
        }
    };
    configure_threads();
    match execute(&cli.command, stdin) {
        Ok(text) => {
            let written = if cli.output.as_os_str() == "-" {
                stdout.write_all(text.as_bytes()).map_err(|e| e.to_string())
            } else {
                std::fs::write(&cli.output, text).map_err(|e| format!("{}: {e}", cli.output.display()))
            };
            match written {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                    2
                }
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_violation() {
                1
            } else {
                2
            }
        }
    }
}
