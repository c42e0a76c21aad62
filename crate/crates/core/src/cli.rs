//! The `colourq` command line.
//!
//! Exit codes: 0 on success, 1 on domain errors (unreadable or invalid
//! files, failed mutations, reported violations), 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::net::SocketAddr;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::canon::canonicalize;
use crate::document::{emit_gabriel, emit_quiver, parse_quiver, parse_quiver_permissive, write_archive};
use crate::dynkin::predict_finiteness;
use crate::enumerate::{enumerate, EnumerationConfig};
use crate::mutation::mutate_seq;
use crate::quiver::{gabriel, validate, ColouredQuiver, Vertex};
use crate::seeds::{Diagram, DiagramType, Orientation};
use crate::service::{self, verdict_json, DEFAULT_PORT};

#[derive(Parser, Debug)]
#[command(name = "colourq", version, about = "Coloured quiver mutation toolkit")]
struct Cli {
    /// Print machine-readable JSON instead of summary lines.
    #[arg(long, global = true)]
    json: bool,

    /// Accept input files that violate the structural properties.
    #[arg(long, global = true)]
    permissive: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Cap {
    /// Maximum number of distinct quivers to explore.
    #[arg(long = "max", env = "COLOURQ_MAX", default_value_t = crate::enumerate::DEFAULT_MAX_QUIVERS as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    max: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the three structural properties.
    Validate { file: PathBuf },
    /// Build the bicoloured quiver of an acyclic Dynkin orientation.
    Seed {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = OrientationArg::Linear)]
        orientation: OrientationArg,
        /// Arrows `FROM:TO,...`, one per diagram edge (with `--orientation spec`).
        #[arg(long)]
        arrows: Option<String>,
    },
    /// Mutate at one vertex or along a sequence.
    Mutate {
        file: PathBuf,
        #[arg(long)]
        at: Option<Vertex>,
        #[arg(long, value_delimiter = ',')]
        seq: Vec<Vertex>,
    },
    /// Print the Gabriel quiver (colour-0 arrows).
    Gabriel { file: PathBuf },
    /// Print the canonical form as hex.
    Canonical { file: PathBuf },
    /// Enumerate the mutation class up to isomorphism.
    Enumerate {
        file: PathBuf,
        #[command(flatten)]
        cap: Cap,
        #[arg(long)]
        max_depth: Option<usize>,
        /// Write representatives to a directory, or a single file if the path ends in `.json`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide finiteness of the mutation class.
    Classify {
        file: PathBuf,
        #[command(flatten)]
        cap: Cap,
    },
    /// Start the HTTP service.
    Serve {
        #[arg(long, default_value_t = DEFAULT_PORT)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: String,
        /// Directory of UI assets served at `/`.
        #[arg(long = "static")]
        assets: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrientationArg {
    Linear,
    Alternating,
    Spec,
}

enum Failure {
    Domain(String),
    Usage(String),
}

type Outcome = Result<(), Failure>;

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure::Domain(e.to_string())
}

fn read_quiver(path: &Path, permissive: bool) -> Result<ColouredQuiver, Failure> {
    let text = std::fs::read(path).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    let parsed = if permissive { parse_quiver_permissive(&text) } else { parse_quiver(&text) };
    parsed.map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn parse_arrow_list(s: &str) -> Result<Vec<(Vertex, Vertex)>, Failure> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|tok| {
            let (a, b) =
                tok.split_once(':').ok_or_else(|| Failure::Usage(format!("bad arrow {tok:?}, expected FROM:TO")))?;
            let parse = |x: &str| {
                x.trim().parse::<Vertex>().map_err(|_| Failure::Usage(format!("bad vertex {x:?} in arrow {tok:?}")))
            };
            Ok((parse(a)?, parse(b)?))
        })
        .collect()
}

fn execute(cli: Cli, out: &mut dyn Write) -> Outcome {
    let json = cli.json;
    let permissive = cli.permissive;
    let line = |out: &mut dyn Write, s: &str| writeln!(out, "{s}").map_err(domain);
    match cli.command {
        Command::Validate { file } => {
            let q = read_quiver(&file, true)?;
            let violations = validate(&q);
            if json {
                let v: Vec<String> = violations.iter().map(ToString::to_string).collect();
                line(out, &serde_json::json!({ "valid": v.is_empty(), "violations": v }).to_string())?;
            } else if violations.is_empty() {
                line(out, "valid")?;
            } else {
                for v in &violations {
                    line(out, &v.to_string())?;
                }
            }
            if violations.is_empty() {
                Ok(())
            } else {
                Err(Failure::Domain(format!("{} violation(s)", violations.len())))
            }
        }
        Command::Seed { ty, rank, m, orientation, arrows } => {
            let ty: DiagramType = ty.parse().map_err(|e| Failure::Usage(format!("{e}")))?;
            let diagram = Diagram::new(ty, rank).map_err(|e| Failure::Usage(e.to_string()))?;
            let orientation = match (orientation, arrows) {
                (OrientationArg::Linear, None) => Orientation::Linear,
                (OrientationArg::Alternating, None) => Orientation::Alternating,
                (OrientationArg::Spec, Some(list)) => Orientation::Explicit(parse_arrow_list(&list)?),
                (OrientationArg::Spec, None) => return Err(Failure::Usage("--orientation spec needs --arrows".into())),
                (_, Some(_)) => return Err(Failure::Usage("--arrows requires --orientation spec".into())),
            };
            let q = diagram.seed(&orientation, m).map_err(domain)?;
            line(out, &emit_quiver(&q))
        }
        Command::Mutate { file, at, seq } => {
            let q = read_quiver(&file, permissive)?;
            let js: Vec<Vertex> = at.into_iter().chain(seq).collect();
            if js.is_empty() {
                return Err(Failure::Usage("mutate needs --at or --seq".into()));
            }
            let res = mutate_seq(&q, &js).map_err(domain)?;
            line(out, &emit_quiver(&res))
        }
        Command::Gabriel { file } => {
            let q = read_quiver(&file, permissive)?;
            line(out, &emit_gabriel(&gabriel(&q)))
        }
        Command::Canonical { file } => {
            let q = read_quiver(&file, permissive)?;
            let (form, perm) = canonicalize(&q);
            if json {
                line(out, &serde_json::json!({ "canonical": form.to_hex(), "permutation": perm.image() }).to_string())
            } else {
                line(out, &form.to_hex())
            }
        }
        Command::Enumerate { file, cap, max_depth, out: archive } => {
            let q = read_quiver(&file, false)?;
            let mut cfg = EnumerationConfig::with_max(cap.max as usize);
            cfg.max_depth = max_depth;
            let res = enumerate(&q, &cfg).map_err(domain)?;
            if json {
                let summary = serde_json::json!({
                    "status": res.status,
                    "size": res.size(),
                    "depth_reached": res.depth_reached,
                });
                line(out, &summary.to_string())?;
            } else {
                line(out, &format!("{}, {} quivers", res.status, res.size()))?;
            }
            if let Some(path) = archive {
                write_archive(&path, &res).map_err(domain)?;
                if !json {
                    line(out, &format!("wrote {} representatives to {}", res.size(), path.display()))?;
                }
            }
            Ok(())
        }
        Command::Classify { file, cap } => {
            let q = read_quiver(&file, false)?;
            let verdict = predict_finiteness(&q, &EnumerationConfig::with_max(cap.max as usize)).map_err(domain)?;
            if json {
                line(out, &verdict_json(&verdict).to_string())
            } else {
                line(out, &verdict.to_string())
            }
        }
        Command::Serve { port, host, assets } => {
            let addr: SocketAddr = format!("{host}:{port}")
                .parse()
                .map_err(|e| Failure::Usage(format!("bad address {host}:{port}: {e}")))?;
            line(out, &format!("listening on http://{addr}"))?;
            out.flush().map_err(domain)?;
            let rt = tokio::runtime::Runtime::new().map_err(domain)?;
            rt.block_on(service::serve(addr, assets)).map_err(domain)
        }
    }
}

/// Runs the command line with `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
    }
}
