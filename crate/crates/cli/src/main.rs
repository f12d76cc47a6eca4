//! `kgen`: evaluate Laurent expressions, compute twist matrices, query the
//! Bruhat–Tits tree, and build or re-check infinite-generation certificates.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 bad usage or input.

mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kgen_core::amalgam::{amalgam_normal_form, build_certificate_from, Certificate};
use kgen_core::rep::{h_form, rho};
use kgen_core::tree::{fixes_edge, fixes_vertex, to_dot, to_rf_matrix, translation_length};
use kgen_core::{parse, Error, QPoly, Ring};
use serde_json::json;

use input::{core_failure, eps_arg, lift_arg, matrix_arg, text_arg, vertex_arg};

#[derive(Parser, Debug)]
#[command(name = "kgen", version, about = "Exact checks for the twist representation of bounding-curve twists")]
struct Cli {
    /// Output style.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Surface genus (at least 2).
    #[arg(long, global = true, default_value_t = 2)]
    genus: u32,
    /// Intersection-sign table (JSON); zero table when absent.
    #[arg(long, global = true)]
    eps_table: Option<String>,
    /// Seed for a random skew sign table when no table file is given.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Search radius around the base vertex for translation lengths.
    #[arg(long, global = true, default_value_t = 8)]
    ball_radius: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RingKind {
    /// `Z[t, t^-1]`
    Univariate,
    /// The genus ring in `s2..sg, t2..tg` (uses --genus).
    Genus,
    /// `u1..uN` (uses --vars).
    Generic,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the certificate for `M_k`, `k = 1..kmax`, or re-check a stored one.
    Verify {
        #[arg(long, default_value_t = 10)]
        kmax: i64,
        /// Base lift JSON instead of the built-in canonical curve.
        #[arg(long)]
        lift: Option<String>,
        /// Write the certificate JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Re-derive every record of a stored certificate instead of building one.
        #[arg(long, conflicts_with_all = ["lift", "out"])]
        check: Option<String>,
    },
    /// Evaluate and normalize a polynomial expression.
    Eval {
        expr: String,
        #[arg(long, value_enum, default_value_t = RingKind::Univariate)]
        ring: RingKind,
        #[arg(long, default_value_t = 1)]
        vars: usize,
    },
    /// Twist matrix of a lift (`canonical-C`, a JSON file, or `-`).
    Rho { lift: String },
    /// Bruhat–Tits tree queries. Vertices are `base`, `adjacent`, or a
    /// matrix whose columns span a lattice.
    Tree {
        #[command(subcommand)]
        op: TreeOp,
    },
    /// Alternating A/B word for a matrix in SL2(Q[t, t^-1]).
    NormalForm { matrix: String },
}

#[derive(Subcommand, Debug)]
enum TreeOp {
    /// Edge count between two vertices.
    Distance { v: String, w: String },
    /// Canonical `(a; r)` label of a lattice class.
    Vertex { matrix: String },
    /// Image of a vertex under `g`.
    Act { g: String, v: String },
    /// Vertices on the path from `v` to `w`, endpoints included.
    Geodesic { v: String, w: String },
    /// Whether `g` fixes a vertex, or an edge when two vertices are given.
    Fixes { g: String, v: String, w: Option<String> },
    /// Least displacement of `g`, with a vertex that realizes it.
    Translation { g: String },
    /// Graphviz source for the subtree spanned by base and the given vertices.
    Dot { vertices: Vec<String> },
}

/// A reason to stop with a nonzero exit code.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    pub fn verification(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

fn emit(format: Format, text: String, value: serde_json::Value) {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&value).expect("json")),
    }
}

fn check_genus(genus: u32) -> Result<(), Failure> {
    Ring::genus(genus).map(|_| ()).map_err(|e| Failure::usage(e.to_string()))
}

fn run(cli: Cli) -> Result<(), Failure> {
    let fmt = cli.format;
    match cli.command {
        Command::Verify { kmax, lift, out, check } => {
            check_genus(cli.genus)?;
            if let Some(path) = check {
                let text = text_arg(&path)?;
                let cert = Certificate::from_json_str(&text).map_err(|e| Failure::usage(e.to_string()))?;
                let eps = eps_arg(cli.eps_table.as_deref(), cli.seed, cert.genus)?;
                let problems = cert.recheck(&eps);
                emit(fmt, report::recheck_text(&cert, &problems), json!({ "ok": problems.is_empty(), "problems": problems }));
                return if problems.is_empty() { Ok(()) } else { Err(Failure::verification("stored certificate does not check out")) };
            }
            if kmax < 2 {
                return Err(Failure::usage(format!("--kmax must be at least 2, got {kmax}")));
            }
            let base = match lift {
                Some(arg) => lift_arg(&arg, cli.genus)?,
                None => lift_arg("canonical-C", cli.genus)?,
            };
            let eps = eps_arg(cli.eps_table.as_deref(), cli.seed, base.genus())?;
            let cert = build_certificate_from(kmax, &base, &eps).map_err(|e| Failure::usage(e.to_string()))?;
            let serialized = cert.to_json_string();
            if let Some(path) = out {
                std::fs::write(&path, format!("{serialized}\n"))
                    .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            }
            match fmt {
                Format::Text => println!("{}", report::certificate_text(&cert)),
                Format::Json => println!("{serialized}"),
            }
            if cert.verdict {
                Ok(())
            } else {
                Err(Failure::verification(report::failure_text(&cert)))
            }
        }
        Command::Eval { expr, ring, vars } => {
            let ring = match ring {
                RingKind::Univariate => Ring::Univariate,
                RingKind::Genus => Ring::genus(cli.genus).map_err(|e| Failure::usage(e.to_string()))?,
                RingKind::Generic if vars >= 1 => Ring::Generic(vars),
                RingKind::Generic => return Err(Failure::usage("--vars must be at least 1")),
            };
            let text = text_arg(&expr)?;
            let p: QPoly = parse(&text, ring).map_err(|e| core_failure(&text, e))?;
            let shown = match p.to_integer() {
                Some(z) => z.to_string(),
                None => p.to_string(),
            };
            emit(fmt, shown.clone(), json!({ "result": shown, "balanced": p.is_balanced() }));
            Ok(())
        }
        Command::Rho { lift } => {
            check_genus(cli.genus)?;
            let l = lift_arg(&lift, cli.genus)?;
            let m = rho(&l).map_err(|e| match e {
                Error::InvalidLift(v) => Failure::verification(format!("lift rejected: {v}")),
                other => Failure::usage(other.to_string()),
            })?;
            let h = h_form(&m);
            let det_one = m.det().map(|d| d.is_one()).unwrap_or(false);
            emit(
                fmt,
                report::rho_text(&m, &h, det_one),
                json!({ "rho": m.to_json(), "h_form": h, "det_one": det_one }),
            );
            if h.all_balanced() && det_one {
                Ok(())
            } else {
                Err(Failure::verification(format!("not in balanced form: {}", h.unbalanced().join(", "))))
            }
        }
        Command::Tree { op } => tree(op, fmt, cli.ball_radius),
        Command::NormalForm { matrix } => {
            let m = matrix_arg(&matrix)?;
            let word = amalgam_normal_form(&m).map_err(|e| Failure::usage(e.to_string()))?;
            let text = word.iter().map(|l| format!("{:?}  {}", l.side, l.matrix)).collect::<Vec<_>>().join("\n");
            emit(fmt, format!("{text}\nlength: {}", word.len()), json!({ "letters": word, "length": word.len() }));
            Ok(())
        }
    }
}

fn group_element(arg: &str) -> Result<kgen_core::tree::RMatrix, Failure> {
    let m = matrix_arg(arg)?;
    if !m.det().map(|d| d.is_one()).unwrap_or(false) {
        return Err(Failure::usage(format!("{arg}: {}", Error::NotUnimodular)));
    }
    to_rf_matrix(&m).map_err(|e| Failure::usage(e.to_string()))
}

fn tree(op: TreeOp, fmt: Format, radius: u64) -> Result<(), Failure> {
    let usage = |e: Error| Failure::usage(e.to_string());
    match op {
        TreeOp::Distance { v, w } => {
            let d = vertex_arg(&v)?.distance(&vertex_arg(&w)?);
            emit(fmt, d.to_string(), json!({ "distance": d }));
        }
        TreeOp::Vertex { matrix } => {
            let v = vertex_arg(&matrix)?;
            emit(fmt, v.to_string(), json!({ "vertex": v, "distance_from_base": v.distance(&kgen_core::TreeVertex::base()) }));
        }
        TreeOp::Act { g, v } => {
            let image = vertex_arg(&v)?.act(&group_element(&g)?).map_err(usage)?;
            emit(fmt, image.to_string(), json!({ "vertex": image }));
        }
        TreeOp::Geodesic { v, w } => {
            let path = vertex_arg(&v)?.geodesic(&vertex_arg(&w)?);
            let text = path.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("\n");
            emit(fmt, text, json!({ "path": path }));
        }
        TreeOp::Fixes { g, v, w } => {
            let gm = group_element(&g)?;
            let (v, w) = (vertex_arg(&v)?, w.map(|w| vertex_arg(&w)).transpose()?);
            let fixed = match &w {
                Some(w) => fixes_edge(&gm, &v, w).map_err(usage)?,
                None => fixes_vertex(&gm, &v).map_err(usage)?,
            };
            emit(fmt, if fixed { "yes".into() } else { "no".into() }, json!({ "fixed": fixed }));
        }
        TreeOp::Translation { g } => {
            let r = translation_length(&group_element(&g)?, radius).map_err(usage)?;
            let text = if r.exact {
                format!("{} (witness {} at depth {})", r.length, r.witness, r.witness_depth)
            } else {
                format!(
                    "{} (upper bound only: minimum sits on the radius-{} boundary at {}; raise --ball-radius)",
                    r.length, r.radius, r.witness
                )
            };
            emit(fmt, text, serde_json::to_value(&r).expect("json"));
        }
        TreeOp::Dot { vertices } => {
            let vs = vertices.iter().map(|v| vertex_arg(v)).collect::<Result<Vec<_>, _>>()?;
            print!("{}", to_dot(&vs));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
