//! Command-line front end. [`run_command`] takes its streams as arguments so
//! it can be driven from tests.
//!
//! Exit codes: 0 success; 1 negative verdict (not a member, invalid model,
//! sweep violations, failed recheck); 2 input outside the requested class;
//! 3 no reduction rule applied; 64 usage error; 65 malformed input; 66 input
//! over a size limit; 70 internal check failure; 74 I/O failure.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::certificate::{Certificate, CertificateKind};
use crate::constructors::{construct_semismall_model_faf, construct_small_model_ccg};
use crate::corpus::{enumerate_up_to, generate_family, read_graph6_lines, sweep, Check, Family};
use crate::error::Error;
use crate::graph::Graph;
use crate::invariants::{chromatic_number, clique_number, had2, had2_plus, had_m, hadwiger_number, Witness};
use crate::models::{verify_model, MinorModel};
use crate::patterns::{in_class, ClassName};
use crate::recognition::structure_outcomes;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_CLASS_VIOLATION: i32 = 2;
pub const EXIT_FALLTHROUGH: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_TOO_LARGE: i32 = 66;
pub const EXIT_INTERNAL: i32 = 70;
pub const EXIT_IO: i32 = 74;

#[derive(Parser, Debug)]
#[command(name = "hadlab", version, about = "Exact small-graph invariants, class recognition and clique-minor models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute invariants; prints one certificate per line.
    Invariants {
        /// graph6 string, or `-` to read it from standard input.
        graph: String,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        omega: bool,
        #[arg(long)]
        chi: bool,
        #[arg(long)]
        had: bool,
        #[arg(long)]
        had2: bool,
        #[arg(long)]
        had2plus: bool,
        /// Largest clique minor with branch sets of at most M vertices.
        #[arg(long, value_name = "M")]
        hadm: Vec<usize>,
    },
    /// Test membership in a hereditary class.
    Classify {
        graph: String,
        #[arg(long)]
        class: String,
    },
    /// Build a small or semi-small clique-minor model of size at least chi.
    Model {
        graph: String,
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Check a model (JSON array of branch sets, or a model certificate).
    Verify {
        graph: String,
        #[arg(long, value_name = "FILE")]
        model: PathBuf,
    },
    /// Re-check certificates (one JSON document per line, or a single one)
    /// from their graph6 strings alone.
    Recheck {
        /// Certificate file, or `-` for standard input.
        file: String,
    },
    /// Run checks over a corpus.
    Sweep(SweepArgs),
    /// Evaluate the eight structural outcomes for a graph and its complement.
    Outcomes { graph: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Small,
    Semismall,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("source").required(true).args(["input", "enumerate", "family"])))]
struct SweepArgs {
    /// File with one graph6 record per line.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// All non-isomorphic graphs on 1..=N vertices (N <= 7).
    #[arg(long, value_name = "N")]
    enumerate: Option<usize>,
    /// A generated family, e.g. `cycle:7` or `complement:line-tf:1:5:20`.
    #[arg(long, value_name = "SPEC")]
    family: Option<String>,
    /// Class filter; `any` admits every graph.
    #[arg(long, default_value = "any")]
    class: String,
    #[arg(long = "check", value_name = "NAME", required = true)]
    checks: Vec<String>,
    /// Worker threads; falls back to HL_JOBS, then to available parallelism.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
    /// Also write the JSON report to PATH.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Leave wall-clock figures out of the report.
    #[arg(long)]
    no_timing: bool,
}

/// Failure carrying its exit code.
struct Exit {
    code: i32,
    message: String,
}

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::MalformedGraph6(_) | Error::MalformedEdgeList(_) | Error::InvalidMultigraph(_) => EXIT_DATA,
            Error::SizeOverflow(_)
            | Error::TooLargeForCanonical(_)
            | Error::TooLarge { .. }
            | Error::TooManyBlobs { .. } => EXIT_TOO_LARGE,
            Error::BadParams(_) | Error::UnknownCheck(_) | Error::UnknownName(_) => EXIT_USAGE,
            Error::ClassViolation(_) => EXIT_CLASS_VIOLATION,
            Error::StructureFallthrough(_) => EXIT_FALLTHROUGH,
            Error::InternalCheckFailed(_) | Error::PreconditionViolated(_) => EXIT_INTERNAL,
        };
        Exit { code, message: e.to_string() }
    }
}

fn io_error(what: &str, e: std::io::Error) -> Exit {
    Exit { code: EXIT_IO, message: format!("{what}: {e}") }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_stdin(&mut self) -> Result<String, Exit> {
        let mut text = String::new();
        self.stdin.read_to_string(&mut text).map_err(|e| io_error("reading standard input", e))?;
        Ok(text)
    }

    fn graph(&mut self, arg: &str) -> Result<Graph, Exit> {
        let text = if arg == "-" {
            let all = self.read_stdin()?;
            all.lines().find(|l| !l.trim().is_empty()).unwrap_or("").to_string()
        } else {
            arg.to_string()
        };
        Ok(Graph::from_graph6(&text)?)
    }

    fn emit<T: Serialize>(&mut self, value: &T) -> Result<(), Exit> {
        let text = serde_json::to_string_pretty(value).expect("serialisable");
        writeln!(self.stdout, "{text}").map_err(|e| io_error("writing output", e))
    }

    fn emit_line<T: Serialize>(&mut self, value: &T) -> Result<(), Exit> {
        let text = serde_json::to_string(value).expect("serialisable");
        writeln!(self.stdout, "{text}").map_err(|e| io_error("writing output", e))
    }
}

fn parse_class(name: &str) -> Result<Option<ClassName>, Exit> {
    if name == "any" {
        Ok(None)
    } else {
        Ok(Some(name.parse()?))
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run_command(argv: &[String], stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { write!(stderr, "{rendered}") } else { write!(stdout, "{rendered}") };
            return code;
        }
    };
    let mut io = Io { stdin, stdout };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(exit) => {
            let _ = writeln!(stderr, "hadlab: {}", exit.message);
            exit.code
        }
    }
}

fn dispatch(command: Command, io: &mut Io) -> Result<i32, Exit> {
    match command {
        Command::Invariants { graph, all, omega, chi, had, had2: want_had2, had2plus, hadm } => {
            let g = io.graph(&graph)?;
            let none = !(omega || chi || had || want_had2 || had2plus) && hadm.is_empty();
            let every = all || none;
            let mut results = Vec::new();
            if every || omega {
                results.push(clique_number(&g));
            }
            if every || chi {
                results.push(chromatic_number(&g)?);
            }
            if every || want_had2 {
                results.push(had2(&g)?);
            }
            if every || had2plus {
                results.push(had2_plus(&g)?);
            }
            if every || had {
                results.push(hadwiger_number(&g)?);
            }
            for m in hadm {
                if m == 0 {
                    return Err(Exit { code: EXIT_USAGE, message: "--hadm needs a bound of at least 1".into() });
                }
                results.push(had_m(&g, m)?);
            }
            for r in results {
                io.emit_line(&Certificate::for_invariant(&g, r)?)?;
            }
            Ok(EXIT_OK)
        }
        Command::Classify { graph, class } => {
            let g = io.graph(&graph)?;
            let class: ClassName = class.parse()?;
            let m = in_class(&g, class);
            #[derive(Serialize)]
            struct Verdict<'a> {
                graph6: String,
                class: ClassName,
                #[serde(flatten)]
                membership: &'a crate::patterns::Membership,
            }
            io.emit(&Verdict { graph6: g.to_graph6(), class, membership: &m })?;
            Ok(if m.member { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Model { graph, mode } => {
            let g = io.graph(&graph)?;
            let (built, kind) = match mode {
                Mode::Small => (construct_small_model_ccg(&g), CertificateKind::SmallModel),
                Mode::Semismall => (construct_semismall_model_faf(&g), CertificateKind::SemismallModel),
            };
            #[derive(Serialize)]
            struct Refusal {
                graph6: String,
                error: &'static str,
                #[serde(skip_serializing_if = "Option::is_none")]
                evidence: Option<crate::patterns::Evidence>,
                message: String,
            }
            match built {
                Ok((model, trace)) => {
                    let cert = Certificate::for_model(&g, kind, model, trace)?;
                    io.emit(&cert)?;
                    Ok(if cert.verified { EXIT_OK } else { EXIT_INTERNAL })
                }
                Err(Error::ClassViolation(e)) => {
                    let message = format!("input is outside the class: {e}");
                    io.emit(&Refusal { graph6: g.to_graph6(), error: "class_violation", evidence: Some(*e), message })?;
                    Ok(EXIT_CLASS_VIOLATION)
                }
                Err(Error::StructureFallthrough(message)) => {
                    io.emit(&Refusal { graph6: g.to_graph6(), error: "structure_fallthrough", evidence: None, message })?;
                    Ok(EXIT_FALLTHROUGH)
                }
                Err(other) => Err(other.into()),
            }
        }
        Command::Verify { graph, model } => {
            let g = io.graph(&graph)?;
            let text = std::fs::read_to_string(&model).map_err(|e| io_error(&model.display().to_string(), e))?;
            let m = parse_model(&text)?;
            let report = verify_model(&g, &m);
            io.emit(&report)?;
            Ok(if report.valid { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Recheck { file } => {
            let text = if file == "-" {
                io.read_stdin()?
            } else {
                std::fs::read_to_string(&file).map_err(|e| io_error(&file, e))?
            };
            let certs = parse_certificates(&text)?;
            #[derive(Serialize)]
            struct Rechecked {
                graph6: String,
                kind: CertificateKind,
                verified: bool,
            }
            let mut all_ok = !certs.is_empty();
            for c in certs {
                let verified = c.recheck()?;
                all_ok &= verified;
                io.emit_line(&Rechecked { graph6: c.graph6, kind: c.kind, verified })?;
            }
            Ok(if all_ok { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Sweep(args) => run_sweep(args, io),
        Command::Outcomes { graph } => {
            let g = io.graph(&graph)?;
            io.emit(&structure_outcomes(&g)?)?;
            Ok(EXIT_OK)
        }
    }
}

fn parse_model(text: &str) -> Result<MinorModel, Exit> {
    let data = |msg: String| Exit { code: EXIT_DATA, message: msg };
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| data(format!("model file: {e}")))?;
    if value.is_array() {
        return serde_json::from_value(value).map_err(|e| data(format!("model file: {e}")));
    }
    let cert: Certificate = serde_json::from_value(value).map_err(|e| data(format!("model file: {e}")))?;
    match cert.witness {
        Witness::Model(m) => Ok(m),
        _ => Err(data("certificate does not carry a model".into())),
    }
}

fn parse_certificates(text: &str) -> Result<Vec<Certificate>, Exit> {
    let data = |e: serde_json::Error| Exit { code: EXIT_DATA, message: format!("certificate: {e}") };
    if let Ok(single) = serde_json::from_str::<Certificate>(text) {
        return Ok(vec![single]);
    }
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(data))
        .collect()
}

fn default_jobs() -> usize {
    std::env::var("HL_JOBS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&j: &usize| j > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn run_sweep(args: SweepArgs, io: &mut Io) -> Result<i32, Exit> {
    let filter = parse_class(&args.class)?;
    let checks = args
        .checks
        .iter()
        .map(|c| c.parse::<Check>())
        .collect::<Result<Vec<_>, _>>()?;
    let (graphs, corpus) = if let Some(path) = &args.input {
        let text = if path.as_os_str() == "-" {
            io.read_stdin()?
        } else {
            std::fs::read_to_string(path).map_err(|e| io_error(&path.display().to_string(), e))?
        };
        (read_graph6_lines(&text)?, format!("input:{}", path.display()))
    } else if let Some(n) = args.enumerate {
        (enumerate_up_to(n)?, format!("enumerate:{n}"))
    } else {
        let spec = args.family.as_deref().expect("clap requires one source");
        let family: Family = spec.parse()?;
        (generate_family(&family)?, format!("family:{family}"))
    };
    let jobs = args.jobs.filter(|&j| j > 0).unwrap_or_else(default_jobs);
    let mut outcome = sweep(&graphs, &corpus, filter, &checks, jobs)?;
    if args.no_timing {
        outcome.report.timing = None;
    }
    if let Some(path) = &args.csv {
        std::fs::write(path, outcome.to_csv()).map_err(|e| io_error(&path.display().to_string(), e))?;
    }
    if let Some(path) = &args.json {
        let text = serde_json::to_string_pretty(&outcome.report).expect("serialisable") + "\n";
        std::fs::write(path, text).map_err(|e| io_error(&path.display().to_string(), e))?;
    }
    io.emit(&outcome.report)?;
    Ok(if outcome.report.is_clean() { EXIT_OK } else { EXIT_NEGATIVE })
}
