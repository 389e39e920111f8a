//! The `dualcx` command.
//!
//! Every subcommand reads its main input from a path or `-` (standard input)
//! and writes one canonical JSON document to standard output. Exit status is 0
//! on success, 1 on a domain error (reported on standard error as
//! `{"error": <name>, "message": ...}`), and 2 on usage or I/O errors.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::builders::{catalog, dual_complex, CATALOG_NAMES};
use crate::collapse::{
    collapses_to, collapsible_search, equivariant_collapse, greedy_collapse, mmp_collapse, replay, CollapseSequence,
    EquivariantMode, GroupAction, DEFAULT_BUDGET,
};
use crate::complex::{Complex, VertexLabel};
use crate::homology::{betti_q, check_chain_condition, homology_z, is_q_acyclic};
use crate::io;
use crate::isomorphism::is_isomorphic;
use crate::subdivision::{
    attach_cone_over_join, barycenter_label, barycentric_subdivide, blowup_stratum, collapse_coned_join,
    stellar_subdivide,
};
use crate::Error;

pub const BUDGET_ENV: &str = "DUALCX_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "dualcx", version, about = "Dual complexes, subdivisions and collapses")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Ring {
    Z,
    Q,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dual complex of a stratification document
    Build {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Print a named complex, or list the names
    Catalog {
        #[arg(required_unless_present = "list")]
        name: Option<String>,
        #[arg(long)]
        list: bool,
    },
    /// Stellar subdivision at a cell, or barycentric subdivision
    #[command(group(ArgGroup::new("mode").required(true).args(["stellar", "barycentric"])))]
    Subdivide {
        #[arg(default_value = "-")]
        input: String,
        /// Cell id, or comma-separated vertex labels
        #[arg(long, value_name = "CELL")]
        stellar: Option<String>,
        #[arg(long)]
        barycentric: bool,
        /// Label of the new vertex
        #[arg(long, requires = "stellar")]
        label: Option<String>,
    },
    /// Blow up a stratum, or glue a cone over a join
    #[command(group(ArgGroup::new("mode").required(true).args(["stratum", "cone"])))]
    Blowup {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_name = "CELL")]
        stratum: Option<String>,
        #[arg(long, requires = "stratum")]
        label: Option<String>,
        /// Attachment document
        #[arg(long, value_name = "FILE")]
        cone: Option<String>,
        /// Where to write the attachment record
        #[arg(long, value_name = "FILE", requires = "cone")]
        record_out: Option<PathBuf>,
    },
    /// Collapse a complex and report the sequence used
    #[command(group(
        ArgGroup::new("mode")
            .required(true)
            .args(["greedy", "mmp", "search", "to", "replay", "coned"])
    ))]
    Collapse {
        #[arg(default_value = "-")]
        input: String,
        /// Remove free pairs in canonical order until none is left
        #[arg(long)]
        greedy: bool,
        /// Contraction instruction document
        #[arg(long, value_name = "FILE")]
        mmp: Option<String>,
        /// Search for a collapse to a point
        #[arg(long)]
        search: bool,
        /// Search for a collapse onto the given subcomplex
        #[arg(long, value_name = "FILE")]
        to: Option<String>,
        /// Replay a collapse sequence document
        #[arg(long, value_name = "FILE")]
        replay: Option<String>,
        /// Undo a cone attachment using its record
        #[arg(long, value_name = "FILE")]
        coned: Option<String>,
        /// Node budget for --search and --to
        #[arg(long)]
        budget: Option<u64>,
        /// Group action document; applies to --greedy and --mmp
        #[arg(long, value_name = "FILE")]
        equivariant: Option<String>,
        /// Also write the sequence as a standalone document
        #[arg(long, value_name = "FILE")]
        sequence_out: Option<PathBuf>,
    },
    /// Homology over the integers or the rationals
    Homology {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long)]
        reduced: bool,
        #[arg(long, value_enum, default_value = "z")]
        over: Ring,
    },
    /// Validate a complex document and summarize it
    Verify {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Find a label bijection between two complexes
    Iso { a: String, b: String },
}

/// Failure of a command: a domain error, or a usage / I/O problem.
enum Failure {
    Domain(Error),
    Usage(String, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if matches!(e, Error::Document(crate::DocumentError::Malformed(_))) {
            Failure::Usage(e.name().to_owned(), e.to_string())
        } else {
            Failure::Domain(e)
        }
    }
}

fn usage(msg: impl ToString) -> Failure {
    Failure::Usage("UsageError".into(), msg.to_string())
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String, Failure> {
        if path == "-" {
            if self.stdin_used {
                return Err(usage("standard input can only be read once"));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage("IoError".into(), format!("standard input: {e}")))?;
            return Ok(s);
        }
        fs::read_to_string(path).map_err(|e| Failure::Usage("IoError".into(), format!("{path}: {e}")))
    }

    fn json(&mut self, path: &str) -> Result<Value, Failure> {
        Ok(io::parse_json(&self.read(path)?)?)
    }

    fn complex(&mut self, path: &str) -> Result<Complex, Failure> {
        Ok(io::complex_from_value(&self.json(path)?)?)
    }
}

fn write_file(path: &PathBuf, v: &Value) -> Result<(), Failure> {
    fs::write(path, io::to_canonical_string(v))
        .map_err(|e| Failure::Usage("IoError".into(), format!("{}: {e}", path.display())))
}

fn budget(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| usage(format!("{BUDGET_ENV} must be a non-negative integer, got `{s}`"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn new_label(cx: &Complex, given: Option<String>, cell: crate::CellId) -> VertexLabel {
    match given {
        Some(l) => l.into(),
        None => {
            let taken: BTreeSet<VertexLabel> = cx.vertex_labels().cloned().collect();
            barycenter_label(cx, cell, &taken)
        }
    }
}

/// Runs one command; the result is the value to print and the exit status.
fn execute(cmd: Command, io_: &mut Io<'_>) -> Result<(Value, i32), Failure> {
    match cmd {
        Command::Build { input } => {
            let desc = io::strata_from_value(&io_.json(&input)?)?;
            let cx = dual_complex(&desc).map_err(Error::from)?;
            Ok((io::complex_to_value(&cx), 0))
        }
        Command::Catalog { name, list } => {
            if list {
                return Ok((
                    json!({ "format_version": io::FORMAT_VERSION, "names": CATALOG_NAMES }),
                    0,
                ));
            }
            let cx = catalog(name.as_deref().unwrap_or_default()).map_err(Error::from)?;
            Ok((io::complex_to_value(&cx), 0))
        }
        Command::Subdivide {
            input,
            stellar,
            barycentric,
            label,
        } => {
            let cx = io_.complex(&input)?;
            let out = if barycentric {
                barycentric_subdivide(&cx)
            } else {
                let c = io::parse_cell_arg(&cx, stellar.as_deref().unwrap())?;
                stellar_subdivide(&cx, c, new_label(&cx, label, c)).map_err(Error::from)?
            };
            Ok((io::complex_to_value(&out), 0))
        }
        Command::Blowup {
            input,
            stratum,
            label,
            cone,
            record_out,
        } => {
            let cx = io_.complex(&input)?;
            if let Some(s) = stratum {
                let c = io::parse_cell_arg(&cx, &s)?;
                let out = blowup_stratum(&cx, c, new_label(&cx, label, c)).map_err(Error::from)?;
                return Ok((io::complex_to_value(&out), 0));
            }
            let spec = io::attachment_from_value(&cx, &io_.json(cone.as_deref().unwrap())?)?;
            let (out, rec) =
                attach_cone_over_join(&cx, spec.center, &spec.link, &spec.tau, spec.apex).map_err(Error::from)?;
            if let Some(path) = record_out {
                write_file(&path, &io::record_to_value(&rec))?;
            }
            Ok((io::complex_to_value(&out), 0))
        }
        Command::Collapse {
            input,
            greedy,
            mmp,
            search,
            to,
            replay: replay_file,
            coned,
            budget: budget_flag,
            equivariant,
            sequence_out,
        } => {
            if equivariant.is_some() && !(greedy || mmp.is_some()) {
                return Err(usage("--equivariant applies to --greedy and --mmp only"));
            }
            let cx = io_.complex(&input)?;
            let action = match &equivariant {
                Some(path) => Some(io::action_from_value(&cx, &io_.json(path)?)?),
                None => None,
            };
            let (out, seq, verdict): (Complex, CollapseSequence, Option<&str>) = if greedy {
                match &action {
                    Some(a) => {
                        let (o, s) = equivariant_collapse(&cx, a, &EquivariantMode::Greedy).map_err(Error::from)?;
                        (o, s, None)
                    }
                    None => {
                        let (o, s) = greedy_collapse(&cx);
                        (o, s, None)
                    }
                }
            } else if let Some(path) = mmp {
                let instrs = io::instructions_from_value(&cx, &io_.json(&path)?)?;
                let (o, s) = match (&action, instrs.as_slice()) {
                    (None, [one]) => mmp_collapse(&cx, one).map_err(Error::from)?,
                    (a, _) => {
                        let trivial;
                        let a = match a {
                            Some(a) => a,
                            None => {
                                trivial = GroupAction::trivial(&cx);
                                &trivial
                            }
                        };
                        equivariant_collapse(&cx, a, &EquivariantMode::Instructed(instrs)).map_err(Error::from)?
                    }
                };
                (o, s, None)
            } else if search || to.is_some() {
                let b = budget(budget_flag)?;
                let verdict = match &to {
                    None => collapsible_search(&cx, b),
                    Some(path) => {
                        let target = io_.complex(path)?;
                        let cells = io::target_cells(&cx, &target)?;
                        collapses_to(&cx, &cells, b).map_err(Error::from)?
                    }
                };
                let seq = verdict.sequence().cloned().unwrap_or_default();
                let out = replay(&cx, &seq).map_err(Error::from)?;
                (out, seq, Some(verdict.name()))
            } else if let Some(path) = replay_file {
                let seq = io::sequence_from_value(&io_.json(&path)?)?;
                let out = replay(&cx, &seq).map_err(Error::from)?;
                (out, seq, None)
            } else {
                let rec = io::record_from_value(&io_.json(coned.as_deref().unwrap())?)?;
                let (o, s) = collapse_coned_join(&cx, &rec).map_err(Error::from)?;
                (o, s, None)
            };
            if let Some(path) = sequence_out {
                write_file(&path, &io::sequence_to_value(&seq, verdict))?;
            }
            Ok((io::annotated_complex(&out, &seq, verdict), 0))
        }
        Command::Homology { input, reduced, over } => {
            let cx = io_.complex(&input)?;
            check_chain_condition(&cx).map_err(Error::from)?;
            let v = match over {
                Ring::Z => io::homology_z_to_value(&cx, &homology_z(&cx, reduced)),
                Ring::Q => io::homology_q_to_value(&cx, &betti_q(&cx, reduced), reduced, is_q_acyclic(&cx)),
            };
            Ok((v, 0))
        }
        Command::Verify { input } => {
            let text = io_.read(&input)?;
            let checked = io::parse_json(&text)
                .and_then(|v| io::complex_from_value(&v))
                .and_then(|cx| {
                    cx.validate()?;
                    check_chain_condition(&cx)?;
                    Ok(cx)
                });
            match checked {
                Ok(cx) => Ok((io::verify_report(&cx), 0)),
                Err(e) => {
                    let code = if matches!(Failure::from(e.clone()), Failure::Usage(..)) {
                        2
                    } else {
                        1
                    };
                    Ok((io::verify_failure(&e), code))
                }
            }
        }
        Command::Iso { a, b } => {
            let ca = io_.complex(&a)?;
            let cb = io_.complex(&b)?;
            let bij = is_isomorphic(&ca, &cb);
            let code = if bij.is_some() { 0 } else { 1 };
            Ok((io::iso_to_value(bij.as_ref()), code))
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let shown = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(shown.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(shown.as_bytes());
                    2
                }
            };
        }
    };
    let mut io_ = Io {
        stdin,
        stdin_used: false,
    };
    match execute(cli.command, &mut io_) {
        Ok((v, code)) => {
            if stdout.write_all(io::to_canonical_string(&v).as_bytes()).is_err() {
                return 2;
            }
            code
        }
        Err(Failure::Domain(e)) => {
            let _ = stderr.write_all(io::to_canonical_string(&io::error_to_value(&e)).as_bytes());
            1
        }
        Err(Failure::Usage(name, msg)) => {
            let v = json!({ "error": name, "message": msg });
            let _ = stderr.write_all(io::to_canonical_string(&v).as_bytes());
            2
        }
    }
}
