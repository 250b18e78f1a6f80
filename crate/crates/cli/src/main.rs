use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use compdeps::validate::ChannelClass;
use compdeps::{deps, elementary, optimize, slice, validate, Architecture, ChannelId, ChannelSet};
use serde::Serialize;

const EXIT_OK: u8 = 0;
const EXIT_ERROR: u8 = 1;
const EXIT_VIOLATION: u8 = 2;
const EXIT_USAGE: u8 = 64;

/// Data-dependency analysis for layered component architectures.
#[derive(Debug, Parser)]
#[command(name = "compdeps", version)]
struct Cli {
    /// Write machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check every well-formedness predicate.
    Validate { file: PathBuf },
    /// Direct or transitive sources or accessors of a component.
    Sources(SourcesArgs),
    /// Minimal component set for a property over channels.
    Slice {
        file: PathBuf,
        #[arg(long)]
        level: String,
        /// Comma-separated channel list.
        #[arg(long, value_delimiter = ',', required = true)]
        channels: Vec<String>,
    },
    /// Elementary verdict for each component of a level.
    Elementary {
        file: PathBuf,
        #[arg(long)]
        level: String,
    },
    /// Classify every channel relative to a level.
    Classify {
        file: PathBuf,
        #[arg(long)]
        level: String,
    },
    /// Channels a channel is computed from.
    ChanDeps {
        file: PathBuf,
        #[arg(long)]
        channel: String,
        /// Follow dependencies transitively.
        #[arg(long)]
        transitive: bool,
    },
    /// Strongly connected components of a level.
    Condense {
        file: PathBuf,
        #[arg(long)]
        level: String,
    },
    /// Group a level by high-load channels and mark high-performance groups.
    Optimize {
        file: PathBuf,
        #[arg(long)]
        level: String,
    },
    /// Check that one level regroups the components of another.
    CheckRefinement {
        file: PathBuf,
        #[arg(long)]
        fine: String,
        #[arg(long)]
        coarse: String,
    },
    /// Render a level as a Graphviz digraph.
    ExportDot {
        file: PathBuf,
        #[arg(long)]
        level: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the bundled case-study architecture.
    Fixture {
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("relation").multiple(false))]
struct SourcesArgs {
    file: PathBuf,
    #[arg(long)]
    level: String,
    #[arg(long)]
    component: String,
    /// Direct sources only.
    #[arg(long, group = "relation")]
    direct: bool,
    /// Transitive accessors.
    #[arg(long, group = "relation")]
    acc: bool,
    /// Direct accessors.
    #[arg(long, group = "relation")]
    dacc: bool,
}

/// A diagnostic for a model or I/O error.
struct Failure(String);

struct Outcome {
    text: String,
    code: u8,
    output: Option<PathBuf>,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome {
            text,
            code: EXIT_OK,
            output: None,
        }
    }

    fn verdict(text: String, holds: bool) -> Self {
        Outcome {
            text,
            code: if holds { EXIT_OK } else { EXIT_VIOLATION },
            output: None,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            });
        }
    };
    match run(&cli) {
        Ok(out) => match emit(&out) {
            Ok(()) => ExitCode::from(out.code),
            Err(e) => {
                eprintln!("compdeps: error: {e}");
                ExitCode::from(EXIT_ERROR)
            }
        },
        Err(Failure(msg)) => {
            eprintln!("compdeps: error: {msg}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn emit(out: &Outcome) -> io::Result<()> {
    match &out.output {
        Some(path) => fs::write(path, &out.text),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(out.text.as_bytes())?;
            stdout.flush()
        }
    }
}

fn load(path: &Path) -> Result<Architecture, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure(format!("cannot read {}: {e}", path.display())))?;
    compdeps::parse(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn model<T>(r: compdeps::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| Failure(e.to_string()))
}

fn to_json<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn words<'a, T: AsRef<str> + 'a>(items: impl IntoIterator<Item = &'a T>) -> String {
    items
        .into_iter()
        .map(|i| i.as_ref())
        .collect::<Vec<_>>()
        .join(" ")
}

fn set_output<T: AsRef<str> + Serialize>(json: bool, set: &BTreeSet<T>) -> String {
    if json {
        to_json(set)
    } else {
        let mut s = words(set);
        s.push('\n');
        s
    }
}

fn partition_text(p: &optimize::LevelPartition) -> String {
    let mut s = String::new();
    for g in &p.groups {
        s.push_str(&words(&g.members));
        if g.high_perf {
            s.push_str(" [high_perf]");
        }
        s.push('\n');
    }
    s
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Validate { file } => {
            let a = load(file)?;
            let report = validate::validate_all(&a);
            let text = if json {
                to_json(&report)
            } else {
                report.to_string()
            };
            Ok(Outcome::verdict(text, report.all_hold()))
        }
        Command::Sources(args) => {
            let a = load(&args.file)?;
            let level = args.level.as_str().into();
            let c = args.component.as_str().into();
            let set = model(if args.direct {
                deps::dsources(&a, &level, &c)
            } else if args.acc {
                deps::acc(&a, &level, &c)
            } else if args.dacc {
                deps::dacc(&a, &level, &c)
            } else {
                deps::sources(&a, &level, &c)
            })?;
            Ok(Outcome::ok(set_output(json, &set)))
        }
        Command::Slice {
            file,
            level,
            channels,
        } => {
            let a = load(file)?;
            let chset: ChannelSet = channels
                .iter()
                .filter(|c| !c.is_empty())
                .map(|c| ChannelId::from(c.as_str()))
                .collect();
            let r = model(slice::slice_report(&a, &level.as_str().into(), &chset))?;
            let text = if json {
                to_json(&r)
            } else {
                let mut s = String::new();
                let _ = writeln!(s, "level: {}", r.level);
                let _ = writeln!(s, "property channels: {}", words(&r.property_channels));
                let _ = writeln!(s, "out components: {}", words(&r.out_components));
                let _ = writeln!(s, "min components: {}", words(&r.min_components));
                let _ = writeln!(
                    s,
                    "system inputs in property: {}",
                    words(&r.system_inputs_in_property)
                );
                let _ = writeln!(s, "no irrelevant channels: {}", r.no_irrelevant);
                let _ = writeln!(s, "all needed input channels: {}", r.all_needed);
                s
            };
            Ok(Outcome::verdict(text, r.holds()))
        }
        Command::Elementary { file, level } => {
            let a = load(file)?;
            let r = model(elementary::elementary_report(&a, &level.as_str().into()))?;
            let text = if json {
                to_json(&r)
            } else {
                r.iter().fold(String::new(), |mut s, (c, v)| {
                    let _ = writeln!(s, "{c}: {v}");
                    s
                })
            };
            Ok(Outcome::ok(text))
        }
        Command::Classify { file, level } => {
            let a = load(file)?;
            let r = model(validate::classify_level(&a, &level.as_str().into()))?;
            let text = if json {
                to_json(&r)
            } else {
                r.iter()
                    .fold(String::new(), |mut s, (x, k): (_, &ChannelClass)| {
                        let _ = writeln!(s, "{x}: {k}");
                        s
                    })
            };
            Ok(Outcome::ok(text))
        }
        Command::ChanDeps {
            file,
            channel,
            transitive,
        } => {
            let a = load(file)?;
            let x = channel.as_str().into();
            let set = model(if *transitive {
                deps::chan_transitive_deps(&a, &x)
            } else {
                deps::chan_direct_deps(&a, &x)
            })?;
            Ok(Outcome::ok(set_output(json, &set)))
        }
        Command::Condense { file, level } => {
            let a = load(file)?;
            let p = model(optimize::condense_level(&a, &level.as_str().into()))?;
            Ok(Outcome::ok(if json {
                to_json(&p)
            } else {
                partition_text(&p)
            }))
        }
        Command::Optimize { file, level } => {
            let a = load(file)?;
            let p = model(optimize::highload_grouping(&a, &level.as_str().into()))?;
            Ok(Outcome::ok(if json {
                to_json(&p)
            } else {
                partition_text(&p)
            }))
        }
        Command::CheckRefinement { file, fine, coarse } => {
            let a = load(file)?;
            let r = model(optimize::verify_level_refinement(
                &a,
                &fine.as_str().into(),
                &coarse.as_str().into(),
            ))?;
            let text = if json {
                to_json(&r)
            } else {
                let mut s = String::new();
                let _ = writeln!(
                    s,
                    "{} refines {}: {}",
                    r.coarse,
                    r.fine,
                    if r.holds { "holds" } else { "violated" }
                );
                for w in &r.witnesses {
                    let _ = writeln!(s, "  - {w}");
                }
                for (f, c) in &r.assignment {
                    let _ = writeln!(s, "{f} -> {c}");
                }
                s
            };
            Ok(Outcome::verdict(text, r.holds))
        }
        Command::ExportDot {
            file,
            level,
            output,
        } => {
            let a = load(file)?;
            let dot = model(compdeps::ingest::export_dot(&a, &level.as_str().into()))?;
            Ok(Outcome {
                text: dot,
                code: EXIT_OK,
                output: output.clone(),
            })
        }
        Command::Fixture { output } => Ok(Outcome {
            text: compdeps::case_study_document(),
            code: EXIT_OK,
            output: output.clone(),
        }),
    }
}
