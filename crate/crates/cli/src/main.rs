mod input;
mod report;

use std::fmt;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use hyperdual::dualics::{
    analyze_ops, bruteforce_minimal_normal, index_via_presentation, BRUTE_FORCE_LIMIT,
};
use hyperdual::{
    DualityReport, FamilySpec, OperationKind, OrientedHypermap, Presentation, DEFAULT_MAX_COSETS,
};

use crate::input::InputDocument;

/// Duality and chirality indices of oriented regular hypermaps.
#[derive(Parser, Debug)]
#[command(name = "hyperdual", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze a hypermap given in perm or fp format.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        flags: Flags,
    },
    /// Build and analyze a member of a named family, e.g. `family metacyclic k=3`.
    Family {
        /// cyclic_selfdual, cyclic_extreme, metacyclic, c6, dihedral_map, quaternion, a5, order20, theorem9
        name: String,
        /// Parameters as key=value.
        parameters: Vec<String>,
        /// Write the constructed hypermap to this file in perm format.
        #[arg(long, value_name = "PATH")]
        emit: Option<PathBuf>,
        #[command(flatten)]
        flags: Flags,
    },
}

#[derive(Args, Debug)]
struct Flags {
    /// Comma-separated operations to analyze.
    #[arg(long, value_delimiter = ',', default_value = "alpha,beta,mirror")]
    ops: Vec<OperationKind>,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
    /// Cross-check every index with the independent algorithms that apply.
    #[arg(long)]
    oracle: bool,
    /// Coset limit for enumerations.
    #[arg(long, value_name = "N", default_value_t = DEFAULT_MAX_COSETS)]
    max_cosets: usize,
}

/// Two algorithms gave different answers.
#[derive(Debug)]
struct Disagreement(String);

impl fmt::Display for Disagreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "oracle disagreement: {}", self.0)
    }
}

impl std::error::Error for Disagreement {}

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.downcast_ref::<Disagreement>().is_some() {
            return 2;
        }
        if let Some(e) = cause.downcast_ref::<hyperdual::Error>() {
            return match e {
                hyperdual::Error::TooLarge { .. } | hyperdual::Error::CosetLimitExceeded(_) => 3,
                hyperdual::Error::InternalInconsistency(_) | hyperdual::Error::NonUniqueMinimum => {
                    2
                }
                _ => 1,
            };
        }
    }
    1
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Analyze { file, flags } => {
            let text = std::fs::read_to_string(&file)
                .with_context(|| format!("reading {}", file.display()))?;
            let doc = InputDocument::parse(&text)
                .with_context(|| format!("parsing {}", file.display()))?;
            let h = doc.hypermap(flags.max_cosets)?;
            let report = analyze(&h, doc.presentation(), &flags)?;
            print(&report, &flags)
        }
        Command::Family {
            name,
            parameters,
            emit,
            flags,
        } => {
            let family = FamilySpec::parse(&name, &parameters)?.family()?;
            let h = family.build_with_cap(flags.max_cosets)?;
            let presentation = family.presentation();
            let report = analyze(&h, presentation.as_ref(), &flags)?;
            if let Some(path) = emit {
                std::fs::write(&path, input::emit(&h))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            print(&report, &flags)
        }
    }
}

fn analyze(
    h: &OrientedHypermap,
    presentation: Option<&Presentation>,
    flags: &Flags,
) -> Result<DualityReport> {
    let mut kinds = Vec::new();
    for kind in &flags.ops {
        if kinds.contains(kind) {
            anyhow::bail!("operation `{kind}` listed twice");
        }
        kinds.push(*kind);
    }
    let ops: Vec<_> = kinds.iter().filter_map(|k| k.spec()).collect();
    let report = analyze_ops(h, &ops)?;
    if flags.oracle {
        oracle(h, presentation, &report, flags.max_cosets)?;
    }
    Ok(report)
}

fn oracle(
    h: &OrientedHypermap,
    presentation: Option<&Presentation>,
    report: &DualityReport,
    max_cosets: usize,
) -> Result<()> {
    let small = h.order() <= BRUTE_FORCE_LIMIT;
    if presentation.is_none() && !small {
        eprintln!(
            "oracle: no independent check applies (no presentation, |G| = {})",
            h.order()
        );
        return Ok(());
    }
    for (kind, summary) in &report.operations {
        let op = kind.spec().expect("named operation");
        if let Some(p) = presentation {
            let coindex = index_via_presentation(p, &op, max_cosets)?;
            if coindex * summary.index != h.order() {
                return Err(Disagreement(format!(
                    "{kind}: presentation coindex {coindex}, kernel index {}, |G| = {}",
                    summary.index,
                    h.order()
                ))
                .into());
            }
        }
        if small {
            let brute = bruteforce_minimal_normal(h, &op)?;
            if brute != summary.index {
                return Err(Disagreement(format!(
                    "{kind}: brute force {brute}, kernel index {}",
                    summary.index
                ))
                .into());
            }
        }
        eprintln!("oracle: {kind} agrees");
    }
    Ok(())
}

fn print(report: &DualityReport, flags: &Flags) -> Result<()> {
    let text = if flags.json {
        serde_json::to_string_pretty(&report::to_json(report))? + "\n"
    } else {
        report::to_text(report)
    };
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}
