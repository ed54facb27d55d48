use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "nrt", version, about = "Normalized right transversals, their right loops, and isotopy classification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: GlobalOpts,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Maximum number of transversals (or subsets) to enumerate.
    #[arg(long, global = true, default_value_t = nrt_core::transversal::DEFAULT_ENUMERATION_CAP)]
    pub cap: u128,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Args, Debug, Clone)]
pub struct GroupArgs {
    /// `cyclic:n`, `dihedral:n`, `sym:k`, `alt:k` or `file:<path>`.
    #[arg(long)]
    pub group: String,
}

#[derive(Args, Debug, Clone)]
pub struct PairArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Generators of H, e.g. `(2,3)` or `y^3 x`.
    #[arg(long, allow_hyphen_values = true)]
    pub subgroup: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Inspect a group.
    Group {
        #[command(subcommand)]
        action: GroupAction,
    },
    /// Normalized right transversals of H in G.
    Nrt {
        #[command(subcommand)]
        action: NrtAction,
    },
    /// Classify T(G,H) up to isomorphism or isotopy.
    Classify {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value = "isotopy")]
        relation: nrt_core::Relation,
    },
    /// The dihedral setting: counts, families and loop censuses over ℤₙᴮ.
    Dihedral(DihedralArgs),
    /// Cycle index of Aff(1,p).
    CycleIndex {
        #[arg(long)]
        p: usize,
    },
    /// Run the executable checks.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
enum GroupAction {
    /// Cayley table and structural properties, and optionally a subgroup.
    Show {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, allow_hyphen_values = true)]
        subgroup: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum NrtAction {
    /// List every NRT with its induced right loop's basic data.
    Enumerate {
        #[command(flatten)]
        pair: PairArgs,
        /// Include each induced operation table.
        #[arg(long)]
        tables: bool,
    },
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("modulus").required(true).args(["p", "n"])))]
pub struct DihedralArgs {
    /// An odd prime (count, families) or any modulus (census, loop).
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Subset of ℤₙ∖{0} for `loop`, e.g. `1,3,5`.
    #[arg(long = "B", value_name = "B")]
    pub b: Option<String>,
    #[arg(value_enum)]
    pub mode: DihedralMode,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum DihedralMode {
    Count,
    Families,
    Census,
    Loop,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Run every check (the default when no `--check` is given).
    #[arg(long, conflicts_with = "check")]
    pub all: bool,
    /// Check id or alias; repeatable.
    #[arg(long)]
    pub check: Vec<String>,
    /// Primes for prime-scoped checks; repeatable.
    #[arg(long)]
    pub p: Vec<usize>,
    /// Moduli for modulus-scoped checks; repeatable.
    #[arg(long)]
    pub n: Vec<usize>,
    /// JSON catalog replacing the built-in one.
    #[arg(long)]
    pub catalog: Option<PathBuf>,
    /// List the available checks and exit.
    #[arg(long)]
    pub list: bool,
}

/// Exit status for errors that are not check failures.
fn error_code(err: &anyhow::Error) -> u8 {
    use nrt_core::suite::SuiteError;
    use nrt_core::zn_b::ZnBError;
    use nrt_core::TransversalError;
    for cause in err.chain() {
        let cap = matches!(cause.downcast_ref(), Some(TransversalError::EnumerationTooLarge { .. }))
            || matches!(
                cause.downcast_ref(),
                Some(ZnBError::CapExceeded { .. } | ZnBError::Transversal(TransversalError::EnumerationTooLarge { .. }))
            )
            || matches!(cause.downcast_ref(), Some(SuiteError::CapExceeded { .. }));
        if cap {
            return 3;
        }
    }
    2
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let g = &cli.global;
    let result = match cli.command {
        Command::Group { action: GroupAction::Show { group, subgroup } } => commands::group_show(g, &group, subgroup.as_deref()),
        Command::Nrt { action: NrtAction::Enumerate { pair, tables } } => commands::nrt_enumerate(g, &pair, tables),
        Command::Classify { pair, relation } => commands::classify(g, &pair, relation),
        Command::Dihedral(args) => commands::dihedral(g, &args),
        Command::CycleIndex { p } => commands::cycle_index(g, p),
        Command::Verify(args) => commands::verify(g, &args),
    };
    match result {
        Ok(report) => {
            if let Err(e) = emit(g, &report.text) {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            if report.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(error_code(&e))
        }
    }
}

fn emit(g: &GlobalOpts, text: &str) -> anyhow::Result<()> {
    match &g.output {
        Some(path) => std::fs::write(path, text).map_err(|e| anyhow::anyhow!("cannot write `{}`: {e}", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(out.flush()?)
        }
    }
}
