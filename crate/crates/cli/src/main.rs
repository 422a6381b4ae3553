//! hwp: build and check directed Hamilton-Waterloo factorizations.
//!
//! Exit codes: 0 success, 2 infeasible / invalid / not met, 3 unsupported
//! or open, 4 search budget exhausted, 64 usage, 70 internal defect, 74 I/O.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hwp_core::atlas::{Atlas, AtlasKey, EntryStatus};
use hwp_core::constructions::{check_necessary, solve};
use hwp_core::digraph::complete_symmetric;
use hwp_core::format::{parse_records, write_entry};
use hwp_core::model::{verify_factors, CycleProfile, ProblemSpec};
use hwp_core::search::{exact_search, Budget, SearchInstance, SearchMode, SearchStatus, Witness};
use hwp_core::Error;

const EXIT_FAIL: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;
const EXIT_BUDGET: u8 = 4;
const EXIT_USAGE: u8 = 64;
const EXIT_DEFECT: u8 = 70;
const EXIT_IO: u8 = 74;

#[derive(Parser)]
#[command(
    name = "hwp",
    version,
    about = "Construct and verify directed Hamilton-Waterloo factorizations of K_v*",
    after_help = "EXAMPLES:\n\
                  \n  hwp feasible 8 4 8 3 4\
                  \n  hwp solve 16 4 8 9 6 --out k16.txt\
                  \n  hwp verify k16.txt --spec 16 4 8 9 6\
                  \n  hwp atlas list\
                  \n  hwp oracle 6 --profile 3:5 --prove-none"
)]
struct Cli {
    /// Directory for generated atlas entries [env: HWP_CACHE_DIR]
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BudgetArgs {
    /// Search node limit
    #[arg(long, global = true, default_value_t = 100_000_000)]
    max_nodes: u64,
    /// Search wall-clock limit in seconds
    #[arg(long, global = true, default_value_t = 60)]
    max_seconds: u64,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget {
            max_nodes: self.max_nodes,
            max_time: Duration::from_secs(self.max_seconds),
        }
    }
}

#[derive(Args)]
struct SpecArgs {
    v: usize,
    m: usize,
    n: usize,
    r: usize,
    s: usize,
}

impl SpecArgs {
    fn spec(&self) -> Result<ProblemSpec, Error> {
        ProblemSpec::new(self.v, self.m, self.n, self.r, self.s)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    /// Certificate in atlas text
    AtlasText,
    /// One line per factor count
    Summary,
}

#[derive(Subcommand)]
enum Command {
    /// Check the necessary conditions for HWP*(v; m^r, n^s)
    Feasible(SpecArgs),
    /// Construct a verified factorization
    Solve {
        #[command(flatten)]
        spec: SpecArgs,
        /// Write the certificate here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::AtlasText)]
        format: OutputFormat,
    },
    /// Verify every entry of a certificate file
    Verify {
        file: PathBuf,
        /// Check against this spec instead of each entry's header
        #[arg(long, num_args = 5, value_names = ["V", "M", "N", "R", "S"])]
        spec: Option<Vec<usize>>,
    },
    /// Inspect or extend the atlas of base factorizations
    #[command(subcommand)]
    Atlas(AtlasCommand),
    /// Run the exact search on K_v* (or K_v)
    Oracle {
        v: usize,
        /// Cycle lengths and factor counts, e.g. 3:5 or 4:1,8:6
        #[arg(long)]
        profile: CycleProfile,
        /// Exhaust the search space instead of stopping at a witness
        #[arg(long)]
        prove_none: bool,
        /// Search undirected 2-factorizations of K_v
        #[arg(long)]
        undirected: bool,
    },
}

#[derive(Subcommand)]
enum AtlasCommand {
    /// Verify every built-in and cached entry
    VerifyAll,
    /// List entries with provenance and status
    List,
    /// Load or generate a base entry, given as v,m,n,r,s
    Generate {
        key: AtlasKey,
        /// Write the entry here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::UnsupportedShape(_) | Error::UnsupportedByAtlas(_) | Error::UnknownOpen(_) => EXIT_UNSUPPORTED,
        Error::GenerationTimeout(_) => EXIT_BUDGET,
        Error::Io(_) => EXIT_IO,
        Error::Defect(_) => EXIT_DEFECT,
        _ => EXIT_FAIL,
    }
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(error_code(&e))
}

fn load_atlas(cli: &Cli) -> Result<Atlas, Error> {
    let atlas = Atlas::builtin()?;
    let dir = cli
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os("HWP_CACHE_DIR").map(PathBuf::from));
    Ok(match dir {
        Some(d) => atlas.with_cache_dir(d),
        None => atlas,
    })
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Error> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn feasible(args: &SpecArgs) -> ExitCode {
    let spec = match args.spec() {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    let report = check_necessary(&spec);
    for c in &report.conditions {
        println!("{c}");
    }
    match report.first_violation() {
        None => {
            println!("necessary conditions met for {spec}");
            ExitCode::SUCCESS
        }
        Some(c) => {
            println!("not met: {}", c.violation);
            ExitCode::from(EXIT_FAIL)
        }
    }
}

fn run_solve(cli: &Cli, args: &SpecArgs, out: Option<&PathBuf>, format: OutputFormat) -> Result<(), Error> {
    let spec = args.spec()?;
    let atlas = load_atlas(cli)?;
    let sol = solve(&spec, &atlas, cli.budget.budget())?;
    let counts = sol.factorization.counts();
    eprintln!("solved {spec} via {}: {counts}", sol.method);
    let text = match format {
        OutputFormat::AtlasText => write_entry(&spec, sol.factorization.factors()),
        OutputFormat::Summary => format!(
            "{spec}\nmethod {}\nfactors {}\ncounts {counts}\n",
            sol.method,
            sol.factorization.len()
        ),
    };
    emit(&text, out)
}

fn verify(file: &PathBuf, spec: Option<&[usize]>) -> Result<bool, Error> {
    let text = fs::read_to_string(file)?;
    let records = parse_records(&text)?;
    let forced = match spec {
        Some(&[v, m, n, r, s]) => Some(ProblemSpec::new(v, m, n, r, s)?),
        _ => None,
    };
    if records.is_empty() {
        return Err(Error::InvalidParameter(format!("{} holds no entries", file.display())));
    }
    let mut all = true;
    for rec in &records {
        let spec = forced.unwrap_or(rec.spec);
        let verdict = verify_factors(&complete_symmetric(spec.v)?, &rec.factors, Some(&spec.profile()));
        println!("{spec}: {verdict}");
        all &= verdict.valid;
    }
    Ok(all)
}

fn atlas_command(cli: &Cli, cmd: &AtlasCommand) -> Result<bool, Error> {
    let atlas = load_atlas(cli)?;
    match cmd {
        AtlasCommand::VerifyAll => {
            let mut ok = true;
            let mut count = 0;
            for e in atlas.entries() {
                if let Some(f) = &e.factorization {
                    let verdict = f.verify(Some(&e.key.spec().profile()));
                    ok &= verdict.valid;
                    count += 1;
                    println!("{} {}: {verdict}", e.key, e.provenance);
                }
            }
            if let Some(dir) = atlas.cache_dir().filter(|d| d.is_dir()) {
                for entry in fs::read_dir(dir)? {
                    let path = entry?.path();
                    if path.extension().is_some_and(|x| x == "txt") {
                        let text = fs::read_to_string(&path)?;
                        match hwp_core::atlas::parse_atlas_text(&text) {
                            Ok(es) => {
                                count += es.len();
                                println!("{}: {} valid", path.display(), es.len());
                            }
                            Err(e) => {
                                ok = false;
                                println!("{}: {e}", path.display());
                            }
                        }
                    }
                }
            }
            println!("{count} entries checked, {}", if ok { "all valid" } else { "FAILURES" });
            Ok(ok)
        }
        AtlasCommand::List => {
            for e in atlas.entries() {
                let status = match e.status {
                    EntryStatus::Verified => "verified",
                    EntryStatus::UnknownOpen => "unknown-open",
                };
                println!("{}\t{}\t{}\t{}", e.key, e.key.spec(), e.provenance, status);
            }
            Ok(true)
        }
        AtlasCommand::Generate { key, out } => {
            let e = atlas.ensure_generated(key.spec(), cli.budget.budget())?;
            eprintln!("{} ({})", e.key, e.provenance);
            emit(&e.to_text().expect("verified entry has text"), out.as_ref())?;
            Ok(true)
        }
    }
}

fn oracle(cli: &Cli, v: usize, profile: &CycleProfile, prove_none: bool, undirected: bool) -> Result<u8, Error> {
    let host = complete_symmetric(v)?;
    let inst = if undirected {
        SearchInstance::undirected(host, profile.clone())
    } else {
        SearchInstance::directed(host, profile.clone())
    };
    let mode = if prove_none {
        SearchMode::ProveNone
    } else {
        SearchMode::FindOne
    };
    let out = exact_search(&inst.with_budget(cli.budget.budget()).with_mode(mode))?;
    let st = out.stats;
    let status = match out.status {
        SearchStatus::Found => "found",
        SearchStatus::None => "none",
        SearchStatus::ExhaustedBudget => "exhausted-budget",
    };
    println!(
        "{status} nodes={} depth={} elapsed={:.3}s",
        st.nodes,
        st.max_depth,
        st.elapsed.as_secs_f64()
    );
    match out.witness {
        Some(Witness::Directed(f)) => f.factors().iter().for_each(|x| println!("{x}")),
        Some(Witness::Undirected(u)) => u.factors().iter().for_each(|x| println!("{x}")),
        None => {}
    }
    Ok(match out.status {
        SearchStatus::Found => 0,
        SearchStatus::None => EXIT_FAIL,
        SearchStatus::ExhaustedBudget => EXIT_BUDGET,
    })
}

fn status(r: Result<bool, Error>) -> ExitCode {
    match r {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAIL),
        Err(e) => fail(e),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match &cli.command {
        Command::Feasible(args) => feasible(args),
        Command::Solve { spec, out, format } => status(run_solve(&cli, spec, out.as_ref(), *format).map(|_| true)),
        Command::Verify { file, spec } => status(verify(file, spec.as_deref())),
        Command::Atlas(cmd) => status(atlas_command(&cli, cmd)),
        Command::Oracle {
            v,
            profile,
            prove_none,
            undirected,
        } => match oracle(&cli, *v, profile, *prove_none, *undirected) {
            Ok(code) => ExitCode::from(code),
            Err(e) => fail(e),
        },
    }
}
