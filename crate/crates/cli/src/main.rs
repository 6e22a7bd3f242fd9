//! `syt`: jeu de taquin minors and reconstruction from the command line.
//!
//! Exit status: 0 on success, 1 when the answer is negative (ambiguous
//! reconstruction, non-injective sweep, failed check), 2 on usage or input
//! errors, 3 when the given minors belong to no tableau.

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use syt_core::format::{
    parse_minor_file, parse_shapes, parse_tableau, write_minor_multiset, write_minor_set, write_result, write_tableaux,
    MinorFile,
};
use syt_core::reconstruct::{bound_report, reconstruct_multiset, recover_shape, ShapeRecovery};
use syt_core::verify::{check_identities, injectivity_sweep, verify_conjecture, ConjectureId, SweepConfig, SweepMode};
use syt_core::{
    count_syt, enumerate_syt, jdt_delete, jdt_delete_traced, minor_multiset, minor_set, reconstruct_from_minors,
    ReconstructionResult, DEFAULT_CEILING,
};

const SUCCESS: u8 = 0;
const NEGATIVE: u8 = 1;
const USAGE: u8 = 2;
const INCONSISTENT: u8 = 3;

type Outcome = Result<u8, Box<dyn std::error::Error>>;

#[derive(Debug, Parser)]
#[command(name = "syt", version, about = "Jeu de taquin minors of standard Young tableaux")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Set,
    Multiset,
}

impl From<Mode> for SweepMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Set => SweepMode::Set,
            Mode::Multiset => SweepMode::Multiset,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Which {
    #[value(name = "k_plus_4")]
    KPlus4,
    #[value(name = "k2_plus_2k")]
    K2Plus2k,
}

#[derive(Debug, clap::Args)]
struct SweepOpts {
    /// Worker threads (default: one per core).
    #[arg(long)]
    jobs: Option<usize>,
    /// Largest size accepted; at most 12.
    #[arg(long, env = "SYT_CEILING", default_value_t = DEFAULT_CEILING)]
    ceiling: usize,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

impl SweepOpts {
    fn config(&self) -> Result<SweepConfig, syt_core::Error> {
        Ok(SweepConfig { jobs: self.jobs, ..SweepConfig::with_ceiling(self.ceiling)? })
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every standard Young tableau of size n.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Print only how many there are.
        #[arg(long)]
        count_only: bool,
    },
    /// Delete one entry by jeu de taquin.
    Delete {
        /// Tableau file, or - for standard input.
        #[arg(long)]
        input: String,
        #[arg(long)]
        entry: u32,
        /// Also print the slide path and the vacated corner.
        #[arg(long)]
        trace: bool,
    },
    /// Compute the k-minors of a tableau.
    Minors {
        #[arg(long)]
        input: String,
        #[arg(long)]
        k: usize,
        /// Count each minor once per deletion sequence.
        #[arg(long)]
        multiset: bool,
    },
    /// Recover a tableau from its k-minors.
    Reconstruct {
        #[arg(long)]
        minors: String,
        /// Size of the unknown tableau (default: minor size plus k).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: usize,
        /// Defaults to the kind of file given.
        #[arg(long, value_enum)]
        mode: Option<Mode>,
    },
    /// Recover a shape from the shapes of its k-minors.
    ShapeRecover {
        #[arg(long)]
        shapes: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Check whether minors separate all tableaux of size n.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "set")]
        mode: Mode,
        #[command(flatten)]
        opts: SweepOpts,
    },
    /// Check the promotion and removal identities up to n-max.
    Identities {
        #[arg(long)]
        n_max: usize,
    },
    /// Run injectivity sweeps for one of the two conjectured thresholds.
    Conjecture {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[command(flatten)]
        opts: SweepOpts,
    },
    /// Sizes from which multisets of k-minors provably determine a tableau.
    Bounds {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn read_input(path: &str) -> io::Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

fn result_code(r: &ReconstructionResult) -> u8 {
    match r {
        ReconstructionResult::Unique(_) => SUCCESS,
        ReconstructionResult::Ambiguous(_) => NEGATIVE,
        ReconstructionResult::Inconsistent => INCONSISTENT,
    }
}

fn classes_text(classes: &[Vec<syt_core::CanonicalKey>]) -> String {
    classes.iter().map(|c| c.iter().map(|k| k.as_str()).collect::<Vec<_>>().join(" | ") + "\n").collect()
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Enumerate { n, count_only } => {
            if count_only {
                println!("{}", count_syt(n));
            } else {
                let all: Vec<_> = enumerate_syt(n).collect();
                print!("{}", write_tableaux(&all));
            }
        }
        Command::Delete { input, entry, trace } => {
            let t = parse_tableau(&read_input(&input)?)?;
            if trace {
                let (d, tr) = jdt_delete_traced(&t, entry)?;
                let path: Vec<String> = tr.slide_path.iter().map(ToString::to_string).collect();
                println!("{d}\n\npath: {}\ncorner: {}", path.join(" "), tr.terminal_corner);
            } else {
                println!("{}", jdt_delete(&t, entry)?);
            }
        }
        Command::Minors { input, k, multiset } => {
            let t = parse_tableau(&read_input(&input)?)?;
            if multiset {
                print!("{}", write_minor_multiset(&minor_multiset(&t, k)?));
            } else {
                print!("{}", write_minor_set(&minor_set(&t, k)?));
            }
        }
        Command::Reconstruct { minors, n, k, mode } => {
            let file = parse_minor_file(&read_input(&minors)?)?;
            let n = n.unwrap_or(file.n_minor() + k);
            let result = match (mode, file) {
                (None | Some(Mode::Multiset), MinorFile::Multiset(ms)) => reconstruct_multiset(&ms, n, k)?,
                (Some(Mode::Multiset), MinorFile::Set(_)) => {
                    return Err("multiset mode needs a file with count lines".into());
                }
                (_, file) => reconstruct_from_minors(&file.into_set(), n, k)?,
            };
            print!("{}", write_result(&result));
            return Ok(result_code(&result));
        }
        Command::ShapeRecover { shapes, n, k } => {
            let shapes = parse_shapes(&read_input(&shapes)?)?;
            match recover_shape(&shapes, n, k) {
                Ok(ShapeRecovery::Unique(p)) => println!("unique\n\n{}", rows_line(&p)),
                Ok(ShapeRecovery::Ambiguous(ps)) => {
                    println!("ambiguous\n");
                    for p in &ps {
                        println!("{}", rows_line(p));
                    }
                    return Ok(NEGATIVE);
                }
                Err(syt_core::Error::NoCandidate { .. }) => {
                    println!("inconsistent");
                    return Ok(INCONSISTENT);
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Sweep { n, k, mode, opts } => {
            let report = injectivity_sweep(n, k, mode.into(), &opts.config()?)?;
            match opts.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report.to_json())?),
                Format::Text => {
                    println!(
                        "n = {}, k = {}, mode = {}: {} tableaux, {}",
                        report.n,
                        report.k,
                        report.mode,
                        report.total,
                        if report.injective {
                            "injective".to_string()
                        } else {
                            format!("{} collision classes", report.collision_classes.len())
                        }
                    );
                    print!("{}", classes_text(&report.collision_classes));
                }
            }
            return Ok(if report.injective { SUCCESS } else { NEGATIVE });
        }
        Command::Identities { n_max } => match check_identities(n_max) {
            Ok(r) => println!(
                "all identities hold up to n = {}: {} tableaux, {} promotion checks, {} removal checks",
                r.n_max, r.tableaux, r.promotion_checks, r.removal_checks
            ),
            Err(e @ syt_core::Error::IdentityViolated { .. }) => {
                println!("{e}");
                return Ok(NEGATIVE);
            }
            Err(e) => return Err(e.into()),
        },
        Command::Conjecture { which, k, n_min, n_max, opts } => {
            let which = match which {
                Which::KPlus4 => ConjectureId::KPlus4,
                Which::K2Plus2k => ConjectureId::K2Plus2k,
            };
            let config = opts.config()?;
            let default = which.default_range(k, config.ceiling);
            let lo = n_min.unwrap_or(which.threshold(k));
            let hi = n_max.unwrap_or_else(|| default.last().copied().unwrap_or(lo));
            let n_values: Vec<usize> = (lo..=hi).collect();
            let report = verify_conjecture(which, k, &n_values, &config)?;
            match opts.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report.to_json())?),
                Format::Text => {
                    println!("{} at k = {}", report.conjecture, report.k);
                    for v in &report.verdicts {
                        println!("n = {}: {}", v.n, if v.holds { "holds" } else { "collision found" });
                        print!("{}", classes_text(&v.collisions));
                    }
                }
            }
            return Ok(if report.holds() { SUCCESS } else { NEGATIVE });
        }
        Command::Bounds { k, format } => {
            if k == 0 {
                return Err("k must be at least 1".into());
            }
            let b = bound_report(k);
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&json!(b))?),
                Format::Text => {
                    println!("k = {}", b.k);
                    println!("eq41_min_n = {}", b.eq41_min_n);
                    println!("closed_form_bound = {:.4}", b.closed_form_bound);
                    println!("cubic_bound = {:.4}", b.cubic_bound);
                }
            }
        }
    }
    Ok(SUCCESS)
}

fn rows_line(p: &syt_core::Partition) -> String {
    p.rows().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE)
        }
    }
}
