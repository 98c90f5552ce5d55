//! The `mtx` command-line front end.
//!
//! Exit codes: 0 success, 1 failed precondition or a certificate that does
//! not classify as an IT, 2 counterexample recorded, 3 search budget
//! exhausted, 64 usage error, 65 malformed input.

use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::run_bench;
use crate::engine::{
    brute_force_count, brute_force_first, find_it_with, FindOptions, ScalingMode, MAX_BENCH_N,
};
use crate::error::{Error, Result};
use crate::generators::{generate, GeneratorSpec, Side};
use crate::instance::{classify_positions, parse_certificate, Cell, Instance};
use crate::lab::{
    find_disjoint_transversals_with, find_nrow_decomposition_with, sweep, verify_drisko_uniqueness,
    Certificate, CertificateRecord, Conjecture, Counterexample, Sampler, SearchLimits,
    SearchReport, SweepParams,
};
use crate::selftest::run_self_test;

pub const EXIT_PRECONDITION: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_PARSE: i32 = 65;

#[derive(Debug, Parser)]
#[command(
    name = "mtx",
    version,
    about = "Independent transversals in matrices over matroids"
)]
struct Cli {
    /// Write data output to this file instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Construct an IT of an instance with at least 2n-1 rows.
    FindIt {
        /// Instance file, or `-` for stdin.
        input: PathBuf,
        /// Print the construction trace to stderr.
        #[arg(short, long)]
        verbose: bool,
        /// Skip the internal invariant checks.
        #[arg(long)]
        no_check: bool,
    },
    /// Exhaustive search for an IT.
    BruteForce {
        input: PathBuf,
        /// Count all ITs instead of printing the first.
        #[arg(long)]
        count: bool,
    },
    /// Classify a set of cells as none, PT, IPT or IT.
    Classify {
        instance: PathBuf,
        certificate: PathBuf,
    },
    /// Print a generated instance.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Search for cell-disjoint ITs.
    CheckDisjoint {
        input: PathBuf,
        /// Number of ITs to pack; defaults to m - n + 1.
        #[arg(long)]
        target: Option<usize>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Search for n rows that split into n disjoint ITs.
    CheckNrow {
        input: PathBuf,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Check every (2n-2) x n row-latin rectangle on k symbols, up to row order.
    VerifyDrisko {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Run a packing or decomposition finder over many instances.
    Sweep(SweepArgs),
    /// Oracle-call scaling of the constructive finder on random instances.
    Bench {
        /// Comma-separated widths.
        #[arg(long, value_delimiter = ',', default_values_t = [8, 16, 32])]
        n: Vec<usize>,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = BenchMode::Both)]
        mode: BenchMode,
    },
    /// Check the matroid axioms on the built-in fixtures.
    SelfTest,
}

#[derive(Debug, Subcommand)]
enum Family {
    /// R_{m,n}.
    #[command(name = "R", alias = "r")]
    R {
        m: usize,
        n: usize,
    },
    /// T_n.
    #[command(name = "T", alias = "t")]
    T {
        n: usize,
    },
    Fig4Left,
    Fig4Right,
    RandomRowlatin {
        m: usize,
        n: usize,
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    RandomLinear {
        m: usize,
        n: usize,
        p: u64,
        dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct LimitArgs {
    /// Backtracking nodes allowed per search.
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Instances allowed per enumeration.
    #[arg(long)]
    max_instances: Option<usize>,
}

impl LimitArgs {
    fn limits(&self) -> SearchLimits {
        let mut limits = SearchLimits::default();
        if let Some(v) = self.max_nodes {
            limits.max_nodes = v;
        }
        if let Some(v) = self.max_instances {
            limits.max_instances = v;
        }
        limits
    }
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    conjecture: ConjectureArg,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    /// Alphabet size for row-latin instances; defaults to n.
    #[arg(long)]
    k: Option<usize>,
    /// Prime field for matroid instances.
    #[arg(long, default_value_t = 5)]
    p: u64,
    /// Vector dimension for matroid instances; defaults to n.
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long, value_enum, default_value_t = SamplerArg::Random)]
    sampler: SamplerArg,
    /// Instances drawn by the random sampler.
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ConjectureArg {
    Disjoint,
    Nrow,
    DisjointMatroid,
    NrowMatroid,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SamplerArg {
    Exhaustive,
    Random,
    RFamily,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BenchMode {
    Rowlatin,
    Linear,
    Both,
}

/// Parses `argv` (including the program name) and runs the command.
/// Data goes to `out` (or the `--output` file), diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let mut buffer = Vec::new();
    let code = match dispatch(cli.command, &mut buffer, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &buffer),
        None => out.write_all(&buffer),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return EXIT_PRECONDITION;
    }
    code
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        Error::Parameters(_) => EXIT_USAGE,
        Error::BudgetExceeded(_) => EXIT_BUDGET,
        _ => EXIT_PRECONDITION,
    }
}

fn dispatch(command: Command, out: &mut Vec<u8>, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::FindIt {
            input,
            verbose,
            no_check,
        } => {
            let inst = load(&input)?;
            let options = FindOptions {
                check_claims: !no_check,
                trace: verbose,
            };
            let outcome = find_it_with(&inst, &options)?;
            for line in &outcome.trace {
                writeln!(err, "{line}")?;
            }
            out.extend_from_slice(outcome.certificate.to_lines(&inst).as_bytes());
            writeln!(
                out,
                "calls={} depth={}",
                outcome.stats.base_calls, outcome.stats.recursion_depth
            )?;
            Ok(0)
        }
        Command::BruteForce { input, count } => {
            let inst = load(&input)?;
            if count {
                writeln!(out, "{}", brute_force_count(&inst)?)?;
            } else {
                match brute_force_first(&inst)? {
                    Some(cert) => out.extend_from_slice(cert.to_lines(&inst).as_bytes()),
                    None => writeln!(out, "none")?,
                }
            }
            Ok(0)
        }
        Command::Classify {
            instance,
            certificate,
        } => {
            let inst = load(&instance)?;
            let lines = parse_certificate(&read_input(&certificate)?)?;
            for line in &lines {
                inst.check_cell(line.cell)?;
                if inst.label(line.cell) != line.label {
                    return Err(Error::Precondition(format!(
                        "cell ({}, {}) holds {}, not {}",
                        line.cell.row,
                        line.cell.col,
                        inst.label(line.cell),
                        line.label
                    )));
                }
            }
            let cells: Vec<Cell> = lines.iter().map(|l| l.cell).collect();
            let cert = classify_positions(&inst, &cells)?;
            writeln!(out, "{}", cert.classification)?;
            Ok(if cert.is_it() { 0 } else { EXIT_PRECONDITION })
        }
        Command::Gen { family } => {
            let spec = match family {
                Family::R { m, n } => GeneratorSpec::R { m, n },
                Family::T { n } => GeneratorSpec::T { n },
                Family::Fig4Left => GeneratorSpec::Fig4(Side::Left),
                Family::Fig4Right => GeneratorSpec::Fig4(Side::Right),
                Family::RandomRowlatin { m, n, k, seed } => {
                    GeneratorSpec::RandomRowLatin { m, n, k, seed }
                }
                Family::RandomLinear { m, n, p, dim, seed } => {
                    GeneratorSpec::RandomLinear { m, n, p, dim, seed }
                }
            };
            out.extend_from_slice(generate(spec)?.to_text().as_bytes());
            Ok(0)
        }
        Command::CheckDisjoint {
            input,
            target,
            limits,
        } => {
            let inst = load(&input)?;
            let target = match target {
                Some(t) => t,
                None if inst.m() >= inst.n() => inst.m() + 1 - inst.n(),
                None => {
                    return Err(Error::Precondition(
                        "fewer rows than columns; pass --target".into(),
                    ))
                }
            };
            let limits = limits.limits();
            let found = find_disjoint_transversals_with(&inst, target, &limits);
            let report = single_report(
                "check-disjoint",
                inst,
                found.map(|o| o.map(Certificate::Packing)),
                || format!("no packing of {target} disjoint ITs"),
            )?
            .config("target", target);
            out.extend_from_slice(report.to_text().as_bytes());
            Ok(report.exit_code())
        }
        Command::CheckNrow { input, limits } => {
            let inst = load(&input)?;
            let found = find_nrow_decomposition_with(&inst, &limits.limits());
            let report = single_report(
                "check-nrow",
                inst,
                found.map(|o| o.map(Certificate::Decomposition)),
                || "no decomposition of n rows into n ITs".to_string(),
            )?;
            out.extend_from_slice(report.to_text().as_bytes());
            Ok(report.exit_code())
        }
        Command::VerifyDrisko { n, k, limits } => {
            let report = verify_drisko_uniqueness(n, k, &limits.limits())?;
            out.extend_from_slice(report.to_text().as_bytes());
            Ok(report.exit_code())
        }
        Command::Sweep(args) => {
            let params = SweepParams {
                conjecture: match args.conjecture {
                    ConjectureArg::Disjoint => Conjecture::Disjoint,
                    ConjectureArg::Nrow => Conjecture::Nrow,
                    ConjectureArg::DisjointMatroid => Conjecture::DisjointMatroid,
                    ConjectureArg::NrowMatroid => Conjecture::NrowMatroid,
                },
                n: args.n,
                m: args.m,
                k: args.k.unwrap_or(args.n),
                p: args.p,
                dim: args.dim.unwrap_or(args.n),
                sampler: match args.sampler {
                    SamplerArg::Exhaustive => Sampler::Exhaustive,
                    SamplerArg::Random => Sampler::Random {
                        count: args.count,
                        seed: args.seed,
                    },
                    SamplerArg::RFamily => Sampler::RFamily,
                },
                limits: args.limits.limits(),
            };
            let report = sweep(&params)?;
            out.extend_from_slice(report.to_text().as_bytes());
            Ok(report.exit_code())
        }
        Command::Bench {
            n,
            trials,
            seed,
            mode,
        } => {
            if let Some(&bad) = n.iter().find(|&&v| v == 0 || v > MAX_BENCH_N) {
                return Err(Error::Parameters(format!(
                    "widths must lie in 1..={MAX_BENCH_N}, got {bad}"
                )));
            }
            let modes: &[ScalingMode] = match mode {
                BenchMode::Rowlatin => &[ScalingMode::RowLatin],
                BenchMode::Linear => &[ScalingMode::Linear],
                BenchMode::Both => &[ScalingMode::RowLatin, ScalingMode::Linear],
            };
            out.extend_from_slice(run_bench(modes, &n, trials, seed)?.to_text().as_bytes());
            Ok(0)
        }
        Command::SelfTest => {
            let mut failed = false;
            for r in run_self_test()? {
                let verdict = if r.report.passed() { "ok" } else { "FAILED" };
                failed |= !r.report.passed();
                writeln!(
                    out,
                    "{} {} ground={} subsets={} violations={} {verdict}",
                    r.kind,
                    r.name,
                    r.report.ground_size,
                    r.report.subsets_checked,
                    r.report.violation_count
                )?;
            }
            Ok(if failed { EXIT_PRECONDITION } else { 0 })
        }
    }
}

/// Wraps one finder result as a report; a budget overrun becomes an
/// unresolved entry rather than an error.
fn single_report(
    title: &str,
    inst: Instance,
    found: Result<Option<Certificate>>,
    missing: impl FnOnce() -> String,
) -> Result<SearchReport> {
    let mut report = SearchReport::new(title);
    report.instances_scanned = 1;
    match found {
        Ok(Some(certificate)) => report.certificates.push(CertificateRecord {
            index: 0,
            instance: inst,
            certificate,
        }),
        Ok(None) => report.counterexamples.push(Counterexample {
            index: 0,
            instance: inst,
            reason: missing(),
        }),
        Err(Error::BudgetExceeded(_)) => {
            report.unresolved.push(0);
            report.budget_exceeded = true;
        }
        Err(e) => return Err(e),
    }
    Ok(report)
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn load(path: &Path) -> Result<Instance> {
    Instance::parse(&read_input(path)?)
}
