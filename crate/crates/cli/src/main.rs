//! zlab: exact arithmetic for Fibonacci-subsequence numeration systems.
//!
//! Subcommands cover sequence generation, greedy digit decompositions,
//! recurrence identity checks, generating functions, PLRS tools, and
//! brute-force audits. Output is plain text, JSON, or CSV; big integers
//! always cross the boundary as decimal strings, and identical invocations
//! produce bit-identical output.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use std::io::Write;
use std::path::PathBuf;
use zlab_core::decomp::{decompose_to_text, greedy_decompose, validate_with_bound, DecompScheme};
use zlab_core::identities::{
    check_gap_gibonacci_recurrence, check_gap_recurrence, check_gibonacci_combination,
    check_plrs_seed_identity, check_sample_recurrences, check_two_gap,
};
use zlab_core::multisection::{expand_series, fib_gf, lucas_gf, verify_multisection, RationalGf};
use zlab_core::oracle::{audit_digit_bound, audit_uniqueness_jobs, AuditConfig, LegalityPredicate};
use zlab_core::plrs::{bijection_audit, gap_plrs_candidate, generate_plrs, is_plrs_match, PlrsSpec};
use zlab_core::rng::{SplitMix64, DEFAULT_SEED};
use zlab_core::sequences::{fib_terms, gap_element, gibonacci_terms, lucas, GapSpec, GibonacciSpec};
use zlab_core::{Error, IdentityName, IdentityReport, Natural, SeriesKind};

const DESK_SCALE_MAX_N: u64 = 10_000;
const DESK_SCALE_MAX_ENUM: u64 = 1_000_000;

#[derive(Parser)]
#[command(
    name = "zlab",
    version,
    about = "Exact arithmetic for Fibonacci-subsequence numeration systems",
    after_help = "\
The stride is always explicit: a subsequence is F(step*k + offset) with
step >= 2 and 0 <= offset < step. Conventions that define an \"n-gap\"
subsequence by indices congruent to m modulo n+1 correspond to step = n+1;
conventions whose recurrences run over F(nk+m) correspond to step = n.

Exit codes:
  0  success
  2  usage error
  3  no decomposition exists (unrepresentable residue)
  4  identity or PLRS check reported failures
  5  output I/O failure"
)]
struct Cli {
    /// Output format (also read from ZLAB_FORMAT)
    #[arg(long, global = true, value_enum, env = "ZLAB_FORMAT", default_value = "text")]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print terms of fib, lucas, gib, or a stride subsequence
    Seq(SeqArgs),
    /// Greedy digit decomposition of N under a scheme
    Decompose(DecomposeArgs),
    /// Check a recurrence identity over a range (exit 4 on any failure)
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Closed-form generating function of a subsequence
    Gf(GfArgs),
    /// Positive linear recurrence sequence tools
    #[command(subcommand)]
    Plrs(PlrsCommand),
    /// Brute-force audits; findings are data, completion is exit 0
    #[command(subcommand)]
    Audit(AuditCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeqKind {
    Fib,
    Lucas,
    Gib,
    Gap,
}

#[derive(Args)]
struct SeqArgs {
    /// Which sequence to generate
    #[arg(long, value_enum)]
    kind: SeqKind,
    /// Number of terms to print
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    count: u64,
    /// First seed (gib only)
    #[arg(long, value_parser = parse_natural)]
    g1: Option<Natural>,
    /// Second seed (gib only)
    #[arg(long, value_parser = parse_natural)]
    g2: Option<Natural>,
    /// Index stride d >= 2 (gap only)
    #[arg(long)]
    step: Option<u64>,
    /// Index offset in [0, step) (gap only)
    #[arg(long)]
    offset: Option<u64>,
}

#[derive(Args)]
struct DecomposeArgs {
    /// The positive integer to decompose (decimal)
    #[arg(value_parser = parse_natural)]
    n: Natural,
    /// Digit scheme; gap needs --step/--offset
    #[arg(long, value_enum)]
    scheme: SchemeArg,
    #[arg(long)]
    step: Option<u64>,
    #[arg(long)]
    offset: Option<u64>,
    /// Override the gap validator's digit bound (default L(step))
    #[arg(long, value_parser = parse_natural)]
    bound: Option<Natural>,
    /// Also print zero digits
    #[arg(long)]
    verbose: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchemeArg {
    Classic,
    Even,
    Gap,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// F(3k+2) = 4*F(3(k-1)+2) + F(3(k-2)+2) for k in [2, k-max]
    #[command(name = "2gap")]
    TwoGap {
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(2..))]
        k_max: u64,
    },
    /// The four stride-4..7 offset-2 recurrences with coefficients 7,11,18,29
    Samples {
        #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u64).range(2..))]
        k_max: u64,
    },
    /// F(dk+m) = L(d)*F(d(k-1)+m) + (-1)^(d-1)*F(d(k-2)+m)
    Gap {
        #[arg(long)]
        step: u64,
        /// Offset; omitted = every offset in [0, step)
        #[arg(long)]
        offset: Option<u64>,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(2..))]
        k_max: u64,
    },
    /// G(n) = F(n-2)*G(1) + F(n-1)*G(2) for n in [3, n-max]
    Gibonacci {
        #[arg(long, value_parser = parse_natural)]
        g1: Option<Natural>,
        #[arg(long, value_parser = parse_natural)]
        g2: Option<Natural>,
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(3..))]
        n_max: u64,
        /// Check this many seeded random (g1, g2) pairs instead
        #[arg(long, conflicts_with_all = ["g1", "g2"])]
        pairs: Option<u64>,
        /// Largest random seed value
        #[arg(long, default_value_t = 1_000_000)]
        max_seed: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// The stride recurrence for arbitrary positive seeds
    GapGibonacci {
        #[arg(long, value_parser = parse_natural)]
        g1: Option<Natural>,
        #[arg(long, value_parser = parse_natural)]
        g2: Option<Natural>,
        #[arg(long)]
        step: Option<u64>,
        #[arg(long)]
        offset: Option<u64>,
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(2..))]
        k_max: u64,
        /// Check this many seeded random (seeds, stride, offset) specs instead
        #[arg(long, conflicts_with_all = ["g1", "g2", "step", "offset"])]
        specs: Option<u64>,
        /// Largest random stride
        #[arg(long, default_value_t = 8)]
        max_step: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// The claimed seed identity F(2n+1) = L(n)*F(n+1) + 2 for odd n
    /// (fails as printed; the discrepancy table is the expected output)
    Seed {
        #[arg(long, default_value_t = 21, value_parser = clap::value_parser!(u64).range(3..))]
        n_max: u64,
    },
    /// Series coefficients of the closed generating forms vs direct terms
    Gf {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        step: u64,
        /// Offset; omitted = every offset in [0, step)
        #[arg(long)]
        offset: Option<u64>,
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
        terms: u64,
        #[arg(long, value_enum, default_value = "both")]
        kind: GfKindArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GfKindArg {
    Fib,
    Lucas,
    Both,
}

#[derive(Args)]
struct GfArgs {
    /// Fibonacci or Lucas subsequence
    #[arg(long, value_enum, default_value = "fib")]
    kind: GfSingleKind,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    step: u64,
    #[arg(long, default_value_t = 0)]
    offset: u64,
    /// Also expand this many series coefficients
    #[arg(long)]
    terms: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GfSingleKind {
    Fib,
    Lucas,
}

#[derive(Subcommand)]
enum PlrsCommand {
    /// Generate H(1..=count) from the seed rule and the recurrence
    Generate {
        /// Recurrence coefficients c1,...,cL (comma separated)
        #[arg(long, value_delimiter = ',', required = true, value_parser = parse_natural)]
        coeffs: Vec<Natural>,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Check whether given terms satisfy the PLRS conditions (exit 4 if not)
    Check {
        #[arg(long, value_delimiter = ',', required = true, value_parser = parse_natural)]
        coeffs: Vec<Natural>,
        /// Candidate terms H(1),H(2),... (comma separated, at least L+2)
        #[arg(long, value_delimiter = ',', required = true, value_parser = parse_natural)]
        terms: Vec<Natural>,
    },
    /// The order-2 candidate (L(step), 1) of an odd stride, with per-offset verdicts
    Candidate {
        #[arg(long)]
        step: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LegalityArg {
    None,
    ClassicRule,
    EvenRule,
    BoundOnly,
}

#[derive(Subcommand)]
enum AuditCommand {
    /// Count legal representations of every N in [1, max-n]
    Uniqueness {
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        #[arg(long)]
        step: Option<u64>,
        #[arg(long)]
        offset: Option<u64>,
        #[arg(long, default_value_t = 2000, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        /// Digit bound for the enumeration (default: the scheme's bound)
        #[arg(long, value_parser = parse_natural)]
        bound: Option<Natural>,
        /// Legality predicate (default: the scheme's own rule set)
        #[arg(long, value_enum)]
        legality: Option<LegalityArg>,
        /// Write per-N rows (csv) or the summary (json) to this path
        #[arg(long)]
        out: Option<PathBuf>,
        /// Partition the range across this many workers
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
        /// Allow ranges beyond the desk-scale guideline
        #[arg(long)]
        force: bool,
    },
    /// Maximum greedy digit over [1, max-n] with its first witness
    DigitBound {
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        #[arg(long)]
        step: Option<u64>,
        #[arg(long)]
        offset: Option<u64>,
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        force: bool,
    },
    /// Interval-vs-digit-string bijection audit for a PLRS
    Bijection {
        /// Recurrence coefficients c1,...,cL (comma separated)
        #[arg(long, value_delimiter = ',', required = true)]
        coeffs: Vec<u64>,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
        j_max: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        force: bool,
    },
}

fn parse_natural(s: &str) -> Result<Natural, String> {
    s.parse::<Natural>()
        .map_err(|e| format!("not a decimal non-negative integer: {e}"))
}

enum Failure {
    Usage(String),
    NoDecomposition(String),
    ChecksFailed,
    Io(String),
}

impl Failure {
    fn exit(self) -> ! {
        let (code, message) = match self {
            Failure::Usage(m) => (2, Some(m)),
            Failure::NoDecomposition(m) => (3, Some(m)),
            Failure::ChecksFailed => (4, None),
            Failure::Io(m) => (5, Some(m)),
        };
        if let Some(message) = message {
            eprintln!("error: {message}");
        }
        std::process::exit(code);
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::Unrepresentable { .. } => Failure::NoDecomposition(err.to_string()),
            _ => Failure::Usage(err.to_string()),
        }
    }
}

/// Rust masks SIGPIPE, turning `zlab ... | head` into a panic on write.
/// Restore the default disposition so pipelines terminate us quietly.
#[cfg(unix)]
fn restore_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn restore_sigpipe() {}

fn main() {
    restore_sigpipe();
    let cli = Cli::parse();
    let format = cli.format;
    let result = match cli.command {
        Command::Seq(args) => cmd_seq(args, format),
        Command::Decompose(args) => cmd_decompose(args, format),
        Command::Verify(command) => cmd_verify(command, format),
        Command::Gf(args) => cmd_gf(args, format),
        Command::Plrs(command) => cmd_plrs(command, format),
        Command::Audit(command) => cmd_audit(command, format),
    };
    if let Err(failure) = result {
        failure.exit();
    }
}

// ---- seq ----

fn cmd_seq(args: SeqArgs, format: OutputFormat) -> Result<(), Failure> {
    if args.kind != SeqKind::Gib && (args.g1.is_some() || args.g2.is_some()) {
        return Err(Failure::Usage("--g1/--g2 apply only to --kind gib".into()));
    }
    if args.kind != SeqKind::Gap && (args.step.is_some() || args.offset.is_some()) {
        return Err(Failure::Usage(
            "--step/--offset apply only to --kind gap".into(),
        ));
    }
    let count = args.count;
    let (label, start, terms): (&str, u64, Vec<Natural>) = match args.kind {
        SeqKind::Fib => ("fib", 0, fib_terms().take(count as usize).collect()),
        SeqKind::Lucas => ("lucas", 0, (0..count).map(lucas).collect()),
        SeqKind::Gib => {
            let (g1, g2) = match (args.g1, args.g2) {
                (Some(g1), Some(g2)) => (g1, g2),
                _ => return Err(Failure::Usage("--kind gib needs --g1 and --g2".into())),
            };
            let spec = GibonacciSpec::new(g1, g2)?;
            ("gib", 1, gibonacci_terms(&spec).take(count as usize).collect())
        }
        SeqKind::Gap => {
            let (step, offset) = match (args.step, args.offset) {
                (Some(step), Some(offset)) => (step, offset),
                _ => return Err(Failure::Usage("--kind gap needs --step and --offset".into())),
            };
            let spec = GapSpec::new(step, offset)?;
            let start = u64::from(offset == 0);
            let terms = (start..start + count)
                .map(|k| gap_element(&spec, k))
                .collect::<Result<Vec<_>, _>>()?;
            ("gap", start, terms)
        }
    };
    match format {
        OutputFormat::Text => {
            let rendered: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
            println!("{}", rendered.join(" "));
        }
        OutputFormat::Json => {
            print_json(&serde_json::json!({
                "kind": label,
                "start": start,
                "terms": terms.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            }));
        }
        OutputFormat::Csv => {
            println!("k,value");
            for (i, term) in terms.iter().enumerate() {
                println!("{},{term}", start + i as u64);
            }
        }
    }
    Ok(())
}

// ---- decompose ----

fn build_scheme(
    tag: SchemeArg,
    step: Option<u64>,
    offset: Option<u64>,
) -> Result<DecompScheme, Failure> {
    match tag {
        SchemeArg::Classic | SchemeArg::Even => {
            if step.is_some() || offset.is_some() {
                return Err(Failure::Usage(
                    "--step/--offset apply only to --scheme gap".into(),
                ));
            }
            Ok(if tag == SchemeArg::Classic {
                DecompScheme::Classic
            } else {
                DecompScheme::Even
            })
        }
        SchemeArg::Gap => {
            let (step, offset) = match (step, offset) {
                (Some(step), Some(offset)) => (step, offset),
                _ => {
                    return Err(Failure::Usage(
                        "--scheme gap needs --step and --offset".into(),
                    ))
                }
            };
            Ok(DecompScheme::Gap(GapSpec::new(step, offset)?))
        }
    }
}

fn cmd_decompose(args: DecomposeArgs, format: OutputFormat) -> Result<(), Failure> {
    if args.n.is_zero() {
        return Err(Failure::Usage("N must be at least 1".into()));
    }
    let scheme = build_scheme(args.scheme, args.step, args.offset)?;
    let decomposition = greedy_decompose(&args.n, &scheme)?;
    match format {
        OutputFormat::Text => {
            println!("{}", decompose_to_text(&decomposition, args.verbose));
            let verdict = match &args.bound {
                Some(bound) => validate_with_bound(&decomposition, bound),
                None => zlab_core::decomp::validate(&decomposition),
            };
            match verdict.violated_rule {
                None => println!("legal: yes"),
                Some(rule) => println!("legal: no ({rule})"),
            }
        }
        OutputFormat::Json => {
            print_json(&decomposition.to_json_with_bound(args.bound.as_ref()));
        }
        OutputFormat::Csv => {
            println!("k,fib_index,element,digit");
            for entry in decomposition.digits() {
                println!(
                    "{},{},{},{}",
                    entry.position, entry.fib_index, entry.element, entry.digit
                );
            }
        }
    }
    Ok(())
}

// ---- verify ----

fn cmd_verify(command: VerifyCommand, format: OutputFormat) -> Result<(), Failure> {
    let reports = match command {
        VerifyCommand::TwoGap { k_max } => vec![check_two_gap(k_max)],
        VerifyCommand::Samples { k_max } => vec![check_sample_recurrences(k_max)],
        VerifyCommand::Gap { step, offset, k_max } => {
            let offsets: Vec<u64> = match offset {
                Some(offset) => vec![offset],
                None => (0..step).collect(),
            };
            let mut reports = Vec::with_capacity(offsets.len());
            for m in offsets {
                reports.push(check_gap_recurrence(&GapSpec::new(step, m)?, k_max));
            }
            reports
        }
        VerifyCommand::Gibonacci {
            g1,
            g2,
            n_max,
            pairs,
            max_seed,
            seed,
        } => match pairs {
            None => {
                let (g1, g2) = match (g1, g2) {
                    (Some(g1), Some(g2)) => (g1, g2),
                    _ => {
                        return Err(Failure::Usage(
                            "verify gibonacci needs --g1 and --g2 (or --pairs)".into(),
                        ))
                    }
                };
                vec![check_gibonacci_combination(&GibonacciSpec::new(g1, g2)?, n_max)]
            }
            Some(pairs) => {
                let mut rng = SplitMix64::new(seed);
                let mut sweep = Vec::with_capacity(pairs as usize);
                for _ in 0..pairs {
                    let g1 = Natural::from(rng.in_range(1, max_seed));
                    let g2 = Natural::from(rng.in_range(1, max_seed));
                    sweep.push(check_gibonacci_combination(
                        &GibonacciSpec::new(g1, g2)?,
                        n_max,
                    ));
                }
                vec![IdentityReport::merge(
                    IdentityName::GibonacciCombination,
                    format!(
                        "{pairs} random seed pairs <= {max_seed} (seed {seed}), n in [3, {n_max}]"
                    ),
                    sweep,
                )]
            }
        },
        VerifyCommand::GapGibonacci {
            g1,
            g2,
            step,
            offset,
            k_max,
            specs,
            max_step,
            seed,
        } => match specs {
            None => {
                let (g1, g2, step, offset) = match (g1, g2, step, offset) {
                    (Some(g1), Some(g2), Some(step), Some(offset)) => (g1, g2, step, offset),
                    _ => {
                        return Err(Failure::Usage(
                            "verify gap-gibonacci needs --g1, --g2, --step, --offset (or --specs)"
                                .into(),
                        ))
                    }
                };
                vec![check_gap_gibonacci_recurrence(
                    &GibonacciSpec::new(g1, g2)?,
                    &GapSpec::new(step, offset)?,
                    k_max,
                )]
            }
            Some(specs) => {
                if max_step < 2 {
                    return Err(Failure::Usage("--max-step must be at least 2".into()));
                }
                let mut rng = SplitMix64::new(seed);
                let mut sweep = Vec::with_capacity(specs as usize);
                for _ in 0..specs {
                    let g1 = Natural::from(rng.in_range(1, 1_000_000));
                    let g2 = Natural::from(rng.in_range(1, 1_000_000));
                    let step = rng.in_range(2, max_step);
                    let offset = rng.in_range(0, step - 1);
                    sweep.push(check_gap_gibonacci_recurrence(
                        &GibonacciSpec::new(g1, g2)?,
                        &GapSpec::new(step, offset)?,
                        k_max,
                    ));
                }
                vec![IdentityReport::merge(
                    IdentityName::GapGibonacciRecurrence,
                    format!(
                        "{specs} random specs, d in [2, {max_step}] (seed {seed}), k up to {k_max}"
                    ),
                    sweep,
                )]
            }
        },
        VerifyCommand::Seed { n_max } => vec![check_plrs_seed_identity(n_max)],
        VerifyCommand::Gf {
            step,
            offset,
            terms,
            kind,
        } => {
            let offsets: Vec<u64> = match offset {
                Some(offset) => vec![offset],
                None => (0..step).collect(),
            };
            let kinds: &[SeriesKind] = match kind {
                GfKindArg::Fib => &[SeriesKind::Fib],
                GfKindArg::Lucas => &[SeriesKind::Lucas],
                GfKindArg::Both => &[SeriesKind::Fib, SeriesKind::Lucas],
            };
            offsets
                .iter()
                .flat_map(|&m| {
                    kinds
                        .iter()
                        .map(move |&kind| verify_multisection(step, m, terms as usize, kind))
                })
                .collect()
        }
    };
    emit_reports(&reports, format);
    if reports.iter().all(|r| r.passed) {
        Ok(())
    } else {
        Err(Failure::ChecksFailed)
    }
}

fn emit_reports(reports: &[IdentityReport], format: OutputFormat) {
    match format {
        OutputFormat::Text => {
            for (i, report) in reports.iter().enumerate() {
                if i > 0 {
                    println!();
                }
                println!("identity: {}", report.identity);
                println!("range: {}", report.range);
                println!("passed: {}", report.passed);
                if !report.failures.is_empty() {
                    println!("failures ({}):", report.failures.len());
                    for failure in &report.failures {
                        let params: Vec<String> = failure
                            .params
                            .iter()
                            .map(|(k, v)| format!("{k}={v}"))
                            .collect();
                        println!(
                            "  {}: lhs={} rhs={}",
                            params.join(" "),
                            failure.lhs,
                            failure.rhs
                        );
                    }
                }
            }
        }
        OutputFormat::Json => {
            if reports.len() == 1 {
                print_json(&reports[0].to_json());
            } else {
                let array: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
                print_json(&serde_json::Value::Array(array));
            }
        }
        OutputFormat::Csv => {
            println!("identity,range,passed,failures");
            for report in reports {
                println!(
                    "{},\"{}\",{},{}",
                    report.identity,
                    report.range,
                    report.passed,
                    report.failures.len()
                );
            }
        }
    }
}

// ---- gf ----

fn cmd_gf(args: GfArgs, format: OutputFormat) -> Result<(), Failure> {
    let gf: RationalGf = match args.kind {
        GfSingleKind::Fib => fib_gf(args.step, args.offset),
        GfSingleKind::Lucas => lucas_gf(args.step, args.offset),
    };
    let series = match args.terms {
        Some(terms) => Some(expand_series(&gf, terms)?),
        None => None,
    };
    match format {
        OutputFormat::Text => {
            println!("{gf}");
            if let Some(series) = &series {
                let rendered: Vec<String> = series.iter().map(|c| c.to_string()).collect();
                println!("series: {}", rendered.join(" "));
            }
        }
        OutputFormat::Json => {
            let kind = if args.kind == GfSingleKind::Fib { "fib" } else { "lucas" };
            print_json(&serde_json::json!({
                "kind": kind,
                "step": args.step,
                "offset": args.offset,
                "gf": gf.to_json(),
                "series": series
                    .as_ref()
                    .map(|s| s.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
            }));
        }
        OutputFormat::Csv => {
            println!("k,coefficient");
            for (k, c) in series.unwrap_or_default().iter().enumerate() {
                println!("{k},{c}");
            }
        }
    }
    Ok(())
}

// ---- plrs ----

fn cmd_plrs(command: PlrsCommand, format: OutputFormat) -> Result<(), Failure> {
    match command {
        PlrsCommand::Generate { coeffs, count } => {
            let spec = PlrsSpec::new(coeffs)?;
            let sequence = generate_plrs(&spec, count as usize);
            match format {
                OutputFormat::Text => {
                    let rendered: Vec<String> =
                        sequence.terms().iter().map(|t| t.to_string()).collect();
                    println!("{}", rendered.join(" "));
                }
                OutputFormat::Json => {
                    print_json(&serde_json::json!({
                        "coefficients": spec
                            .coefficients()
                            .iter()
                            .map(|c| c.to_string())
                            .collect::<Vec<_>>(),
                        "terms": sequence
                            .terms()
                            .iter()
                            .map(|t| t.to_string())
                            .collect::<Vec<_>>(),
                    }));
                }
                OutputFormat::Csv => {
                    println!("n,term");
                    for (i, term) in sequence.terms().iter().enumerate() {
                        println!("{},{term}", i + 1);
                    }
                }
            }
            Ok(())
        }
        PlrsCommand::Check { coeffs, terms } => {
            let spec = PlrsSpec::new(coeffs)?;
            let verdict = is_plrs_match(&terms, &spec)?;
            match format {
                OutputFormat::Text => {
                    println!("matched: {}", verdict.matched);
                    if let Some(violation) = &verdict.violation {
                        println!("violation: {violation}");
                    }
                }
                OutputFormat::Json => {
                    print_json(&serde_json::to_value(&verdict).expect("verdict serializes"));
                }
                OutputFormat::Csv => {
                    println!("matched,violation");
                    let violation = verdict
                        .violation
                        .as_ref()
                        .map(|v| v.to_string())
                        .unwrap_or_default();
                    println!("{},\"{}\"", verdict.matched, violation);
                }
            }
            if verdict.matched {
                Ok(())
            } else {
                Err(Failure::ChecksFailed)
            }
        }
        PlrsCommand::Candidate { step } => {
            let candidate = gap_plrs_candidate(step)?;
            match format {
                OutputFormat::Text => {
                    println!("step: {step}");
                    println!("coefficients: ({})", candidate.coefficients.join(","));
                    for offset in &candidate.offsets {
                        match &offset.diagnostic {
                            None => println!("offset {}: matched", offset.offset),
                            Some(diagnostic) => {
                                println!("offset {}: {}", offset.offset, diagnostic)
                            }
                        }
                    }
                }
                OutputFormat::Json => {
                    print_json(&serde_json::to_value(&candidate).expect("candidate serializes"));
                }
                OutputFormat::Csv => {
                    println!("offset,matched,diagnostic");
                    for offset in &candidate.offsets {
                        println!(
                            "{},{},\"{}\"",
                            offset.offset,
                            offset.matched,
                            offset.diagnostic.as_deref().unwrap_or("")
                        );
                    }
                }
            }
            Ok(())
        }
    }
}

// ---- audit ----

fn legality_from(arg: LegalityArg) -> LegalityPredicate {
    match arg {
        LegalityArg::None => LegalityPredicate::None,
        LegalityArg::ClassicRule => LegalityPredicate::ClassicRule,
        LegalityArg::EvenRule => LegalityPredicate::EvenRule,
        LegalityArg::BoundOnly => LegalityPredicate::BoundOnly,
    }
}

fn write_output(path: &PathBuf, payload: &str) -> Result<(), Failure> {
    let mut file = std::fs::File::create(path)
        .map_err(|e| Failure::Io(format!("cannot create {}: {e}", path.display())))?;
    file.write_all(payload.as_bytes())
        .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?;
    Ok(())
}

fn guard_desk_scale(actual: u64, limit: u64, what: &str, force: bool) -> Result<(), Failure> {
    if actual > limit && !force {
        return Err(Failure::Usage(format!(
            "{what} {actual} exceeds the desk-scale guideline {limit}; pass --force to proceed"
        )));
    }
    Ok(())
}

fn cmd_audit(command: AuditCommand, format: OutputFormat) -> Result<(), Failure> {
    match command {
        AuditCommand::Uniqueness {
            scheme,
            step,
            offset,
            max_n,
            bound,
            legality,
            out,
            jobs,
            force,
        } => {
            guard_desk_scale(max_n, DESK_SCALE_MAX_N, "--max-n", force)?;
            let scheme = build_scheme(scheme, step, offset)?;
            let mut config = AuditConfig::for_scheme(scheme, max_n);
            if let Some(bound) = bound {
                config.digit_bound = Some(bound);
            }
            if let Some(legality) = legality {
                config.legality = legality_from(legality);
            }
            let result = audit_uniqueness_jobs(&config, jobs as usize)?;
            if let Some(path) = &out {
                let payload = match format {
                    OutputFormat::Csv => result.to_csv(),
                    _ => format!("{}\n", pretty(&result.to_json())),
                };
                write_output(path, &payload)?;
                println!("{}", result.verdict_summary);
                println!("wrote {}", path.display());
            } else {
                match format {
                    OutputFormat::Text => println!("{}", result.verdict_summary),
                    OutputFormat::Json => print_json(&result.to_json()),
                    OutputFormat::Csv => print!("{}", result.to_csv()),
                }
            }
            Ok(())
        }
        AuditCommand::DigitBound {
            scheme,
            step,
            offset,
            max_n,
            out,
            force,
        } => {
            guard_desk_scale(max_n, DESK_SCALE_MAX_N, "--max-n", force)?;
            let scheme = build_scheme(scheme, step, offset)?;
            let audit = audit_digit_bound(&scheme, max_n);
            let json = serde_json::to_value(&audit).expect("audit serializes");
            if let Some(path) = &out {
                let payload = match format {
                    OutputFormat::Csv => digit_bound_csv(&audit),
                    _ => format!("{}\n", pretty(&json)),
                };
                write_output(path, &payload)?;
                println!("{}", audit.summary);
                println!("wrote {}", path.display());
            } else {
                match format {
                    OutputFormat::Text => println!("{}", audit.summary),
                    OutputFormat::Json => print_json(&json),
                    OutputFormat::Csv => print!("{}", digit_bound_csv(&audit)),
                }
            }
            Ok(())
        }
        AuditCommand::Bijection {
            coeffs,
            j_max,
            out,
            force,
        } => {
            let spec = PlrsSpec::from_u64(&coeffs)?;
            let horizon = generate_plrs(&spec, j_max as usize + 1);
            let top = horizon.terms().last().expect("at least one term");
            if *top > Natural::from(DESK_SCALE_MAX_ENUM) && !force {
                return Err(Failure::Usage(format!(
                    "enumerating up to H({}) = {top} exceeds the desk-scale guideline \
                     {DESK_SCALE_MAX_ENUM}; pass --force to proceed",
                    j_max + 1
                )));
            }
            let reports = bijection_audit(&spec, j_max as usize);
            let json = serde_json::json!({
                "coefficients": coeffs,
                "j_max": j_max,
                "reports": reports,
            });
            let csv = {
                let mut rows = String::from("j,interval_size,legal_count,matched\n");
                for report in &reports {
                    rows.push_str(&format!(
                        "{},{},{},{}\n",
                        report.j, report.interval_size, report.legal_count, report.matched
                    ));
                }
                rows
            };
            if let Some(path) = &out {
                let payload = match format {
                    OutputFormat::Csv => csv,
                    _ => format!("{}\n", pretty(&json)),
                };
                write_output(path, &payload)?;
                for report in &reports {
                    println!(
                        "j={}: interval={} strings={} matched={}",
                        report.j, report.interval_size, report.legal_count, report.matched
                    );
                }
                println!("wrote {}", path.display());
            } else {
                match format {
                    OutputFormat::Text => {
                        for report in &reports {
                            println!(
                                "j={}: interval={} strings={} matched={}",
                                report.j, report.interval_size, report.legal_count, report.matched
                            );
                        }
                    }
                    OutputFormat::Json => print_json(&json),
                    OutputFormat::Csv => print!("{csv}"),
                }
            }
            Ok(())
        }
    }
}

fn digit_bound_csv(audit: &zlab_core::DigitBoundAudit) -> String {
    format!(
        "scheme,n_max,max_digit,witness,reference_bound,within_bound\n\"{}\",{},{},{},{},{}\n",
        audit.scheme,
        audit.n_max,
        audit.max_digit,
        audit.witness.map(|w| w.to_string()).unwrap_or_default(),
        audit.reference_bound,
        audit.within_bound
    )
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON rendering is infallible")
}

fn print_json(value: &serde_json::Value) {
    println!("{}", pretty(value));
}
