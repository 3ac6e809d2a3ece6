//! `linco` command line: compute, expand, enumerate, verify.

mod output;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use linco::algebra::Bindings;
use linco::family::Family;
use linco::linearize::{expansion_coefficients, linearize, Method};
use linco::partition::{enumerate_inhomogeneous, Composition, PartitionFilter};
use linco::verify::{verify_suite, Suite};
use linco::{Error, Limits};

use output::{ExpandRecord, LinearizeRecord, MethodValue, PartitionRecord};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_IDENTITY: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "linco",
    version,
    about = "Exact linearization coefficients of orthogonal polynomial families"
)]
struct Cli {
    /// Worker threads for partition sums (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Omit the timing field from JSON output.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expectation of a product of basis polynomials.
    Linearize(LinearizeArgs),
    /// Coefficients of a product in the orthogonal basis.
    Expand(ExpandArgs),
    /// List inhomogeneous set partitions of a composition.
    Partitions(PartitionsArgs),
    /// Run a self-check suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Partition,
    Oracle,
    Both,
}

#[derive(Args, Debug)]
struct Common {
    /// hermite, charlier, chebyshev2, free_charlier, q_hermite, big_q_hermite, interp
    #[arg(long)]
    family: String,
    /// Comma-separated degrees, e.g. 2,2. Repeat for a batch.
    #[arg(long = "degrees", required = true)]
    degrees: Vec<String>,
    /// Evaluate the result at, e.g., q=1,t=3/2.
    #[arg(long)]
    eval: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct LinearizeArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value_t = MethodArg::Partition)]
    method: MethodArg,
}

#[derive(Args, Debug)]
struct ExpandArgs {
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct PartitionsArgs {
    /// Comma-separated group sizes, e.g. 2,2.
    #[arg(long)]
    composition: String,
    /// all, no-singletons, pair, matchings, noncrossing, noncrossing-no-inner-singletons,
    /// noncrossing-matchings, noncrossing-pair
    #[arg(long, default_value = "all")]
    filter: String,
    /// Append the nine partition statistics to every line.
    #[arg(long)]
    stats: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// oracle-cross, norms, qfactorial, specializations, structural, noncrossing-rc, or all
    #[arg(long)]
    suite: String,
    #[arg(long)]
    max_n: usize,
}

/// Parses arguments, runs one command, and maps the outcome to an exit code.
pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("linco: {e}");
            ExitCode::from(match e {
                Error::InexactDivision { .. } => EXIT_IDENTITY,
                _ => EXIT_USAGE,
            })
        }
    }
}

fn dispatch(cli: Cli) -> linco::Result<u8> {
    if let Some(n) = cli.threads {
        // A second initialization only happens in-process and is harmless.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    let limits = Limits::from_env()?;
    let timing = !cli.no_timing;
    match cli.command {
        Command::Linearize(args) => cmd_linearize(args, &limits, timing),
        Command::Expand(args) => cmd_expand(args, &limits, timing),
        Command::Partitions(args) => cmd_partitions(args, &limits),
        Command::Verify(args) => cmd_verify(args, &limits),
    }
}

struct Parsed {
    family: Family,
    compositions: Vec<Composition>,
    eval: Option<Bindings>,
}

fn parse_common(c: &Common) -> linco::Result<Parsed> {
    let family: Family = c.family.parse()?;
    let compositions = c
        .degrees
        .iter()
        .map(|d| Composition::parse(d))
        .collect::<linco::Result<Vec<_>>>()?;
    let eval = c.eval.as_deref().map(Bindings::parse).transpose()?;
    Ok(Parsed {
        family,
        compositions,
        eval,
    })
}

fn elapsed_ms(start: Instant, timing: bool) -> Option<u64> {
    timing.then(|| start.elapsed().as_millis() as u64)
}

fn cmd_linearize(args: LinearizeArgs, limits: &Limits, timing: bool) -> linco::Result<u8> {
    let p = parse_common(&args.common)?;
    let spec = p.family.spec();
    let methods: &[Method] = match args.method {
        MethodArg::Partition => &[Method::PartitionSum],
        MethodArg::Oracle => &[Method::Oracle],
        MethodArg::Both => &[Method::PartitionSum, Method::Oracle],
    };
    let mut records = Vec::new();
    let mut all_match = true;
    for c in &p.compositions {
        let start = Instant::now();
        let mut values = Vec::new();
        for &m in methods {
            let mut value = linearize(&spec, c, m, limits)?.value;
            if let Some(b) = &p.eval {
                value = value.substitute(b);
            }
            values.push(MethodValue::new(m, value));
        }
        let matched = (values.len() == 2).then(|| values[0].value == values[1].value);
        all_match &= matched.unwrap_or(true);
        records.push(LinearizeRecord {
            command: "linearize",
            family: p.family.name(),
            composition: c.parts().to_vec(),
            eval: args.common.eval.clone(),
            results: values,
            matched,
            timing_ms: elapsed_ms(start, timing),
        });
    }
    print!("{}", output::linearize(&records, args.common.format));
    Ok(if all_match {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn cmd_expand(args: ExpandArgs, limits: &Limits, timing: bool) -> linco::Result<u8> {
    let p = parse_common(&args.common)?;
    let spec = p.family.spec();
    let mut records = Vec::new();
    for c in &p.compositions {
        let start = Instant::now();
        let mut coeffs = expansion_coefficients(&spec, c, limits)?.coeffs;
        if let Some(b) = &p.eval {
            coeffs = coeffs.iter().map(|v| v.substitute(b)).collect();
        }
        records.push(ExpandRecord {
            command: "expand",
            family: p.family.name(),
            composition: c.parts().to_vec(),
            eval: args.common.eval.clone(),
            coeffs_text: coeffs.iter().map(|v| v.to_string()).collect(),
            coeffs,
            timing_ms: elapsed_ms(start, timing),
        });
    }
    print!("{}", output::expand(&records, args.common.format));
    Ok(EXIT_OK)
}

fn cmd_partitions(args: PartitionsArgs, limits: &Limits) -> linco::Result<u8> {
    let c = Composition::parse(&args.composition)?;
    if c.is_empty() {
        return Err(Error::InvalidComposition("empty composition".into()));
    }
    let filter = PartitionFilter::parse(&args.filter)?;
    let records = enumerate_inhomogeneous(&c, filter, limits)?.map(|p| PartitionRecord {
        stats: args.stats.then(|| p.stats()),
        partition: p,
    });
    output::partitions(
        records,
        args.format,
        args.stats,
        &mut std::io::stdout().lock(),
    )
    .map_err(|e| Error::Parse(format!("write failed: {e}")))?;
    Ok(EXIT_OK)
}

fn cmd_verify(args: VerifyArgs, limits: &Limits) -> linco::Result<u8> {
    let suites: Vec<Suite> = if args.suite.trim().eq_ignore_ascii_case("all") {
        Suite::ALL.to_vec()
    } else {
        vec![args.suite.parse()?]
    };
    let mut ok = true;
    for suite in suites {
        let report = verify_suite(suite, args.max_n, limits)?;
        println!("{report}");
        ok &= report.passed();
    }
    Ok(if ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
}
