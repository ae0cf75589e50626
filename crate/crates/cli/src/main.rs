//! `qpart`: expand finite q-products, apply the partition injection, and run
//! theorem checks and parameter scans.
//!
//! Exit codes: 0 when every report matches its prediction, 1 on an unexpected
//! finding (or an inconclusive scan), 2 on usage errors.

mod output;
mod span;

use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::anyhow;
use clap::{Args, Parser, Subcommand, ValueEnum};
use qpart_core::verify::{self, ConjectureParams, MRule, XRule};
use qpart_core::{
    composed_map, expand_product, expand_reciprocal, forward_map, inverse_map, inverse_trace,
    x_shift_map, PartContext, Partition, ProductSpec, VerificationReport,
};

use output::{emit, CoefficientRecord, Format, MappingRecord, ReportRecord, WitnessRecord};
use span::{List, MArg, Span, XArg};

#[derive(Debug, Parser)]
#[command(
    name = "qpart",
    version,
    about = "Finite q-product expansions and partition injections"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: Format,

    /// Worker threads for scans (default: one per core). Output order does not
    /// depend on this.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the coefficients of a finite product or its reciprocal.
    Expand(ExpandArgs),
    /// Apply the injection, its inverse, or the x-shift to one partition.
    Map(MapArgs),
    /// Check one theorem instance and print its report.
    Verify(VerifyArgs),
    /// Scan a parameter grid, one report per tuple.
    Scan(ScanArgs),
    /// Print strictness witnesses for a range of n.
    Witness(WitnessArgs),
}

#[derive(Debug, Args)]
struct ExpandArgs {
    /// Residues r_i of the product, comma separated.
    #[arg(long)]
    residues: Option<List>,
    #[arg(long)]
    modulus: Option<u64>,
    /// Number of factors per residue.
    #[arg(long = "L", alias = "factors")]
    l: Option<u64>,
    /// Shorthand for the P1 class: residues 1, y+2, 2y modulo 2y+2.
    #[arg(long)]
    p1: bool,
    /// Shorthand for the P2 class: residues 2, y, 2y+1 modulo 2y+2.
    #[arg(long)]
    p2: bool,
    /// Shorthand for the P1' class: residues 1, x, 2y modulo 2y+2.
    #[arg(long)]
    p1x: bool,
    #[arg(long)]
    y: Option<u64>,
    #[arg(long)]
    x: Option<u64>,
    /// Expand the product itself instead of its reciprocal.
    #[arg(long)]
    product: bool,
    #[arg(long)]
    max_degree: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Direction {
    /// P2 -> P1.
    Forward,
    /// P1 -> P2, or ABSENT when mu < 0.
    Inverse,
    /// P1 -> P1'(x).
    Xshift,
    /// P2 -> P1 -> P1'(x).
    Composed,
}

#[derive(Debug, Args)]
struct MapArgs {
    #[arg(long)]
    y: u64,
    #[arg(long = "L")]
    l: u64,
    /// Partition in canonical form, e.g. "<1_1^5,1_2>".
    #[arg(long)]
    partition: String,
    #[arg(long, value_enum)]
    direction: Direction,
    #[arg(long)]
    x: Option<u64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VerifySubject {
    Main,
    Xshift,
    Bg,
    Mod8,
    Andrews1971,
    Proposal,
    Conjecture,
    Borwein,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    subject: VerifySubject,
    #[arg(long = "L")]
    l: Option<u64>,
    #[arg(long)]
    y: Option<u64>,
    #[arg(long)]
    x: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    r: Option<u64>,
    #[arg(long)]
    z: Option<u64>,
    /// Dominated part list S (andrews1971).
    #[arg(long)]
    s: Option<List>,
    /// Dominating part list T (andrews1971).
    #[arg(long)]
    t: Option<List>,
    #[arg(long)]
    max_degree: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ScanSubject {
    Conjecture,
    Proposal,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[arg(long, value_enum)]
    subject: ScanSubject,
    /// Range `a..b` (inclusive) or a single value.
    #[arg(long = "L")]
    l: Span,
    /// Range of y; the proposal scan visits the even values only.
    #[arg(long)]
    y: Span,
    #[arg(long)]
    z: Option<Span>,
    /// A fixed x, or `all` for every y < x <= y + z.
    #[arg(long, default_value = "all")]
    x: XArg,
    /// A fixed m, or `min` for m = yz + 2.
    #[arg(long, default_value = "min")]
    m: MArg,
    #[arg(long)]
    max_degree: u64,
}

#[derive(Debug, Args)]
struct WitnessArgs {
    #[arg(long)]
    y: u64,
    #[arg(long = "L")]
    l: u64,
    /// Range `a..b` (inclusive) or a single value.
    #[arg(long)]
    n: Span,
}

enum Failure {
    Usage(anyhow::Error),
    Internal(anyhow::Error),
}

impl From<qpart_core::Error> for Failure {
    fn from(e: qpart_core::Error) -> Self {
        match e {
            qpart_core::Error::Inconsistency(_) => Failure::Internal(e.into()),
            _ => Failure::Usage(e.into()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Internal(e)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(anyhow!(msg.into()))
}

fn need(v: Option<u64>, flag: &str) -> Result<u64, Failure> {
    v.ok_or_else(|| usage(format!("--{flag} is required here")))
}

fn expand(args: &ExpandArgs, format: Format, out: &mut Vec<u8>) -> Result<bool, Failure> {
    let shorthands = [args.p1, args.p2, args.p1x].iter().filter(|&&b| b).count();
    let spec = match (shorthands, &args.residues) {
        (0, Some(residues)) => ProductSpec::new(
            residues.0.clone(),
            need(args.modulus, "modulus")?,
            need(args.l, "L")?,
        )?,
        (1, None) => {
            let (y, l) = (need(args.y, "y")?, need(args.l, "L")?);
            let ctx = if args.p1 {
                PartContext::p1(y, l)?
            } else if args.p2 {
                PartContext::p2(y, l)?
            } else {
                PartContext::p1_prime(y, l, need(args.x, "x")?)?
            };
            ctx.product_spec()
        }
        _ => {
            return Err(usage(
                "give either --residues or exactly one of --p1, --p2, --p1x",
            ))
        }
    };
    let degree =
        usize::try_from(args.max_degree).map_err(|_| usage("--max-degree is too large"))?;
    let series = if args.product {
        expand_product(&spec, degree)
    } else {
        expand_reciprocal(&spec, degree)
    };
    let records: Vec<_> = series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| CoefficientRecord {
            command: "expand",
            n: n.to_string(),
            coefficient: c.to_string(),
        })
        .collect();
    emit(out, format, &records)?;
    Ok(true)
}

fn map(args: &MapArgs, format: Format, out: &mut Vec<u8>) -> Result<bool, Failure> {
    let (y, l) = (args.y, args.l);
    let source_ctx = match args.direction {
        Direction::Forward | Direction::Composed => PartContext::p2(y, l)?,
        Direction::Inverse | Direction::Xshift => PartContext::p1(y, l)?,
    };
    let source = Partition::parse(source_ctx, &args.partition)?;
    let record = MappingRecord {
        command: "map",
        direction: format!("{:?}", args.direction).to_lowercase(),
        y: y.to_string(),
        l: l.to_string(),
        source: source.to_string(),
        image: String::new(),
        mu: String::new(),
        sums: Default::default(),
        trace: Vec::new(),
    };
    let record = match args.direction {
        Direction::Forward => {
            let (image, trace) = forward_map(&source)?;
            MappingRecord {
                image: image.to_string(),
                ..record
            }
            .with_trace(&trace)
        }
        Direction::Inverse => match inverse_map(&source)? {
            Some((image, trace)) => MappingRecord {
                image: image.to_string(),
                ..record
            }
            .with_trace(&trace),
            None => MappingRecord {
                image: "ABSENT".into(),
                ..record
            }
            .with_trace(&inverse_trace(&source)?),
        },
        Direction::Xshift => MappingRecord {
            image: x_shift_map(&source, need(args.x, "x")?)?.to_string(),
            ..record
        },
        Direction::Composed => MappingRecord {
            image: composed_map(&source, need(args.x, "x")?)?.to_string(),
            ..record
        },
    };
    emit(out, format, &[record])?;
    Ok(true)
}

fn verify_one(args: &VerifyArgs) -> Result<VerificationReport, Failure> {
    let n = args.max_degree;
    let l = || need(args.l, "L");
    let y = || need(args.y, "y");
    let report = match args.subject {
        VerifySubject::Main => verify::verify_main_theorem(l()?, y()?, n)?,
        VerifySubject::Xshift => verify::verify_xshift_theorem(l()?, y()?, need(args.x, "x")?, n)?,
        VerifySubject::Bg => {
            verify::verify_bg_theorem(l()?, need(args.m, "m")?, need(args.r, "r")?, n)?
        }
        VerifySubject::Mod8 => verify::verify_andrews_mod8(l()?, n)?,
        VerifySubject::Andrews1971 => {
            let s = args
                .s
                .as_ref()
                .ok_or_else(|| usage("--s is required here"))?;
            let t = args
                .t
                .as_ref()
                .ok_or_else(|| usage("--t is required here"))?;
            verify::verify_andrews_1971(&s.0, &t.0, n)?
        }
        VerifySubject::Proposal => verify::proposal_scan(l()?, y()?, n)?,
        VerifySubject::Conjecture => {
            let params = ConjectureParams::new(
                l()?,
                need(args.z, "z")?,
                y()?,
                need(args.x, "x")?,
                need(args.m, "m")?,
            )?;
            verify::conjecture_report(params, n)?
        }
        VerifySubject::Borwein => verify::borwein_scan(l()?, n)?,
    };
    Ok(report)
}

fn emit_reports(
    command: &'static str,
    reports: &[VerificationReport],
    format: Format,
    out: &mut Vec<u8>,
) -> Result<bool, Failure> {
    let records: Vec<_> = reports
        .iter()
        .map(|r| ReportRecord::new(command, r))
        .collect();
    emit(out, format, &records)?;
    Ok(reports.iter().all(|r| r.as_expected))
}

fn scan(args: &ScanArgs, format: Format, out: &mut Vec<u8>) -> Result<bool, Failure> {
    let n = args.max_degree;
    let reports = match args.subject {
        ScanSubject::Proposal => verify::proposal_grid(args.l.0.clone(), args.y.0.clone(), n)?,
        ScanSubject::Conjecture => {
            let z = args
                .z
                .as_ref()
                .ok_or_else(|| usage("--z is required here"))?;
            let x = match args.x {
                XArg::Fixed(x) => XRule::Fixed(x),
                XArg::All => XRule::All,
            };
            let m = match args.m {
                MArg::Fixed(m) => MRule::Fixed(m),
                MArg::Min => MRule::Minimal,
            };
            verify::conjecture_scan(args.l.0.clone(), args.y.0.clone(), x, z.0.clone(), m, n)?
        }
    };
    emit_reports("scan", &reports, format, out)
}

fn witness(args: &WitnessArgs, format: Format, out: &mut Vec<u8>) -> Result<bool, Failure> {
    let mut records = Vec::new();
    for n in args.n.0.clone() {
        match verify::build_witness(args.l, args.y, n) {
            Ok(w) => records.push(WitnessRecord::found(args.y, args.l, n, &w)),
            Err(qpart_core::Error::NoWitness { .. }) => {
                records.push(WitnessRecord::none(args.y, args.l, n))
            }
            Err(e) => return Err(e.into()),
        }
    }
    emit(out, format, &records)?;
    Ok(true)
}

fn run(cli: &Cli, out: &mut Vec<u8>) -> Result<bool, Failure> {
    match &cli.command {
        Command::Expand(a) => expand(a, cli.format, out),
        Command::Map(a) => map(a, cli.format, out),
        Command::Verify(a) => {
            let report = verify_one(a)?;
            emit_reports("verify", &[report], cli.format, out)
        }
        Command::Scan(a) => scan(a, cli.format, out),
        Command::Witness(a) => witness(a, cli.format, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut buf = Vec::new();
    let result = pool.install(|| run(&cli, &mut buf));
    let code = match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        Err(Failure::Internal(e)) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    };
    let mut stdout = io::stdout().lock();
    if stdout.write_all(&buf).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}
