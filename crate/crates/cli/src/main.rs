//! Command-line front end for the `hyperseries` library.
//!
//! Five subcommands cover the library surface: `series` and `expand` print
//! the closed-form Hilbert and Poincare series of a family instance (as
//! canonical rational functions and as power-series coefficients), `betti`
//! prints graded Betti tables from the closed formulas and/or the homology
//! enumeration, `verify` runs the oracle suites, and `ledger` prints the
//! formula discrepancy ledger.
//!
//! Exit codes: 0 on success (and on passing verification), 1 when a
//! verification fails or two requested tables disagree, 2 on usage errors
//! and malformed requests, 3 when an instance exceeds the documented size
//! limits for exhaustive enumeration.  Output is deterministic: identical
//! invocations produce byte-identical output on stdout.  Every report is
//! bounded, so a run buffers its output and writes it once at the end; a
//! consumer that stops reading early (a closed pipe) is not an error.

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hyperseries::closedforms::{
    betti_hypercycle_closed, betti_hyperline_closed, betti_star_closed, betti_wheel_closed,
    betti_wheel_compose, hilbert_cycle_closed, hilbert_line_closed, hilbert_wheel_closed,
    poincare_cycle_graph, poincare_hypercycle, poincare_hyperline, poincare_hyperstar,
    poincare_line_graph, poincare_wheel, SeriesResult, Variant,
};
use hyperseries::complex::{hochster_betti, BettiTable, FieldChar};
use hyperseries::hypergraph::{build_family, Family, FamilySpec};
use hyperseries::oracle::{
    crosscheck_betti, resolve_recursion_sign, typo_ledger, verify_fibonacci,
    verify_hilbert_consistency, verify_koszul_identity, VerificationReport,
};
use hyperseries::{Error, Result};

#[derive(Parser)]
#[command(
    name = "hyperseries",
    version,
    about = "Exact Hilbert series, Poincare series, and graded Betti numbers \
             for hypergraph edge algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the closed-form Hilbert and Poincare series of a family instance
    Series(InstanceArgs),
    /// Print the graded Betti table of a family instance
    Betti(BettiArgs),
    /// Expand the closed-form series of a family instance to a given order
    Expand(ExpandArgs),
    /// Run an oracle verification suite and print its report
    Verify(VerifyArgs),
    /// Print the formula discrepancy ledger
    Ledger(LedgerArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Hyperline,
    Hypercycle,
    Hyperstar,
    LineGraph,
    CycleGraph,
    Wheel,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Hyperline => Family::Hyperline,
            FamilyArg::Hypercycle => Family::Hypercycle,
            FamilyArg::Hyperstar => Family::Hyperstar,
            FamilyArg::LineGraph => Family::LineGraph,
            FamilyArg::CycleGraph => Family::CycleGraph,
            FamilyArg::Wheel => Family::Wheel,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    /// The oracle-adjudicated form of each disputed formula
    Corrected,
    /// The form as it circulates in print, misprints included
    Printed,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Corrected => Variant::Corrected,
            VariantArg::Printed => Variant::Printed,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct InstanceArgs {
    /// Which structured family to evaluate
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Number of edges (spokes, for the wheel)
    #[arg(long)]
    n: usize,
    /// Edge size; the plain graph families require 2
    #[arg(long, default_value_t = 2)]
    d: usize,
    /// Overlap of consecutive edges; the plain graph families require 1
    #[arg(long, default_value_t = 1)]
    alpha: usize,
    /// Which side of each adjudicated formula discrepancy to evaluate
    #[arg(long, value_enum, default_value_t = VariantArg::Corrected)]
    variant: VariantArg,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

impl InstanceArgs {
    fn spec(&self) -> Result<FamilySpec> {
        FamilySpec::new(self.family.into(), self.n, self.d, self.alpha)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// The closed-form table
    Closed,
    /// Homology of induced subcomplexes
    Hochster,
    /// Both routes, with an agreement verdict (exit 1 on disagreement)
    Both,
    /// The wheel table assembled from the cycle table (wheel only)
    Compose,
}

#[derive(Args)]
struct BettiArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// How to compute the table
    #[arg(long, value_enum, default_value_t = Method::Closed)]
    method: Method,
    /// Coefficient field characteristic for the homology route: 0 or a prime
    #[arg(long, default_value_t = 0)]
    field_char: u64,
}

#[derive(Args)]
struct ExpandArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Highest power of t to print
    #[arg(long)]
    order: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// H(L_n)(1/2) against the Fibonacci recurrence
    Fibonacci,
    /// P(t) * H(-t) = 1 for the closed series of the plain graph families
    Koszul,
    /// Adjudicate the disputed cycle recursion signs by brute force
    Sign,
    /// Closed Hilbert series against monomial counting and face counting
    Hilbert,
    /// Closed Betti tables against the homology enumeration
    Betti,
    /// Every suite above, with its default parameters
    All,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which oracle suite to run
    #[arg(long, value_enum)]
    suite: Suite,
    /// Largest n the suite exercises (default depends on the suite)
    #[arg(long)]
    n_max: Option<usize>,
    /// Expansion order for series comparisons (default depends on the suite)
    #[arg(long)]
    order: Option<usize>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct LedgerArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// Appends a line to the output buffer; writing to a `String` cannot fail.
macro_rules! outln {
    ($out:expr) => {{ let _ = writeln!($out); }};
    ($out:expr, $($arg:tt)*) => {{ let _ = writeln!($out, $($arg)*); }};
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let outcome = match cli.command {
        Command::Series(args) => run_series(&args, &mut out),
        Command::Betti(args) => run_betti(&args, &mut out),
        Command::Expand(args) => run_expand(&args, &mut out),
        Command::Verify(args) => run_verify(&args, &mut out),
        Command::Ledger(args) => run_ledger(&args, &mut out),
    };
    let code = match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::SizeLimit(_) => ExitCode::from(3),
                Error::Adjudication(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    };
    // A write failure here means the consumer closed the pipe; the work is
    // already done, so keep the computed exit code and leave quietly.
    let _ = std::io::stdout().write_all(out.as_bytes());
    code
}

/// The closed Hilbert series, for the families that have one.
fn closed_hilbert(spec: &FamilySpec, variant: Variant) -> Result<Option<SeriesResult>> {
    Ok(match spec.family {
        Family::LineGraph => Some(hilbert_line_closed(spec.n as i64)?),
        Family::CycleGraph => Some(hilbert_cycle_closed(spec.n as i64, variant)?),
        Family::Wheel => Some(hilbert_wheel_closed(spec.n as i64, variant)?),
        Family::Hyperline | Family::Hypercycle | Family::Hyperstar => None,
    })
}

fn closed_poincare(spec: &FamilySpec, variant: Variant) -> Result<SeriesResult> {
    match spec.family {
        Family::LineGraph => poincare_line_graph(spec.n as i64),
        Family::CycleGraph => poincare_cycle_graph(spec.n as i64, variant),
        Family::Wheel => poincare_wheel(spec.n as i64, variant),
        Family::Hyperline => poincare_hyperline(spec.n, spec.d, spec.alpha),
        Family::Hypercycle => poincare_hypercycle(spec.n, spec.d, spec.alpha, variant),
        Family::Hyperstar => poincare_hyperstar(spec.n, spec.d, spec.alpha),
    }
}

fn closed_betti(spec: &FamilySpec, variant: Variant) -> Result<BettiTable> {
    match spec.family {
        Family::Hyperline => betti_hyperline_closed(spec.n, spec.d, spec.alpha),
        Family::Hypercycle => betti_hypercycle_closed(spec.n, spec.d, spec.alpha),
        Family::Hyperstar => betti_star_closed(spec.n, spec.d, spec.alpha),
        Family::Wheel => betti_wheel_closed(spec.n, variant),
        Family::LineGraph | Family::CycleGraph => Err(Error::UnsupportedParameter(
            "the plain line and cycle families have no closed Betti table; \
             use --method hochster"
                .into(),
        )),
    }
}

fn write_series_text(out: &mut String, label: &str, series: &SeriesResult) {
    outln!(out, "{label}: {}", series.series);
    outln!(out, "  provenance: {}", series.provenance);
    for note in &series.notes {
        outln!(out, "  note: {note}");
    }
}

#[derive(Serialize)]
struct InstanceHeader {
    family: String,
    n: usize,
    d: usize,
    alpha: usize,
    variant: Variant,
}

impl InstanceHeader {
    fn new(spec: &FamilySpec, variant: Variant) -> Self {
        InstanceHeader {
            family: spec.family.to_string(),
            n: spec.n,
            d: spec.d,
            alpha: spec.alpha,
            variant,
        }
    }
}

fn run_series(args: &InstanceArgs, out: &mut String) -> Result<ExitCode> {
    let spec = args.spec()?;
    let variant = args.variant.into();
    let hilbert = closed_hilbert(&spec, variant)?;
    let poincare = closed_poincare(&spec, variant)?;

    #[derive(Serialize)]
    struct SeriesOutput {
        #[serde(flatten)]
        instance: InstanceHeader,
        hilbert: Option<SeriesResult>,
        poincare: SeriesResult,
    }

    match args.format {
        Format::Json => {
            let payload = SeriesOutput {
                instance: InstanceHeader::new(&spec, variant),
                hilbert,
                poincare,
            };
            outln!(out, "{}", serde_json::to_string(&payload).expect("series output serializes"));
        }
        Format::Text => {
            outln!(out, "family: {spec}");
            match &hilbert {
                Some(h) => write_series_text(out, "Hilbert series", h),
                None => outln!(
                    out,
                    "Hilbert series: no closed form for this family (the brute-force \
                     oracle still applies)"
                ),
            }
            write_series_text(out, "Poincare series", &poincare);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn write_betti_text(out: &mut String, label: &str, table: &BettiTable) {
    outln!(out, "{label}:");
    for (i, j, value) in table.entries() {
        outln!(out, "  beta({i}, {j}) = {value}");
    }
}

fn run_betti(args: &BettiArgs, out: &mut String) -> Result<ExitCode> {
    let spec = args.instance.spec()?;
    let variant = args.instance.variant.into();
    let field = FieldChar::new(args.field_char)?;
    let hochster = |field: &FieldChar| -> Result<BettiTable> {
        hochster_betti(&build_family(&spec)?, field)
    };

    #[derive(Serialize)]
    struct BettiOutput {
        #[serde(flatten)]
        instance: InstanceHeader,
        method: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        table: Option<BettiTable>,
        #[serde(skip_serializing_if = "Option::is_none")]
        closed: Option<BettiTable>,
        #[serde(skip_serializing_if = "Option::is_none")]
        hochster: Option<BettiTable>,
        #[serde(skip_serializing_if = "Option::is_none")]
        agree: Option<bool>,
    }

    let mut output = BettiOutput {
        instance: InstanceHeader::new(&spec, variant),
        method: String::new(),
        table: None,
        closed: None,
        hochster: None,
        agree: None,
    };
    let mut exit = ExitCode::SUCCESS;

    match args.method {
        Method::Closed => {
            output.method = "closed".into();
            output.table = Some(closed_betti(&spec, variant)?);
        }
        Method::Hochster => {
            output.method = "hochster".into();
            output.table = Some(hochster(&field)?);
        }
        Method::Compose => {
            if spec.family != Family::Wheel {
                return Err(Error::InvalidInput(
                    "--method compose assembles a wheel table from the cycle table \
                     and only applies to --family wheel"
                        .into(),
                ));
            }
            output.method = "compose".into();
            output.table = Some(betti_wheel_compose(spec.n)?);
        }
        Method::Both => {
            output.method = "both".into();
            let closed = closed_betti(&spec, variant)?;
            let oracle = hochster(&field)?;
            let agree = closed == oracle;
            output.agree = Some(agree);
            output.closed = Some(closed);
            output.hochster = Some(oracle);
            if !agree {
                exit = ExitCode::from(1);
            }
        }
    }

    match args.instance.format {
        Format::Json => {
            outln!(out, "{}", serde_json::to_string(&output).expect("betti output serializes"));
        }
        Format::Text => {
            outln!(out, "family: {spec}");
            if let Some(table) = &output.table {
                write_betti_text(out, &format!("Betti table ({})", output.method), table);
            }
            if let (Some(closed), Some(oracle)) = (&output.closed, &output.hochster) {
                write_betti_text(out, "Betti table (closed)", closed);
                write_betti_text(out, "Betti table (hochster)", oracle);
                match output.agree {
                    Some(true) => outln!(out, "tables agree"),
                    _ => outln!(out, "tables DISAGREE"),
                }
            }
        }
    }
    Ok(exit)
}

fn run_expand(args: &ExpandArgs, out: &mut String) -> Result<ExitCode> {
    let spec = args.instance.spec()?;
    let variant = args.instance.variant.into();
    let expand = |series: &SeriesResult| -> Result<Vec<String>> {
        Ok(series
            .series
            .series(args.order)?
            .iter()
            .map(|c| c.to_string())
            .collect())
    };
    let hilbert = match closed_hilbert(&spec, variant)? {
        Some(series) => Some(expand(&series)?),
        None => None,
    };
    let poincare = expand(&closed_poincare(&spec, variant)?)?;

    #[derive(Serialize)]
    struct ExpandOutput {
        #[serde(flatten)]
        instance: InstanceHeader,
        order: usize,
        hilbert: Option<Vec<String>>,
        poincare: Vec<String>,
    }

    match args.instance.format {
        Format::Json => {
            let payload = ExpandOutput {
                instance: InstanceHeader::new(&spec, variant),
                order: args.order,
                hilbert,
                poincare,
            };
            outln!(out, "{}", serde_json::to_string(&payload).expect("expand output serializes"));
        }
        Format::Text => {
            outln!(out, "family: {spec}");
            match &hilbert {
                Some(coeffs) => outln!(out, "hilbert: {}", coeffs.join(" ")),
                None => outln!(out, "hilbert: no closed form for this family"),
            }
            outln!(out, "poincare: {}", poincare.join(" "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: &VerifyArgs, out: &mut String) -> Result<ExitCode> {
    let mut reports: Vec<VerificationReport> = Vec::new();
    let suites: Vec<Suite> = match args.suite {
        Suite::All => vec![
            Suite::Fibonacci,
            Suite::Koszul,
            Suite::Sign,
            Suite::Hilbert,
            Suite::Betti,
        ],
        other => vec![other],
    };

    for suite in suites {
        match suite {
            Suite::Fibonacci => {
                reports.push(verify_fibonacci(args.n_max.unwrap_or(20)));
            }
            Suite::Koszul => {
                let n_max = args.n_max.unwrap_or(8);
                let order = args.order.unwrap_or(12);
                for n in 3..=n_max {
                    for family in [Family::LineGraph, Family::CycleGraph, Family::Wheel] {
                        let spec = FamilySpec::new(family, n, 2, 1)?;
                        let p = closed_poincare(&spec, Variant::Corrected)?.series;
                        let h = closed_hilbert(&spec, Variant::Corrected)?
                            .expect("plain graph families have closed Hilbert series")
                            .series;
                        let mut report = verify_koszul_identity(&p, &h, order);
                        report.subject = format!("{} for {spec}", report.subject);
                        reports.push(report);
                    }
                }
            }
            Suite::Sign => {
                reports.push(resolve_recursion_sign(args.n_max.unwrap_or(10))?);
            }
            Suite::Hilbert => {
                let n_max = args.n_max.unwrap_or(6);
                let order = args.order.unwrap_or(12);
                for n in 3..=n_max {
                    for family in [Family::LineGraph, Family::CycleGraph, Family::Wheel] {
                        let spec = FamilySpec::new(family, n, 2, 1)?;
                        reports.push(verify_hilbert_consistency(&spec, order)?);
                    }
                }
            }
            Suite::Betti => {
                let mut specs = vec![
                    FamilySpec::hyperline(2, 3, 1)?,
                    FamilySpec::hyperline(3, 3, 1)?,
                    FamilySpec::hypercycle(3, 3, 1)?,
                    FamilySpec::hyperstar(3, 2, 1)?,
                    FamilySpec::hyperstar(2, 3, 1)?,
                ];
                for n in 3..=args.n_max.unwrap_or(5) {
                    specs.push(FamilySpec::wheel(n)?);
                }
                for spec in specs {
                    reports.push(crosscheck_betti(&spec)?);
                }
            }
            Suite::All => unreachable!(),
        }
    }

    let all_pass = reports.iter().all(|r| r.passed());
    match args.format {
        Format::Json => {
            outln!(out, "{}", serde_json::to_string(&reports).expect("reports serialize"));
        }
        Format::Text => {
            for (k, report) in reports.iter().enumerate() {
                if k > 0 {
                    outln!(out);
                }
                outln!(out, "{report}");
            }
        }
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_ledger(args: &LedgerArgs, out: &mut String) -> Result<ExitCode> {
    let entries = typo_ledger();
    match args.format {
        Format::Json => {
            outln!(out, "{}", serde_json::to_string(&entries).expect("ledger serializes"));
        }
        Format::Text => {
            for (k, entry) in entries.iter().enumerate() {
                if k > 0 {
                    outln!(out);
                }
                outln!(out, "{entry}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
