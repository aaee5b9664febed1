//! Command line front end: read a system file, run one of the three
//! algorithms with instrumentation, and print the basis with its report.
//!
//! Exit codes: 0 on success, 1 on an input problem, 2 on an internal
//! invariant violation.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use groebner::error::Error;
use groebner::fast_reduce::ReductionMode;
use groebner::parse::{parse_field_name, parse_system_with_overrides};
use groebner::report::{predict, run, Algorithm};
use groebner::{MonomialOrder, Result};

#[derive(Parser)]
#[command(
    name = "groebner",
    version,
    about = "Exact Groebner bases with instrumented, interchangeable algorithms"
)]
struct Cli {
    /// Input system file: vars/order/field header lines, then one polynomial per line
    file: PathBuf,

    /// Algorithm to run
    #[arg(long, value_enum, default_value_t = AlgorithmArg::F5bFast)]
    algorithm: AlgorithmArg,

    /// Monomial order, overriding the file header
    #[arg(long, value_enum)]
    order: Option<OrderArg>,

    /// Coefficient field, overriding the file header: "q" or "gf <p>"
    #[arg(long)]
    field: Option<String>,

    /// Reducer bookkeeping in the fast variant (rejected for other algorithms)
    #[arg(long, value_enum)]
    reduction: Option<ReductionArg>,

    /// Output format
    #[arg(long, value_enum, default_value_t = ReportArg::Text)]
    report: ReportArg,

    /// Evaluate the cost model only, without running an algorithm
    #[arg(long)]
    predict: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgorithmArg {
    Buchberger,
    F5b,
    F5bFast,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Grlex,
    Grevlex,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReductionArg {
    Safe,
    Literal,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportArg {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match std::panic::catch_unwind(|| run_cli(cli)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_internal() { 2 } else { 1 })
        }
        Err(_) => {
            eprintln!("error: internal invariant violation");
            ExitCode::from(2)
        }
    }
}

fn run_cli(cli: Cli) -> Result<()> {
    let text = std::fs::read_to_string(&cli.file)
        .map_err(|e| Error::Domain(format!("cannot read {}: {e}", cli.file.display())))?;
    let order = cli.order.map(|o| match o {
        OrderArg::Lex => MonomialOrder::Lex,
        OrderArg::Grlex => MonomialOrder::GrLex,
        OrderArg::Grevlex => MonomialOrder::GrevLex,
    });
    let field = match &cli.field {
        Some(name) => Some(parse_field_name(name)?),
        None => None,
    };
    let (ctx, generators) = parse_system_with_overrides(&text, order, field)?;

    let algorithm = match cli.algorithm {
        AlgorithmArg::Buchberger => Algorithm::Buchberger,
        AlgorithmArg::F5b => Algorithm::F5b,
        AlgorithmArg::F5bFast => Algorithm::F5bFast,
    };
    if cli.reduction.is_some() && algorithm != Algorithm::F5bFast {
        return Err(Error::Domain(
            "--reduction only applies to --algorithm f5b-fast".to_string(),
        ));
    }

    if cli.predict {
        let prediction = predict(&ctx, &generators)?;
        match cli.report {
            ReportArg::Text => print!("{}", prediction.to_text()),
            ReportArg::Json => println!("{}", prediction.to_json()?),
        }
        return Ok(());
    }

    let mode = match cli.reduction.unwrap_or(ReductionArg::Safe) {
        ReductionArg::Safe => ReductionMode::Safe,
        ReductionArg::Literal => ReductionMode::Literal,
    };
    let report = run(&ctx, &generators, algorithm, mode)?;
    match cli.report {
        ReportArg::Text => print!("{}", report.to_text()),
        ReportArg::Json => println!("{}", report.to_json()?),
    }
    Ok(())
}
