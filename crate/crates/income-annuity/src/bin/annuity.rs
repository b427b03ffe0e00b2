//! Thin command-line front end over the `income_annuity` library: ad-hoc
//! pricing plus CSV/JSON reference tables, sweeps, frontier thresholds,
//! and money's-worth runs.
//!
//! Exit codes: 0 success, 1 input error, 2 non-viable product,
//! 3 numerical failure.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use income_annuity::config::{OutputFormat, RunConfig};
use income_annuity::error::AnnuityError;
use income_annuity::mortality::MortalityLaw;
use income_annuity::mwr::{MwrContext, SexMortality};
use income_annuity::pricing::{self, ProductKind, ProductSpec, ValuationContext};
use income_annuity::quadrature::{BisectionSettings, QuadratureSettings};
use income_annuity::report::{self, Axis, SweepGrid, SweepQuantity, TableRow};
use income_annuity::viability::{self, AgeFrontier};

#[derive(Parser)]
#[command(
    name = "annuity",
    about = "Price life-only, instalment-refund, and cash-refund income annuities",
    version
)]
struct Cli {
    /// Optional key=value config file; command-line flags override it
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Price one product and report income per $1M premium
    Price(PriceArgs),
    /// Reference tables: loia, cria, iria, frontier, or mwr
    Table(TableArgs),
    /// Sweep price or a sensitivity along one axis
    Sweep(SweepArgs),
    /// Money's-worth ratios for a quote file
    Mwr(MwrArgs),
    /// Lowest viable rates for loaded cash refunds
    Frontier(FrontierArgs),
}

#[derive(Args, Clone, Copy, Default)]
struct LawArgs {
    /// Gompertz modal age (years)
    #[arg(long)]
    m: Option<f64>,
    /// Gompertz dispersion (years)
    #[arg(long)]
    b: Option<f64>,
    /// Constant hazard for exponential mortality (per year)
    #[arg(long)]
    lambda: Option<f64>,
}

#[derive(Args, Clone, Copy, Default)]
struct NumericsArgs {
    /// Override quadrature relative tolerance
    #[arg(long)]
    quad_rel_tol: Option<f64>,
    /// Override bisection residual tolerance
    #[arg(long)]
    root_tol: Option<f64>,
}

#[derive(Args)]
struct OutputArgs {
    /// csv (default) or json
    #[arg(long)]
    format: Option<String>,
    /// Output file; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    /// Suppress the `# generated <time>` header line
    #[arg(long)]
    no_timestamp: bool,
}

#[derive(Args)]
struct PriceArgs {
    /// Product kind: lo, ir, or cr
    #[arg(long)]
    kind: String,
    #[arg(long)]
    age: f64,
    #[arg(long)]
    rate: Option<f64>,
    #[arg(long)]
    loading: Option<f64>,
    #[command(flatten)]
    law: LawArgs,
    #[command(flatten)]
    numerics: NumericsArgs,
    /// csv-style plain lines (default) or json
    #[arg(long)]
    format: Option<String>,
}

#[derive(Args)]
struct TableArgs {
    /// loia | cria | iria | frontier | mwr
    id: String,
    /// Comma-separated ages
    #[arg(long, default_value = "55,65,75")]
    ages: String,
    /// Comma-separated rates
    #[arg(long, default_value = "0.02,0.04")]
    rates: String,
    /// Comma-separated loadings (frontier tables)
    #[arg(long, default_value = "0.05,0.15,0.25")]
    loadings: String,
    /// Loading applied to price tables
    #[arg(long)]
    loading: Option<f64>,
    /// Quote file for mwr tables
    #[arg(long)]
    quotes: Option<PathBuf>,
    /// Valuation rate for mwr tables
    #[arg(long)]
    rate: Option<f64>,
    #[command(flatten)]
    law: LawArgs,
    #[command(flatten)]
    mwr_basis: MwrBasisArgs,
    #[command(flatten)]
    numerics: NumericsArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SweepArgs {
    /// price | duration | d_age | d_rate
    #[arg(long)]
    quantity: String,
    /// Product kind: lo, ir, or cr
    #[arg(long)]
    kind: String,
    /// age | rate | loading
    #[arg(long)]
    axis: String,
    #[arg(long)]
    start: Option<f64>,
    #[arg(long)]
    stop: Option<f64>,
    #[arg(long)]
    step: Option<f64>,
    /// Explicit comma-separated grid (alternative to start/stop/step;
    /// empty string for a header-only file)
    #[arg(long)]
    values: Option<String>,
    /// Fixed age while sweeping another axis
    #[arg(long)]
    age: Option<f64>,
    /// Fixed rate while sweeping another axis
    #[arg(long)]
    rate: Option<f64>,
    /// Fixed loading while sweeping another axis
    #[arg(long)]
    loading: Option<f64>,
    #[command(flatten)]
    law: LawArgs,
    #[command(flatten)]
    numerics: NumericsArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Clone, Copy)]
struct MwrBasisArgs {
    /// Gompertz modal age for male quotes
    #[arg(long, default_value_t = 90.0)]
    m_male: f64,
    /// Gompertz modal age for female quotes
    #[arg(long, default_value_t = 92.0)]
    m_female: f64,
    /// Shared Gompertz dispersion for quote valuation
    #[arg(long, default_value_t = 10.0)]
    dispersion: f64,
}

#[derive(Args)]
struct MwrArgs {
    /// Quote CSV: label,age,sex,kind,premium,annual_income
    #[arg(long)]
    quotes: PathBuf,
    #[arg(long)]
    rate: Option<f64>,
    /// Also invert each quote for the rate at which its MWR is 1
    #[arg(long)]
    implied: bool,
    #[command(flatten)]
    basis: MwrBasisArgs,
    #[command(flatten)]
    numerics: NumericsArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct FrontierArgs {
    #[arg(long, default_value = "55,65,75")]
    ages: String,
    #[arg(long, default_value = "0.05,0.15,0.25")]
    loadings: String,
    #[command(flatten)]
    law: LawArgs,
    #[command(flatten)]
    numerics: NumericsArgs,
    #[command(flatten)]
    output: OutputArgs,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help / --version are successful exits; anything else is an
            // input error (exit 1)
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                AnnuityError::InvalidInput { .. } | AnnuityError::Io(_) => 1u8,
                AnnuityError::NonViable { .. } => 2u8,
                AnnuityError::Numerical { .. } | AnnuityError::DurationBlowUp { .. } => 3u8,
            })
        }
    }
}

fn run(cli: Cli) -> income_annuity::Result<ExitCode> {
    pricing::convention_self_check()?;
    let config = match &cli.config {
        Some(path) => RunConfig::from_file(path)?,
        None => RunConfig::default(),
    };
    match cli.command {
        Command::Price(args) => cmd_price(&config, args),
        Command::Table(args) => cmd_table(&config, args),
        Command::Sweep(args) => cmd_sweep(&config, args),
        Command::Mwr(args) => cmd_mwr(&config, args),
        Command::Frontier(args) => cmd_frontier(&config, args),
    }
}

fn resolve_law(config: &RunConfig, args: &LawArgs) -> income_annuity::Result<MortalityLaw> {
    let merged = RunConfig {
        m: args.m.or(config.m),
        b: args.b.or(config.b),
        lambda: args.lambda.or(config.lambda),
        ..RunConfig::default()
    };
    merged.law()
}

fn resolve_ctx(
    config: &RunConfig,
    law_args: &LawArgs,
    numerics: &NumericsArgs,
) -> income_annuity::Result<ValuationContext> {
    let mut quadrature = QuadratureSettings::default();
    if let Some(tol) = numerics.quad_rel_tol {
        quadrature.relative_tolerance = tol;
    }
    let mut bisection = BisectionSettings::default();
    if let Some(tol) = numerics.root_tol {
        bisection.residual_tolerance = tol;
    }
    Ok(ValuationContext {
        law: resolve_law(config, law_args)?,
        quadrature,
        bisection,
    })
}

fn resolve_format(
    config: &RunConfig,
    flag: &Option<String>,
) -> income_annuity::Result<OutputFormat> {
    match flag {
        Some(tag) => OutputFormat::parse(tag),
        None => Ok(config.format.unwrap_or(OutputFormat::Csv)),
    }
}

fn parse_list(text: &str) -> income_annuity::Result<Vec<f64>> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|tok| {
            tok.trim().parse::<f64>().map_err(|_| {
                AnnuityError::invalid(format!("'{tok}' in list '{text}' is not a number"))
            })
        })
        .collect()
}

/// Rows go to `--out` if given, else the config's `out`, else stdout.
fn emit<R: TableRow>(
    rows: &[R],
    config: &RunConfig,
    output: &OutputArgs,
) -> income_annuity::Result<()> {
    let format = resolve_format(config, &output.format)?;
    let target = output.out.clone().or_else(|| config.out.clone());
    let mut sink: Box<dyn Write> = match &target {
        Some(path) => Box::new(std::fs::File::create(path)?),
        None => Box::new(std::io::stdout().lock()),
    };
    match format {
        OutputFormat::Csv => report::write_csv(rows, &mut sink, !output.no_timestamp),
        OutputFormat::Json => report::write_json(rows, &mut sink),
    }
}

fn cmd_price(config: &RunConfig, args: PriceArgs) -> income_annuity::Result<ExitCode> {
    let ctx = resolve_ctx(config, &args.law, &args.numerics)?;
    let kind = ProductKind::parse(&args.kind)?;
    let rate = args.rate.or(config.rate).unwrap_or(0.02);
    let loading = args.loading.or(config.loading).unwrap_or(0.0);
    let spec = ProductSpec::new(kind, args.age, rate, loading)?;
    let result = pricing::price(&ctx, &spec)?;

    let as_json = matches!(resolve_format(config, &args.format)?, OutputFormat::Json);
    if result.viable {
        let price = result.price.expect("viable result carries a price");
        let income = 1.0e6 / price;
        if as_json {
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "kind": kind.to_string(),
                    "age": spec.age,
                    "rate": spec.rate,
                    "loading": spec.loading,
                    "price": price,
                    "income_per_million": income,
                    "residual": result.residual,
                    "iterations": result.iterations,
                    "viable": true,
                }))
                .expect("price report serializes")
            );
        } else {
            println!(
                "kind: {kind}  age: {}  rate: {}  loading: {}",
                spec.age, spec.rate, spec.loading
            );
            println!("price per $1/yr: {}", report_float(price));
            println!("income per $1,000,000 premium: {income:.2}");
            println!(
                "residual: {:e}  iterations: {}  viable: true",
                result.residual, result.iterations
            );
        }
        Ok(ExitCode::SUCCESS)
    } else {
        let reason = result
            .reason
            .map(|r| r.to_string())
            .unwrap_or_else(|| "unknown".into());
        eprintln!("not viable: {reason}");
        // frontier diagnostics for the loaded cash-refund case
        if kind == ProductKind::CashRefund && spec.loading > 0.0 && spec.rate > 0.0 {
            if let Ok(point) = viability::min_viable_rate(&ctx, spec.age, spec.loading) {
                eprintln!(
                    "lowest viable rate at age {}: {:.6} ({:.2} bp)",
                    spec.age,
                    point.threshold,
                    point.threshold * 1e4
                );
            }
            if let Ok(AgeFrontier::Bounded(point)) =
                viability::max_viable_age(&ctx, spec.rate, spec.loading)
            {
                eprintln!(
                    "highest viable age at rate {}: {:.4}",
                    spec.rate, point.threshold
                );
            }
        }
        Ok(ExitCode::from(2))
    }
}

fn report_float(value: f64) -> String {
    format!("{value}")
}

fn cmd_table(config: &RunConfig, args: TableArgs) -> income_annuity::Result<ExitCode> {
    let ages = parse_list(&args.ages)?;
    match args.id.to_ascii_lowercase().as_str() {
        "loia" | "cria" | "iria" => {
            let kind = match args.id.to_ascii_lowercase().as_str() {
                "loia" => ProductKind::LifeOnly,
                "cria" => ProductKind::CashRefund,
                _ => ProductKind::InstalmentRefund,
            };
            let ctx = resolve_ctx(config, &args.law, &args.numerics)?;
            let rates = parse_list(&args.rates)?;
            let loading = args.loading.or(config.loading).unwrap_or(0.0);
            let rows = report::price_table(&ctx, kind, &ages, &rates, loading)?;
            emit(&rows, config, &args.output)?;
            Ok(ExitCode::SUCCESS)
        }
        "frontier" => {
            let ctx = resolve_ctx(config, &args.law, &args.numerics)?;
            let loadings = parse_list(&args.loadings)?;
            let rows = report::frontier_table(&ctx, &ages, &loadings);
            emit(&rows, config, &args.output)?;
            Ok(ExitCode::SUCCESS)
        }
        "mwr" => {
            let quotes = args
                .quotes
                .as_ref()
                .ok_or_else(|| AnnuityError::invalid("table mwr needs --quotes <file>"))?;
            let basis = SexMortality::gompertz(
                args.mwr_basis.m_male,
                args.mwr_basis.m_female,
                args.mwr_basis.dispersion,
            )?;
            let ctx = MwrContext::new(basis);
            let rate = args.rate.or(config.rate).unwrap_or(0.02);
            let rows = report::mwr_table(&ctx, quotes, rate, false)?;
            emit(&rows, config, &args.output)?;
            Ok(ExitCode::SUCCESS)
        }
        other => Err(AnnuityError::invalid(format!(
            "unknown table id '{other}' (expected loia, cria, iria, frontier, or mwr)"
        ))),
    }
}

fn cmd_sweep(config: &RunConfig, args: SweepArgs) -> income_annuity::Result<ExitCode> {
    let ctx = resolve_ctx(config, &args.law, &args.numerics)?;
    let quantity = SweepQuantity::parse(&args.quantity)?;
    let kind = ProductKind::parse(&args.kind)?;
    let axis = Axis::parse(&args.axis)?;

    let points = match (&args.values, args.start, args.stop, args.step) {
        (Some(list), None, None, None) => parse_list(list)?,
        (None, Some(start), Some(stop), Some(step)) => {
            SweepGrid::new(axis, start, stop, step)?.values()
        }
        _ => {
            return Err(AnnuityError::invalid(
                "sweep needs either --values or all of --start/--stop/--step",
            ))
        }
    };

    let base = ProductSpec::new(
        kind,
        args.age.unwrap_or(65.0),
        args.rate.or(config.rate).unwrap_or(0.02),
        args.loading.or(config.loading).unwrap_or(0.0),
    )?;
    let rows = report::sweep(&ctx, quantity, &base, axis, &points)?;
    emit(&rows, config, &args.output)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_mwr(config: &RunConfig, args: MwrArgs) -> income_annuity::Result<ExitCode> {
    let basis = SexMortality::gompertz(
        args.basis.m_male,
        args.basis.m_female,
        args.basis.dispersion,
    )?;
    let ctx = MwrContext::new(basis);
    let rate = args.rate.or(config.rate).unwrap_or(0.02);
    let rows = report::mwr_table(&ctx, &args.quotes, rate, args.implied)?;
    for row in rows.iter().filter(|r| !r.note.is_empty()) {
        eprintln!("line {}: {}", row.line, row.note);
    }
    emit(&rows, config, &args.output)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_frontier(config: &RunConfig, args: FrontierArgs) -> income_annuity::Result<ExitCode> {
    let ctx = resolve_ctx(config, &args.law, &args.numerics)?;
    let ages = parse_list(&args.ages)?;
    let loadings = parse_list(&args.loadings)?;
    let rows = report::frontier_table(&ctx, &ages, &loadings);
    emit(&rows, config, &args.output)?;
    Ok(ExitCode::SUCCESS)
}
