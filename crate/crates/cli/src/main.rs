use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fieldspin_core::suite::{operator_table, run_verify, wigner_sweep};
use fieldspin_core::{SweepConfig, TableOperator, VerifyConfig, WignerSweepConfig};

#[derive(Parser)]
#[command(
    name = "fieldspin",
    version,
    about = "Verify relativistic spin operators for massive spin-1/2 fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every verification suite; exit 1 if any gated check fails.
    Verify(Common),
    /// Wigner angle over a grid of boost rapidities.
    Wigner(WignerArgs),
    /// Per-momentum su(2), deviation and Hermiticity columns for each operator.
    Table(TableArgs),
}

#[derive(Args, Clone)]
struct Common {
    #[arg(long, default_value_t = 1.0)]
    mass: f64,
    /// Largest |p| in units of the mass.
    #[arg(long, default_value_t = 5.0)]
    pmax: f64,
    #[arg(long, default_value_t = 500, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct WignerArgs {
    /// Rapidity of the applied boost (grid upper end).
    #[arg(long, default_value_t = 0.6f64.atanh(), allow_negative_numbers = true)]
    xi: f64,
    /// Rapidity of the momentum (grid upper end).
    #[arg(long, default_value_t = 0.6f64.atanh(), allow_negative_numbers = true)]
    eta: f64,
    #[arg(long, default_value_t = 4)]
    steps: usize,
    /// Direction of the applied boost, as `x,y,z`.
    #[arg(long, default_value = "1,0,0", value_parser = parse_axis, allow_negative_numbers = true)]
    boost_axis: [f64; 3],
    /// Direction of the momentum, as `x,y,z`.
    #[arg(long, default_value = "0,0,1", value_parser = parse_axis, allow_negative_numbers = true)]
    momentum_axis: [f64; 3],
    #[arg(long, default_value_t = 1.0)]
    mass: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    common: Common,
    /// Restrict to these operators (repeatable); all by default.
    #[arg(long = "operator", value_enum)]
    operators: Vec<OperatorArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum OperatorArg {
    Field,
    FieldNoncov,
    CovariantDirect,
    WignerCov,
    WignerClosedForm,
    PlSpatial,
}

impl From<OperatorArg> for TableOperator {
    fn from(o: OperatorArg) -> Self {
        match o {
            OperatorArg::Field => TableOperator::Field,
            OperatorArg::FieldNoncov => TableOperator::FieldNoncov,
            OperatorArg::CovariantDirect => TableOperator::CovariantDirect,
            OperatorArg::WignerCov => TableOperator::WignerCov,
            OperatorArg::WignerClosedForm => TableOperator::WignerClosedForm,
            OperatorArg::PlSpatial => TableOperator::PlSpatial,
        }
    }
}

fn parse_axis(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|x| x.trim().parse::<f64>().map_err(|e| format!("{x:?}: {e}")))
        .collect::<Result<_, _>>()?;
    let axis: [f64; 3] = parts
        .try_into()
        .map_err(|_| "expected three comma-separated components".to_string())?;
    if axis.iter().all(|c| *c == 0.0) || axis.iter().any(|c| !c.is_finite()) {
        return Err("axis must be finite and non-zero".into());
    }
    Ok(axis)
}

fn emit<T: Serialize>(rows: &[T], format: Format) -> io::Result<()> {
    let stdout = io::stdout().lock();
    match format {
        Format::Json => {
            let mut out = BufWriter::new(stdout);
            for row in rows {
                serde_json::to_writer(&mut out, row)?;
                out.write_all(b"\n")?;
            }
            out.flush()
        }
        Format::Csv => {
            let mut out = csv::Writer::from_writer(stdout);
            for row in rows {
                out.serialize(row)?;
            }
            out.flush()
        }
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn sweep(common: &Common) -> Result<SweepConfig, fieldspin_core::Error> {
    SweepConfig::new(
        common.mass,
        common.pmax,
        common.samples as usize,
        common.seed,
    )
}

fn finish(result: io::Result<()>, code: u8) -> ExitCode {
    match result {
        Ok(()) => ExitCode::from(code),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(common) => {
            let cfg = match sweep(&common).and_then(|s| VerifyConfig::new(s, common.tol)) {
                Ok(cfg) => cfg,
                Err(e) => return usage_error(e),
            };
            let reports = match run_verify(&cfg) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
            };
            let failed = reports.iter().filter(|r| r.is_failure()).count();
            if failed > 0 {
                eprintln!("{failed} of {} checks failed", reports.len());
            }
            finish(emit(&reports, common.format), u8::from(failed > 0))
        }
        Command::Wigner(args) => {
            let cfg = WignerSweepConfig {
                xi: args.xi,
                eta: args.eta,
                steps: args.steps,
                boost_axis: args.boost_axis,
                momentum_axis: args.momentum_axis,
                mass: args.mass,
            };
            match wigner_sweep(&cfg) {
                Ok(rows) => finish(emit(&rows, args.format), 0),
                Err(e) => usage_error(e),
            }
        }
        Command::Table(args) => {
            let sweep = match sweep(&args.common) {
                Ok(s) => s,
                Err(e) => return usage_error(e),
            };
            let ops: Vec<TableOperator> = if args.operators.is_empty() {
                TableOperator::ALL.to_vec()
            } else {
                args.operators.iter().map(|o| (*o).into()).collect()
            };
            match operator_table(&sweep, &ops) {
                Ok(rows) => finish(emit(&rows, args.common.format), 0),
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
    }
}
