use std::process::ExitCode;

use anyhow::{anyhow, Context as _, Result};
use clap::{Parser, Subcommand, ValueEnum};

use photonloc::reps::{catalog_item, operator_by_name, render, wavefn_by_name};
use photonloc::verify::{self, Selection, VerifyConfig, SUITE_NAMES};
use photonloc::{RepKind, SamplePlan};

#[derive(Parser)]
#[command(
    name = "photonloc",
    version,
    about = "Photon position operator verifier"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Structured,
    Summary,
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sample points per condition.
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    /// Relative zero-test tolerance.
    #[arg(long, default_value_t = 1e-9, allow_hyphen_values = true, value_parser = parse_positive)]
    tol: f64,
    /// Radial sampling shell as `min,max`.
    #[arg(long, default_value = "0.5,2.0", allow_hyphen_values = true, value_parser = parse_shell)]
    shell: (f64, f64),
    /// Minimum polar angle distance from the p3 axis.
    #[arg(long, default_value_t = 0.1, allow_hyphen_values = true)]
    axis_margin: f64,
    #[arg(long, default_value = "all", value_parser = parse_suite)]
    suite: String,
    #[arg(long, value_parser = parse_rep)]
    rep: Option<RepKind>,
    /// Position operator: pryce, hawton or flat.
    #[arg(long, value_parser = ["pryce", "hawton", "flat"])]
    operator: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Structured)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and print the report.
    Verify(VerifyArgs),
    /// Render a catalog operator.
    Show { name: String },
    /// Apply a catalog operator to a catalog wavefunction at a point.
    Eval {
        operator: String,
        /// `(x,y,z)` or `x,y,z`.
        #[arg(allow_hyphen_values = true, value_parser = parse_point)]
        point: [f64; 3],
        wavefn: String,
    },
}

fn parse_positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        Ok(_) => Err("must be a positive finite number".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_numbers(s: &str) -> Result<Vec<f64>, String> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    inner
        .split(',')
        .map(|x| x.trim().parse::<f64>().map_err(|e| format!("{x:?}: {e}")))
        .collect()
}

fn parse_shell(s: &str) -> Result<(f64, f64), String> {
    match parse_numbers(s)?.as_slice() {
        &[lo, hi] => Ok((lo, hi)),
        _ => Err("expected `min,max`".into()),
    }
}

fn parse_point(s: &str) -> Result<[f64; 3], String> {
    match parse_numbers(s)?.as_slice() {
        &[x, y, z] => Ok([x, y, z]),
        _ => Err("expected three coordinates".into()),
    }
}

fn parse_suite(s: &str) -> Result<String, String> {
    if s == "all" || SUITE_NAMES.contains(&s) {
        Ok(s.to_string())
    } else {
        Err(format!(
            "unknown suite; expected one of: all, {}",
            SUITE_NAMES.join(", ")
        ))
    }
}

fn parse_rep(s: &str) -> Result<RepKind, String> {
    RepKind::parse(s).ok_or_else(|| {
        let names: Vec<&str> = RepKind::ALL.iter().map(|k| k.name()).collect();
        format!("expected one of: {}", names.join(", "))
    })
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let config = VerifyConfig {
        plan: SamplePlan {
            seed: args.seed,
            count: args.samples as usize,
            shell: args.shell,
            axis_margin: args.axis_margin,
        },
        tolerance: args.tol,
        ..VerifyConfig::default()
    };
    let selection = Selection {
        suite: Some(args.suite),
        representation: args.rep,
        operator: args.operator,
    };
    let report = verify::run(&config, &selection)?;
    match args.format {
        Format::Structured => print!("{}", report.to_structured()),
        Format::Summary => print!("{}", report.to_summary()),
    }
    Ok(if report.verdict.success {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn fmt_complex(re: f64, im: f64) -> String {
    // adding zero turns -0 into 0
    let (re, im) = (re + 0.0, im + 0.0);
    format!(
        "{re:.12e} {} {:.12e}i",
        if im < 0.0 { '-' } else { '+' },
        im.abs()
    )
}

fn cmd_eval(operator: &str, point: [f64; 3], wavefn: &str) -> Result<()> {
    let op = operator_by_name(operator)?;
    let f = wavefn_by_name(wavefn)?;
    let values = op
        .apply(&f)
        .eval(point)
        .with_context(|| format!("evaluating {operator} {wavefn} at {point:?}"))?;
    for (i, v) in values.iter().enumerate() {
        println!("[{}] {}", i + 1, fmt_complex(v.re, v.im));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Show { name } => {
            let item = catalog_item(&name).map_err(|e| anyhow!(e))?;
            print!("{}", render(&name, &item));
            Ok(ExitCode::SUCCESS)
        }
        Command::Eval {
            operator,
            point,
            wavefn,
        } => {
            cmd_eval(&operator, point, &wavefn)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
