//! Command-line front end: error sweeps, the rod study and the self-check.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use se3_dexp::approx::SwitchPolicy;
use se3_dexp::checks::{run_all, CheckConfig};
use se3_dexp::rod::{build_reference_with, straight_reference, ReferenceRod, RodConfig};
use se3_dexp::study::{
    default_targets, rod_rows, run_sweep, switch_boundaries, switching_error, uniform_grid, RodRow,
    SweepSpec, SweepTarget, TestVectors,
};
use se3_dexp::Vec6;

#[derive(Parser)]
#[command(name = "se3dexp", version, about = "SE(3) tangent operator studies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Truncation error of the series approximations along X(s) = s·[n; y].
    Errors(ErrorsArgs),
    /// Deformation, rates and potential derivatives of the demo rod.
    Rod(RodArgs),
    /// Run the oracle suites; exits nonzero if any check fails.
    Check(CheckArgs),
}

#[derive(Args)]
struct ErrorsArgs {
    #[arg(long, default_value_t = 0.0)]
    s_min: f64,
    #[arg(long, default_value_t = 0.1)]
    s_max: f64,
    #[arg(long, default_value_t = 101)]
    samples: usize,
    /// Log-spaced samples (needs s-min > 0).
    #[arg(long)]
    log: bool,
    /// Comma-separated `family:k` list, e.g. `dexp:2,ddexpinv:3`. All
    /// targets and orders by default.
    #[arg(long, value_delimiter = ',')]
    targets: Vec<String>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct RodArgs {
    /// Switching threshold on ‖x‖ for the robust columns.
    #[arg(long, default_value_t = 1e-5)]
    epsilon: f64,
    /// Series order below the threshold, clamped per quantity.
    #[arg(long, default_value_t = 3)]
    order: usize,
    #[arg(long, default_value_t = 1001)]
    tau_samples: usize,
    /// Samples of the switching-error study around τ = 0.5.
    #[arg(long, default_value_t = 201)]
    study_samples: usize,
    /// Rod length in mm.
    #[arg(long = "L", default_value_t = 100.0)]
    length: f64,
    /// Young's modulus in MPa.
    #[arg(long = "E", default_value_t = 10.0)]
    youngs: f64,
    /// Shear modulus in MPa.
    #[arg(long = "G", default_value_t = 0.3)]
    shear: f64,
    #[arg(long, default_value_t = 8.0)]
    width: f64,
    #[arg(long, default_value_t = 8.0)]
    height: f64,
    #[arg(long)]
    out_dir: PathBuf,
}

#[derive(Args)]
struct CheckArgs {
    /// Print every check instead of one line per suite.
    #[arg(long)]
    verbose: bool,
    #[arg(long, default_value_t = CheckConfig::default().samples)]
    samples: usize,
    #[arg(long, hide = true, default_value_t = 0.0)]
    perturb_a2: f64,
}

const STUDY_THRESHOLDS: [f64; 2] = [1e-2, 1e-3];
const STUDY_ORDERS: [usize; 3] = [0, 1, 2];
const COMPONENTS: [&str; 6] = ["kappa1", "kappa2", "kappa3", "rho1", "rho2", "rho3"];

fn fmt(v: f64) -> String {
    format!("{v:.16e}")
}

fn write_csv(path: &Path, header: &[String], rows: &[Vec<f64>]) -> Result<()> {
    let mut w =
        csv::Writer::from_path(path).with_context(|| format!("cannot write {}", path.display()))?;
    w.write_record(header)?;
    for r in rows {
        w.write_record(r.iter().map(|v| fmt(*v)))?;
    }
    w.flush()
        .with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}

fn errors(args: ErrorsArgs) -> Result<()> {
    let targets = if args.targets.is_empty() {
        default_targets()
    } else {
        args.targets
            .iter()
            .map(|t| SweepTarget::parse(t))
            .collect::<se3_dexp::Result<_>>()?
    };
    let spec = SweepSpec {
        s_min: args.s_min,
        s_max: args.s_max,
        samples: args.samples,
        log: args.log,
        targets,
    };
    let table = run_sweep(&spec, &TestVectors::default())?;
    let header: Vec<String> = std::iter::once("s".to_string())
        .chain(table.targets.iter().map(|t| t.name()))
        .collect();
    let rows: Vec<Vec<f64>> = table
        .s
        .iter()
        .zip(&table.rows)
        .map(|(s, r)| std::iter::once(*s).chain(r.iter().copied()).collect())
        .collect();
    write_csv(&args.out, &header, &rows)
}

fn paired_header(prefix: &str) -> Vec<String> {
    let mut h = vec!["tau".to_string()];
    for kind in ["literal", "robust"] {
        h.extend(COMPONENTS.iter().map(|c| format!("{prefix}_{c}_{kind}")));
    }
    h
}

fn paired_rows(rows: &[RodRow], pick: impl Fn(&RodRow) -> (Vec6, Vec6)) -> Vec<Vec<f64>> {
    rows.iter()
        .map(|r| {
            let (a, b) = pick(r);
            std::iter::once(r.tau)
                .chain(a.iter().copied())
                .chain(b.iter().copied())
                .collect()
        })
        .collect()
}

fn rod(args: RodArgs) -> Result<()> {
    let cfg = RodConfig {
        length: args.length,
        width: args.width,
        height: args.height,
        youngs: args.youngs,
        shear: args.shear,
    };
    let k = cfg.stiffness()?;
    let policy = SwitchPolicy::new(args.epsilon, Some(args.order))?;
    if args.tau_samples < 2 || args.study_samples < 2 {
        anyhow::bail!("sample counts must be at least 2");
    }
    std::fs::create_dir_all(&args.out_dir)
        .with_context(|| format!("cannot create {}", args.out_dir.display()))?;
    let reference = ReferenceRod::default();
    let grid = uniform_grid(0.0, 1.0, args.tau_samples);
    let rows = rod_rows(&reference, &grid, &policy, &k, &straight_reference())?;
    let dir = &args.out_dir;
    write_csv(
        &dir.join("chi.csv"),
        &paired_header("chi"),
        &paired_rows(&rows, |r| (r.chi_literal, r.chi_robust)),
    )?;
    write_csv(
        &dir.join("chi_prime.csv"),
        &paired_header("chi_p"),
        &paired_rows(&rows, |r| (r.chi_p_literal, r.chi_p_robust)),
    )?;
    write_csv(
        &dir.join("chi_second.csv"),
        &paired_header("chi_pp"),
        &paired_rows(&rows, |r| (r.chi_pp_literal, r.chi_pp_robust)),
    )?;
    write_csv(
        &dir.join("gradient.csv"),
        &paired_header("grad"),
        &paired_rows(&rows, |r| (r.grad_literal, r.grad_robust)),
    )?;
    let hess: Vec<Vec<f64>> = rows
        .iter()
        .map(|r| vec![r.tau, r.hess_norm_literal, r.hess_norm_robust])
        .collect();
    write_csv(
        &dir.join("hessian_norm.csv"),
        &[
            "tau".into(),
            "hess_norm_literal".into(),
            "hess_norm_robust".into(),
        ],
        &hess,
    )?;

    // the widest band, with as much room again on either side
    let (lo, _) = switch_boundaries(STUDY_THRESHOLDS[0]);
    let half = 2.0 * (0.5 - lo);
    let study_grid = uniform_grid(0.5 - half, 0.5 + half, args.study_samples);
    let samples = build_reference_with(&reference, &study_grid)?;
    let mut header = vec!["tau".to_string()];
    for eps in STUDY_THRESHOLDS {
        header.extend(STUDY_ORDERS.iter().map(|k| format!("eps{eps:e}_k{k}")));
    }
    let study: Vec<Vec<f64>> = samples
        .iter()
        .map(|s| -> se3_dexp::Result<Vec<f64>> {
            let mut row = vec![s.tau];
            for eps in STUDY_THRESHOLDS {
                for k in STUDY_ORDERS {
                    row.push(switching_error(s, eps, k)?);
                }
            }
            Ok(row)
        })
        .collect::<se3_dexp::Result<_>>()?;
    write_csv(&dir.join("switching_error.csv"), &header, &study)
}

fn check(args: CheckArgs) -> Result<bool> {
    let cfg = CheckConfig {
        samples: args.samples,
        a2_shift: args.perturb_a2,
        ..CheckConfig::default()
    };
    let reports = run_all(&cfg)?;
    println!(
        "{:<10} {:<24} {:>12} {:>10}  result",
        "suite", "check", "max dev", "tol"
    );
    for rep in &reports {
        if args.verbose {
            for row in &rep.rows {
                let verdict = if row.passed() { "PASS" } else { "FAIL" };
                println!(
                    "{:<10} {:<24} {:>12.3e} {:>10.0e}  {verdict}",
                    row.suite, row.check, row.max_deviation, row.tolerance
                );
            }
        } else {
            let verdict = if rep.passed() { "PASS" } else { "FAIL" };
            let failed: Vec<&str> = rep
                .rows
                .iter()
                .filter(|r| !r.passed())
                .map(|r| r.check)
                .collect();
            println!(
                "{:<10} {:<24} {:>12.3e} {:>10}  {verdict}",
                rep.name,
                format!("{} checks", rep.rows.len()),
                rep.max_deviation(),
                "",
            );
            for f in failed {
                println!("{:<10}   failed: {f}", "");
            }
        }
    }
    Ok(reports.iter().all(|r| r.passed()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Errors(a) => errors(a).map(|_| true),
        Command::Rod(a) => rod(a).map(|_| true),
        Command::Check(a) => check(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
