//! `rank1`: best rank-one approximation of dense real tensors from the
//! command line, plus complete critical-point enumeration, eigenpair
//! censuses, symmetry diagnostics, and seeded verification experiments.
//!
//! Exit codes: 0 success, 2 validation failure (bad file or unsupported
//! combination), 3 numerical degeneracy (inconclusive census, degenerate
//! input).

mod verify;

use clap::{Parser, Subcommand, ValueEnum};
use rank1_core::critical::{eigenpair_census, enumerate_critical_points};
use rank1_core::error::Error;
use rank1_core::family::{detect_family, family_tensor, FamilyParams};
use rank1_core::io::read_tensor;
use rank1_core::optimizer::{certify, solve_general, solve_symmetric, SolverConfig};
use rank1_core::tensor::Tensor;
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;
use verify::{ExperimentSpec, VerifyKind};

#[derive(Parser)]
#[command(
    name = "rank1",
    about = "Best rank-one approximation toolkit for dense real tensors",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Symmetric,
    PartialSymmetry,
    Perturbation,
}

impl From<KindArg> for VerifyKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Symmetric => VerifyKind::Symmetric,
            KindArg::PartialSymmetry => VerifyKind::PartialSymmetry,
            KindArg::Perturbation => VerifyKind::Perturbation,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Best rank-one approximation by multi-start alternating power updates
    Approx {
        /// Tensor file in the text format
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Generate the 2x2x2 family tensor at this angle instead of reading a file
        #[arg(long)]
        theta: Option<f64>,
        #[arg(long, default_value_t = 32)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Constrain all factors to be equal (requires a symmetric tensor)
        #[arg(long)]
        symmetric: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate every critical point on the circle (symmetric, n = 2)
    Enum {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        theta: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Census of the eigenpair systems against the count bounds
    Census {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        theta: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test membership in the trace-free 2x2x2 family and recover (theta, scale)
    DetectFamily {
        #[arg(long = "in")]
        input: PathBuf,
        /// Relative membership tolerance (times the tensor norm)
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Partition the modes into maximal symmetry blocks
    Symdecomp {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded verification experiments with JSON reports
    Verify {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        d: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 32)]
        restarts: usize,
        /// Pass threshold; defaults to 1e-6 (1e-5 for perturbation)
        #[arg(long)]
        tol: Option<f64>,
        /// Run on the family tensor at this angle instead of random samples
        #[arg(long)]
        theta: Option<f64>,
        /// Comma-separated perturbation sizes, largest first
        #[arg(long = "eps-list")]
        eps_list: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::DegenerateInput(_) | Error::NonConvergence(_) => 3,
        _ => 2,
    }
}

fn load_input(input: &Option<PathBuf>, theta: Option<f64>) -> Result<Tensor, Error> {
    match (input, theta) {
        (Some(path), None) => read_tensor(path),
        (None, Some(theta)) => Ok(family_tensor(&FamilyParams { theta, scale: 1.0 })),
        (Some(_), Some(_)) => Err(Error::Unsupported(
            "give either --in or --theta, not both".into(),
        )),
        (None, None) => Err(Error::Unsupported(
            "an input is required: --in FILE or --theta ANGLE".into(),
        )),
    }
}

fn write_json(path: &Option<PathBuf>, value: &serde_json::Value) -> Result<(), Error> {
    if let Some(path) = path {
        let text = serde_json::to_string_pretty(value).expect("serializable");
        std::fs::write(path, text + "\n").map_err(|e| Error::Parse {
            line: 0,
            message: format!("cannot write {}: {e}", path.display()),
        })?;
    }
    Ok(())
}

fn dispatch(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Approx {
            input,
            theta,
            restarts,
            seed,
            tol,
            symmetric,
            out,
        } => {
            let t = load_input(&input, theta)?;
            let cfg = SolverConfig {
                restarts,
                seed,
                tol,
                symmetric_mode: symmetric,
                ..Default::default()
            };
            let res = if symmetric {
                solve_symmetric(&t, &cfg)?
            } else {
                solve_general(&t, &cfg)?
            };
            let cert = certify(&t, &res.approx, cfg.tol)?;
            println!("value      {:.12}", res.value);
            println!("residual   {:.3e}", res.residual);
            println!(
                "iterations {}   restart {}   converged {}",
                res.iterations, res.restart_index, res.converged
            );
            for (m, f) in res.approx.factors.iter().enumerate() {
                let coords: Vec<String> =
                    f.coords().iter().map(|x| format!("{x:.12}")).collect();
                println!("factor {}   [{}]", m + 1, coords.join(", "));
            }
            println!(
                "certificate: stationary {} pythagoras_gap {:.3e} cert_gap {:.3e}",
                cert.is_stationary, cert.pythagoras_gap, cert.cert_gap
            );
            let payload = json!({
                "command": "approx",
                "value": res.value,
                "residual": res.residual,
                "iterations": res.iterations,
                "restart_index": res.restart_index,
                "converged": res.converged,
                "factors": res.approx.factors.iter().map(|f| f.coords().to_vec()).collect::<Vec<_>>(),
                "certificate": {
                    "is_stationary": cert.is_stationary,
                    "residual": cert.residual,
                    "pythagoras_gap": cert.pythagoras_gap,
                    "cert_gap": cert.cert_gap,
                },
            });
            write_json(&out, &payload)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Enum { input, theta, out } => {
            let t = load_input(&input, theta)?;
            let points = enumerate_critical_points(&t)?;
            println!("{:>3} {:>18} {:>18} {:>18} {:>10}", "#", "angle", "x1", "x2", "value");
            for (i, p) in points.iter().enumerate() {
                println!(
                    "{:>3} {:>18.12} {:>18.12} {:>18.12} {:>10.6}",
                    i + 1,
                    p.angle,
                    p.point.coords()[0],
                    p.point.coords()[1],
                    p.value
                );
            }
            let payload = json!({
                "command": "enum",
                "points": points.iter().map(|p| json!({
                    "angle": p.angle,
                    "point": p.point.coords().to_vec(),
                    "value": p.value,
                    "residual": p.residual,
                })).collect::<Vec<_>>(),
            });
            write_json(&out, &payload)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Census { input, theta, out } => {
            let t = load_input(&input, theta)?;
            let report = eigenpair_census(&t)?;
            println!(
                "complex solutions {} (bound {})",
                report.complex_count, report.bound_complex
            );
            println!(
                "real solutions    +{} / -{} (bound {})",
                report.real_count_pos, report.real_count_neg, report.bound_real
            );
            let bounds = match report.bounds_satisfied {
                Some(true) => "true",
                Some(false) => "false",
                None => "unknown",
            };
            println!("conclusive {}   bounds_satisfied {}", report.conclusive, bounds);
            println!(
                "distinct critical values {}   antipodal pairing {}{}",
                report.distinct_critical_values,
                report.antipodal_pairing_ok,
                if report.conclusive && !report.distinct_critical_values {
                    "   [nongeneric]"
                } else {
                    ""
                }
            );
            let payload = serde_json::to_value(&report).expect("serializable");
            write_json(&out, &payload)?;
            if report.conclusive {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(3))
            }
        }

        Command::DetectFamily { input, tol, out } => {
            let t = read_tensor(&input)?;
            let found = detect_family(&t, tol)?;
            match &found {
                Some(p) => println!("family member: theta {:.12} scale {:.12}", p.theta, p.scale),
                None => println!("not in the family (tolerance {tol:.1e})"),
            }
            let payload = json!({
                "command": "detect-family",
                "detected": found.is_some(),
                "theta": found.map(|p| p.theta),
                "scale": found.map(|p| p.scale),
            });
            write_json(&out, &payload)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Symdecomp { input, out } => {
            let t = read_tensor(&input)?;
            let partition = t.symmetric_decomposition();
            // 1-based modes on the outside
            let blocks: Vec<Vec<usize>> = partition
                .blocks()
                .iter()
                .map(|b| b.iter().map(|m| m + 1).collect())
                .collect();
            let rendered: Vec<String> = blocks
                .iter()
                .map(|b| {
                    let items: Vec<String> = b.iter().map(|m| m.to_string()).collect();
                    format!("[{}]", items.join(","))
                })
                .collect();
            println!("blocks [{}]", rendered.join(","));
            let payload = json!({ "command": "symdecomp", "blocks": blocks });
            write_json(&out, &payload)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify {
            kind,
            n,
            d,
            samples,
            seed,
            restarts,
            tol,
            theta,
            eps_list,
            out,
        } => {
            let kind: VerifyKind = kind.into();
            let eps_list = match eps_list {
                Some(csv) if kind == VerifyKind::Perturbation => csv
                    .split(',')
                    .map(|s| {
                        s.trim().parse::<f64>().map_err(|_| Error::Parse {
                            line: 0,
                            message: format!("bad eps value '{s}'"),
                        })
                    })
                    .collect::<Result<Vec<f64>, Error>>()?,
                _ if kind == VerifyKind::Perturbation => ExperimentSpec::default_eps_list(),
                _ => Vec::new(),
            };
            // a fixed family tensor makes every sample identical
            let samples = if theta.is_some() { 1 } else { samples };
            let spec = ExperimentSpec {
                kind,
                n,
                d,
                samples,
                seed,
                restarts,
                tol: tol.unwrap_or_else(|| ExperimentSpec::default_tol(kind)),
                theta,
                eps_list,
            };
            let report = verify::run(&spec)?;
            println!(
                "verify {:?}: {}/{} samples passed (rate {:.4}) in {} ms",
                spec.kind,
                report.aggregate.passed,
                report.aggregate.samples,
                report.aggregate.pass_rate,
                report.wall_ms
            );
            for s in report.samples.iter().filter(|s| !s.pass) {
                println!("  sample {} FAILED (gap {:?})", s.index, s.gap);
            }
            let payload = serde_json::to_value(&report).expect("serializable");
            write_json(&out, &payload)?;
            if report.aggregate.passed == report.aggregate.samples {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}
