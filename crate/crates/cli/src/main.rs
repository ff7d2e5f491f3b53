//! `ptdarboux`: tabulate eigenfunctions, check identities, and run the
//! verification suite for the `κ = λ = 2` Pöschl-Teller potential.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ptdarboux::closed_form::{hypergeometric_eigenstate, IdentityKind, TrigEigenfunction, TrigIdentity};
use ptdarboux::models::WellConfig;
use ptdarboux::verify::{
    fd_spectrum, run_full_suite, CheckResult, Parameters, SuiteConfig, Tolerances, VerificationReport,
    IDENTITY_POINTS, MIN_GRID_POINTS,
};
use ptdarboux::Error;

use output::{emit, render_report, render_table, Format, Table, TableRow};

#[derive(Debug, Parser)]
#[command(name = "ptdarboux", version, about = "Closed-form Pöschl-Teller eigenstates and their verification")]
struct Cli {
    #[command(flatten)]
    common: Common,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Inverse length scale; the interval is (0, π/(2α)).
    #[arg(long, global = true, default_value_t = 1.0)]
    alpha: f64,

    /// Highest hypergeometric degree n (trig checks run to k = n + 2).
    #[arg(long = "n-max", global = true, default_value_t = 10)]
    n_max: u32,

    /// Gauss-Legendre points per panel.
    #[arg(long = "quad-order", global = true, default_value_t = 64)]
    quad_order: usize,

    /// Equal-width quadrature panels.
    #[arg(long, global = true, default_value_t = 32)]
    panels: usize,

    /// Finite-difference grid size for the spectrum cross-check.
    #[arg(long = "grid-points", global = true, default_value_t = 4000)]
    grid_points: usize,

    /// Tolerance override, repeatable (quadrature, orthonormality,
    /// expectation, identity, residual, spectrum).
    #[arg(long = "tol", value_name = "NAME=VALUE", global = true, value_parser = parse_tolerance)]
    tol: Vec<(String, f64)>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run every check and report; exit 1 if any fails.
    Verify,
    /// Sample χ̃_{n+2} and the normalized hypergeometric ψ_n side by side.
    Tabulate {
        #[arg(long, default_value_t = 0)]
        n: u32,
        #[arg(long, default_value_t = 11)]
        points: usize,
    },
    /// Compare both sides of one hypergeometric/trigonometric identity.
    Identity {
        #[arg(long, value_enum)]
        which: Which,
        /// Degree for `base`.
        #[arg(long)]
        n: Option<u32>,
        /// Index for `even`/`odd`.
        #[arg(long)]
        m: Option<u32>,
    },
    /// Finite-difference eigenvalues beside the exact 4α²(n+2)².
    Spectrum {
        #[arg(long, default_value_t = 3)]
        count: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Base,
    Even,
    Odd,
}

fn parse_tolerance(s: &str) -> Result<(String, f64), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected NAME=VALUE, got {s:?}"))?;
    let value: f64 = value
        .trim()
        .parse()
        .map_err(|e| format!("bad tolerance value {value:?}: {e}"))?;
    Ok((name.trim().to_string(), value))
}

enum Failure {
    /// Bad flags or unusable configuration (exit 2).
    Usage(String),
    /// A mathematical check did not pass (exit 1).
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl Common {
    fn well(&self) -> Result<WellConfig, Failure> {
        Ok(WellConfig::new(self.alpha)?)
    }

    fn tolerances(&self) -> Result<Tolerances, Failure> {
        let mut t = Tolerances::default();
        for (name, value) in &self.tol {
            t.set(name, *value)?;
        }
        Ok(t)
    }

    fn validate(&self) -> Result<(), Failure> {
        self.well()?;
        if self.quad_order == 0 || self.panels == 0 {
            return Err(Failure::Usage("--quad-order and --panels must be positive".into()));
        }
        if self.grid_points < MIN_GRID_POINTS {
            return Err(Failure::Usage(format!("--grid-points must be at least {MIN_GRID_POINTS}")));
        }
        self.tolerances()?;
        Ok(())
    }

    fn parameters(&self) -> Parameters {
        Parameters {
            alpha: self.alpha,
            n_max: self.n_max,
            k_max: self.n_max + 2,
            quad_order: self.quad_order,
            panels: self.panels,
            grid_points: self.grid_points,
        }
    }

    fn write(&self, text: &str) -> Result<(), Failure> {
        emit(text, self.output.as_deref()).map_err(|e| {
            let target = self
                .output
                .as_ref()
                .map_or_else(|| "stdout".to_string(), |p| p.display().to_string());
            Failure::Usage(format!("cannot write {target}: {e}"))
        })
    }

    /// Writes the report and maps its verdict onto the exit status.
    fn finish(&self, report: &VerificationReport) -> Result<(), Failure> {
        self.write(&render_report(report, self.format))?;
        if report.overall {
            Ok(())
        } else {
            let names: Vec<_> = report.failures().map(|c| c.name.as_str()).collect();
            Err(Failure::Check(format!("failed checks: {}", names.join(", "))))
        }
    }
}

fn cmd_verify(common: &Common) -> Result<(), Failure> {
    let config = SuiteConfig {
        alpha: common.alpha,
        n_max: common.n_max,
        quad_order: common.quad_order,
        panels: common.panels,
        grid_points: common.grid_points,
        tolerances: common.tolerances()?,
        ..SuiteConfig::default()
    };
    let report = run_full_suite(&config)?;
    common.finish(&report)
}

fn cmd_tabulate(common: &Common, n: u32, points: usize) -> Result<(), Failure> {
    if points < 2 {
        return Err(Failure::Usage("--points must be at least 2".into()));
    }
    let cfg = common.well()?;
    let chi = TrigEigenfunction::new(n + 2, cfg)?;
    let psi = hypergeometric_eigenstate(n, &cfg).map_err(|e| Failure::Check(e.to_string()))?;
    let len = cfg.length();
    let mut rows = Vec::with_capacity(points);
    for i in 0..points {
        let x = if i + 1 == points { len } else { len * i as f64 / (points - 1) as f64 };
        let c = chi.eval(x)?;
        let p = psi.eval(x)?;
        rows.push(TableRow { x, chi: c, psi: p, difference: p - c });
    }
    let scale = rows.iter().map(|r| r.chi.abs()).fold(0.0, f64::max);
    let worst = rows.iter().map(|r| r.difference.abs()).fold(0.0, f64::max);
    let table = Table { alpha: cfg.alpha(), n, k: n + 2, rows };
    common.write(&render_table(&table, common.format))?;
    let tol = common.tolerances()?.identity;
    if worst <= tol * scale.max(f64::MIN_POSITIVE) {
        Ok(())
    } else {
        Err(Failure::Check(format!("max |ψ − χ̃| = {worst:e} exceeds {tol:e}·max|χ̃|")))
    }
}

fn cmd_identity(common: &Common, which: Which, n: Option<u32>, m: Option<u32>) -> Result<(), Failure> {
    let index = match (n, m) {
        (Some(_), Some(_)) => return Err(Failure::Usage("give either --n or --m, not both".into())),
        (None, None) => return Err(Failure::Usage("missing --n (base) or --m (even/odd)".into())),
        (Some(i), None) | (None, Some(i)) => i,
    };
    let cfg = common.well()?;
    let tol = common.tolerances()?.identity;
    let (kind, name) = match which {
        Which::Base => (IdentityKind::Base { n: index }, format!("identity_base[n={index}]")),
        Which::Even => (IdentityKind::Even { m: index }, format!("identity_even[m={index}]")),
        Which::Odd => (IdentityKind::Odd { m: index }, format!("identity_odd[m={index}]")),
    };
    let identity = TrigIdentity::new(kind).map_err(|e| match e {
        Error::VanishingDenominator(msg) => Failure::Check(format!("identity undefined: {msg}")),
        other => other.into(),
    })?;
    let sweep = identity.sweep(&cfg, IDENTITY_POINTS, ptdarboux::closed_form::DEFAULT_NODE_MARGIN)?;
    let report = VerificationReport::new(
        common.parameters(),
        vec![CheckResult::new(name, sweep.relative(), 0.0, tol)],
    );
    common.finish(&report)
}

fn cmd_spectrum(common: &Common, count: usize) -> Result<(), Failure> {
    let cfg = common.well()?;
    let tol = common.tolerances()?.spectrum;
    let values = fd_spectrum(&cfg, common.grid_points, count)?;
    let checks = values
        .iter()
        .enumerate()
        .map(|(n, &e)| {
            let q = n as f64 + 2.0;
            let exact = 4.0 * cfg.alpha() * cfg.alpha() * q * q;
            CheckResult::new(format!("fd_spectrum[n={n}]"), e, exact, tol)
        })
        .collect();
    common.finish(&VerificationReport::new(common.parameters(), checks))
}

fn run(cli: &Cli) -> Result<(), Failure> {
    cli.common.validate()?;
    match &cli.command {
        Command::Verify => cmd_verify(&cli.common),
        Command::Tabulate { n, points } => cmd_tabulate(&cli.common, *n, *points),
        Command::Identity { which, n, m } => cmd_identity(&cli.common, *which, *n, *m),
        Command::Spectrum { count } => cmd_spectrum(&cli.common, *count),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("ptdarboux: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("ptdarboux: {msg}");
            ExitCode::from(2)
        }
    }
}
