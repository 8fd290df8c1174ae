//! Argument definitions and the string parsers behind them.

use clap::{Args, Parser, Subcommand, ValueEnum};
use relbell::bell::OperatorKind;
use relbell::minkowski::UnitVector;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "relbell",
    version,
    about = "Spin correlations of relativistic Dirac particles: boost-invariant \
             singlet correlators, CHSH scans, and a velocity-dependent comparison"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the built-in verification suite and report each invariant group
    Verify(VerifyArgs),
    /// Evaluate the four singlet correlators and the CHSH value at fixed settings
    Correlator(CorrelatorArgs),
    /// Maximize the CHSH value per operator across a grid of boost speeds
    ChshScan(ChshScanArgs),
    /// Tabulate E(a,b) under both operators across a grid of boost speeds
    Compare(CompareArgs),
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Emit the report as JSON instead of one text line per group
    #[arg(long)]
    pub json: bool,
    /// Corrupt one gamma-matrix sign before running (failure-path exercise)
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Args, Debug)]
pub struct CorrelatorArgs {
    /// Particle mass (natural units, > 0)
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
    /// Boost speed as a fraction of c
    #[arg(long, default_value_t = 0.0)]
    pub beta: f64,
    /// Boost direction "x,y,z" (normalized on load)
    #[arg(long, default_value = "0,0,1")]
    pub boost_dir: String,
    /// First setting of the first particle: "x,y,z", or degrees with --plane
    /// [default: the canonical maximal-violation angle]
    #[arg(long)]
    pub a: Option<String>,
    /// Second setting of the first particle [default: canonical angle]
    #[arg(long)]
    pub a_prime: Option<String>,
    /// First setting of the second particle [default: canonical angle]
    #[arg(long)]
    pub b: Option<String>,
    /// Second setting of the second particle [default: canonical angle]
    #[arg(long)]
    pub b_prime: Option<String>,
    /// Interpret settings as planar angles in degrees, measured from +z
    /// toward +x in the x-z plane
    #[arg(long)]
    pub plane: bool,
    #[arg(long, value_enum, default_value_t = OperatorChoice::PauliLubanski)]
    pub operator: OperatorChoice,
    /// Output file (stdout if omitted); written atomically
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct ChshScanArgs {
    /// Particle mass (natural units, > 0)
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
    /// Boost speed grid "start:stop:step" (stop inclusive), or a single value
    #[arg(long)]
    pub beta_grid: Option<String>,
    /// Single boost speed (alternative to --beta-grid)
    #[arg(long)]
    pub beta: Option<f64>,
    /// Boost direction "x,y,z" (normalized on load)
    #[arg(long, default_value = "0,0,1")]
    pub boost_dir: String,
    /// Operator family to scan; both when omitted
    #[arg(long, value_enum)]
    pub operator: Option<OperatorChoice>,
    /// Confine all four settings to a fixed plane containing the boost axis
    #[arg(long)]
    pub restrict_plane: bool,
    /// Seed for the deterministic multistart sequence
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Optimizer convergence tolerance on the CHSH value
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Output file (stdout if omitted); written atomically
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    /// Particle mass (natural units, > 0)
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
    /// Boost speed grid "start:stop:step" (stop inclusive), or a single value
    #[arg(long)]
    pub beta_grid: Option<String>,
    /// Single boost speed (alternative to --beta-grid)
    #[arg(long)]
    pub beta: Option<f64>,
    /// Boost direction "x,y,z" (normalized on load)
    #[arg(long, default_value = "0,0,1")]
    pub boost_dir: String,
    /// Measurement direction of the first particle: "x,y,z", or degrees with --plane
    #[arg(long)]
    pub a: String,
    /// Measurement direction of the second particle: "x,y,z", or degrees with --plane
    #[arg(long)]
    pub b: String,
    /// Interpret settings as planar angles in degrees (x-z plane)
    #[arg(long)]
    pub plane: bool,
    /// Output file (stdout if omitted); written atomically
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorChoice {
    PauliLubanski,
    Czachor,
}

impl OperatorChoice {
    pub fn kind(&self) -> OperatorKind {
        match self {
            OperatorChoice::PauliLubanski => OperatorKind::PauliLubanski,
            OperatorChoice::Czachor => OperatorKind::Czachor,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// Parses "x,y,z" into three finite numbers.
pub fn parse_vec3(raw: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = raw.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated numbers, got '{raw}'"));
    }
    let mut out = [0.0; 3];
    for (slot, part) in out.iter_mut().zip(&parts) {
        let text = part.trim();
        *slot = text
            .parse::<f64>()
            .map_err(|_| format!("invalid number '{text}' in '{raw}'"))?;
    }
    if !out.iter().all(|v| v.is_finite()) {
        return Err(format!("components must be finite, got '{raw}'"));
    }
    Ok(out)
}

/// Parses a boost-speed grid: either "start:stop:step" with an inclusive
/// stop, or a single value.
pub fn parse_beta_grid(raw: &str) -> Result<Vec<f64>, String> {
    if !raw.contains(':') {
        let value = raw
            .trim()
            .parse::<f64>()
            .map_err(|_| format!("expected a number or start:stop:step, got '{raw}'"))?;
        if !value.is_finite() {
            return Err(format!("grid values must be finite, got '{raw}'"));
        }
        return Ok(vec![value]);
    }
    let parts: Vec<&str> = raw.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("expected start:stop:step, got '{raw}'"));
    }
    let mut numbers = [0.0; 3];
    for (slot, part) in numbers.iter_mut().zip(&parts) {
        let text = part.trim();
        *slot = text
            .parse::<f64>()
            .map_err(|_| format!("invalid number '{text}' in '{raw}'"))?;
    }
    let [start, stop, step] = numbers;
    if !start.is_finite() || !stop.is_finite() || !step.is_finite() {
        return Err(format!("grid bounds must be finite, got '{raw}'"));
    }
    if step <= 0.0 {
        return Err(format!("step must be positive, got {step}"));
    }
    if stop < start {
        return Err(format!("stop {stop} is below start {start}"));
    }
    const MAX_GRID_POINTS: f64 = 1_000_000.0;
    if (stop - start) / step > MAX_GRID_POINTS {
        return Err(format!(
            "grid '{raw}' would have more than {MAX_GRID_POINTS} points"
        ));
    }
    let mut values = Vec::new();
    let slack = 1e-12 * stop.abs().max(1.0);
    for k in 0.. {
        let value = start + k as f64 * step;
        if value > stop + slack {
            break;
        }
        // Snap the terminal point so "0:0.99:0.11" ends at 0.99 exactly.
        values.push(if (value - stop).abs() <= slack { stop } else { value });
    }
    Ok(values)
}

/// Parses one measurement direction: a unit vector "x,y,z", or a planar
/// angle in degrees (measured from +z toward +x) when `plane` is set.
/// `flag` names the offending option in diagnostics.
pub fn parse_setting(raw: &str, plane: bool, flag: &str) -> Result<UnitVector, String> {
    if plane {
        let degrees = raw
            .trim()
            .parse::<f64>()
            .map_err(|_| format!("{flag}: expected an angle in degrees, got '{raw}'"))?;
        if !degrees.is_finite() {
            return Err(format!("{flag}: angle must be finite, got '{raw}'"));
        }
        Ok(UnitVector::in_xz_plane(degrees.to_radians()))
    } else {
        let [x, y, z] = parse_vec3(raw).map_err(|message| format!("{flag}: {message}"))?;
        UnitVector::from_components(x, y, z).map_err(|error| format!("{flag}: {error}"))
    }
}

/// Resolves the mutually exclusive --beta / --beta-grid pair.
pub fn resolve_grid(beta_grid: &Option<String>, beta: &Option<f64>) -> Result<Vec<f64>, String> {
    match (beta_grid, beta) {
        (Some(_), Some(_)) => Err("use only one of --beta and --beta-grid".to_string()),
        (Some(spec), None) => parse_beta_grid(spec).map_err(|m| format!("--beta-grid: {m}")),
        (None, Some(value)) => Ok(vec![*value]),
        (None, None) => Err("one of --beta or --beta-grid is required".to_string()),
    }
}
