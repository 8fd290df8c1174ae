//! Subcommand execution: parse-validated inputs in, records out. Every
//! function returns the process exit code or a one-line diagnostic.

use crate::config::{
    parse_setting, parse_vec3, resolve_grid, ChshScanArgs, CompareArgs, CorrelatorArgs, Format,
    VerifyArgs,
};
use crate::output::{
    compare_csv, scan_csv, to_json, write_output, CompareRow, CorrelatorRecord, ScanRow,
    VerifyRecord,
};
use relbell::bell::{
    chsh_boost_sweep, chsh_value, correlator, MeasurementSettings, OperatorKind,
    OptimizerConfig, PlaneRestriction, CANONICAL_PLANE_ANGLES_DEG,
};
use relbell::minkowski::{BoostParams, UnitVector};
use relbell::observables::czachor_correlator;
use relbell::verify::{run_all, FaultInjection};
use relbell::Error;

pub fn run_verify(args: &VerifyArgs) -> Result<i32, String> {
    let fault = if args.inject_fault {
        FaultInjection::GammaSign
    } else {
        FaultInjection::None
    };
    let reports = run_all(fault);
    let records: Vec<VerifyRecord> = reports
        .iter()
        .map(|report| VerifyRecord {
            name: report.name,
            worst_residual: report.worst_residual,
            tolerance: report.tolerance,
            cases: report.cases,
            passed: report.passed,
        })
        .collect();
    if args.json {
        print!("{}", to_json(&records)?);
    } else {
        for record in &records {
            println!(
                "{} {:<30} residual {:>12.3e}  tolerance {:>8.1e}  cases {}",
                if record.passed { "PASS" } else { "FAIL" },
                record.name,
                record.worst_residual,
                record.tolerance,
                record.cases
            );
        }
    }
    Ok(if records.iter().all(|record| record.passed) {
        0
    } else {
        1
    })
}

fn boost_from_flags(
    beta: f64,
    beta_flag: &str,
    boost_dir: &str,
    mass: f64,
) -> Result<BoostParams, String> {
    let [x, y, z] = parse_vec3(boost_dir).map_err(|message| format!("--boost-dir: {message}"))?;
    let direction = UnitVector::from_components(x, y, z)
        .map_err(|error| format!("--boost-dir: {error}"))?;
    BoostParams::new(beta, direction, mass).map_err(|error| match error {
        Error::BetaOutOfRange(_) => format!("{beta_flag}: {error}"),
        Error::InvalidMass(_) => format!("--mass: {error}"),
        other => other.to_string(),
    })
}

fn setting_or_canonical(
    raw: &Option<String>,
    plane: bool,
    flag: &str,
    canonical_index: usize,
) -> Result<UnitVector, String> {
    match raw {
        Some(text) => parse_setting(text, plane, flag),
        None => Ok(UnitVector::in_xz_plane(
            CANONICAL_PLANE_ANGLES_DEG[canonical_index].to_radians(),
        )),
    }
}

fn pair_correlator(
    kind: OperatorKind,
    a: &UnitVector,
    b: &UnitVector,
    boost: &BoostParams,
) -> f64 {
    match kind {
        OperatorKind::PauliLubanski => correlator(a, b, boost),
        OperatorKind::Czachor => czachor_correlator(a, b, &boost.velocity())
            .expect("boost speed below 1 by construction"),
    }
}

fn components(v: &UnitVector) -> [f64; 3] {
    [v.x(), v.y(), v.z()]
}

pub fn run_correlator(args: &CorrelatorArgs) -> Result<i32, String> {
    let boost = boost_from_flags(args.beta, "--beta", &args.boost_dir, args.mass)?;
    let a = setting_or_canonical(&args.a, args.plane, "--a", 0)?;
    let a_prime = setting_or_canonical(&args.a_prime, args.plane, "--a-prime", 1)?;
    let b = setting_or_canonical(&args.b, args.plane, "--b", 2)?;
    let b_prime = setting_or_canonical(&args.b_prime, args.plane, "--b-prime", 3)?;
    let kind = args.operator.kind();

    let settings = MeasurementSettings::new(a, a_prime, b, b_prime);
    let record = CorrelatorRecord {
        beta: boost.beta(),
        boost_dir: {
            let d = boost.direction().vector();
            [d.x, d.y, d.z]
        },
        operator: kind.as_str(),
        a: components(&a),
        a_prime: components(&a_prime),
        b: components(&b),
        b_prime: components(&b_prime),
        e_ab: pair_correlator(kind, &a, &b, &boost),
        e_a_prime_b: pair_correlator(kind, &a_prime, &b, &boost),
        e_a_b_prime: pair_correlator(kind, &a, &b_prime, &boost),
        e_a_prime_b_prime: pair_correlator(kind, &a_prime, &b_prime, &boost),
        chsh_value: chsh_value(&settings, &boost, kind),
        converged: true,
    };
    let rendered = match args.format {
        Format::Csv => record.csv(),
        Format::Json => to_json(&record)?,
    };
    write_output(args.out.as_deref(), &rendered)?;
    Ok(0)
}

pub fn run_chsh_scan(args: &ChshScanArgs) -> Result<i32, String> {
    let grid = resolve_grid(&args.beta_grid, &args.beta)?;
    let [x, y, z] =
        parse_vec3(&args.boost_dir).map_err(|message| format!("--boost-dir: {message}"))?;
    let direction =
        UnitVector::from_components(x, y, z).map_err(|error| format!("--boost-dir: {error}"))?;
    let restriction = if args.restrict_plane {
        PlaneRestriction::BoostPlane
    } else {
        PlaneRestriction::None
    };
    let config = OptimizerConfig {
        seed: args.seed,
        tolerance: args.tol,
        ..OptimizerConfig::default()
    };
    let operators: Vec<OperatorKind> = match &args.operator {
        Some(choice) => vec![choice.kind()],
        None => OperatorKind::BOTH.to_vec(),
    };

    // One sweep per operator, then interleave so rows come out in grid
    // order with the operators cycling within each beta.
    let beta_flag = if args.beta_grid.is_some() { "--beta-grid" } else { "--beta" };
    let mut per_operator = Vec::new();
    for kind in &operators {
        let results = chsh_boost_sweep(*kind, &grid, &direction, args.mass, restriction, &config)
            .map_err(|error| match error {
                Error::BetaOutOfRange(_) => format!("{beta_flag}: {error}"),
                Error::InvalidMass(_) => format!("--mass: {error}"),
                other => other.to_string(),
            })?;
        per_operator.push(results);
    }
    let mut rows = Vec::with_capacity(grid.len() * operators.len());
    for (row_index, &beta) in grid.iter().enumerate() {
        for results in &per_operator {
            let result = &results[row_index];
            rows.push(ScanRow {
                beta,
                operator: result.kind.as_str(),
                restriction: result.restriction.as_str(),
                chsh_max: result.value,
                converged: result.converged,
                iterations: result.iterations,
            });
        }
    }

    let rendered = match args.format {
        Format::Csv => scan_csv(&rows),
        Format::Json => to_json(&rows)?,
    };
    write_output(args.out.as_deref(), &rendered)?;
    Ok(0)
}

pub fn run_compare(args: &CompareArgs) -> Result<i32, String> {
    let grid = resolve_grid(&args.beta_grid, &args.beta)?;
    let a = parse_setting(&args.a, args.plane, "--a")?;
    let b = parse_setting(&args.b, args.plane, "--b")?;

    let beta_flag = if args.beta_grid.is_some() { "--beta-grid" } else { "--beta" };
    let mut rows = Vec::with_capacity(grid.len());
    for &beta in &grid {
        let boost = boost_from_flags(beta, beta_flag, &args.boost_dir, args.mass)?;
        let e_pl = correlator(&a, &b, &boost);
        let e_cz = czachor_correlator(&a, &b, &boost.velocity())
            .expect("boost speed below 1 by construction");
        rows.push(CompareRow {
            beta,
            e_pauli_lubanski: e_pl,
            e_czachor: e_cz,
            delta: e_cz - e_pl,
        });
    }

    let rendered = match args.format {
        Format::Csv => compare_csv(&rows),
        Format::Json => to_json(&rows)?,
    };
    write_output(args.out.as_deref(), &rendered)?;
    Ok(0)
}
