//! Acceptance suite: one test per release criterion, each asserting the
//! stated tolerance and printing a `[criterion N] PASS` line with the
//! measured worst case (visible under `--nocapture`).

// Indexed loops over 0..4 mirror spacetime-component notation.
#![allow(clippy::needless_range_loop)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::process::Command;
use std::time::{Duration, Instant};

use relbell::bell::{
    chsh_boost_sweep, chsh_maximize, chsh_value, correlator, MeasurementSettings, OperatorKind,
    OptimizerConfig, PlaneRestriction,
};
use relbell::dirac::{gamma, gamma5, pauli_lubanski_spin, slash};
use relbell::matrix::{anticommutator, vec_max_abs_diff, CMatrix4};
use relbell::minkowski::{
    boost_four_vector, four_momentum, minkowski_dot, polarization_vector, BoostParams,
    FourVector, ThreeVector, UnitVector,
};
use relbell::observables::{
    czachor_correlator, czachor_expectation_direct, expectation_closed_form,
    matrix_element_closed_form, sigma_sandwich_identity, spin_observable,
};
use relbell::spinors::{boosted_spinor, SpinLabel};

const TSIRELSON: f64 = 2.828_427_124_746_190_3; // 2*sqrt(2)
const INPLANE_GRID_MAX_09: f64 = 2.828_421_345_198_081;
const BETA_GRID: [f64; 6] = [0.0, 0.3, 0.6, 0.9, 0.99, 0.999];

fn random_unit(rng: &mut ChaCha8Rng) -> UnitVector {
    let z: f64 = rng.gen_range(-1.0..=1.0);
    let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let r = (1.0 - z * z).sqrt();
    UnitVector::from_components(r * phi.cos(), r * phi.sin(), z)
        .expect("sphere sample is a unit vector")
}

fn random_boost(rng: &mut ChaCha8Rng, beta_max: f64) -> BoostParams {
    let beta = rng.gen_range(0.0..=beta_max);
    let mass = rng.gen_range(0.5..2.0);
    BoostParams::new(beta, random_unit(rng), mass).expect("parameters are in range")
}

#[test]
fn criterion_01_gamma_algebra() {
    let start = Instant::now();
    let metric = [1.0, -1.0, -1.0, -1.0];
    let mut worst = 0f64;
    // All ten unordered index pairs of the anticommutation relations.
    for mu in 0..4 {
        for nu in mu..4 {
            let lhs = anticommutator(&gamma(mu).unwrap(), &gamma(nu).unwrap());
            let expected = if mu == nu {
                CMatrix4::identity().scale_re(2.0 * metric[mu])
            } else {
                CMatrix4::zero()
            };
            worst = worst.max(lhs.max_abs_diff(&expected));
        }
    }
    // The chirality matrix anticommutes with each of the four gammas.
    for mu in 0..4 {
        let lhs = anticommutator(&gamma5(), &gamma(mu).unwrap());
        worst = worst.max(lhs.max_abs());
    }
    let elapsed = start.elapsed();
    assert!(worst < 1e-14, "worst residual {worst:e}");
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!(
        "[criterion 1] PASS gamma anticommutation: residual {worst:.3e} < 1e-14 in {:?}",
        elapsed
    );
}

#[test]
fn criterion_02_spinor_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(201);
    let mut worst_norm = 0f64;
    let mut worst_orth = 0f64;
    let mut worst_dirac = 0f64;
    for &beta in &BETA_GRID {
        for _ in 0..20 {
            let direction = random_unit(&mut rng);
            let mass = rng.gen_range(0.5..2.0);
            let boost = BoostParams::new(beta, direction, mass).unwrap();
            let up = boosted_spinor(&boost, SpinLabel::Up);
            let down = boosted_spinor(&boost, SpinLabel::Down);
            worst_norm = worst_norm
                .max((up.norm_sq() - 1.0).abs())
                .max((down.norm_sq() - 1.0).abs());
            worst_orth = worst_orth.max(up.dagger_dot(&down).norm());
            let p = four_momentum(&boost);
            let slashed = slash(&p);
            for u in [&up, &down] {
                let lhs = slashed.mul_vec(u.components());
                let rhs: Vec<_> = u.components().iter().map(|c| c * mass).collect();
                worst_dirac =
                    worst_dirac.max(vec_max_abs_diff(&lhs, &rhs) / mass);
            }
        }
    }
    assert!(worst_norm < 1e-12, "norm residual {worst_norm:e}");
    assert!(worst_orth < 1e-12, "orthogonality residual {worst_orth:e}");
    assert!(worst_dirac < 1e-10, "plane-wave residual {worst_dirac:e}");
    println!(
        "[criterion 2] PASS spinors over {} boosts: norm {worst_norm:.3e}, \
         orthogonality {worst_orth:.3e}, plane-wave {worst_dirac:.3e}",
        BETA_GRID.len() * 20
    );
}

#[test]
fn criterion_03_polarization_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    let mut worst_constraint = 0f64;
    let mut worst_match = 0f64;
    for _ in 0..200 {
        let n = random_unit(&mut rng);
        let boost = random_boost(&mut rng, 0.999);
        let s = polarization_vector(&n, &boost);
        let p = four_momentum(&boost);
        worst_constraint = worst_constraint
            .max((minkowski_dot(&s, &s) + 1.0).abs())
            .max(minkowski_dot(&s, &p).abs());
        let boosted = boost_four_vector(&FourVector::from_spatial(0.0, n.vector()), &boost);
        let diff = (0..4)
            .map(|mu| (boosted.component(mu) - s.component(mu)).abs())
            .fold(0f64, f64::max);
        worst_match = worst_match.max(diff);
    }
    assert!(worst_constraint < 1e-9, "constraint residual {worst_constraint:e}");
    assert!(worst_match < 1e-10, "boost-route residual {worst_match:e}");
    println!(
        "[criterion 3] PASS polarization over 200 draws: constraints {worst_constraint:.3e}, \
         boost route {worst_match:.3e}"
    );
}

#[test]
fn criterion_04_pauli_lubanski_contraction() {
    let mut rng = ChaCha8Rng::seed_from_u64(203);
    let mut worst = 0f64;
    for case in 0..100 {
        // Pin a few cases at the top boost speed; draw the rest.
        let beta = if case < 5 { 0.999 } else { rng.gen_range(0.0..=0.999) };
        let boost = BoostParams::new(beta, random_unit(&mut rng), rng.gen_range(0.5..2.0))
            .unwrap();
        let n = random_unit(&mut rng);
        let p = four_momentum(&boost);
        let s = polarization_vector(&n, &boost);
        let contracted = pauli_lubanski_spin(&p, &s, boost.mass());
        let chiral = gamma5() * slash(&s);
        for spin in SpinLabel::BOTH {
            let u = boosted_spinor(&boost, spin);
            let lhs = contracted.mul_vec(u.components());
            let rhs = chiral.mul_vec(u.components());
            worst = worst.max(vec_max_abs_diff(&lhs, &rhs));
        }
    }
    assert!(worst < 1e-10, "residual {worst:e}");
    println!(
        "[criterion 4] PASS spin-vector contraction matches chiral projection on 100 \
         configurations: residual {worst:.3e}"
    );
}

#[test]
fn criterion_05_closed_form_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(204);

    let mut worst_expectation = 0f64;
    for _ in 0..100 {
        let n = random_unit(&mut rng);
        let boost = random_boost(&mut rng, 0.999);
        let observable = spin_observable(&n, &boost);
        for spin in SpinLabel::BOTH {
            let diff =
                (observable.expectation(spin) - expectation_closed_form(&n, &boost, spin)).abs();
            worst_expectation = worst_expectation.max(diff);
        }
    }
    assert!(worst_expectation < 1e-12, "expectation residual {worst_expectation:e}");

    let mut worst_element = 0f64;
    for _ in 0..50 {
        let n = random_unit(&mut rng);
        let boost = BoostParams::new(
            rng.gen_range(0.0..=0.999),
            UnitVector::PLUS_Z,
            rng.gen_range(0.5..2.0),
        )
        .unwrap();
        let observable = spin_observable(&n, &boost);
        for row in SpinLabel::BOTH {
            for col in SpinLabel::BOTH {
                let direct = observable.matrix_element(row, col);
                let closed = matrix_element_closed_form(row, col, &n, &boost).unwrap();
                worst_element = worst_element.max((direct - closed).norm());
            }
        }
    }
    assert!(worst_element < 1e-12, "matrix-element residual {worst_element:e}");

    let mut worst_sandwich = 0f64;
    for _ in 0..50 {
        let n = random_unit(&mut rng);
        let boost = BoostParams::new(
            rng.gen_range(0.0..=0.999),
            UnitVector::PLUS_Z,
            rng.gen_range(0.5..2.0),
        )
        .unwrap();
        let p = four_momentum(&boost).spatial();
        let s = polarization_vector(&n, &boost).spatial();
        let (lhs, rhs) = sigma_sandwich_identity(&p, &s);
        worst_sandwich = worst_sandwich.max(lhs.max_abs_diff(&rhs));
    }
    assert!(worst_sandwich < 1e-12, "sandwich residual {worst_sandwich:e}");

    println!(
        "[criterion 5] PASS closed forms: expectation {worst_expectation:.3e} (100 cases), \
         matrix elements {worst_element:.3e} (50), sigma sandwich {worst_sandwich:.3e} (50)"
    );
}

#[test]
fn criterion_06_correlator_boost_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(205);
    // Ten boosts: two pinned at the top speed off every coordinate axis,
    // the rest drawn over speeds and directions.
    let mut boosts = vec![
        BoostParams::new(
            0.999,
            UnitVector::from_components(1.0, 1.0, 1.0).unwrap(),
            1.0,
        )
        .unwrap(),
        BoostParams::new(
            0.999,
            UnitVector::from_components(-0.3, 0.7, 0.2).unwrap(),
            1.5,
        )
        .unwrap(),
    ];
    while boosts.len() < 10 {
        boosts.push(random_boost(&mut rng, 0.99));
    }
    let mut worst = 0f64;
    for _ in 0..100 {
        let a = random_unit(&mut rng);
        let b = random_unit(&mut rng);
        let product = a.vector().dot(&b.vector());
        for boost in &boosts {
            worst = worst.max((correlator(&a, &b, boost) + product).abs());
        }
    }
    assert!(worst < 1e-9, "residual {worst:e}");
    println!(
        "[criterion 6] PASS singlet correlator equals -a.b across 100 settings x 10 boosts: \
         residual {worst:.3e}"
    );
}

#[test]
fn criterion_07_chsh_maximum_speed_independent() {
    let config = OptimizerConfig::default();
    let mut worst = 0f64;
    for beta in [0.0, 0.5, 0.9, 0.99] {
        let boost = BoostParams::new(beta, UnitVector::PLUS_Z, 1.0).unwrap();
        let result = chsh_maximize(&boost, OperatorKind::PauliLubanski, &config);
        let gap = (result.value - TSIRELSON).abs();
        assert!(gap < 1e-6, "beta {beta}: value {} gap {gap:e}", result.value);
        assert!(result.converged, "beta {beta}: optimizer did not converge");
        worst = worst.max(gap);
    }
    println!(
        "[criterion 7] PASS covariant CHSH maximum is 2*sqrt(2) at all four speeds: \
         worst gap {worst:.3e}"
    );
}

/// Brute-force CHSH maximum for the velocity-dependent observable with all
/// four settings on a one-degree grid in the x-z plane, boost along +z.
fn czachor_inplane_grid_max(beta: f64) -> f64 {
    let u = ThreeVector::new(0.0, 0.0, beta);
    let directions: Vec<UnitVector> = (0..360)
        .map(|deg| UnitVector::in_xz_plane(f64::from(deg).to_radians()))
        .collect();
    let mut table = vec![[0f64; 360]; 360];
    for (ia, a) in directions.iter().enumerate() {
        for (ib, b) in directions.iter().enumerate() {
            table[ia][ib] = czachor_correlator(a, b, &u).expect("speed below 1");
        }
    }
    // max over settings of E(a,b) + E(a,b') + E(a',b) - E(a',b') splits into
    // independent maxima over a and a' once (b, b') are fixed.
    let mut best = f64::NEG_INFINITY;
    for ib in 0..360 {
        for ibp in 0..360 {
            let mut best_sum = f64::NEG_INFINITY;
            let mut best_diff = f64::NEG_INFINITY;
            for row in &table {
                best_sum = best_sum.max(row[ib] + row[ibp]);
                best_diff = best_diff.max(row[ib] - row[ibp]);
            }
            best = best.max(best_sum + best_diff);
        }
    }
    best
}

#[test]
fn criterion_08_velocity_dependent_contrast() {
    let mut rng = ChaCha8Rng::seed_from_u64(206);
    let mut worst_route = 0f64;
    for _ in 0..100 {
        let a = random_unit(&mut rng);
        let b = random_unit(&mut rng);
        let u = random_unit(&mut rng)
            .vector()
            .scaled(rng.gen_range(0.0..=0.999));
        let closed = czachor_correlator(&a, &b, &u).unwrap();
        let direct = czachor_expectation_direct(&a, &b, &u).unwrap();
        worst_route = worst_route.max((closed - direct).abs());
    }
    assert!(worst_route < 1e-12, "route residual {worst_route:e}");

    let config = OptimizerConfig::default();
    let direction = UnitVector::PLUS_Z;
    let at_rest = chsh_boost_sweep(
        OperatorKind::Czachor,
        &[0.0],
        &direction,
        1.0,
        PlaneRestriction::BoostPlane,
        &config,
    )
    .unwrap();
    let rest_gap = (at_rest[0].value - TSIRELSON).abs();
    assert!(rest_gap < 1e-6, "rest-frame gap {rest_gap:e}");

    let grid_max = czachor_inplane_grid_max(0.9);
    assert!(
        (grid_max - INPLANE_GRID_MAX_09).abs() < 1e-9,
        "grid max {grid_max} disagrees with pinned fixture"
    );
    assert!(grid_max < TSIRELSON, "grid max {grid_max} not below 2*sqrt(2)");

    let boosted = chsh_boost_sweep(
        OperatorKind::Czachor,
        &[0.9],
        &direction,
        1.0,
        PlaneRestriction::BoostPlane,
        &config,
    )
    .unwrap();
    let optimized = boosted[0].value;
    assert!(
        (optimized - INPLANE_GRID_MAX_09).abs() < 1e-4,
        "optimized {optimized} too far from grid fixture"
    );
    assert!(optimized >= INPLANE_GRID_MAX_09 - 1e-9, "optimized {optimized} below grid");
    assert!(optimized <= TSIRELSON + 1e-9, "optimized {optimized} above 2*sqrt(2)");

    println!(
        "[criterion 8] PASS velocity-dependent observable: dual-route {worst_route:.3e}, \
         rest-frame max gap {rest_gap:.3e}, one-degree grid at beta 0.9 = {grid_max:.15} \
         (pinned, below 2*sqrt(2) by {:.3e}), optimizer {optimized:.15}",
        TSIRELSON - grid_max
    );
}

#[test]
fn criterion_09_tsirelson_bound_holds() {
    let mut rng = ChaCha8Rng::seed_from_u64(207);
    let mut worst_excess = 0f64;
    let mut top = 0f64;
    for _ in 0..10_000 {
        let settings = MeasurementSettings::new(
            random_unit(&mut rng),
            random_unit(&mut rng),
            random_unit(&mut rng),
            random_unit(&mut rng),
        );
        let boost = random_boost(&mut rng, 0.999);
        let value = chsh_value(&settings, &boost, OperatorKind::PauliLubanski);
        top = top.max(value);
        worst_excess = worst_excess.max(value - TSIRELSON);
    }
    assert!(worst_excess < 1e-9, "excess {worst_excess:e}");
    println!(
        "[criterion 9] PASS Tsirelson bound over 10000 random draws: largest CHSH {top:.6}, \
         excess above 2*sqrt(2) {worst_excess:.3e}"
    );
}

#[test]
fn criterion_10_end_to_end_scan_deterministic() {
    let args = ["chsh-scan", "--beta-grid", "0:0.99:0.11"];
    let mut outputs = Vec::new();
    let mut slowest = Duration::ZERO;
    for _ in 0..2 {
        let start = Instant::now();
        let output = Command::new(env!("CARGO_BIN_EXE_relbell"))
            .args(args)
            .output()
            .expect("binary should spawn");
        let elapsed = start.elapsed();
        slowest = slowest.max(elapsed);
        assert_eq!(output.status.code(), Some(0));
        assert!(elapsed < Duration::from_secs(30), "run took {elapsed:?}");
        outputs.push(output.stdout);
    }
    assert_eq!(outputs[0], outputs[1], "scan output is not reproducible");
    let text = String::from_utf8(outputs[0].clone()).unwrap();
    // Header plus ten grid points times two operators.
    assert_eq!(text.lines().count(), 21);
    println!(
        "[criterion 10] PASS end-to-end scan: 2 runs byte-identical, slowest {:?}",
        slowest
    );
}
