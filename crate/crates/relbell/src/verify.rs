//! Self-contained verification suite: every library-level invariant, run
//! with fixed seeds and reported as one record per invariant group.
//!
//! The CLI front end prints these records and turns them into an exit code;
//! keeping the logic here makes the suite available to integration tests
//! without going through a subprocess.

use crate::bell::{
    bell_state, chsh_maximize, chsh_value, correlator_complex, MeasurementSettings,
    OperatorKind, OptimizerConfig,
};
use crate::dirac::{gamma, gamma5, pauli_lubanski_spin, slash};
use crate::matrix::{anticommutator, c64, vec_max_abs_diff, CMatrix4};
use crate::minkowski::{
    boost_four_vector, four_momentum, minkowski_dot, polarization_vector, BoostParams,
    FourVector, ThreeVector, UnitVector,
};
use crate::observables::{
    czachor_correlator, czachor_expectation_direct, czachor_observable, effective_two_by_two,
    expectation_closed_form, matrix_element_closed_form, sigma_sandwich_identity,
    spin_observable,
};
use crate::spinors::{positive_energy_basis, SpinLabel};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TSIRELSON: f64 = 2.0 * std::f64::consts::SQRT_2;
const BETA_GRID: [f64; 6] = [0.0, 0.3, 0.6, 0.9, 0.99, 0.999];

/// Result of one invariant group.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: &'static str,
    /// Largest deviation observed across all cases in the group.
    pub worst_residual: f64,
    /// Bound the residual must stay below.
    pub tolerance: f64,
    pub cases: usize,
    pub passed: bool,
}

impl CheckReport {
    fn new(name: &'static str, worst_residual: f64, tolerance: f64, cases: usize) -> Self {
        let passed = worst_residual < tolerance && worst_residual.is_finite();
        Self {
            name,
            worst_residual,
            tolerance,
            cases,
            passed,
        }
    }
}

/// Deliberate defect for exercising the failure path end to end.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaultInjection {
    None,
    /// Flip one sign in the gamma-matrix set the algebra group checks.
    GammaSign,
}

/// Runs every invariant group and returns their reports in a fixed order.
pub fn run_all(fault: FaultInjection) -> Vec<CheckReport> {
    vec![
        gamma_algebra(fault),
        spinor_orthonormality(),
        dirac_equation(),
        polarization_constraints(),
        polarization_boost_consistency(),
        spin_vector_contraction(),
        expectation_closed_form_agreement(),
        matrix_element_closed_form_agreement(),
        sigma_sandwich_reduction(),
        effective_operator_is_sigma_n(),
        bell_state_antisymmetry(),
        correlator_invariance(),
        correlator_hermiticity(),
        czachor_closed_form_agreement(),
        czachor_spectrum_bound(),
        canonical_chsh_maximum(),
        chsh_local_bound_violation(),
        tsirelson_bound(),
        chsh_maximize_floor(),
    ]
}

fn random_unit(rng: &mut ChaCha8Rng) -> UnitVector {
    loop {
        let v = ThreeVector::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        if (0.01..=1.0).contains(&v.norm_sq()) {
            return UnitVector::new(v).unwrap();
        }
    }
}

fn random_boost(rng: &mut ChaCha8Rng) -> BoostParams {
    BoostParams::new(
        rng.gen_range(0.0..0.995),
        random_unit(rng),
        rng.gen_range(0.2..5.0),
    )
    .unwrap()
}

/// All pairwise gamma anticommutators against the metric, plus the chirality
/// matrix anticommuting with each gamma.
fn gamma_algebra(fault: FaultInjection) -> CheckReport {
    let mut gammas: [CMatrix4; 4] = [
        gamma(0).unwrap(),
        gamma(1).unwrap(),
        gamma(2).unwrap(),
        gamma(3).unwrap(),
    ];
    if fault == FaultInjection::GammaSign {
        let flipped = -gammas[1][(0, 3)];
        gammas[1][(0, 3)] = flipped;
    }
    let metric = [1.0, -1.0, -1.0, -1.0];
    let mut worst: f64 = 0.0;
    let mut cases = 0;
    for mu in 0..4 {
        for nu in mu..4 {
            let expected = if mu == nu {
                CMatrix4::identity().scale_re(2.0 * metric[mu])
            } else {
                CMatrix4::zero()
            };
            worst = worst.max(anticommutator(&gammas[mu], &gammas[nu]).max_abs_diff(&expected));
            cases += 1;
        }
    }
    let g5 = gamma5();
    for g in &gammas {
        worst = worst.max(anticommutator(&g5, g).max_abs());
        cases += 1;
    }
    CheckReport::new("gamma_algebra", worst, 1e-14, cases)
}

fn spinor_orthonormality() -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut worst: f64 = 0.0;
    let mut cases = 0;
    for &beta in &BETA_GRID {
        for _ in 0..20 {
            let boost = BoostParams::new(beta, random_unit(&mut rng), 1.0).unwrap();
            let [up, down] = positive_energy_basis(&boost);
            worst = worst.max((up.dagger_dot(&up).re - 1.0).abs());
            worst = worst.max((down.dagger_dot(&down).re - 1.0).abs());
            worst = worst.max(up.dagger_dot(&down).norm());
            cases += 1;
        }
    }
    CheckReport::new("spinor_orthonormality", worst, 1e-12, cases)
}

fn dirac_equation() -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let mut worst: f64 = 0.0;
    let mut cases = 0;
    for &beta in &BETA_GRID {
        for _ in 0..20 {
            let mass = rng.gen_range(0.2..5.0);
            let boost = BoostParams::new(beta, random_unit(&mut rng), mass).unwrap();
            let slashed = slash(&four_momentum(&boost));
            for u in positive_energy_basis(&boost) {
                let lhs = slashed.mul_vec(u.components());
                let rhs = u.components().map(|component| component * c64(mass, 0.0));
                worst = worst.max(vec_max_abs_diff(&lhs, &rhs) / boost.energy());
            }
            cases += 1;
        }
    }
    CheckReport::new("dirac_equation", worst, 1e-10, cases)
}

fn polarization_constraints() -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let boost = random_boost(&mut rng);
        let n = random_unit(&mut rng);
        let s = polarization_vector(&n, &boost);
        let p = four_momentum(&boost);
        worst = worst.max((minkowski_dot(&s, &s) + 1.0).abs());
        worst = worst.max(minkowski_dot(&s, &p).abs() / boost.energy());
    }
    CheckReport::new("polarization_constraints", worst, 1e-9, 200)
}

/// The polarization four-vector must be the boost of the rest-frame (0, n).
fn polarization_boost_consistency() -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let boost = random_boost(&mut rng);
        let n = random_unit(&mut rng);
        let direct = polarization_vector(&n, &boost);
        let boosted = boost_four_vector(&FourVector::from_spatial(0.0, n.vector()), &boost);
        for mu in 0..4 {
            worst = worst.max((direct.component(mu) - boosted.component(mu)).abs());
        }
    }
    CheckReport::new("polarization_boost_consistency", worst, 1e-10, 200)
}

/// The spin observable built from the Pauli-Lubanski contraction agrees
/// with the chirality-times-slash form on positive-energy spinors.
fn spin_vector_contraction() -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let boost = random_boost(&mut rng);
        let n = random_unit(&mut rng);
        let p = four_momentum(&boost);
        let s = polarization_vector(&n, &boost);
        let contraction = pauli_lubanski_spin(&p, &s, boost.mass());
        let chirality_form = gamma5() * slash(&s);
        let scale = boost.gamma() * boost.gamma();
        for u in positive_energy_basis(&boost) {
            let lhs = contraction.mul_vec(u.components());
            let rhs = chirality_form.mul_vec(u.components());
            worst = worst.max(vec_max_abs_diff(&lhs, &rhs) / scale.max(1.0));
        }
    }
    CheckReport::new("spin_vector_contraction", worst, 1e-10, 100)
}

fn expectation_closed_form_agreement() -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let boost = random_boost(&mut rng);
        let n = random_unit(&mut rng);
        let spin = if rng.gen::<bool>() { SpinLabel::Up } else { SpinLabel::Down };
        let closed = expectation_closed_form(&n, &boost, spin);
        let direct = spin_observable(&n, &boost).expectation(spin);
        worst = worst.max((closed - direct).abs());
    }
    CheckReport::new("expectation_closed_form", worst, 1e-12, 100)
}

fn matrix_element_closed_form_agreement() -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let boost = BoostParams::new(
            rng.gen_range(0.0..0.99),
            UnitVector::PLUS_Z,
            rng.gen_range(0.5..3.0),
        )
        .unwrap();
        let n = random_unit(&mut rng);
        let observable = spin_observable(&n, &boost);
        for row in SpinLabel::BOTH {
            for col in SpinLabel::BOTH {
                let closed = matrix_element_closed_form(row, col, &n, &boost).unwrap();
                worst = worst.max((closed - observable.matrix_element(row, col)).norm());
            }
        }
    }
    CheckReport::new("matrix_element_closed_form", worst, 1e-12, 50)
}

fn sigma_sandwich_reduction() -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let p = ThreeVector::EZ.scaled(rng.gen_range(0.1..5.0));
        let s = ThreeVector::new(
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        );
        let (lhs, rhs) = sigma_sandwich_identity(&p, &s);
        worst = worst.max(lhs.max_abs_diff(&rhs) / p.norm_sq().max(1.0));
    }
    CheckReport::new("sigma_sandwich_reduction", worst, 1e-12, 50)
}

fn effective_operator_is_sigma_n() -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(109);
    let mut worst: f64 = 0.0;
    for i in 0..200 {
        let n = random_unit(&mut rng);
        let boost = if i % 10 == 0 {
            BoostParams::new(0.999, random_unit(&mut rng), 1.0).unwrap()
        } else {
            random_boost(&mut rng)
        };
        let effective = effective_two_by_two(&n, &boost);
        worst = worst.max(effective.max_abs_diff(&crate::dirac::pauli_dot(&n.vector())));
    }
    CheckReport::new("effective_operator_sigma_n", worst, 1e-10, 200)
}

fn bell_state_antisymmetry() -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(110);
    let mut worst: f64 = 0.0;
    let mut cases = 0;
    for &beta in &BETA_GRID {
        for _ in 0..10 {
            let boost = BoostParams::new(beta, random_unit(&mut rng), 1.0).unwrap();
            let state = bell_state(&boost);
            worst = worst.max((state.norm() - 1.0).abs());
            let swapped = state.swapped();
            for (original, exchanged) in state.amplitudes().iter().zip(swapped.amplitudes()) {
                worst = worst.max((original + exchanged).norm());
            }
            cases += 1;
        }
    }
    CheckReport::new("bell_state_antisymmetry", worst, 1e-12, cases)
}

fn correlator_invariance() -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(111);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let a = random_unit(&mut rng);
        let b = random_unit(&mut rng);
        for i in 0..10 {
            let beta = if i == 9 { 0.999 } else { 0.105 * i as f64 };
            let boost = BoostParams::new(beta, random_unit(&mut rng), 1.0).unwrap();
            let value = correlator_complex(&a, &b, &boost).re;
            worst = worst.max((value + a.vector().dot(&b.vector())).abs());
        }
    }
    CheckReport::new("correlator_invariance", worst, 1e-9, 1000)
}

fn correlator_hermiticity() -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(112);
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let a = random_unit(&mut rng);
        let b = random_unit(&mut rng);
        let boost = random_boost(&mut rng);
        worst = worst.max(correlator_complex(&a, &b, &boost).im.abs());
    }
    CheckReport::new("correlator_hermiticity", worst, 1e-10, 200)
}

fn czachor_closed_form_agreement() -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(113);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let a = random_unit(&mut rng);
        let b = random_unit(&mut rng);
        let u = random_unit(&mut rng).vector().scaled(rng.gen_range(0.0..0.999));
        let closed = czachor_correlator(&a, &b, &u).unwrap();
        let direct = czachor_expectation_direct(&a, &b, &u).unwrap();
        worst = worst.max((closed - direct).abs());
    }
    CheckReport::new("czachor_closed_form", worst, 1e-12, 100)
}

fn czachor_spectrum_bound() -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(114);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let a = random_unit(&mut rng);
        let u = random_unit(&mut rng).vector().scaled(rng.gen_range(0.0..0.999));
        let observable = czachor_observable(&a, &u).unwrap();
        worst = worst.max((observable.eigenvalue_magnitude() - 1.0).max(0.0));
        worst = worst.max(observable.matrix().max_abs_diff(&observable.matrix().adjoint()));
        worst = worst.max(observable.matrix().trace().norm());
    }
    CheckReport::new("czachor_spectrum_bound", worst, 1e-12, 100)
}

/// Canonical settings must reach the quantum maximum under the covariant
/// observable at every speed in the reference grid.
fn canonical_chsh_maximum() -> CheckReport {
    let settings = MeasurementSettings::canonical();
    let mut worst: f64 = 0.0;
    for &beta in &BETA_GRID {
        let boost = BoostParams::new(beta, UnitVector::PLUS_Z, 1.0).unwrap();
        let value = chsh_value(&settings, &boost, OperatorKind::PauliLubanski);
        worst = worst.max((value - TSIRELSON).abs());
    }
    CheckReport::new("canonical_chsh_maximum", worst, 1e-9, BETA_GRID.len())
}

/// Both observable families must violate the classical CHSH bound of 2 at
/// rest; residual is the shortfall below the bound (zero when violated).
fn chsh_local_bound_violation() -> CheckReport {
    let settings = MeasurementSettings::canonical();
    let rest = BoostParams::rest(1.0).unwrap();
    let mut worst: f64 = 0.0;
    for kind in OperatorKind::BOTH {
        let value = chsh_value(&settings, &rest, kind);
        worst = worst.max((2.0 - value).max(0.0));
    }
    CheckReport::new("chsh_local_bound_violation", worst, 1e-12, 2)
}

fn tsirelson_bound() -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(115);
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let settings = MeasurementSettings::new(
            random_unit(&mut rng),
            random_unit(&mut rng),
            random_unit(&mut rng),
            random_unit(&mut rng),
        );
        let boost = BoostParams::new(rng.gen_range(0.0..0.999), random_unit(&mut rng), 1.0).unwrap();
        let value = chsh_value(&settings, &boost, OperatorKind::PauliLubanski);
        worst = worst.max((value - TSIRELSON).max(0.0));
    }
    CheckReport::new("tsirelson_bound", worst, 1e-9, 10_000)
}

/// The optimizer must do at least as well as the canonical settings.
fn chsh_maximize_floor() -> CheckReport {
    let boost = BoostParams::new(0.9, UnitVector::PLUS_Z, 1.0).unwrap();
    let result = chsh_maximize(&boost, OperatorKind::PauliLubanski, &OptimizerConfig::default());
    let shortfall = (TSIRELSON - 1e-6 - result.value).max(0.0);
    let overshoot = (result.value - TSIRELSON - 1e-9).max(0.0);
    CheckReport::new("chsh_maximize_floor", shortfall.max(overshoot), 1e-9, 1)
}
