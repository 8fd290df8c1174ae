//! Spin observables for moving Dirac particles.
//!
//! Two competing constructions are implemented:
//!
//! * `spin_observable` — the boost-covariant projection built from the
//!   Pauli-Lubanski vector. Its restriction to the positive-energy subspace
//!   of a given momentum is exactly `sigma.n` in the rest-spin basis, for
//!   every boost; this is what makes the two-particle correlations below
//!   frame independent.
//! * `czachor_observable` — a normalized velocity-dependent spin projection
//!   acting on ordinary two-component spin states. Its correlations pick up
//!   explicit dependence on the particles' speed.

use crate::dirac::{big_sigma_dot, gamma5, pauli_dot, slash};
use crate::error::{Error, Result};
use crate::matrix::{c64, dot_conj, kron2, C64, CMatrix2, CMatrix4};
use crate::minkowski::{polarization_vector, four_momentum, BoostParams, ThreeVector, UnitVector};
use crate::spinors::{positive_energy_basis, SpinLabel};

const DIRECTION_TOL: f64 = 1e-12;

/// Covariant spin projection along a lab direction `n` for a particle with
/// the given boost, represented on four-component spinors.
#[derive(Clone, Copy, Debug)]
pub struct SpinObservable {
    direction: UnitVector,
    boost: BoostParams,
    matrix: CMatrix4,
}

impl SpinObservable {
    pub fn direction(&self) -> UnitVector {
        self.direction
    }

    pub fn boost(&self) -> BoostParams {
        self.boost
    }

    pub fn matrix(&self) -> &CMatrix4 {
        &self.matrix
    }

    /// Numeric matrix element u(p, row)† O u(p, col).
    pub fn matrix_element(&self, row: SpinLabel, col: SpinLabel) -> C64 {
        let [up, down] = positive_energy_basis(&self.boost);
        let pick = |label: SpinLabel| match label {
            SpinLabel::Up => up,
            SpinLabel::Down => down,
        };
        let acted = self.matrix.mul_vec(pick(col).components());
        dot_conj(pick(row).components(), &acted)
    }

    /// Numeric expectation value in the normalized state u(p, spin).
    pub fn expectation(&self, spin: SpinLabel) -> f64 {
        self.matrix_element(spin, spin).re
    }
}

/// Builds the covariant spin observable for direction `n` and the given
/// boost. The matrix is gamma5 * slash(s) * slash(p) / m with `s` the
/// polarization four-vector of `n`; on the positive-energy subspace (where
/// slash(p)/m acts as the identity) this is the usual gamma5 * slash(s)
/// projection, and at beta = 0 the matrix reduces exactly to `Sigma.n`.
pub fn spin_observable(n: &UnitVector, boost: &BoostParams) -> SpinObservable {
    let s = polarization_vector(n, boost);
    let p = four_momentum(boost);
    let matrix = (gamma5() * slash(&s) * slash(&p)).scale_re(1.0 / boost.mass());
    SpinObservable {
        direction: *n,
        boost: *boost,
        matrix,
    }
}

/// Rest-frame spin projection `Sigma.n` (block-diagonal sigma.n), the
/// zero-velocity limit of `spin_observable`.
pub fn rest_spin_operator(n: &UnitVector) -> CMatrix4 {
    big_sigma_dot(&n.vector())
}

/// Expectation of the covariant spin observable in u(p, spin), evaluated
/// through the two-component reduction
/// ((E+m)/2E) [phi†(sigma.s)phi − phi†(sigma.p)(sigma.s)(sigma.p)phi/(E+m)²]
/// with `s` the spatial part of the polarization four-vector.
pub fn expectation_closed_form(n: &UnitVector, boost: &BoostParams, spin: SpinLabel) -> f64 {
    let s = polarization_vector(n, boost).spatial();
    let p = boost.momentum();
    let energy = boost.energy();
    let m = boost.mass();
    let phi = spin.two_component();

    let sigma_s = pauli_dot(&s);
    let sandwich = pauli_dot(&p) * sigma_s * pauli_dot(&p);

    let direct = dot_conj(&phi, &sigma_s.mul_vec(&phi)).re;
    let corrected = dot_conj(&phi, &sandwich.mul_vec(&phi)).re / ((energy + m) * (energy + m));
    (energy + m) / (2.0 * energy) * (direct - corrected)
}

/// Closed-form matrix elements u(p, row)† O u(p, col) for a boost along +z:
/// (+,+) -> s_z/gamma, (−,−) -> −s_z/gamma, (+,−) -> s_x − i s_y,
/// (−,+) -> s_x + i s_y, with `s` the polarization spatial part. Boosts in
/// any other direction are rejected; use the numeric path for those.
pub fn matrix_element_closed_form(
    row: SpinLabel,
    col: SpinLabel,
    n: &UnitVector,
    boost: &BoostParams,
) -> Result<C64> {
    let d = boost.direction();
    let along_z = (d.x().abs() < DIRECTION_TOL)
        && (d.y().abs() < DIRECTION_TOL)
        && ((d.z() - 1.0).abs() < DIRECTION_TOL);
    if boost.beta() > 0.0 && !along_z {
        return Err(Error::RequiresZBoost(d.x(), d.y(), d.z()));
    }
    let s = polarization_vector(n, boost).spatial();
    let inv_gamma = 1.0 / boost.gamma();
    Ok(match (row, col) {
        (SpinLabel::Up, SpinLabel::Up) => c64(inv_gamma * s.z, 0.0),
        (SpinLabel::Down, SpinLabel::Down) => c64(-inv_gamma * s.z, 0.0),
        (SpinLabel::Up, SpinLabel::Down) => c64(s.x, -s.y),
        (SpinLabel::Down, SpinLabel::Up) => c64(s.x, s.y),
    })
}

/// Restriction of the covariant spin observable to the positive-energy
/// subspace of the boost's momentum, in the (+1/2, −1/2) rest-spin basis.
/// Equals `sigma.n` for every boost speed and direction.
pub fn effective_two_by_two(n: &UnitVector, boost: &BoostParams) -> CMatrix2 {
    let obs = spin_observable(n, boost);
    let mut out = CMatrix2::zero();
    for row in SpinLabel::BOTH {
        for col in SpinLabel::BOTH {
            out[(row.index(), col.index())] = obs.matrix_element(row, col);
        }
    }
    out
}

/// Returns both sides of the two-by-two reduction identity
/// (sigma.p)(sigma.s)(sigma.p) = |p|² (s_z sigma_z − s_y sigma_y − s_x sigma_x),
/// whose right-hand side is stated for momenta along +z. The pair is
/// returned unconditionally; the sides agree only when p is parallel to z.
pub fn sigma_sandwich_identity(p: &ThreeVector, s: &ThreeVector) -> (CMatrix2, CMatrix2) {
    let lhs = pauli_dot(p) * pauli_dot(s) * pauli_dot(p);
    let reflected = ThreeVector::new(-s.x, -s.y, s.z);
    let rhs = pauli_dot(&reflected).scale_re(p.norm_sq());
    (lhs, rhs)
}

/// Normalized velocity-dependent spin projection along `a` for particles
/// moving with velocity `u`, acting on two-component spin states.
#[derive(Clone, Copy, Debug)]
pub struct CzachorObservable {
    direction: UnitVector,
    velocity: ThreeVector,
    matrix: CMatrix2,
}

impl CzachorObservable {
    pub fn direction(&self) -> UnitVector {
        self.direction
    }

    pub fn velocity(&self) -> ThreeVector {
        self.velocity
    }

    pub fn matrix(&self) -> &CMatrix2 {
        &self.matrix
    }

    /// Eigenvalues of the (Hermitian, traceless) 2x2 matrix, as ±lambda.
    pub fn eigenvalue_magnitude(&self) -> f64 {
        let diag = self.matrix[(0, 0)].re;
        let off = self.matrix[(0, 1)].norm();
        (diag * diag + off * off).sqrt()
    }
}

/// Builds the velocity-dependent observable
/// (sqrt(1−u²) a_perp + a_par).sigma / sqrt(1 − |a × u|²),
/// where a_par/a_perp are the components of `a` parallel/perpendicular to
/// the velocity `u`. Rejects |u| >= 1.
pub fn czachor_observable(a: &UnitVector, u: &ThreeVector) -> Result<CzachorObservable> {
    let speed_sq = u.norm_sq();
    if speed_sq >= 1.0 || !u.is_finite() {
        return Err(Error::SuperluminalVelocity(u.norm()));
    }
    let av = a.vector();
    let matrix = if speed_sq == 0.0 {
        pauli_dot(&av)
    } else {
        let parallel = u.scaled(av.dot(u) / speed_sq);
        let perp = av.sub(&parallel);
        let contracted = perp.scaled((1.0 - speed_sq).sqrt()).add(&parallel);
        let denominator = (1.0 - av.cross(u).norm_sq()).sqrt();
        pauli_dot(&contracted).scale_re(1.0 / denominator)
    };
    Ok(CzachorObservable {
        direction: *a,
        velocity: *u,
        matrix,
    })
}

/// Singlet-state correlation of the velocity-dependent observables along
/// `a` and `b` for particles moving with common velocity `u`:
/// −(a·b − u²(a_perp·b_perp)) / (sqrt(1−|a×u|²) sqrt(1−|b×u|²)).
pub fn czachor_correlator(a: &UnitVector, b: &UnitVector, u: &ThreeVector) -> Result<f64> {
    let speed_sq = u.norm_sq();
    if speed_sq >= 1.0 || !u.is_finite() {
        return Err(Error::SuperluminalVelocity(u.norm()));
    }
    let av = a.vector();
    let bv = b.vector();
    let perp = |v: &ThreeVector| {
        if speed_sq == 0.0 {
            *v
        } else {
            v.sub(&u.scaled(v.dot(u) / speed_sq))
        }
    };
    let numerator = av.dot(&bv) - speed_sq * perp(&av).dot(&perp(&bv));
    let denominator =
        (1.0 - av.cross(u).norm_sq()).sqrt() * (1.0 - bv.cross(u).norm_sq()).sqrt();
    Ok(-numerator / denominator)
}

/// The same correlation computed the long way round: as the expectation of
/// the tensor product of the two observables in the two-qubit singlet
/// (|+−⟩ − |−+⟩)/√2. Serves as an independent cross-check of
/// `czachor_correlator`.
pub fn czachor_expectation_direct(a: &UnitVector, b: &UnitVector, u: &ThreeVector) -> Result<f64> {
    let oa = czachor_observable(a, u)?;
    let ob = czachor_observable(b, u)?;
    let product = kron2(oa.matrix(), ob.matrix());
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    let singlet = [
        c64(0.0, 0.0),
        c64(inv_sqrt2, 0.0),
        c64(-inv_sqrt2, 0.0),
        c64(0.0, 0.0),
    ];
    Ok(dot_conj(&singlet, &product.mul_vec(&singlet)).re)
}
