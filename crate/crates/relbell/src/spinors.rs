//! Rest-frame and boosted four-component spinors.
//!
//! Positive-energy plane-wave spinors are normalized to u†u = 1:
//!
//! ```text
//! u(p, ±1/2) = sqrt((E+m)/2E) * (phi±, (sigma.p/(E+m)) phi±)
//! ```
//!
//! with phi+ = (1,0), phi- = (0,1) eigenvectors of sigma^3. The spin
//! quantization axis is the fixed lab +z regardless of the boost direction.

use crate::matrix::{c64, dot_conj, C64, ZERO};
use crate::minkowski::BoostParams;

/// Spin projection along the lab z-axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpinLabel {
    /// +1/2
    Up,
    /// -1/2
    Down,
}

impl SpinLabel {
    pub const BOTH: [SpinLabel; 2] = [SpinLabel::Up, SpinLabel::Down];

    /// Sign of the sigma^3 eigenvalue: +1 or -1.
    pub fn sign(&self) -> f64 {
        match self {
            SpinLabel::Up => 1.0,
            SpinLabel::Down => -1.0,
        }
    }

    /// Two-component eigenvector phi± of sigma^3.
    pub fn two_component(&self) -> [C64; 2] {
        match self {
            SpinLabel::Up => [c64(1.0, 0.0), ZERO],
            SpinLabel::Down => [ZERO, c64(1.0, 0.0)],
        }
    }

    /// Row/column index in 2x2 spin space: Up -> 0, Down -> 1.
    pub fn index(&self) -> usize {
        match self {
            SpinLabel::Up => 0,
            SpinLabel::Down => 1,
        }
    }
}

/// Positive-energy (particle) vs negative-energy (antiparticle) branch of
/// the rest-frame basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpinorKind {
    Particle,
    Antiparticle,
}

/// Four-component complex spinor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spinor {
    components: [C64; 4],
}

impl Spinor {
    pub fn new(components: [C64; 4]) -> Self {
        Self { components }
    }

    pub fn components(&self) -> &[C64; 4] {
        &self.components
    }

    pub fn component(&self, i: usize) -> C64 {
        self.components[i]
    }

    /// Inner product with the left argument conjugated: self† other.
    pub fn dagger_dot(&self, other: &Spinor) -> C64 {
        dot_conj(&self.components, &other.components)
    }

    pub fn norm_sq(&self) -> f64 {
        self.dagger_dot(self).re
    }

    pub fn max_abs_diff(&self, other: &Spinor) -> f64 {
        crate::matrix::vec_max_abs_diff(&self.components, &other.components)
    }
}

/// The four rest-frame basis spinors: u(0,+1/2), u(0,-1/2) on the particle
/// branch and v(0,+1/2), v(0,-1/2) on the antiparticle branch. They are the
/// standard basis vectors e0..e3 and eigenvectors of Sigma^3 with
/// eigenvalues +1, -1, +1, -1 respectively.
pub fn rest_spinor(kind: SpinorKind, spin: SpinLabel) -> Spinor {
    let index = match kind {
        SpinorKind::Particle => spin.index(),
        SpinorKind::Antiparticle => 2 + spin.index(),
    };
    let mut components = [ZERO; 4];
    components[index] = c64(1.0, 0.0);
    Spinor::new(components)
}

/// Normalized positive-energy boosted spinor u(p, spin).
pub fn boosted_spinor(boost: &BoostParams, spin: SpinLabel) -> Spinor {
    let energy = boost.energy();
    let m = boost.mass();
    let p = boost.momentum();
    let prefactor = ((energy + m) / (2.0 * energy)).sqrt();
    let phi = spin.two_component();
    // (sigma.p) phi / (E+m)
    let scale = 1.0 / (energy + m);
    let lower = [
        (c64(p.z, 0.0) * phi[0] + c64(p.x, -p.y) * phi[1]) * scale,
        (c64(p.x, p.y) * phi[0] + c64(-p.z, 0.0) * phi[1]) * scale,
    ];
    Spinor::new([
        phi[0] * prefactor,
        phi[1] * prefactor,
        lower[0] * prefactor,
        lower[1] * prefactor,
    ])
}

/// Ordered orthonormal basis (u(p,+1/2), u(p,-1/2)) of the positive-energy
/// subspace for the given boost.
pub fn positive_energy_basis(boost: &BoostParams) -> [Spinor; 2] {
    [
        boosted_spinor(boost, SpinLabel::Up),
        boosted_spinor(boost, SpinLabel::Down),
    ]
}
