//! Flat-spacetime kinematics with metric signature (+,-,-,-).
//!
//! Natural units (c = hbar = 1). A boost is always a *pure* standard boost:
//! the transformation taking the rest-frame momentum (m,0,0,0) to
//! (gamma*m, gamma*m*beta*direction).

use crate::error::{Error, Result};

/// Largest admissible boost speed (gamma ~ 707). Beyond this, gamma-scaled
/// quantities lose enough precision to drift past the test tolerances.
pub const BETA_MAX: f64 = 0.999999;

/// Real spatial three-vector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThreeVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl ThreeVector {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0);
    pub const EX: Self = Self::new(1.0, 0.0, 0.0);
    pub const EY: Self = Self::new(0.0, 1.0, 0.0);
    pub const EZ: Self = Self::new(0.0, 0.0, 1.0);

    pub fn dot(&self, other: &Self) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(&self, other: &Self) -> Self {
        Self::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self::new(self.x * factor, self.y * factor, self.z * factor)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.x + other.x, self.y + other.y, self.z + other.z)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.x - other.x, self.y - other.y, self.z - other.z)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn component(&self, i: usize) -> f64 {
        match i {
            0 => self.x,
            1 => self.y,
            2 => self.z,
            _ => panic!("three-vector component index {i} out of range"),
        }
    }
}

/// Contravariant four-vector, components indexed 0..=3 as (t, x, y, z).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourVector {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl FourVector {
    pub const fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        Self { t, x, y, z }
    }

    pub fn from_spatial(t: f64, spatial: ThreeVector) -> Self {
        Self::new(t, spatial.x, spatial.y, spatial.z)
    }

    pub fn spatial(&self) -> ThreeVector {
        ThreeVector::new(self.x, self.y, self.z)
    }

    /// Contravariant component v^mu.
    pub fn component(&self, mu: usize) -> f64 {
        match mu {
            0 => self.t,
            1 => self.x,
            2 => self.y,
            3 => self.z,
            _ => panic!("four-vector component index {mu} out of range"),
        }
    }

    /// Covariant component v_mu = g_{mu nu} v^nu.
    pub fn lower_component(&self, mu: usize) -> f64 {
        if mu == 0 {
            self.t
        } else {
            -self.component(mu)
        }
    }
}

/// `a_mu b^mu = a0 b0 - a.b` under the (+,-,-,-) metric.
pub fn minkowski_dot(a: &FourVector, b: &FourVector) -> f64 {
    a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z
}

/// A three-vector normalized to unit Euclidean length at construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitVector(ThreeVector);

impl UnitVector {
    /// Normalizes `v`; rejects zero and non-finite inputs.
    pub fn new(v: ThreeVector) -> Result<Self> {
        if !v.is_finite() {
            return Err(Error::DegenerateVector(v.x, v.y, v.z));
        }
        let norm = v.norm();
        if norm < 1e-12 {
            return Err(Error::DegenerateVector(v.x, v.y, v.z));
        }
        Ok(Self(v.scaled(1.0 / norm)))
    }

    pub fn from_components(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::new(ThreeVector::new(x, y, z))
    }

    /// Unit vector in the x-z plane at angle `radians` from +z toward +x.
    pub fn in_xz_plane(radians: f64) -> Self {
        Self(ThreeVector::new(radians.sin(), 0.0, radians.cos()))
    }

    pub const PLUS_X: Self = Self(ThreeVector::EX);
    pub const PLUS_Y: Self = Self(ThreeVector::EY);
    pub const PLUS_Z: Self = Self(ThreeVector::EZ);

    pub fn vector(&self) -> ThreeVector {
        self.0
    }

    pub fn x(&self) -> f64 {
        self.0.x
    }

    pub fn y(&self) -> f64 {
        self.0.y
    }

    pub fn z(&self) -> f64 {
        self.0.z
    }

    /// Some unit vector orthogonal to `self`, chosen deterministically
    /// (seeded from the coordinate axis least aligned with `self`).
    pub fn orthogonal(&self) -> UnitVector {
        let v = self.0;
        let candidates = [ThreeVector::EX, ThreeVector::EY, ThreeVector::EZ];
        let mut best = candidates[0];
        let mut best_align = f64::INFINITY;
        for c in candidates {
            let align = v.dot(&c).abs();
            if align < best_align {
                best_align = align;
                best = c;
            }
        }
        let projected = best.sub(&v.scaled(v.dot(&best)));
        UnitVector::new(projected).expect("projection of the least-aligned axis cannot vanish")
    }
}

/// Speed, direction, and mass of a standard boost applied to a rest-frame
/// particle. Validated at construction; downstream operations cannot fail.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoostParams {
    beta: f64,
    direction: UnitVector,
    mass: f64,
}

impl BoostParams {
    pub fn new(beta: f64, direction: UnitVector, mass: f64) -> Result<Self> {
        if !beta.is_finite() || !(0.0..=BETA_MAX).contains(&beta) {
            return Err(Error::BetaOutOfRange(beta));
        }
        if !mass.is_finite() || mass <= 0.0 {
            return Err(Error::InvalidMass(mass));
        }
        Ok(Self { beta, direction, mass })
    }

    /// Rest frame; the direction is irrelevant at beta = 0 and fixed to +z.
    pub fn rest(mass: f64) -> Result<Self> {
        Self::new(0.0, UnitVector::PLUS_Z, mass)
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn direction(&self) -> UnitVector {
        self.direction
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// Lorentz factor (1 - beta^2)^{-1/2}.
    pub fn gamma(&self) -> f64 {
        1.0 / (1.0 - self.beta * self.beta).sqrt()
    }

    /// Lab-frame energy gamma*m.
    pub fn energy(&self) -> f64 {
        self.gamma() * self.mass
    }

    /// |p| = gamma*m*beta.
    pub fn momentum_magnitude(&self) -> f64 {
        self.gamma() * self.mass * self.beta
    }

    /// Spatial momentum gamma*m*beta*direction.
    pub fn momentum(&self) -> ThreeVector {
        self.direction.vector().scaled(self.momentum_magnitude())
    }

    /// Velocity vector beta*direction.
    pub fn velocity(&self) -> ThreeVector {
        self.direction.vector().scaled(self.beta)
    }
}

/// On-shell four-momentum (gamma*m, gamma*m*beta*direction).
pub fn four_momentum(boost: &BoostParams) -> FourVector {
    FourVector::from_spatial(boost.energy(), boost.momentum())
}

/// Image of `v` under the standard boost: the pure boost taking (m,0,0,0)
/// to `four_momentum(boost)`.
pub fn boost_four_vector(v: &FourVector, boost: &BoostParams) -> FourVector {
    let d = boost.direction.vector();
    let gamma = boost.gamma();
    let beta = boost.beta;
    let spatial = v.spatial();
    let along = d.dot(&spatial);
    let t = gamma * (v.t + beta * along);
    let shifted = spatial.add(&d.scaled((gamma - 1.0) * along + gamma * beta * v.t));
    FourVector::from_spatial(t, shifted)
}

/// Spin polarization four-vector for rest-frame direction `n`:
/// s = (p.n/m, n + (p.n) p / (m(E+m))). Spacelike unit (s.s = -1) and
/// orthogonal to the momentum (s.p = 0).
pub fn polarization_vector(n: &UnitVector, boost: &BoostParams) -> FourVector {
    let p = boost.momentum();
    let m = boost.mass;
    let energy = boost.energy();
    let p_dot_n = p.dot(&n.vector());
    let spatial = n.vector().add(&p.scaled(p_dot_n / (m * (energy + m))));
    FourVector::from_spatial(p_dot_n / m, spatial)
}
