//! Gamma-matrix algebra in the Dirac representation.
//!
//! Conventions, fixed once here and relied on everywhere else:
//! * metric (+,-,-,-), so lowering a spatial index flips its sign;
//! * gamma^0 = diag(1,1,-1,-1), gamma^i carries sigma^i in the upper-right
//!   block and -sigma^i in the lower-left block, gamma5 has identity
//!   off-diagonal blocks;
//! * the totally antisymmetric symbol has epsilon^{0123} = +1. With that
//!   choice the rest-frame spin operator built from the Pauli-Lubanski
//!   vector, (2/m) W_mu s^mu with s = (0,n), comes out equal to
//!   Sigma.n = diag(sigma.n, sigma.n) — the sign is pinned by tests.

use crate::error::{Error, Result};
use crate::matrix::{c64, CMatrix16, CMatrix2, CMatrix4, ONE, ZERO};
use crate::minkowski::{FourVector, ThreeVector};

/// Pauli matrix sigma^i for i in 1..=3.
pub fn pauli(i: usize) -> Result<CMatrix2> {
    match i {
        1 => Ok(CMatrix2::from_rows([[ZERO, ONE], [ONE, ZERO]])),
        2 => Ok(CMatrix2::from_rows([
            [ZERO, c64(0.0, -1.0)],
            [c64(0.0, 1.0), ZERO],
        ])),
        3 => Ok(CMatrix2::from_rows([[ONE, ZERO], [ZERO, -ONE]])),
        _ => Err(Error::GammaIndex(i)),
    }
}

/// sigma.v = v_x sigma^1 + v_y sigma^2 + v_z sigma^3.
pub fn pauli_dot(v: &ThreeVector) -> CMatrix2 {
    CMatrix2::from_rows([
        [c64(v.z, 0.0), c64(v.x, -v.y)],
        [c64(v.x, v.y), c64(-v.z, 0.0)],
    ])
}

/// Assemble a 4x4 Dirac-space matrix from 2x2 blocks.
pub fn block_matrix(tl: &CMatrix2, tr: &CMatrix2, bl: &CMatrix2, br: &CMatrix2) -> CMatrix4 {
    let mut m = CMatrix4::zero();
    for i in 0..2 {
        for j in 0..2 {
            m[(i, j)] = tl[(i, j)];
            m[(i, j + 2)] = tr[(i, j)];
            m[(i + 2, j)] = bl[(i, j)];
            m[(i + 2, j + 2)] = br[(i, j)];
        }
    }
    m
}

fn gamma_up(mu: usize) -> CMatrix4 {
    let id = CMatrix2::identity();
    let zero = CMatrix2::zero();
    match mu {
        0 => block_matrix(&id, &zero, &zero, &(-id)),
        1..=3 => {
            let s = pauli(mu).expect("index 1..=3");
            block_matrix(&zero, &s, &(-s), &zero)
        }
        _ => panic!("gamma index {mu} out of range"),
    }
}

/// Contravariant gamma matrix gamma^mu in the Dirac representation.
pub fn gamma(mu: usize) -> Result<CMatrix4> {
    if mu > 3 {
        return Err(Error::GammaIndex(mu));
    }
    Ok(gamma_up(mu))
}

/// Chirality matrix gamma5 = i gamma^0 gamma^1 gamma^2 gamma^3:
/// identity in both off-diagonal blocks.
pub fn gamma5() -> CMatrix4 {
    let id = CMatrix2::identity();
    let zero = CMatrix2::zero();
    block_matrix(&zero, &id, &id, &zero)
}

/// Feynman slash: v_mu gamma^mu = v^0 gamma^0 - sum_i v^i gamma^i.
pub fn slash(v: &FourVector) -> CMatrix4 {
    let mut m = gamma_up(0).scale_re(v.t);
    for i in 1..4 {
        m = m - gamma_up(i).scale_re(v.component(i));
    }
    m
}

/// Covariant gamma matrix gamma_mu = g_{mu nu} gamma^nu.
fn gamma_low(mu: usize) -> CMatrix4 {
    if mu == 0 {
        gamma_up(0)
    } else {
        -gamma_up(mu)
    }
}

/// Spin tensor with lowered indices: sigma_{mu nu} = (i/2)[gamma_mu, gamma_nu].
pub fn sigma_lower(mu: usize, nu: usize) -> Result<CMatrix4> {
    if mu > 3 || nu > 3 {
        return Err(Error::SigmaIndex(mu, nu));
    }
    let a = gamma_low(mu);
    let b = gamma_low(nu);
    Ok((a * b - b * a).scale(c64(0.0, 0.5)))
}

/// Totally antisymmetric symbol with four indices, epsilon^{0123} = +1.
fn levi_civita(indices: [usize; 4]) -> f64 {
    let mut sign = 1.0;
    for i in 0..4 {
        for j in (i + 1)..4 {
            if indices[i] == indices[j] {
                return 0.0;
            }
            if indices[i] > indices[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// The four Pauli-Lubanski matrices for a plane wave of momentum `p`:
/// W^mu(p) = (1/4) epsilon^{mu nu rho sigma} sigma_{nu rho} p_sigma
/// (the derivative acts on e^{-ip.x} as -i p_sigma).
pub fn pauli_lubanski(p: &FourVector) -> [CMatrix4; 4] {
    // Pre-build the six independent sigma_{nu rho}.
    let mut sigma = [[CMatrix4::zero(); 4]; 4];
    for nu in 0..4 {
        for rho in 0..4 {
            if nu != rho {
                sigma[nu][rho] = sigma_lower(nu, rho).expect("indices in range");
            }
        }
    }
    let mut w = [CMatrix4::zero(); 4];
    for (mu, w_mu) in w.iter_mut().enumerate() {
        let mut acc = CMatrix4::zero();
        for nu in 0..4 {
            for rho in 0..4 {
                for sig in 0..4 {
                    let eps = levi_civita([mu, nu, rho, sig]);
                    if eps != 0.0 {
                        acc = acc + sigma[nu][rho].scale_re(0.25 * eps * p.lower_component(sig));
                    }
                }
            }
        }
        *w_mu = acc;
    }
    w
}

/// Spin operator along `s` built from the Pauli-Lubanski vector:
/// (2/m) W_mu s^mu. On positive-energy plane waves of momentum `p` this
/// acts identically to gamma5 * slash(s).
pub fn pauli_lubanski_spin(p: &FourVector, s: &FourVector, mass: f64) -> CMatrix4 {
    let w = pauli_lubanski(p);
    let mut acc = w[0].scale_re(s.t);
    for i in 1..4 {
        // W_mu s^mu = W^0 s^0 - W.s under (+,-,-,-).
        acc = acc - w[i].scale_re(s.component(i));
    }
    acc.scale_re(2.0 / mass)
}

/// Kronecker product of two Dirac-space operators; row-major two-particle
/// index convention (i, j) -> 4i + j with particle 1 on the slow index.
pub fn tensor_product(a: &CMatrix4, b: &CMatrix4) -> CMatrix16 {
    let mut out = CMatrix16::zero();
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    out[(4 * i + k, 4 * j + l)] = a[(i, j)] * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Sigma.n extended to Dirac space: diag(sigma.n, sigma.n).
pub(crate) fn big_sigma_dot(n: &ThreeVector) -> CMatrix4 {
    let s = pauli_dot(n);
    block_matrix(&s, &CMatrix2::zero(), &CMatrix2::zero(), &s)
}
