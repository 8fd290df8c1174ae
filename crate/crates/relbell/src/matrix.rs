//! Small dense complex matrices.
//!
//! Everything in this crate lives in dimension 2 (Pauli space), 4 (Dirac
//! space), or 16 (two-particle space), so the matrices are plain stack
//! arrays with explicit loops — no linear-algebra dependency, no views,
//! no symbolic shortcuts.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

pub use num_complex::Complex64 as C64;

/// Complex literal shorthand.
#[inline]
pub const fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub const ZERO: C64 = c64(0.0, 0.0);
pub const ONE: C64 = c64(1.0, 0.0);
pub const I: C64 = c64(0.0, 1.0);

/// Dense square complex matrix of fixed dimension `N`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CMatrix<const N: usize> {
    rows: [[C64; N]; N],
}

pub type CMatrix2 = CMatrix<2>;
pub type CMatrix4 = CMatrix<4>;
pub type CMatrix16 = CMatrix<16>;

impl<const N: usize> CMatrix<N> {
    pub const fn from_rows(rows: [[C64; N]; N]) -> Self {
        Self { rows }
    }

    pub fn zero() -> Self {
        Self { rows: [[ZERO; N]; N] }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            m.rows[i][i] = ONE;
        }
        m
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for j in 0..N {
                m.rows[i][j] = self.rows[j][i].conj();
            }
        }
        m
    }

    pub fn trace(&self) -> C64 {
        (0..N).map(|i| self.rows[i][i]).sum()
    }

    pub fn scale(&self, factor: C64) -> Self {
        let mut m = *self;
        for row in m.rows.iter_mut() {
            for entry in row.iter_mut() {
                *entry *= factor;
            }
        }
        m
    }

    pub fn scale_re(&self, factor: f64) -> Self {
        self.scale(c64(factor, 0.0))
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[C64; N]) -> [C64; N] {
        let mut out = [ZERO; N];
        for i in 0..N {
            let mut acc = ZERO;
            for j in 0..N {
                acc += self.rows[i][j] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        let mut worst = 0.0_f64;
        for row in &self.rows {
            for entry in row {
                worst = worst.max(entry.norm());
            }
        }
        worst
    }

    /// Largest entrywise difference, for tolerance comparisons.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..N {
            for j in 0..N {
                worst = worst.max((self.rows[i][j] - other.rows[i][j]).norm());
            }
        }
        worst
    }
}

impl<const N: usize> Index<(usize, usize)> for CMatrix<N> {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.rows[i][j]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for CMatrix<N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.rows[i][j]
    }
}

impl<const N: usize> Add for CMatrix<N> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for i in 0..N {
            for j in 0..N {
                self.rows[i][j] += rhs.rows[i][j];
            }
        }
        self
    }
}

impl<const N: usize> Sub for CMatrix<N> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for i in 0..N {
            for j in 0..N {
                self.rows[i][j] -= rhs.rows[i][j];
            }
        }
        self
    }
}

impl<const N: usize> Neg for CMatrix<N> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale_re(-1.0)
    }
}

impl<const N: usize> Mul for CMatrix<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for i in 0..N {
            for k in 0..N {
                let lik = self.rows[i][k];
                if lik == ZERO {
                    continue;
                }
                for j in 0..N {
                    out.rows[i][j] += lik * rhs.rows[k][j];
                }
            }
        }
        out
    }
}

/// `[A, B] = AB - BA`.
pub fn commutator<const N: usize>(a: &CMatrix<N>, b: &CMatrix<N>) -> CMatrix<N> {
    *a * *b - *b * *a
}

/// `{A, B} = AB + BA`.
pub fn anticommutator<const N: usize>(a: &CMatrix<N>, b: &CMatrix<N>) -> CMatrix<N> {
    *a * *b + *b * *a
}

/// Kronecker product of two 2x2 matrices (first factor on the slow index).
pub fn kron2(a: &CMatrix2, b: &CMatrix2) -> CMatrix4 {
    let mut out = CMatrix4::zero();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[(2 * i + k, 2 * j + l)] = a[(i, j)] * b[(k, l)];
                }
            }
        }
    }
    out
}

/// `sum_i conj(a_i) b_i`.
pub fn dot_conj(a: &[C64], b: &[C64]) -> C64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Largest componentwise difference between two complex vectors.
pub fn vec_max_abs_diff(a: &[C64], b: &[C64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
