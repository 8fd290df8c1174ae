//! Relativistic spin correlations for Dirac particles.
//!
//! This crate builds boosted plane-wave Dirac spinors, a boost-covariant
//! spin observable derived from the Pauli-Lubanski vector, and two-particle
//! singlet correlators. The headline computation: with the covariant
//! observable, the singlet correlation of measurements along `a` and `b`
//! equals `−a·b` at every boost, so the CHSH combination keeps its quantum
//! maximum 2√2 independent of velocity. A velocity-dependent alternative
//! observable (`observables::czachor_observable`) is included for contrast:
//! at fixed measurement angles its correlations — and the CHSH value — drift
//! with the particles' speed.
//!
//! Module map:
//!
//! * [`matrix`] — small fixed-size complex matrices and vector helpers.
//! * [`minkowski`] — three/four-vectors, boosts, polarization vectors.
//! * [`dirac`] — gamma matrices, Feynman slash, Pauli-Lubanski vector.
//! * [`spinors`] — rest and boosted positive-energy spinors.
//! * [`observables`] — the two competing spin observables and their
//!   closed-form matrix elements.
//! * [`bell`] — singlet states, correlators, CHSH values and maximization.
//! * [`verify`] — the full invariant suite behind the CLI `verify` command.
//!
//! All randomized checks use fixed seeds; every public computation is
//! deterministic.

// Indexed loops over 0..4 mirror the spacetime-component notation of the
// formulas they implement; enumerate() would only obscure that.
#![allow(clippy::needless_range_loop)]

pub mod bell;
pub mod dirac;
pub mod error;
pub mod matrix;
pub mod minkowski;
pub mod observables;
mod optim;
pub mod spinors;
pub mod verify;

pub use error::{Error, Result};
