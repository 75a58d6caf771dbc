//! Numerical Clifford/spinor algebra for Cl(1,3).
//!
//! The crate provides, bottom up:
//!
//! * [`multivector`] — a real Cl(1,3) kernel (wedge, contractions, reversion,
//!   Clifford product) with a generated blade sign table;
//! * [`gamma`] — Weyl-representation Dirac matrices and real-linear
//!   (antilinearity-capable) operators on 4-component spinors;
//! * [`bilinears`] — the five bilinear covariants, Fierz-identity residuals
//!   and the P/Q aggregates;
//! * [`classifier`] — the Lounesto six-class decision;
//! * [`elko`] — dual-helicity eigenspinors of charge conjugation, their dual,
//!   boosts and the chi operator;
//! * [`mapping`] — the Dirac-to-ELKO operator M, its mappability conditions
//!   (closed-form and direct) and the equivalence-class solver;
//! * [`sampler`] — seeded generation of spinors in each class.
//!
//! The crate is `no_std`-compatible (with `alloc`); the `std` feature is on
//! by default.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bilinears;
pub mod classifier;
pub mod elko;
pub mod gamma;
pub mod mapping;
pub mod multivector;
pub mod sampler;

mod error;
mod flt;
mod linalg;
mod newton;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;

pub use num_complex::Complex64;
