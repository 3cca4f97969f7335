//! Bound states of a charge in a unit-monopole field and their oscillator
//! dual, built from the quadratic map R⁴ → R³ ⊗ S¹.
//!
//! The crate provides:
//!
//! - [`ks`]: the forward map, its fiber action, the monopole gauge potential
//!   in Cartesian, polar and parabolic coordinates, and coordinate
//!   conversions;
//! - [`special`] and [`quadrature`]: terminating-series special functions
//!   and Gauss rules for the normalization integrals;
//! - [`spectra`]: closed-form energy levels in both separations, the
//!   oscillator-monopole duality, and degeneracy enumeration;
//! - [`wavefunctions`]: the closed-form eigenfunctions and their assembly
//!   into the full fiber-dressed states;
//! - [`verify`]: independent finite-difference eigensolvers, operator
//!   residual tests and the machine-readable verification suite that checks
//!   every analytic formula numerically.
//!
//! The `dyonic` binary exposes the spectrum, wavefunction sampling,
//! coordinate transforms and the verification suite on the command line.

pub mod ks;
pub mod quadrature;
pub mod special;
pub mod spectra;
pub mod tridiag;
pub mod units;

pub use units::{default_context, PhysicalContext};
