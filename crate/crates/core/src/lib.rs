//! Mirrored entanglement witnesses built from mutually unbiased bases.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure numerics:
//!
//! - [`linops`]: dense complex matrices on `C^dA ⊗ C^dB`, partial transposition,
//!   a Jacobi eigensolver for Hermitian matrices, determinants and singular values.
//! - [`mub`]: the four qutrit MUBs used by the witness family and the quadratic-phase
//!   construction for odd prime dimensions.
//! - [`witnesses`]: dephasing channels, the `Φ_Γ` maps, Choi matrices, the circulant
//!   parametrisation, mirrored partners and the catalog of fixed operators.
//! - [`simplex`]: Weyl operators, generalized Bell states, Bell-diagonal coefficients,
//!   phase-space lines and `(α, β)` slices of the magic simplex.
//! - [`certify`]: PPT tests, see-saw optimisation over product vectors, block
//!   positivity evidence, spanning certificates, CES evidence and local decompositions.
//!
//! File formats, the CLI and parallel drivers live in the companion `ew` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod certify;
pub mod error;
pub mod linops;
pub mod mub;
pub mod simplex;
pub mod witnesses;

pub use error::{Error, Result};
pub use linops::{BipartiteOperator, CMatrix, StateVector, Subsystem};
pub use num_complex::Complex64 as C64;

/// Comparison tolerances shared across the crate.
pub mod tol {
    /// Exact-structure checks (entrywise equality of constructed matrices).
    pub const STRUCTURE: f64 = 1e-12;
    /// Eigenvalue and optimisation results.
    pub const NUMERIC: f64 = 1e-9;
    /// Hermiticity accepted on input to the eigensolver.
    pub const HERMITIAN_INPUT: f64 = 1e-10;
    /// Positivity / PPT threshold on minimum eigenvalues.
    pub const PSD: f64 = 1e-10;
    /// Block positivity is refuted below this product expectation.
    pub const BLOCK_POSITIVITY: f64 = 1e-8;
}
