//! Exact construction of the Clifford homomorphisms of `SU(2)` and of the
//! higher spin Dirac operators they induce on three-manifolds, with
//! machine-checked algebraic identities and exact spectra on `S³`.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact`]: rationals, Gaussian-rational scalars, dense matrices and
//!   polynomials in four variables.
//! * [`su2`]: the spin-`m/2` representations `V_m`, their Gram matrices and
//!   Clebsch–Gordan decompositions.
//! * [`clifford`]: the maps `ρ_m^0`, `ρ_m^±`, their algebraic relations,
//!   the principal symbol determinant and flat-torus kernels.
//! * [`sphere`]: operator blocks on matrix-coefficient spaces of `S³`,
//!   exact spectra, kernels, curvature identities and eigenvalue bounds.
//! * [`cli`]: the batch report front end used by the `hsd` binary.

pub mod cli;
pub mod clifford;
pub mod exact;
pub mod report;
pub mod sphere;
pub mod su2;

pub use exact::{Matrix, Poly4, Rational, Scalar};
pub use report::{CheckEntry, Status, VerificationReport};
