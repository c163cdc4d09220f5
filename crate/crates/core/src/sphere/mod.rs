//! Higher spin Dirac operators on `S³ = SU(2)` as exact finite blocks.
//!
//! Sections of the spin-`m/2` bundle are trivialized to `V_m`-valued functions.
//! Polynomial sections of degree `n` are spanned by `f_ab ⊗ z^j`, where `f_ab`
//! are the matrix coefficients of `ρ_n`. This space `W(n, m)` is preserved by
//! the invariant fields `Z_i`, so every operator restricts to a finite matrix.

mod block;
mod bounds;
mod cache;
mod closed_form;
mod coeff;
mod gram;
mod identities;
mod kernel;
mod spectrum;

pub use block::{build_block, operator_block, BlockKind, BlockStore, OperatorBlock, SectionSpace};
pub use bounds::{check_eigenvalue_bounds, lambda_bound, mu_bound, BoundsReport, FriedrichCheck, MinimizerCheck};
pub use cache::{BlockCache, CACHE_FORMAT};
pub use closed_form::{blocks_of, closed_form, z_squared_value, Labeling, PeterWeyl};
pub use coeff::{coeff_basis, degree_data, CoeffBasis, DegreeData};
pub use gram::{block_gram, gram_by_moments, sphere_moment};
pub use identities::{verify_adjoint_blocks, verify_gram, verify_s3_identities};
pub use kernel::{dplus_kernel_formula, kernel_dimension, stable_degree, DegreeNullity, KernelReport};
pub use spectrum::{predicted_spectrum, resolve_labeling, spectrum_block, SpectrumLine, SpectrumReport};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SphereError {
    /// An internal invariant failed, e.g. a field did not preserve `W(n, m)`.
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("degree cutoff {n_max} is too small; zero modes reach degree {required}")]
    InsufficientDegree { required: u32, n_max: u32 },
    #[error("block cache: {0}")]
    Cache(String),
}
