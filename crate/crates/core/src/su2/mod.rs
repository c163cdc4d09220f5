//! Spin representations of `SU(2)`.
//!
//! All work happens in the monomial basis `z^k` of `V_m`, whose Gram matrix
//! `diag(k!(m-k)!)` is rational. Adjoints are therefore Gram adjoints, never
//! plain conjugate transposes.

mod cg;
mod group;
mod lie;
mod rep;

pub use cg::{cg_decompose, tensor_gram, CgComponent};
pub use group::GroupElement;
pub use lie::{pauli, LieVector};
pub use rep::{
    casimir, casimir_value, gram_matrix, lowering, raising, rep_dim, rep_generator, rep_group,
    rep_infinitesimal, tensor_action, RepSpace,
};

pub(crate) use rep::factorial;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group element must be 2x2, got {0}x{1}")]
    Shape(usize, usize),
    #[error("matrix is not unitary")]
    NotUnitary,
    #[error("matrix does not have determinant one")]
    NotUnimodular,
}
