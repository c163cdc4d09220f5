//! Exact scalar, matrix and polynomial arithmetic.
//!
//! Everything here is rational: no floating point value is ever produced
//! except by the explicitly lossy [`Rational::to_f64`].

mod matrix;
mod poly;
mod rational;
mod scalar;

pub use matrix::{gram_adjoint, Matrix, RowEchelon};
pub use poly::{apply_derivation, monomials_of_degree, radius_squared, Exponent, Poly4, VectorField};
pub use rational::{q, Rational};
pub use scalar::Scalar;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular (malformed basis or Gram matrix)")]
    Singular,
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("linear system leaves {0} free parameter(s)")]
    Underdetermined(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse exact number from {0:?}")]
pub struct ParseExactError(pub String);
