//! The Clifford homomorphisms `ρ_m⁰ : V_m → V_m` and `ρ_m^± : V_m → V_{m±2}`.
//!
//! `e₁, e₂, e₃` are identified with `σ₁, σ₂, σ₃`; spins below zero denote the
//! zero space, so `ρ_m⁻` for `m < 2` is the zero map into a 0-dimensional space.

mod maps;
mod symbol;
mod torus;
mod verify;

pub use maps::{clifford_generator, clifford_map, clifford_matrix, CliffordKind, CliffordMap};
pub use symbol::{symbol_det, symbol_det_expected, symbol_det_poly};
pub use torus::{torus_kernel_dims, TorusKernels};
pub use verify::{
    cg_oracle_compare, lie_to_v2, verify_algebra, verify_group_equivariance, verify_group_equivariance_matrix,
};
