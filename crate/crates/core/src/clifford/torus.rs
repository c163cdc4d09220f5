use serde::Serialize;

use crate::exact::Scalar;
use crate::su2::LieVector;

use super::maps::{clifford_matrix, CliffordKind};

/// Kernel dimensions of `D_m⁰` and `D_m⁺` on the flat torus, with the
/// algebraic facts that rule out nonzero Fourier modes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusKernels {
    pub m: u32,
    /// `None` for even `m`: `ρ_m⁰(ξ)` is singular, so nonzero modes do contribute.
    pub d0: Option<usize>,
    pub dplus: usize,
    /// `rank ρ_m⁺(e₁)`; injectivity when it equals `m+1`.
    pub rank_plus_e1: usize,
    /// `det ρ_m⁰(e₁)`.
    pub det_zero_e1: Scalar,
    /// Whether the certificate closes (injectivity, and invertibility for odd `m`).
    pub certified: bool,
}

/// On `T³` a section `Σ_ξ v_ξ e^{i⟨ξ,x⟩}` lies in the kernel iff `ρ(ξ) v_ξ = 0`
/// for every frequency. Every `ξ ≠ 0` is a rotation of a positive multiple of
/// `e₁`, and the maps are rotation-equivariant, so only the zero mode (of
/// dimension `m+1`) survives once the `e₁` matrices are injective.
pub fn torus_kernel_dims(m: u32) -> TorusKernels {
    let plus = clifford_matrix(CliffordKind::Plus, m as i64, &LieVector::e1());
    let zero = clifford_matrix(CliffordKind::Zero, m as i64, &LieVector::e1());
    let rank_plus_e1 = plus.rank();
    let det_zero_e1 = zero.determinant();
    let odd = m % 2 == 1;
    let dim = m as usize + 1;
    TorusKernels {
        m,
        d0: odd.then_some(dim),
        dplus: dim,
        rank_plus_e1,
        certified: rank_plus_e1 == dim && (!odd || !det_zero_e1.is_zero()),
        det_zero_e1,
    }
}
