use serde::Serialize;

use crate::exact::Rational;
use crate::report::Status;

use super::block::{BlockKind, BlockStore};
use super::closed_form::{blocks_of, closed_form, Labeling};
use super::spectrum::resolve_labeling;
use super::SphereError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeNullity {
    pub n: u32,
    pub nullity: usize,
    pub predicted: usize,
}

/// Kernel dimension of an operator on `L²(S³, S_m)` with its certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelReport {
    pub operator: BlockKind,
    pub m: u32,
    pub n_max: u32,
    /// `None` when the closed forms show zero modes in every degree.
    pub dimension: Option<usize>,
    pub predicted: Option<usize>,
    /// Largest degree holding a zero mode, if the kernel is finite.
    pub required_degree: Option<u32>,
    pub per_degree: Vec<DegreeNullity>,
    pub certificate: String,
    pub status: Status,
}

/// Square operator whose block kernel equals the kernel of `kind` together
/// with it: `ker D⁺ = ker D⁻D⁺` and `ker D⁻ = ker D⁺D⁻` by adjointness.
fn closed_form_proxy(kind: BlockKind) -> Result<BlockKind, SphereError> {
    Ok(match kind {
        BlockKind::Dplus => BlockKind::DminusDplus,
        BlockKind::Dminus => BlockKind::DplusDminus,
        BlockKind::ZSquaredSum => {
            return Err(SphereError::Precondition("kernel of the z-squared-sum is not supported".into()))
        }
        k => k,
    })
}

fn zero_modes(kind: BlockKind, m: u32, n: u32, labeling: Labeling) -> usize {
    blocks_of(m, n, labeling)
        .into_iter()
        .filter(|b| closed_form(kind, m, *b).is_some_and(|v| v == Rational::zero()))
        .map(|b| b.dim())
        .sum()
}

/// Degree beyond which the zero pattern of the closed forms is frozen.
///
/// Every block of `W(n, m)` has smaller index `k ≥ n - m`. All closed-form
/// factors are positive once `k > p` (`p = ⌊m/2⌋`) except those depending on
/// `s` alone, and the range of `s` no longer changes once `n ≥ m`, so the
/// zero pattern at degree `m + p + 1` repeats in every higher degree.
pub fn stable_degree(m: u32) -> u32 {
    m + m / 2 + 1
}

/// `dim ker` of `kind` on spin-`m` sections, summed exactly over degrees
/// `n ≤ n_max`.
///
/// The closed forms locate every zero mode; if some lie beyond `n_max` the
/// call fails naming the degree needed. If they persist in all degrees, the
/// kernel is infinite-dimensional and `dimension` is `None`.
pub fn kernel_dimension(store: &BlockStore, kind: BlockKind, m: u32, n_max: u32) -> Result<KernelReport, SphereError> {
    let proxy = closed_form_proxy(kind)?;
    let labeling = resolve_labeling(store)?;
    let top = stable_degree(m);
    let unbounded = zero_modes(proxy, m, top, labeling) > 0;
    let required = (0..=top).rev().find(|&n| zero_modes(proxy, m, n, labeling) > 0);
    if !unbounded {
        if let Some(req) = required {
            if req > n_max {
                return Err(SphereError::InsufficientDegree { required: req, n_max });
            }
        }
    }
    let mut per_degree = Vec::new();
    for n in 0..=n_max {
        let block = store.get(kind, m as i64, n)?;
        per_degree.push(DegreeNullity {
            n,
            nullity: block.matrix.block_nullity(),
            predicted: zero_modes(proxy, m, n, labeling),
        });
    }
    let all_match = per_degree.iter().all(|d| d.nullity == d.predicted);
    let total: usize = per_degree.iter().map(|d| d.nullity).sum();
    let predicted: usize = per_degree.iter().map(|d| d.predicted).sum();
    let certificate = if unbounded {
        format!("closed form of {proxy} vanishes on a block in every degree n ≥ {top}; kernel is infinite-dimensional")
    } else {
        match required {
            Some(req) => format!(
                "closed form of {proxy} has zero modes only in degrees ≤ {req} and is nonzero on every block of degree ≥ {top}"
            ),
            None => format!("closed form of {proxy} is nonzero on every block of every degree"),
        }
    };
    Ok(KernelReport {
        operator: kind,
        m,
        n_max,
        dimension: (!unbounded).then_some(total),
        predicted: (!unbounded).then_some(predicted),
        required_degree: if unbounded { None } else { Some(required.unwrap_or(0)) },
        per_degree,
        certificate,
        status: Status::from_bool(all_match),
    })
}

/// `(m+1)(m+2)(m+3)/6`.
pub fn dplus_kernel_formula(m: u32) -> usize {
    let m = m as usize;
    (m + 1) * (m + 2) * (m + 3) / 6
}
