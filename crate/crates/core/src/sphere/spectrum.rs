use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Serialize;

use crate::exact::{q, Matrix, Rational, Scalar};
use crate::report::Status;

use super::block::{BlockKind, BlockStore};
use super::closed_form::{blocks_of, closed_form, z_squared_value, Labeling};
use super::SphereError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumLine {
    pub eigenvalue: Rational,
    pub multiplicity: usize,
    pub predicted: usize,
    pub blocks: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub operator: BlockKind,
    pub m: u32,
    pub n: u32,
    pub labeling: Labeling,
    pub dimension: usize,
    pub lines: Vec<SpectrumLine>,
    /// `Σ multiplicities`; equals `dimension` when nothing is missing.
    pub accounted: usize,
    /// Whether `Π (A - λ_j)` over the candidates is the zero matrix.
    pub annihilated: bool,
    pub status: Status,
}

impl SpectrumReport {
    pub fn passed(&self) -> bool {
        self.status.is_pass()
    }

    /// Eigenvalues that actually occur, ascending.
    pub fn eigenvalues(&self) -> impl Iterator<Item = (&Rational, usize)> {
        self.lines.iter().filter(|l| l.multiplicity > 0).map(|l| (&l.eigenvalue, l.multiplicity))
    }

    pub fn min_eigenvalue(&self) -> Option<&Rational> {
        self.eigenvalues().map(|(v, _)| v).min()
    }
}

/// Decides how `W(n, m)` maps onto `E_{l,r}` from the sign of `D⁰` on the
/// constant spinors: `+3/2` on `W(0, 1)` is the `E_{1,0}` value.
pub fn resolve_labeling(store: &BlockStore) -> Result<Labeling, SphereError> {
    static RESOLVED: OnceLock<Labeling> = OnceLock::new();
    if let Some(l) = RESOLVED.get() {
        return Ok(*l);
    }
    let block = store.get(BlockKind::D0, 1, 0)?;
    let plus = Matrix::scalar_identity(2, &Scalar::real(q(3, 2)));
    let minus = Matrix::scalar_identity(2, &Scalar::real(q(-3, 2)));
    let labeling = if block.matrix == plus {
        Labeling::CombinedLeft
    } else if block.matrix == minus {
        Labeling::CombinedRight
    } else {
        return Err(SphereError::Internal("D0 on constant spinors is not ±3/2".into()));
    };
    Ok(*RESOLVED.get_or_init(|| labeling))
}

/// Candidate eigenvalues of `kind` on `W(n, m)` with predicted multiplicities
/// and the blocks they come from, ascending in eigenvalue.
pub fn predicted_spectrum(kind: BlockKind, m: u32, n: u32, labeling: Labeling) -> Result<Vec<SpectrumLine>, SphereError> {
    if !kind.is_square() {
        return Err(SphereError::Precondition(format!("{kind} is not an endomorphism; it has no spectrum")));
    }
    let mut map: BTreeMap<Rational, (usize, Vec<String>)> = BTreeMap::new();
    for b in blocks_of(m, n, labeling) {
        let value = match kind {
            BlockKind::ZSquaredSum => z_squared_value(n),
            _ => closed_form(kind, m, b).expect("square kinds have closed forms"),
        };
        let slot = map.entry(value).or_default();
        slot.0 += b.dim();
        slot.1.push(b.to_string());
    }
    Ok(map
        .into_iter()
        .map(|(eigenvalue, (predicted, blocks))| SpectrumLine { eigenvalue, multiplicity: 0, predicted, blocks })
        .collect())
}

/// Exact spectrum of `kind` on `W(n, m)` against the closed forms.
///
/// Each candidate's multiplicity is `nullity(A - λ)`; the report passes when
/// every multiplicity matches its prediction, they add up to `dim W(n, m)`,
/// and the product of `A - λ` over the candidates vanishes. No eigensolver is
/// involved, so a wrong closed form shows up as missing mass.
pub fn spectrum_block(store: &BlockStore, kind: BlockKind, m: u32, n: u32) -> Result<SpectrumReport, SphereError> {
    let labeling = resolve_labeling(store)?;
    let mut lines = predicted_spectrum(kind, m, n, labeling)?;
    let block = store.get(kind, m as i64, n)?;
    let a = &block.matrix;
    for line in &mut lines {
        line.multiplicity = a.shift(&Scalar::real(line.eigenvalue.clone())).block_nullity();
    }
    let accounted = lines.iter().map(|l| l.multiplicity).sum();
    let annihilated = Matrix::joint_components(&[a]).iter().all(|idx| {
        let sub = a.submatrix(idx, idx);
        let mut prod = Matrix::identity(idx.len());
        for line in &lines {
            if prod.is_zero() {
                break;
            }
            prod = &prod * &sub.shift(&Scalar::real(line.eigenvalue.clone()));
        }
        prod.is_zero()
    });
    let dimension = block.domain.dim();
    let ok = annihilated && accounted == dimension && lines.iter().all(|l| l.multiplicity == l.predicted);
    Ok(SpectrumReport {
        operator: kind,
        m,
        n,
        labeling,
        dimension,
        lines,
        accounted,
        annihilated,
        status: Status::from_bool(ok),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn store() -> &'static BlockStore {
        BlockStore::global()
    }

    fn lines(r: &SpectrumReport) -> Vec<(String, usize)> {
        r.eigenvalues().map(|(v, k)| (v.to_string(), k)).collect()
    }

    #[test]
    fn labeling_is_combined_left() {
        assert_eq!(resolve_labeling(store()).unwrap(), Labeling::CombinedLeft);
    }

    #[test]
    fn dirac_spin_half_degree_one() {
        let r = spectrum_block(store(), BlockKind::D0, 1, 1).unwrap();
        assert!(r.passed());
        assert_eq!(lines(&r), vec![("-3/2".into(), 2), ("5/2".into(), 6)]);
    }

    #[test]
    fn spin_one_small_degrees() {
        let r = spectrum_block(store(), BlockKind::D0, 2, 0).unwrap();
        assert_eq!(lines(&r), vec![("4".into(), 3)]);
        let r = spectrum_block(store(), BlockKind::D0, 2, 1).unwrap();
        assert!(r.passed());
        assert_eq!(lines(&r), vec![("0".into(), 4), ("6".into(), 8)]);
    }

    #[test]
    fn z_squared_is_scalar() {
        let r = spectrum_block(store(), BlockKind::ZSquaredSum, 1, 2).unwrap();
        assert!(r.passed());
        assert_eq!(lines(&r), vec![("-8".into(), 18)]);
    }

    #[test]
    fn first_order_kinds_have_no_spectrum() {
        assert!(matches!(spectrum_block(store(), BlockKind::Dplus, 1, 1), Err(SphereError::Precondition(_))));
    }
}
