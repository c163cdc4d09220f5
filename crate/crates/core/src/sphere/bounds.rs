use serde::Serialize;

use crate::exact::{q, Matrix, Rational, Scalar};
use crate::report::Status;

use super::block::{BlockKind, BlockStore};
use super::spectrum::spectrum_block;
use super::SphereError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FriedrichCheck {
    pub value: Rational,
    pub bound: Rational,
    pub equality: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimizerCheck {
    /// Operator whose kernel must contain every minimizer.
    pub operator: BlockKind,
    pub degrees: Vec<u32>,
    pub vectors: usize,
    pub contained: bool,
}

/// First eigenvalues of `Δ_m` and `Δ̃_m` over degrees `n ≤ n_max` against
/// the curvature lower bounds with `r_{m±} = m(m+2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub m: u32,
    pub n_max: u32,
    pub lambda1: Rational,
    pub lambda_bound: Rational,
    pub lambda_equality: bool,
    pub mu1: Rational,
    /// `None` at `m = 0`, where the bound divides by `m`.
    pub mu_bound: Option<Rational>,
    pub friedrich: Option<FriedrichCheck>,
    pub minimizers: Option<MinimizerCheck>,
    pub spectra_complete: bool,
    pub status: Status,
}

/// `m(m+1)/(m+2) · m(m+2)`.
pub fn lambda_bound(m: u32) -> Rational {
    let m = m as i64;
    q(m * m * (m + 1), 1)
}

/// `-(m+2)(m+1)/m · m(m+2)`, undefined at `m = 0`.
pub fn mu_bound(m: u32) -> Option<Rational> {
    let m = m as i64;
    (m > 0).then(|| q(-(m + 2) * (m + 1) * m * (m + 2), m))
}

fn min_over(store: &BlockStore, kind: BlockKind, m: u32, n_max: u32) -> Result<(Rational, Vec<u32>, bool), SphereError> {
    let mut best: Option<Rational> = None;
    let mut at = Vec::new();
    let mut complete = true;
    for n in 0..=n_max {
        let s = spectrum_block(store, kind, m, n)?;
        complete &= s.passed();
        let Some(v) = s.min_eigenvalue().cloned() else { continue };
        match &best {
            Some(b) if &v > b => {}
            Some(b) if &v == b => at.push(n),
            _ => {
                best = Some(v);
                at = vec![n];
            }
        }
    }
    Ok((best.expect("degree 0 is always computed"), at, complete))
}

/// Checks `λ₁(Δ_m) ≥ m(m+1)/(m+2)·m(m+2)` and `μ₁(Δ̃_m) ≥ -(m+2)(m+1)/m·m(m+2)`.
///
/// For `m = 1` also the Friedrich form `λ₁ ≥ 3κ/8` with `κ = 6`; when a bound
/// is attained, the minimizing sections must be twistor spinors (`m = 1`) or
/// lie in `ker Δ̃_m` (`m ≥ 2`).
pub fn check_eigenvalue_bounds(store: &BlockStore, m: u32, n_max: u32) -> Result<BoundsReport, SphereError> {
    let (lambda1, at, lap_ok) = min_over(store, BlockKind::Lap, m, n_max)?;
    let (mu1, _, tilde_ok) = min_over(store, BlockKind::LapTilde, m, n_max)?;
    let bound = lambda_bound(m);
    let mu_b = mu_bound(m);
    let lambda_equality = lambda1 == bound;

    let friedrich = (m == 1).then(|| {
        let fb = &q(3, 8) * &q(6, 1);
        FriedrichCheck { equality: lambda1 == fb, value: lambda1.clone(), bound: fb }
    });

    let minimizers = if m >= 1 && (lambda_equality || friedrich.as_ref().is_some_and(|f| f.equality)) {
        let target = if m == 1 { BlockKind::Dplus } else { BlockKind::LapTilde };
        let mut vectors = 0;
        let mut contained = true;
        for &n in &at {
            let lap = &store.get(BlockKind::Lap, m as i64, n)?.matrix;
            let op = &store.get(target, m as i64, n)?.matrix;
            let eig: Vec<Matrix> = lap.shift(&Scalar::real(lambda1.clone())).block_nullspace();
            vectors += eig.len();
            contained &= eig.iter().all(|v| (op * v).is_zero());
        }
        Some(MinimizerCheck { operator: target, degrees: at.clone(), vectors, contained })
    } else {
        None
    };

    let ok = lap_ok
        && tilde_ok
        && lambda1 >= bound
        && mu_b.as_ref().is_none_or(|b| &mu1 >= b)
        && friedrich.as_ref().is_none_or(|f| f.value >= f.bound)
        && minimizers.as_ref().is_none_or(|c| c.contained && c.vectors > 0);
    Ok(BoundsReport {
        m,
        n_max,
        lambda1,
        lambda_bound: bound,
        lambda_equality,
        mu1,
        mu_bound: mu_b,
        friedrich,
        minimizers,
        spectra_complete: lap_ok && tilde_ok,
        status: Status::from_bool(ok),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin_half_friedrich_equality() {
        let r = check_eigenvalue_bounds(BlockStore::global(), 1, 3).unwrap();
        assert_eq!(r.lambda1, q(9, 4));
        assert_eq!(r.lambda_bound, q(2, 1));
        let f = r.friedrich.as_ref().unwrap();
        assert!(f.equality);
        assert!(r.minimizers.as_ref().unwrap().contained);
        assert!(r.status.is_pass());
    }

    #[test]
    fn spin_one_attains_bound() {
        let r = check_eigenvalue_bounds(BlockStore::global(), 2, 3).unwrap();
        assert_eq!(r.lambda1, q(12, 1));
        assert!(r.lambda_equality);
        let c = r.minimizers.as_ref().unwrap();
        assert_eq!(c.operator, BlockKind::LapTilde);
        assert!(c.contained);
    }

    #[test]
    fn mu_bound_undefined_at_zero() {
        assert_eq!(mu_bound(0), None);
        assert_eq!(mu_bound(1), Some(q(-18, 1)));
    }
}
