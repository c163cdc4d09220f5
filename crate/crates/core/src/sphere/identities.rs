use crate::exact::{gram_adjoint, Matrix, Rational, Scalar};
use crate::report::{zero_check, CheckEntry, VerificationReport};

use super::block::{BlockKind, BlockStore, SectionSpace};
use super::gram::{block_gram, gram_by_moments};
use super::SphereError;

const CURVATURE: &str = "constant curvature commutation";
const WEITZENBOCK: &str = "laplacians through invariant fields";
const SCALAR: &str = "scalar curvature relation";
const ADJOINT: &str = "formal adjointness on the sphere";
const GRAM: &str = "L2 gram cross-validation";

fn scalar(r: Rational, dim: usize) -> Matrix {
    Matrix::scalar_identity(dim, &Scalar::real(r))
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v)
}

/// Exact identities on `W(n, m)`:
///
/// * `D⁰_{m+2} D⁺_m = D⁺_m D⁰_m` and `D⁰_{m-2} D⁻_m = D⁻_m D⁰_m`,
/// * `Δ_m = -m² ΣZ² + m² D⁰ - m²(m+2)(m-2)/4`,
/// * `Δ̃_m = -(m+2)² ΣZ² + (m+2)² D⁰ - m(m+2)²(m+4)/4`,
/// * `(m+2)² Δ_m - m² Δ̃_m = m(m+1)(m+2) · m(m+2)`.
///
/// At `m = 0` the first identity is `d ∘ d = 0` on functions.
pub fn verify_s3_identities(store: &BlockStore, m: u32, n: u32) -> Result<VerificationReport, SphereError> {
    let mi = m as i64;
    let get = |k, mm: i64| store.get(k, mm, n);
    let dim = SectionSpace { n, m: mi }.dim();
    let entry = |check: &str, prov: &str| CheckEntry::new(check, prov).param("m", m).param("n", n);
    let mut report = VerificationReport::new("verify-s3");

    let d0 = get(BlockKind::D0, mi)?;
    let dp = get(BlockKind::Dplus, mi)?;
    let dm = get(BlockKind::Dminus, mi)?;
    let up = &(&get(BlockKind::D0, mi + 2)?.matrix * &dp.matrix) - &(&dp.matrix * &d0.matrix);
    let mut e = entry("commutation_plus", CURVATURE);
    if m == 0 {
        e = e.value("reads", "d∘d = 0");
    }
    report.push(zero_check(e, &up));
    let down = &(&get(BlockKind::D0, mi - 2)?.matrix * &dm.matrix) - &(&dm.matrix * &d0.matrix);
    report.push(zero_check(entry("commutation_minus", CURVATURE), &down));

    let zz = &get(BlockKind::ZSquaredSum, mi)?.matrix;
    let lap = &get(BlockKind::Lap, mi)?.matrix;
    let lap_t = &get(BlockKind::LapTilde, mi)?.matrix;
    let m2 = int(mi * mi);
    let p2 = int((mi + 2) * (mi + 2));
    let rhs = &(&zz.scale_rational(&-&m2) + &d0.matrix.scale_rational(&m2))
        - &scalar(&(&m2 * &int((mi + 2) * (mi - 2))) * &Rational::new(1, 4), dim);
    report.push(zero_check(entry("lap_formula", WEITZENBOCK), &(lap - &rhs)));
    let rhs = &(&zz.scale_rational(&-&p2) + &d0.matrix.scale_rational(&p2))
        - &scalar(&(&p2 * &int(mi * (mi + 4))) * &Rational::new(1, 4), dim);
    report.push(zero_check(entry("lap_tilde_formula", WEITZENBOCK), &(lap_t - &rhs)));

    let constant = int(mi * (mi + 1) * (mi + 2) * mi * (mi + 2));
    let lhs = &lap.scale_rational(&p2) - &lap_t.scale_rational(&m2);
    let e = entry("scalar_curvature", SCALAR).value("constant", constant.to_string());
    report.push(zero_check(e, &(&lhs - &scalar(constant, dim))));
    Ok(report)
}

/// `D⁰` is self-adjoint and `(D⁺_m)* = D⁻_{m+2}` for the L² Gram of `W(n, ·)`.
pub fn verify_adjoint_blocks(store: &BlockStore, m: u32, n: u32) -> Result<VerificationReport, SphereError> {
    let mi = m as i64;
    let g = block_gram(n, m);
    let g_up = block_gram(n, m + 2);
    let entry = |check: &str| CheckEntry::new(check, ADJOINT).param("m", m).param("n", n);
    let mut report = VerificationReport::new("verify-adjoint");
    let d0 = &store.get(BlockKind::D0, mi, n)?.matrix;
    let adj = gram_adjoint(d0, &g, &g).map_err(|e| SphereError::Internal(e.to_string()))?;
    report.push(zero_check(entry("adjoint_d0"), &(&adj - d0)));
    let dp = &store.get(BlockKind::Dplus, mi, n)?.matrix;
    let adj = gram_adjoint(dp, &g, &g_up).map_err(|e| SphereError::Internal(e.to_string()))?;
    let dm = &store.get(BlockKind::Dminus, mi + 2, n)?.matrix;
    report.push(zero_check(entry("adjoint_dplus"), &(&adj - dm)));
    Ok(report)
}

/// Schur-orthogonality Gram against direct monomial integration.
pub fn verify_gram(n: u32) -> Result<CheckEntry, SphereError> {
    let residual = &gram_by_moments(n)? - &block_gram(n, 0);
    Ok(zero_check(CheckEntry::new("gram_schur_vs_moments", GRAM).param("n", n), &residual))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin_half_identities() {
        for n in 0..=2 {
            let r = verify_s3_identities(BlockStore::global(), 1, n).unwrap();
            assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn exterior_derivative_squares_to_zero() {
        let r = verify_s3_identities(BlockStore::global(), 0, 1).unwrap();
        let e = r.find("commutation_plus").next().unwrap();
        assert!(e.passed());
    }

    #[test]
    fn spin_one_scalar_curvature_constant() {
        let r = verify_s3_identities(BlockStore::global(), 2, 1).unwrap();
        assert!(r.passed());
        assert_eq!(r.find("scalar_curvature").next().unwrap().values["constant"], "192");
    }

    #[test]
    fn adjointness_small() {
        for (m, n) in [(1, 0), (1, 1), (0, 2)] {
            assert!(verify_adjoint_blocks(BlockStore::global(), m, n).unwrap().passed());
        }
    }
}
