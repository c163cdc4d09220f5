use crate::exact::{Poly4, Scalar};
use crate::su2::LieVector;

use super::maps::{clifford_generator, clifford_matrix, CliffordKind};

/// `det ρ_m⁰(ξ)` for a concrete direction.
pub fn symbol_det(m: u32, xi: &LieVector) -> Scalar {
    clifford_matrix(CliffordKind::Zero, m as i64, xi).determinant()
}

/// `det ρ_m⁰(ξ)` as a polynomial in `ξ₁, ξ₂, ξ₃` (the first three variables of
/// [`Poly4`]).
///
/// `ρ_m⁰(ξ)` is tridiagonal in the `z`-basis, so the determinant follows from
/// the three-term continuant recurrence.
pub fn symbol_det_poly(m: u32) -> Poly4 {
    let gens = [0, 1, 2].map(|i| clifford_generator(CliffordKind::Zero, m as i64, i));
    let entry = |r: usize, c: usize| {
        (0..3).fold(Poly4::zero(), |acc, i| &acc + &Poly4::var(i).scale(gens[i].get(r, c)))
    };
    let n = m as usize + 1;
    for r in 0..n {
        for c in 0..n {
            assert!(r.abs_diff(c) <= 1 || entry(r, c).is_zero(), "symbol matrix must be tridiagonal");
        }
    }
    let (mut prev, mut cur) = (Poly4::one(), entry(0, 0));
    for k in 1..n {
        let next = &(&entry(k, k) * &cur) - &(&(&entry(k - 1, k) * &entry(k, k - 1)) * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// `(ξ₁² + ξ₂² + ξ₃²)^{(m+1)/2} · Π_k i(2k - m)` for odd `m`, zero for even `m`.
pub fn symbol_det_expected(m: u32) -> Poly4 {
    if m.is_multiple_of(2) {
        return Poly4::zero();
    }
    let norm = (0..3).fold(Poly4::zero(), |acc, i| &acc + &Poly4::var(i).pow(2));
    let c = (0..=m as i64).fold(Scalar::one(), |acc, k| &acc * &Scalar::gauss(0, 2 * k - m as i64));
    norm.pow(m.div_ceil(2)).scale(&c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin_half_at_e1() {
        assert_eq!(symbol_det(1, &LieVector::e1()), Scalar::one());
    }

    #[test]
    fn even_spin_vanishes() {
        let xi = LieVector::new(Scalar::int(1), Scalar::int(-2), Scalar::int(5));
        assert!(symbol_det(2, &xi).is_zero());
        assert!(symbol_det_poly(4).is_zero());
    }

    #[test]
    fn spin_three_halves_at_0_3_4() {
        let xi = LieVector::new(Scalar::zero(), Scalar::int(3), Scalar::int(4));
        assert_eq!(symbol_det(3, &xi), Scalar::int(625 * 9));
    }

    #[test]
    fn polynomial_matches_for_small_odd() {
        for m in [1, 3, 5] {
            assert_eq!(symbol_det_poly(m), symbol_det_expected(m));
        }
    }

    #[test]
    fn polynomial_agrees_with_pointwise_determinant() {
        let xi = LieVector::new(Scalar::int(2), Scalar::gauss(1, 1), Scalar::int(-3));
        for m in 0..6 {
            let p = symbol_det_poly(m);
            let point = [xi.coords[0].clone(), xi.coords[1].clone(), xi.coords[2].clone(), Scalar::zero()];
            assert_eq!(p.evaluate(&point), symbol_det(m, &xi), "m = {m}");
        }
    }
}
