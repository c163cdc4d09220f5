use std::fmt;
use std::ops::{Add, Sub};

use crate::exact::{Matrix, Scalar};

/// The Pauli-type basis of `su(2)`:
///
/// ```text
/// σ₁ = [[i, 0], [0, -i]],  σ₂ = [[0, 1], [-1, 0]],  σ₃ = [[0, i], [i, 0]]
/// ```
///
/// `index` is zero-based.
pub fn pauli(index: usize) -> Matrix {
    let z = Scalar::zero;
    let rows = match index {
        0 => vec![vec![Scalar::i(), z()], vec![z(), -Scalar::i()]],
        1 => vec![vec![z(), Scalar::one()], vec![Scalar::int(-1), z()]],
        2 => vec![vec![z(), Scalar::i()], vec![Scalar::i(), z()]],
        _ => panic!("pauli index must be 0, 1 or 2"),
    };
    Matrix::from_rows(rows)
}

/// Element of `ℝ³ ⊗ ℂ ≅ su(2) ⊗ ℂ`, written in the basis `e₁, e₂, e₃`
/// identified with `σ₁, σ₂, σ₃`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LieVector {
    pub coords: [Scalar; 3],
}

impl LieVector {
    pub fn new(c1: Scalar, c2: Scalar, c3: Scalar) -> Self {
        LieVector { coords: [c1, c2, c3] }
    }

    pub fn zero() -> Self {
        LieVector::default()
    }

    /// Basis vector `e_{index+1}`.
    pub fn basis(index: usize) -> Self {
        let mut v = LieVector::zero();
        v.coords[index] = Scalar::one();
        v
    }

    pub fn e1() -> Self {
        LieVector::basis(0)
    }

    pub fn e2() -> Self {
        LieVector::basis(1)
    }

    pub fn e3() -> Self {
        LieVector::basis(2)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        LieVector { coords: self.coords.clone().map(|c| &c * s) }
    }

    /// `Σ c_i σ_i` as a 2×2 matrix.
    pub fn to_matrix(&self) -> Matrix {
        (0..3).fold(Matrix::zeros(2, 2), |acc, i| &acc + &pauli(i).scale(&self.coords[i]))
    }

    /// Inverse of [`LieVector::to_matrix`]; `None` unless `m` is a traceless 2×2 matrix.
    pub fn from_matrix(m: &Matrix) -> Option<Self> {
        if m.shape() != (2, 2) || !m.trace().is_zero() {
            return None;
        }
        // tr(σ_j* σ_k) = 2 δ_jk
        let half = Scalar::real(crate::exact::q(1, 2));
        let coords = [0, 1, 2].map(|j| &(&pauli(j).conj_transpose() * m).trace() * &half);
        Some(LieVector { coords })
    }

    /// `[X, Y]` computed from the 2×2 commutator of the matrix realizations.
    pub fn bracket(&self, other: &LieVector) -> LieVector {
        let (a, b) = (self.to_matrix(), other.to_matrix());
        LieVector::from_matrix(&(&(&a * &b) - &(&b * &a))).expect("commutators are traceless")
    }

    /// Complex-bilinear extension of the Euclidean pairing, `Σ c_i(X) c_i(Y)`.
    pub fn pairing(&self, other: &LieVector) -> Scalar {
        self.coords.iter().zip(&other.coords).map(|(a, b)| a * b).sum()
    }
}

impl Add<&LieVector> for &LieVector {
    type Output = LieVector;
    fn add(self, rhs: &LieVector) -> LieVector {
        LieVector { coords: [0, 1, 2].map(|i| &self.coords[i] + &rhs.coords[i]) }
    }
}

impl Sub<&LieVector> for &LieVector {
    type Output = LieVector;
    fn sub(self, rhs: &LieVector) -> LieVector {
        LieVector { coords: [0, 1, 2].map(|i| &self.coords[i] - &rhs.coords[i]) }
    }
}

impl fmt::Display for LieVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.coords[0], self.coords[1], self.coords[2])
    }
}

impl fmt::Debug for LieVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_of_basis_is_cyclic() {
        let two = Scalar::int(2);
        assert_eq!(LieVector::e1().bracket(&LieVector::e2()), LieVector::e3().scale(&two));
        assert_eq!(LieVector::e2().bracket(&LieVector::e3()), LieVector::e1().scale(&two));
        assert_eq!(LieVector::e3().bracket(&LieVector::e1()), LieVector::e2().scale(&two));
    }

    #[test]
    fn bracket_antisymmetry_and_jacobi() {
        let x = LieVector::new(Scalar::gauss(1, 2), Scalar::int(-3), Scalar::gauss(0, 1));
        let y = LieVector::new(Scalar::int(2), Scalar::gauss(1, -1), Scalar::int(5));
        let z = LieVector::new(Scalar::gauss(-1, 0), Scalar::int(4), Scalar::gauss(3, 3));
        assert_eq!(&x.bracket(&y) + &y.bracket(&x), LieVector::zero());
        let jac = &(&x.bracket(&y.bracket(&z)) + &y.bracket(&z.bracket(&x))) + &z.bracket(&x.bracket(&y));
        assert_eq!(jac, LieVector::zero());
    }

    #[test]
    fn matrix_round_trip() {
        let x = LieVector::new(Scalar::gauss(1, 2), Scalar::int(-3), Scalar::gauss(0, 1));
        assert_eq!(LieVector::from_matrix(&x.to_matrix()), Some(x));
        assert!(LieVector::from_matrix(&Matrix::identity(2)).is_none());
    }

    #[test]
    fn pairing_is_bilinear_not_sesquilinear() {
        let x = LieVector::e1().scale(&Scalar::i());
        assert_eq!(x.pairing(&x), Scalar::int(-1));
    }
}
