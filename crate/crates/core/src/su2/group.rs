use crate::exact::{q, Matrix, Scalar};

use super::GroupError;

/// Element of `SU(2)` with exact entries, `[[a, b], [-b̄, ā]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement(Matrix);

impl GroupElement {
    /// Validates that `m` is a unitary 2×2 matrix of determinant one.
    pub fn new(m: Matrix) -> Result<Self, GroupError> {
        if m.shape() != (2, 2) {
            return Err(GroupError::Shape(m.rows(), m.cols()));
        }
        if !(&m.conj_transpose() * &m).is_identity() {
            return Err(GroupError::NotUnitary);
        }
        if m.determinant() != Scalar::one() {
            return Err(GroupError::NotUnimodular);
        }
        Ok(GroupElement(m))
    }

    /// `[[a, b], [-b̄, ā]]`, requiring `|a|² + |b|² = 1`.
    pub fn from_ab(a: Scalar, b: Scalar) -> Result<Self, GroupError> {
        let m = Matrix::from_rows(vec![vec![a.clone(), b.clone()], vec![-b.conj(), a.conj()]]);
        GroupElement::new(m)
    }

    pub fn identity() -> Self {
        GroupElement(Matrix::identity(2))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn a(&self) -> &Scalar {
        self.0.get(0, 0)
    }

    pub fn b(&self) -> &Scalar {
        self.0.get(0, 1)
    }

    pub fn c(&self) -> &Scalar {
        self.0.get(1, 0)
    }

    pub fn d(&self) -> &Scalar {
        self.0.get(1, 1)
    }

    pub fn inverse(&self) -> Self {
        GroupElement(self.0.conj_transpose())
    }

    pub fn compose(&self, other: &GroupElement) -> Self {
        GroupElement(&self.0 * &other.0)
    }

    /// `g M g⁻¹` for a 2×2 matrix `M`.
    pub fn conjugate(&self, m: &Matrix) -> Matrix {
        &(&self.0 * m) * &self.0.conj_transpose()
    }

    /// Fixed probe set of exact unitary elements used for group-level identity
    /// testing.
    pub fn test_set() -> Vec<GroupElement> {
        let s = |re: (i64, i64), im: (i64, i64)| Scalar::new(q(re.0, re.1), q(im.0, im.1));
        [
            (Scalar::one(), Scalar::zero()),
            (Scalar::i(), Scalar::zero()),
            (Scalar::zero(), Scalar::one()),
            (s((3, 5), (0, 1)), s((4, 5), (0, 1))),
            (s((3, 5), (0, 1)), s((0, 1), (4, 5))),
            (s((1, 3), (2, 3)), s((2, 3), (0, 1))),
        ]
        .into_iter()
        .map(|(a, b)| GroupElement::from_ab(a, b).expect("test set elements are unitary"))
        .collect()
    }
}
