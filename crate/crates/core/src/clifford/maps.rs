use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact::{Matrix, Scalar};
use crate::su2::{rep_dim, LieVector};

/// Which summand of `V_m ⊗ V_2 = V_{m+2} ⊕ V_m ⊕ V_{m-2}` a Clifford map lands in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CliffordKind {
    Zero,
    Plus,
    Minus,
}

impl CliffordKind {
    pub const ALL: [CliffordKind; 3] = [CliffordKind::Zero, CliffordKind::Plus, CliffordKind::Minus];

    /// Target spin for source spin `m` (negative means the zero space).
    pub fn target(self, m: i64) -> i64 {
        match self {
            CliffordKind::Zero => m,
            CliffordKind::Plus => m + 2,
            CliffordKind::Minus => m - 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CliffordKind::Zero => "zero",
            CliffordKind::Plus => "plus",
            CliffordKind::Minus => "minus",
        }
    }
}

impl fmt::Display for CliffordKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Matrix of `ρ_m^kind(X)` for a fixed direction `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordMap {
    pub kind: CliffordKind,
    pub m: u32,
    pub x: LieVector,
    pub matrix: Matrix,
}

impl CliffordMap {
    /// Target spin, `None` when the target is the zero space.
    pub fn target_spin(&self) -> Option<u32> {
        u32::try_from(self.kind.target(self.m as i64)).ok()
    }

    /// Applies the map to a coordinate vector in the `z`-basis of `V_m`.
    pub fn apply(&self, v: &Matrix) -> Matrix {
        &self.matrix * v
    }
}

/// The three generator images `ρ(e₁/2)`, `ρ(e₂/2 + i e₃/2)`, `ρ(e₂/2 - i e₃/2)`
/// as (target index, coefficient) for the source vector `z^k`.
type Image = Option<(i64, Scalar)>;

fn generator_images(kind: CliffordKind, m: i64, k: i64) -> [Image; 3] {
    let c = |t: i64, s: Scalar| if s.is_zero() { None } else { Some((t, s)) };
    match kind {
        CliffordKind::Zero => [
            // i(k - m/2) z^k, stored doubled to stay integral and halved below
            c(k, Scalar::gauss(0, 2 * k - m)),
            c(k - 1, Scalar::int(-k)),
            c(k + 1, Scalar::int(m - k)),
        ],
        CliffordKind::Plus => [c(k + 1, Scalar::gauss(0, 1)), c(k, Scalar::int(-1)), c(k + 2, Scalar::int(-1))],
        CliffordKind::Minus => [
            c(k - 1, Scalar::gauss(0, k * (m - k))),
            c(k - 2, Scalar::int(k * (k - 1))),
            c(k, Scalar::int((m - k) * (m - k - 1))),
        ],
    }
}

/// `ρ_m^kind(e_{index+1})`, allowing degenerate (negative) spins for the zero space.
///
/// The explicit formulas are stated on `e₁/2` and `e₂/2 ± i e₃/2`; the basis
/// images follow from `e₁ = 2·(e₁/2)`, `e₂ = P + Q`, `e₃ = -i(P - Q)` with
/// `P, Q` the two complex combinations.
pub fn clifford_generator(kind: CliffordKind, m: i64, index: usize) -> Matrix {
    let target = kind.target(m);
    let (rows, cols) = (rep_dim(target), rep_dim(m));
    let mut data = vec![Scalar::zero(); rows * cols];
    for k in 0..cols as i64 {
        let [a, p, qq] = generator_images(kind, m, k);
        let mut put = |img: &Image, weight: &Scalar| {
            if let Some((t, s)) = img {
                assert!(
                    (0..rows as i64).contains(t),
                    "nonzero coefficient outside target space: kind {kind}, m {m}, k {k}"
                );
                let slot = &mut data[*t as usize * cols + k as usize];
                *slot += &(s * weight);
            }
        };
        match index {
            0 => {
                let w = if kind == CliffordKind::Zero { Scalar::one() } else { Scalar::int(2) };
                put(&a, &w);
            }
            1 => {
                put(&p, &Scalar::one());
                put(&qq, &Scalar::one());
            }
            2 => {
                put(&p, &-Scalar::i());
                put(&qq, &Scalar::i());
            }
            _ => panic!("generator index must be 0, 1 or 2"),
        }
    }
    Matrix::new(rows, cols, data)
}

/// `ρ_m^kind(X)` by complex-linear extension, degenerate spins allowed.
pub fn clifford_matrix(kind: CliffordKind, m: i64, x: &LieVector) -> Matrix {
    let (rows, cols) = (rep_dim(kind.target(m)), rep_dim(m));
    (0..3)
        .filter(|&i| !x.coords[i].is_zero())
        .fold(Matrix::zeros(rows, cols), |acc, i| &acc + &clifford_generator(kind, m, i).scale(&x.coords[i]))
}

pub fn clifford_map(kind: CliffordKind, m: u32, x: &LieVector) -> CliffordMap {
    CliffordMap { kind, m, x: x.clone(), matrix: clifford_matrix(kind, m as i64, x) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;
    use crate::su2::rep_infinitesimal;

    fn zk(m: usize, k: usize) -> Matrix {
        Matrix::from_fn(m + 1, 1, |i, _| if i == k { Scalar::one() } else { Scalar::zero() })
    }

    #[test]
    fn zero_kind_at_spin_half() {
        let map = clifford_map(CliffordKind::Zero, 1, &LieVector::e1());
        assert_eq!(map.matrix, Matrix::diag(vec![Scalar::gauss(0, -1), Scalar::gauss(0, 1)]));
    }

    #[test]
    fn plus_kind_lowering_combination() {
        let half = Scalar::real(q(1, 2));
        let x = &LieVector::e2().scale(&half) + &LieVector::e3().scale(&Scalar::new(q(0, 1), q(1, 2)));
        let map = clifford_map(CliffordKind::Plus, 0, &x);
        assert_eq!(map.apply(&zk(0, 0)), zk(2, 0).scale(&Scalar::int(-1)));
        assert_eq!(map.target_spin(), Some(2));
    }

    #[test]
    fn minus_kind_e1_half() {
        let x = LieVector::e1().scale(&Scalar::real(q(1, 2)));
        let map = clifford_map(CliffordKind::Minus, 2, &x);
        assert_eq!(map.apply(&zk(2, 1)), Matrix::column_vector(vec![Scalar::gauss(0, 1)]));
    }

    #[test]
    fn minus_kind_below_two_is_zero_space() {
        for m in 0..2 {
            let map = clifford_map(CliffordKind::Minus, m, &LieVector::e1());
            assert_eq!(map.matrix.shape(), (0, m as usize + 1));
            assert_eq!(map.target_spin(), None);
        }
    }

    #[test]
    fn zero_kind_is_the_representation() {
        for m in 0..8 {
            for i in 0..3 {
                let x = LieVector::basis(i);
                assert_eq!(clifford_map(CliffordKind::Zero, m, &x).matrix, rep_infinitesimal(m, &x));
            }
        }
    }

    #[test]
    fn degenerate_source_has_no_columns() {
        assert_eq!(clifford_generator(CliffordKind::Plus, -1, 0).shape(), (2, 0));
        assert_eq!(clifford_generator(CliffordKind::Plus, -2, 0).shape(), (1, 0));
    }
}
