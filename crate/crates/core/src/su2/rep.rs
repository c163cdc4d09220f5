use num_bigint::BigInt;

use crate::exact::{q, Matrix, Rational, Scalar};

use super::{GroupElement, LieVector};

/// The spin-`m/2` representation space `V_m`: polynomials of degree `≤ m` in
/// one variable, with basis `z^0 … z^m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RepSpace {
    pub m: u32,
}

impl RepSpace {
    pub fn new(m: u32) -> Self {
        RepSpace { m }
    }

    pub fn dim(&self) -> usize {
        self.m as usize + 1
    }

    pub fn gram(&self) -> Matrix {
        gram_matrix(self.m)
    }
}

/// Dimension of `V_m`, with `V_m = 0` for negative `m`.
pub fn rep_dim(m: i64) -> usize {
    if m < 0 {
        0
    } else {
        m as usize + 1
    }
}

pub(crate) fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

/// `diag(k!(m-k)!)`: the Gram matrix of the `z`-basis, which makes
/// `z^k / √(k!(m-k)!)` orthonormal.
pub fn gram_matrix(m: u32) -> Matrix {
    Matrix::diag((0..=m).map(|k| Scalar::real(Rational::from(factorial(k) * factorial(m - k)))).collect())
}

/// `ρ_m((σ₂ - iσ₃)/2)`: `z^k ↦ (m-k) z^{k+1}`.
pub fn raising(m: u32) -> Matrix {
    let n = m as usize + 1;
    Matrix::from_fn(n, n, |i, j| if i == j + 1 { Scalar::int((m as usize - j) as i64) } else { Scalar::zero() })
}

/// `ρ_m((σ₂ + iσ₃)/2)`: `z^k ↦ -k z^{k-1}`.
pub fn lowering(m: u32) -> Matrix {
    let n = m as usize + 1;
    Matrix::from_fn(n, n, |i, j| if i + 1 == j { Scalar::int(-(j as i64)) } else { Scalar::zero() })
}

/// `ρ_m(σ_{index+1})` in the `z`-basis.
pub fn rep_generator(m: u32, index: usize) -> Matrix {
    match index {
        // ρ(σ₁/2) z^k = i(k - m/2) z^k
        0 => Matrix::diag((0..=m as i64).map(|k| Scalar::gauss(0, 2 * k - m as i64)).collect()),
        1 => &lowering(m) + &raising(m),
        2 => (&lowering(m) - &raising(m)).scale(&-Scalar::i()),
        _ => panic!("generator index must be 0, 1 or 2"),
    }
}

/// Infinitesimal action `ρ_m(X)` on `V_m`, complex-linear in `X`.
pub fn rep_infinitesimal(m: u32, x: &LieVector) -> Matrix {
    let n = m as usize + 1;
    (0..3)
        .filter(|&i| !x.coords[i].is_zero())
        .fold(Matrix::zeros(n, n), |acc, i| &acc + &rep_generator(m, i).scale(&x.coords[i]))
}

fn poly_mul(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    out
}

/// Group action `ρ_m(g) z^k = (b z + d)^{m-k} (a z + c)^k`; column `k` holds
/// the expanded coefficients.
pub fn rep_group(m: u32, g: &GroupElement) -> Matrix {
    let n = m as usize + 1;
    let lin1 = [g.d().clone(), g.b().clone()];
    let lin2 = [g.c().clone(), g.a().clone()];
    let mut columns = Vec::with_capacity(n);
    for k in 0..=m {
        let mut p = vec![Scalar::one()];
        for _ in 0..m - k {
            p = poly_mul(&p, &lin1);
        }
        for _ in 0..k {
            p = poly_mul(&p, &lin2);
        }
        columns.push(Matrix::column_vector(p));
    }
    Matrix::from_columns(n, &columns)
}

/// `-Σ_i ρ_m(σ_i)²`, which equals `m(m+2)` times the identity.
pub fn casimir(m: u32) -> Matrix {
    let n = m as usize + 1;
    let sum = (0..3).fold(Matrix::zeros(n, n), |acc, i| {
        let g = rep_generator(m, i);
        &acc + &(&g * &g)
    });
    -&sum
}

/// `(ρ_m ⊗ ρ_n)(X) = ρ_m(X) ⊗ 1 + 1 ⊗ ρ_n(X)` on `V_m ⊗ V_n`, index `a(n+1)+b`.
pub fn tensor_action(a: &Matrix, b: &Matrix) -> Matrix {
    &a.kron(&Matrix::identity(b.rows())) + &Matrix::identity(a.rows()).kron(b)
}

/// `m(m+2)` as a rational.
pub fn casimir_value(m: u32) -> Rational {
    q(m as i64 * (m as i64 + 2), 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::su2::pauli;

    fn half(x: LieVector) -> LieVector {
        x.scale(&Scalar::real(q(1, 2)))
    }

    #[test]
    fn sigma1_half_at_m2() {
        let m = rep_infinitesimal(2, &half(LieVector::e1()));
        assert_eq!(m, Matrix::diag(vec![Scalar::gauss(0, -1), Scalar::zero(), Scalar::gauss(0, 1)]));
    }

    #[test]
    fn trivial_representation_is_zero() {
        let x = LieVector::new(Scalar::int(1), Scalar::gauss(2, 1), Scalar::int(-4));
        assert_eq!(rep_infinitesimal(0, &x), Matrix::zeros(1, 1));
    }

    #[test]
    fn raising_and_lowering_match_generators() {
        for m in 0..6 {
            let i_half = Scalar::new(q(0, 1), q(1, 2));
            let h = Scalar::real(q(1, 2));
            let s2 = rep_generator(m, 1);
            let s3 = rep_generator(m, 2);
            assert_eq!(&s2.scale(&h) - &s3.scale(&i_half), raising(m));
            assert_eq!(&s2.scale(&h) + &s3.scale(&i_half), lowering(m));
        }
    }

    #[test]
    fn bracket_is_preserved() {
        // [σ₂/2, σ₃/2] = σ₁/2
        for m in 0..=10 {
            let (x, y) = (half(LieVector::e2()), half(LieVector::e3()));
            let lhs = rep_infinitesimal(m, &x.bracket(&y));
            let (a, b) = (rep_infinitesimal(m, &x), rep_infinitesimal(m, &y));
            assert_eq!(lhs, &(&a * &b) - &(&b * &a), "m = {m}");
        }
    }

    #[test]
    fn gram_values() {
        assert_eq!(gram_matrix(0), Matrix::identity(1));
        assert_eq!(gram_matrix(1), Matrix::identity(2));
        assert_eq!(gram_matrix(3), Matrix::diag([6, 2, 2, 6].map(Scalar::int).to_vec()));
    }

    #[test]
    fn casimir_values() {
        assert_eq!(casimir(0), Matrix::zeros(1, 1));
        assert_eq!(casimir(1), Matrix::scalar_identity(2, &Scalar::int(3)));
        assert_eq!(casimir(3), Matrix::scalar_identity(4, &Scalar::int(15)));
    }

    #[test]
    fn group_identity_and_spin_half() {
        for m in 0..5 {
            assert!(rep_group(m, &GroupElement::identity()).is_identity());
        }
        for g in GroupElement::test_set() {
            let r = rep_group(1, &g);
            let expected = Matrix::from_rows(vec![
                vec![g.d().clone(), g.c().clone()],
                vec![g.b().clone(), g.a().clone()],
            ]);
            assert_eq!(r, expected);
            // equivalent to the defining representation through the flip J
            let j = Matrix::from_rows(vec![vec![Scalar::zero(), Scalar::one()], vec![Scalar::one(), Scalar::zero()]]);
            assert_eq!(r, &(&j * g.matrix()) * &j);
        }
    }

    #[test]
    fn spin_one_with_rational_element_is_gram_unitary() {
        let g = GroupElement::from_ab(Scalar::real(q(3, 5)), Scalar::real(q(4, 5))).unwrap();
        let r = rep_group(2, &g);
        // column 0 = (b z + d)^2 with b = 4/5, d = 3/5
        assert_eq!(*r.get(0, 0), Scalar::real(q(9, 25)));
        assert_eq!(*r.get(1, 0), Scalar::real(q(24, 25)));
        assert_eq!(*r.get(2, 0), Scalar::real(q(16, 25)));
        let gm = gram_matrix(2);
        assert_eq!(&(&r.conj_transpose() * &gm) * &r, gm);
    }

    #[test]
    fn pauli_squares_are_minus_identity() {
        for i in 0..3 {
            assert_eq!(&pauli(i) * &pauli(i), Matrix::scalar_identity(2, &Scalar::int(-1)));
        }
    }
}
