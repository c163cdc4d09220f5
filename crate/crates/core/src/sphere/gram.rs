use num_bigint::BigInt;

use crate::exact::{Exponent, Matrix, Rational, Scalar};
use crate::su2::{factorial, gram_matrix};

use super::coeff::coeff_basis;
use super::SphereError;

/// L² Gram matrix of `W(n, m)` for the normalized measure on `S³`.
///
/// By Schur orthogonality `∫ f̄_ab f_a'b' = δ δ · g_b / (g_a (n+1))` with
/// `g_k = k!(n-k)!`, tensored with the Gram matrix of `V_m`.
pub fn block_gram(n: u32, m: u32) -> Matrix {
    let g = |k: u32| factorial(k) * factorial(n - k);
    let size = n + 1;
    let f = (0..size)
        .flat_map(|a| (0..size).map(move |b| (a, b)))
        .map(|(a, b)| Scalar::real(Rational::from(g(b)) / Rational::from(g(a) * BigInt::from(size))))
        .collect();
    Matrix::diag(f).kron(&gram_matrix(m))
}

fn double_factorial_odd(k: u32) -> BigInt {
    // (2k-1)!!
    (1..=k).fold(BigInt::from(1), |acc, j| acc * (2 * j - 1))
}

/// `∫_{S³} x^e` for the normalized measure: zero unless every exponent is even,
/// otherwise `Π(2β_i - 1)!! / Π_{j<|β|} (4 + 2j)` with `e = 2β`.
pub fn sphere_moment(e: &Exponent) -> Rational {
    if e.iter().any(|k| k % 2 == 1) {
        return Rational::zero();
    }
    let beta: Vec<u32> = e.iter().map(|k| k / 2).collect();
    let total: u32 = beta.iter().sum();
    let num = beta.iter().fold(BigInt::from(1), |acc, &b| acc * double_factorial_odd(b));
    let den = (0..total).fold(BigInt::from(1), |acc, j| acc * (4 + 2 * j));
    Rational::from(num) / Rational::from(den)
}

/// The function-space Gram matrix computed by integrating `f̄_r f_c` monomial
/// by monomial; an independent check of [`block_gram`] at `m = 0`.
pub fn gram_by_moments(n: u32) -> Result<Matrix, SphereError> {
    let basis = coeff_basis(n)?;
    let conj: Vec<_> = basis.entries.iter().map(|p| p.conj()).collect();
    let len = basis.len();
    Ok(Matrix::from_fn(len, len, |r, c| {
        let prod = &conj[r] * &basis.entries[c];
        prod.terms().fold(Scalar::zero(), |acc, (e, coef)| &acc + &coef.scale(&sphere_moment(e)))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn moments() {
        assert_eq!(sphere_moment(&[0; 4]), Rational::one());
        assert_eq!(sphere_moment(&[2, 0, 0, 0]), q(1, 4));
        assert_eq!(sphere_moment(&[4, 0, 0, 0]), q(1, 8));
        assert_eq!(sphere_moment(&[2, 2, 0, 0]), q(1, 24));
        assert_eq!(sphere_moment(&[1, 1, 0, 0]), Rational::zero());
    }

    #[test]
    fn small_grams() {
        assert_eq!(block_gram(0, 0), Matrix::identity(1));
        assert_eq!(block_gram(1, 0), Matrix::scalar_identity(4, &Scalar::real(q(1, 2))));
        assert_eq!(block_gram(1, 1), block_gram(1, 0).kron(&gram_matrix(1)));
    }

    #[test]
    fn schur_matches_moments() {
        for n in 0..=2 {
            assert_eq!(gram_by_moments(n).unwrap(), block_gram(n, 0), "n = {n}");
        }
    }
}
