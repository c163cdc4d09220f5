use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Rational, Scalar};

/// Exponent quadruple `(a₁, a₂, a₃, a₄)` of the monomial `x₁^a₁ x₂^a₂ x₃^a₃ x₄^a₄`.
pub type Exponent = [u32; 4];

/// Polynomial in `x₁ … x₄` with [`Scalar`] coefficients. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly4 {
    terms: BTreeMap<Exponent, Scalar>,
}

impl Poly4 {
    pub fn zero() -> Self {
        Poly4::default()
    }

    pub fn constant(c: Scalar) -> Self {
        Poly4::monomial([0; 4], c)
    }

    pub fn one() -> Self {
        Poly4::constant(Scalar::one())
    }

    pub fn monomial(exp: Exponent, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Poly4 { terms }
    }

    /// The coordinate `x_{index+1}` (zero-based index).
    pub fn var(index: usize) -> Self {
        let mut exp = [0; 4];
        exp[index] = 1;
        Poly4::monomial(exp, Scalar::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exponent, Scalar)>) -> Self {
        let mut p = Poly4::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    fn add_term(&mut self, exp: Exponent, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &Exponent) -> Scalar {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// True when every stored term has total degree `d` (the zero polynomial
    /// is homogeneous of every degree).
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Poly4::zero();
        }
        Poly4 { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    /// Coefficient-wise complex conjugation (the variables are real).
    pub fn conj(&self) -> Self {
        Poly4 { terms: self.terms.iter().map(|(e, v)| (*e, v.conj())).collect() }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Poly4::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to `x_{var+1}`.
    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Poly4::zero();
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut ne = *e;
            ne[var] -= 1;
            out.add_term(ne, &c.scale(&Rational::from(e[var])));
        }
        out
    }

    pub fn evaluate(&self, point: &[Scalar; 4]) -> Scalar {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut v = c.clone();
                for (x, &k) in point.iter().zip(e) {
                    v = &v * &x.pow(k);
                }
                v
            })
            .sum()
    }
}

impl Add<&Poly4> for &Poly4 {
    type Output = Poly4;
    fn add(self, rhs: &Poly4) -> Poly4 {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub<&Poly4> for &Poly4 {
    type Output = Poly4;
    fn sub(self, rhs: &Poly4) -> Poly4 {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Mul<&Poly4> for &Poly4 {
    type Output = Poly4;
    fn mul(self, rhs: &Poly4) -> Poly4 {
        let mut out = Poly4::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]];
                out.add_term(e, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &Poly4 {
    type Output = Poly4;
    fn neg(self) -> Poly4 {
        self.scale(&Scalar::int(-1))
    }
}

macro_rules! owned_poly_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<Poly4> for Poly4 {
            type Output = Poly4;
            fn $f(self, rhs: Poly4) -> Poly4 {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_poly_ops!(Add add, Sub sub, Mul mul);

impl fmt::Display for Poly4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, k) })
                    .collect();
                if mono.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Poly4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// First-order differential operator `Σ_j c_j(x) ∂/∂x_j` on [`Poly4`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorField {
    pub components: [Poly4; 4],
}

impl VectorField {
    pub fn new(components: [Poly4; 4]) -> Self {
        VectorField { components }
    }

    /// Field with linear coefficients: `c_j(x) = Σ_i coeffs[j][i] x_i`.
    pub fn linear(coeffs: [[i64; 4]; 4]) -> Self {
        let comp = |j: usize| {
            Poly4::from_terms((0..4).map(|i| {
                let mut e = [0; 4];
                e[i] = 1;
                (e, Scalar::int(coeffs[j][i]))
            }))
        };
        VectorField { components: [comp(0), comp(1), comp(2), comp(3)] }
    }

    pub fn apply(&self, p: &Poly4) -> Poly4 {
        apply_derivation(&self.components, p)
    }

    /// Invariant vector field on `S³ ⊂ ℝ⁴` attached to `σ_{index+1}`:
    ///
    /// ```text
    /// Z₁ = -x₁∂₄ + x₄∂₁ - x₃∂₂ + x₂∂₃
    /// Z₂ = -x₂∂₄ + x₃∂₁ + x₄∂₂ - x₁∂₃
    /// Z₃ = -x₃∂₄ - x₂∂₁ + x₁∂₂ + x₄∂₃
    /// ```
    pub fn sphere_field(index: usize) -> Self {
        // rows: coefficient of ∂_j as a linear form in (x₁, x₂, x₃, x₄)
        let coeffs = match index {
            0 => [[0, 0, 0, 1], [0, 0, -1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]],
            1 => [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]],
            2 => [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]],
            _ => panic!("sphere field index must be 0, 1 or 2"),
        };
        VectorField::linear(coeffs)
    }
}

/// Applies `Σ_j coeffs[j] · ∂p/∂x_j`.
pub fn apply_derivation(coeffs: &[Poly4; 4], p: &Poly4) -> Poly4 {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(Poly4::zero(), |acc, (j, c)| &acc + &(c * &p.derivative(j)))
}

/// `x₁² + x₂² + x₃² + x₄²`.
pub fn radius_squared() -> Poly4 {
    (0..4).fold(Poly4::zero(), |acc, i| &acc + &Poly4::var(i).pow(2))
}

/// Every exponent quadruple of total degree `d`, in ascending lexicographic order.
pub fn monomials_of_degree(d: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            for c in 0..=d - a - b {
                out.push([a, b, c, d - a - b - c]);
            }
        }
    }
    out.sort();
    out
}
