use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use super::Rational;

/// Complex number with exact rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Scalar {
    pub re: Rational,
    pub im: Rational,
}

impl Scalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::real(Rational::one())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::new(Rational::zero(), Rational::one())
    }

    pub fn real(re: Rational) -> Self {
        Scalar::new(re, Rational::zero())
    }

    pub fn imag(im: Rational) -> Self {
        Scalar::new(Rational::zero(), im)
    }

    pub fn int(n: i64) -> Self {
        Scalar::real(n.into())
    }

    /// `re + i·im` from machine integers.
    pub fn gauss(re: i64, im: i64) -> Self {
        Scalar::new(re.into(), im.into())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar::new(self.re.clone(), -&self.im)
    }

    /// `|z|² = re² + im²`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr().recip()?;
        Some(Scalar::new(&self.re * &n, -(&self.im * &n)))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Scalar::new(&self.re * r, &self.im * r)
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Self {
        Scalar::new(-&self.im, self.re.clone())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::real(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::real(&self.re * &rhs.re);
        }
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        let inv = rhs.inv().expect("complex division by zero");
        self * &inv
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: Scalar) -> Scalar {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: &Scalar) -> Scalar {
                (&self).$f(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $f(self, rhs: Scalar) -> Scalar {
                self.$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-&self.re, -&self.im)
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::zero(), |mut a, b| {
            a += &b;
            a
        })
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) if self.im.is_negative() => write!(f, "{}-{}i", self.re, -&self.im),
            (false, false) => write!(f, "{}+{}i", self.re, self.im),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn field_ops() {
        let a = Scalar::new(q(1, 2), q(-3, 4));
        let b = Scalar::gauss(2, 1);
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(&a * &a.inv().unwrap(), Scalar::one());
        assert_eq!(Scalar::i().pow(2), Scalar::int(-1));
        assert_eq!(a.mul_i(), &a * &Scalar::i());
        assert_eq!(a.conj().conj(), a);
        assert_eq!(a.norm_sqr(), q(13, 16));
        assert!(Scalar::zero().inv().is_none());
    }

    #[test]
    fn serde_shape() {
        let s = Scalar::new(q(1, 2), q(-3, 1));
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"re":"1/2","im":"-3"}"#);
        assert_eq!(serde_json::from_str::<Scalar>(&json).unwrap(), s);
    }

    #[test]
    fn display() {
        assert_eq!(Scalar::gauss(0, -1).to_string(), "-1i");
        assert_eq!(Scalar::gauss(2, -1).to_string(), "2-1i");
        assert_eq!(Scalar::gauss(2, 0).to_string(), "2");
    }
}
