use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// An Eisenstein integer `a + b w` with `w^2 + w + 1 = 0`.
///
/// The pair `(a, b)` is a free coordinate system, so structural equality is
/// ring equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EisensteinInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl EisensteinInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    /// The primitive cube root of unity `w`.
    pub fn alpha() -> Self {
        Self::new(0, 1)
    }

    /// `w^k`, reduced modulo 3 in the exponent.
    pub fn alpha_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Self::one(),
            1 => Self::alpha(),
            _ => Self::new(-1, -1),
        }
    }

    /// The prime `1 - w` of norm 3.
    pub fn lambda() -> Self {
        Self::new(1, -1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Complex conjugation, `w -> w^2 = -1 - w`.
    pub fn conj(&self) -> Self {
        Self {
            a: &self.a - &self.b,
            b: -&self.b,
        }
    }

    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self {
            a: &self.a * k,
            b: &self.b * k,
        }
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let n = d.norm();
        let t = self * &d.conj();
        if t.a.is_multiple_of(&n) && t.b.is_multiple_of(&n) {
            Some(Self {
                a: t.a / &n,
                b: t.b / n,
            })
        } else {
            None
        }
    }

    /// True iff this is one of the six units `+-1, +-w, +-w^2`.
    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// gcd of the two coordinates (the content).
    pub fn content(&self) -> BigInt {
        self.a.gcd(&self.b)
    }
}

impl fmt::Display for EisensteinInt {
    /// Renders in the `w` syntax accepted by the form parser, e.g. `2-3*w`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write_w_term(f, &self.b, true),
            (false, false) => {
                write!(f, "{}", self.a)?;
                write_w_term(f, &self.b, false)
            }
        }
    }
}

fn write_w_term(f: &mut fmt::Formatter<'_>, b: &BigInt, leading: bool) -> fmt::Result {
    let sign = if b.is_negative() {
        "-"
    } else if leading {
        ""
    } else {
        "+"
    };
    let mag = b.abs();
    if mag.is_one() {
        write!(f, "{sign}w")
    } else {
        write!(f, "{sign}{mag}*w")
    }
}

impl From<i64> for EisensteinInt {
    fn from(a: i64) -> Self {
        Self::new(a, 0)
    }
}

impl From<BigInt> for EisensteinInt {
    fn from(a: BigInt) -> Self {
        Self { a, b: BigInt::zero() }
    }
}

impl Add<&EisensteinInt> for &EisensteinInt {
    type Output = EisensteinInt;
    fn add(self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub<&EisensteinInt> for &EisensteinInt {
    type Output = EisensteinInt;
    fn sub(self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Mul<&EisensteinInt> for &EisensteinInt {
    type Output = EisensteinInt;
    fn mul(self, rhs: &EisensteinInt) -> EisensteinInt {
        // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, with w^2 = -1 - w
        let bd = &self.b * &rhs.b;
        EisensteinInt {
            a: &self.a * &rhs.a - &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a - bd,
        }
    }
}

impl Neg for &EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Neg for EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt { a: -self.a, b: -self.b }
    }
}

impl AddAssign<&EisensteinInt> for EisensteinInt {
    fn add_assign(&mut self, rhs: &EisensteinInt) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { (&self).$m(&rhs) }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty { (&self).$m(rhs) }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { self.$m(&rhs) }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(EisensteinInt, Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: i64, b: i64) -> EisensteinInt {
        EisensteinInt::new(a, b)
    }

    #[test]
    fn alpha_squared_is_minus_one_minus_alpha() {
        let w = EisensteinInt::alpha();
        assert_eq!(&w * &w, e(-1, -1));
        assert_eq!(&(&w * &w) * &w, e(1, 0));
    }

    #[test]
    fn norm_of_lambda_times_conjugate() {
        // (1 - w)(1 - w^2) = (1 - w)(2 + w) = 3
        assert_eq!(e(1, -1) * e(2, 1), e(3, 0));
        assert_eq!(e(1, -1).norm(), BigInt::from(3));
    }

    #[test]
    fn one_plus_alpha_squared() {
        // (1 + w)^2 = 1 + 2w + w^2 = w
        assert_eq!(e(1, 1) * e(1, 1), e(0, 1));
    }

    #[test]
    fn small_norms() {
        assert_eq!(e(0, 0).norm(), BigInt::from(0));
        assert_eq!(e(2, 0).norm(), BigInt::from(4));
        assert!(e(-1, -1).is_unit());
    }

    #[test]
    fn exact_division() {
        assert_eq!(e(3, 0).div_exact(&e(1, -1)), Some(e(2, 1)));
        assert_eq!(e(5, 0).div_exact(&e(1, -1)), None);
        assert_eq!(e(1, 0).div_exact(&e(0, 0)), None);
    }

    #[test]
    fn display() {
        assert_eq!(e(1, -1).to_string(), "1-w");
        assert_eq!(e(0, 1).to_string(), "w");
        assert_eq!(e(0, -3).to_string(), "-3*w");
        assert_eq!(e(-2, 0).to_string(), "-2");
        assert_eq!(e(2, 5).to_string(), "2+5*w");
    }
}
