use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::eisenstein::{forward_owned, EisensteinInt};
use crate::error::{Error, Result};

/// An element `(a + b w) / den` of `Q(w)` kept in lowest terms with `den > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EisensteinRational {
    num: EisensteinInt,
    den: BigInt,
}

impl EisensteinRational {
    pub fn new(num: EisensteinInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: EisensteinInt, den: BigInt) -> Self {
        let (mut num, mut den) = if den.is_negative() { (-num, -den) } else { (num, den) };
        let g = num.content().gcd(&den);
        if !g.is_one() && !g.is_zero() {
            num = EisensteinInt {
                a: &num.a / &g,
                b: &num.b / &g,
            };
            den /= g;
        }
        if num.is_zero() {
            den = BigInt::one();
        }
        Self { num, den }
    }

    /// Builds `re + im_w * w` from two rational coordinates.
    pub fn from_coords(re: &BigRational, im_w: &BigRational) -> Self {
        let den = re.denom().lcm(im_w.denom());
        let a = re.numer() * (&den / re.denom());
        let b = im_w.numer() * (&den / im_w.denom());
        Self::normalized(EisensteinInt { a, b }, den)
    }

    pub fn zero() -> Self {
        EisensteinInt::zero().into()
    }

    pub fn one() -> Self {
        EisensteinInt::one().into()
    }

    pub fn alpha_pow(k: i64) -> Self {
        EisensteinInt::alpha_pow(k).into()
    }

    pub fn from_int(k: i64) -> Self {
        EisensteinInt::from(k).into()
    }

    pub fn numer(&self) -> &EisensteinInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// Membership in the order `Z[3w]`: integral with `w`-coefficient divisible by 3.
    pub fn in_order_three(&self) -> bool {
        self.is_integral() && self.num.b.is_multiple_of(&BigInt::from(3))
    }

    pub fn to_integer(&self) -> Option<EisensteinInt> {
        self.is_integral().then(|| self.num.clone())
    }

    /// Coefficient of `1` in the basis `{1, w}`.
    pub fn re_coord(&self) -> BigRational {
        BigRational::new(self.num.a.clone(), self.den.clone())
    }

    /// Coefficient of `w` in the basis `{1, w}`. For `z = a + b w` this is
    /// `(2/sqrt 3) Im z`, which is how imaginary parts are evaluated exactly.
    pub fn alpha_coeff(&self) -> BigRational {
        BigRational::new(self.num.b.clone(), self.den.clone())
    }

    pub fn conj(&self) -> Self {
        Self {
            num: self.num.conj(),
            den: self.den.clone(),
        }
    }

    pub fn norm(&self) -> BigRational {
        BigRational::new(self.num.norm(), &self.den * &self.den)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // 1/z = conj(z) / N(z); N(num/den) = N(num)/den^2
        let n = self.num.norm();
        Ok(Self::normalized(self.num.conj().scale(&self.den), n))
    }

    /// The real number represented, if the `w`-coefficient vanishes.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.num.b.is_zero().then(|| self.re_coord())
    }
}

impl From<EisensteinInt> for EisensteinRational {
    fn from(num: EisensteinInt) -> Self {
        Self {
            num,
            den: BigInt::one(),
        }
    }
}

impl From<BigRational> for EisensteinRational {
    fn from(q: BigRational) -> Self {
        Self::from_coords(&q, &BigRational::zero())
    }
}

impl fmt::Display for EisensteinRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.b.is_zero() {
            write!(f, "{}/{}", self.num.a, self.den)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}

impl Add<&EisensteinRational> for &EisensteinRational {
    type Output = EisensteinRational;
    fn add(self, rhs: &EisensteinRational) -> EisensteinRational {
        let num = &self.num.scale(&rhs.den) + &rhs.num.scale(&self.den);
        EisensteinRational::normalized(num, &self.den * &rhs.den)
    }
}

impl Sub<&EisensteinRational> for &EisensteinRational {
    type Output = EisensteinRational;
    fn sub(self, rhs: &EisensteinRational) -> EisensteinRational {
        let num = &self.num.scale(&rhs.den) - &rhs.num.scale(&self.den);
        EisensteinRational::normalized(num, &self.den * &rhs.den)
    }
}

impl Mul<&EisensteinRational> for &EisensteinRational {
    type Output = EisensteinRational;
    fn mul(self, rhs: &EisensteinRational) -> EisensteinRational {
        EisensteinRational::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&EisensteinRational> for &EisensteinRational {
    type Output = EisensteinRational;
    /// Panics on division by zero; use [`EisensteinRational::inv`] to handle it.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &EisensteinRational) -> EisensteinRational {
        self * &rhs.inv().expect("division by zero in Q(w)")
    }
}

impl Neg for &EisensteinRational {
    type Output = EisensteinRational;
    fn neg(self) -> EisensteinRational {
        EisensteinRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for EisensteinRational {
    type Output = EisensteinRational;
    fn neg(self) -> EisensteinRational {
        -&self
    }
}

forward_owned!(EisensteinRational, Add add, Sub sub, Mul mul, Div div);

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, d: i64) -> EisensteinRational {
        EisensteinRational::new(EisensteinInt::new(a, b), BigInt::from(d)).unwrap()
    }

    #[test]
    fn lowest_terms() {
        assert_eq!(q(2, 4, 6), q(1, 2, 3));
        assert_eq!(q(-3, 0, -6), q(1, 0, 2));
        assert_eq!(q(0, 0, 7), EisensteinRational::zero());
        assert!(EisensteinRational::new(EisensteinInt::one(), BigInt::from(0)).is_err());
    }

    #[test]
    fn inverse_of_lambda() {
        // 1/(1-w) = (1-w^2)/3 = (2+w)/3
        let inv = q(1, -1, 1).inv().unwrap();
        assert_eq!(inv, q(2, 1, 3));
        assert_eq!(&inv * &q(1, -1, 1), EisensteinRational::one());
    }

    #[test]
    fn order_three_membership() {
        assert!(q(1, 3, 1).in_order_three());
        assert!(!q(1, 1, 1).in_order_three());
        assert!(!q(3, 3, 2).in_order_three());
    }

    #[test]
    fn ratio_of_units_over_lambda() {
        // (1 + w)/(1 - w) = -w^2/(1-w)
        let lhs = q(1, 1, 1) / q(1, -1, 1);
        let rhs = -(EisensteinRational::alpha_pow(2) / q(1, -1, 1));
        assert_eq!(lhs, rhs);
    }
}
