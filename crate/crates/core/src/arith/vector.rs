use std::fmt;
use std::ops::{Add, Index, Sub};

use num_rational::BigRational;

use super::{EisensteinInt, EisensteinRational};
use crate::error::{Error, Result};

/// Number of coordinates `e_1, ..., e_5`.
pub const DIM: usize = 5;

/// A vector of `Q(w)^5` in the basis `e_1, ..., e_5`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EisVector(pub [EisensteinRational; DIM]);

impl EisVector {
    pub fn zero() -> Self {
        Self(std::array::from_fn(|_| EisensteinRational::zero()))
    }

    /// Basis vector `e_i`, zero-based.
    pub fn basis(i: usize) -> Self {
        let mut v = Self::zero();
        v.0[i] = EisensteinRational::one();
        v
    }

    /// `w = e_1 + ... + e_5`.
    pub fn all_ones() -> Self {
        Self(std::array::from_fn(|_| EisensteinRational::one()))
    }

    pub fn from_ints(coords: [EisensteinInt; DIM]) -> Self {
        Self(coords.map(EisensteinRational::from))
    }

    /// `e_i - w^k e_j` (zero-based indices), the direction of a cone vertex.
    pub fn line_direction(i: usize, j: usize, k: i64) -> Self {
        let mut v = Self::basis(i);
        v.0[j] = -EisensteinRational::alpha_pow(k);
        v
    }

    pub fn coords(&self) -> &[EisensteinRational; DIM] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(EisensteinRational::is_zero)
    }

    pub fn scale(&self, c: &EisensteinRational) -> Self {
        Self(std::array::from_fn(|k| c * &self.0[k]))
    }

    pub fn conj(&self) -> Self {
        Self(std::array::from_fn(|k| self.0[k].conj()))
    }

    /// Coordinates over `Q` in the basis `e_1, w e_1, ..., e_5, w e_5`.
    pub fn real_coords(&self) -> Vec<BigRational> {
        self.0.iter().flat_map(|z| [z.re_coord(), z.alpha_coeff()]).collect()
    }

    /// Inverse of [`EisVector::real_coords`].
    pub fn from_real_coords(coords: &[BigRational]) -> Result<Self> {
        if coords.len() != 2 * DIM {
            return Err(Error::DimensionMismatch(format!(
                "expected {} real coordinates, got {}",
                2 * DIM,
                coords.len()
            )));
        }
        Ok(Self(std::array::from_fn(|k| {
            EisensteinRational::from_coords(&coords[2 * k], &coords[2 * k + 1])
        })))
    }
}

impl Index<usize> for EisVector {
    type Output = EisensteinRational;
    fn index(&self, k: usize) -> &EisensteinRational {
        &self.0[k]
    }
}

impl Add<&EisVector> for &EisVector {
    type Output = EisVector;
    fn add(self, rhs: &EisVector) -> EisVector {
        EisVector(std::array::from_fn(|k| &self.0[k] + &rhs.0[k]))
    }
}

impl Sub<&EisVector> for &EisVector {
    type Output = EisVector;
    fn sub(self, rhs: &EisVector) -> EisVector {
        EisVector(std::array::from_fn(|k| &self.0[k] - &rhs.0[k]))
    }
}

impl fmt::Display for EisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, z) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{z}")?;
        }
        write!(f, ")")
    }
}

/// `sum_k u_k conj(v_k)`.
pub fn hermitian_inner(u: &EisVector, v: &EisVector) -> EisensteinRational {
    u.0.iter()
        .zip(v.0.iter())
        .fold(EisensteinRational::zero(), |acc, (a, b)| &acc + &(a * &b.conj()))
}

/// The scalar multiple of `v` whose first nonzero coordinate is 1.
pub fn canonical_line_rep(v: &EisVector) -> Result<EisVector> {
    let lead = v.0.iter().find(|z| !z.is_zero()).ok_or(Error::ZeroVector)?;
    Ok(v.scale(&lead.inv()?))
}
