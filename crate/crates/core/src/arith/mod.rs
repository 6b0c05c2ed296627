//! Exact arithmetic in the Eisenstein integers `Z[w]`, the field `Q(w)` and
//! five-dimensional vectors over it, where `w` is a primitive cube root of
//! unity (`w^2 = -1 - w`).

mod eisenstein;
mod matrix;
mod rational;
mod vector;

pub use eisenstein::EisensteinInt;
pub use matrix::EisMatrix;
pub use rational::EisensteinRational;
pub use vector::{canonical_line_rep, hermitian_inner, EisVector, DIM};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Product in `Z[w]`.
pub fn eis_mul(x: &EisensteinInt, y: &EisensteinInt) -> EisensteinInt {
    x * y
}

/// Field norm `x * conj(x) = a^2 - ab + b^2`.
pub fn eis_norm(x: &EisensteinInt) -> BigInt {
    x.norm()
}

/// True iff `x` lies in the prime ideal `(1 - w)`.
pub fn divisible_by_lambda(x: &EisensteinInt) -> bool {
    x.div_exact(&EisensteinInt::lambda()).is_some()
}
