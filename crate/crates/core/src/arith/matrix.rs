use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::{hermitian_inner, EisVector, EisensteinRational, DIM};

/// A 5x5 matrix over `Q(w)` acting on column vectors in the basis `e_1..e_5`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EisMatrix(pub [[EisensteinRational; DIM]; DIM]);

impl EisMatrix {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> EisensteinRational) -> Self {
        Self(std::array::from_fn(|r| std::array::from_fn(|c| f(r, c))))
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| EisensteinRational::zero())
    }

    pub fn identity() -> Self {
        Self::from_fn(|r, c| {
            if r == c {
                EisensteinRational::one()
            } else {
                EisensteinRational::zero()
            }
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[EisVector; DIM]) -> Self {
        Self::from_fn(|r, c| cols[c][r].clone())
    }

    pub fn get(&self, r: usize, c: usize) -> &EisensteinRational {
        &self.0[r][c]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|r, c| self.0[c][r].clone())
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(|r, c| self.0[r][c].conj())
    }

    pub fn scale(&self, k: &EisensteinRational) -> Self {
        Self::from_fn(|r, c| k * &self.0[r][c])
    }

    /// `M v`.
    pub fn apply(&self, v: &EisVector) -> EisVector {
        EisVector(std::array::from_fn(|r| {
            (0..DIM).fold(EisensteinRational::zero(), |acc, c| &acc + &(&self.0[r][c] * &v[c]))
        }))
    }

    /// `transpose(M) = conj(M)`, i.e. `M` is Hermitian.
    pub fn is_hermitian(&self) -> bool {
        self.transpose() == self.conj()
    }

    /// Basis over `Q` of the 25-dimensional space of Hermitian matrices:
    /// the diagonal units, then for each `k < l` the entries `1` and `w` at `(k, l)`.
    pub fn hermitian_basis() -> Vec<Self> {
        let mut out = Vec::new();
        for k in 0..DIM {
            let mut h = Self::zero();
            h.0[k][k] = EisensteinRational::one();
            out.push(h);
        }
        for k in 0..DIM {
            for l in k + 1..DIM {
                for z in [EisensteinRational::one(), EisensteinRational::alpha_pow(1)] {
                    let mut h = Self::zero();
                    h.0[l][k] = z.conj();
                    h.0[k][l] = z;
                    out.push(h);
                }
            }
        }
        out
    }

    pub fn column(&self, c: usize) -> EisVector {
        EisVector(std::array::from_fn(|r| self.0[r][c].clone()))
    }

    /// Inverse by Gauss-Jordan elimination over `Q(w)`.
    pub fn inverse(&self) -> Option<Self> {
        let mut a = self.clone();
        let mut inv = Self::identity();
        for col in 0..DIM {
            let p = (col..DIM).find(|&r| !a.0[r][col].is_zero())?;
            a.0.swap(col, p);
            inv.0.swap(col, p);
            let piv = a.0[col][col].inv().ok()?;
            for c in 0..DIM {
                a.0[col][c] = &a.0[col][c] * &piv;
                inv.0[col][c] = &inv.0[col][c] * &piv;
            }
            for r in 0..DIM {
                if r == col || a.0[r][col].is_zero() {
                    continue;
                }
                let f = a.0[r][col].clone();
                for c in 0..DIM {
                    a.0[r][c] = &a.0[r][c] - &(&f * &a.0[col][c]);
                    inv.0[r][c] = &inv.0[r][c] - &(&f * &inv.0[col][c]);
                }
            }
        }
        Some(inv)
    }

    /// `sum_k (M u)_k conj(v_k)`.
    pub fn sesquilinear(&self, u: &EisVector, v: &EisVector) -> EisensteinRational {
        hermitian_inner(&self.apply(u), v)
    }
}

impl Mul<&EisMatrix> for &EisMatrix {
    type Output = EisMatrix;
    fn mul(self, rhs: &EisMatrix) -> EisMatrix {
        EisMatrix::from_fn(|r, c| {
            (0..DIM).fold(EisensteinRational::zero(), |acc, k| {
                &acc + &(&self.0[r][k] * &rhs.0[k][c])
            })
        })
    }
}

impl Add<&EisMatrix> for &EisMatrix {
    type Output = EisMatrix;
    fn add(self, rhs: &EisMatrix) -> EisMatrix {
        EisMatrix::from_fn(|r, c| &self.0[r][c] + &rhs.0[r][c])
    }
}

impl Sub<&EisMatrix> for &EisMatrix {
    type Output = EisMatrix;
    fn sub(self, rhs: &EisMatrix) -> EisMatrix {
        EisMatrix::from_fn(|r, c| &self.0[r][c] - &rhs.0[r][c])
    }
}

impl fmt::Display for EisMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .0
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in cells {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        let m = EisMatrix::from_fn(|r, c| {
            if r == c {
                EisensteinRational::alpha_pow(r as i64)
            } else if c == r + 1 {
                EisensteinRational::from_int(2)
            } else {
                EisensteinRational::zero()
            }
        });
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, EisMatrix::identity());
        assert!(EisMatrix::zero().inverse().is_none());
    }

    #[test]
    fn hermitian_detection() {
        let mut m = EisMatrix::identity();
        m.0[0][1] = EisensteinRational::alpha_pow(1);
        m.0[1][0] = EisensteinRational::alpha_pow(2);
        assert!(m.is_hermitian());
        assert!(!EisMatrix::identity()
            .scale(&EisensteinRational::alpha_pow(1))
            .is_hermitian());
    }
}
