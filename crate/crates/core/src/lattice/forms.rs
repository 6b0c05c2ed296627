//! Alternating 2-forms on a lattice basis, Pfaffians and top-degree wedges.

use std::collections::BTreeMap;
use std::ops::Add;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::RatMatrix;
use crate::error::{Error, Result};

/// An alternating form given by its antisymmetric coefficient matrix
/// `coeffs[p][q] = form(b_p, b_q)` on a basis `b_1, ..., b_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoForm {
    coeffs: RatMatrix,
}

impl TwoForm {
    pub fn new(coeffs: RatMatrix) -> Result<Self> {
        if !coeffs.is_square() {
            return Err(Error::DimensionMismatch("two-form matrix must be square".into()));
        }
        let n = coeffs.rows();
        for p in 0..n {
            if !coeffs[(p, p)].is_zero() {
                return Err(Error::NotAntisymmetric);
            }
            for q in 0..p {
                if coeffs[(p, q)] != -coeffs[(q, p)].clone() {
                    return Err(Error::NotAntisymmetric);
                }
            }
        }
        Ok(Self { coeffs })
    }

    /// Builds the form from its values on pairs `p < q`.
    pub fn from_upper(dim: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut coeffs = RatMatrix::zeros(dim, dim);
        for p in 0..dim {
            for q in p + 1..dim {
                let v = f(p, q);
                coeffs[(q, p)] = -v.clone();
                coeffs[(p, q)] = v;
            }
        }
        Self { coeffs }
    }

    /// Direct sum of `k` copies of `[[0, 1], [-1, 0]]`.
    pub fn standard_symplectic(k: usize) -> Self {
        Self::from_upper(2 * k, |p, q| {
            if p % 2 == 0 && q == p + 1 {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.coeffs.rows()
    }

    pub fn coeffs(&self) -> &RatMatrix {
        &self.coeffs
    }

    pub fn get(&self, p: usize, q: usize) -> &BigRational {
        &self.coeffs[(p, q)]
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.row_vecs().iter().flatten().all(BigRational::is_integer)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.map(|x| x * c),
        }
    }

    pub fn det(&self) -> Result<BigRational> {
        self.coeffs.det()
    }

    /// Pfaffian by expansion along the first row; `pf^2 = det`.
    pub fn pfaffian(&self) -> Result<BigRational> {
        let n = self.dim();
        if n % 2 == 1 {
            return Err(Error::OddDimension(n));
        }
        let idx: Vec<usize> = (0..n).collect();
        Ok(self.pfaffian_on(&idx))
    }

    fn pfaffian_on(&self, idx: &[usize]) -> BigRational {
        if idx.is_empty() {
            return BigRational::one();
        }
        let first = idx[0];
        let mut total = BigRational::zero();
        for k in 1..idx.len() {
            let a = &self.coeffs[(first, idx[k])];
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = idx[1..]
                .iter()
                .enumerate()
                .filter(|&(i, _)| i + 1 != k)
                .map(|(_, &j)| j)
                .collect();
            let term = a * self.pfaffian_on(&rest);
            if k % 2 == 1 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    /// Values on the `dim (dim - 1) / 2` pairs `p < q` in lexicographic order.
    pub fn upper_entries(&self) -> Vec<BigRational> {
        let n = self.dim();
        (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| self.coeffs[(p, q)].clone())
            .collect()
    }
}

impl Add<&TwoForm> for &TwoForm {
    type Output = TwoForm;
    fn add(self, rhs: &TwoForm) -> TwoForm {
        let n = self.dim();
        TwoForm {
            coeffs: RatMatrix::from_fn(n, n, |p, q| &self.coeffs[(p, q)] + &rhs.coeffs[(p, q)]),
        }
    }
}

/// A homogeneous element of the exterior algebra on `dim` generators, stored
/// sparsely by the bitmask of its basis monomial `dx_S` (indices increasing).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorForm {
    dim: usize,
    terms: BTreeMap<u32, BigRational>,
}

impl ExteriorForm {
    /// The constant 1.
    pub fn unit(dim: usize) -> Self {
        Self {
            dim,
            terms: BTreeMap::from([(0, BigRational::one())]),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `self ^ form`.
    pub fn wedge(&self, form: &TwoForm) -> Result<Self> {
        if form.dim() != self.dim {
            return Err(Error::DimensionMismatch("wedge of forms on different lattices".into()));
        }
        let n = self.dim;
        let mut terms: BTreeMap<u32, BigRational> = BTreeMap::new();
        for (&mask, c) in &self.terms {
            for p in 0..n {
                if mask >> p & 1 == 1 {
                    continue;
                }
                for q in p + 1..n {
                    if mask >> q & 1 == 1 {
                        continue;
                    }
                    let a = form.get(p, q);
                    if a.is_zero() {
                        continue;
                    }
                    // moving dx_q then dx_p into sorted position
                    let swaps = (mask >> (p + 1)).count_ones() + (mask >> (q + 1)).count_ones();
                    let v = c * a;
                    let entry = terms.entry(mask | 1 << p | 1 << q).or_insert_with(BigRational::zero);
                    if swaps % 2 == 0 {
                        *entry += v;
                    } else {
                        *entry -= v;
                    }
                }
            }
        }
        terms.retain(|_, v| !v.is_zero());
        Ok(Self { dim: n, terms })
    }

    /// Coefficient of `dx_1 ^ ... ^ dx_dim`.
    pub fn top_coefficient(&self) -> BigRational {
        let full = if self.dim == 32 {
            u32::MAX
        } else {
            (1u32 << self.dim) - 1
        };
        self.terms.get(&full).cloned().unwrap_or_else(BigRational::zero)
    }
}

/// Coefficient of the volume form in `forms[0] ^ ... ^ forms[k-1]`, where the
/// forms live on a common basis of dimension `2k`. For a lattice basis this is
/// the integral over the torus in the orientation of that basis.
pub fn wedge_top_coefficient(forms: &[&TwoForm]) -> Result<BigRational> {
    let Some(first) = forms.first() else {
        return Ok(BigRational::one());
    };
    let dim = first.dim();
    if dim != 2 * forms.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} two-forms cannot fill dimension {dim}",
            forms.len()
        )));
    }
    if dim > 32 {
        return Err(Error::DimensionMismatch("dimension above 32".into()));
    }
    let mut acc = ExteriorForm::unit(dim);
    for f in forms {
        acc = acc.wedge(f)?;
    }
    Ok(acc.top_coefficient())
}

/// Integer Pfaffian helper for integral forms.
pub fn integer_pfaffian(form: &TwoForm) -> Result<Option<BigInt>> {
    let pf = form.pfaffian()?;
    Ok(pf.is_integer().then(|| pf.to_integer()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn pfaffian_of_standard_blocks() {
        assert_eq!(TwoForm::standard_symplectic(1).pfaffian().unwrap(), int(1));
        assert_eq!(TwoForm::standard_symplectic(5).pfaffian().unwrap(), int(1));
    }

    #[test]
    fn pfaffian_of_4x4() {
        // pf = a12 a34 - a13 a24 + a14 a23
        let vals = [[0, 2, 3, 5], [0, 0, 7, 11], [0, 0, 0, 13], [0, 0, 0, 0]];
        let f = TwoForm::from_upper(4, |p, q| int(vals[p][q]));
        assert_eq!(f.pfaffian().unwrap(), int(2 * 13 - 3 * 11 + 5 * 7));
        assert_eq!(f.pfaffian().unwrap().pow(2), f.det().unwrap());
    }

    #[test]
    fn odd_dimension_rejected() {
        let f = TwoForm::from_upper(3, |_, _| int(1));
        assert_eq!(f.pfaffian(), Err(Error::OddDimension(3)));
    }

    #[test]
    fn rejects_non_antisymmetric() {
        let m = RatMatrix::identity(2);
        assert_eq!(TwoForm::new(m), Err(Error::NotAntisymmetric));
    }

    #[test]
    fn disjoint_planes_wedge_to_one() {
        let planes: Vec<TwoForm> = (0..5)
            .map(|i| TwoForm::from_upper(10, |p, q| if p == 2 * i && q == 2 * i + 1 { int(1) } else { int(0) }))
            .collect();
        let refs: Vec<&TwoForm> = planes.iter().collect();
        assert_eq!(wedge_top_coefficient(&refs).unwrap(), int(1));
    }

    #[test]
    fn fifth_power_is_factorial_times_pfaffian() {
        let f = TwoForm::standard_symplectic(5);
        let w = wedge_top_coefficient(&[&f, &f, &f, &f, &f]).unwrap();
        assert_eq!(w, int(120));
    }

    #[test]
    fn repeated_plane_vanishes() {
        let plane = TwoForm::from_upper(10, |p, q| if p == 0 && q == 1 { int(1) } else { int(0) });
        let s = TwoForm::standard_symplectic(5);
        assert_eq!(wedge_top_coefficient(&[&plane, &plane, &s, &s, &s]).unwrap(), int(0));
    }

    #[test]
    fn wrong_count_is_an_error() {
        let s = TwoForm::standard_symplectic(5);
        assert!(wedge_top_coefficient(&[&s, &s]).is_err());
    }
}
