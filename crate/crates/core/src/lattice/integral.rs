//! Lattices given by generators: bases, discriminants, indices and duals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::{IntMatrix, RatMatrix};
use super::normal_form::hermite_normal_form;
use crate::error::{Error, Result};

/// Index of one lattice in another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeIndex {
    Finite(BigInt),
    /// The sublattice spans a strictly smaller rational space.
    Infinite,
}

impl LatticeIndex {
    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            Self::Finite(n) => Some(n),
            Self::Infinite => None,
        }
    }
}

impl fmt::Display for LatticeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(n) => write!(f, "{n}"),
            Self::Infinite => write!(f, "infinite"),
        }
    }
}

/// The lattice generated by `n` classes with symmetric Gram matrix `g`,
/// presented on a basis of `Z^n / K` where `K = {x : x g = 0}`.
#[derive(Clone, Debug)]
pub struct GeneratedLattice {
    /// Rows are coefficient vectors (over the generators) of a basis.
    pub basis: IntMatrix,
    /// Rows span the integer relations among the generators.
    pub kernel: IntMatrix,
    /// Gram matrix on `basis`.
    pub gram: IntMatrix,
}

impl GeneratedLattice {
    pub fn new(g: &IntMatrix) -> Result<Self> {
        if !g.is_symmetric() {
            return Err(Error::DimensionMismatch(
                "Gram matrix must be square and symmetric".into(),
            ));
        }
        let hnf = hermite_normal_form(g);
        let basis = hnf.u.select_rows(&(0..hnf.rank()).collect::<Vec<_>>());
        let kernel = hnf.left_kernel();
        let gram = basis.congruence(g)?;
        Ok(Self { basis, kernel, gram })
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// `|det|` of the Gram matrix on a basis.
    pub fn discriminant(&self) -> Result<BigInt> {
        let d = self.gram.det()?;
        if d.is_zero() {
            return Err(Error::DegeneratePairing);
        }
        Ok(d.abs())
    }
}

/// Discriminant of the lattice generated by `n` possibly dependent classes.
pub fn generated_lattice_discriminant(g: &IntMatrix) -> Result<BigInt> {
    GeneratedLattice::new(g)?.discriminant()
}

/// Canonical basis (HNF rows) of the `Z`-span of the rows of `gens`.
pub fn lattice_basis(gens: &RatMatrix) -> RatMatrix {
    let (ints, d) = gens.to_integer_scaled();
    let basis = hermite_normal_form(&ints).basis();
    basis.map(|x| BigRational::new(x.clone(), d.clone()))
}

/// Coordinates of `v` in the (linearly independent) rows of `basis`, if `v`
/// lies in their rational span.
pub fn rational_coordinates(basis: &RatMatrix, v: &[BigRational]) -> Result<Option<Vec<BigRational>>> {
    if v.len() != basis.cols() {
        return Err(Error::DimensionMismatch("vector length".into()));
    }
    let bt = basis.transpose();
    let gram = basis.mul(&bt)?;
    let rhs = bt.left_apply(v)?;
    // x (B B^T) = v B^T
    let x = gram.inverse()?.left_apply(&rhs)?;
    let back = basis.left_apply(&x)?;
    Ok((back.as_slice() == v).then_some(x))
}

/// Integer coordinates of `v` in `basis`, if `v` lies in the lattice.
pub fn lattice_coordinates(basis: &RatMatrix, v: &[BigRational]) -> Result<Option<Vec<BigInt>>> {
    Ok(rational_coordinates(basis, v)?
        .filter(|x| x.iter().all(BigRational::is_integer))
        .map(|x| x.iter().map(BigRational::to_integer).collect()))
}

/// `[<sup> : <sub>]` for two generator sets (rows) in a common coordinate system.
pub fn sublattice_index(sub: &RatMatrix, sup: &RatMatrix) -> Result<LatticeIndex> {
    let sup_b = lattice_basis(sup);
    let sub_b = lattice_basis(sub);
    if sub_b.rows() == 0 {
        return Ok(if sup_b.rows() == 0 {
            LatticeIndex::Finite(BigInt::one())
        } else {
            LatticeIndex::Infinite
        });
    }
    let mut coords = Vec::with_capacity(sub_b.rows());
    for r in 0..sub_b.rows() {
        match lattice_coordinates(&sup_b, sub_b.row(r))? {
            Some(c) => coords.push(c),
            None => return Err(Error::NotSublattice),
        }
    }
    if sub_b.rows() < sup_b.rows() {
        return Ok(LatticeIndex::Infinite);
    }
    let m = IntMatrix::from_rows(coords)?;
    Ok(LatticeIndex::Finite(m.det()?.abs()))
}

/// Same lattice?
pub fn lattices_equal(a: &RatMatrix, b: &RatMatrix) -> bool {
    lattice_basis(a) == lattice_basis(b)
}

/// Basis (rows) of `{p in Q^n : t p in Z^m}` for `t` of full column rank `n`.
/// This is the dual of the lattice spanned by the rows of `t`.
pub fn integral_preimage(t: &RatMatrix) -> Result<RatMatrix> {
    let rows = lattice_basis(t);
    if rows.rows() != t.cols() {
        return Err(Error::Singular);
    }
    Ok(rows.inverse()?.transpose())
}
