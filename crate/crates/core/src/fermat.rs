//! Intersection lattice of the 30 elliptic curves `E_ij^b` and the incidence
//! class `C` on the Fano surface of the Fermat cubic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::{canonical_line_rep, EisVector, DIM};
use crate::error::{Error, Result};
use crate::group::MonomialMatrix;
use crate::lattice::{
    hermite_normal_form, lattice_coordinates, lattices_equal, sublattice_index, GeneratedLattice, IntMatrix,
    LatticeIndex,
};

/// Number of elliptic curves.
pub const NUM_CURVES: usize = 30;
/// Number of generators: the curves and `C`.
pub const NUM_GENERATORS: usize = NUM_CURVES + 1;
/// Index of `C` among the generators.
pub const C_INDEX: usize = NUM_CURVES;

/// The curve `E_ij^b` with `b = w^beta`; `i < j` are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveLabel {
    pub i: u8,
    pub j: u8,
    pub beta: u8,
}

impl CurveLabel {
    pub fn new(i: u8, j: u8, beta: u8) -> Result<Self> {
        if !(1..=5).contains(&i) || !(1..=5).contains(&j) || i >= j || beta > 2 {
            return Err(Error::DimensionMismatch(format!(
                "invalid curve label ({i},{j},{beta})"
            )));
        }
        Ok(Self { i, j, beta })
    }

    /// All 30 labels in index order.
    pub fn all() -> Vec<Self> {
        let mut out = Vec::with_capacity(NUM_CURVES);
        for i in 1..=5u8 {
            for j in i + 1..=5 {
                for beta in 0..3 {
                    out.push(Self { i, j, beta });
                }
            }
        }
        out
    }

    pub fn index(&self) -> usize {
        pair_index(self.i as usize - 1, self.j as usize - 1) * 3 + self.beta as usize
    }

    pub fn from_index(idx: usize) -> Self {
        Self::all()[idx]
    }

    /// Canonical direction `e_i - b e_j` of the matching cone vertex.
    pub fn direction(&self) -> EisVector {
        EisVector::line_direction(self.i as usize - 1, self.j as usize - 1, self.beta as i64)
    }

    /// Label of the line spanned by `v`, which must be some `e_i - b e_j`.
    pub fn from_direction(v: &EisVector) -> Result<Self> {
        let rep = canonical_line_rep(v)?;
        Self::all()
            .into_iter()
            .find(|l| l.direction() == rep)
            .ok_or_else(|| Error::DimensionMismatch(format!("{v} is not a cone-vertex direction")))
    }

    pub fn disjoint(&self, other: &Self) -> bool {
        let a = [self.i, self.j];
        !a.contains(&other.i) && !a.contains(&other.j)
    }

    /// Intersection number of two curves.
    pub fn pair(&self, other: &Self) -> i64 {
        if self == other {
            -3
        } else if self.disjoint(other) {
            1
        } else {
            0
        }
    }
}

impl fmt::Display for CurveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = ["1", "w", "w^2"][self.beta as usize];
        write!(f, "E{}{}^{}", self.i, self.j, b)
    }
}

/// Zero-based index of the unordered pair `{i, j}`, `i < j`, in lex order.
pub fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < DIM);
    (0..i).map(|k| DIM - 1 - k).sum::<usize>() + (j - i - 1)
}

/// Integer combination of the 30 curves and `C`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    pub curve_coeffs: [i64; NUM_CURVES],
    pub c_coeff: i64,
}

impl DivisorClass {
    pub fn zero() -> Self {
        Self {
            curve_coeffs: [0; NUM_CURVES],
            c_coeff: 0,
        }
    }

    pub fn curve(label: CurveLabel) -> Self {
        let mut d = Self::zero();
        d.curve_coeffs[label.index()] = 1;
        d
    }

    /// `E_ij^{w^beta}`, 1-based indices.
    pub fn e(i: u8, j: u8, beta: u8) -> Self {
        Self::curve(CurveLabel::new(i.min(j), i.max(j), beta).expect("valid label"))
    }

    pub fn c() -> Self {
        Self {
            curve_coeffs: [0; NUM_CURVES],
            c_coeff: 1,
        }
    }

    /// `B_ij`: sum of the three curves over the pair `{i, j}`.
    pub fn b(i: u8, j: u8) -> Self {
        (0..3).fold(Self::zero(), |acc, beta| &acc + &Self::e(i, j, beta))
    }

    /// Sum of all 30 curves.
    pub fn sigma() -> Self {
        Self {
            curve_coeffs: [1; NUM_CURVES],
            c_coeff: 0,
        }
    }

    /// The canonical class `3C`.
    pub fn canonical() -> Self {
        Self {
            curve_coeffs: [0; NUM_CURVES],
            c_coeff: 3,
        }
    }

    pub fn generator(idx: usize) -> Self {
        if idx == C_INDEX {
            Self::c()
        } else {
            Self::curve(CurveLabel::from_index(idx))
        }
    }

    pub fn coeffs(&self) -> Vec<i64> {
        let mut v = self.curve_coeffs.to_vec();
        v.push(self.c_coeff);
        v
    }

    pub fn from_coeffs(v: &[i64]) -> Result<Self> {
        if v.len() != NUM_GENERATORS {
            return Err(Error::DimensionMismatch(format!(
                "expected {NUM_GENERATORS} coefficients"
            )));
        }
        let mut d = Self::zero();
        d.curve_coeffs.copy_from_slice(&v[..NUM_CURVES]);
        d.c_coeff = v[C_INDEX];
        Ok(d)
    }

    /// Pairings against the 31 generators; determines the numerical class.
    pub fn pairing_vector(&self) -> [i64; NUM_GENERATORS] {
        std::array::from_fn(|k| pair(self, &Self::generator(k)))
    }

    pub fn self_intersection(&self) -> i64 {
        pair(self, self)
    }

    /// Image under the automorphism induced by a monomial matrix.
    pub fn transform(&self, m: &MonomialMatrix) -> Self {
        let perm = curve_permutation(m);
        let mut out = Self {
            curve_coeffs: [0; NUM_CURVES],
            c_coeff: self.c_coeff,
        };
        for (k, &c) in self.curve_coeffs.iter().enumerate() {
            out.curve_coeffs[perm[k]] += c;
        }
        out
    }
}

impl Add<&DivisorClass> for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        DivisorClass {
            curve_coeffs: std::array::from_fn(|k| self.curve_coeffs[k] + rhs.curve_coeffs[k]),
            c_coeff: self.c_coeff + rhs.c_coeff,
        }
    }
}

impl Sub<&DivisorClass> for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self + &(-rhs)
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass {
            curve_coeffs: self.curve_coeffs.map(|c| -c),
            c_coeff: -self.c_coeff,
        }
    }
}

impl Mul<&DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: &DivisorClass) -> DivisorClass {
        DivisorClass {
            curve_coeffs: rhs.curve_coeffs.map(|c| self * c),
            c_coeff: self * rhs.c_coeff,
        }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        if self.c_coeff != 0 {
            terms.push((self.c_coeff, "C".to_string()));
        }
        for (k, &c) in self.curve_coeffs.iter().enumerate() {
            if c != 0 {
                terms.push((c, CurveLabel::from_index(k).to_string()));
            }
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (c, name)) in terms.iter().enumerate() {
            let sign = if *c < 0 {
                "-"
            } else if n > 0 {
                "+"
            } else {
                ""
            };
            let sep = if n > 0 { " " } else { "" };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sep}{sign}{}{name}", if n > 0 { " " } else { "" })?;
            } else {
                write!(f, "{sep}{sign}{}{mag}{name}", if n > 0 { " " } else { "" })?;
            }
        }
        Ok(())
    }
}

/// Intersection number of two generators.
fn pair_generators(a: usize, b: usize) -> i64 {
    match (a == C_INDEX, b == C_INDEX) {
        (true, true) => 5,
        (true, false) | (false, true) => 1,
        (false, false) => CurveLabel::from_index(a).pair(&CurveLabel::from_index(b)),
    }
}

/// Intersection pairing on divisor classes.
pub fn pair(d: &DivisorClass, d2: &DivisorClass) -> i64 {
    let a = d.coeffs();
    let b = d2.coeffs();
    let mut total = 0;
    for (p, &x) in a.iter().enumerate().filter(|(_, x)| **x != 0) {
        for (q, &y) in b.iter().enumerate().filter(|(_, y)| **y != 0) {
            total += x * y * pair_generators(p, q);
        }
    }
    total
}

/// Gram matrix of the 31 generators (curves in label order, then `C`).
pub fn gram_matrix() -> IntMatrix {
    IntMatrix::from_i64(NUM_GENERATORS, NUM_GENERATORS, pair_generators)
}

/// Gram matrix of an arbitrary list of classes.
pub fn gram_of(classes: &[DivisorClass]) -> IntMatrix {
    IntMatrix::from_i64(classes.len(), classes.len(), |a, b| pair(&classes[a], &classes[b]))
}

/// Same numerical class.
pub fn numerically_equal(a: &DivisorClass, b: &DivisorClass) -> bool {
    a.pairing_vector() == b.pairing_vector()
}

/// Curves left out of the 25-curve basis: `E13^w, E15^w, E24^w, E34^w, E45^w`.
pub fn excluded_curves() -> [CurveLabel; 5] {
    [(1, 3), (1, 5), (2, 4), (3, 4), (4, 5)].map(|(i, j)| CurveLabel { i, j, beta: 1 })
}

/// Generator indices of the 25 basis curves followed by `C`.
pub fn basis_indices() -> Vec<usize> {
    let excluded = excluded_curves().map(|l| l.index());
    (0..NUM_GENERATORS).filter(|k| !excluded.contains(k)).collect()
}

#[derive(Clone, Debug)]
pub struct NsBasis {
    pub rank: usize,
    /// The 25 basis curves followed by `C`.
    pub generators: Vec<DivisorClass>,
    /// Determinant of the Gram matrix of the 25 basis curves.
    pub curve_determinant: BigInt,
    /// Discriminant of the lattice spanned by the 30 curves and `C`.
    pub discriminant: BigInt,
}

/// Rank of the curve lattice, the 25-curve basis and the discriminants.
pub fn ns_rank_and_basis() -> Result<NsBasis> {
    let gram = gram_matrix();
    let lattice = GeneratedLattice::new(&gram)?;
    let generators: Vec<DivisorClass> = basis_indices().into_iter().map(DivisorClass::generator).collect();
    let curve_determinant = gram_of(&generators[..generators.len() - 1]).det()?;
    Ok(NsBasis {
        rank: lattice.rank(),
        generators,
        curve_determinant,
        discriminant: lattice.discriminant()?,
    })
}

/// Discriminant of the lattice generated by `classes`.
pub fn discriminant_of(classes: &[DivisorClass]) -> Result<(usize, BigInt)> {
    let lattice = GeneratedLattice::new(&gram_of(classes))?;
    Ok((lattice.rank(), lattice.discriminant()?))
}

/// Index of the lattice spanned by `sub` inside the lattice spanned by `sup`,
/// comparing numerical classes through their pairing vectors.
pub fn numerical_index(sub: &[DivisorClass], sup: &[DivisorClass]) -> Result<LatticeIndex> {
    let to_rows = |cs: &[DivisorClass]| {
        IntMatrix::from_i64(cs.len(), NUM_GENERATORS, |r, c| cs[r].pairing_vector()[c]).to_rational()
    };
    sublattice_index(&to_rows(sub), &to_rows(sup))
}

/// The ten relations `B_jr + B_st - B_js - B_rt` (and the third pairing) as
/// rows over the 30 curves.
pub fn b_relations() -> Vec<DivisorClass> {
    let mut out = Vec::new();
    for omit in 1..=5u8 {
        let q: Vec<u8> = (1..=5).filter(|&k| k != omit).collect();
        let (j, r, s, t) = (q[0], q[1], q[2], q[3]);
        let p1 = &DivisorClass::b(j, r) + &DivisorClass::b(s, t);
        let p2 = &DivisorClass::b(j, s) + &DivisorClass::b(r, t);
        let p3 = &DivisorClass::b(j, t) + &DivisorClass::b(r, s);
        out.push(&p1 - &p2);
        out.push(&p2 - &p3);
    }
    out
}

#[derive(Clone, Debug)]
pub struct RelationsKernel {
    /// HNF basis of the integer kernel of the 30x30 curve Gram matrix.
    pub basis: IntMatrix,
    /// Every stated relation pairs to zero with all generators.
    pub relations_in_kernel: bool,
    /// The stated relations span the whole integer kernel.
    pub relations_span_kernel: bool,
}

impl RelationsKernel {
    pub fn rank(&self) -> usize {
        self.basis.rows()
    }
}

/// Integer relations among the 30 curves, compared with the `B` relations.
pub fn relations_kernel() -> Result<RelationsKernel> {
    let idx: Vec<usize> = (0..NUM_CURVES).collect();
    let g30 = gram_matrix().principal(&idx);
    let kernel = hermite_normal_form(&g30).left_kernel();
    let basis = hermite_normal_form(&kernel).basis();
    let rels = b_relations();
    let relations_in_kernel = rels.iter().all(|r| r.pairing_vector().iter().all(|&x| x == 0));
    let rel_rows = IntMatrix::from_i64(rels.len(), NUM_CURVES, |r, c| rels[r].curve_coeffs[c]);
    let relations_span_kernel = lattices_equal(&rel_rows.to_rational(), &basis.to_rational());
    Ok(RelationsKernel {
        basis,
        relations_in_kernel,
        relations_span_kernel,
    })
}

#[derive(Clone, Debug)]
pub struct CanonicalIdentities {
    /// `(Sigma - 6C) . g = 0` for every generator.
    pub sigma_is_twice_canonical: bool,
    pub k_squared: i64,
    /// `E^2 + K.E = 0` for all 30 curves.
    pub adjunction_holds: bool,
    pub sigma_dot_c: i64,
}

pub fn verify_canonical_identities() -> CanonicalIdentities {
    let k = DivisorClass::canonical();
    let diff = &DivisorClass::sigma() - &(6 * &DivisorClass::c());
    CanonicalIdentities {
        sigma_is_twice_canonical: diff.pairing_vector().iter().all(|&x| x == 0),
        k_squared: k.self_intersection(),
        adjunction_holds: CurveLabel::all().into_iter().all(|l| {
            let e = DivisorClass::curve(l);
            e.self_intersection() + pair(&k, &e) == 0
        }),
        sigma_dot_c: pair(&DivisorClass::sigma(), &DivisorClass::c()),
    }
}

/// Arithmetic genus `1 + (D^2 + K.D)/2` with `K = 3C`.
pub fn genus_of_class(d: &DivisorClass) -> Result<i64> {
    genus_from_numbers(d.self_intersection(), pair(&DivisorClass::canonical(), d))
}

pub fn genus_from_numbers(self_int: i64, k_dot: i64) -> Result<i64> {
    let s = self_int + k_dot;
    if s % 2 != 0 {
        return Err(Error::NonIntegralGenus(s));
    }
    Ok(1 + s / 2)
}

/// For `F = C - E`: how many curves meet `F` once (sections) and how many
/// have `F . E' = 0` (contracted).
pub fn section_counts(e: CurveLabel) -> (usize, usize) {
    let f = &DivisorClass::c() - &DivisorClass::curve(e);
    let vals: Vec<i64> = CurveLabel::all()
        .into_iter()
        .map(|l| pair(&f, &DivisorClass::curve(l)))
        .collect();
    (
        vals.iter().filter(|&&v| v == 1).count(),
        vals.iter().filter(|&&v| v == 0).count(),
    )
}

/// Permutation of curve indices induced by a monomial matrix acting on the
/// cone-vertex lines.
pub fn curve_permutation(m: &MonomialMatrix) -> [usize; NUM_CURVES] {
    std::array::from_fn(|k| {
        let label = CurveLabel::from_index(k);
        CurveLabel::from_direction(&m.apply(&label.direction()))
            .expect("group permutes cone vertices")
            .index()
    })
}

/// True iff the induced permutation preserves all pairings.
pub fn preserves_gram(m: &MonomialMatrix) -> bool {
    let perm = curve_permutation(m);
    (0..NUM_CURVES).all(|a| (0..NUM_CURVES).all(|b| pair_generators(a, b) == pair_generators(perm[a], perm[b])))
}

/// Ten-curve divisor `sum_{i<j} E_ij^{b}` with `b = w^(exps[i] - exps[j])`,
/// i.e. the curves selected by `a = (w^exps[0], ..., w^exps[4])`.
pub fn ten_curve_divisor(exps: [i64; DIM]) -> DivisorClass {
    let mut d = DivisorClass::zero();
    for i in 0..DIM {
        for j in i + 1..DIM {
            let beta = (exps[i] - exps[j]).rem_euclid(3) as u8;
            d = &d + &DivisorClass::e(i as u8 + 1, j as u8 + 1, beta);
        }
    }
    d
}

/// Generators `C - E` (30 of them) and `sum_{i<j} E_ij^1` of the pullback lattice.
pub fn pullback_generators() -> Vec<DivisorClass> {
    let mut out: Vec<DivisorClass> = CurveLabel::all()
        .into_iter()
        .map(|l| &DivisorClass::c() - &DivisorClass::curve(l))
        .collect();
    out.push(ten_curve_divisor([0; DIM]));
    out
}

/// Solve `D . g = target[g]` for an integer class, if the numerical class exists in the
/// lattice spanned by the generators.
pub fn class_with_pairings(target: &[i64; NUM_GENERATORS]) -> Result<Option<DivisorClass>> {
    class_with_pairings_over(target, &(0..NUM_GENERATORS).collect::<Vec<_>>())
}

/// As [`class_with_pairings`], using only the generators with the given indices.
pub fn class_with_pairings_over(target: &[i64; NUM_GENERATORS], gens: &[usize]) -> Result<Option<DivisorClass>> {
    let t: Vec<BigRational> = target.iter().map(|&x| BigRational::from_integer(x.into())).collect();
    let rows = gram_matrix().select_rows(gens);
    let hnf = hermite_normal_form(&rows);
    let coords = match lattice_coordinates(&hnf.basis().to_rational(), &t)? {
        Some(c) => c,
        None => return Ok(None),
    };
    let mut out = vec![BigInt::zero(); NUM_GENERATORS];
    for (r, c) in coords.iter().enumerate() {
        for (k, &g) in gens.iter().enumerate() {
            out[g] += c * &hnf.u[(r, k)];
        }
    }
    let v: Vec<i64> = out
        .iter()
        .map(|x| i64::try_from(x).map_err(|_| Error::Overflow(x.to_string())))
        .collect::<Result<_>>()?;
    DivisorClass::from_coeffs(&v).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{enumerate_group, generators};

    #[test]
    fn labels_roundtrip() {
        for (k, l) in CurveLabel::all().into_iter().enumerate() {
            assert_eq!(l.index(), k);
            assert_eq!(CurveLabel::from_direction(&l.direction()).unwrap(), l);
        }
        assert!(CurveLabel::new(2, 2, 0).is_err());
        assert!(CurveLabel::new(1, 2, 3).is_err());
    }

    #[test]
    fn basic_pairings() {
        assert_eq!(pair(&DivisorClass::e(1, 2, 0), &DivisorClass::e(3, 4, 1)), 1);
        assert_eq!(pair(&DivisorClass::e(1, 2, 0), &DivisorClass::e(1, 2, 0)), -3);
        assert_eq!(pair(&DivisorClass::e(1, 2, 0), &DivisorClass::e(1, 2, 1)), 0);
        assert_eq!(pair(&DivisorClass::e(1, 2, 0), &DivisorClass::e(2, 3, 0)), 0);
        let c = DivisorClass::c();
        let a = &c - &DivisorClass::e(4, 5, 1);
        let b = &c - &DivisorClass::e(4, 5, 2);
        assert_eq!(pair(&a, &b), 3);
    }

    #[test]
    fn rank_basis_and_discriminants() {
        let ns = ns_rank_and_basis().unwrap();
        assert_eq!(ns.rank, 25);
        assert_eq!(ns.curve_determinant, BigInt::from(3).pow(20));
        assert_eq!(ns.discriminant, BigInt::from(3).pow(18));
        assert_eq!(ns.generators.len(), 26);
        assert_eq!(discriminant_of(&ns.generators).unwrap(), (25, BigInt::from(3).pow(18)));
        let curves: Vec<_> = CurveLabel::all().into_iter().map(DivisorClass::curve).collect();
        assert_eq!(discriminant_of(&curves).unwrap(), (25, BigInt::from(3).pow(20)));
        let mut all = curves.clone();
        all.push(DivisorClass::c());
        assert_eq!(numerical_index(&curves, &all).unwrap(), LatticeIndex::Finite(3.into()));
    }

    #[test]
    fn signature_has_one_positive() {
        let (pos, _neg, zero) = gram_matrix().to_rational().inertia().unwrap();
        assert_eq!(pos, 1);
        assert_eq!(zero, 6);
    }

    #[test]
    fn kernel_is_generated_by_b_relations() {
        let k = relations_kernel().unwrap();
        assert_eq!(k.rank(), 5);
        assert!(k.relations_in_kernel);
        assert!(k.relations_span_kernel);
        let rel =
            &(&DivisorClass::b(2, 3) + &DivisorClass::b(4, 5)) - &(&DivisorClass::b(2, 4) + &DivisorClass::b(3, 5));
        assert!(rel.pairing_vector().iter().all(|&x| x == 0));
        assert_eq!(pair(&DivisorClass::b(1, 2), &DivisorClass::e(3, 4, 0)), 3);
    }

    #[test]
    fn canonical_identities() {
        let r = verify_canonical_identities();
        assert!(r.sigma_is_twice_canonical);
        assert_eq!(r.k_squared, 45);
        assert!(r.adjunction_holds);
        assert_eq!(r.sigma_dot_c, 30);
        assert_eq!(pair(&DivisorClass::canonical(), &DivisorClass::e(1, 2, 0)), 3);
    }

    #[test]
    fn genera() {
        let b = &DivisorClass::b(2, 3) + &DivisorClass::b(4, 5);
        assert_eq!(b.self_intersection(), 0);
        assert_eq!(genus_of_class(&b).unwrap(), 10);
        let d = ten_curve_divisor([0; 5]);
        assert_eq!(d.self_intersection(), 0);
        assert_eq!(genus_of_class(&d).unwrap(), 16);
        let f = &DivisorClass::c() - &DivisorClass::e(4, 5, 0);
        assert_eq!(f.self_intersection(), 0);
        assert_eq!(genus_of_class(&f).unwrap(), 7);
        assert!(matches!(genus_of_class(&DivisorClass::c()), Ok(11)));
        assert!(matches!(genus_from_numbers(1, 0), Err(Error::NonIntegralGenus(1))));
    }

    #[test]
    fn sections_and_contractions() {
        for l in CurveLabel::all() {
            assert_eq!(section_counts(l), (20, 9));
        }
    }

    #[test]
    fn group_preserves_pairing() {
        assert!(generators().iter().all(preserves_gram));
        let g = enumerate_group();
        assert!(g.iter().take(200).all(preserves_gram));
    }

    #[test]
    fn pullback_lattice() {
        let gens = pullback_generators();
        let (rank, disc) = discriminant_of(&gens).unwrap();
        assert_eq!(rank, 25);
        assert_eq!(disc, BigInt::from(4) * BigInt::from(3).pow(18));
        let mut ns: Vec<_> = CurveLabel::all().into_iter().map(DivisorClass::curve).collect();
        ns.push(DivisorClass::c());
        assert_eq!(numerical_index(&gens, &ns).unwrap(), LatticeIndex::Finite(2.into()));
    }

    #[test]
    fn solve_for_class() {
        let f = &DivisorClass::c() - &DivisorClass::e(1, 3, 2);
        let found = class_with_pairings(&f.pairing_vector()).unwrap().unwrap();
        assert!(numerically_equal(&found, &f));
        let mut bad = [0; NUM_GENERATORS];
        bad[0] = 1;
        assert!(class_with_pairings(&bad).unwrap().is_none());
    }

    #[test]
    fn display() {
        let f = &DivisorClass::c() - &(2 * &DivisorClass::e(1, 3, 2));
        assert_eq!(f.to_string(), "C - 2E13^w^2");
    }
}
