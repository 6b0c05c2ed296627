//! The family of Fano surfaces `S_l` carrying 12 elliptic curves: their
//! lattice, canonical class, Picard numbers and the numerical data of the
//! triple cover of a blown-up abelian surface.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::{GeneratedLattice, IntMatrix};

/// One of the 12 curves: `E45^b` or `E_ij^b` with `i < j <= 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TwelveLabel {
    E45 { beta: u8 },
    Eij { i: u8, j: u8, beta: u8 },
}

impl TwelveLabel {
    /// The three `E45^b` followed by `E12^b, E13^b, E23^b`.
    pub fn all() -> Vec<Self> {
        let mut out: Vec<Self> = (0..3).map(|beta| Self::E45 { beta }).collect();
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            for beta in 0..3 {
                out.push(Self::Eij { i, j, beta });
            }
        }
        out
    }

    pub fn beta(&self) -> u8 {
        match *self {
            Self::E45 { beta } | Self::Eij { beta, .. } => beta,
        }
    }

    pub fn pair(&self, other: &Self) -> i64 {
        if self == other {
            return -3;
        }
        match (self, other) {
            (Self::E45 { .. }, Self::Eij { .. }) | (Self::Eij { .. }, Self::E45 { .. }) => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for TwelveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = ["1", "w", "w^2"][self.beta() as usize];
        match self {
            Self::E45 { .. } => write!(f, "E45^{b}"),
            Self::Eij { i, j, .. } => write!(f, "E{i}{j}^{b}"),
        }
    }
}

/// Gram matrix of the 12 curves followed by `C`.
pub fn gram_thirteen() -> IntMatrix {
    let labels = TwelveLabel::all();
    IntMatrix::from_i64(13, 13, |a, b| match (a == 12, b == 12) {
        (true, true) => 5,
        (true, false) | (false, true) => 1,
        (false, false) => labels[a].pair(&labels[b]),
    })
}

#[derive(Clone, Debug)]
pub struct TwelveLattice {
    pub rank: usize,
    pub discriminant: BigInt,
    /// Rank of the 12 curves alone.
    pub curve_rank: usize,
    /// `(positive, negative, zero)` inertia of the 13x13 Gram matrix.
    pub inertia: (usize, usize, usize),
}

pub fn twelve_lattice() -> Result<TwelveLattice> {
    let g = gram_thirteen();
    let lattice = GeneratedLattice::new(&g)?;
    let idx: Vec<usize> = (0..12).collect();
    Ok(TwelveLattice {
        rank: lattice.rank(),
        discriminant: lattice.discriminant()?,
        curve_rank: g.principal(&idx).to_rational().rank(),
        inertia: g.to_rational().inertia()?,
    })
}

/// `K = sum_b 2 E45^b + E12^b + E13^b + E23^b` as coefficients over the 13 generators.
pub fn twelve_canonical() -> [i64; 13] {
    std::array::from_fn(|k| match k {
        0..=2 => 2,
        3..=11 => 1,
        _ => 0,
    })
}

#[derive(Clone, Debug)]
pub struct CanonicalTwelve {
    /// `K . E` for the 12 curves.
    pub k_dot_curves: Vec<i64>,
    pub k_squared: i64,
    /// `E^2 + K.E = 2g - 2 = 0` for every curve.
    pub adjunction_holds: bool,
}

pub fn canonical_check_twelve() -> CanonicalTwelve {
    let g = gram_thirteen();
    let k = twelve_canonical();
    let dot = |a: &[i64], b: &[i64]| -> i64 {
        let mut s = BigInt::from(0);
        for (p, x) in a.iter().enumerate() {
            for (q, y) in b.iter().enumerate() {
                s += &g[(p, q)] * BigInt::from(x * y);
            }
        }
        i64::try_from(s).expect("small")
    };
    let unit = |n: usize| -> Vec<i64> { (0..13).map(|k| i64::from(k == n)).collect() };
    let k_dot_curves: Vec<i64> = (0..12).map(|n| dot(&k, &unit(n))).collect();
    let adjunction_holds = (0..12).all(|n| dot(&unit(n), &unit(n)) + k_dot_curves[n] == 0);
    CanonicalTwelve {
        k_squared: dot(&k, &k),
        k_dot_curves,
        adjunction_holds,
    }
}

/// Complex multiplication type of `E_l`, given as input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmCase {
    NoCm,
    CmOtherField,
    CmQAlpha,
}

impl FromStr for CmCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "no_cm" => Ok(Self::NoCm),
            "cm_other_field" => Ok(Self::CmOtherField),
            "cm_Q_alpha" => Ok(Self::CmQAlpha),
            _ => Err(Error::UnknownCmCase(s.to_string())),
        }
    }
}

/// Picard number of `E_0^3 x E_l^2`: five factors plus the ranks of `Hom`
/// between each pair of factors.
pub fn picard_rank_cases(case: CmCase) -> i64 {
    let hom_00 = 2;
    let (hom_ll, hom_0l) = match case {
        CmCase::NoCm => (1, 0),
        CmCase::CmOtherField => (2, 0),
        CmCase::CmQAlpha => (2, 2),
    };
    5 + 3 * hom_00 + hom_ll + 6 * hom_0l
}

/// Generators on the blow-up `Z` of `E_l x E_l` at the nine 3-torsion points of the diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlowupGen {
    F1,
    F2,
    Delta,
    T1,
    T2,
    Exc(u8),
}

/// Integer combination of the pulled-back classes `F1, F2, Delta, T1, T2` and
/// the exceptional curves `e_1, ..., e_9`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BlowupClass {
    pub base: [i64; 5],
    pub exceptional: [i64; 9],
}

impl BlowupClass {
    pub fn gen(g: BlowupGen) -> Self {
        let mut c = Self::default();
        match g {
            BlowupGen::F1 => c.base[0] = 1,
            BlowupGen::F2 => c.base[1] = 1,
            BlowupGen::Delta => c.base[2] = 1,
            BlowupGen::T1 => c.base[3] = 1,
            BlowupGen::T2 => c.base[4] = 1,
            BlowupGen::Exc(k) => c.exceptional[k as usize] = 1,
        }
        c
    }

    /// `e_1 + ... + e_9`.
    pub fn exceptional_sum() -> Self {
        Self {
            base: [0; 5],
            exceptional: [1; 9],
        }
    }

    /// Proper transform of a curve through all nine points.
    pub fn proper_transform(g: BlowupGen) -> Self {
        Self::gen(g).sub(&Self::exceptional_sum())
    }

    /// `K_Z = e_1 + ... + e_9` since `K_Y = 0`.
    pub fn canonical() -> Self {
        Self::exceptional_sum()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            base: std::array::from_fn(|k| self.base[k] + o.base[k]),
            exceptional: std::array::from_fn(|k| self.exceptional[k] + o.exceptional[k]),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self {
            base: std::array::from_fn(|k| self.base[k] - o.base[k]),
            exceptional: std::array::from_fn(|k| self.exceptional[k] - o.exceptional[k]),
        }
    }

    /// Pullback classes are orthogonal to the exceptional curves.
    pub fn dot(&self, o: &Self) -> i64 {
        const BASE: [[i64; 5]; 5] = [
            // F1 F2 D  T1 T2
            [0, 1, 1, 1, 4],
            [1, 0, 1, 4, 1],
            [1, 1, 0, 9, 9],
            [1, 4, 9, 0, 9],
            [4, 1, 9, 9, 0],
        ];
        let s: i64 = BASE
            .iter()
            .zip(&self.base)
            .map(|(row, a)| a * row.iter().zip(&o.base).map(|(m, b)| m * b).sum::<i64>())
            .sum();
        s - self
            .exceptional
            .iter()
            .zip(&o.exceptional)
            .map(|(a, b)| a * b)
            .sum::<i64>()
    }
}

#[derive(Clone, Debug)]
pub struct CoverConsistency {
    pub delta_tilde_sq: i64,
    pub k_z_dot_delta_tilde: i64,
    pub k_z_sq: i64,
    /// The proper transforms of `Delta, T1, T2` are pairwise disjoint.
    pub branch_disjoint: bool,
    pub c2_z: i64,
    /// `3 c2(Z) - 2 e(R)` with `R` a union of elliptic curves.
    pub c2_s: i64,
    /// `(3 K_Z^2, 4 K_Z.B, 4 R^2)` with `B = Delta~ + T1~ + T2~`.
    pub k_s_sq_terms: (i64, i64, i64),
    pub k_s_sq: i64,
    /// `(pi^* Delta~)^2 = 3 Delta~^2` against `(3E)^2 = 9 E^2`.
    pub ramification_pullback: (i64, i64),
}

pub fn cover_consistency() -> CoverConsistency {
    let d = BlowupClass::proper_transform(BlowupGen::Delta);
    let t1 = BlowupClass::proper_transform(BlowupGen::T1);
    let t2 = BlowupClass::proper_transform(BlowupGen::T2);
    let k = BlowupClass::canonical();
    let branch = d.add(&t1).add(&t2);
    let c2_y = 0;
    let c2_z = c2_y + 9;
    let euler_r = 0;
    // pi^* B = 3R and pi has degree 3, so R^2 = B^2 / 3
    let r_sq = branch.dot(&branch) / 3;
    let terms = (3 * k.dot(&k), 4 * k.dot(&branch), 4 * r_sq);
    CoverConsistency {
        delta_tilde_sq: d.dot(&d),
        k_z_dot_delta_tilde: k.dot(&d),
        k_z_sq: k.dot(&k),
        branch_disjoint: d.dot(&t1) == 0 && d.dot(&t2) == 0 && t1.dot(&t2) == 0,
        c2_z,
        c2_s: 3 * c2_z - 2 * euler_r,
        k_s_sq_terms: terms,
        k_s_sq: terms.0 + terms.1 + terms.2,
        ramification_pullback: (3 * d.dot(&d), 9 * -3),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_invariants() {
        let l = twelve_lattice().unwrap();
        assert_eq!(l.rank, 12);
        assert_eq!(l.discriminant, BigInt::from(2) * BigInt::from(3).pow(10));
        assert_eq!(l.curve_rank, 12);
        assert_eq!(l.inertia, (1, 11, 1));
    }

    #[test]
    fn gram_symmetries() {
        let g = gram_thirteen();
        let labels = TwelveLabel::all();
        let index = |l: TwelveLabel| labels.iter().position(|x| *x == l).unwrap();
        let perms: [[u8; 3]; 6] = [[1, 2, 3], [2, 1, 3], [1, 3, 2], [3, 2, 1], [2, 3, 1], [3, 1, 2]];
        for p in perms {
            for shift in 0..3u8 {
                let map = |l: TwelveLabel| match l {
                    TwelveLabel::E45 { beta } => TwelveLabel::E45 {
                        beta: (beta + shift) % 3,
                    },
                    TwelveLabel::Eij { i, j, beta } => {
                        let (a, b) = (p[i as usize - 1], p[j as usize - 1]);
                        TwelveLabel::Eij {
                            i: a.min(b),
                            j: a.max(b),
                            beta: (beta + shift) % 3,
                        }
                    }
                };
                for a in 0..12 {
                    for b in 0..12 {
                        assert_eq!(g[(a, b)], g[(index(map(labels[a])), index(map(labels[b])))]);
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_class() {
        let c = canonical_check_twelve();
        assert_eq!(c.k_dot_curves, vec![3; 12]);
        assert_eq!(c.k_squared, 45);
        assert!(c.adjunction_holds);
    }

    #[test]
    fn picard_cases() {
        assert_eq!(picard_rank_cases("no_cm".parse().unwrap()), 12);
        assert_eq!(picard_rank_cases("cm_other_field".parse().unwrap()), 13);
        assert_eq!(picard_rank_cases("cm_Q_alpha".parse().unwrap()), 25);
        assert!(matches!("cm".parse::<CmCase>(), Err(Error::UnknownCmCase(_))));
    }

    #[test]
    fn blowup_bookkeeping() {
        let r = cover_consistency();
        assert_eq!(r.delta_tilde_sq, -9);
        assert_eq!(r.k_z_dot_delta_tilde, 9);
        assert_eq!(r.k_z_sq, -9);
        assert!(r.branch_disjoint);
        assert_eq!(r.c2_z, 9);
        assert_eq!(r.c2_s, 27);
        assert_eq!(r.k_s_sq_terms, (-27, 108, -36));
        assert_eq!(r.k_s_sq, 45);
        assert_eq!(r.ramification_pullback, (-27, -27));
        let d = BlowupClass::proper_transform(BlowupGen::Delta);
        assert_eq!(d.dot(&BlowupClass::gen(BlowupGen::Exc(4))), 1);
        assert_eq!(
            BlowupClass::gen(BlowupGen::F1).dot(&BlowupClass::gen(BlowupGen::Delta)),
            1
        );
    }
}
