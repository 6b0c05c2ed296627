//! The complex reflection group `G(3,3,5)` of monomial 5x5 matrices with
//! cube-root-of-unity entries whose product is 1.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_rational::BigRational;

use crate::arith::{canonical_line_rep, EisMatrix, EisVector, EisensteinRational, DIM};
use crate::error::Result;
use crate::lattice::RatMatrix;

/// Monomial matrix sending `e_c` to `w^exps[c] e_{perm[c]}` (zero-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialMatrix {
    pub perm: [u8; DIM],
    pub exps: [u8; DIM],
}

impl MonomialMatrix {
    pub fn identity() -> Self {
        Self {
            perm: [0, 1, 2, 3, 4],
            exps: [0; DIM],
        }
    }

    pub fn diagonal(exps: [u8; DIM]) -> Self {
        Self {
            perm: [0, 1, 2, 3, 4],
            exps: exps.map(|e| e % 3),
        }
    }

    /// Permutation matrix of the transposition `(i j)`.
    pub fn transposition(i: usize, j: usize) -> Self {
        let mut m = Self::identity();
        m.perm.swap(i, j);
        m
    }

    /// True iff `perm` is a permutation and the scalars multiply to 1.
    pub fn is_valid(&self) -> bool {
        let mut seen = [false; DIM];
        for &p in &self.perm {
            if p as usize >= DIM || seen[p as usize] {
                return false;
            }
            seen[p as usize] = true;
        }
        self.exps.iter().all(|&e| e < 3) && self.exps.iter().map(|&e| e as u32).sum::<u32>() % 3 == 0
    }

    /// Matrix product `self * rhs`.
    pub fn compose(&self, rhs: &Self) -> Self {
        let mut out = Self::identity();
        for c in 0..DIM {
            let mid = rhs.perm[c] as usize;
            out.perm[c] = self.perm[mid];
            out.exps[c] = (rhs.exps[c] + self.exps[mid]) % 3;
        }
        out
    }

    pub fn inverse(&self) -> Self {
        let mut out = Self::identity();
        for c in 0..DIM {
            let p = self.perm[c] as usize;
            out.perm[p] = c as u8;
            out.exps[p] = (3 - self.exps[c]) % 3;
        }
        out
    }

    pub fn apply(&self, v: &EisVector) -> EisVector {
        let mut out = EisVector::zero();
        for c in 0..DIM {
            out.0[self.perm[c] as usize] = &EisensteinRational::alpha_pow(self.exps[c] as i64) * &v[c];
        }
        out
    }

    pub fn to_dense(&self) -> EisMatrix {
        EisMatrix::from_fn(|r, c| {
            if self.perm[c] as usize == r {
                EisensteinRational::alpha_pow(self.exps[c] as i64)
            } else {
                EisensteinRational::zero()
            }
        })
    }
}

/// The ten transpositions followed by `diag(w, w, w, w, w^2)`.
pub fn generators() -> Vec<MonomialMatrix> {
    let mut gens = permutation_generators();
    gens.push(MonomialMatrix::diagonal([1, 1, 1, 1, 2]));
    gens
}

/// The ten transposition matrices.
pub fn permutation_generators() -> Vec<MonomialMatrix> {
    let mut gens = Vec::new();
    for i in 0..DIM {
        for j in i + 1..DIM {
            gens.push(MonomialMatrix::transposition(i, j));
        }
    }
    gens
}

/// Closure of the generators under multiplication.
pub fn enumerate_group() -> HashSet<MonomialMatrix> {
    let gens = generators();
    let mut seen = HashSet::from([MonomialMatrix::identity()]);
    let mut queue = VecDeque::from([MonomialMatrix::identity()]);
    while let Some(g) = queue.pop_front() {
        for s in &gens {
            let h = s.compose(&g);
            if seen.insert(h) {
                queue.push_back(h);
            }
        }
    }
    seen
}

/// Orbit of the line through `start` under the generated group, as
/// canonical representatives.
pub fn line_orbit(start: &EisVector) -> Result<BTreeSet<EisVector>> {
    let gens = generators();
    let first = canonical_line_rep(start)?;
    let mut seen = BTreeSet::from([first.clone()]);
    let mut queue = VecDeque::from([first]);
    while let Some(v) = queue.pop_front() {
        for g in &gens {
            let w = canonical_line_rep(&g.apply(&v))?;
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    Ok(seen)
}

/// Basis of the real vector space of Hermitian `H` with `transpose(M) H conj(M) = H`
/// for every `M` in `gens`.
pub fn invariant_hermitian_forms_for(gens: &[MonomialMatrix]) -> Vec<EisMatrix> {
    let params = EisMatrix::hermitian_basis();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    let images: Vec<Vec<Vec<BigRational>>> = gens
        .iter()
        .map(|g| {
            let m = g.to_dense();
            let mt = m.transpose();
            let mc = m.conj();
            params.iter().map(|h| flatten(&(&(&(&mt * h) * &mc) - h))).collect()
        })
        .collect();
    for per_gen in &images {
        for k in 0..per_gen[0].len() {
            rows.push(per_gen.iter().map(|col| col[k].clone()).collect());
        }
    }
    let system = RatMatrix::from_rows(rows).expect("rectangular system");
    let kernel = system.nullspace();
    kernel
        .row_vecs()
        .into_iter()
        .map(|coeffs| {
            params.iter().zip(coeffs.iter()).fold(EisMatrix::zero(), |acc, (h, c)| {
                &acc + &h.scale(&EisensteinRational::from(c.clone()))
            })
        })
        .collect()
}

/// Invariant Hermitian forms for the full generating set of `G(3,3,5)`.
pub fn invariant_hermitian_forms() -> Vec<EisMatrix> {
    invariant_hermitian_forms_for(&generators())
}

fn flatten(m: &EisMatrix) -> Vec<BigRational> {
    m.0.iter()
        .flatten()
        .flat_map(|z| [z.re_coord(), z.alpha_coeff()])
        .collect()
}

/// True iff `h` is a rational multiple of the identity.
pub fn is_scalar_matrix(h: &EisMatrix) -> bool {
    let d = h.get(0, 0);
    (0..DIM).all(|r| {
        (0..DIM).all(|c| {
            if r == c {
                h.get(r, c) == d
            } else {
                h.get(r, c).is_zero()
            }
        })
    }) && d.as_rational().is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_valid() {
        assert!(generators().iter().all(MonomialMatrix::is_valid));
    }

    #[test]
    fn compose_matches_dense_product() {
        let g = generators();
        let a = g[3].compose(&g[10]);
        let b = g[10].compose(&g[7]).compose(&g[3]);
        for (x, y) in [(g[3], g[10]), (a, b), (b, a)] {
            assert_eq!(x.compose(&y).to_dense(), &x.to_dense() * &y.to_dense());
        }
        assert_eq!(a.compose(&a.inverse()), MonomialMatrix::identity());
    }

    #[test]
    fn apply_matches_dense() {
        let m = generators()[10].compose(&generators()[2]);
        let v = EisVector::line_direction(0, 3, 2);
        assert_eq!(m.apply(&v), m.to_dense().apply(&v));
    }

    #[test]
    fn group_order_and_closure() {
        let g = enumerate_group();
        assert_eq!(g.len(), 9720);
        assert!(g.contains(&MonomialMatrix::identity()));
        assert!(g.contains(&MonomialMatrix::diagonal([1, 2, 0, 0, 0])));
        assert!(!g.contains(&MonomialMatrix::diagonal([1, 0, 0, 0, 0])));
        assert!(g.iter().all(MonomialMatrix::is_valid));
        assert!(g.iter().all(|x| g.contains(&x.inverse())));
        let sample: Vec<_> = g.iter().take(40).collect();
        for x in &sample {
            for y in &sample {
                assert!(g.contains(&x.compose(y)));
            }
        }
        let perms: HashSet<_> = g.iter().map(|m| m.perm).collect();
        assert_eq!(perms.len(), 120);
        assert_eq!(g.iter().filter(|m| m.perm == [0, 1, 2, 3, 4]).count(), 81);
    }

    #[test]
    fn orbit_of_root_line() {
        let orbit = line_orbit(&EisVector::line_direction(0, 1, 0)).unwrap();
        assert_eq!(orbit.len(), 30);
        for i in 0..DIM {
            for j in i + 1..DIM {
                for k in 0..3 {
                    assert!(orbit.contains(&EisVector::line_direction(i, j, k)));
                }
            }
        }
        for g in generators() {
            for v in &orbit {
                assert!(orbit.contains(&canonical_line_rep(&g.apply(v)).unwrap()));
            }
        }
    }

    #[test]
    fn invariant_forms() {
        let full = invariant_hermitian_forms();
        assert_eq!(full.len(), 1);
        assert!(is_scalar_matrix(&full[0]));
        let perms = invariant_hermitian_forms_for(&permutation_generators());
        assert_eq!(perms.len(), 2);
        assert!(perms.iter().all(EisMatrix::is_hermitian));
    }
}
