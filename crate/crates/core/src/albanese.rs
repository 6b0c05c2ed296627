//! The period lattice of the Albanese variety of the Fermat Fano surface,
//! its symmetric endomorphisms and the induced Neron-Severi lattice.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{hermitian_inner, EisMatrix, EisVector, EisensteinRational, DIM};
use crate::error::{Error, Result};
use crate::fermat;
use crate::group::MonomialMatrix;
use crate::lattice::{
    hermite_normal_form, integral_preimage, lattice_basis, lattice_coordinates, lattices_equal, rational_coordinates,
    smith_normal_form, sublattice_index, ExteriorForm, IntMatrix, LatticeIndex, RatMatrix, TwoForm,
};

/// Real rank of every period lattice.
pub const REAL_RANK: usize = 2 * DIM;

/// `omega(u, v) = -(w-coefficient of sum u_k conj(v_k))`, i.e. `(2/sqrt 3) Im`
/// of the standard Hermitian form up to sign.
pub fn omega(u: &EisVector, v: &EisVector) -> BigRational {
    -hermitian_inner(u, v).alpha_coeff()
}

/// `w = e_1 + ... + e_5`.
pub fn w_vector() -> EisVector {
    EisVector::all_ones()
}

/// `w^2 e_1 + w^2 e_2 + w e_3 + w e_4 + e_5`.
pub fn twisted_w_vector() -> EisVector {
    let a = EisensteinRational::alpha_pow;
    EisVector([a(2), a(2), a(1), a(1), a(0)])
}

/// `1 - w`.
pub fn lambda() -> EisensteinRational {
    &EisensteinRational::one() - &EisensteinRational::alpha_pow(1)
}

/// The six lattices between `Lambda_0` and `Lambda`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CandidateName {
    Lambda0,
    Lambda1,
    LambdaAlpha,
    LambdaAlpha2,
    LambdaAlphaMinus1,
    Lambda,
}

impl CandidateName {
    pub const ALL: [CandidateName; 6] = [
        CandidateName::Lambda0,
        CandidateName::Lambda1,
        CandidateName::LambdaAlpha,
        CandidateName::LambdaAlpha2,
        CandidateName::LambdaAlphaMinus1,
        CandidateName::Lambda,
    ];

    /// Identifier accepted on the command line.
    pub fn key(&self) -> &'static str {
        match self {
            Self::Lambda0 => "L0",
            Self::Lambda1 => "L1",
            Self::LambdaAlpha => "Lw",
            Self::LambdaAlpha2 => "Lw2",
            Self::LambdaAlphaMinus1 => "Lw-1",
            Self::Lambda => "L",
        }
    }
}

impl fmt::Display for CandidateName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Lambda0 => "Λ_0",
            Self::Lambda1 => "Λ_1",
            Self::LambdaAlpha => "Λ_α",
            Self::LambdaAlpha2 => "Λ_{α²}",
            Self::LambdaAlphaMinus1 => "Λ_{α−1}",
            Self::Lambda => "Λ",
        };
        f.write_str(s)
    }
}

impl FromStr for CandidateName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.key().eq_ignore_ascii_case(s) || c.to_string() == s)
            .ok_or_else(|| Error::UnknownCandidate(s.to_string()))
    }
}

/// A rank-10 lattice in `C^5` given by generators, with its canonical basis.
#[derive(Clone, Debug)]
pub struct PeriodLattice {
    pub name: String,
    pub gens: Vec<EisVector>,
    basis: Vec<EisVector>,
}

impl PeriodLattice {
    pub fn new(name: impl Into<String>, gens: Vec<EisVector>) -> Result<Self> {
        let b = lattice_basis(&real_matrix(&gens)?);
        if b.rows() != REAL_RANK {
            return Err(Error::DimensionMismatch(format!("lattice has real rank {}", b.rows())));
        }
        let basis = b
            .row_vecs()
            .iter()
            .map(|r| EisVector::from_real_coords(r))
            .collect::<Result<_>>()?;
        Ok(Self {
            name: name.into(),
            gens,
            basis,
        })
    }

    /// Canonical `Z`-basis (Hermite normal form of the real coordinates).
    pub fn basis(&self) -> &[EisVector] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> RatMatrix {
        real_matrix(&self.basis).expect("basis vectors have 10 real coordinates")
    }

    /// Integer coordinates of `v` in [`PeriodLattice::basis`].
    pub fn coordinates(&self, v: &EisVector) -> Result<Option<Vec<BigInt>>> {
        lattice_coordinates(&self.basis_matrix(), &v.real_coords())
    }

    pub fn contains(&self, v: &EisVector) -> bool {
        matches!(self.coordinates(v), Ok(Some(_)))
    }

    pub fn same_set(&self, other: &Self) -> bool {
        self.basis == other.basis
    }

    /// `[self : sub]`.
    pub fn index_of(&self, sub: &Self) -> Result<LatticeIndex> {
        sublattice_index(&sub.basis_matrix(), &self.basis_matrix())
    }

    /// Invariant factors `> 1` of `self / sub`.
    pub fn quotient_invariants(&self, sub: &Self) -> Result<Vec<BigInt>> {
        let rows = sub
            .basis
            .iter()
            .map(|v| self.coordinates(v)?.ok_or(Error::NotSublattice))
            .collect::<Result<Vec<_>>>()?;
        let snf = smith_normal_form(&IntMatrix::from_rows(rows)?);
        Ok(snf.invariant_factors.into_iter().filter(|d| !d.is_one()).collect())
    }

    /// Apply `alpha -> alpha^2` to every generator.
    pub fn conjugate(&self) -> Result<Self> {
        Self::new(
            format!("conj({})", self.name),
            self.gens.iter().map(EisVector::conj).collect(),
        )
    }

    pub fn is_stable_under(&self, m: &MonomialMatrix) -> bool {
        self.basis.iter().all(|b| self.contains(&m.apply(b)))
    }
}

fn real_matrix(vs: &[EisVector]) -> Result<RatMatrix> {
    RatMatrix::from_rows(vs.iter().map(EisVector::real_coords).collect())
}

fn with_alpha_multiples(vs: &[EisVector]) -> Vec<EisVector> {
    let a = EisensteinRational::alpha_pow(1);
    vs.iter().flat_map(|v| [v.clone(), v.scale(&a)]).collect()
}

/// Generators `e_i - b e_j` and their `w` multiples of `Lambda_0`.
pub fn lambda0_generators() -> Vec<EisVector> {
    let mut dirs = Vec::new();
    for i in 0..DIM {
        for j in i + 1..DIM {
            for k in 0..3 {
                dirs.push(EisVector::line_direction(i, j, k));
            }
        }
    }
    with_alpha_multiples(&dirs)
}

/// Generators of one of the six candidates.
pub fn candidate_generators(name: CandidateName) -> Vec<EisVector> {
    let mut gens = lambda0_generators();
    let inv = (&EisensteinRational::alpha_pow(1) - &EisensteinRational::one())
        .inv()
        .expect("w - 1 is nonzero");
    let scaled = |k: i64| w_vector().scale(&(&EisensteinRational::alpha_pow(k) * &inv));
    match name {
        CandidateName::Lambda0 => {}
        CandidateName::Lambda1 => gens.push(scaled(0)),
        CandidateName::LambdaAlpha => gens.push(scaled(1)),
        CandidateName::LambdaAlpha2 => gens.push(scaled(2)),
        CandidateName::LambdaAlphaMinus1 => gens.push(w_vector()),
        CandidateName::Lambda => {
            gens.push(scaled(0));
            gens.push(scaled(1));
        }
    }
    gens
}

pub fn candidate(name: CandidateName) -> Result<PeriodLattice> {
    PeriodLattice::new(name.to_string(), candidate_generators(name))
}

/// All six candidates in [`CandidateName::ALL`] order.
pub fn build_candidates() -> Result<Vec<(CandidateName, PeriodLattice)>> {
    CandidateName::ALL.into_iter().map(|n| Ok((n, candidate(n)?))).collect()
}

/// `Z[w] e_1 + ... + Z[w] e_5`.
pub fn split_lattice() -> Result<PeriodLattice> {
    PeriodLattice::new(
        "⊕Z[α]e_i",
        with_alpha_multiples(&(0..DIM).map(EisVector::basis).collect::<Vec<_>>()),
    )
}

/// `{a in Z[w]^5 : sum a_i in (1 - w)}`, from the generators `e_i - e_5`,
/// `(1 - w) e_5` and their `w` multiples.
pub fn congruence_lattice() -> Result<PeriodLattice> {
    let mut gens: Vec<EisVector> = (0..DIM - 1).map(|i| EisVector::line_direction(i, DIM - 1, 0)).collect();
    gens.push(EisVector::basis(DIM - 1).scale(&lambda()));
    PeriodLattice::new("congruence", with_alpha_multiples(&gens))
}

/// The presentation `sum Z[w](e_i - e_5) + c Z[3w] v` with
/// `v = w^2 e_1 + w^2 e_2 + w e_3 + w e_4 + e_5`.
pub fn presentation(c: &EisensteinRational) -> Result<PeriodLattice> {
    let dirs: Vec<EisVector> = (0..DIM - 1).map(|i| EisVector::line_direction(i, DIM - 1, 0)).collect();
    let mut gens = with_alpha_multiples(&dirs);
    let v = twisted_w_vector().scale(c);
    let three_alpha = EisensteinRational::from(crate::arith::EisensteinInt::new(0, 3));
    gens.push(v.scale(&three_alpha));
    gens.push(v);
    PeriodLattice::new(format!("presentation({c})"), gens)
}

/// `omega` on the basis of `l` and whether all values are integers.
pub fn omega_on_lattice(l: &PeriodLattice) -> (TwoForm, bool) {
    let b = l.basis();
    let form = TwoForm::from_upper(REAL_RANK, |p, q| omega(&b[p], &b[q]));
    let integral = form.is_integral();
    (form, integral)
}

/// Which candidate the Galois conjugate of `l` equals.
pub fn galois_substitute(l: &PeriodLattice) -> Result<CandidateName> {
    let conj = l.conjugate()?;
    for name in CandidateName::ALL {
        if candidate(name)?.same_set(&conj) {
            return Ok(name);
        }
    }
    Err(Error::NotClosedUnderGalois)
}

/// One step of the elimination among the six candidates.
#[derive(Clone, Debug)]
pub struct EliminationStep {
    pub candidate: CandidateName,
    pub excluded: bool,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct H1Selection {
    pub name: CandidateName,
    pub lattice: PeriodLattice,
    pub steps: Vec<EliminationStep>,
    pub pfaffian: BigRational,
    /// The `(1+w)/(1-w) Z[3w]` presentation equals the selected lattice.
    pub theorem_presentation_matches: bool,
    /// The `w^2/(1-w) Z[3w]` presentation equals the selected lattice.
    pub family_presentation_matches: bool,
}

/// Eliminate candidates down to `H_1(A, Z)`.
pub fn select_h1() -> Result<H1Selection> {
    let mut steps = Vec::new();
    let mut remaining = Vec::new();
    let split = split_lattice()?;
    for (name, l) in build_candidates()? {
        let (form, integral) = omega_on_lattice(&l);
        let det = form.det()?;
        let reason = if !integral {
            Some("omega takes non-integral values".to_string())
        } else if det != BigRational::one() {
            Some(format!("det(omega) = {det}, not unimodular"))
        } else if l.same_set(&split) {
            Some("equals the split lattice ⊕Z[α]e_i (product of Jacobians; geometric input)".to_string())
        } else {
            None
        };
        steps.push(EliminationStep {
            candidate: name,
            excluded: reason.is_some(),
            reason: reason.unwrap_or_default(),
        });
        if !steps.last().expect("pushed").excluded {
            remaining.push((name, l));
        }
    }
    let mut fixed = Vec::new();
    for (name, l) in remaining {
        let image = galois_substitute(&l)?;
        let step = steps.iter_mut().find(|s| s.candidate == name).expect("recorded");
        if image == name {
            step.reason = "fixed by α ↦ α²".into();
            fixed.push((name, l));
        } else {
            step.excluded = true;
            step.reason = format!("α ↦ α² sends it to {image}");
        }
    }
    if fixed.len() != 1 {
        return Err(Error::NotClosedUnderGalois);
    }
    let (name, lattice) = fixed.pop().expect("one left");
    let pfaffian = omega_on_lattice(&lattice).0.pfaffian()?;
    let one_plus = &EisensteinRational::one() + &EisensteinRational::alpha_pow(1);
    let theorem = presentation(&(&one_plus / &lambda()))?;
    let family = presentation(&(&EisensteinRational::alpha_pow(2) / &lambda()))?;
    Ok(H1Selection {
        name,
        theorem_presentation_matches: theorem.same_set(&lattice),
        family_presentation_matches: family.same_set(&lattice),
        lattice,
        steps,
        pfaffian,
    })
}

/// `Z`-basis of `l ∩ C d` (two vectors), in Hermite normal form.
pub fn line_intersection(l: &PeriodLattice, d: &EisVector) -> Result<Vec<EisVector>> {
    if d.is_zero() {
        return Err(Error::ZeroVector);
    }
    let a = EisensteinRational::alpha_pow(1);
    let span = real_matrix(&[d.clone(), d.scale(&a)])?;
    let annihilator = span.nullspace();
    let b = l.basis_matrix();
    let (m, _) = b.mul(&annihilator.transpose())?.to_integer_scaled();
    let kernel = hermite_normal_form(&m).left_kernel();
    let vecs = kernel.to_rational().mul(&b)?;
    let basis = lattice_basis(&vecs);
    basis
        .row_vecs()
        .iter()
        .map(|r| EisVector::from_real_coords(r))
        .collect()
}

/// `Z`-module spanned by `c d` and `c' d` for the given scalars, as vectors.
pub fn scalar_module(d: &EisVector, scalars: &[EisensteinRational]) -> Vec<EisVector> {
    scalars.iter().map(|c| d.scale(c)).collect()
}

/// Same `Z`-module?
pub fn same_module(a: &[EisVector], b: &[EisVector]) -> Result<bool> {
    Ok(lattices_equal(&real_matrix(a)?, &real_matrix(b)?))
}

/// An endomorphism of `C^5` in the basis `e_1, ..., e_5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoMatrix(pub EisMatrix);

impl EndoMatrix {
    /// `transpose(M) = conj(M)`.
    pub fn is_symmetric(&self) -> bool {
        self.0.is_hermitian()
    }

    pub fn preserves(&self, l: &PeriodLattice) -> bool {
        l.basis().iter().all(|b| l.contains(&self.0.apply(b)))
    }

    /// Matrix of the same map in the basis `u_1, ..., u_5`.
    pub fn to_u_basis(&self) -> EisMatrix {
        let p = u_basis_matrix();
        let inv = p.inverse().expect("u basis is a basis");
        &(&inv * &self.0) * &p
    }
}

/// Columns `u_1 = e_1 - e_2, ..., u_4 = e_4 - e_5, u_5 = w^2/(1-w) v`.
pub fn u_basis_matrix() -> EisMatrix {
    let mut cols: [EisVector; DIM] = std::array::from_fn(|k| {
        if k + 1 < DIM {
            EisVector::line_direction(k, k + 1, 0)
        } else {
            EisVector::zero()
        }
    });
    cols[DIM - 1] = twisted_w_vector().scale(&(&EisensteinRational::alpha_pow(2) / &lambda()));
    EisMatrix::from_columns(&cols)
}

/// Data attached to `H_1(A, Z)`: its basis, the polarization form and a cache for
/// `Theta^3`.
#[derive(Clone, Debug)]
pub struct Albanese {
    pub h1: PeriodLattice,
    pub theta: TwoForm,
    theta_cubed: ExteriorForm,
    pf_sign: BigRational,
}

impl Albanese {
    pub fn new() -> Result<Self> {
        Self::with_lattice(select_h1()?.lattice)
    }

    pub fn with_lattice(h1: PeriodLattice) -> Result<Self> {
        let (theta, _) = omega_on_lattice(&h1);
        let pf = theta.pfaffian()?;
        if pf.is_zero() {
            return Err(Error::DegeneratePairing);
        }
        let pf_sign = if pf.is_positive() {
            BigRational::one()
        } else {
            -BigRational::one()
        };
        let mut theta_cubed = ExteriorForm::unit(REAL_RANK);
        for _ in 0..3 {
            theta_cubed = theta_cubed.wedge(&theta)?;
        }
        Ok(Self {
            h1,
            theta,
            theta_cubed,
            pf_sign,
        })
    }

    /// `(1/3!) int Theta^3 ^ f ^ g`, oriented so that `(1/5!) int Theta^5 = 1`.
    pub fn q_theta(&self, f: &TwoForm, g: &TwoForm) -> Result<BigRational> {
        let top = self.theta_cubed.wedge(f)?.wedge(g)?.top_coefficient();
        Ok(top / (BigRational::from_integer(6.into()) * &self.pf_sign))
    }

    /// `q_theta` with the cached `Theta^3 ^ f` reused across many `g`.
    pub fn q_theta_row(&self, f: &TwoForm, gs: &[TwoForm]) -> Result<Vec<BigRational>> {
        let partial = self.theta_cubed.wedge(f)?;
        let scale = BigRational::from_integer(6.into()) * &self.pf_sign;
        gs.iter()
            .map(|g| Ok(partial.wedge(g)?.top_coefficient() / &scale))
            .collect()
    }

    /// Pullback of the volume form of `C/Z[w]` by `x -> l(x)`:
    /// `(u, v) -> -(w-coefficient of l(u) conj(l(v)))`.
    pub fn fibre_form(&self, coeffs: &EisVector) -> TwoForm {
        let b = self.h1.basis();
        let eval = |x: &EisVector| (0..DIM).fold(EisensteinRational::zero(), |acc, k| &acc + &(&coeffs[k] * &x[k]));
        let vals: Vec<EisensteinRational> = b.iter().map(eval).collect();
        TwoForm::from_upper(REAL_RANK, |p, q| -(&vals[p] * &vals[q].conj()).alpha_coeff())
    }

    /// `phi(M)(x, y) = -(w-coefficient of sum (M x)_k conj(y_k))` on the basis of `H_1`.
    pub fn chern_of_endomorphism(&self, m: &EndoMatrix) -> Result<TwoForm> {
        let b = self.h1.basis();
        let images: Vec<EisVector> = b.iter().map(|x| m.0.apply(x)).collect();
        let form = TwoForm::new(RatMatrix::from_fn(REAL_RANK, REAL_RANK, |p, q| {
            -hermitian_inner(&images[p], &b[q]).alpha_coeff()
        }))?;
        if !form.is_integral() {
            return Err(Error::NotInNs(format!("{}", m.0)));
        }
        Ok(form)
    }

    /// `Z`-basis of the Hermitian matrices mapping `H_1` into itself.
    pub fn symmetric_endomorphisms(&self) -> Result<Vec<EndoMatrix>> {
        let params = EisMatrix::hermitian_basis();
        let b = self.h1.basis_matrix();
        let basis = self.h1.basis();
        // column p: coordinates of params[p] applied to each basis vector
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(params.len());
        for m in &params {
            let mut col = Vec::with_capacity(REAL_RANK * REAL_RANK);
            for x in basis {
                let y = m.apply(x).real_coords();
                let c = rational_coordinates(&b, &y)?.ok_or(Error::Singular)?;
                col.extend(c);
            }
            cols.push(col);
        }
        let t = RatMatrix::from_rows(cols)?.transpose();
        let lattice = integral_preimage(&t)?;
        Ok(lattice
            .row_vecs()
            .iter()
            .map(|c| {
                EndoMatrix(params.iter().zip(c).fold(EisMatrix::zero(), |acc, (m, x)| {
                    &acc + &m.scale(&EisensteinRational::from(x.clone()))
                }))
            })
            .collect())
    }
}

/// The Neron-Severi lattice of `A` realised through `End^s(A)`.
#[derive(Clone, Debug)]
pub struct NsAlbanese {
    pub endomorphisms: Vec<EndoMatrix>,
    pub forms: Vec<TwoForm>,
    pub gram: IntMatrix,
    /// Rank of the 25 image forms as vectors over `Q`.
    pub form_rank: usize,
}

impl NsAlbanese {
    pub fn compute(alb: &Albanese) -> Result<Self> {
        let endomorphisms = alb.symmetric_endomorphisms()?;
        let forms = endomorphisms
            .iter()
            .map(|m| alb.chern_of_endomorphism(m))
            .collect::<Result<Vec<_>>>()?;
        let n = forms.len();
        let mut gram = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            let row = alb.q_theta_row(&forms[i], &forms[i..])?;
            for (k, v) in row.into_iter().enumerate() {
                if !v.is_integer() {
                    return Err(Error::NotInNs(format!("q_theta value {v}")));
                }
                gram[i][i + k] = v.to_integer();
                gram[i + k][i] = gram[i][i + k].clone();
            }
        }
        let form_rank = RatMatrix::from_rows(forms.iter().map(TwoForm::upper_entries).collect())?.rank();
        Ok(Self {
            endomorphisms,
            forms,
            gram: IntMatrix::from_rows(gram)?,
            form_rank,
        })
    }

    pub fn rank(&self) -> usize {
        self.endomorphisms.len()
    }

    pub fn discriminant(&self) -> Result<BigInt> {
        Ok(self.gram.det()?.abs())
    }
}

/// Surface-side check of the pullback image.
#[derive(Clone, Debug)]
pub struct PullbackImage {
    pub rank: usize,
    pub discriminant: BigInt,
    pub index_in_ns: LatticeIndex,
    pub ns_discriminant: BigInt,
}

pub fn pullback_image_check() -> Result<PullbackImage> {
    let gens = fermat::pullback_generators();
    let (rank, discriminant) = fermat::discriminant_of(&gens)?;
    let all: Vec<_> = (0..fermat::NUM_GENERATORS)
        .map(fermat::DivisorClass::generator)
        .collect();
    let (_, ns_discriminant) = fermat::discriminant_of(&all)?;
    Ok(PullbackImage {
        rank,
        discriminant,
        index_in_ns: fermat::numerical_index(&gens, &all)?,
        ns_discriminant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::EisensteinInt;
    use crate::group::generators;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ei(a: i64, b: i64) -> EisensteinRational {
        EisensteinInt::new(a, b).into()
    }

    #[test]
    fn omega_on_basis_pairs() {
        let e = EisVector::basis(0);
        let ae = e.scale(&EisensteinRational::alpha_pow(1));
        assert_eq!(omega(&e, &ae), q(1, 1));
        assert_eq!(omega(&ae, &e), q(-1, 1));
        assert_eq!(omega(&e, &EisVector::basis(1)), q(0, 1));
    }

    #[test]
    fn candidate_determinants() {
        let dets: Vec<(CandidateName, BigRational, bool)> = build_candidates()
            .unwrap()
            .into_iter()
            .map(|(n, l)| {
                let (f, integral) = omega_on_lattice(&l);
                (n, f.det().unwrap(), integral)
            })
            .collect();
        for (n, det, integral) in dets {
            let (want, want_int) = match n {
                CandidateName::Lambda0 => (q(9, 1), true),
                CandidateName::Lambda => (q(1, 9), false),
                _ => (q(1, 1), true),
            };
            assert_eq!(det, want, "{n}");
            assert_eq!(integral, want_int, "{n}");
        }
    }

    #[test]
    fn indices_over_lambda0() {
        let l0 = candidate(CandidateName::Lambda0).unwrap();
        for (n, l) in build_candidates().unwrap() {
            let want = match n {
                CandidateName::Lambda0 => 1,
                CandidateName::Lambda => 9,
                _ => 3,
            };
            assert_eq!(l.index_of(&l0).unwrap(), LatticeIndex::Finite(want.into()), "{n}");
        }
    }

    #[test]
    fn quotient_is_elementary_abelian() {
        let l0 = candidate(CandidateName::Lambda0).unwrap();
        let l = candidate(CandidateName::Lambda).unwrap();
        assert_eq!(
            l.quotient_invariants(&l0).unwrap(),
            vec![BigInt::from(3), BigInt::from(3)]
        );
    }

    #[test]
    fn lambda0_is_the_congruence_lattice() {
        assert!(candidate(CandidateName::Lambda0)
            .unwrap()
            .same_set(&congruence_lattice().unwrap()));
        assert!(candidate(CandidateName::LambdaAlphaMinus1)
            .unwrap()
            .same_set(&split_lattice().unwrap()));
    }

    #[test]
    fn non_integral_witness() {
        let inv = (&EisensteinRational::alpha_pow(1) - &EisensteinRational::one())
            .inv()
            .unwrap();
        let u = w_vector().scale(&inv);
        let v = u.scale(&EisensteinRational::alpha_pow(1));
        assert_eq!(omega(&u, &v).abs(), q(5, 3));
    }

    #[test]
    fn galois_action() {
        let expect = [
            (CandidateName::Lambda0, CandidateName::Lambda0),
            (CandidateName::Lambda1, CandidateName::LambdaAlpha),
            (CandidateName::LambdaAlpha, CandidateName::Lambda1),
            (CandidateName::LambdaAlpha2, CandidateName::LambdaAlpha2),
            (CandidateName::LambdaAlphaMinus1, CandidateName::LambdaAlphaMinus1),
            (CandidateName::Lambda, CandidateName::Lambda),
        ];
        for (from, to) in expect {
            assert_eq!(galois_substitute(&candidate(from).unwrap()).unwrap(), to);
        }
        assert!(galois_substitute(&split_lattice().unwrap().conjugate().unwrap()).is_ok());
        let odd = PeriodLattice::new("odd", {
            let mut g = lambda0_generators();
            g.push(EisVector::basis(0).scale(&q(1, 2).into()));
            g
        })
        .unwrap();
        assert!(matches!(galois_substitute(&odd), Err(Error::NotClosedUnderGalois)));
    }

    #[test]
    fn selection() {
        let s = select_h1().unwrap();
        assert_eq!(s.name, CandidateName::LambdaAlpha2);
        assert_eq!(s.pfaffian.abs(), q(1, 1));
        assert!(s.theorem_presentation_matches);
        assert!(s.family_presentation_matches);
        assert_eq!(s.steps.iter().filter(|x| !x.excluded).count(), 1);
        for (i, name) in [
            CandidateName::Lambda1,
            CandidateName::LambdaAlpha,
            CandidateName::LambdaAlpha2,
        ]
        .into_iter()
        .enumerate()
        {
            let c = &EisensteinRational::alpha_pow(i as i64) / &lambda();
            assert!(presentation(&c).unwrap().same_set(&candidate(name).unwrap()));
        }
    }

    #[test]
    fn group_stability() {
        for (_, l) in build_candidates().unwrap() {
            for g in generators().iter().take(10) {
                assert!(l.is_stable_under(g), "{}", l.name);
            }
        }
        let l0 = candidate(CandidateName::Lambda0).unwrap();
        assert!(generators().iter().all(|g| l0.is_stable_under(g)));
        let u = EisVector::line_direction(0, 2, 1);
        let v = EisVector::basis(3).scale(&ei(2, -1));
        for g in generators() {
            assert_eq!(omega(&g.apply(&u), &g.apply(&v)), omega(&u, &v));
        }
    }

    #[test]
    fn line_intersections() {
        let h1 = select_h1().unwrap().lattice;
        let a = EisensteinRational::alpha_pow(1);
        for (i, j, k) in [(0, 1, 0), (1, 4, 2), (2, 3, 1)] {
            let d = EisVector::line_direction(i, j, k);
            let got = line_intersection(&h1, &d).unwrap();
            assert_eq!(got.len(), 2);
            assert!(same_module(&got, &scalar_module(&d, &[EisensteinRational::one(), a.clone()])).unwrap());
        }
        let c = &EisensteinRational::alpha_pow(2) / &lambda();
        let want = scalar_module(&w_vector(), &[c.clone(), &c * &ei(0, 3)]);
        assert!(same_module(&line_intersection(&h1, &w_vector()).unwrap(), &want).unwrap());
        let l0 = candidate(CandidateName::Lambda0).unwrap();
        let e1 = EisVector::basis(0);
        let want = scalar_module(&e1, &[lambda(), &lambda() * &a]);
        assert!(same_module(&line_intersection(&l0, &e1).unwrap(), &want).unwrap());
        assert!(matches!(
            line_intersection(&l0, &EisVector::zero()),
            Err(Error::ZeroVector)
        ));
    }

    #[test]
    fn theta_normalisation() {
        let alb = Albanese::new().unwrap();
        assert_eq!(alb.q_theta(&alb.theta, &alb.theta).unwrap(), q(20, 1));
        let l = EisVector([ei(0, 0), ei(0, 0), ei(0, 0), ei(1, 0), ei(0, -1)]);
        let l2 = EisVector([ei(0, 0), ei(0, 0), ei(0, 0), ei(1, 0), ei(1, 1)]);
        let f = alb.fibre_form(&l);
        let g = alb.fibre_form(&l2);
        assert_eq!(alb.q_theta(&f, &f).unwrap(), q(0, 1));
        assert_eq!(alb.q_theta(&f, &g).unwrap(), q(3, 1));
        assert_eq!(alb.q_theta(&f, &alb.theta).unwrap(), q(2 * 2 * 2, 1));
    }

    #[test]
    fn identity_is_principal() {
        let alb = Albanese::new().unwrap();
        let id = EndoMatrix(EisMatrix::identity());
        assert!(id.is_symmetric() && id.preserves(&alb.h1));
        assert_eq!(
            alb.chern_of_endomorphism(&id).unwrap().pfaffian().unwrap().abs(),
            q(1, 1)
        );
        let alpha = EndoMatrix(EisMatrix::identity().scale(&EisensteinRational::alpha_pow(1)));
        assert!(!alpha.is_symmetric());
        let half = EndoMatrix(EisMatrix::identity().scale(&q(1, 2).into()));
        assert!(matches!(alb.chern_of_endomorphism(&half), Err(Error::NotInNs(_))));
    }

    #[test]
    fn u_basis_roundtrip() {
        let m = EndoMatrix(EisMatrix::identity());
        assert_eq!(m.to_u_basis(), EisMatrix::identity());
        let p = u_basis_matrix();
        let h1 = select_h1().unwrap().lattice;
        for k in 0..DIM {
            assert!(h1.contains(&p.column(k)));
        }
    }

    #[test]
    fn symmetric_endomorphisms_and_ns() {
        let alb = Albanese::new().unwrap();
        let ns = NsAlbanese::compute(&alb).unwrap();
        assert_eq!(ns.rank(), 25);
        assert_eq!(ns.form_rank, 25);
        assert!(ns
            .endomorphisms
            .iter()
            .all(|m| m.is_symmetric() && m.preserves(&alb.h1)));
        assert_eq!(ns.discriminant().unwrap(), BigInt::from(4) * BigInt::from(3).pow(18));
        let f0 = &ns.forms[0];
        let f1 = &ns.forms[1];
        let sum = alb
            .chern_of_endomorphism(&EndoMatrix(&ns.endomorphisms[0].0 + &ns.endomorphisms[1].0))
            .unwrap();
        assert_eq!(sum, f0 + f1);
    }

    #[test]
    fn pullback_surface_side() {
        let p = pullback_image_check().unwrap();
        assert_eq!(p.rank, 25);
        assert_eq!(p.discriminant, BigInt::from(4) * BigInt::from(3).pow(18));
        assert_eq!(p.index_in_ns, LatticeIndex::Finite(2.into()));
        assert_eq!(p.discriminant, BigInt::from(4) * &p.ns_discriminant);
    }
}
