//! Elliptic fibrations `gamma_l` of the Fermat Fano surface indexed by linear
//! forms `l` in the dual period module, and their numerical invariants.

mod parse;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{divisible_by_lambda, EisVector, EisensteinInt, EisensteinRational, DIM};
use crate::error::{Error, Result};
use crate::fermat::{self, pair, CurveLabel, DivisorClass, NUM_CURVES};

pub use parse::parse_linear_form;

/// `l = a_1 x_1 + ... + a_5 x_5`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    pub coeffs: [EisensteinInt; DIM],
}

fn small(x: &BigInt) -> Result<i64> {
    x.to_i64().ok_or_else(|| Error::Overflow(x.to_string()))
}

impl LinearForm {
    pub fn new(coeffs: [EisensteinInt; DIM]) -> Self {
        Self { coeffs }
    }

    /// `x_i - w^k x_j`, 1-based indices.
    pub fn difference(i: usize, j: usize, k: i64) -> Self {
        let mut c: [EisensteinInt; DIM] = std::array::from_fn(|_| EisensteinInt::zero());
        c[i - 1] = EisensteinInt::one();
        c[j - 1] = -EisensteinInt::alpha_pow(k);
        Self::new(c)
    }

    pub fn scale(&self, c: &EisensteinInt) -> Self {
        Self::new(std::array::from_fn(|k| c * &self.coeffs[k]))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(EisensteinInt::is_zero)
    }

    /// `l(v) = sum a_i v_i`.
    pub fn eval(&self, v: &EisVector) -> EisensteinRational {
        (0..DIM).fold(EisensteinRational::zero(), |acc, k| {
            &acc + &(&EisensteinRational::from(self.coeffs[k].clone()) * &v[k])
        })
    }

    pub fn as_vector(&self) -> EisVector {
        EisVector::from_ints(self.coeffs.clone())
    }

    /// `||l||^2 = sum N(a_i)`.
    pub fn norm_sq(&self) -> BigInt {
        self.coeffs.iter().map(EisensteinInt::norm).sum()
    }

    /// `<l, l'> = sum a_i conj(b_i)`.
    pub fn inner(&self, other: &Self) -> EisensteinInt {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .fold(EisensteinInt::zero(), |acc, (a, b)| &acc + &(a * &b.conj()))
    }

    fn checked(&self) -> Result<()> {
        if self.is_zero() {
            return Err(Error::ZeroForm);
        }
        if !lambda_star_membership(self) {
            return Err(Error::NotInDualModule);
        }
        Ok(())
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (neg, mag) = if a.a <= BigInt::zero() && a.b <= BigInt::zero() {
                (true, -a)
            } else {
                (false, a.clone())
            };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            if mag == EisensteinInt::one() {
                write!(f, "x{}", k + 1)?;
            } else if mag.a.is_zero() || mag.b.is_zero() {
                write!(f, "{mag}*x{}", k + 1)?;
            } else {
                write!(f, "({mag})*x{}", k + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for LinearForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_linear_form(s)
    }
}

/// `l` lies in the `Z[w]`-span of the `x_i - b x_j` iff `sum a_i` is divisible by `1 - w`.
pub fn lambda_star_membership(l: &LinearForm) -> bool {
    let sum = l.coeffs.iter().fold(EisensteinInt::zero(), |acc, a| &acc + a);
    divisible_by_lambda(&sum)
}

/// Intersection numbers of the fibre class `F_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibreIntersections {
    /// `F . E` in curve-label order.
    pub curves: [i64; NUM_CURVES],
    /// `F . C`.
    pub c: i64,
}

impl FibreIntersections {
    pub fn with(&self, label: CurveLabel) -> i64 {
        self.curves[label.index()]
    }

    /// The same numbers as a pairing vector against the 31 generators.
    pub fn pairing_vector(&self) -> [i64; fermat::NUM_GENERATORS] {
        std::array::from_fn(|k| if k == fermat::C_INDEX { self.c } else { self.curves[k] })
    }
}

/// `F . E_ij^b = N(l(e_i - b e_j))` and `F . C = 2 ||l||^2`.
pub fn fiber_intersections(l: &LinearForm) -> Result<FibreIntersections> {
    l.checked()?;
    let mut curves = [0; NUM_CURVES];
    for label in CurveLabel::all() {
        let v = l.eval(&label.direction()).norm();
        curves[label.index()] = small(&v.to_integer())?;
    }
    Ok(FibreIntersections {
        curves,
        c: small(&(BigInt::from(2) * l.norm_sq()))?,
    })
}

/// `g(F_l) = 1 + 3 ||l||^2`.
pub fn fiber_genus(l: &LinearForm) -> Result<i64> {
    l.checked()?;
    small(&(BigInt::from(1) + BigInt::from(3) * l.norm_sq()))
}

/// `F_l . F_l' = ||l||^2 ||l'||^2 - |<l, l'>|^2`.
pub fn fiber_pair_degree(l: &LinearForm, l2: &LinearForm) -> Result<i64> {
    l.checked()?;
    l2.checked()?;
    small(&(l.norm_sq() * l2.norm_sq() - l.inner(l2).norm()))
}

/// A class supported on the 25 basis curves and `C` with the intersection
/// numbers of `F_l`.
pub fn fiber_class_coordinates(l: &LinearForm) -> Result<DivisorClass> {
    let target = fiber_intersections(l)?.pairing_vector();
    let class = fermat::class_with_pairings_over(&target, &fermat::basis_indices())?
        .ok_or_else(|| Error::NotInNs(l.to_string()))?;
    if class.pairing_vector() != target || class.self_intersection() != 0 {
        return Err(Error::NotInNs(l.to_string()));
    }
    Ok(class)
}

/// Forms with coefficients `a + b w`, `|a|, |b| <= 3`, adjusted in `a_5` to lie in the
/// dual module; zero forms are skipped.
pub fn sample_forms(seed: u64, count: usize) -> Vec<LinearForm> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut c: [EisensteinInt; DIM] =
            std::array::from_fn(|_| EisensteinInt::new(rng.gen_range(-3i64..=3), rng.gen_range(-3i64..=3)));
        let sum = c.iter().fold(EisensteinInt::zero(), |acc, a| &acc + a);
        // a + b w is divisible by 1 - w iff a + b = 0 mod 3
        let r = ((&sum.a + &sum.b) % BigInt::from(3)).to_i64().expect("residue");
        c[DIM - 1] = &c[DIM - 1] - &EisensteinInt::from(r);
        let l = LinearForm::new(c);
        if !l.is_zero() {
            out.push(l);
        }
    }
    out
}

/// The six units `±1, ±w, ±w^2`.
pub fn units() -> [EisensteinInt; 6] {
    let a = EisensteinInt::alpha_pow;
    [a(0), a(1), a(2), -a(0), -a(1), -a(2)]
}

/// Checks for `l_i = (1 - w) x_i`.
#[derive(Clone, Debug)]
pub struct ExampleFibration {
    pub i: usize,
    pub genus: i64,
    /// `B_jr + B_st`, `B_js + B_rt`, `B_jt + B_rs`.
    pub singular_fibres: Vec<DivisorClass>,
    pub fibre_self_intersections: Vec<i64>,
    pub fibre_genera: Vec<i64>,
    /// Every component of every singular fibre has `F . E = 0`.
    pub components_contracted: bool,
    /// Each singular fibre is numerically `F_l`.
    pub fibres_match_class: bool,
    /// Intersection points among curves `E_hk`, `E_lm` with `{h,k,l,m}` the complement of `i`.
    pub critical_points: i64,
}

pub fn example_fibration(i: usize) -> Result<ExampleFibration> {
    let mut c: [EisensteinInt; DIM] = std::array::from_fn(|_| EisensteinInt::zero());
    c[i - 1] = EisensteinInt::lambda();
    let l = LinearForm::new(c);
    let fi = fiber_intersections(&l)?;
    let q: Vec<u8> = (1..=5u8).filter(|&k| k as usize != i).collect();
    let (j, r, s, t) = (q[0], q[1], q[2], q[3]);
    let pairs = [((j, r), (s, t)), ((j, s), (r, t)), ((j, t), (r, s))];
    let singular_fibres: Vec<DivisorClass> = pairs
        .iter()
        .map(|&((a, b), (c, d))| &DivisorClass::b(a, b) + &DivisorClass::b(c, d))
        .collect();
    let components_contracted = pairs.iter().all(|&((a, b), (c, d))| {
        (0..3)
            .all(|beta| fi.with(CurveLabel { i: a, j: b, beta }) == 0 && fi.with(CurveLabel { i: c, j: d, beta }) == 0)
    });
    let fibres_match_class = singular_fibres
        .iter()
        .all(|d| d.pairing_vector() == fi.pairing_vector());
    let mut critical_points = 0;
    for &((a, b), (c, d)) in &pairs {
        critical_points += pair(&DivisorClass::b(a, b), &DivisorClass::b(c, d));
    }
    Ok(ExampleFibration {
        i,
        genus: fiber_genus(&l)?,
        fibre_self_intersections: singular_fibres.iter().map(DivisorClass::self_intersection).collect(),
        fibre_genera: singular_fibres
            .iter()
            .map(fermat::genus_of_class)
            .collect::<Result<_>>()?,
        singular_fibres,
        components_contracted,
        fibres_match_class,
        critical_points,
    })
}

/// Checks for `l = (1 - w)(a_1 x_1 + ... + a_5 x_5)`, `a_i = w^exps[i]`, `prod a_i = 1`.
#[derive(Clone, Debug)]
pub struct TenCurveFibration {
    pub exps: [i64; DIM],
    pub divisor: DivisorClass,
    pub self_intersection: i64,
    pub genus: i64,
    pub components_contracted: bool,
    /// `F_l` is numerically `3 D`.
    pub fibre_is_three_d: bool,
    pub fibre_genus: i64,
}

pub fn ten_curve_fibration(exps: [i64; DIM]) -> Result<TenCurveFibration> {
    if exps.iter().sum::<i64>().rem_euclid(3) != 0 {
        return Err(Error::DimensionMismatch("the a_i must multiply to 1".into()));
    }
    let lam = EisensteinInt::lambda();
    let l = LinearForm::new(std::array::from_fn(|k| &lam * &EisensteinInt::alpha_pow(exps[k])));
    let fi = fiber_intersections(&l)?;
    let divisor = fermat::ten_curve_divisor(exps);
    let components_contracted = divisor
        .curve_coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .all(|(k, _)| fi.curves[k] == 0);
    let three_d = 3 * &divisor;
    Ok(TenCurveFibration {
        exps,
        self_intersection: divisor.self_intersection(),
        genus: fermat::genus_of_class(&divisor)?,
        components_contracted,
        fibre_is_three_d: three_d.pairing_vector() == fi.pairing_vector(),
        fibre_genus: fiber_genus(&l)?,
        divisor,
    })
}

/// All `a in mu_3^5` with product 1, as exponent vectors.
pub fn unit_exponent_vectors() -> Vec<[i64; DIM]> {
    let mut out = Vec::new();
    for code in 0..81i64 {
        let mut e = [0; DIM];
        let mut c = code;
        for x in e.iter_mut().take(DIM - 1) {
            *x = c % 3;
            c /= 3;
        }
        e[DIM - 1] = (-e.iter().sum::<i64>()).rem_euclid(3);
        out.push(e);
    }
    out
}

/// Checks for `l = x_1 - (1 + (1 - w) a) x_2`.
#[derive(Clone, Debug)]
pub struct SectionFamily {
    pub a: EisensteinInt,
    pub form: LinearForm,
    /// `F . E_1k^b` for `k = 3, 4, 5`.
    pub section_values: Vec<i64>,
    /// `F . E_hk^b` for `h, k` in `{3, 4, 5}`.
    pub contracted_values: Vec<i64>,
    /// `F . E_12^1`.
    pub e12_value: i64,
    /// `N(2 + (1 - w) a)`, the closed form of `F . E_12^1`.
    pub e12_expected: i64,
}

pub fn section_family(a: &EisensteinInt) -> Result<SectionFamily> {
    let coef = &EisensteinInt::one() + &(&EisensteinInt::lambda() * a);
    let mut c: [EisensteinInt; DIM] = std::array::from_fn(|_| EisensteinInt::zero());
    c[0] = EisensteinInt::one();
    c[1] = -&coef;
    let form = LinearForm::new(c);
    let fi = fiber_intersections(&form)?;
    let mut section_values = Vec::new();
    let mut contracted_values = Vec::new();
    for beta in 0..3 {
        for k in 3..=5u8 {
            section_values.push(fi.with(CurveLabel { i: 1, j: k, beta }));
        }
        for (h, k) in [(3u8, 4u8), (3, 5), (4, 5)] {
            contracted_values.push(fi.with(CurveLabel { i: h, j: k, beta }));
        }
    }
    let two = EisensteinInt::from(2);
    Ok(SectionFamily {
        a: a.clone(),
        e12_value: fi.with(CurveLabel { i: 1, j: 2, beta: 0 }),
        e12_expected: small(&(&two + &(&EisensteinInt::lambda() * a)).norm())?,
        form,
        section_values,
        contracted_values,
    })
}

/// `l = (1 - w)(x_i + b x_j)` has `F . E_ij^{b^2} = 0`.
pub fn contracts_conjugate_curve(i: usize, j: usize, beta: i64) -> Result<bool> {
    let mut c: [EisensteinInt; DIM] = std::array::from_fn(|_| EisensteinInt::zero());
    c[i - 1] = EisensteinInt::lambda();
    c[j - 1] = &EisensteinInt::lambda() * &EisensteinInt::alpha_pow(beta);
    let fi = fiber_intersections(&LinearForm::new(c))?;
    let label = CurveLabel::new(i as u8, j as u8, (2 * beta).rem_euclid(3) as u8)?;
    Ok(fi.with(label) == 0)
}

/// Everything checked for the three families of fibrations.
#[derive(Clone, Debug)]
pub struct CorollaryReports {
    pub example: Vec<ExampleFibration>,
    pub ten_curve: Vec<TenCurveFibration>,
    pub sections: Vec<SectionFamily>,
    pub conjugate_contracted: bool,
}

pub fn corollary_reports(seed: u64) -> Result<CorollaryReports> {
    let example = (1..=DIM).map(example_fibration).collect::<Result<_>>()?;
    let ten_curve = unit_exponent_vectors()
        .into_iter()
        .map(ten_curve_fibration)
        .collect::<Result<_>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = vec![EisensteinInt::zero(), EisensteinInt::one(), EisensteinInt::new(-2, -1)];
    for _ in 0..5 {
        samples.push(EisensteinInt::new(rng.gen_range(-3i64..=3), rng.gen_range(-3i64..=3)));
    }
    let sections = samples.iter().map(section_family).collect::<Result<_>>()?;
    let mut conjugate_contracted = true;
    for i in 1..=DIM {
        for j in i + 1..=DIM {
            for beta in 0..3 {
                conjugate_contracted &= contracts_conjugate_curve(i, j, beta)?;
            }
        }
    }
    Ok(CorollaryReports {
        example,
        ten_curve,
        sections,
        conjugate_contracted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::albanese::{congruence_lattice, Albanese};
    use num_rational::BigRational;

    fn e(a: i64, b: i64) -> EisensteinInt {
        EisensteinInt::new(a, b)
    }

    fn form(s: &str) -> LinearForm {
        parse_linear_form(s).unwrap()
    }

    #[test]
    fn membership() {
        assert!(lambda_star_membership(&form("x1 - x2")));
        assert!(lambda_star_membership(&form("(1-w)*x1")));
        assert!(!lambda_star_membership(&form("x1")));
        // the coefficient module is the congruence lattice
        let cong = congruence_lattice().unwrap();
        for l in sample_forms(7, 20) {
            assert!(cong.contains(&l.as_vector()));
        }
        for s in ["x1", "x1 + w*x2", "2*x3 + 2*x4"] {
            assert!(!cong.contains(&form(s).as_vector()));
            assert!(!lambda_star_membership(&form(s)));
        }
    }

    #[test]
    fn intersections() {
        let fi = fiber_intersections(&form("x4 - x5")).unwrap();
        assert_eq!(fi.with(CurveLabel { i: 4, j: 5, beta: 0 }), 4);
        assert_eq!(fi.with(CurveLabel { i: 4, j: 5, beta: 1 }), 1);
        assert_eq!(fi.with(CurveLabel { i: 1, j: 2, beta: 2 }), 0);
        assert_eq!(fi.c, 4);
        let fi = fiber_intersections(&form("(1-w)*x1")).unwrap();
        for l in CurveLabel::all() {
            assert_eq!(fi.with(l), if l.i == 1 { 3 } else { 0 });
        }
        let fi = fiber_intersections(&form("x1 - (1+(1-w)*1)*x2")).unwrap();
        for beta in 0..3 {
            assert_eq!(fi.with(CurveLabel { i: 1, j: 3, beta }), 1);
            assert_eq!(fi.with(CurveLabel { i: 3, j: 4, beta }), 0);
        }
        assert!(matches!(fiber_intersections(&form("0")), Err(Error::ZeroForm)));
        assert!(matches!(fiber_intersections(&form("x1")), Err(Error::NotInDualModule)));
    }

    #[test]
    fn genera_and_degrees() {
        assert_eq!(fiber_genus(&form("(1-w)*x1")).unwrap(), 10);
        assert_eq!(fiber_genus(&form("x4 - x5")).unwrap(), 7);
        assert_eq!(fiber_genus(&form("(1-w)*(x1+x2+x3+x4+x5)")).unwrap(), 46);
        assert_eq!(fiber_pair_degree(&form("x4 - w^2*x5"), &form("x4 - w*x5")).unwrap(), 3);
        assert_eq!(fiber_pair_degree(&form("x1 - x2"), &form("x1 - x3")).unwrap(), 3);
        let l = form("x1 - x2 + (2+w)*x3 - (2+w)*x4");
        assert_eq!(fiber_pair_degree(&l, &l).unwrap(), 0);
    }

    #[test]
    fn classes_of_difference_forms() {
        for lab in CurveLabel::all() {
            let l = LinearForm::difference(lab.i as usize, lab.j as usize, 2 * lab.beta as i64);
            let f = fiber_class_coordinates(&l).unwrap();
            let want = &DivisorClass::c() - &DivisorClass::curve(lab);
            assert!(fermat::numerically_equal(&f, &want), "{lab}");
            let excluded = fermat::excluded_curves().map(|x| x.index());
            assert!(excluded.iter().all(|&k| f.curve_coeffs[k] == 0));
        }
    }

    #[test]
    fn sampled_forms() {
        let kernel = fermat::relations_kernel().unwrap().basis;
        for l in sample_forms(2024, 12) {
            let fi = fiber_intersections(&l).unwrap();
            assert_eq!(
                BigInt::from(fi.curves.iter().sum::<i64>()),
                BigInt::from(12) * l.norm_sq()
            );
            let f = fiber_class_coordinates(&l).unwrap();
            assert_eq!(f.self_intersection(), 0);
            assert_eq!(fermat::genus_of_class(&f).unwrap(), fiber_genus(&l).unwrap());
            for r in kernel.row_vecs() {
                let rel =
                    DivisorClass::from_coeffs(&r.iter().map(|x| x.to_i64().unwrap()).chain([0]).collect::<Vec<_>>())
                        .unwrap();
                assert_eq!(pair(&f, &rel), 0);
            }
            for u in units() {
                let m = l.scale(&u);
                assert_eq!(fiber_intersections(&m).unwrap(), fi);
                assert_eq!(fiber_genus(&m).unwrap(), fiber_genus(&l).unwrap());
            }
        }
    }

    #[test]
    fn pair_degree_matches_exterior_pairing() {
        let alb = Albanese::new().unwrap();
        let forms = sample_forms(99, 8);
        for w in forms.windows(2) {
            let d = fiber_pair_degree(&w[0], &w[1]).unwrap();
            let q = alb
                .q_theta(&alb.fibre_form(&w[0].as_vector()), &alb.fibre_form(&w[1].as_vector()))
                .unwrap();
            assert_eq!(q, BigRational::from_integer(d.into()));
            assert!(d >= 0);
        }
    }

    #[test]
    fn first_corollary() {
        for i in 1..=5 {
            let r = example_fibration(i).unwrap();
            assert_eq!(r.genus, 10);
            assert_eq!(r.fibre_self_intersections, vec![0, 0, 0]);
            assert_eq!(r.fibre_genera, vec![10, 10, 10]);
            assert!(r.components_contracted && r.fibres_match_class);
            assert_eq!(r.critical_points, 27);
        }
    }

    #[test]
    fn ten_curve_divisors() {
        let all = unit_exponent_vectors();
        assert_eq!(all.len(), 81);
        for exps in all {
            let r = ten_curve_fibration(exps).unwrap();
            assert_eq!((r.self_intersection, r.genus, r.fibre_genus), (0, 16, 46));
            assert!(r.components_contracted && r.fibre_is_three_d);
        }
        assert!(ten_curve_fibration([1, 0, 0, 0, 0]).is_err());
    }

    #[test]
    fn section_families() {
        let r = corollary_reports(5).unwrap();
        assert!(r.conjugate_contracted);
        for s in &r.sections {
            assert_eq!(s.section_values, vec![1; 9]);
            assert_eq!(s.contracted_values, vec![0; 9]);
            assert_eq!(s.e12_value, s.e12_expected);
        }
        assert_eq!(section_family(&e(0, 0)).unwrap().e12_value, 4);
        assert_eq!(section_family(&e(-2, -1)).unwrap().e12_value, 1);
    }

    #[test]
    fn display() {
        assert_eq!(form("(1-w)*x1").to_string(), "(1-w)*x1");
        assert_eq!(form("x4 - (w^2)*x5").to_string(), "x4 + (1+w)*x5");
        assert!(lambda_star_membership(&form("2*x3 + x4")));
        assert_eq!(form("-x2 + 3*w*x5").to_string(), "-x2 + 3*w*x5");
    }
}
