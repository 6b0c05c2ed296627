//! Named verification suites: each claim is recomputed exactly and compared
//! with its expected value as a string.

use std::fmt::Display;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::albanese::{self, Albanese, CandidateName, EndoMatrix, NsAlbanese};
use crate::arith::{hermitian_inner, EisMatrix, EisVector, EisensteinInt, EisensteinRational};
use crate::error::{Error, Result};
use crate::fermat::{self, CurveLabel, DivisorClass};
use crate::fibrations::{self, LinearForm};
use crate::group;
use crate::lattice::{smith_normal_form, IntMatrix, TwoForm};
use crate::twelve::{self, CmCase};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one recomputed claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub description: String,
    pub paper_anchor: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Output of a suite run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteRun {
    pub suite: String,
    pub seed: u64,
    pub reports: Vec<VerificationReport>,
}

impl SuiteRun {
    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(VerificationReport::passed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Arith,
    Group,
    NsFermat,
    PeriodLattice,
    NsAlbanese,
    Fibrations,
    TwelveFamily,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 8] = [
        "arith",
        "group",
        "ns-fermat",
        "period-lattice",
        "ns-albanese",
        "fibrations",
        "twelve-family",
        "all",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Self::Arith => "arith",
            Self::Group => "group",
            Self::NsFermat => "ns-fermat",
            Self::PeriodLattice => "period-lattice",
            Self::NsAlbanese => "ns-albanese",
            Self::Fibrations => "fibrations",
            Self::TwelveFamily => "twelve-family",
            Self::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "arith" => Self::Arith,
            "group" => Self::Group,
            "ns-fermat" => Self::NsFermat,
            "period-lattice" => Self::PeriodLattice,
            "ns-albanese" => Self::NsAlbanese,
            "fibrations" => Self::Fibrations,
            "twelve-family" => Self::TwelveFamily,
            "all" => Self::All,
            _ => return Err(Error::UnknownSuite(s.to_string())),
        })
    }
}

/// `3^18 (387420489)` for numbers above 1000 whose prime factors are all
/// below 10, plain decimal otherwise.
pub fn render_big(n: &BigInt) -> String {
    if n.abs() <= BigInt::from(1000) {
        return n.to_string();
    }
    let mut rest = n.abs();
    let mut parts = Vec::new();
    for p in [2u32, 3, 5, 7] {
        let mut e = 0;
        while (&rest % p).is_zero() {
            rest /= p;
            e += 1;
        }
        match e {
            0 => {}
            1 => parts.push(p.to_string()),
            _ => parts.push(format!("{p}^{e}")),
        }
    }
    if !rest.is_one() || parts.is_empty() {
        return n.to_string();
    }
    let sign = if n.is_negative() { "-" } else { "" };
    format!("{sign}{} ({n})", parts.join("*"))
}

fn render_q(q: &BigRational) -> String {
    if q.is_integer() {
        render_big(&q.to_integer())
    } else {
        q.to_string()
    }
}

fn count(ok: usize, total: usize) -> String {
    format!("{ok}/{total}")
}

struct Runner {
    reports: Vec<VerificationReport>,
}

impl Runner {
    fn claim(
        &mut self,
        id: &str,
        description: &str,
        anchor: &str,
        expected: impl Display,
        compute: impl FnOnce() -> Result<String>,
    ) {
        let start = Instant::now();
        let computed = compute().unwrap_or_else(|e| format!("error: {e}"));
        let expected = expected.to_string();
        let status = if computed == expected {
            Status::Pass
        } else {
            Status::Fail
        };
        self.reports.push(VerificationReport {
            claim_id: id.into(),
            description: description.into(),
            paper_anchor: anchor.into(),
            expected,
            computed,
            status,
            elapsed_ms: start.elapsed().as_millis() as u64,
        });
    }
}

const A_INTERSECTION: &str = "Theorem: intersection of two divisors on the Fano surface";
const A_NUMERICAL: &str = "Lemma: numerical equivalence of the fibre (C^2 = 5, C.E = 1, E^2 = -3)";
const A_AUTOMOR: &str = "Proposition: automorphisms and the 30 elliptic curves";
const A_CHERN: &str = "Lemma: Chern form of the polarization of the Fermat Fano surface";
const A_FORM_Q: &str = "Lemma: the form Q";
const A_ALL_FIB: &str = "Theorem: all fibrations of the Fermat Fano surface";
const A_GENUS: &str = "Lemma: genus of the fibre F_l";
const A_LATTICE_A: &str = "Theorem: the period lattice of A";
const A_NS: &str = "Theorem: Neron-Severi group of the Fermat Fano surface";
const A_EXAMPLE: &str = "Corollary: example of fibration (1-w)x_i";
const A_SUM: &str = "Corollary: divisor sum of 10 curves";
const A_SECTIONS: &str = "Corollary: fibrations with 9 sections";
const A_NON_REDUCED: &str = "Remark: fibration (1-w)(x_i + b x_j)";
const A_INFINITE: &str = "Proposition: infinitely many NS groups of rank 25";
const A_CANONICAL_COVER: &str = "Corollary: reformulation of the triple cover";
const A_TWELVE: &str = "Proposition: Fano surfaces with 12 elliptic curves";
const A_ARITH: &str = "Definition: Eisenstein integers Z[w], w^2 + w + 1 = 0";

/// Run a suite with the given seed for sampled checks.
pub fn run_suite(suite: Suite, seed: u64) -> SuiteRun {
    let mut r = Runner { reports: Vec::new() };
    let parts: &[Suite] = match suite {
        Suite::All => &[
            Suite::Arith,
            Suite::Group,
            Suite::NsFermat,
            Suite::PeriodLattice,
            Suite::NsAlbanese,
            Suite::Fibrations,
            Suite::TwelveFamily,
        ],
        _ => std::slice::from_ref(&suite),
    };
    for part in parts {
        match part {
            Suite::Arith => arith_suite(&mut r, seed),
            Suite::Group => group_suite(&mut r),
            Suite::NsFermat => ns_fermat_suite(&mut r),
            Suite::PeriodLattice => period_lattice_suite(&mut r),
            Suite::NsAlbanese => ns_albanese_suite(&mut r),
            Suite::Fibrations => fibrations_suite(&mut r, seed),
            Suite::TwelveFamily => twelve_suite(&mut r),
            Suite::All => unreachable!("expanded above"),
        }
    }
    SuiteRun {
        suite: suite.name().into(),
        seed,
        reports: r.reports,
    }
}

/// Parse a suite name and run it.
pub fn run_named_suite(name: &str, seed: u64) -> Result<SuiteRun> {
    Ok(run_suite(name.parse()?, seed))
}

fn random_eis(rng: &mut ChaCha8Rng, bound: i64) -> EisensteinInt {
    EisensteinInt::new(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

/// Ring axioms and norm multiplicativity on `cases` seeded triples.
pub fn ring_axiom_cases(seed: u64, cases: usize) -> (usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ring_ok = 0;
    let mut norm_ok = 0;
    for _ in 0..cases {
        let (x, y, z) = (
            random_eis(&mut rng, 50),
            random_eis(&mut rng, 50),
            random_eis(&mut rng, 50),
        );
        let assoc = &(&x * &y) * &z == &x * &(&y * &z) && &(&x + &y) + &z == &x + &(&y + &z);
        let comm = &x * &y == &y * &x && &x + &y == &y + &x;
        let dist = &x * &(&y + &z) == &(&x * &y) + &(&x * &z);
        let ident = &x * &EisensteinInt::one() == x && &x + &EisensteinInt::zero() == x && (&x + &(-&x)).is_zero();
        ring_ok += usize::from(assoc && comm && dist && ident);
        norm_ok += usize::from((&x * &y).norm() == x.norm() * y.norm());
    }
    (ring_ok, norm_ok)
}

/// Random antisymmetric integer matrices of even size; returns how many satisfy `pf^2 = det`.
pub fn pfaffian_cases(seed: u64, cases: usize) -> Result<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ok = 0;
    for _ in 0..cases {
        let n = 2 * rng.gen_range(1..=4);
        let form = TwoForm::from_upper(n, |_, _| BigRational::from_integer(rng.gen_range(-5i64..=5).into()));
        let pf = form.pfaffian()?;
        ok += usize::from(&pf * &pf == form.det()?);
    }
    Ok(ok)
}

/// Seeded forms whose outputs are unchanged under all six unit rescalings.
pub fn unit_rescale_cases(seed: u64, cases: usize) -> Result<usize> {
    let forms = fibrations::sample_forms(seed, cases + 1);
    let mut ok = 0;
    for w in forms.windows(2) {
        let (l, other) = (&w[0], &w[1]);
        let fi = fibrations::fiber_intersections(l)?;
        let g = fibrations::fiber_genus(l)?;
        let d = fibrations::fiber_pair_degree(l, other)?;
        let mut same = true;
        for u in fibrations::units() {
            let m = l.scale(&u);
            same &= fibrations::fiber_intersections(&m)? == fi
                && fibrations::fiber_genus(&m)? == g
                && fibrations::fiber_pair_degree(&m, other)? == d;
        }
        ok += usize::from(same);
    }
    Ok(ok)
}

/// Seeded pairs where the closed-form degree equals the exterior-algebra pairing.
pub fn pair_degree_cases(alb: &Albanese, seed: u64, cases: usize) -> Result<usize> {
    let forms = fibrations::sample_forms(seed, 2 * cases);
    let mut ok = 0;
    for p in forms.chunks(2) {
        let d = fibrations::fiber_pair_degree(&p[0], &p[1])?;
        let q = alb.q_theta(&alb.fibre_form(&p[0].as_vector()), &alb.fibre_form(&p[1].as_vector()))?;
        ok += usize::from(q == BigRational::from_integer(d.into()));
    }
    Ok(ok)
}

fn arith_suite(r: &mut Runner, seed: u64) {
    r.claim("arith.alpha_squared", "w^2 reduces to -1 - w", A_ARITH, "-1-w", || {
        Ok(EisensteinInt::alpha_pow(2).to_string())
    });
    r.claim(
        "arith.lambda_norm",
        "(1 - w)(2 + w) = 3, so 1 - w has norm 3",
        A_ARITH,
        "3",
        || Ok((&EisensteinInt::lambda() * &EisensteinInt::new(2, 1)).to_string()),
    );
    r.claim("arith.inner_root", "<e_i - e_j, e_i - e_j> = 2", A_ARITH, "2", || {
        let v = EisVector::line_direction(0, 1, 0);
        Ok(hermitian_inner(&v, &v).to_string())
    });
    r.claim(
        "arith.ring_axioms",
        "ring axioms on 200 seeded triples",
        A_ARITH,
        count(200, 200),
        || Ok(count(ring_axiom_cases(seed, 200).0, 200)),
    );
    r.claim(
        "arith.norm_multiplicative",
        "N(xy) = N(x)N(y) on 200 seeded pairs",
        A_ARITH,
        count(200, 200),
        || Ok(count(ring_axiom_cases(seed, 200).1, 200)),
    );
    r.claim(
        "arith.pfaffian_squared",
        "Pf(M)^2 = det(M) on 50 seeded antisymmetric matrices",
        A_ARITH,
        count(50, 50),
        || Ok(count(pfaffian_cases(seed, 50)?, 50)),
    );
    r.claim(
        "arith.snf",
        "Smith form of [[2,4,4],[-6,6,12],[10,-4,-16]]",
        A_ARITH,
        "2, 6, 12",
        || {
            let m = IntMatrix::from_rows(vec![
                vec![2.into(), 4.into(), 4.into()],
                vec![(-6).into(), 6.into(), 12.into()],
                vec![10.into(), (-4).into(), (-16).into()],
            ])?;
            let s = smith_normal_form(&m);
            Ok(s.invariant_factors
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", "))
        },
    );
}

fn group_suite(r: &mut Runner) {
    let g = group::enumerate_group();
    r.claim("group.order", "order of G(3,3,5)", A_AUTOMOR, "9720", || {
        Ok(g.len().to_string())
    });
    r.claim(
        "group.monomial",
        "every element is monomial with cube-root entries of product 1",
        A_AUTOMOR,
        count(9720, 9720),
        || Ok(count(g.iter().filter(|m| m.is_valid()).count(), g.len())),
    );
    r.claim(
        "group.diagonal_kernel",
        "diagonal subgroup (kernel onto S_5)",
        A_AUTOMOR,
        "81",
        || Ok(g.iter().filter(|m| m.perm == [0, 1, 2, 3, 4]).count().to_string()),
    );
    r.claim("group.orbit", "orbit of the line C(e_1 - e_2)", A_AUTOMOR, "30", || {
        Ok(group::line_orbit(&EisVector::line_direction(0, 1, 0))?
            .len()
            .to_string())
    });
    r.claim(
        "group.orbit_lines",
        "the orbit is exactly the lines C(e_i - b e_j)",
        A_AUTOMOR,
        "true",
        || {
            let orbit = group::line_orbit(&EisVector::line_direction(0, 1, 0))?;
            Ok(CurveLabel::all()
                .iter()
                .all(|l| orbit.contains(&l.direction()))
                .to_string())
        },
    );
    r.claim(
        "group.invariant_forms",
        "dimension of invariant Hermitian forms",
        A_CHERN,
        "1",
        || Ok(group::invariant_hermitian_forms().len().to_string()),
    );
    r.claim(
        "group.invariant_scalar",
        "the invariant Hermitian form is scalar",
        A_CHERN,
        "true",
        || {
            let forms = group::invariant_hermitian_forms();
            Ok((forms.len() == 1 && group::is_scalar_matrix(&forms[0])).to_string())
        },
    );
    r.claim(
        "group.invariant_forms_perm",
        "invariant Hermitian forms of the permutation matrices alone",
        A_CHERN,
        "2",
        || {
            Ok(group::invariant_hermitian_forms_for(&group::permutation_generators())
                .len()
                .to_string())
        },
    );
    r.claim(
        "group.gram_invariance",
        "generators preserve the intersection numbers of the 30 curves",
        A_AUTOMOR,
        count(11, 11),
        || {
            Ok(count(
                group::generators().iter().filter(|m| fermat::preserves_gram(m)).count(),
                11,
            ))
        },
    );
}

fn ns_fermat_suite(r: &mut Runner) {
    let three = |e: u32| render_big(&BigInt::from(3).pow(e));
    r.claim(
        "ns.pairing_rules",
        "E12^1.E34^w, E12^1.E12^1, (C - E45^w).(C - E45^w^2)",
        A_NUMERICAL,
        "1, -3, 3",
        || {
            let c = DivisorClass::c();
            Ok(format!(
                "{}, {}, {}",
                fermat::pair(&DivisorClass::e(1, 2, 0), &DivisorClass::e(3, 4, 1)),
                fermat::pair(&DivisorClass::e(1, 2, 0), &DivisorClass::e(1, 2, 0)),
                fermat::pair(&(&c - &DivisorClass::e(4, 5, 1)), &(&c - &DivisorClass::e(4, 5, 2)))
            ))
        },
    );
    let ns = fermat::ns_rank_and_basis();
    r.claim(
        "ns.rank",
        "rank of the lattice of the 30 curves and C",
        A_NS,
        "25",
        || Ok(ns.clone()?.rank.to_string()),
    );
    r.claim(
        "ns.curve_determinant",
        "determinant of the Gram matrix of the 25 basis curves",
        A_NS,
        three(20),
        || Ok(render_big(&ns.clone()?.curve_determinant)),
    );
    r.claim("ns.discriminant", "discriminant of NS(S)", A_NS, three(18), || {
        Ok(render_big(&ns.clone()?.discriminant))
    });
    r.claim(
        "ns.curve_discriminant",
        "discriminant of the lattice of the 30 curves",
        A_NS,
        three(20),
        || {
            let curves: Vec<_> = CurveLabel::all().into_iter().map(DivisorClass::curve).collect();
            Ok(render_big(&fermat::discriminant_of(&curves)?.1))
        },
    );
    r.claim(
        "ns.curve_index",
        "index of the curve lattice in NS(S)",
        A_NS,
        "3",
        || {
            let curves: Vec<_> = CurveLabel::all().into_iter().map(DivisorClass::curve).collect();
            let all: Vec<_> = (0..fermat::NUM_GENERATORS).map(DivisorClass::generator).collect();
            Ok(fermat::numerical_index(&curves, &all)?.to_string())
        },
    );
    let kernel = fermat::relations_kernel();
    r.claim(
        "ns.kernel_rank",
        "rank of the relations among the 30 curves",
        A_NS,
        "5",
        || Ok(kernel.clone()?.rank().to_string()),
    );
    r.claim(
        "ns.kernel_b_relations",
        "the relations B_jr + B_st = B_js + B_rt = B_jt + B_rs generate the kernel",
        A_NS,
        "true",
        || {
            let k = kernel.clone()?;
            Ok((k.relations_in_kernel && k.relations_span_kernel).to_string())
        },
    );
    r.claim(
        "ns.signature",
        "positive eigenvalues of the 31x31 Gram matrix",
        A_NS,
        "1",
        || Ok(fermat::gram_matrix().to_rational().inertia()?.0.to_string()),
    );
    r.claim("ns.rank_bound", "1 <= rank <= 25", A_INTERSECTION, "true", || {
        let rk = ns.clone()?.rank;
        Ok(((1..=25).contains(&rk)).to_string())
    });
    let canon = fermat::verify_canonical_identities();
    r.claim(
        "ns.sigma_twice_k",
        "the sum of the 30 curves is numerically 6C = 2K",
        A_GENUS,
        "true",
        || Ok(canon.sigma_is_twice_canonical.to_string()),
    );
    r.claim("ns.k_squared", "K^2 with K = 3C", A_GENUS, "45", || {
        Ok(canon.k_squared.to_string())
    });
    r.claim(
        "ns.adjunction",
        "E^2 + K.E = 0 for the 30 curves",
        A_GENUS,
        "true",
        || Ok(canon.adjunction_holds.to_string()),
    );
    r.claim("ns.sigma_dot_c", "(sum of the 30 curves).C", A_GENUS, "30", || {
        Ok(canon.sigma_dot_c.to_string())
    });
    r.claim(
        "ns.sections_contractions",
        "C - E has 20 sections and contracts 9 curves, for every E",
        A_AUTOMOR,
        count(30, 30),
        || {
            Ok(count(
                CurveLabel::all()
                    .into_iter()
                    .filter(|&l| fermat::section_counts(l) == (20, 9))
                    .count(),
                30,
            ))
        },
    );
    r.claim("ns.genus_b23_b45", "genus of B23 + B45", A_EXAMPLE, "10", || {
        Ok(fermat::genus_of_class(&(&DivisorClass::b(2, 3) + &DivisorClass::b(4, 5)))?.to_string())
    });
    r.claim("ns.genus_c_minus_e", "genus of C - E45^1", A_ALL_FIB, "7", || {
        Ok(fermat::genus_of_class(&(&DivisorClass::c() - &DivisorClass::e(4, 5, 0)))?.to_string())
    });
}

fn period_lattice_suite(r: &mut Runner) {
    let cands = albanese::build_candidates();
    let get = |n: CandidateName| -> Result<albanese::PeriodLattice> {
        cands
            .clone()?
            .into_iter()
            .find(|(m, _)| *m == n)
            .map(|(_, l)| l)
            .ok_or(Error::UnknownCandidate(n.to_string()))
    };
    r.claim("h1.index", "[Λ : Λ_0]", A_LATTICE_A, "9", || {
        Ok(get(CandidateName::Lambda)?
            .index_of(&get(CandidateName::Lambda0)?)?
            .to_string())
    });
    r.claim(
        "h1.quotient",
        "invariant factors of Λ/Λ_0",
        A_LATTICE_A,
        "3, 3",
        || {
            let inv = get(CandidateName::Lambda)?.quotient_invariants(&get(CandidateName::Lambda0)?)?;
            Ok(inv.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
        },
    );
    r.claim(
        "h1.intermediate_indices",
        "[Λ' : Λ_0] for the four intermediate lattices",
        A_LATTICE_A,
        "3, 3, 3, 3",
        || {
            let l0 = get(CandidateName::Lambda0)?;
            let names = [
                CandidateName::Lambda1,
                CandidateName::LambdaAlpha,
                CandidateName::LambdaAlpha2,
                CandidateName::LambdaAlphaMinus1,
            ];
            let v = names
                .iter()
                .map(|n| Ok(get(*n)?.index_of(&l0)?.to_string()))
                .collect::<Result<Vec<_>>>()?;
            Ok(v.join(", "))
        },
    );
    r.claim(
        "h1.lambda0_congruence",
        "Λ_0 = {a in Z[w]^5 : sum a_i in (1 - w)}",
        A_LATTICE_A,
        "true",
        || {
            Ok(get(CandidateName::Lambda0)?
                .same_set(&albanese::congruence_lattice()?)
                .to_string())
        },
    );
    r.claim("h1.lambda0_det", "det of omega on Λ_0", A_LATTICE_A, "9", || {
        Ok(render_q(
            &albanese::omega_on_lattice(&get(CandidateName::Lambda0)?).0.det()?,
        ))
    });
    r.claim("h1.split_det", "det of omega on ⊕Z[w]e_i", A_LATTICE_A, "1", || {
        Ok(render_q(
            &albanese::omega_on_lattice(&albanese::split_lattice()?).0.det()?,
        ))
    });
    r.claim(
        "h1.split_equals",
        "Λ_{α−1} = ⊕Z[w]e_i",
        A_LATTICE_A,
        "true",
        || {
            Ok(get(CandidateName::LambdaAlphaMinus1)?
                .same_set(&albanese::split_lattice()?)
                .to_string())
        },
    );
    r.claim(
        "h1.lambda_nonintegral",
        "|omega(w/(w-1), w w/(w-1))| on Λ",
        A_LATTICE_A,
        "5/3",
        || {
            let inv = (&EisensteinRational::alpha_pow(1) - &EisensteinRational::one()).inv()?;
            let u = albanese::w_vector().scale(&inv);
            let v = u.scale(&EisensteinRational::alpha_pow(1));
            let (_, integral) = albanese::omega_on_lattice(&get(CandidateName::Lambda)?);
            let val = albanese::omega(&u, &v).abs();
            Ok(if integral { "integral".into() } else { val.to_string() })
        },
    );
    r.claim(
        "h1.galois",
        "images under w -> w^2 of Λ_0, Λ_1, Λ_α, Λ_{α²}, Λ_{α−1}, Λ",
        A_LATTICE_A,
        "Λ_0, Λ_α, Λ_1, Λ_{α²}, Λ_{α−1}, Λ",
        || {
            let v = cands
                .clone()?
                .iter()
                .map(|(_, l)| Ok(albanese::galois_substitute(l)?.to_string()))
                .collect::<Result<Vec<_>>>()?;
            Ok(v.join(", "))
        },
    );
    let sel = albanese::select_h1();
    r.claim(
        "h1.selected",
        "H_1(A, Z) after elimination",
        A_LATTICE_A,
        CandidateName::LambdaAlpha2,
        || Ok(sel.clone()?.name.to_string()),
    );
    r.claim("h1.pfaffian", "|Pf| of omega on H_1(A, Z)", A_LATTICE_A, "1", || {
        Ok(render_q(&sel.clone()?.pfaffian.abs()))
    });
    r.claim(
        "h1.presentations",
        "both printed presentations of Λ_{α²} define the same set",
        A_LATTICE_A,
        "true",
        || {
            let s = sel.clone()?;
            Ok((s.theorem_presentation_matches && s.family_presentation_matches).to_string())
        },
    );
    r.claim(
        "h1.line_roots",
        "H_1 ∩ C(e_i - b e_j) = Z[w](e_i - b e_j) for all 30 lines",
        A_LATTICE_A,
        count(30, 30),
        || {
            let h1 = sel.clone()?.lattice;
            let scalars = [EisensteinRational::one(), EisensteinRational::alpha_pow(1)];
            let mut ok = 0;
            for l in CurveLabel::all() {
                let d = l.direction();
                ok += usize::from(albanese::same_module(
                    &albanese::line_intersection(&h1, &d)?,
                    &albanese::scalar_module(&d, &scalars),
                )?);
            }
            Ok(count(ok, 30))
        },
    );
    r.claim("h1.line_w", "H_1 ∩ Cw = (w^2/(1 - w)) Z[3w] w", A_SUM, "true", || {
        let h1 = sel.clone()?.lattice;
        let c = &EisensteinRational::alpha_pow(2) / &albanese::lambda();
        let three_w = EisensteinRational::from(EisensteinInt::new(0, 3));
        let want = albanese::scalar_module(&albanese::w_vector(), &[c.clone(), &c * &three_w]);
        Ok(albanese::same_module(&albanese::line_intersection(&h1, &albanese::w_vector())?, &want)?.to_string())
    });
    r.claim(
        "h1.omega_invariant",
        "omega is invariant under the generators of G(3,3,5)",
        A_CHERN,
        "true",
        || {
            let h1 = sel.clone()?.lattice;
            let b = h1.basis();
            Ok(group::generators()
                .iter()
                .all(|g| {
                    (0..b.len()).all(|p| {
                        (0..b.len())
                            .all(|q| albanese::omega(&g.apply(&b[p]), &g.apply(&b[q])) == albanese::omega(&b[p], &b[q]))
                    })
                })
                .to_string())
        },
    );
    r.claim(
        "h1.group_stable",
        "G(3,3,5) preserves Λ_0 and H_1",
        A_LATTICE_A,
        "true",
        || {
            let h1 = sel.clone()?.lattice;
            let l0 = get(CandidateName::Lambda0)?;
            Ok(group::generators()
                .iter()
                .all(|g| h1.is_stable_under(g) && l0.is_stable_under(g))
                .to_string())
        },
    );
}

fn ns_albanese_suite(r: &mut Runner) {
    let alb = Albanese::new();
    let ns = alb.clone().and_then(|a| NsAlbanese::compute(&a));
    let disc = render_big(&(BigInt::from(4) * BigInt::from(3).pow(18)));
    r.claim(
        "nsa.theta_squared",
        "q_theta(Theta, Theta) = (2C)^2",
        A_INTERSECTION,
        "20",
        || {
            let a = alb.clone()?;
            Ok(render_q(&a.q_theta(&a.theta, &a.theta)?))
        },
    );
    r.claim(
        "nsa.identity_principal",
        "phi(identity) has |Pf| = 1",
        A_LATTICE_A,
        "1",
        || {
            let a = alb.clone()?;
            Ok(render_q(
                &a.chern_of_endomorphism(&EndoMatrix(EisMatrix::identity()))?
                    .pfaffian()?
                    .abs(),
            ))
        },
    );
    r.claim("nsa.ends_rank", "rank of End^s(A)", A_LATTICE_A, "25", || {
        Ok(ns.clone()?.rank().to_string())
    });
    r.claim(
        "nsa.phi_independent",
        "rank of the phi images over Q",
        A_LATTICE_A,
        "25",
        || Ok(ns.clone()?.form_rank.to_string()),
    );
    r.claim(
        "nsa.discriminant",
        "|det| of q_theta on the phi images",
        A_LATTICE_A,
        disc.clone(),
        || Ok(render_big(&ns.clone()?.discriminant()?)),
    );
    r.claim(
        "nsa.fibre_pair",
        "q_theta of the fibre forms of x4 - w^2 x5 and x4 - w x5",
        A_FORM_Q,
        "3",
        || {
            let a = alb.clone()?;
            let l1: LinearForm = "x4 - w^2*x5".parse()?;
            let l2: LinearForm = "x4 - w*x5".parse()?;
            Ok(render_q(&a.q_theta(
                &a.fibre_form(&l1.as_vector()),
                &a.fibre_form(&l2.as_vector()),
            )?))
        },
    );
    let pb = albanese::pullback_image_check();
    r.claim(
        "nsa.pullback_rank",
        "rank of the lattice of C - E_ij^b and sum E_ij^1",
        A_LATTICE_A,
        "25",
        || Ok(pb.clone()?.rank.to_string()),
    );
    r.claim(
        "nsa.pullback_discriminant",
        "discriminant of the pullback image",
        A_LATTICE_A,
        disc.clone(),
        || Ok(render_big(&pb.clone()?.discriminant)),
    );
    r.claim(
        "nsa.pullback_index",
        "index of the pullback image in NS(S)",
        A_INTERSECTION,
        "2",
        || Ok(pb.clone()?.index_in_ns.to_string()),
    );
    r.claim(
        "nsa.sides_agree",
        "surface-side and A-side discriminants agree",
        A_LATTICE_A,
        "true",
        || Ok((pb.clone()?.discriminant == ns.clone()?.discriminant()?).to_string()),
    );
}

fn fibrations_suite(r: &mut Runner, seed: u64) {
    r.claim(
        "fib.membership",
        "x1 - x2, (1 - w)x1 in the dual module; x1 not",
        A_ALL_FIB,
        "true, true, false",
        || {
            let v = ["x1 - x2", "(1-w)*x1", "x1"]
                .iter()
                .map(|s| Ok(fibrations::lambda_star_membership(&s.parse()?).to_string()))
                .collect::<Result<Vec<_>>>()?;
            Ok(v.join(", "))
        },
    );
    r.claim(
        "fib.genus_example",
        "genus of the fibre of (1 - w)x_i",
        A_EXAMPLE,
        "10",
        || Ok(fibrations::fiber_genus(&"(1-w)*x1".parse()?)?.to_string()),
    );
    let cor = fibrations::corollary_reports(seed);
    r.claim(
        "fib.singular_fibres",
        "B-sum singular fibres: self-intersection 0, genus 10, contracted, class of F (i = 1..5)",
        A_EXAMPLE,
        count(5, 5),
        || {
            let ok = cor
                .clone()?
                .example
                .iter()
                .filter(|e| {
                    e.fibre_self_intersections == [0, 0, 0]
                        && e.fibre_genera == [10, 10, 10]
                        && e.components_contracted
                        && e.fibres_match_class
                })
                .count();
            Ok(count(ok, 5))
        },
    );
    r.claim(
        "fib.critical_points",
        "intersection points of the contracted curves",
        A_EXAMPLE,
        "27",
        || {
            let c = cor.clone()?;
            let pts: Vec<i64> = c.example.iter().map(|e| e.critical_points).collect();
            Ok(if pts.iter().all(|&p| p == pts[0]) {
                pts[0].to_string()
            } else {
                format!("{pts:?}")
            })
        },
    );
    r.claim(
        "fib.ten_curve",
        "D^2 = 0, genus 16, components contracted, F = 3D (81 choices of a)",
        A_SUM,
        count(81, 81),
        || {
            let ok = cor
                .clone()?
                .ten_curve
                .iter()
                .filter(|t| {
                    t.self_intersection == 0
                        && t.genus == 16
                        && t.components_contracted
                        && t.fibre_is_three_d
                        && t.fibre_genus == 46
                })
                .count();
            Ok(count(ok, 81))
        },
    );
    r.claim(
        "fib.incidence_classes",
        "F of x_i - b^2 x_j is numerically C - E_ij^b",
        A_LATTICE_A,
        count(30, 30),
        || {
            let mut ok = 0;
            for lab in CurveLabel::all() {
                let l = LinearForm::difference(lab.i as usize, lab.j as usize, 2 * lab.beta as i64);
                let f = fibrations::fiber_class_coordinates(&l)?;
                ok += usize::from(fermat::numerically_equal(
                    &f,
                    &(&DivisorClass::c() - &DivisorClass::curve(lab)),
                ));
            }
            Ok(count(ok, 30))
        },
    );
    r.claim(
        "fib.pair_example",
        "F_l.F_l' for x4 - w^2 x5 and x4 - w x5",
        A_TWELVE,
        "3",
        || Ok(fibrations::fiber_pair_degree(&"x4 - w^2*x5".parse()?, &"x4 - w*x5".parse()?)?.to_string()),
    );
    r.claim(
        "fib.pair_random",
        "closed-form F_l.F_l' equals the exterior pairing (100 seeded pairs)",
        A_FORM_Q,
        count(100, 100),
        || Ok(count(pair_degree_cases(&Albanese::new()?, seed, 100)?, 100)),
    );
    r.claim(
        "fib.f_squared",
        "F^2 = 0 and genus matches adjunction (50 seeded forms)",
        A_ALL_FIB,
        count(50, 50),
        || {
            let mut ok = 0;
            for l in fibrations::sample_forms(seed ^ 0x5f, 50) {
                let f = fibrations::fiber_class_coordinates(&l)?;
                ok += usize::from(
                    f.self_intersection() == 0 && fermat::genus_of_class(&f)? == fibrations::fiber_genus(&l)?,
                );
            }
            Ok(count(ok, 50))
        },
    );
    r.claim(
        "fib.sum_over_curves",
        "sum over the 30 curves of F.E = 12 ||l||^2 (50 seeded forms)",
        A_GENUS,
        count(50, 50),
        || {
            let mut ok = 0;
            for l in fibrations::sample_forms(seed ^ 0xa1, 50) {
                let s: i64 = fibrations::fiber_intersections(&l)?.curves.iter().sum();
                ok += usize::from(BigInt::from(s) == BigInt::from(12) * l.norm_sq());
            }
            Ok(count(ok, 50))
        },
    );
    r.claim(
        "fib.unit_rescale",
        "outputs unchanged under l -> u l for the six units (30 seeded forms)",
        A_ALL_FIB,
        count(30, 30),
        || Ok(count(unit_rescale_cases(seed ^ 0x3c, 30)?, 30)),
    );
    r.claim(
        "fib.incidence_sections",
        "each C - E fibration has 20 sections and 9 contracted curves",
        A_AUTOMOR,
        count(30, 30),
        || {
            Ok(count(
                CurveLabel::all()
                    .into_iter()
                    .filter(|&l| fermat::section_counts(l) == (20, 9))
                    .count(),
                30,
            ))
        },
    );
    r.claim(
        "fib.nine_sections",
        "x1 - (1 + (1 - w)a)x2: E1k^b are sections, E34, E35, E45 contracted (sampled a)",
        A_SECTIONS,
        "true",
        || {
            let c = cor.clone()?;
            Ok(c.sections
                .iter()
                .all(|s| s.section_values == [1; 9] && s.contracted_values == [0; 9])
                .to_string())
        },
    );
    r.claim(
        "fib.e12_value",
        "F.E12^1 equals N(2 + (1 - w)a) (it is 1 only for special a, e.g. a = -2 - w)",
        A_SECTIONS,
        "true",
        || {
            let c = cor.clone()?;
            Ok(c.sections.iter().all(|s| s.e12_value == s.e12_expected).to_string())
        },
    );
    r.claim(
        "fib.conjugate_contracted",
        "(1 - w)(x_i + b x_j) contracts E_ij^{b^2}",
        A_NON_REDUCED,
        "true",
        || Ok(cor.clone()?.conjugate_contracted.to_string()),
    );
}

fn twelve_suite(r: &mut Runner) {
    let lat = twelve::twelve_lattice();
    r.claim("twelve.rank", "rank of the 12 curves and C", A_INFINITE, "12", || {
        Ok(lat.clone()?.rank.to_string())
    });
    r.claim(
        "twelve.discriminant",
        "discriminant of the 12 curves and C",
        A_INFINITE,
        render_big(&(BigInt::from(2) * BigInt::from(3).pow(10))),
        || Ok(render_big(&lat.clone()?.discriminant)),
    );
    r.claim(
        "twelve.curve_rank",
        "rank of the 12 curves alone",
        A_TWELVE,
        "12",
        || Ok(lat.clone()?.curve_rank.to_string()),
    );
    r.claim(
        "twelve.signature",
        "positive eigenvalues of the 13x13 Gram matrix",
        A_TWELVE,
        "1",
        || Ok(lat.clone()?.inertia.0.to_string()),
    );
    let k = twelve::canonical_check_twelve();
    r.claim(
        "twelve.k_dot_e",
        "K.E = 3 for the 12 curves",
        A_CANONICAL_COVER,
        count(12, 12),
        || Ok(count(k.k_dot_curves.iter().filter(|&&x| x == 3).count(), 12)),
    );
    r.claim("twelve.k_squared", "K^2", A_CANONICAL_COVER, "45", || {
        Ok(k.k_squared.to_string())
    });
    r.claim(
        "twelve.picard",
        "Picard numbers for no CM, CM by another field, CM by Q(w)",
        A_INFINITE,
        "12, 13, 25",
        || {
            Ok([CmCase::NoCm, CmCase::CmOtherField, CmCase::CmQAlpha]
                .map(|c| twelve::picard_rank_cases(c).to_string())
                .join(", "))
        },
    );
    let c = twelve::cover_consistency();
    r.claim(
        "twelve.delta_tilde",
        "self-intersection of the proper transform of the diagonal",
        A_TWELVE,
        "-9",
        || Ok(c.delta_tilde_sq.to_string()),
    );
    r.claim("twelve.chern_z", "K_Z^2 and c2(Z)", A_TWELVE, "-9, 9", || {
        Ok(format!("{}, {}", c.k_z_sq, c.c2_z))
    });
    r.claim("twelve.c2", "c2(S) = 3 c2(Z)", A_TWELVE, "27", || {
        Ok(c.c2_s.to_string())
    });
    r.claim(
        "twelve.k_s_squared",
        "K_S^2 = 3K_Z^2 + 4K_Z.B + 4R^2",
        A_TWELVE,
        "-27 + 108 - 36 = 45",
        || {
            let (a, b, d) = c.k_s_sq_terms;
            Ok(format!("{a} + {b} - {} = {}", -d, c.k_s_sq))
        },
    );
    r.claim(
        "twelve.ramification",
        "(pi^* Delta~)^2 = (3E)^2",
        A_TWELVE,
        "-27 = -27",
        || Ok(format!("{} = {}", c.ramification_pullback.0, c.ramification_pullback.1)),
    );
    r.claim(
        "twelve.branch_disjoint",
        "proper transforms of Delta, T1, T2 are disjoint",
        A_TWELVE,
        "true",
        || Ok(c.branch_disjoint.to_string()),
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        assert_eq!(render_big(&BigInt::from(3).pow(18)), "3^18 (387420489)");
        assert_eq!(
            render_big(&(BigInt::from(4) * BigInt::from(3).pow(18))),
            "2^2*3^18 (1549681956)"
        );
        assert_eq!(render_big(&BigInt::from(9)), "9");
        assert_eq!(render_big(&BigInt::from(11)), "11");
        assert_eq!(render_big(&BigInt::from(20)), "20");
        assert_eq!(render_big(&BigInt::from(1001)), "1001");
        assert_eq!(render_big(&-BigInt::from(3).pow(10)), "-3^10 (-59049)");
    }

    #[test]
    fn suite_names() {
        for n in Suite::NAMES {
            assert_eq!(n.parse::<Suite>().unwrap().name(), n);
        }
        assert!(matches!("nope".parse::<Suite>(), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn small_suites_pass() {
        for s in [Suite::Arith, Suite::Group, Suite::TwelveFamily] {
            let run = run_suite(s, DEFAULT_SEED);
            for rep in &run.reports {
                assert!(rep.passed(), "{rep:?}");
            }
        }
    }

    #[test]
    fn ids_are_unique() {
        let run = run_suite(Suite::Arith, 1);
        let mut ids: Vec<_> = run.reports.iter().map(|r| r.claim_id.clone()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), run.reports.len());
    }
}
