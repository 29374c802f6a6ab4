//! The invariant suites run by `spin9 verify`, one per module.
//!
//! Randomized checks draw from a ChaCha stream seeded by `RunConfig::seed`;
//! each suite derives its own stream so suites can run in any order.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::bpt;
use crate::canonical::{self, TwoForms};
use crate::curvature;
use crate::error::{reject, Error, Result};
use crate::exterior::{self, lie_derivative, pullback, wedge, AlternatingForm};
use crate::octonion::{self, associator, automorphism_from_triple, inner_oct, mul_table, Octonion, SignedUnit};
use crate::operators::{lambda_basis, rotation, standard_family, Operator16, RationalCirclePoint, Vector16};
use crate::rational::{frac, int, Rational};
use crate::report::{Check, VerificationReport};
use crate::sample::{self, SampleRng};
use crate::stabilizer;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    All,
    Octonion,
    Operators,
    Exterior,
    Canonical,
    Curvature,
    Stabilizer,
    Bpt,
}

impl Suite {
    /// Every concrete suite in report order.
    pub const MODULES: [Suite; 7] =
        [Suite::Octonion, Suite::Operators, Suite::Exterior, Suite::Canonical, Suite::Curvature, Suite::Stabilizer, Suite::Bpt];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Octonion => "octonion",
            Suite::Operators => "operators",
            Suite::Exterior => "exterior",
            Suite::Canonical => "canonical",
            Suite::Curvature => "curvature",
            Suite::Stabilizer => "stabilizer",
            Suite::Bpt => "bpt",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::MODULES)
            .find(|m| m.name() == s)
            .map_or_else(|| reject(format!("unknown suite {s:?}")), Ok)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub seed: u64,
    /// Random inputs per identity; the curvature sweeps use ten times this.
    pub samples: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { seed: 0x5339, samples: 100 }
    }
}

impl RunConfig {
    pub fn new(seed: u64, samples: usize) -> Result<Self> {
        if samples == 0 {
            return reject("samples must be positive");
        }
        Ok(RunConfig { seed, samples })
    }

    fn rng(&self, suite: Suite) -> SampleRng {
        sample::rng(self.seed ^ ((suite as u64) << 56))
    }
}

pub fn run(suite: Suite, config: &RunConfig) -> Result<VerificationReport> {
    match suite {
        Suite::All => {
            let mut report = VerificationReport::new();
            for m in Suite::MODULES {
                report.extend(run(m, config)?);
            }
            Ok(report)
        }
        Suite::Octonion => Ok(octonion_suite(config)),
        Suite::Operators => operators_suite(),
        Suite::Exterior => exterior_suite(config),
        Suite::Canonical => canonical_suite(config),
        Suite::Curvature => curvature_suite(config),
        Suite::Stabilizer => stabilizer_suite(),
        Suite::Bpt => Ok(bpt_suite(config)),
    }
}

/// One check over many cases; records the case count and the first failure.
fn sweep<T: fmt::Debug>(id: &str, cases: impl IntoIterator<Item = (T, bool)>) -> Check {
    let mut n = 0usize;
    let mut witness = None;
    for (case, ok) in cases {
        n += 1;
        if !ok && witness.is_none() {
            witness = Some(format!("{case:?}"));
        }
    }
    let c = Check::new(id, witness.is_none()).with("cases", n);
    match witness {
        Some(w) => c.with("witness", w),
        None => c,
    }
}

fn e(k: usize) -> Vector16 {
    Vector16::basis(k)
}

fn first_block() -> Vec<Vector16> {
    (0..8).map(e).collect()
}

fn ordered_pairs() -> impl Iterator<Item = (usize, usize)> {
    (0..9).flat_map(|i| (i + 1..9).map(move |j| (i, j)))
}

fn octonion_suite(config: &RunConfig) -> VerificationReport {
    let mut r = VerificationReport::new();
    let u = Octonion::unit;
    let t = mul_table();
    r.push(Check::new("octonion.named_products", t.get(5, 6) == SignedUnit::neg(3) && t.get(1, 2) == SignedUnit::pos(3)));
    r.push(Check::new("octonion.associator", associator(&u(1), &u(2), &u(4)) == u(7).scale(&int(2))));
    let triples = (0..512).map(|n| (n / 64, n / 8 % 8, n % 8));
    r.push(sweep(
        "octonion.inner_identities",
        triples.map(|(a, b, c)| {
            let (a, b, c) = (u(a), u(b), u(c));
            let x = inner_oct(&a.mul(&b), &c);
            let ok = x == inner_oct(&b, &a.conj().mul(&c)) && x == inner_oct(&a, &c.mul(&b.conj()));
            ((a.coeffs.iter().position(|v| !v.is_zero()), b.coeffs.iter().position(|v| !v.is_zero())), ok)
        }),
    ));
    let mut rng = config.rng(Suite::Octonion);
    let pairs: Vec<(Octonion, Octonion)> =
        (0..config.samples).map(|_| (sample::octonion(&mut rng), sample::octonion(&mut rng))).collect();
    r.push(sweep(
        "octonion.norm_multiplicative",
        pairs.iter().enumerate().map(|(k, (a, b))| (k, a.mul(b).norm2() == &a.norm2() * &b.norm2())),
    ));
    r.push(sweep(
        "octonion.alternative",
        pairs.iter().enumerate().map(|(k, (a, b))| {
            (k, associator(a, a, b).is_zero() && associator(a, b, b).is_zero() && associator(a, b, a).is_zero())
        }),
    ));
    r.push(sweep(
        "octonion.cross_orthogonal",
        pairs.iter().enumerate().map(|(k, (a, b))| {
            let (a, b) = (a.im(), b.im());
            let x = octonion::cross_oct(&a, &b);
            (k, inner_oct(&x, &a).is_zero() && inner_oct(&x, &b).is_zero())
        }),
    ));
    let phi = automorphism_from_triple(SignedUnit::pos(2), SignedUnit::pos(5), SignedUnit::neg(3));
    r.push(Check::new("octonion.automorphism", phi.map(|p| p.is_multiplicative()).unwrap_or(false)));
    r.push(Check::new(
        "octonion.automorphism_rejects_associative_triple",
        automorphism_from_triple(SignedUnit::pos(1), SignedUnit::pos(2), SignedUnit::pos(3)).is_err(),
    ));
    r
}

fn operators_suite() -> Result<VerificationReport> {
    let mut r = VerificationReport::new();
    let f = standard_family();
    r.push(Check::new("operators.relations", f.satisfies_relations()));
    r.push(Check::new("operators.i8_action", f.get(8).apply(&e(0)) == e(0).scale(&int(-1)) && f.get(8).apply(&e(8)) == e(8)));
    r.push(Check::new("operators.i0_action", f.get(0).apply(&e(0)) == e(8)));
    let mut rows: Vec<Vec<Rational>> = vec![Operator16::identity().flat().to_vec()];
    let mut dims = vec![1usize];
    for k in 1..=4 {
        let b = lambda_basis(f, k)?;
        dims.push(b.len());
        rows.extend(b.iter().map(|op| op.flat().to_vec()));
    }
    let rank = crate::linalg::rank(&rows);
    r.push(
        Check::new("operators.lambda_decomposition", rank == 256 && dims == [1, 9, 36, 84, 126])
            .with("dims", format!("{dims:?}"))
            .with("rank", rank),
    );
    let spin9 = lambda_basis(f, 2)?;
    let flat: Vec<Vec<Rational>> = spin9.iter().map(|op| op.flat().to_vec()).collect();
    let closed = spin9.iter().all(|a| spin9.iter().all(|b| crate::linalg::in_span(&flat, &a.commutator(b).flat().to_vec())));
    r.push(Check::new("operators.spin9_closed", closed && spin9.iter().all(Operator16::is_skew)).with("dim", spin9.len()));
    r.push(sweep(
        "operators.sandwich_sum",
        spin9.iter().enumerate().map(|(n, op)| {
            let sum = f.ops().iter().fold(Operator16::zero(), |acc, i| &acc + &i.compose(op).compose(i));
            (n, sum == op.scale(&int(5)))
        }),
    ));
    let points = [
        RationalCirclePoint::rotation(frac(3, 5), frac(4, 5))?,
        RationalCirclePoint::rotation(frac(5, 13), frac(12, 13))?,
    ];
    r.push(sweep(
        "operators.rotations_orthogonal",
        points.iter().flat_map(|p| ordered_pairs().map(move |(k, l)| (k, l, p))).map(|(k, l, p)| {
            let a = rotation(f, k, l, p).expect("valid pair");
            ((k, l, p.c.to_string()), a.transpose().compose(&a) == Operator16::identity())
        }),
    ));
    Ok(r)
}

fn random_form(rng: &mut SampleRng, degree: usize) -> Result<AlternatingForm> {
    // a sum of two decomposable terms
    let mut f = AlternatingForm::zero(degree);
    for _ in 0..2 {
        let ones: Vec<AlternatingForm> = (0..degree).map(|_| AlternatingForm::one_form(&sample::small_vector(rng))).collect();
        let refs: Vec<&AlternatingForm> = ones.iter().collect();
        f.add_assign(&exterior::wedge_all(&refs)?);
    }
    Ok(f)
}

fn exterior_suite(config: &RunConfig) -> Result<VerificationReport> {
    let mut r = VerificationReport::new();
    let anchor = AlternatingForm::basis(&[0, 1]).eval(&[e(0), e(1)])?;
    r.push(Check::new("exterior.convention", anchor.is_one()).with("dx0^dx1(e0,e1)", &anchor));
    let mut rng = config.rng(Suite::Exterior);
    let n = config.samples.div_ceil(10);
    let mut assoc = Vec::new();
    let mut graded = Vec::new();
    let mut derivation = Vec::new();
    for k in 0..n {
        let (a, b, c) = (random_form(&mut rng, 1)?, random_form(&mut rng, 2)?, random_form(&mut rng, 3)?);
        let lhs = wedge(&wedge(&a, &b)?, &c)?;
        assoc.push((k, lhs == wedge(&a, &wedge(&b, &c)?)?));
        // deg a * deg c is odd
        graded.push((k, wedge(&a, &c)? == -wedge(&c, &a)? && wedge(&b, &c)? == wedge(&c, &b)?));
        let op = Operator16::from_rows(&(0..16).map(|_| (0..16).map(|_| sample::rational(&mut rng)).collect::<Vec<_>>()).collect::<Vec<_>>());
        let d = lie_derivative(&wedge(&b, &c)?, &op);
        let expected = &wedge(&lie_derivative(&b, &op), &c)? + &wedge(&b, &lie_derivative(&c, &op))?;
        derivation.push((k, d == expected));
    }
    r.push(sweep("exterior.wedge_associative", assoc));
    r.push(sweep("exterior.graded_commutative", graded));
    r.push(sweep("exterior.lie_derivation", derivation));
    let f = standard_family();
    let mut bilinear = Vec::new();
    for (k, op) in lambda_basis(f, 2)?.iter().enumerate().take(n.max(1)) {
        let w = exterior::two_form_from_operator(op)?;
        let (x, y) = (sample::vector(&mut rng), sample::vector(&mut rng));
        bilinear.push((k, w.eval(&[x.clone(), y.clone()])? == x.inner(&op.apply(&y))));
    }
    r.push(sweep("exterior.two_form_from_operator", bilinear));
    let p = RationalCirclePoint::rotation(frac(3, 5), frac(4, 5))?;
    let (a, b) = (rotation(f, 0, 1, &p)?, rotation(f, 2, 8, &p)?);
    let g = random_form(&mut rng, 4)?;
    r.push(Check::new("exterior.pullback_functorial", pullback(&pullback(&g, &a), &b) == pullback(&g, &a.compose(&b))));
    Ok(r)
}

fn canonical_suite(config: &RunConfig) -> Result<VerificationReport> {
    let mut r = VerificationReport::new();
    let family = standard_family();
    let t = TwoForms::standard();
    let oracle = canonical::eval_via_w_tilde();
    let omega = canonical::canonical_8form();
    let value = omega.eval(&first_block())?;
    r.push(
        Check::new("canonical.anchor", value == int(-20160) && value == oracle)
            .with("omega8_eval", &value)
            .with("oracle", &oracle),
    );
    r.push(Check::new("canonical.term_count", omega.len() == 702).with("omega8_terms", omega.len()));
    r.push(Check::new("canonical.factored_construction", canonical::canonical_8form_factored(t) == *omega));
    r.push(Check::new("canonical.alternate_construction", canonical::canonical_8form_alt(t) == *omega));

    let u = Octonion::unit;
    let anchors = [
        ((0, 0, 1, 1), -24),
        ((0, 0, 1, 2), -8),
        ((0, 1, 2, 3), -8),
        ((0, 1, 2, 4), -8),
    ];
    r.push(sweep(
        "canonical.w_tilde_anchors",
        anchors.iter().map(|&((a, b, c, d), v)| ((a, b, c, d), canonical::w_tilde(&u(a), &u(b), &u(c), &u(d)) == int(v))),
    ));

    let pairs: Vec<(usize, usize)> = ordered_pairs().collect();
    let lie: Vec<((usize, usize), bool)> =
        pairs.par_iter().map(|&(k, l)| ((k, l), lie_derivative(omega, &family.pair(k, l)).is_zero())).collect();
    r.push(sweep("canonical.lie_invariance", lie));
    let points = [
        RationalCirclePoint::rotation(frac(3, 5), frac(4, 5))?,
        RationalCirclePoint::rotation(frac(5, 13), frac(12, 13))?,
    ];
    let planes = [(0, 1), (3, 8), (2, 6), (4, 7)];
    let cases: Vec<(usize, usize, &RationalCirclePoint)> =
        points.iter().flat_map(|p| planes.iter().map(move |&(k, l)| (k, l, p))).collect();
    let pulled: Vec<((usize, usize, String), bool)> = cases
        .par_iter()
        .map(|&(k, l, p)| {
            let a = rotation(family, k, l, p).expect("valid pair");
            ((k, l, p.c.to_string()), pullback(omega, &a) == *omega)
        })
        .collect();
    r.push(sweep("canonical.rotation_invariance", pulled));

    r.push(Check::new("canonical.omega_square_sum_vanishes", canonical::four_form_omega_sum(t).is_zero()));
    r.push(Check::new("canonical.sigma_square_sum_vanishes", canonical::four_form_sigma_sum(t).is_zero()));
    let mut rng = config.rng(Suite::Canonical);
    let quads: Vec<[Vector16; 4]> =
        (0..config.samples).map(|_| std::array::from_fn(|_| sample::vector(&mut rng))).collect();
    let ids: Vec<(usize, bool, bool, bool)> = quads
        .par_iter()
        .enumerate()
        .map(|(k, v)| {
            let vr = [&v[0], &v[1], &v[2], &v[3]];
            (
                k,
                canonical::cyclic_omega_identity(family, t, vr).is_zero(),
                canonical::omega_quadratic(t, vr).is_zero(),
                canonical::sigma_quadratic(t, vr).is_zero(),
            )
        })
        .collect();
    r.push(sweep("canonical.cyclic_identity", ids.iter().map(|x| (x.0, x.1))));
    r.push(sweep("canonical.omega_quadratic_identity", ids.iter().map(|x| (x.0, x.2))));
    r.push(sweep("canonical.sigma_quadratic_identity", ids.iter().map(|x| (x.0, x.3))));

    let friedrich: Vec<(usize, VerificationReport)> = (0..config.samples)
        .map(|k| (k, sample::vector(&mut rng), sample::vector(&mut rng)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(k, x, y)| (k, canonical::friedrich_identities(&x, &y)))
        .collect();
    for id in ["friedrich.flat", "friedrich.twisted"] {
        r.push(sweep(
            &format!("canonical.{id}"),
            friedrich.iter().map(|(k, rep)| (*k, rep.get(id).is_some_and(|c| c.passed))),
        ));
    }

    let g = canonical::mat9_mul(
        &canonical::givens9(1, 7, &frac(3, 5), &frac(4, 5)),
        &canonical::givens9(0, 8, &frac(5, 13), &frac(12, 13)),
    );
    let rotated = family.rotated(&g);
    r.push(Check::new(
        "canonical.basis_independence",
        canonical::is_special_orthogonal9(&g) && rotated.satisfies_relations() && canonical::canonical_8form_from(&rotated) == *omega,
    ));
    Ok(r)
}

fn curvature_suite(config: &RunConfig) -> Result<VerificationReport> {
    let mut r = VerificationReport::new();
    let c = int(4);
    let basis: Vec<((usize, usize, usize), bool)> = (0..4096usize)
        .into_par_iter()
        .map(|n| {
            let (x, y, z) = (e(n / 256), e(n / 16 % 16), e(n % 16));
            let a = curvature::curvature_omega(&x, &y, &z, &c).expect("c != 0");
            let ok = a == curvature::curvature_brown_gray(&x, &y, &z, &c).expect("c != 0")
                && a == curvature::curvature_prime_operator(&x, &y, &z, &c).expect("c != 0")
                && a == curvature::curvature_prime_octonion(&x, &y, &z, &c).expect("c != 0");
            ((n / 256, n / 16 % 16, n % 16), ok)
        })
        .collect();
    r.push(sweep("curvature.agree_on_basis", basis));

    let mut rng = config.rng(Suite::Curvature);
    let m = config.samples * 10;
    let quads: Vec<[Vector16; 4]> = (0..m).map(|_| std::array::from_fn(|_| sample::vector(&mut rng))).collect();
    let rows: Vec<[bool; 5]> = quads
        .par_iter()
        .map(|[x, y, z, w]| {
            let rv = |a: &Vector16, b: &Vector16, d: &Vector16| curvature::curvature_omega(a, b, d, &c).expect("c != 0");
            let a = rv(x, y, z);
            let agree = a == curvature::curvature_brown_gray(x, y, z, &c).expect("c != 0")
                && a == curvature::curvature_prime_operator(x, y, z, &c).expect("c != 0")
                && a == curvature::curvature_prime_octonion(x, y, z, &c).expect("c != 0");
            let rt = |p: &Vector16, q: &Vector16, s: &Vector16, t: &Vector16| rv(p, q, s).inner(t);
            let v = rt(x, y, z, w);
            let sym = v == -rt(y, x, z, w) && v == -rt(x, y, w, z) && v == rt(z, w, x, y);
            let bianchi = (&(&a + &rv(y, z, x)) + &rv(z, x, y)).is_zero();
            let sp = |p: &Vector16, q: &Vector16| {
                &curvature::s_prime_operator(p, q, z, &c).expect("c != 0") - &curvature::s_prime_octonion(p, q, z, &c).expect("c != 0")
            };
            let termwise = curvature::s_prime_operator(x, y, z, &c).expect("c != 0")
                == curvature::s_prime_octonion(x, y, z, &c).expect("c != 0");
            [agree, sym, bianchi, sp(x, y) == sp(y, x), termwise]
        })
        .collect();
    let col = |i: usize| rows.iter().enumerate().map(move |(k, row)| (k, row[i]));
    r.push(sweep("curvature.agree_on_random", col(0)));
    r.push(sweep("curvature.pair_symmetries", col(1)));
    r.push(sweep("curvature.bianchi", col(2)));
    // the two S' expressions differ by a term symmetric in (X, Y), which the
    // antisymmetrization removes
    let termwise = rows.iter().all(|row| row[4]);
    r.push(Check::new("curvature.s_prime_difference_symmetric", rows.iter().all(|row| row[3])).with("s_prime_termwise", termwise));

    let averaging: Vec<((usize, usize, usize), bool)> = (0..4096usize)
        .into_par_iter()
        .filter(|n| n % 16 % 5 == 0)
        .map(|n| {
            let rep = curvature::averaging_identity(&e(n / 256), &e(n / 16 % 16), &e(n % 16), &c).expect("c != 0");
            ((n / 256, n / 16 % 16, n % 16), rep.all_passed())
        })
        .collect();
    r.push(sweep("curvature.averaging", averaging));
    let f = standard_family();
    r.push(sweep(
        "curvature.sandwich_sum",
        ordered_pairs().map(|(k, l)| {
            let op = f.pair(k, l);
            let sum = f.ops().iter().fold(Operator16::zero(), |acc, i| &acc + &i.compose(&op).compose(i));
            ((k, l), sum == op.scale(&int(5)))
        }),
    ));

    let lo = curvature::sectional_curvature(&e(0), &e(8), &c)?;
    let hi = curvature::sectional_curvature(&e(0), &e(1), &c)?;
    r.push(Check::new("curvature.pinching_endpoints", lo == int(1) && hi == int(4)).with("k_min", &lo).with("k_max", &hi));
    let planes: Vec<(Vector16, Vector16)> = (0..m).map(|_| (sample::vector(&mut rng), sample::vector(&mut rng))).collect();
    let ks: Vec<(usize, Option<Rational>)> = planes
        .par_iter()
        .enumerate()
        .map(|(k, (v, w))| (k, curvature::sectional_curvature(v, w, &c).ok()))
        .collect();
    let (one, four) = (int(1), int(4));
    r.push(sweep(
        "curvature.pinching",
        ks.iter().map(|(k, v)| (*k, v.as_ref().is_some_and(|v| *v >= one && *v <= four))),
    ));
    Ok(r)
}

fn stabilizer_suite() -> Result<VerificationReport> {
    let mut r = VerificationReport::new();
    // the solver is trusted on the 8-form only after reproducing sp(4, R)
    let (direct, forms, same) = stabilizer::symplectic_oracle()?;
    let oracle_ok = direct == 10 && forms == 10 && same;
    r.push(Check::new("stabilizer.symplectic_oracle", oracle_ok).with("dim", forms).with("direct_dim", direct));
    if !oracle_ok {
        return Ok(r);
    }
    let s = stabilizer::infinitesimal_stabilizer(canonical::canonical_8form())?;
    r.push(
        Check::new("stabilizer.kernel", s.kernel_dimension == 36 && s.equals_spin9 && s.verified && s.closed)
            .with("stabilizer_dim", s.kernel_dimension)
            .with("rank", s.rank)
            .with("contains_spin9", s.contains_spin9)
            .with("closed", s.closed),
    );
    let points = [
        RationalCirclePoint::boost(frac(5, 4), frac(3, 4))?,
        RationalCirclePoint::boost(frac(13, 12), frac(5, 12))?,
    ];
    r.extend(stabilizer::lambda1_exclusion(&points)?);
    r.extend(stabilizer::lambda3_exclusion()?);
    Ok(r)
}

fn bpt_suite(config: &RunConfig) -> VerificationReport {
    let mut r = VerificationReport::new();
    let table = bpt::bpt_invariance_defect();
    let expected = [63, -9, 9, 9, 9, 9, 9, 9].map(int);
    let total = table.total();
    let terms: Vec<String> = table.defect_terms.iter().map(|t| t.to_string()).collect();
    r.push(
        Check::new("bpt.defect", table.defect_terms == expected && total == int(108))
            .with("terms", terms.join(","))
            .with("bpt_defect", &total)
            .with("defect_total", &total),
    );
    r.push(Check::new("bpt.reduced_set", bpt::reduced_permutations().len() == 315).with("size", bpt::reduced_permutations().len()));
    let mut rng = config.rng(Suite::Bpt);
    let n = config.samples.div_ceil(20);
    let args: Vec<[Vector16; 8]> = (0..n).map(|_| std::array::from_fn(|_| sample::small_vector(&mut rng))).collect();
    let sums: Vec<(usize, bool)> = args
        .par_iter()
        .enumerate()
        .map(|(k, us)| {
            let full = bpt::bpt_8form_full_octonion(us);
            let ok = full.im().is_zero() && full.re() == bpt::bpt_8form_reduced(us) && full.re() == bpt::bpt_8form().eval(us).expect("8 args");
            (k, ok)
        })
        .collect();
    r.push(sweep("bpt.full_and_reduced_agree", sums));
    let lie = lie_derivative(bpt::bpt_8form(), &bpt::i78());
    let at_defect = lie.eval(&bpt::defect_vectors()).expect("8 args");
    r.push(Check::new("bpt.not_invariant", at_defect == int(108)).with("lie_at_defect", &at_defect).with("lie_terms", lie.len()));
    r.push(Check::new("bpt.canonical_is_invariant", lie_derivative(canonical::canonical_8form(), &bpt::i78()).is_zero()));
    r.extend(bpt::bpt_square_check());
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for s in std::iter::once(Suite::All).chain(Suite::MODULES) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
        assert!(RunConfig::new(1, 0).is_err());
    }

    #[test]
    fn sweep_records_first_witness() {
        let c = sweep("x", [(1, true), (2, false), (3, false)]);
        assert!(!c.passed);
        assert_eq!(c.value("witness"), Some("2"));
        assert_eq!(c.value("cases"), Some("3"));
    }

    #[test]
    fn light_suites_pass() {
        let cfg = RunConfig::new(7, 10).unwrap();
        for s in [Suite::Octonion, Suite::Operators, Suite::Exterior] {
            let rep = run(s, &cfg).unwrap();
            assert!(rep.all_passed(), "{rep}");
        }
    }

    #[test]
    fn reports_are_reproducible() {
        let cfg = RunConfig::new(3, 10).unwrap();
        assert_eq!(run(Suite::Octonion, &cfg).unwrap(), run(Suite::Octonion, &cfg).unwrap());
    }
}
