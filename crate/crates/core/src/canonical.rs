//! The 2-forms `omega_ij`, `sigma_ijk` and the canonical 8-form built from them.
//!
//! `omega_ij(X, Y) = <X, I_i I_j Y>` and `sigma_ijk(X, Y) = <X, I_i I_j I_k Y>`.
//! Both are computed from the operator products for every tuple of distinct
//! indices, which makes them totally antisymmetric automatically; repeated
//! indices give the zero form.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{reject, Error, Result};
use crate::exterior::{self, mask_indices, wedge, wedge_into, AlternatingForm, FormAccumulator};
use crate::octonion::Octonion;
use crate::operators::{standard_family, InvolutionFamily, Vector16};
use crate::perm::for_each_permutation;
use crate::rational::{int, Rational};
use crate::report::{Check, VerificationReport};

/// All `omega_ij` and `sigma_ijk` of one involution family, indexed by
/// arbitrary (not necessarily ordered) index tuples.
#[derive(Debug, Clone)]
pub struct TwoForms {
    omega: Vec<AlternatingForm>,
    sigma: Vec<AlternatingForm>,
}

impl TwoForms {
    pub fn new(family: &InvolutionFamily) -> Self {
        let omega = (0..81)
            .into_par_iter()
            .map(|n| {
                let (i, j) = (n / 9, n % 9);
                if i == j {
                    return AlternatingForm::zero(2);
                }
                exterior::two_form_from_operator(&family.get(i).compose(family.get(j)))
                    .expect("I_i I_j is skew for i != j")
            })
            .collect();
        let sigma = (0..729)
            .into_par_iter()
            .map(|n| {
                let (i, j, k) = (n / 81, (n / 9) % 9, n % 9);
                if i == j || j == k || i == k {
                    return AlternatingForm::zero(2);
                }
                let op = family.get(i).compose(family.get(j)).compose(family.get(k));
                exterior::two_form_from_operator(&op).expect("I_i I_j I_k is skew for distinct indices")
            })
            .collect();
        TwoForms { omega, sigma }
    }

    /// Forms of the standard family, built once.
    pub fn standard() -> &'static TwoForms {
        static FORMS: OnceLock<TwoForms> = OnceLock::new();
        FORMS.get_or_init(|| TwoForms::new(standard_family()))
    }

    pub fn omega(&self, i: usize, j: usize) -> &AlternatingForm {
        &self.omega[i * 9 + j]
    }

    /// The antisymmetric extension: `sigma_{pi(ijk)} = sign(pi) sigma_ijk`.
    pub fn sigma(&self, i: usize, j: usize, k: usize) -> &AlternatingForm {
        &self.sigma[i * 81 + j * 9 + k]
    }

    /// The symmetric extension: `sigma` of the sorted triple, with no sign.
    pub fn sigma_sorted(&self, i: usize, j: usize, k: usize) -> &AlternatingForm {
        let mut t = [i, j, k];
        t.sort_unstable();
        self.sigma(t[0], t[1], t[2])
    }
}

fn check_index(i: usize) -> Result<()> {
    if i > 8 {
        return reject(format!("index {i} outside 0..=8"));
    }
    Ok(())
}

/// `omega_ij` of the standard family; `omega_ii = 0` and `omega_ji = -omega_ij`.
pub fn omega2(i: usize, j: usize) -> Result<AlternatingForm> {
    check_index(i)?;
    check_index(j)?;
    Ok(TwoForms::standard().omega(i, j).clone())
}

/// `sigma_ijk` of the standard family for `i < j < k`.
pub fn sigma2(i: usize, j: usize, k: usize) -> Result<AlternatingForm> {
    check_index(k)?;
    if !(i < j && j < k) {
        return reject(format!("sigma indices ({i}, {j}, {k}) are not strictly increasing"));
    }
    Ok(TwoForms::standard().sigma(i, j, k).clone())
}

fn ordered_pairs() -> impl Iterator<Item = (usize, usize)> {
    (0..9).flat_map(|i| (i + 1..9).map(move |j| (i, j)))
}

fn ordered_triples() -> impl Iterator<Item = (usize, usize, usize)> {
    (0..9).flat_map(|i| (i + 1..9).flat_map(move |j| (j + 1..9).map(move |k| (i, j, k))))
}

/// `omega_ij ^ omega_ij'` for all `(i, j, j')`, indexed `i*81 + j*9 + j'`.
fn row_pair_products(t: &TwoForms) -> Vec<AlternatingForm> {
    (0..729)
        .into_par_iter()
        .map(|n| {
            let (i, j, jp) = (n / 81, (n / 9) % 9, n % 9);
            wedge(t.omega(i, j), t.omega(i, jp)).expect("degree 4")
        })
        .collect()
}

/// The sum over all `i, j, i', j'` in `0..=8` of
/// `omega_ij ^ omega_ij' ^ omega_i'j ^ omega_i'j'`, term by term.
pub fn canonical_8form_literal(t: &TwoForms) -> AlternatingForm {
    let pairs = row_pair_products(t);
    let one = Rational::one();
    (0..6561usize)
        .into_par_iter()
        .fold(FormAccumulator::new, |mut acc, n| {
            let (i, ip, j, jp) = (n / 729, (n / 81) % 9, (n / 9) % 9, n % 9);
            let left = &pairs[i * 81 + j * 9 + jp];
            let right = &pairs[ip * 81 + j * 9 + jp];
            if !left.is_zero() && !right.is_zero() {
                wedge_into(&mut acc, left, right, &one);
            }
            acc
        })
        .reduce(FormAccumulator::new, FormAccumulator::merge)
        .into_form(8)
}

/// The same sum regrouped as `sum_{j,j'} Q_jj' ^ Q_jj'` with
/// `Q_jj' = sum_i omega_ij ^ omega_ij'`; much cheaper for dense families.
pub fn canonical_8form_factored(t: &TwoForms) -> AlternatingForm {
    let pairs = row_pair_products(t);
    let one = Rational::one();
    (0..81usize)
        .into_par_iter()
        .map(|n| {
            let (j, jp) = (n / 9, n % 9);
            let mut q = AlternatingForm::zero(4);
            for i in 0..9 {
                q.add_assign(&pairs[i * 81 + j * 9 + jp]);
            }
            let mut acc = FormAccumulator::new();
            wedge_into(&mut acc, &q, &q, &one);
            acc
        })
        .reduce(FormAccumulator::new, FormAccumulator::merge)
        .into_form(8)
}

/// The canonical 8-form of the standard family, built once.
pub fn canonical_8form() -> &'static AlternatingForm {
    static OMEGA8: OnceLock<AlternatingForm> = OnceLock::new();
    OMEGA8.get_or_init(|| canonical_8form_literal(TwoForms::standard()))
}

/// The canonical 8-form of an arbitrary family.
pub fn canonical_8form_from(family: &InvolutionFamily) -> AlternatingForm {
    canonical_8form_factored(&TwoForms::new(family))
}

/// `-1/2 sum (omega_ij ^ omega_i'j' - omega_i'j ^ omega_ij')^2` over all
/// `i, j, i', j'`.
pub fn canonical_8form_alt(t: &TwoForms) -> AlternatingForm {
    let cross: Vec<AlternatingForm> = (0..6561usize)
        .into_par_iter()
        .map(|n| {
            let (a, b) = (n / 81, n % 81);
            wedge(&t.omega[a], &t.omega[b]).expect("degree 4")
        })
        .collect();
    let c = |i: usize, j: usize, k: usize, l: usize| &cross[(i * 9 + j) * 81 + k * 9 + l];
    let one = Rational::one();
    let sum = (0..6561usize)
        .into_par_iter()
        .fold(FormAccumulator::new, |mut acc, n| {
            let (i, ip, j, jp) = (n / 729, (n / 81) % 9, (n / 9) % 9, n % 9);
            let d = c(i, j, ip, jp) - c(ip, j, i, jp);
            if !d.is_zero() {
                wedge_into(&mut acc, &d, &d, &one);
            }
            acc
        })
        .reduce(FormAccumulator::new, FormAccumulator::merge)
        .into_form(8);
    sum.scale(&Rational::new(-1, 2))
}

/// `sum_{i<j} omega_ij ^ omega_ij`.
pub fn four_form_omega_sum(t: &TwoForms) -> AlternatingForm {
    let mut acc = FormAccumulator::new();
    for (i, j) in ordered_pairs() {
        wedge_into(&mut acc, t.omega(i, j), t.omega(i, j), &Rational::one());
    }
    acc.into_form(4)
}

/// `sum_{i<j<k} sigma_ijk ^ sigma_ijk`.
pub fn four_form_sigma_sum(t: &TwoForms) -> AlternatingForm {
    let mut acc = FormAccumulator::new();
    for (i, j, k) in ordered_triples() {
        wedge_into(&mut acc, t.sigma(i, j, k), t.sigma(i, j, k), &Rational::one());
    }
    acc.into_form(4)
}

fn ev2(f: &AlternatingForm, x: &Vector16, y: &Vector16) -> Rational {
    exterior::eval(f, &[x.clone(), y.clone()]).expect("2-form on two vectors")
}

/// `b(X,Y) b(Z,W) - b(X,Z) b(Y,W) + b(Y,Z) b(X,W)` summed over the given 2-forms.
fn quadratic_sum<'a>(forms: impl Iterator<Item = &'a AlternatingForm>, v: [&Vector16; 4]) -> Rational {
    let [x, y, z, w] = v;
    forms
        .map(|b| &(&(ev2(b, x, y) * ev2(b, z, w)) - &(ev2(b, x, z) * ev2(b, y, w))) + &(ev2(b, y, z) * ev2(b, x, w)))
        .sum()
}

/// The expanded quadratic form of the vanishing `omega` 4-form sum.
pub fn omega_quadratic(t: &TwoForms, v: [&Vector16; 4]) -> Rational {
    quadratic_sum(ordered_pairs().map(|(i, j)| t.omega(i, j)), v)
}

/// The expanded quadratic form of the vanishing `sigma` 4-form sum.
pub fn sigma_quadratic(t: &TwoForms, v: [&Vector16; 4]) -> Rational {
    quadratic_sum(ordered_triples().map(|(i, j, k)| t.sigma(i, j, k)), v)
}

/// Cyclic sum over `(X, Y, Z)` of `sum_{i<j} omega_ij(X, Y) <W, I_i I_j Z>`.
pub fn cyclic_omega_identity(family: &InvolutionFamily, t: &TwoForms, v: [&Vector16; 4]) -> Rational {
    let [x, y, z, w] = v;
    let term = |a: &Vector16, b: &Vector16, c: &Vector16| -> Rational {
        ordered_pairs()
            .map(|(i, j)| {
                let coef = ev2(t.omega(i, j), a, b);
                if coef.is_zero() {
                    return Rational::zero();
                }
                let iz = family.get(i).apply(&family.get(j).apply(c));
                coef * w.inner(&iz)
            })
            .sum()
    };
    term(x, y, z) + term(y, z, x) + term(z, x, y)
}

/// One signed permutation of `0..8` in compact form.
type SignedPerm = ([u8; 8], i8);

fn s8() -> &'static [SignedPerm] {
    static PERMS: OnceLock<Vec<SignedPerm>> = OnceLock::new();
    PERMS.get_or_init(|| {
        let mut out = Vec::with_capacity(40320);
        for_each_permutation(8, |p, s| out.push((std::array::from_fn(|k| p[k] as u8), s)));
        out
    })
}

/// `M[a][b] = <u_a, v (w u_b)>`.
fn sandwich_matrix(v: &Octonion, w: &Octonion) -> [[Rational; 8]; 8] {
    let cols: Vec<Octonion> = (0..8).map(|b| v.mul(&w.mul(&Octonion::unit(b)))).collect();
    std::array::from_fn(|a| std::array::from_fn(|b| cols[b].coeffs[a].clone()))
}

fn w_sum_i64(m: &[[[i64; 8]; 8]; 4]) -> i64 {
    let mut total = 0i64;
    for (p, s) in s8() {
        let p = p.map(usize::from);
        let a = m[0][p[0]][p[1]];
        if a == 0 {
            continue;
        }
        let b = m[1][p[2]][p[3]];
        if b == 0 {
            continue;
        }
        let c = m[2][p[4]][p[5]];
        if c == 0 {
            continue;
        }
        let d = m[3][p[6]][p[7]];
        total += i64::from(*s) * a * b * c * d;
    }
    total
}

/// `2^-4 sum_{s in S8} sign(s) <u_s0, v(w u_s1)> <u_s2, v(w' u_s3)> <u_s4, v'(w u_s5)> <u_s6, v'(w' u_s7)>`.
pub fn w_tilde(v: &Octonion, vp: &Octonion, w: &Octonion, wp: &Octonion) -> Rational {
    let mats = [sandwich_matrix(v, w), sandwich_matrix(v, wp), sandwich_matrix(vp, w), sandwich_matrix(vp, wp)];
    let small: Option<Vec<i64>> =
        mats.iter().flat_map(|m| m.iter().flatten()).map(|x| if x.is_integer() { x.to_i64() } else { None }).collect();
    if let Some(flat) = small {
        // entries of unit inputs are 0 or +-1; a 4-fold product fits easily
        if flat.iter().all(|x| x.abs() <= 1 << 12) {
            let m: [[[i64; 8]; 8]; 4] = std::array::from_fn(|k| std::array::from_fn(|a| std::array::from_fn(|b| flat[k * 64 + a * 8 + b])));
            return Rational::new(w_sum_i64(&m), 16);
        }
    }
    let mut total = Rational::zero();
    for (p, s) in s8() {
        let p = p.map(usize::from);
        let a = &mats[0][p[0]][p[1]];
        let b = &mats[1][p[2]][p[3]];
        let c = &mats[2][p[4]][p[5]];
        let d = &mats[3][p[6]][p[7]];
        if a.is_zero() || b.is_zero() || c.is_zero() || d.is_zero() {
            continue;
        }
        let prod = &(a * b) * &(c * d);
        if *s > 0 {
            total += &prod;
        } else {
            total -= &prod;
        }
    }
    total / Rational::from(16)
}

/// The value of the canonical 8-form on `(u_0, 0), .., (u_7, 0)` assembled
/// from `w_tilde(u_i, u_i'; conj u_j, conj u_j')` over all `i, i', j, j' < 8`;
/// every term with an index 8 vanishes on the first octonion slot.
pub fn eval_via_w_tilde() -> Rational {
    let units: Vec<Octonion> = (0..8).map(Octonion::unit).collect();
    let conj: Vec<Octonion> = units.iter().map(Octonion::conj).collect();
    let mats: HashMap<(usize, usize), [[i64; 8]; 8]> = (0..64)
        .map(|n| {
            let (a, b) = (n / 8, n % 8);
            let m = sandwich_matrix(&units[a], &conj[b]);
            ((a, b), m.map(|row| row.map(|x| x.to_i64().expect("unit entries are integral"))))
        })
        .collect();
    let total: i64 = (0..4096usize)
        .into_par_iter()
        .map(|n| {
            let (i, ip, j, jp) = (n / 512, (n / 64) % 8, (n / 8) % 8, n % 8);
            if i == j || i == jp || ip == j || ip == jp {
                return 0;
            }
            w_sum_i64(&[mats[&(i, j)], mats[&(i, jp)], mats[&(ip, j)], mats[&(ip, jp)]])
        })
        .sum();
    Rational::new(total, 16)
}

/// How the conjecture's sum extends `sigma` to unordered index triples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// `sigma` totally antisymmetric, zero on repeated indices.
    Antisymmetric,
    /// `sigma` of the sorted triple without sign, zero on repeated indices.
    Symmetric,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Antisymmetric => "antisymmetric",
            Convention::Symmetric => "symmetric",
        })
    }
}

/// `1/4 sum sigma_ijp ^ sigma_ijp' ^ sigma_i'j'p ^ sigma_i'j'p'` over all six
/// indices in `0..=8`, computed as `1/4 sum_{p,p'} T_pp' ^ T_pp'` with
/// `T_pp' = sum_{i,j} sigma_ijp ^ sigma_ijp'`.
pub fn conjecture_8form_with(t: &TwoForms, convention: Convention) -> AlternatingForm {
    let sig = |i: usize, j: usize, k: usize| match convention {
        Convention::Antisymmetric => t.sigma(i, j, k),
        Convention::Symmetric => t.sigma_sorted(i, j, k),
    };
    let tp: Vec<AlternatingForm> = (0..81usize)
        .into_par_iter()
        .map(|n| {
            let (p, pp) = (n / 9, n % 9);
            let mut acc = FormAccumulator::new();
            for i in 0..9 {
                for j in 0..9 {
                    let (a, b) = (sig(i, j, p), sig(i, j, pp));
                    if !a.is_zero() && !b.is_zero() {
                        wedge_into(&mut acc, a, b, &Rational::one());
                    }
                }
            }
            acc.into_form(4)
        })
        .collect();
    let quarter = Rational::new(1, 4);
    (0..81usize)
        .into_par_iter()
        .map(|n| {
            let mut acc = FormAccumulator::new();
            wedge_into(&mut acc, &tp[n], &tp[n], &quarter);
            acc
        })
        .reduce(FormAccumulator::new, FormAccumulator::merge)
        .into_form(8)
}

pub fn conjecture_8form() -> AlternatingForm {
    conjecture_8form_with(TwoForms::standard(), Convention::Antisymmetric)
}

/// `Some(r)` when `f = r * g` with `g != 0`.
pub fn proportionality(f: &AlternatingForm, g: &AlternatingForm) -> Option<Rational> {
    let (m, c) = g.masks().next()?;
    let r = &f.coeff_mask(*m) / c;
    (*f == g.scale(&r)).then_some(r)
}

#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub convention: Convention,
    pub rhs: AlternatingForm,
    pub difference: AlternatingForm,
    pub equal: bool,
    /// `rhs = ratio * Omega8`, when the two are proportional.
    pub ratio: Option<Rational>,
    /// The right-hand side evaluated on `(u_0,0), .., (u_7,0)`.
    pub eval_first_block: Rational,
}

pub fn conjecture_report_with(convention: Convention) -> ConjectureReport {
    let rhs = conjecture_8form_with(TwoForms::standard(), convention);
    let omega = canonical_8form();
    let difference = &rhs - omega;
    let first_block: Vec<Vector16> = (0..8).map(Vector16::basis).collect();
    ConjectureReport {
        convention,
        equal: difference.is_zero(),
        ratio: proportionality(&rhs, omega),
        eval_first_block: exterior::eval(&rhs, &first_block).expect("degree 8"),
        difference,
        rhs,
    }
}

pub fn conjecture_report() -> ConjectureReport {
    conjecture_report_with(Convention::Antisymmetric)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    JsonLines,
    Csv,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" | "json-lines" | "jsonl" => Ok(ExportFormat::JsonLines),
            "csv" => Ok(ExportFormat::Csv),
            other => reject(format!("unsupported export format {other:?}")),
        }
    }
}

/// One line per nonzero coefficient, sorted lexicographically by index tuple.
pub fn export_coefficients(f: &AlternatingForm, format: ExportFormat) -> Vec<u8> {
    let mut out = String::new();
    for (idx, c) in f.sorted_terms() {
        let list: Vec<String> = idx.iter().map(usize::to_string).collect();
        match format {
            ExportFormat::JsonLines => out.push_str(&format!(
                "{{\"indices\":[{}],\"num\":\"{}\",\"den\":\"{}\"}}\n",
                list.join(","),
                c.numer(),
                c.denom()
            )),
            ExportFormat::Csv => out.push_str(&format!("{},{},{}\n", list.join(","), c.numer(), c.denom())),
        }
    }
    out.into_bytes()
}

fn flat_wedge(x: &Vector16, y: &Vector16) -> AlternatingForm {
    wedge(&AlternatingForm::one_form(x), &AlternatingForm::one_form(y)).expect("degree 2")
}

/// `(sum_{i<j} omega_ij(X,Y) omega_ij, sum_{i<j<k} sigma_ijk(X,Y) sigma_ijk)`.
fn expansion_parts(t: &TwoForms, x: &Vector16, y: &Vector16) -> (AlternatingForm, AlternatingForm) {
    let mut om = AlternatingForm::zero(2);
    for (i, j) in ordered_pairs() {
        let c = ev2(t.omega(i, j), x, y);
        if !c.is_zero() {
            om.add_assign(&t.omega(i, j).scale(&c));
        }
    }
    let mut si = AlternatingForm::zero(2);
    for (i, j, k) in ordered_triples() {
        let c = ev2(t.sigma(i, j, k), x, y);
        if !c.is_zero() {
            si.add_assign(&t.sigma(i, j, k).scale(&c));
        }
    }
    (om, si)
}

/// Checks `8 X^ ^ Y^ = sum omega_ij(X,Y) omega_ij + sum sigma_ijk(X,Y) sigma_ijk`
/// and `8 sum_l (I_l X)^ ^ (I_l Y)^ = 5 sum omega(X,Y) omega - 3 sum sigma(X,Y) sigma`.
pub fn friedrich_identities(x: &Vector16, y: &Vector16) -> VerificationReport {
    let family = standard_family();
    let t = TwoForms::standard();
    let (om, si) = expansion_parts(t, x, y);
    let mut report = VerificationReport::new();

    let lhs = flat_wedge(x, y).scale(&int(8));
    let rhs = &om + &si;
    let mut c = Check::new("friedrich.flat", lhs == rhs);
    if lhs != rhs {
        c = c.with("lhs", format!("{lhs:?}")).with("rhs", format!("{rhs:?}"));
    }
    report.push(c);

    let mut lhs = AlternatingForm::zero(2);
    for l in 0..9 {
        lhs.add_assign(&flat_wedge(&family.get(l).apply(x), &family.get(l).apply(y)));
    }
    let lhs = lhs.scale(&int(8));
    let rhs = &om.scale(&int(5)) - &si.scale(&int(3));
    let mut c = Check::new("friedrich.twisted", lhs == rhs);
    if lhs != rhs {
        c = c.with("lhs", format!("{lhs:?}")).with("rhs", format!("{rhs:?}"));
    }
    report.push(c);
    report
}

/// The 9x9 rotation in the `(k, l)` coordinate plane by the point `(c, s)`.
pub fn givens9(k: usize, l: usize, c: &Rational, s: &Rational) -> [[Rational; 9]; 9] {
    let mut m: [[Rational; 9]; 9] = std::array::from_fn(|i| std::array::from_fn(|j| if i == j { int(1) } else { int(0) }));
    m[k][k] = c.clone();
    m[l][l] = c.clone();
    m[k][l] = s.clone();
    m[l][k] = -s;
    m
}

pub fn mat9_mul(a: &[[Rational; 9]; 9], b: &[[Rational; 9]; 9]) -> [[Rational; 9]; 9] {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..9).map(|k| &a[i][k] * &b[k][j]).sum()))
}

/// Whether `m` is special orthogonal.
pub fn is_special_orthogonal9(m: &[[Rational; 9]; 9]) -> bool {
    let orthogonal = (0..9).all(|i| {
        (0..9).all(|j| {
            let d: Rational = (0..9).map(|k| &m[k][i] * &m[k][j]).sum();
            d == if i == j { int(1) } else { int(0) }
        })
    });
    let rows: Vec<Vec<Rational>> = m.iter().map(|r| r.to_vec()).collect();
    orthogonal && crate::linalg::det(&rows).is_one()
}

/// Masks of the support as ascending tuples (for reporting).
pub fn sample_monomials(f: &AlternatingForm, n: usize) -> Vec<(Vec<usize>, Rational)> {
    f.masks().take(n).map(|(m, c)| (mask_indices(*m), c.clone())).collect()
}
