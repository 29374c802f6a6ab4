//! The 8-form built from the "cross product" on O^2, and the exact computation
//! showing it is not Spin(9)-invariant.
//!
//! `U x V = conj(u1) x conj(v1) + u2 x v2` with `u x v = Im(conj(v) u)`. The
//! 8-form is `2^-7 sum_{S8} sign Re[(a b)(c d)]` where `a, b, c, d` are the
//! cross products of consecutive argument pairs; grouping the symmetric terms
//! leaves `sum_{S*8} sign Re(a b) Re(c d)` over 315 representatives.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::exterior::{self, indices_mask, AlternatingForm};
use crate::octonion::{cross_oct, Octonion};
use crate::operators::{standard_family, Operator16, Vector16, DIM};
use crate::perm::{combinations, for_each_permutation};
use crate::rational::Rational;
use crate::report::{Check, VerificationReport};

pub fn bpt_cross(u: &Vector16, v: &Vector16) -> Octonion {
    &cross_oct(&u.x1.conj(), &v.x1.conj()) + &cross_oct(&u.x2, &v.x2)
}

/// `Re(p q)`.
fn re_mul(p: &Octonion, q: &Octonion) -> Rational {
    p.inner(&q.conj())
}

type Perm8 = ([usize; 8], i8);

fn all_s8() -> &'static [Perm8] {
    static S8: OnceLock<Vec<Perm8>> = OnceLock::new();
    S8.get_or_init(|| {
        let mut out = Vec::with_capacity(40320);
        for_each_permutation(8, |p, s| out.push((std::array::from_fn(|k| p[k]), s)));
        out
    })
}

/// The representatives: each pair increasing, the first pair of each half
/// ordered before the second, and the first half before the second.
pub fn reduced_permutations() -> &'static [Perm8] {
    static REDUCED: OnceLock<Vec<Perm8>> = OnceLock::new();
    REDUCED.get_or_init(|| {
        let out: Vec<Perm8> = all_s8()
            .iter()
            .filter(|(p, _)| {
                p[0] < p[1] && p[2] < p[3] && p[4] < p[5] && p[6] < p[7] && p[0] < p[2] && p[4] < p[6] && p[0] < p[4]
            })
            .copied()
            .collect();
        assert_eq!(out.len(), 315, "8!/2^7 representatives");
        assert!(out.iter().all(|(p, _)| p[0] == 0));
        out
    })
}

fn cross_table(us: &[Vector16]) -> Vec<Vec<Octonion>> {
    us.iter().map(|u| us.iter().map(|v| bpt_cross(u, v)).collect()).collect()
}

/// `2^-7 sum_{S8} sign Re[(a b)(c d)]`.
pub fn bpt_8form_full(us: &[Vector16; 8]) -> Rational {
    let a = cross_table(us);
    // products of two cross products for every ordered 4-tuple of arguments
    let mut prod: Vec<Option<Octonion>> = vec![None; 4096];
    for (k, l, m, n) in (0..4096).map(|x| (x / 512, (x / 64) % 8, (x / 8) % 8, x % 8)) {
        if k != l && m != n && k != m && k != n && l != m && l != n {
            prod[k * 512 + l * 64 + m * 8 + n] = Some(a[k][l].mul(&a[m][n]));
        }
    }
    let idx = |p: &[usize]| p[0] * 512 + p[1] * 64 + p[2] * 8 + p[3];
    let mut total = Rational::zero();
    for (p, s) in all_s8() {
        let (Some(x), Some(y)) = (&prod[idx(&p[..4])], &prod[idx(&p[4..])]) else { unreachable!() };
        let v = re_mul(x, y);
        if v.is_zero() {
            continue;
        }
        if *s > 0 {
            total += &v;
        } else {
            total -= &v;
        }
    }
    total / Rational::from(128)
}

/// The full-sum octonion `2^-7 sum_{S8} sign (a b)(c d)`, imaginary part included.
pub fn bpt_8form_full_octonion(us: &[Vector16; 8]) -> Octonion {
    let a = cross_table(us);
    let mut total = Octonion::zero();
    for (p, s) in all_s8() {
        let x = a[p[0]][p[1]].mul(&a[p[2]][p[3]]);
        let y = a[p[4]][p[5]].mul(&a[p[6]][p[7]]);
        let v = x.mul(&y);
        total = if *s > 0 { &total + &v } else { &total - &v };
    }
    total.scale(&Rational::new(1, 128))
}

/// `sum_{S*8} sign Re(a b) Re(c d)`.
pub fn bpt_8form_reduced(us: &[Vector16; 8]) -> Rational {
    let a = cross_table(us);
    let mut total = Rational::zero();
    for (p, s) in reduced_permutations() {
        let x = re_mul(&a[p[0]][p[1]], &a[p[2]][p[3]]);
        if x.is_zero() {
            continue;
        }
        let v = x * re_mul(&a[p[4]][p[5]], &a[p[6]][p[7]]);
        if *s > 0 {
            total += &v;
        } else {
            total -= &v;
        }
    }
    total
}

/// `Re[(e_a x e_b)(e_c x e_d)]` for all basis vectors, as integers.
fn basis_re_table() -> &'static [i64] {
    static TABLE: OnceLock<Vec<i64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let e: Vec<Vector16> = (0..DIM).map(Vector16::basis).collect();
        let cross: Vec<Octonion> = (0..DIM * DIM).map(|n| bpt_cross(&e[n / DIM], &e[n % DIM])).collect();
        (0..DIM * DIM * DIM * DIM)
            .into_par_iter()
            .map(|n| {
                let (ab, cd) = (n / (DIM * DIM), n % (DIM * DIM));
                re_mul(&cross[ab], &cross[cd]).to_i64().expect("unit products are integral")
            })
            .collect()
    })
}

fn eval_on_basis(tuple: &[usize]) -> i64 {
    let table = basis_re_table();
    let pair = |a: usize, b: usize, c: usize, d: usize| table[((tuple[a] * DIM + tuple[b]) * DIM + tuple[c]) * DIM + tuple[d]];
    let mut total = 0i64;
    for (p, s) in reduced_permutations() {
        let x = pair(p[0], p[1], p[2], p[3]);
        if x == 0 {
            continue;
        }
        total += i64::from(*s) * x * pair(p[4], p[5], p[6], p[7]);
    }
    total
}

/// The 8-form as coefficients on all `C(16, 8)` basis tuples, built once.
pub fn bpt_8form() -> &'static AlternatingForm {
    static FORM: OnceLock<AlternatingForm> = OnceLock::new();
    FORM.get_or_init(materialize_8form)
}

pub fn materialize_8form() -> AlternatingForm {
    let tuples = combinations(DIM, 8);
    let coeffs: Vec<(u16, Rational)> = tuples
        .par_iter()
        .map(|t| (indices_mask(t), Rational::from(eval_on_basis(t))))
        .collect();
    AlternatingForm::from_masks(8, coeffs)
}

/// `sum_{S4} sign Re[(a b)]` with `a, b` the cross products of the two pairs.
pub fn bpt_4form(us: &[Vector16; 4]) -> Rational {
    let a = cross_table(us);
    let mut total = Rational::zero();
    for_each_permutation(4, |p, s| {
        let v = re_mul(&a[p[0]][p[1]], &a[p[2]][p[3]]);
        if s > 0 {
            total += &v;
        } else {
            total -= &v;
        }
    });
    total
}

pub fn materialize_4form() -> AlternatingForm {
    let e: Vec<Vector16> = (0..DIM).map(Vector16::basis).collect();
    let coeffs: Vec<(u16, Rational)> = combinations(DIM, 4)
        .par_iter()
        .map(|t| (indices_mask(t), bpt_4form(&[e[t[0]].clone(), e[t[1]].clone(), e[t[2]].clone(), e[t[3]].clone()])))
        .collect();
    AlternatingForm::from_masks(4, coeffs)
}

/// The operator `I_7 I_8`.
pub fn i78() -> Operator16 {
    standard_family().pair(7, 8)
}

/// `U_1 = (0, u_0)` and `U_2 .. U_8 = (u_0, 0) .. (u_6, 0)`.
pub fn defect_vectors() -> [Vector16; 8] {
    std::array::from_fn(|k| if k == 0 { Vector16::basis(8) } else { Vector16::basis(k - 1) })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BptTermTable {
    pub defect_terms: [Rational; 8],
}

impl BptTermTable {
    pub fn total(&self) -> Rational {
        self.defect_terms.iter().sum()
    }
}

/// `T_k = omega(U_1, .., I_78 U_k, .., U_8)` for the defect vectors.
pub fn bpt_invariance_defect() -> BptTermTable {
    let us = defect_vectors();
    let a = i78();
    let defect_terms = std::array::from_fn(|k| {
        let mut args = us.clone();
        args[k] = a.apply(&args[k]);
        bpt_8form_reduced(&args)
    });
    BptTermTable { defect_terms }
}

/// Compares the 8-form with the wedge square of the 4-form and records the
/// constant relating them, plus the non-invariance of the 4-form.
pub fn bpt_square_check() -> VerificationReport {
    let mut report = VerificationReport::new();
    let omega = bpt_8form();
    let four = materialize_4form();
    let square = exterior::wedge(&four, &four).expect("degree 8");
    let ratio = crate::canonical::proportionality(omega, &square);
    let mut c = Check::new("bpt.square", ratio.is_some()).with("omega4_terms", four.len());
    c = match &ratio {
        Some(r) => c.with("square_over_omega", r.recip()),
        None => c.with("square_over_omega", "none"),
    };
    report.push(c);
    let d = exterior::lie_derivative(&four, &i78());
    report.push(Check::new("bpt.four_form_not_invariant", !d.is_zero()).with("lie_terms", d.len()));
    report
}
