//! Sparse exact alternating forms on R^16.
//!
//! A monomial `dx_{a1} ^ ... ^ dx_{ak}` with `a1 < ... < ak` is stored as the
//! bitmask with bits `a1..ak` set. Evaluation follows the determinant
//! convention: `dx_A(X_1, .., X_k) = det[X_j^{a_i}]`, so that for forms of
//! degree `p` and `q`
//!
//! ```text
//! (f ^ g)(X_1..X_{p+q}) = 1/(p! q!) sum_s sign(s) f(X_s(1..p)) g(X_s(p+1..p+q)).
//! ```

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use rayon::prelude::*;

use crate::error::{reject, Result};
use crate::linalg;
use crate::operators::{Operator16, Vector16, DIM};
use crate::rational::Rational;

pub type Mask = u16;

/// Ascending indices of a monomial mask.
pub fn mask_indices(mask: Mask) -> Vec<usize> {
    (0..DIM).filter(|&k| mask & (1 << k) != 0).collect()
}

pub fn indices_mask(indices: &[usize]) -> Mask {
    indices.iter().fold(0, |m, &k| m | (1 << k))
}

/// Sign of `dx_A ^ dx_B` relative to `dx_{A u B}` for disjoint `A`, `B`.
#[inline]
pub fn merge_sign(a: Mask, b: Mask) -> i32 {
    debug_assert_eq!(a & b, 0);
    let mut inversions = 0u32;
    let mut rest = b;
    while rest != 0 {
        let k = rest.trailing_zeros();
        rest &= rest - 1;
        // elements of A above k must jump over it
        let above = if k >= 15 { 0 } else { a & !((1u16 << (k + 1)) - 1) };
        inversions += above.count_ones();
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign for replacing index `from` by `to` inside `mask` (which contains
/// `from` but not `to`), re-sorting the result.
#[inline]
fn replace_sign(mask: Mask, from: usize, to: usize) -> i32 {
    let (lo, hi) = if from < to { (from, to) } else { (to, from) };
    let between = if hi - lo <= 1 { 0 } else { (((1u32 << hi) - (1u32 << (lo + 1))) as Mask) & mask };
    if between.count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A constant-coefficient alternating form of fixed degree on R^16.
#[derive(Clone, PartialEq, Eq)]
pub struct AlternatingForm {
    degree: usize,
    coeffs: BTreeMap<Mask, Rational>,
}

impl fmt::Debug for AlternatingForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlternatingForm(degree {}, {} terms)", self.degree, self.coeffs.len())?;
        for (m, c) in self.sorted_terms().into_iter().take(8) {
            write!(f, " {c}*dx{m:?}")?;
        }
        Ok(())
    }
}

impl AlternatingForm {
    pub fn zero(degree: usize) -> Self {
        assert!(degree <= DIM);
        AlternatingForm { degree, coeffs: BTreeMap::new() }
    }

    /// The constant 0-form `c`.
    pub fn constant(c: Rational) -> Self {
        let mut f = AlternatingForm::zero(0);
        f.add_term(0, c);
        f
    }

    /// `c * dx_{i1} ^ ... ^ dx_{ik}` for arbitrary distinct indices (re-sorted
    /// with the permutation sign); repeated indices give the zero form.
    pub fn monomial(indices: &[usize], c: Rational) -> Self {
        let mut f = AlternatingForm::zero(indices.len());
        let mut mask: Mask = 0;
        let mut sign = 1;
        for &i in indices {
            assert!(i < DIM);
            let bit = 1 << i;
            if mask & bit != 0 {
                return f;
            }
            sign *= merge_sign(mask, bit);
            mask |= bit;
        }
        f.add_term(mask, if sign > 0 { c } else { -c });
        f
    }

    pub fn basis(indices: &[usize]) -> Self {
        AlternatingForm::monomial(indices, Rational::one())
    }

    /// The 1-form `<v, .>`.
    pub fn one_form(v: &Vector16) -> Self {
        let mut f = AlternatingForm::zero(1);
        for k in 0..DIM {
            f.add_term(1 << k, v.coord(k).clone());
        }
        f
    }

    pub fn from_masks<I: IntoIterator<Item = (Mask, Rational)>>(degree: usize, terms: I) -> Self {
        let mut f = AlternatingForm::zero(degree);
        for (m, c) in terms {
            assert_eq!(m.count_ones() as usize, degree);
            f.add_term(m, c);
        }
        f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of stored nonzero coefficients.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff_mask(&self, mask: Mask) -> Rational {
        self.coeffs.get(&mask).cloned().unwrap_or_default()
    }

    /// Coefficient of `dx_{i1} ^ ... ^ dx_{ik}` for ascending indices.
    pub fn coeff(&self, indices: &[usize]) -> Rational {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        self.coeff_mask(indices_mask(indices))
    }

    pub fn masks(&self) -> impl Iterator<Item = (&Mask, &Rational)> {
        self.coeffs.iter()
    }

    /// Terms as ascending index tuples, sorted lexicographically by tuple.
    pub fn sorted_terms(&self) -> Vec<(Vec<usize>, Rational)> {
        let mut v: Vec<(Vec<usize>, Rational)> =
            self.coeffs.iter().map(|(m, c)| (mask_indices(*m), c.clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn add_term(&mut self, mask: Mask, c: Rational) {
        debug_assert_eq!(mask.count_ones() as usize, self.degree);
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(mask) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return AlternatingForm::zero(self.degree);
        }
        AlternatingForm { degree: self.degree, coeffs: self.coeffs.iter().map(|(m, c)| (*m, c * s)).collect() }
    }

    pub fn add_assign(&mut self, other: &AlternatingForm) {
        assert_eq!(self.degree, other.degree, "degree mismatch in form addition");
        for (m, c) in &other.coeffs {
            self.add_term(*m, c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &AlternatingForm) {
        assert_eq!(self.degree, other.degree, "degree mismatch in form subtraction");
        for (m, c) in &other.coeffs {
            self.add_term(*m, -c);
        }
    }

    /// Keeps only monomials supported inside the coordinate subset `support`.
    pub fn restrict(&self, support: Mask) -> Self {
        AlternatingForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().filter(|(m, _)| *m & !support == 0).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    /// Coefficients as a dense vector over the `C(16, degree)` monomials in
    /// increasing mask order.
    pub fn dense_coordinates(&self, monomials: &[Mask]) -> Vec<Rational> {
        monomials.iter().map(|m| self.coeff_mask(*m)).collect()
    }

    pub fn wedge(&self, other: &AlternatingForm) -> Result<AlternatingForm> {
        wedge(self, other)
    }

    pub fn eval(&self, args: &[Vector16]) -> Result<Rational> {
        eval(self, args)
    }
}

impl Add for &AlternatingForm {
    type Output = AlternatingForm;

    fn add(self, rhs: &AlternatingForm) -> AlternatingForm {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Sub for &AlternatingForm {
    type Output = AlternatingForm;

    fn sub(self, rhs: &AlternatingForm) -> AlternatingForm {
        let mut out = self.clone();
        out.sub_assign(rhs);
        out
    }
}

impl Neg for &AlternatingForm {
    type Output = AlternatingForm;

    fn neg(self) -> AlternatingForm {
        self.scale(&-Rational::one())
    }
}

impl Neg for AlternatingForm {
    type Output = AlternatingForm;

    fn neg(self) -> AlternatingForm {
        -&self
    }
}

/// Hash-map accumulator used by the heavy kernels; converted to a canonical
/// form at the end.
#[derive(Debug, Default, Clone)]
pub struct FormAccumulator {
    terms: HashMap<Mask, Rational>,
}

impl FormAccumulator {
    pub fn new() -> Self {
        FormAccumulator::default()
    }

    #[inline]
    pub fn add(&mut self, mask: Mask, c: Rational) {
        match self.terms.entry(mask) {
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
            }
        }
    }

    pub fn add_form(&mut self, f: &AlternatingForm, scale: &Rational) {
        for (m, c) in &f.coeffs {
            self.add(*m, c * scale);
        }
    }

    pub fn merge(mut self, other: FormAccumulator) -> FormAccumulator {
        let (mut big, small) = if self.terms.len() >= other.terms.len() { (self, other) } else { (other, self) };
        for (m, c) in small.terms {
            big.add(m, c);
        }
        self = big;
        self
    }

    pub fn into_form(self, degree: usize) -> AlternatingForm {
        AlternatingForm {
            degree,
            coeffs: self.terms.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

/// Accumulates `scale * f ^ g` into `acc`.
pub fn wedge_into(acc: &mut FormAccumulator, f: &AlternatingForm, g: &AlternatingForm, scale: &Rational) {
    for (ma, ca) in &f.coeffs {
        let cs = ca * scale;
        for (mb, cb) in &g.coeffs {
            if ma & mb != 0 {
                continue;
            }
            let p = &cs * cb;
            acc.add(ma | mb, if merge_sign(*ma, *mb) > 0 { p } else { -p });
        }
    }
}

const PARALLEL_WEDGE_THRESHOLD: usize = 1 << 14;

pub fn wedge(f: &AlternatingForm, g: &AlternatingForm) -> Result<AlternatingForm> {
    let degree = f.degree + g.degree;
    if degree > DIM {
        return reject(format!("wedge degree {} + {} exceeds {DIM}", f.degree, g.degree));
    }
    if f.len() * g.len() < PARALLEL_WEDGE_THRESHOLD {
        let mut acc = FormAccumulator::new();
        wedge_into(&mut acc, f, g, &Rational::one());
        return Ok(acc.into_form(degree));
    }
    let lhs: Vec<(&Mask, &Rational)> = f.coeffs.iter().collect();
    let acc = lhs
        .par_chunks(64)
        .map(|chunk| {
            let mut acc = FormAccumulator::new();
            for (ma, ca) in chunk {
                for (mb, cb) in &g.coeffs {
                    if *ma & mb != 0 {
                        continue;
                    }
                    let p = *ca * cb;
                    acc.add(*ma | mb, if merge_sign(**ma, *mb) > 0 { p } else { -p });
                }
            }
            acc
        })
        .reduce(FormAccumulator::new, FormAccumulator::merge);
    Ok(acc.into_form(degree))
}

/// Wedge of several forms, left to right.
pub fn wedge_all(forms: &[&AlternatingForm]) -> Result<AlternatingForm> {
    let mut acc = AlternatingForm::constant(Rational::one());
    for f in forms {
        acc = wedge(&acc, f)?;
    }
    Ok(acc)
}

pub fn eval(f: &AlternatingForm, args: &[Vector16]) -> Result<Rational> {
    if args.len() != f.degree {
        return reject(format!("form of degree {} evaluated on {} vectors", f.degree, args.len()));
    }
    if f.degree == 0 {
        return Ok(f.coeff_mask(0));
    }
    if f.degree == 2 {
        let (x, y) = (&args[0], &args[1]);
        let mut total = Rational::zero();
        for (m, c) in &f.coeffs {
            let a = m.trailing_zeros() as usize;
            let b = 15 - m.leading_zeros() as usize;
            let d = &(x.coord(a) * y.coord(b)) - &(x.coord(b) * y.coord(a));
            if !d.is_zero() {
                total += &(c * &d);
            }
        }
        return Ok(total);
    }
    let mut total = Rational::zero();
    for (m, c) in &f.coeffs {
        let idx = mask_indices(*m);
        let minor: Vec<Vec<Rational>> =
            idx.iter().map(|&a| args.iter().map(|x| x.coord(a).clone()).collect()).collect();
        let d = if f.degree == 1 { minor[0][0].clone() } else { linalg::det(&minor) };
        if !d.is_zero() {
            total += &(c * &d);
        }
    }
    Ok(total)
}

/// `(A^* f)(X_1, .., X_k) = f(A X_1, .., A X_k)`.
pub fn pullback(f: &AlternatingForm, a: &Operator16) -> AlternatingForm {
    // dx_i o A = sum_m A[i][m] dx_m
    let rows: Vec<Vec<(usize, Rational)>> = (0..DIM)
        .map(|i| (0..DIM).filter(|&m| !a.get(i, m).is_zero()).map(|m| (m, a.get(i, m).clone())).collect())
        .collect();
    let terms: Vec<(&Mask, &Rational)> = f.coeffs.iter().collect();
    let acc = terms
        .par_iter()
        .map(|(mask, c)| {
            let mut partial: HashMap<Mask, Rational> = HashMap::from([(0, (*c).clone())]);
            for i in mask_indices(**mask) {
                let mut next: HashMap<Mask, Rational> = HashMap::new();
                for (pm, pc) in &partial {
                    for (m, v) in &rows[i] {
                        let bit: Mask = 1 << m;
                        if pm & bit != 0 {
                            continue;
                        }
                        let p = pc * v;
                        let p = if merge_sign(*pm, bit) > 0 { p } else { -p };
                        *next.entry(pm | bit).or_default() += &p;
                    }
                }
                next.retain(|_, v| !v.is_zero());
                partial = next;
            }
            let mut acc = FormAccumulator::new();
            for (m, c) in partial {
                acc.add(m, c);
            }
            acc
        })
        .reduce(FormAccumulator::new, FormAccumulator::merge);
    acc.into_form(f.degree)
}

/// `(L_A f)(X_1, .., X_k) = sum_a f(X_1, .., A X_a, .., X_k)`.
pub fn lie_derivative(f: &AlternatingForm, a: &Operator16) -> AlternatingForm {
    let rows: Vec<Vec<(usize, Rational)>> = (0..DIM)
        .map(|i| (0..DIM).filter(|&m| !a.get(i, m).is_zero()).map(|m| (m, a.get(i, m).clone())).collect())
        .collect();
    let mut acc = FormAccumulator::new();
    for (mask, c) in &f.coeffs {
        lie_derivative_term(&mut acc, *mask, c, &rows);
    }
    acc.into_form(f.degree)
}

#[inline]
pub(crate) fn lie_derivative_term(acc: &mut FormAccumulator, mask: Mask, c: &Rational, rows: &[Vec<(usize, Rational)>]) {
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        for (m, v) in &rows[i] {
            if *m == i {
                acc.add(mask, c * v);
                continue;
            }
            let bit: Mask = 1 << m;
            if mask & bit != 0 {
                continue;
            }
            let target = (mask & !(1 << i)) | bit;
            let p = c * v;
            acc.add(target, if replace_sign(mask, i, *m) > 0 { p } else { -p });
        }
    }
}

/// The 2-form `(X, Y) -> <X, S Y>` of a skew-symmetric operator.
pub fn two_form_from_operator(s: &Operator16) -> Result<AlternatingForm> {
    if !s.is_skew() {
        return reject("operator is not skew-symmetric");
    }
    let mut f = AlternatingForm::zero(2);
    for a in 0..DIM {
        for b in a + 1..DIM {
            f.add_term((1 << a) | (1 << b), s.get(a, b).clone());
        }
    }
    Ok(f)
}

/// All monomial masks of the given degree in increasing numeric order.
pub fn monomials(degree: usize) -> Vec<Mask> {
    (0..=u16::MAX).filter(|m| m.count_ones() as usize == degree).collect()
}
