//! The nine symmetric involutions of R^16 = O^2, their Clifford products and
//! rational one-parameter group elements.
//!
//! Coordinates are 0-based: `e_k = (u_k, 0)` for `k < 8` and
//! `e_k = (0, u_{k-8})` for `8 <= k < 16`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use crate::error::{reject, Result};
use crate::linalg;
use crate::octonion::Octonion;
use crate::rational::{int, Rational};

pub const DIM: usize = 16;

/// A point of `R^16` written as a pair of octonions.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Vector16 {
    pub x1: Octonion,
    pub x2: Octonion,
}

impl fmt::Debug for Vector16 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.x1, self.x2)
    }
}

impl Vector16 {
    pub fn new(x1: Octonion, x2: Octonion) -> Self {
        Vector16 { x1, x2 }
    }

    pub fn zero() -> Self {
        Vector16::default()
    }

    /// The basis vector `e_k`.
    pub fn basis(k: usize) -> Self {
        assert!(k < DIM);
        if k < 8 {
            Vector16::new(Octonion::unit(k), Octonion::zero())
        } else {
            Vector16::new(Octonion::zero(), Octonion::unit(k - 8))
        }
    }

    pub fn from_coords(c: &[Rational]) -> Self {
        assert_eq!(c.len(), DIM);
        Vector16 {
            x1: Octonion { coeffs: std::array::from_fn(|k| c[k].clone()) },
            x2: Octonion { coeffs: std::array::from_fn(|k| c[k + 8].clone()) },
        }
    }

    pub fn from_ints(c: [i64; 16]) -> Self {
        Vector16::from_coords(&c.map(int))
    }

    pub fn coord(&self, k: usize) -> &Rational {
        if k < 8 {
            &self.x1.coeffs[k]
        } else {
            &self.x2.coeffs[k - 8]
        }
    }

    pub fn coords(&self) -> Vec<Rational> {
        self.x1.coeffs.iter().chain(self.x2.coeffs.iter()).cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.x1.is_zero() && self.x2.is_zero()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Vector16::new(self.x1.scale(s), self.x2.scale(s))
    }

    pub fn inner(&self, other: &Vector16) -> Rational {
        &self.x1.inner(&other.x1) + &self.x2.inner(&other.x2)
    }

    pub fn norm2(&self) -> Rational {
        self.inner(self)
    }
}

impl Add for &Vector16 {
    type Output = Vector16;

    fn add(self, rhs: &Vector16) -> Vector16 {
        Vector16::new(&self.x1 + &rhs.x1, &self.x2 + &rhs.x2)
    }
}

impl Sub for &Vector16 {
    type Output = Vector16;

    fn sub(self, rhs: &Vector16) -> Vector16 {
        Vector16::new(&self.x1 - &rhs.x1, &self.x2 - &rhs.x2)
    }
}

impl Neg for &Vector16 {
    type Output = Vector16;

    fn neg(self) -> Vector16 {
        Vector16::new(-&self.x1, -&self.x2)
    }
}

/// `<(x1, x2), (y1, y2)> = <x1, y1> + <x2, y2>`.
pub fn inner16(x: &Vector16, y: &Vector16) -> Rational {
    x.inner(y)
}

/// A dense 16x16 rational matrix acting on column coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Operator16 {
    entries: Vec<Rational>,
}

impl fmt::Debug for Operator16 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Operator16 [")?;
        for r in 0..DIM {
            let row: Vec<String> = (0..DIM).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Operator16 {
    pub fn zero() -> Self {
        Operator16 { entries: vec![Rational::zero(); DIM * DIM] }
    }

    pub fn identity() -> Self {
        Operator16::scalar(Rational::one())
    }

    pub fn scalar(s: Rational) -> Self {
        let mut m = Operator16::zero();
        for k in 0..DIM {
            m.set(k, k, s.clone());
        }
        m
    }

    /// The elementary matrix with a single 1 at `(row, col)`.
    pub fn elementary(row: usize, col: usize) -> Self {
        let mut m = Operator16::zero();
        m.set(row, col, Rational::one());
        m
    }

    /// Builds the matrix whose `k`-th column is `f(e_k)`.
    pub fn from_action<F: Fn(&Vector16) -> Vector16>(f: F) -> Self {
        let mut m = Operator16::zero();
        for col in 0..DIM {
            let image = f(&Vector16::basis(col));
            for row in 0..DIM {
                m.set(row, col, image.coord(row).clone());
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Rational>]) -> Self {
        assert_eq!(rows.len(), DIM);
        Operator16 { entries: rows.iter().flat_map(|r| r.iter().cloned()).collect() }
    }

    pub fn from_flat(entries: Vec<Rational>) -> Self {
        assert_eq!(entries.len(), DIM * DIM);
        Operator16 { entries }
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * DIM + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: Rational) {
        self.entries[row * DIM + col] = v;
    }

    pub fn flat(&self) -> &[Rational] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(DIM).map(<[Rational]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn compose(&self, other: &Operator16) -> Operator16 {
        let mut out = Operator16::zero();
        for r in 0..DIM {
            for k in 0..DIM {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..DIM {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * DIM + c] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Operator16 {
        let mut out = Operator16::zero();
        for r in 0..DIM {
            for c in 0..DIM {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn trace(&self) -> Rational {
        (0..DIM).map(|k| self.get(k, k).clone()).sum()
    }

    pub fn commutator(&self, other: &Operator16) -> Operator16 {
        &self.compose(other) - &other.compose(self)
    }

    pub fn scale(&self, s: &Rational) -> Operator16 {
        Operator16 { entries: self.entries.iter().map(|x| x * s).collect() }
    }

    pub fn apply(&self, v: &Vector16) -> Vector16 {
        let x = v.coords();
        let out: Vec<Rational> = (0..DIM)
            .map(|r| {
                (0..DIM)
                    .filter(|&c| !self.get(r, c).is_zero() && !x[c].is_zero())
                    .map(|c| self.get(r, c) * &x[c])
                    .sum()
            })
            .collect();
        Vector16::from_coords(&out)
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_skew(&self) -> bool {
        *self == -&self.transpose()
    }

    pub fn det(&self) -> Rational {
        linalg::det(&self.rows())
    }

    /// Trace pairing `tr(A^T B)`.
    pub fn trace_pairing(&self, other: &Operator16) -> Rational {
        self.entries.iter().zip(&other.entries).map(|(a, b)| a * b).sum()
    }
}

impl Add for &Operator16 {
    type Output = Operator16;

    fn add(self, rhs: &Operator16) -> Operator16 {
        Operator16 { entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Operator16 {
    type Output = Operator16;

    fn sub(self, rhs: &Operator16) -> Operator16 {
        Operator16 { entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Operator16 {
    type Output = Operator16;

    fn neg(self) -> Operator16 {
        Operator16 { entries: self.entries.iter().map(|a| -a).collect() }
    }
}

impl Mul for &Operator16 {
    type Output = Operator16;

    fn mul(self, rhs: &Operator16) -> Operator16 {
        self.compose(rhs)
    }
}

/// Nine pairwise anticommuting symmetric involutions `I_0 .. I_8`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionFamily {
    ops: Vec<Operator16>,
}

impl InvolutionFamily {
    pub fn from_ops(ops: Vec<Operator16>) -> Self {
        assert_eq!(ops.len(), 9);
        InvolutionFamily { ops }
    }

    pub fn get(&self, i: usize) -> &Operator16 {
        &self.ops[i]
    }

    pub fn ops(&self) -> &[Operator16] {
        &self.ops
    }

    /// Checks every relation `I_i I_j + I_j I_i = 0 (i != j)`, `I_i^2 = Id`,
    /// `I_i^T = I_i`, `tr I_i = 0`.
    pub fn satisfies_relations(&self) -> bool {
        let id = Operator16::identity();
        for (i, a) in self.ops.iter().enumerate() {
            if a.compose(a) != id || !a.is_symmetric() || !a.trace().is_zero() {
                return false;
            }
            for b in &self.ops[i + 1..] {
                if !(&a.compose(b) + &b.compose(a)).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// A new family `I'_i = sum_j m[i][j] I_j`.
    pub fn rotated(&self, m: &[[Rational; 9]; 9]) -> InvolutionFamily {
        let ops = (0..9)
            .map(|i| {
                (0..9).fold(Operator16::zero(), |acc, j| {
                    if m[i][j].is_zero() {
                        acc
                    } else {
                        &acc + &self.ops[j].scale(&m[i][j])
                    }
                })
            })
            .collect();
        InvolutionFamily { ops }
    }

    pub fn product(&self, indices: &[usize]) -> Result<Operator16> {
        clifford_product(self, indices)
    }

    /// `I_i I_j` for `i < j`, cached.
    pub fn pair(&self, i: usize, j: usize) -> Operator16 {
        self.ops[i].compose(&self.ops[j])
    }
}

/// `I_i(x1, x2) = (u_i conj(x2), conj(x1) u_i)` for `i < 8` and
/// `I_8(x1, x2) = (-x1, x2)`.
pub fn build_involutions() -> InvolutionFamily {
    let mut ops: Vec<Operator16> = (0..8)
        .map(|i| {
            let ui = Octonion::unit(i);
            Operator16::from_action(|v| Vector16::new(ui.mul(&v.x2.conj()), v.x1.conj().mul(&ui)))
        })
        .collect();
    ops.push(Operator16::from_action(|v| Vector16::new(-&v.x1, v.x2.clone())));
    InvolutionFamily { ops }
}

/// The standard family, built once.
pub fn standard_family() -> &'static InvolutionFamily {
    static FAMILY: OnceLock<InvolutionFamily> = OnceLock::new();
    FAMILY.get_or_init(build_involutions)
}

/// `I_{i1} ... I_{ir}` for strictly increasing indices of length 1 to 4.
pub fn clifford_product(family: &InvolutionFamily, indices: &[usize]) -> Result<Operator16> {
    if indices.is_empty() || indices.len() > 4 {
        return reject(format!("expected 1 to 4 indices, got {}", indices.len()));
    }
    if indices.iter().any(|&i| i > 8) {
        return reject(format!("index out of range 0..=8 in {indices:?}"));
    }
    if indices.windows(2).any(|w| w[0] >= w[1]) {
        return reject(format!("indices {indices:?} are not strictly increasing"));
    }
    let mut acc = family.get(indices[0]).clone();
    for &i in &indices[1..] {
        acc = acc.compose(family.get(i));
    }
    Ok(acc)
}

/// The `C(9, r)` products spanning the submodule of degree `r`.
pub fn lambda_basis(family: &InvolutionFamily, r: usize) -> Result<Vec<Operator16>> {
    if !(1..=4).contains(&r) {
        return reject(format!("lambda degree {r} outside 1..=4"));
    }
    crate::perm::combinations(9, r).iter().map(|idx| clifford_product(family, idx)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    /// `c^2 + s^2 = 1`
    Rotation,
    /// `c^2 - s^2 = 1`, `c >= 1`
    Boost,
}

/// A rational point `(c, s)` on the unit circle or the unit hyperbola.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalCirclePoint {
    pub c: Rational,
    pub s: Rational,
    flavor: Flavor,
}

impl RationalCirclePoint {
    pub fn rotation(c: Rational, s: Rational) -> Result<Self> {
        if &(&c * &c) + &(&s * &s) != Rational::one() {
            return reject(format!("({c}, {s}) is not on the unit circle"));
        }
        Ok(RationalCirclePoint { c, s, flavor: Flavor::Rotation })
    }

    pub fn boost(c: Rational, s: Rational) -> Result<Self> {
        if &(&c * &c) - &(&s * &s) != Rational::one() || c < Rational::one() {
            return reject(format!("({c}, {s}) is not on the unit hyperbola branch c >= 1"));
        }
        Ok(RationalCirclePoint { c, s, flavor: Flavor::Boost })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// `(cos 2t, sin 2t)` for a rotation point, `(cosh 2t, sinh 2t)` for a boost.
    pub fn doubled(&self) -> (Rational, Rational) {
        let cc = &self.c * &self.c;
        let ss = &self.s * &self.s;
        let two_cs = &(&self.c * &self.s) * &int(2);
        match self.flavor {
            Flavor::Rotation => (&cc - &ss, two_cs),
            Flavor::Boost => (&cc + &ss, two_cs),
        }
    }
}

/// `c Id + s I_k I_l`.
pub fn rotation(family: &InvolutionFamily, k: usize, l: usize, p: &RationalCirclePoint) -> Result<Operator16> {
    if !(k < l && l <= 8) {
        return reject(format!("rotation plane ({k}, {l}) must satisfy 0 <= k < l <= 8"));
    }
    if p.flavor != Flavor::Rotation {
        return reject("rotation requires a point on the unit circle");
    }
    let gen = family.pair(k, l);
    Ok(&Operator16::scalar(p.c.clone()) + &gen.scale(&p.s))
}

/// `c Id + s I_8`.
pub fn boost8(family: &InvolutionFamily, p: &RationalCirclePoint) -> Result<Operator16> {
    if p.flavor != Flavor::Boost {
        return reject("boost requires a point on the unit hyperbola");
    }
    Ok(&Operator16::scalar(p.c.clone()) + &family.get(8).scale(&p.s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{in_span, rank};
    use crate::rational::frac;

    fn fam() -> &'static InvolutionFamily {
        standard_family()
    }

    fn e(k: usize) -> Vector16 {
        Vector16::basis(k)
    }

    #[test]
    fn involution_relations() {
        assert!(fam().satisfies_relations());
        for i in 0..9 {
            assert!(fam().get(i).trace().is_zero());
        }
    }

    #[test]
    fn named_actions() {
        let i8 = fam().get(8);
        assert_eq!(i8.apply(&e(0)), -&e(0));
        assert_eq!(i8.apply(&e(8)), e(8));
        assert_eq!(fam().get(0).apply(&e(0)), e(8));
    }

    #[test]
    fn involutions_are_isometries_on_basis() {
        for i in 0..9 {
            let op = fam().get(i);
            for a in 0..16 {
                for b in 0..16 {
                    assert_eq!(inner16(&op.apply(&e(a)), &op.apply(&e(b))), inner16(&e(a), &e(b)));
                }
            }
        }
        assert!(inner16(&Vector16::new(Octonion::unit(1), Octonion::zero()), &Vector16::new(Octonion::zero(), Octonion::unit(1))).is_zero());
    }

    #[test]
    fn clifford_products() {
        for i in 0..9 {
            assert_eq!(&clifford_product(fam(), &[i]).unwrap(), fam().get(i));
        }
        let p = clifford_product(fam(), &[0, 1]).unwrap();
        assert_eq!(p.compose(&p), Operator16::scalar(int(-1)));
        assert!(clifford_product(fam(), &[1, 0]).is_err());
        assert!(clifford_product(fam(), &[9]).is_err());
        assert!(clifford_product(fam(), &[0, 1, 2, 3, 4]).is_err());
        for idx in crate::perm::combinations(9, 4) {
            let four = clifford_product(fam(), &idx).unwrap();
            let three = clifford_product(fam(), &idx[1..]).unwrap();
            assert_eq!(four.scale(&int(2)), fam().get(idx[0]).commutator(&three));
        }
    }

    #[test]
    fn lambda_bases_decompose_the_matrix_space() {
        let mut sym = vec![Operator16::identity()];
        let mut skew = Vec::new();
        for r in 1..=4 {
            let basis = lambda_basis(fam(), r).unwrap();
            assert_eq!(basis.len(), crate::perm::binomial(9, r));
            for op in &basis {
                assert!(op.trace().is_zero());
                if r == 1 || r == 4 {
                    assert!(op.is_symmetric());
                } else {
                    assert!(op.is_skew());
                }
            }
            if r == 1 || r == 4 {
                sym.extend(basis);
            } else {
                skew.extend(basis);
            }
        }
        assert!(lambda_basis(fam(), 0).is_err());
        assert!(lambda_basis(fam(), 5).is_err());
        let flat = |v: &[Operator16]| -> Vec<Vec<Rational>> { v.iter().map(|o| o.flat().to_vec()).collect() };
        assert_eq!(rank(&flat(&sym)), 136);
        assert_eq!(skew.len(), 120);
        assert_eq!(rank(&flat(&skew)), 120);
        // The Gram matrix under the trace pairing is diagonal with entries 16.
        for (a, x) in sym.iter().enumerate() {
            for (b, y) in sym.iter().enumerate() {
                assert_eq!(x.trace_pairing(y), if a == b { int(16) } else { int(0) });
            }
        }
    }

    #[test]
    fn bracket_table() {
        for i in 0..9 {
            for j in i + 1..9 {
                let iij = fam().pair(i, j);
                for k in 0..9 {
                    let br = iij.commutator(fam().get(k));
                    let expected = if k == i {
                        fam().get(j).scale(&int(-2))
                    } else if k == j {
                        fam().get(i).scale(&int(2))
                    } else {
                        Operator16::zero()
                    };
                    assert_eq!(br, expected, "[I{i}I{j}, I{k}]");
                }
            }
        }
    }

    #[test]
    fn spin9_is_closed_and_has_dimension_36() {
        let l2 = lambda_basis(fam(), 2).unwrap();
        let flat: Vec<Vec<Rational>> = l2.iter().map(|o| o.flat().to_vec()).collect();
        assert_eq!(rank(&flat), 36);
        for a in &l2 {
            for b in &l2 {
                assert!(in_span(&flat, a.commutator(b).flat()));
            }
        }
    }

    #[test]
    fn sandwich_sum_is_five_times() {
        for k in 0..9 {
            for l in 0..9 {
                if k == l {
                    continue;
                }
                let kl = fam().get(k).compose(fam().get(l));
                let sum = (0..9).fold(Operator16::zero(), |acc, j| {
                    &acc + &fam().get(j).compose(&kl).compose(fam().get(j))
                });
                assert_eq!(sum, kl.scale(&int(5)));
            }
        }
    }

    #[test]
    fn lambda3_brackets_leave_spin9() {
        let l2 = lambda_basis(fam(), 2).unwrap();
        let flat: Vec<Vec<Rational>> = l2.iter().map(|o| o.flat().to_vec()).collect();
        let a = clifford_product(fam(), &[0, 1, 2]).unwrap();
        let b = clifford_product(fam(), &[0, 1, 3]).unwrap();
        let c = clifford_product(fam(), &[3, 4, 5]).unwrap();
        // [I012, I013] = -2 I_2 I_3 stays inside; a disjoint pair does not.
        assert!(in_span(&flat, a.commutator(&b).flat()));
        let br = a.commutator(&c);
        assert!(!br.is_zero());
        assert!(!in_span(&flat, br.flat()));
    }

    #[test]
    fn rotations_and_boosts() {
        let p0 = RationalCirclePoint::rotation(int(1), int(0)).unwrap();
        assert_eq!(rotation(fam(), 2, 5, &p0).unwrap(), Operator16::identity());
        let p = RationalCirclePoint::rotation(frac(3, 5), frac(4, 5)).unwrap();
        let r = rotation(fam(), 0, 1, &p).unwrap();
        assert_eq!(r.transpose().compose(&r), Operator16::identity());
        assert_eq!(r.det(), int(1));
        let q = RationalCirclePoint::rotation(int(0), int(1)).unwrap();
        let quarter = rotation(fam(), 3, 7, &q).unwrap();
        assert_eq!(quarter, fam().pair(3, 7));
        assert_eq!(quarter.compose(&quarter), Operator16::scalar(int(-1)));
        assert!(rotation(fam(), 1, 1, &p).is_err());

        let b0 = RationalCirclePoint::boost(int(1), int(0)).unwrap();
        assert_eq!(boost8(fam(), &b0).unwrap(), Operator16::identity());
        let bp = RationalCirclePoint::boost(frac(5, 4), frac(3, 4)).unwrap();
        let bm = RationalCirclePoint::boost(frac(5, 4), frac(-3, 4)).unwrap();
        let b = boost8(fam(), &bp).unwrap();
        assert_eq!(b.compose(&boost8(fam(), &bm).unwrap()), Operator16::identity());
        assert_eq!(b.det(), int(1));
        assert!(b.is_symmetric());
        assert_ne!(b.transpose().compose(&b), Operator16::identity());

        assert!(rotation(fam(), 0, 1, &bp).is_err());
        assert!(boost8(fam(), &p).is_err());
        assert!(RationalCirclePoint::rotation(int(1), int(1)).is_err());
        assert!(RationalCirclePoint::boost(frac(-5, 4), frac(3, 4)).is_err());
    }
}
