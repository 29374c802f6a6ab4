//! Exact octonion arithmetic over the basis `u0 = 1, u1 = i, u2 = j, u3 = ij,
//! u4 = e, u5 = ie, u6 = je, u7 = (ij)e`.
//!
//! An octonion is written `q1 + q2 e` with quaternions `q1, q2`, and products
//! follow
//!
//! ```text
//! q1 (q2 e) = (q2 q1) e,   (q1 e) q2 = (q1 conj(q2)) e,   (q1 e)(q2 e) = -conj(q2) q1.
//! ```
//!
//! The basis multiplication table is derived from these rules once and every
//! product afterwards is its bilinear extension.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use crate::error::{reject, Result};
use crate::perm::parity_of;
use crate::rational::{frac, int, Rational};

/// A basis element up to sign: `sign * u_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedUnit {
    pub sign: i8,
    pub index: usize,
}

impl SignedUnit {
    pub const fn new(sign: i8, index: usize) -> Self {
        SignedUnit { sign, index }
    }

    pub const fn pos(index: usize) -> Self {
        SignedUnit { sign: 1, index }
    }

    pub const fn neg(index: usize) -> Self {
        SignedUnit { sign: -1, index }
    }

    pub fn negate(self) -> Self {
        SignedUnit { sign: -self.sign, index: self.index }
    }

    /// Product of two signed units, which is again a signed unit.
    pub fn mul(self, other: SignedUnit) -> SignedUnit {
        let e = mul_table().get(self.index, other.index);
        SignedUnit { sign: self.sign * other.sign * e.sign, index: e.index }
    }

    pub fn conj(self) -> Self {
        if self.index == 0 {
            self
        } else {
            self.negate()
        }
    }

    pub fn to_octonion(self) -> Octonion {
        Octonion::unit(self.index).scale(&int(self.sign as i64))
    }
}

impl fmt::Display for SignedUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign < 0 { "-" } else { "" };
        write!(f, "{s}u{}", self.index)
    }
}

/// The 8x8 table `u_i * u_j = sign * u_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MulTable {
    table: [[SignedUnit; 8]; 8],
}

type Quaternion = [i64; 4];

fn quat_mul(a: &Quaternion, b: &Quaternion) -> Quaternion {
    // Hamilton product on (1, i, j, k) with k = ij.
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

fn quat_conj(a: &Quaternion) -> Quaternion {
    [a[0], -a[1], -a[2], -a[3]]
}

fn quat_add(a: &Quaternion, b: &Quaternion) -> Quaternion {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

fn quat_sub(a: &Quaternion, b: &Quaternion) -> Quaternion {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

impl MulTable {
    fn derive() -> Self {
        let basis = |k: usize| -> (Quaternion, Quaternion) {
            let mut q = [0i64; 4];
            q[k % 4] = 1;
            if k < 4 {
                (q, [0; 4])
            } else {
                ([0; 4], q)
            }
        };
        let mut table = [[SignedUnit::pos(0); 8]; 8];
        for (a, row) in table.iter_mut().enumerate() {
            for (b, slot) in row.iter_mut().enumerate() {
                let (p1, p2) = basis(a);
                let (q1, q2) = basis(b);
                // (p1 + p2 e)(q1 + q2 e) = (p1 q1 - conj(q2) p2) + (q2 p1 + p2 conj(q1)) e
                let lo = quat_sub(&quat_mul(&p1, &q1), &quat_mul(&quat_conj(&q2), &p2));
                let hi = quat_add(&quat_mul(&q2, &p1), &quat_mul(&p2, &quat_conj(&q1)));
                let coeffs: Vec<i64> = lo.iter().chain(hi.iter()).copied().collect();
                let nz: Vec<usize> = (0..8).filter(|&k| coeffs[k] != 0).collect();
                assert_eq!(nz.len(), 1, "basis product must be a signed unit");
                *slot = SignedUnit::new(coeffs[nz[0]] as i8, nz[0]);
            }
        }
        MulTable { table }
    }

    pub fn get(&self, a: usize, b: usize) -> SignedUnit {
        self.table[a][b]
    }
}

/// The shared multiplication table.
pub fn mul_table() -> &'static MulTable {
    static TABLE: OnceLock<MulTable> = OnceLock::new();
    TABLE.get_or_init(MulTable::derive)
}

/// An octonion with exact coefficients over `u0..u7`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Octonion {
    pub coeffs: [Rational; 8],
}

impl fmt::Debug for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("{c}*u{k}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl Octonion {
    pub fn zero() -> Self {
        Octonion::default()
    }

    pub fn one() -> Self {
        Octonion::unit(0)
    }

    pub fn unit(k: usize) -> Self {
        let mut o = Octonion::zero();
        o.coeffs[k] = Rational::one();
        o
    }

    pub fn real(r: Rational) -> Self {
        let mut o = Octonion::zero();
        o.coeffs[0] = r;
        o
    }

    pub fn from_ints(v: [i64; 8]) -> Self {
        Octonion { coeffs: v.map(int) }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Octonion { coeffs: std::array::from_fn(|k| &self.coeffs[k] * s) }
    }

    pub fn mul(&self, other: &Octonion) -> Octonion {
        let table = mul_table();
        let mut out = Octonion::zero();
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in other.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let e = table.get(a, b);
                let p = x * y;
                if e.sign > 0 {
                    out.coeffs[e.index] += &p;
                } else {
                    out.coeffs[e.index] -= &p;
                }
            }
        }
        out
    }

    pub fn conj(&self) -> Octonion {
        Octonion {
            coeffs: std::array::from_fn(|k| if k == 0 { self.coeffs[0].clone() } else { -&self.coeffs[k] }),
        }
    }

    pub fn re(&self) -> Rational {
        self.coeffs[0].clone()
    }

    pub fn im(&self) -> Octonion {
        let mut o = self.clone();
        o.coeffs[0] = Rational::zero();
        o
    }

    /// `<a, b> = (a conj(b) + b conj(a)) / 2`, the Euclidean product of coefficients.
    pub fn inner(&self, other: &Octonion) -> Rational {
        self.coeffs.iter().zip(other.coeffs.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn norm2(&self) -> Rational {
        self.inner(self)
    }
}

impl Add for &Octonion {
    type Output = Octonion;

    fn add(self, rhs: &Octonion) -> Octonion {
        Octonion { coeffs: std::array::from_fn(|k| &self.coeffs[k] + &rhs.coeffs[k]) }
    }
}

impl Sub for &Octonion {
    type Output = Octonion;

    fn sub(self, rhs: &Octonion) -> Octonion {
        Octonion { coeffs: std::array::from_fn(|k| &self.coeffs[k] - &rhs.coeffs[k]) }
    }
}

impl Mul for &Octonion {
    type Output = Octonion;

    fn mul(self, rhs: &Octonion) -> Octonion {
        Octonion::mul(self, rhs)
    }
}

impl Neg for &Octonion {
    type Output = Octonion;

    fn neg(self) -> Octonion {
        Octonion { coeffs: std::array::from_fn(|k| -&self.coeffs[k]) }
    }
}

pub fn mul(a: &Octonion, b: &Octonion) -> Octonion {
    a.mul(b)
}

pub fn conj(a: &Octonion) -> Octonion {
    a.conj()
}

pub fn inner_oct(a: &Octonion, b: &Octonion) -> Rational {
    a.inner(b)
}

/// `(a, b, c) = (ab)c - a(bc)`.
pub fn associator(a: &Octonion, b: &Octonion, c: &Octonion) -> Octonion {
    &a.mul(b).mul(c) - &a.mul(&b.mul(c))
}

/// `u x v = Im(conj(v) u) = (conj(v) u - conj(u) v) / 2`.
pub fn cross_oct(u: &Octonion, v: &Octonion) -> Octonion {
    let lhs = v.conj().mul(u);
    let rhs = u.conj().mul(v);
    (&lhs - &rhs).scale(&frac(1, 2))
}

/// A signed-permutation automorphism of the octonions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    /// `images[k]` is the image of `u_k`.
    images: [SignedUnit; 8],
}

impl Automorphism {
    pub fn identity() -> Self {
        Automorphism { images: std::array::from_fn(SignedUnit::pos) }
    }

    pub fn image(&self, k: usize) -> SignedUnit {
        self.images[k]
    }

    pub fn apply_unit(&self, u: SignedUnit) -> SignedUnit {
        let im = self.images[u.index];
        SignedUnit::new(im.sign * u.sign, im.index)
    }

    pub fn apply(&self, a: &Octonion) -> Octonion {
        let mut out = Octonion::zero();
        for (k, c) in a.coeffs.iter().enumerate() {
            let im = self.images[k];
            if im.sign > 0 {
                out.coeffs[im.index] += c;
            } else {
                out.coeffs[im.index] -= c;
            }
        }
        out
    }

    /// Column `k` holds the coordinates of the image of `u_k`.
    pub fn matrix(&self) -> [[Rational; 8]; 8] {
        let mut m: [[Rational; 8]; 8] = Default::default();
        for (k, im) in self.images.iter().enumerate() {
            m[im.index][k] = int(im.sign as i64);
        }
        m
    }

    /// `prod_k sign(image of u_k) * parity(underlying permutation)`.
    pub fn sign_parity_product(&self) -> i8 {
        let signs: i8 = self.images.iter().map(|u| u.sign).product();
        let perm: Vec<usize> = self.images.iter().map(|u| u.index).collect();
        signs * parity_of(&perm)
    }

    /// Checks `Phi(u_a u_b) = Phi(u_a) Phi(u_b)` on all 64 basis pairs.
    pub fn is_multiplicative(&self) -> bool {
        let table = mul_table();
        (0..8).all(|a| {
            (0..8).all(|b| {
                let prod = table.get(a, b);
                let lhs = self.apply_unit(prod);
                let rhs = self.images[a].mul(self.images[b]);
                lhs == rhs
            })
        })
    }
}

/// The unique automorphism sending `i'` to `u1`, `j'` to `u2` and `e'` to `u4`.
pub fn automorphism_from_triple(i: SignedUnit, j: SignedUnit, e: SignedUnit) -> Result<Automorphism> {
    for (name, u) in [("i'", i), ("j'", j), ("e'", e)] {
        if u.index == 0 || u.index > 7 || u.sign.abs() != 1 {
            return reject(format!("{name} = {u} is not an imaginary signed basis unit"));
        }
    }
    if j.index == i.index {
        return reject("j' must differ from +-i'");
    }
    let ij = i.mul(j);
    if e.index == i.index || e.index == j.index || e.index == ij.index {
        return reject("e' must differ from +-i', +-j' and +-i'j'");
    }
    // Psi = Phi^-1 sends the standard generators to the given triple and
    // is extended multiplicatively along u3 = u1u2, u5 = u1u4, u6 = u2u4, u7 = u3u4.
    let mut psi = [SignedUnit::pos(0); 8];
    psi[1] = i;
    psi[2] = j;
    psi[4] = e;
    psi[3] = psi[1].mul(psi[2]);
    psi[5] = psi[1].mul(psi[4]);
    psi[6] = psi[2].mul(psi[4]);
    psi[7] = psi[3].mul(psi[4]);
    let mut images = [SignedUnit::pos(0); 8];
    for (k, p) in psi.iter().enumerate() {
        // Phi(p.sign * u_{p.index}) = u_k
        images[p.index] = SignedUnit::new(p.sign, k);
    }
    let phi = Automorphism { images };
    assert!(phi.is_multiplicative(), "extended map failed to be multiplicative");
    Ok(phi)
}

/// Right multiplication by a signed unit as a signed permutation of the basis.
pub fn right_mul_perm(u: SignedUnit) -> [SignedUnit; 8] {
    std::array::from_fn(|k| SignedUnit::pos(k).mul(u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Hand-checked table, entry `s*(k+1)` meaning `u_i u_j = s u_k`.
    const FIXTURE: [[i8; 8]; 8] = [
        [1, 2, 3, 4, 5, 6, 7, 8],
        [2, -1, 4, -3, 6, -5, -8, 7],
        [3, -4, -1, 2, 7, 8, -5, -6],
        [4, 3, -2, -1, 8, -7, 6, -5],
        [5, -6, -7, -8, -1, 2, 3, 4],
        [6, 5, -8, 7, -2, -1, -4, 3],
        [7, 8, 5, -6, -3, 4, -1, -2],
        [8, -7, 6, 5, -4, -3, 2, -1],
    ];

    fn u(k: usize) -> Octonion {
        Octonion::unit(k)
    }

    fn oct_strategy() -> impl Strategy<Value = Octonion> {
        proptest::array::uniform8((-6i64..=6, 1i64..=3)).prop_map(|cs| Octonion { coeffs: cs.map(|(n, d)| frac(n, d)) })
    }

    #[test]
    fn table_matches_fixture() {
        let t = mul_table();
        for a in 0..8 {
            for b in 0..8 {
                let e = t.get(a, b);
                assert_eq!(e.sign * (e.index as i8 + 1), FIXTURE[a][b], "u{a} u{b}");
            }
        }
    }

    #[test]
    fn named_products() {
        assert_eq!(u(1).mul(&u(4)), u(5));
        assert_eq!(u(5).mul(&u(6)), -&u(3));
        assert_eq!(u(1).mul(&u(2)), u(3));
        assert_eq!(u(3).mul(&u(4)), u(7));
        for k in 1..8 {
            assert_eq!(u(k).mul(&u(k)), -&u(0));
        }
        let a = Octonion::from_ints([1, -2, 3, 0, 5, 0, -1, 4]);
        assert_eq!(u(0).mul(&a), a);
        assert_eq!(a.mul(&u(0)), a);
    }

    #[test]
    fn conj_re_im() {
        assert_eq!(u(0).conj(), u(0));
        assert_eq!(u(3).conj(), -&u(3));
        assert_eq!(u(1).mul(&u(1)).re(), int(-1));
        let a = Octonion::from_ints([2, 1, 0, 0, 0, 0, 0, 3]);
        assert_eq!(a.im(), Octonion::from_ints([0, 1, 0, 0, 0, 0, 0, 3]));
    }

    #[test]
    fn inner_products() {
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(u(i).inner(&u(j)), if i == j { int(1) } else { int(0) });
            }
        }
        assert_eq!(u(1).mul(&u(2)).inner(&u(3)), int(1));
        // <a, b> = (a conj(b) + b conj(a)) / 2
        let a = Octonion::from_ints([1, 2, -1, 0, 3, 0, 1, -2]);
        let b = Octonion::from_ints([0, 1, 1, 4, -1, 2, 0, 1]);
        let half = (&a.mul(&b.conj()) + &b.mul(&a.conj())).scale(&frac(1, 2));
        assert_eq!(half, Octonion::real(a.inner(&b)));
    }

    #[test]
    fn right_multiplication_by_unit_is_isometric() {
        let a = Octonion::from_ints([1, 2, -1, 0, 3, 0, 1, -2]);
        let b = Octonion::from_ints([0, 1, 1, 4, -1, 2, 0, 1]);
        for k in 0..8 {
            assert_eq!(a.mul(&u(k)).inner(&b.mul(&u(k))), a.inner(&b));
        }
    }

    #[test]
    fn associator_values() {
        let a = Octonion::from_ints([1, 2, 0, 0, 0, 1, 0, 0]);
        let b = Octonion::from_ints([0, 0, 3, 0, 1, 0, 0, 0]);
        assert!(associator(&u(0), &a, &b).is_zero());
        assert!(associator(&u(1), &u(2), &u(3)).is_zero());
        assert_eq!(associator(&u(1), &u(2), &u(4)), u(7).scale(&int(2)));
    }

    #[test]
    fn cross_values() {
        let a = Octonion::from_ints([1, 2, 0, -1, 0, 1, 0, 3]);
        assert!(cross_oct(&a, &a).is_zero());
        assert_eq!(cross_oct(&u(1), &u(0)), u(1));
        // conj(u2) u1 = -u2 u1 = u1 u2 = u3... Im of that
        let oracle = u(2).conj().mul(&u(1)).im();
        assert_eq!(cross_oct(&u(1), &u(2)), oracle);
        assert_eq!(cross_oct(&u(1), &u(2)), u(3));
    }

    #[test]
    fn alternativity_on_basis() {
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(u(a).mul(&u(a)).mul(&u(b)), u(a).mul(&u(a).mul(&u(b))));
                assert_eq!(u(a).mul(&u(b)).mul(&u(b)), u(a).mul(&u(b).mul(&u(b))));
            }
        }
    }

    #[test]
    fn inner_identities_on_basis_triples() {
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(u(a).inner(&u(b)), u(a).conj().inner(&u(b).conj()));
                for c in 0..8 {
                    let lhs = u(a).mul(&u(b)).inner(&u(c));
                    assert_eq!(lhs, u(b).inner(&u(a).conj().mul(&u(c))));
                    assert_eq!(lhs, u(a).inner(&u(c).mul(&u(b).conj())));
                }
            }
        }
    }

    #[test]
    fn six_units_anticommute_with_each_imaginary_unit() {
        for k in 1..8 {
            let n = (0..8).filter(|&m| u(m).mul(&u(k)) == -&u(k).mul(&u(m))).count();
            assert_eq!(n, 6, "u{k}");
        }
    }

    #[test]
    fn automorphism_standard_and_swapped() {
        let id = automorphism_from_triple(SignedUnit::pos(1), SignedUnit::pos(2), SignedUnit::pos(4)).unwrap();
        assert_eq!(id, Automorphism::identity());
        let swap = automorphism_from_triple(SignedUnit::pos(2), SignedUnit::pos(1), SignedUnit::pos(4)).unwrap();
        assert_eq!(swap.apply(&u(3)), -&u(3));
        assert_eq!(swap.apply(&u(2)), u(1));
    }

    #[test]
    fn automorphism_rejects_bad_triples() {
        let p = SignedUnit::pos;
        assert!(automorphism_from_triple(p(0), p(2), p(4)).is_err());
        assert!(automorphism_from_triple(p(1), SignedUnit::neg(1), p(4)).is_err());
        assert!(automorphism_from_triple(p(1), p(2), SignedUnit::neg(3)).is_err());
        assert!(automorphism_from_triple(p(1), p(2), p(2)).is_err());
    }

    #[test]
    fn every_valid_triple_gives_a_sign_balanced_automorphism() {
        let mut count = 0;
        for i in 1..8 {
            for j in 1..8 {
                for e in 1..8 {
                    for signs in 0..8u8 {
                        let s = |bit: u8| if signs & bit != 0 { -1 } else { 1 };
                        let (iu, ju, eu) = (SignedUnit::new(s(1), i), SignedUnit::new(s(2), j), SignedUnit::new(s(4), e));
                        if let Ok(phi) = automorphism_from_triple(iu, ju, eu) {
                            count += 1;
                            assert_eq!(phi.apply_unit(iu), SignedUnit::pos(1));
                            assert_eq!(phi.apply_unit(ju), SignedUnit::pos(2));
                            assert_eq!(phi.apply_unit(eu), SignedUnit::pos(4));
                            assert_eq!(phi.image(0), SignedUnit::pos(0));
                            assert_eq!(phi.sign_parity_product(), 1);
                        }
                    }
                }
            }
        }
        // 7 * 6 * 4 index choices, 8 sign patterns
        assert_eq!(count, 7 * 6 * 4 * 8);
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(a in oct_strategy(), b in oct_strategy()) {
            let ab = a.mul(&b);
            prop_assert_eq!(ab.norm2(), &a.norm2() * &b.norm2());
        }

        #[test]
        fn conj_reverses_products(a in oct_strategy(), b in oct_strategy()) {
            prop_assert_eq!(a.mul(&b).conj(), b.conj().mul(&a.conj()));
        }

        #[test]
        fn associator_is_alternating(a in oct_strategy(), b in oct_strategy(), c in oct_strategy()) {
            let abc = associator(&a, &b, &c);
            prop_assert_eq!(associator(&b, &a, &c), -&abc);
            prop_assert_eq!(associator(&a, &c, &b), -&abc);
            prop_assert_eq!(associator(&a.conj(), &b, &c), -&abc);
        }

        #[test]
        fn cross_is_skew_and_imaginary(a in oct_strategy(), b in oct_strategy()) {
            let x = cross_oct(&a, &b);
            prop_assert!(x.re().is_zero());
            prop_assert_eq!(cross_oct(&b, &a), -&x);
        }
    }
}
