//! Curvature tensor of the Cayley planes in four equivalent guises.
//!
//! `c > 0` is the compact plane, `c < 0` the non-compact one. Every function
//! returns `R_XY Z` as a vector; `R_XYZW = <R_XY Z, W>`.

use std::sync::OnceLock;

use crate::error::{reject, Result};
use crate::octonion::Octonion;
use crate::operators::{standard_family, Operator16, Vector16};
use crate::rational::{int, Rational};
use crate::report::{Check, VerificationReport};

/// The 36 operators `I_i I_j`, `i < j`, in lexicographic order.
fn pair_operators() -> &'static [Operator16] {
    static PAIRS: OnceLock<Vec<Operator16>> = OnceLock::new();
    PAIRS.get_or_init(|| {
        let f = standard_family();
        (0..9).flat_map(|i| (i + 1..9).map(move |j| f.pair(i, j))).collect()
    })
}

fn prefactor(c: &Rational) -> Result<Rational> {
    if c.is_zero() {
        return reject("curvature scale c must be nonzero");
    }
    Ok(-(c / &int(4)))
}

#[derive(Debug, Clone)]
pub struct CurvatureInput {
    pub x: Vector16,
    pub y: Vector16,
    pub z: Vector16,
    pub c: Rational,
}

impl CurvatureInput {
    pub fn new(x: Vector16, y: Vector16, z: Vector16, c: Rational) -> Result<Self> {
        prefactor(&c)?;
        Ok(CurvatureInput { x, y, z, c })
    }
}

/// `R_XY Z = -c/4 sum_{i<j} omega_ij(X, Y) I_i I_j Z`.
pub fn curvature_omega(x: &Vector16, y: &Vector16, z: &Vector16, c: &Rational) -> Result<Vector16> {
    let k = prefactor(c)?;
    let mut out = Vector16::zero();
    for op in pair_operators() {
        let w = x.inner(&op.apply(y));
        if !w.is_zero() {
            out = &out + &op.apply(z).scale(&w);
        }
    }
    Ok(out.scale(&k))
}

fn s_brown_gray(x: &Vector16, y: &Vector16, z: &Vector16) -> Vector16 {
    let (x1, x2, y1, y2, z1, z2) = (&x.x1, &x.x2, &y.x1, &y.x2, &z.x1, &z.x2);
    let four = int(4);
    let first = &(&x1.scale(&(&four * &y1.inner(z1))) + &z1.mul(y2).mul(&x2.conj())) + &x1.mul(y2).mul(&z2.conj());
    let second = &(&x2.scale(&(&four * &y2.inner(z2))) + &x1.conj().mul(&y1.mul(z2))) + &z1.conj().mul(&y1.mul(x2));
    Vector16::new(first, second)
}

/// `R = S_XY - S_YX` with the octonionic `S` of Brown and Gray.
pub fn curvature_brown_gray(x: &Vector16, y: &Vector16, z: &Vector16, c: &Rational) -> Result<Vector16> {
    let k = prefactor(c)?;
    Ok((&s_brown_gray(x, y, z) - &s_brown_gray(y, x, z)).scale(&k))
}

/// `S'_XY Z = -c/4 (3 g(Y, Z) X + sum_i g(I_i Y, Z) I_i X)`.
pub fn s_prime_operator(x: &Vector16, y: &Vector16, z: &Vector16, c: &Rational) -> Result<Vector16> {
    let k = prefactor(c)?;
    let f = standard_family();
    let mut out = x.scale(&(int(3) * y.inner(z)));
    for op in f.ops() {
        let w = op.apply(y).inner(z);
        if !w.is_zero() {
            out = &out + &op.apply(x).scale(&w);
        }
    }
    Ok(out.scale(&k))
}

/// The octonionic form of `S'`.
pub fn s_prime_octonion(x: &Vector16, y: &Vector16, z: &Vector16, c: &Rational) -> Result<Vector16> {
    let k = prefactor(c)?;
    let (x1, x2, y1, y2, z1, z2) = (&x.x1, &x.x2, &y.x1, &y.x2, &z.x1, &z.x2);
    let sum = |terms: [Octonion; 4]| terms.iter().fold(Octonion::zero(), |a, t| &a + t);
    let first = sum([
        x1.mul(&y1.conj()).mul(z1),
        x1.mul(y2).mul(&z2.conj()),
        z1.mul(&y1.conj()).mul(x1),
        z1.mul(y2).mul(&x2.conj()),
    ]);
    let second = sum([
        z1.conj().mul(&y1.mul(x2)),
        z2.mul(&y2.conj().mul(x2)),
        x2.mul(&y2.conj().mul(z2)),
        x1.conj().mul(&y1.mul(z2)),
    ]);
    Ok(Vector16::new(first, second).scale(&k))
}

pub fn curvature_prime_operator(x: &Vector16, y: &Vector16, z: &Vector16, c: &Rational) -> Result<Vector16> {
    Ok(&s_prime_operator(x, y, z, c)? - &s_prime_operator(y, x, z, c)?)
}

pub fn curvature_prime_octonion(x: &Vector16, y: &Vector16, z: &Vector16, c: &Rational) -> Result<Vector16> {
    Ok(&s_prime_octonion(x, y, z, c)? - &s_prime_octonion(y, x, z, c)?)
}

/// `R_XYZW = <R_XY Z, W>` from the `omega` expression.
pub fn curvature_tensor(x: &Vector16, y: &Vector16, z: &Vector16, w: &Vector16, c: &Rational) -> Result<Rational> {
    Ok(curvature_omega(x, y, z, c)?.inner(w))
}

/// Checks `5 R_XY Z = sum_j I_j R_XY (I_j Z)`.
pub fn averaging_identity(x: &Vector16, y: &Vector16, z: &Vector16, c: &Rational) -> Result<VerificationReport> {
    let f = standard_family();
    let lhs = curvature_omega(x, y, z, c)?.scale(&int(5));
    let mut rhs = Vector16::zero();
    for op in f.ops() {
        rhs = &rhs + &op.apply(&curvature_omega(x, y, &op.apply(z), c)?);
    }
    let mut report = VerificationReport::new();
    let mut check = Check::new("curvature.averaging", lhs == rhs);
    if lhs != rhs {
        check = check.with("lhs", format!("{lhs:?}")).with("rhs", format!("{rhs:?}"));
    }
    report.push(check);
    Ok(report)
}

/// `K(v, w) = R_vwvw / (|v|^2 |w|^2 - <v, w>^2)`.
pub fn sectional_curvature(v: &Vector16, w: &Vector16, c: &Rational) -> Result<Rational> {
    let gram = &(v.norm2() * w.norm2()) - &(v.inner(w) * v.inner(w));
    if gram.is_zero() {
        return reject("sectional curvature of linearly dependent vectors");
    }
    Ok(curvature_tensor(v, w, v, w, c)? / gram)
}
