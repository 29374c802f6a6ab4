//! Infinitesimal stabilizers `{A : L_A f = 0}` of constant forms, solved
//! exactly, and the exclusion witnesses for the remaining summands of the
//! matrix space.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::canonical::canonical_8form;
use crate::error::{reject, Result};
use crate::exterior::{self, lie_derivative, AlternatingForm, Mask};
use crate::linalg::{self, IntEchelon, SparseRow};
use crate::operators::{boost8, lambda_basis, standard_family, Operator16, RationalCirclePoint, DIM};
use crate::rational::{common_denominator, int, Rational};
use crate::report::{Check, VerificationReport};

/// Kernel of `A -> L_A f` restricted to matrices supported on the first `n`
/// coordinates; generators are the elementary matrices `E_ab`, column `a*n + b`.
#[derive(Debug, Clone)]
pub struct LieKernel {
    pub n: usize,
    pub rows: usize,
    pub rank: usize,
    pub kernel: Vec<Vec<Rational>>,
}

impl LieKernel {
    pub fn dimension(&self) -> usize {
        self.kernel.len()
    }
}

fn elementary(a: usize, b: usize) -> Operator16 {
    Operator16::elementary(a, b)
}

fn embed(v: &[Rational], n: usize) -> Operator16 {
    let mut op = Operator16::zero();
    for (k, x) in v.iter().enumerate() {
        if !x.is_zero() {
            op.set(k / n, k % n, x.clone());
        }
    }
    op
}

/// The columns `L_{E_ab} f` of the system.
pub fn assemble_columns(f: &AlternatingForm, n: usize) -> Vec<AlternatingForm> {
    (0..n * n).into_par_iter().map(|k| lie_derivative(f, &elementary(k / n, k % n))).collect()
}

fn int_row(entries: &[(usize, Rational)]) -> SparseRow {
    let den = common_denominator(entries.iter().map(|(_, v)| v));
    entries
        .iter()
        .map(|(c, v)| {
            let scaled = v.to_big() * num_rational::BigRational::from_integer(den.clone());
            (*c, scaled.to_integer())
        })
        .filter(|(_, v): &(usize, BigInt)| v != &BigInt::from(0))
        .collect()
}

/// Exact kernel of `A -> L_A f` over `gl(n)`, `n <= 16`.
pub fn lie_kernel(f: &AlternatingForm, n: usize) -> Result<LieKernel> {
    if n == 0 || n > DIM {
        return reject(format!("matrix size {n} outside 1..=16"));
    }
    let columns = assemble_columns(f, n);
    // transpose to rows keyed by monomial, in increasing mask order
    let mut rows: BTreeMap<Mask, Vec<(usize, Rational)>> = BTreeMap::new();
    for (col, form) in columns.iter().enumerate() {
        for (m, c) in form.masks() {
            rows.entry(*m).or_default().push((col, c.clone()));
        }
    }
    let mut ech = IntEchelon::new(n * n);
    for entries in rows.values() {
        ech.insert(int_row(entries));
        if ech.rank() == n * n {
            break;
        }
    }
    Ok(LieKernel { n, rows: rows.len(), rank: ech.rank(), kernel: ech.nullspace() })
}

#[derive(Debug, Clone)]
pub struct StabilizerResult {
    pub kernel_dimension: usize,
    pub kernel_basis: Vec<Operator16>,
    pub rank: usize,
    /// Every `I_i I_j` lies in the kernel.
    pub contains_spin9: bool,
    /// The kernel is exactly the span of the `I_i I_j`.
    pub equals_spin9: bool,
    /// Each basis element was substituted back and annihilates the form.
    pub verified: bool,
    /// The kernel is closed under commutators.
    pub closed: bool,
}

fn flat(op: &Operator16) -> Vec<Rational> {
    op.flat().to_vec()
}

/// The infinitesimal stabilizer of an 8-form in `gl(16)`.
pub fn infinitesimal_stabilizer(f: &AlternatingForm) -> Result<StabilizerResult> {
    if f.degree() != 8 {
        return reject(format!("expected an 8-form, got degree {}", f.degree()));
    }
    let k = lie_kernel(f, DIM)?;
    let basis: Vec<Operator16> = k.kernel.iter().map(|v| embed(v, DIM)).collect();
    let verified = basis.par_iter().all(|a| lie_derivative(f, a).is_zero());

    let mut ech = IntEchelon::new(DIM * DIM);
    for a in &basis {
        ech.insert(linalg::to_int_row(&flat(a)));
    }
    let spin9 = lambda_basis(standard_family(), 2)?;
    let contains_spin9 = spin9.iter().all(|s| ech.reduce(linalg::to_int_row(&flat(s))).is_empty());
    let equals_spin9 = contains_spin9 && basis.len() == spin9.len();
    let closed = (0..basis.len())
        .into_par_iter()
        .all(|i| (i + 1..basis.len()).all(|j| ech.reduce(linalg::to_int_row(&flat(&basis[i].commutator(&basis[j])))).is_empty()));
    Ok(StabilizerResult {
        kernel_dimension: basis.len(),
        kernel_basis: basis,
        rank: k.rank,
        contains_spin9,
        equals_spin9,
        verified,
        closed,
    })
}

/// `dx_0 ^ dx_1 + dx_2 ^ dx_3`.
pub fn standard_symplectic4() -> AlternatingForm {
    &AlternatingForm::basis(&[0, 1]) + &AlternatingForm::basis(&[2, 3])
}

/// Dimension of `{A in gl(4) : A^T J + J A = 0}` solved directly on matrices,
/// together with whether it coincides with the kernel found through forms.
pub fn symplectic_oracle() -> Result<(usize, usize, bool)> {
    let j = |a: usize, b: usize| -> i64 {
        match (a, b) {
            (0, 1) | (2, 3) => 1,
            (1, 0) | (3, 2) => -1,
            _ => 0,
        }
    };
    // row (r, s) of the system: sum_k A[k][r] J[k][s] + J[r][k] A[k][s]
    let mut system = vec![vec![Rational::zero(); 16]; 16];
    for r in 0..4 {
        for s in 0..4 {
            for k in 0..4 {
                system[r * 4 + s][k * 4 + r] += int(j(k, s));
                system[r * 4 + s][k * 4 + s] += int(j(r, k));
            }
        }
    }
    let direct = linalg::nullspace(&system, 16);
    let via_forms = lie_kernel(&standard_symplectic4(), 4)?;
    let same = direct.iter().all(|v| linalg::in_span(&via_forms.kernel, v))
        && via_forms.kernel.iter().all(|v| linalg::in_span(&direct, v));
    Ok((direct.len(), via_forms.dimension(), same))
}

/// The restriction to `V = span(e_0..e_7)` scales by `(cosh 2t - sinh 2t)^4`
/// under the boost along `I_8`.
pub fn lambda1_exclusion(points: &[RationalCirclePoint]) -> Result<VerificationReport> {
    let omega = canonical_8form();
    let v: Mask = 0x00ff;
    let restricted = omega.restrict(v);
    let mut report = VerificationReport::new();
    report.push(Check::new("stabilizer.lambda1.restriction_nonzero", !restricted.is_zero()).with("terms", restricted.len()));
    for p in points {
        let b = boost8(standard_family(), p)?;
        let (ch, sh) = p.doubled();
        let factor = (&ch - &sh).pow(4);
        let pulled = exterior::pullback(omega, &b).restrict(v);
        let ok = pulled == restricted.scale(&factor);
        report.push(Check::new(format!("stabilizer.lambda1.boost({},{})", p.c, p.s), ok).with("factor", &factor));
    }
    let global = lie_derivative(omega, standard_family().get(8));
    report.push(Check::new("stabilizer.lambda1.lie_nonzero", !global.is_zero()).with("terms", global.len()));
    Ok(report)
}

/// Witnesses that the identity and `I_0 I_1 I_2` do not preserve the form.
pub fn lambda3_exclusion() -> Result<VerificationReport> {
    let f = standard_family();
    let omega = canonical_8form();
    let mut report = VerificationReport::new();
    let w = lie_derivative(omega, &f.product(&[0, 1, 2])?);
    report.push(Check::new("stabilizer.lambda3.witness", !w.is_zero()).with("terms", w.len()));
    let control = lie_derivative(omega, &f.product(&[0, 1])?);
    report.push(Check::new("stabilizer.lambda2.control", control.is_zero()));
    let scaling = lie_derivative(omega, &Operator16::identity());
    report.push(Check::new("stabilizer.lambda0.scaling", scaling == omega.scale(&int(8))));

    // [I_k A, I_k B] = -[A, B] for triples A, B avoiding k
    let (a, b) = (f.product(&[0, 1, 2])?, f.product(&[3, 4, 5])?);
    let k = f.get(8);
    let lhs = k.compose(&a).commutator(&k.compose(&b));
    report.push(Check::new("stabilizer.lambda4.inclusion", lhs == -&a.commutator(&b)));
    let spin9: Vec<Vec<Rational>> = lambda_basis(f, 2)?.iter().map(flat).collect();
    let outside = !linalg::in_span(&spin9, &flat(&a.commutator(&b)));
    report.push(Check::new("stabilizer.lambda3.bracket_outside", outside));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn symplectic_oracle_gives_sp4() {
        let (direct, forms, same) = symplectic_oracle().unwrap();
        assert_eq!(direct, 10);
        assert_eq!(forms, 10);
        assert!(same);
    }

    #[test]
    fn volume_form_of_a_block() {
        let vol = AlternatingForm::basis(&[0, 1, 2, 3, 4, 5, 6, 7]);
        let k = lie_kernel(&vol, DIM).unwrap();
        assert_eq!(k.dimension(), 191);
        assert_eq!(k.rank + k.dimension(), 256);
        // a smaller analogue: dx0 ^ dx1 in gl(3) is stabilized by 9 - 2 - 1 = 6 directions
        let k = lie_kernel(&AlternatingForm::basis(&[0, 1]), 3).unwrap();
        assert_eq!(k.dimension(), 6);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(infinitesimal_stabilizer(&standard_symplectic4()).is_err());
        assert!(lie_kernel(&standard_symplectic4(), 17).is_err());
    }

    #[test]
    fn canonical_stabilizer_is_spin9() {
        let r = infinitesimal_stabilizer(canonical_8form()).unwrap();
        assert_eq!(r.kernel_dimension, 36);
        assert_eq!(r.rank + r.kernel_dimension, 256);
        assert!(r.contains_spin9 && r.equals_spin9 && r.verified && r.closed);
    }

    #[test]
    fn exclusions() {
        let points = [
            RationalCirclePoint::boost(int(1), int(0)).unwrap(),
            RationalCirclePoint::boost(frac(5, 4), frac(3, 4)).unwrap(),
        ];
        let r = lambda1_exclusion(&points).unwrap();
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.get("stabilizer.lambda1.boost(5/4,3/4)").unwrap().value("factor"), Some("1/256"));
        assert_eq!(r.get("stabilizer.lambda1.boost(1,0)").unwrap().value("factor"), Some("1"));
        let r = lambda3_exclusion().unwrap();
        assert!(r.all_passed(), "{r}");
    }
}
