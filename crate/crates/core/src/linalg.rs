//! Exact linear algebra: fraction-free row echelon over the integers, rank,
//! nullspace and span membership for rational vectors.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{common_denominator, Rational};

/// A sparse integer row: `(column, value)` pairs with strictly increasing
/// columns and no zero values.
pub type SparseRow = Vec<(usize, BigInt)>;

fn content(row: &SparseRow) -> BigInt {
    row.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v))
}

fn normalize(row: &mut SparseRow) {
    let g = content(row);
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
    if let Some((_, lead)) = row.first() {
        if lead.is_negative() {
            for (_, v) in row.iter_mut() {
                *v = -&*v;
            }
        }
    }
}

/// `a * x - b * y` on sparse rows.
fn combine(a: &BigInt, x: &SparseRow, b: &BigInt, y: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental fraction-free row echelon form.
///
/// Rows are inserted one at a time and reduced against the existing pivots in
/// increasing column order; each surviving row is divided by its content, so
/// entries stay small. The result depends only on the insertion order.
#[derive(Debug, Clone)]
pub struct IntEchelon {
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

impl IntEchelon {
    pub fn new(ncols: usize) -> Self {
        IntEchelon { ncols, pivots: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the pivots; returns the (normalized) remainder.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        normalize(&mut row);
        while let Some((lead_col, lead)) = row.first().cloned() {
            let Some(piv) = self.pivots.get(&lead_col) else { break };
            let p = &piv[0].1;
            let g = p.gcd(&lead);
            let (a, b) = (p / &g, &lead / &g);
            row = combine(&a, &row, &b, piv);
            normalize(&mut row);
        }
        row
    }

    /// Inserts a row; returns `true` when it was independent of the previous rows.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        let row = self.reduce(row);
        match row.first() {
            None => false,
            Some(&(col, _)) => {
                self.pivots.insert(col, row);
                true
            }
        }
    }

    /// Columns without a pivot.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.pivots.contains_key(c)).collect()
    }

    /// A basis of the right nullspace, one vector per free column, obtained by
    /// back substitution.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        self.free_columns()
            .into_iter()
            .map(|free| {
                let mut x = vec![Rational::zero(); self.ncols];
                x[free] = Rational::one();
                for (&col, row) in self.pivots.iter().rev() {
                    let mut acc = Rational::zero();
                    for (c, v) in &row[1..] {
                        if !x[*c].is_zero() {
                            acc += &x[*c] * &Rational::from_bigs(v.clone(), BigInt::one());
                        }
                    }
                    x[col] = -(acc / Rational::from_bigs(row[0].1.clone(), BigInt::one()));
                }
                x
            })
            .collect()
    }
}

/// Clears denominators of a dense rational vector into a sparse integer row.
pub fn to_int_row(v: &[Rational]) -> SparseRow {
    let den = common_denominator(v.iter());
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| {
            let scaled = x.to_big() * num_rational::BigRational::from_integer(den.clone());
            debug_assert!(scaled.is_integer());
            (k, scaled.to_integer())
        })
        .collect()
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut ech = IntEchelon::new(ncols);
    for r in rows {
        ech.insert(to_int_row(r));
    }
    ech.rank()
}

pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut ech = IntEchelon::new(ncols);
    for r in rows {
        ech.insert(to_int_row(r));
    }
    ech.nullspace()
}

/// Whether `v` lies in the rational span of `basis`.
pub fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    let mut ech = IntEchelon::new(v.len());
    for r in basis {
        ech.insert(to_int_row(r));
    }
    ech.reduce(to_int_row(v)).is_empty()
}

/// Determinant of a square rational matrix by Gaussian elimination.
pub fn det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut d = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            d = -d;
        }
        let pivot = a[col][col].clone();
        d = &d * &pivot;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &pivot;
            for c in col..n {
                let t = &f * &a[col][c];
                a[r][c] -= &t;
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn dense(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn rank_and_nullspace_small() {
        let m = dense(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&m), 2);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 1);
        for row in &m {
            let dot: Rational = row.iter().zip(&ns[0]).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn span_membership() {
        let basis = vec![vec![int(1), int(0), frac(1, 2)], vec![int(0), int(1), int(1)]];
        assert!(in_span(&basis, &[int(2), int(3), int(4)]));
        assert!(!in_span(&basis, &[int(0), int(0), int(1)]));
    }

    #[test]
    fn determinant() {
        let m = dense(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]);
        // 2*(3-2) - 0 + 1*(1-3) = 0
        assert_eq!(det(&m), int(0));
        let m = dense(&[&[0, 1], &[1, 0]]);
        assert_eq!(det(&m), int(-1));
    }

    #[test]
    fn brute_force_rank_agrees_on_random_integer_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let rows = rng.gen_range(1..6);
            let cols = rng.gen_range(1..6);
            let m: Vec<Vec<Rational>> =
                (0..rows).map(|_| (0..cols).map(|_| int(rng.gen_range(-2..=2))).collect()).collect();
            let r = rank(&m);
            // rank = size of the largest nonsingular square minor
            let mut best = 0;
            for k in 1..=rows.min(cols) {
                for rs in crate::perm::combinations(rows, k) {
                    for cs in crate::perm::combinations(cols, k) {
                        let minor: Vec<Vec<Rational>> =
                            rs.iter().map(|&i| cs.iter().map(|&j| m[i][j].clone()).collect()).collect();
                        if !det(&minor).is_zero() {
                            best = k;
                        }
                    }
                }
            }
            assert_eq!(r, best);
            assert_eq!(nullspace(&m, cols).len(), cols - r);
        }
    }
}
