//! Signed permutation enumeration.

/// Sign of a permutation given in one-line notation (`perm[i]` is the image of `i`).
pub fn parity_of(perm: &[usize]) -> i8 {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut sign = 1i8;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = perm[k];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Calls `f(perm, sign)` for every permutation of `0..n` (Heap's algorithm).
///
/// Each step of Heap's algorithm is a single transposition, so the sign is
/// tracked incrementally.
pub fn for_each_permutation<F: FnMut(&[usize], i8)>(n: usize, mut f: F) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut sign = 1i8;
    f(&perm, sign);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            f(&perm, sign);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// All permutations of `0..n` with their signs.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i8)> {
    let mut out = Vec::new();
    for_each_permutation(n, |p, s| out.push((p.to_vec(), s)));
    out
}

/// All `k`-subsets of `0..n` as ascending index vectors, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Binomial coefficient.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn heap_enumerates_each_permutation_once_with_correct_sign() {
        for n in 0..=6 {
            let perms = signed_permutations(n);
            let expected: usize = (1..=n).product();
            assert_eq!(perms.len(), expected.max(1));
            let distinct: HashSet<Vec<usize>> = perms.iter().map(|(p, _)| p.clone()).collect();
            assert_eq!(distinct.len(), perms.len());
            for (p, s) in &perms {
                assert_eq!(*s, parity_of(p), "{p:?}");
            }
        }
    }

    #[test]
    fn parity_by_inversions() {
        let perms = signed_permutations(5);
        for (p, s) in perms {
            let inv = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            assert_eq!(s, if inv % 2 == 0 { 1 } else { -1 });
        }
    }

    #[test]
    fn combination_counts() {
        assert_eq!(combinations(16, 8).len(), 12870);
        assert_eq!(binomial(16, 8), 12870);
        assert_eq!(combinations(9, 3).len(), 84);
        let c = combinations(5, 2);
        assert_eq!(c[0], vec![0, 1]);
        assert_eq!(c[9], vec![3, 4]);
    }
}
