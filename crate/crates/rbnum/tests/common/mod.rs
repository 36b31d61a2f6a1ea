//! Shared naive oracles for the integration suites. Everything here is
//! deliberately brute-force and independent of the library's pruned search,
//! so agreement is meaningful.

#![allow(dead_code)] // each integration test binary uses a subset

/// All canonical colorings of `[1, n]` (restricted-growth strings) in
/// lexicographic order; the full set-partition space.
pub fn all_canonical_colorings(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, prefix: &mut Vec<usize>, used: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for color in 0..=used {
            prefix.push(color);
            rec(n, prefix, used.max(color + 1), out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut vec![0], 1, &mut out);
    }
    out
}

/// Does the 0-based assignment contain a rainbow solution of
/// `x1 + ... + x(k-1) = xk`? Direct odometer over strictly increasing
/// left-hand sides; no shared code with the library's solution model.
pub fn naive_has_rainbow(assignment: &[usize], k: usize) -> bool {
    fn rec(assignment: &[usize], k: usize, lo: usize, left: usize, sum: usize, chosen: &mut Vec<usize>) -> bool {
        let n = assignment.len();
        if left == 0 {
            if sum > n || chosen.contains(&sum) {
                return false;
            }
            let mut colors: Vec<usize> = chosen.iter().map(|&v| assignment[v - 1]).collect();
            colors.push(assignment[sum - 1]);
            colors.sort_unstable();
            colors.dedup();
            return colors.len() == k;
        }
        for v in lo..=n {
            if sum + v > n {
                break;
            }
            chosen.push(v);
            if rec(assignment, k, v + 1, left - 1, sum + v, chosen) {
                chosen.pop();
                return true;
            }
            chosen.pop();
        }
        false
    }
    assert!(k >= 3);
    rec(assignment, k, 1, k - 1, 0, &mut Vec::new())
}

/// Maximum rainbow-free color count over all canonical colorings of `[n]`,
/// with every coloring attaining it (lexicographic order). Pure enumeration.
pub fn naive_max_and_extremal(n: usize, k: usize) -> (usize, Vec<Vec<usize>>) {
    let mut best = 0;
    let mut extremal: Vec<Vec<usize>> = Vec::new();
    for coloring in all_canonical_colorings(n) {
        if naive_has_rainbow(&coloring, k) {
            continue;
        }
        let colors = coloring.iter().max().copied().unwrap_or(0) + 1;
        if colors > best {
            best = colors;
            extremal.clear();
        }
        if colors == best {
            extremal.push(coloring);
        }
    }
    (best, extremal)
}

/// Brute-force staircase threshold: over all strictly increasing
/// `len`-tuples from `[1, n]` whose sum reaches `n`, minimize the maximum
/// element, then report the largest first element among the minimizers.
/// `None` when no tuple qualifies.
pub fn brute_force_threshold(n: usize, len: usize) -> Option<usize> {
    fn each_combination(cap: usize, len: usize, f: &mut dyn FnMut(&[usize])) {
        fn rec(lo: usize, left: usize, cap: usize, prefix: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
            if left == 0 {
                f(prefix);
                return;
            }
            for v in lo..=cap {
                if cap + 1 - v < left {
                    break;
                }
                prefix.push(v);
                rec(v + 1, left - 1, cap, prefix, f);
                prefix.pop();
            }
        }
        rec(1, len, cap, &mut Vec::new(), f);
    }

    assert!(len >= 2);
    if len > n {
        return None;
    }
    for last in len..=n {
        let mut best_first: Option<usize> = None;
        each_combination(last - 1, len - 1, &mut |head| {
            let sum: usize = head.iter().sum::<usize>() + last;
            if sum >= n {
                let first = head[0];
                best_first = Some(best_first.map_or(first, |b| b.max(first)));
            }
        });
        if best_first.is_some() {
            return best_first;
        }
    }
    None
}

/// Tiny deterministic PRNG (xorshift64*), so randomized suites are
/// reproducible without a dependency.
pub struct XorShift64(u64);

impl XorShift64 {
    pub fn new(seed: u64) -> Self {
        XorShift64(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x.wrapping_mul(0x2545_f491_4f6c_dd1d)
    }

    pub fn below(&mut self, bound: usize) -> usize {
        assert!(bound > 0);
        (self.next_u64() % bound as u64) as usize
    }

    /// Random exact r-coloring of `[n]` (0-based labels, every color used),
    /// not necessarily canonical.
    pub fn exact_coloring(&mut self, n: usize) -> Vec<usize> {
        let r = 1 + self.below(n);
        let mut assignment: Vec<usize> = (0..n).map(|_| self.below(r)).collect();
        // force each color onto a distinct position via a partial shuffle
        let mut positions: Vec<usize> = (0..n).collect();
        for color in 0..r {
            let pick = color + self.below(n - color);
            positions.swap(color, pick);
            assignment[positions[color]] = color;
        }
        assignment
    }

    /// Random permutation of `0..r`.
    pub fn permutation(&mut self, r: usize) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..r).collect();
        for i in (1..r).rev() {
            let j = self.below(i + 1);
            perm.swap(i, j);
        }
        perm
    }
}
