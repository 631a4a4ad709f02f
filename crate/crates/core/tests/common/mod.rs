//! Helpers shared by the integration tests: independent oracles that do not
//! go through the code under test.
#![allow(dead_code)]

use orbitope::exactmath::{ratio, RatVec};
use orbitope::rootdata::{GroupData, GroupFamily};
use rand::rngs::StdRng;
use rand::Rng;

/// True iff the Littlewood–Richardson coefficient `c^ν_{λμ}` is positive,
/// decided by searching for one LR tableau of shape `ν/λ` and content `μ`
/// (all three partitions with nonnegative parts, padded to a common length).
pub fn lr_tableau_exists(lam: &[i64], mu: &[i64], nu: &[i64]) -> bool {
    let n = nu.len().max(lam.len()).max(mu.len());
    let pad = |v: &[i64]| -> Vec<usize> {
        let mut out: Vec<usize> = v.iter().map(|&x| usize::try_from(x).expect("nonnegative part")).collect();
        out.resize(n, 0);
        out
    };
    let (lam, mu, nu) = (pad(lam), pad(mu), pad(nu));
    let is_partition = |v: &[usize]| v.windows(2).all(|w| w[0] >= w[1]);
    assert!(is_partition(&lam) && is_partition(&mu) && is_partition(&nu));
    if lam.iter().zip(&nu).any(|(a, b)| a > b) || lam.iter().sum::<usize>() + mu.iter().sum::<usize>() != nu.iter().sum::<usize>() {
        return false;
    }
    // Cells in reverse reading order: rows top to bottom, right to left.
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (lam[i]..nu[i]).rev().map(move |j| (i, j))).collect();
    let mut grid: Vec<Vec<usize>> = nu.iter().map(|&len| vec![0; len]).collect();
    let mut count = vec![0usize; n + 1];
    fn search(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        count: &mut Vec<usize>,
        lam: &[usize],
        mu: &[usize],
        nu: &[usize],
    ) -> bool {
        let Some(&(i, j)) = cells.get(k) else { return true };
        let n = mu.len();
        for v in 1..=n {
            if count[v] >= mu[v - 1] {
                continue;
            }
            // Lattice word: after placing v, #v ≤ #(v − 1).
            if v > 1 && count[v] + 1 > count[v - 1] {
                continue;
            }
            // Rows weakly increase: the cell to the right is already filled.
            if j + 1 < nu[i] && grid[i][j + 1] < v {
                continue;
            }
            // Columns strictly increase downward.
            if i > 0 && j >= lam[i - 1] && grid[i - 1][j] >= v {
                continue;
            }
            grid[i][j] = v;
            count[v] += 1;
            if search(k + 1, cells, grid, count, lam, mu, nu) {
                return true;
            }
            count[v] -= 1;
            grid[i][j] = 0;
        }
        false
    }
    search(0, &cells, &mut grid, &mut count, &lam, &mu, &nu)
}

/// All weakly decreasing integer vectors of length `n` with entries in `0..=max`.
pub fn partitions_in_box(n: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, bound: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in (0..=bound).rev() {
            cur.push(v);
            rec(n, v, cur, out);
            cur.pop();
        }
    }
    rec(n, max, &mut cur, &mut out);
    out
}

/// A random strictly holomorphic rational `Λ` for `g`: coordinates with
/// denominators up to 3, sorted within each unitary block, recentred to
/// trace zero when the family requires it, and rejected until every
/// noncompact positive root pairs strictly positively with it.
pub fn random_strict_lambda(g: &GroupData, rng: &mut StdRng) -> RatVec {
    let trace_zero = matches!(g.family, GroupFamily::SUpq { .. });
    for _ in 0..100_000 {
        let den = rng.random_range(1..=3i64);
        let mut v: Vec<i64> = (0..g.dim).map(|_| rng.random_range(-8..=8i64)).collect();
        for block in g.unitary_blocks() {
            v[block.clone()].sort_unstable_by(|a, b| b.cmp(a));
        }
        if trace_zero {
            let s: i64 = v.iter().sum();
            let d = g.dim as i64;
            // Scale by d so the recentred vector stays integral before the denominator.
            v = v.iter().map(|x| x * d - s).collect();
        }
        let scale = if trace_zero { den * g.dim as i64 } else { den };
        let lam = RatVec::new(v.iter().map(|&x| ratio(x, scale)).collect());
        let strict = g.noncompact_pos.iter().all(|b| b.dot(&lam) > ratio(0, 1));
        if strict && g.is_dominant(&lam).unwrap() {
            return lam;
        }
    }
    panic!("no strictly holomorphic parameter found for {}", g.family);
}
