//! Exact small-instance oracles: treewidth by dynamic programming over
//! elimination orderings, bramble verification, and bramble order via an
//! exact minimum hitting set.

use crate::error::{Error, Result};
use crate::families::Bramble;
use crate::graph::Graph;

pub const TREEWIDTH_CAP: usize = 22;
pub const HITTING_SET_UNIVERSE_CAP: usize = 64;
pub const HITTING_SET_SETS_CAP: usize = 512;

/// Exact treewidth for graphs on at most `cap` vertices. Subset dynamic
/// program: `dp[S]` is the best achievable maximum elimination degree when
/// the vertices of S are eliminated first.
pub fn exact_treewidth_capped(g: &Graph, cap: usize) -> Result<usize> {
    let n = g.n();
    // The table holds one byte per subset; 26 vertices already mean 64 MiB.
    let cap = cap.min(26);
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    if n <= 1 {
        return Ok(0);
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();

    // Number of vertices outside `eliminated | {v}` reachable from v through
    // eliminated vertices only: the degree of v at its elimination time.
    let elim_degree = |eliminated: u32, v: usize| -> u32 {
        let vbit = 1u32 << v;
        let mut seen = vbit;
        let mut frontier = vbit;
        while frontier != 0 {
            let mut nb = 0u32;
            let mut f = frontier;
            while f != 0 {
                let w = f.trailing_zeros() as usize;
                f &= f - 1;
                nb |= adj[w];
            }
            nb &= !seen;
            seen |= nb;
            frontier = nb & eliminated;
        }
        (seen & !eliminated & !vbit).count_ones()
    };

    let full: u32 = (1 << n) - 1;
    let mut dp = vec![u8::MAX; (full as usize) + 1];
    dp[0] = 0;
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s & !(1 << v);
            let sub = dp[rest as usize];
            if sub >= best {
                continue;
            }
            let deg = elim_degree(rest, v) as u8;
            let value = sub.max(deg);
            if value < best {
                best = value;
            }
        }
        dp[s as usize] = best;
    }
    Ok(dp[full as usize] as usize)
}

/// [`exact_treewidth_capped`] at the default cap of 22 vertices.
pub fn exact_treewidth(g: &Graph) -> Result<usize> {
    exact_treewidth_capped(g, TREEWIDTH_CAP)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BrambleViolation {
    EmptySet(usize),
    Disconnected(usize),
    NotTouching(usize, usize),
}

impl std::fmt::Display for BrambleViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BrambleViolation::EmptySet(i) => write!(f, "set {i} is empty"),
            BrambleViolation::Disconnected(i) => write!(f, "set {i} is not connected"),
            BrambleViolation::NotTouching(i, j) => write!(f, "sets {i} and {j} do not touch"),
        }
    }
}

/// Checks non-emptiness, per-set connectivity and pairwise touching; returns
/// the first violation found.
pub fn verify_bramble(g: &Graph, b: &Bramble) -> std::result::Result<(), BrambleViolation> {
    for (i, s) in b.sets.iter().enumerate() {
        if s.is_empty() {
            return Err(BrambleViolation::EmptySet(i));
        }
        if !g.induces_connected(s) {
            return Err(BrambleViolation::Disconnected(i));
        }
    }
    for i in 0..b.sets.len() {
        for j in i + 1..b.sets.len() {
            if !touch(g, &b.sets[i], &b.sets[j]) {
                return Err(BrambleViolation::NotTouching(i, j));
            }
        }
    }
    Ok(())
}

fn touch(g: &Graph, x: &[usize], y: &[usize]) -> bool {
    // Shared vertex (both sorted) ...
    let (mut i, mut j) = (0, 0);
    while i < x.len() && j < y.len() {
        match x[i].cmp(&y[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    // ... or an edge between the sets.
    x.iter()
        .any(|&u| g.neighbors(u).iter().any(|w| y.binary_search(w).is_ok()))
}

/// Exact minimum hitting-set size of a bramble, by branch and bound with a
/// greedy upper bound, a disjoint-packing lower bound, and branching on the
/// smallest remaining set.
pub fn bramble_order(g: &Graph, b: &Bramble) -> Result<usize> {
    bramble_order_capped(g, b, HITTING_SET_UNIVERSE_CAP, HITTING_SET_SETS_CAP)
}

pub fn bramble_order_capped(
    g: &Graph,
    b: &Bramble,
    universe_cap: usize,
    sets_cap: usize,
) -> Result<usize> {
    if g.n() > universe_cap {
        return Err(Error::BudgetExceeded(format!(
            "universe {} exceeds cap {universe_cap}",
            g.n()
        )));
    }
    if b.sets.len() > sets_cap {
        return Err(Error::BudgetExceeded(format!(
            "{} sets exceed cap {sets_cap}",
            b.sets.len()
        )));
    }
    if b.sets.iter().any(|s| s.is_empty()) {
        return Err(Error::PreconditionViolated("empty set cannot be hit".into()));
    }

    let mut masks: Vec<u64> = b
        .sets
        .iter()
        .map(|s| s.iter().fold(0u64, |m, &v| m | (1 << v)))
        .collect();
    masks.sort_unstable_by_key(|m| m.count_ones());
    masks.dedup();
    // A superset of another set is hit for free; drop it.
    let mut kept: Vec<u64> = Vec::with_capacity(masks.len());
    for &m in &masks {
        if !kept.iter().any(|&s| s & m == s) {
            kept.push(m);
        }
    }

    let greedy_ub = |sets: &[u64]| -> usize {
        let mut alive: Vec<u64> = sets.to_vec();
        let mut picks = 0;
        while !alive.is_empty() {
            let mut best_v = 0;
            let mut best_cover = 0;
            for v in 0..64 {
                let bit = 1u64 << v;
                let cover = alive.iter().filter(|&&s| s & bit != 0).count();
                if cover > best_cover {
                    best_cover = cover;
                    best_v = v;
                }
            }
            let bit = 1u64 << best_v;
            alive.retain(|&s| s & bit == 0);
            picks += 1;
        }
        picks
    };
    let packing_lb = |sets: &[u64]| -> usize {
        let mut used: u64 = 0;
        let mut count = 0;
        for &s in sets {
            if s & used == 0 {
                used |= s;
                count += 1;
            }
        }
        count
    };

    fn branch(alive: &[u64], chosen: usize, best: &mut usize, lb: &dyn Fn(&[u64]) -> usize) {
        if alive.is_empty() {
            *best = (*best).min(chosen);
            return;
        }
        if chosen + lb(alive) >= *best {
            return;
        }
        let pivot = *alive.iter().min_by_key(|s| s.count_ones()).unwrap();
        let mut bits = pivot;
        while bits != 0 {
            let v = bits.trailing_zeros();
            bits &= bits - 1;
            let bit = 1u64 << v;
            let next: Vec<u64> = alive.iter().copied().filter(|&s| s & bit == 0).collect();
            branch(&next, chosen + 1, best, lb);
        }
    }

    let mut best = greedy_ub(&kept);
    branch(&kept, 0, &mut best, &packing_lb);
    Ok(best)
}
