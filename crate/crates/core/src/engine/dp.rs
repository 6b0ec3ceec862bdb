//! Subset dynamic programming over (visited set, end vertex).
//!
//! For a fixed start `s`, `dp[mask]` is the set of vertices `e` such that
//! some path starts at `s`, visits exactly the vertices of `mask`, and ends
//! at `e`. Masks are visited in increasing numeric order, which is a valid
//! topological order because extending a path only adds bits. One run from
//! `s` answers "is there a hamiltonian path from `s` to `t`" for every `t`
//! at once, which is what all-pairs tables want.
//!
//! The table holds `2^n` end-sets, so this engine is capped well below the
//! global 64-vertex limit; the backtracker covers the rest.

/// Largest order the automatic engine selection hands to the DP.
pub(super) const DP_AUTO_MAX: usize = 24;

/// Largest order accepted when the DP engine is forced explicitly: the
/// table is `2^n` u32 words, so 26 vertices already cost 256 MiB.
pub(super) const DP_FORCED_MAX: usize = 26;

/// Full (visited-set → end-set) table for paths starting at `s`.
fn reach_from(masks: &[u64], s: usize) -> Vec<u32> {
    let n = masks.len();
    debug_assert!(n <= DP_FORCED_MAX && s < n);
    let mut dp = vec![0u32; 1 << n];
    dp[1 << s] = 1 << s;
    for mask in (1 << s)..1usize << n {
        let ends = dp[mask];
        if ends == 0 {
            continue;
        }
        let mut scan = ends;
        while scan != 0 {
            let e = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let mut next = masks[e] & !(mask as u64);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                dp[mask | 1 << w] |= 1 << w;
            }
        }
    }
    dp
}

/// Bitmask of all `t` such that a hamiltonian path runs from `s` to `t`.
pub(super) fn path_row(masks: &[u64], s: usize) -> u64 {
    let full = (1usize << masks.len()) - 1;
    let ends = reach_from(masks, s)[full] as u64;
    ends & !(1 << s)
}

/// The lexicographically least hamiltonian path from `a` to `b`, if any.
///
/// Greedy reconstruction: a prefix ending at `u` with unvisited set `c`
/// extends to `b` exactly when `u` lies in `dp_b[c | u]` — the table of
/// paths from `b`, read backwards. Taking the least viable neighbor at each
/// step therefore builds the lexicographic minimum without backtracking.
pub(super) fn lex_witness_path(masks: &[u64], a: usize, b: usize) -> Option<Vec<u32>> {
    let n = masks.len();
    debug_assert!(a != b);
    let full = (1usize << n) - 1;
    let dp_b = reach_from(masks, b);
    if dp_b[full] >> a & 1 == 0 {
        return None;
    }
    let mut seq = Vec::with_capacity(n);
    let mut visited = 1usize << a;
    let mut cur = a;
    seq.push(a as u32);
    while seq.len() < n {
        let c = full & !visited;
        let viable = masks[cur] & dp_b[c] as u64;
        debug_assert!(viable != 0, "extendable prefix must have a viable move");
        let w = viable.trailing_zeros() as usize;
        seq.push(w as u32);
        visited |= 1 << w;
        cur = w;
    }
    debug_assert_eq!(cur, b);
    Some(seq)
}

/// Whether a hamiltonian cycle exists (order 3 or more assumed): a
/// hamiltonian path from vertex 0 whose far end is adjacent to 0 closes up.
pub(super) fn cycle_exists(masks: &[u64]) -> bool {
    let full = (1usize << masks.len()) - 1;
    let ends = reach_from(masks, 0)[full] as u64;
    ends & masks[0] != 0
}

/// The lexicographically least hamiltonian cycle, written as a vertex
/// sequence starting at 0 (the closing edge back to 0 is implicit).
///
/// Uses a multi-target table over subsets of `V \ {0}`: `dp[mask]` is the
/// set of vertices `v` in `mask` from which a path can cover exactly `mask`
/// and stop at some neighbor of 0. The cycle is then rebuilt greedily as in
/// [`lex_witness_path`].
pub(super) fn lex_witness_cycle(masks: &[u64]) -> Option<Vec<u32>> {
    let n = masks.len();
    let full = (1usize << n) - 1;
    let mut dp = vec![0u32; 1 << n];
    let mut seed = masks[0];
    while seed != 0 {
        let e = seed.trailing_zeros() as usize;
        seed &= seed - 1;
        dp[1 << e] = 1 << e;
    }
    for mask in 2..1usize << n {
        if mask & 1 != 0 {
            continue; // vertex 0 never belongs to these subsets
        }
        let starts = dp[mask];
        if starts == 0 {
            continue;
        }
        let mut scan = starts;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let mut prev = masks[v] & !(mask as u64) & !1;
            while prev != 0 {
                let w = prev.trailing_zeros() as usize;
                prev &= prev - 1;
                dp[mask | 1 << w] |= 1 << w;
            }
        }
    }

    let mut unvisited = full & !1;
    if dp[unvisited] as u64 & masks[0] == 0 {
        return None;
    }
    let mut seq = Vec::with_capacity(n);
    seq.push(0u32);
    let mut cur = 0usize;
    while unvisited != 0 {
        let viable = masks[cur] & dp[unvisited] as u64;
        debug_assert!(
            viable != 0,
            "extendable cycle prefix must have a viable move"
        );
        let w = viable.trailing_zeros() as usize;
        seq.push(w as u32);
        unvisited &= !(1 << w);
        cur = w;
    }
    debug_assert!(masks[cur] & 1 == 1, "cycle must close back to 0");
    Some(seq)
}
