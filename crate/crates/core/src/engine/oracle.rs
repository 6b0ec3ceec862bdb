//! Deliberately naive path counter used to cross-check the real engines.
//!
//! Plain recursive enumeration with no pruning and no shared state, kept
//! structurally independent from the DP and the backtracker so a bug in
//! their pruning logic cannot hide here. Exponential, hence the small cap.

/// Largest order accepted by [`count_paths`].
pub(super) const ORACLE_MAX: usize = 16;

/// Number of distinct hamiltonian paths from `s` to `t`, each counted once
/// in that orientation.
pub(super) fn count_paths(masks: &[u64], s: usize, t: usize) -> u64 {
    let n = masks.len();
    debug_assert!(n <= ORACLE_MAX && s != t);
    let full = (1u64 << n) - 1;
    extend(masks, full, 1 << s, s, t)
}

fn extend(masks: &[u64], full: u64, visited: u64, cur: usize, t: usize) -> u64 {
    if visited == full {
        return (cur == t) as u64;
    }
    let mut total = 0;
    let mut next = masks[cur] & !visited;
    while next != 0 {
        let w = next.trailing_zeros() as usize;
        next &= next - 1;
        total += extend(masks, full, visited | 1 << w, w, t);
    }
    total
}
