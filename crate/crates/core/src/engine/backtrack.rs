//! Pruned depth-first backtracking search.
//!
//! Handles graphs beyond the DP's subset-table cap and is the only engine
//! that accepts required-edge constraints. The search is exhaustive: with
//! an unlimited meter a `None` answer is a proof of absence, not a timeout.
//! Neighbors are tried in ascending vertex order, so the first witness
//! found is the lexicographically least extension of its prefix; together
//! with a fixed starting vertex this makes every reported witness
//! deterministic.
//!
//! Each prune only ever discards provably dead prefixes:
//! * connectivity — the unvisited region plus the current vertex (plus the
//!   closing vertex, for cycles) must be connected, or no single path can
//!   sweep it;
//! * degree — an unvisited vertex that must be passed through needs at
//!   least two usable neighbors; the far endpoint needs one;
//! * forced moves — a pending required edge at the current vertex must be
//!   the next step, and two pending required edges there are a dead end;
//! * endpoint gating — the far endpoint is only enterable as the last
//!   vertex.

use super::{Meter, SolveError};

/// Search for a hamiltonian path from `s` to `t` that contains every edge
/// in `required`. Endpoint validation, dedup, and orientation are the
/// caller's job; `required` holds edges of the graph with `s != t`.
pub(super) fn search_path(
    masks: &[u64],
    s: usize,
    t: usize,
    required: &[(u32, u32)],
    meter: &Meter,
) -> Result<Option<Vec<u32>>, SolveError> {
    let n = masks.len();
    debug_assert!(s != t && s < n && t < n);
    let mut req_adj = vec![0u64; n];
    for &(u, v) in required {
        req_adj[u as usize] |= 1 << v;
        req_adj[v as usize] |= 1 << u;
    }
    // An endpoint has one incident path edge, interior vertices have two,
    // so an overloaded vertex rules the whole query out before searching.
    for (v, adj) in req_adj.iter().enumerate() {
        let cap = if v == s || v == t { 1 } else { 2 };
        if adj.count_ones() > cap {
            return Ok(None);
        }
    }
    let mut search = Search {
        masks,
        full: full_mask(n),
        target: Some(t),
        visited: 1 << s,
        path: vec![s as u32],
        req_adj,
        req_left: required.len(),
        meter,
    };
    Ok(if search.dfs(s)? {
        Some(search.path)
    } else {
        None
    })
}

/// Search for a hamiltonian cycle, reported as a vertex sequence starting
/// at 0 with the closing edge back to 0 implicit.
pub(super) fn search_cycle(masks: &[u64], meter: &Meter) -> Result<Option<Vec<u32>>, SolveError> {
    let n = masks.len();
    debug_assert!(n >= 3);
    let mut search = Search {
        masks,
        full: full_mask(n),
        target: None,
        visited: 1,
        path: vec![0],
        req_adj: vec![0; n],
        req_left: 0,
        meter,
    };
    Ok(if search.dfs(0)? {
        Some(search.path)
    } else {
        None
    })
}

fn full_mask(n: usize) -> u64 {
    debug_assert!(0 < n && n <= 64);
    u64::MAX >> (64 - n)
}

struct Search<'a> {
    masks: &'a [u64],
    full: u64,
    /// `Some(t)` searches a path ending at `t`; `None` searches a cycle
    /// that closes back to vertex 0.
    target: Option<usize>,
    visited: u64,
    path: Vec<u32>,
    /// Per-vertex bitmask of required edges not yet traversed.
    req_adj: Vec<u64>,
    req_left: usize,
    meter: &'a Meter,
}

impl Search<'_> {
    /// Extend the current prefix, which ends at `cur`. On success the
    /// finished witness is left in `self.path`.
    fn dfs(&mut self, cur: usize) -> Result<bool, SolveError> {
        if !self.meter.spend(1) {
            return Err(SolveError::BudgetExhausted);
        }
        if self.visited == self.full {
            return Ok(self.req_left == 0
                && match self.target {
                    Some(t) => cur == t,
                    None => self.masks[cur] & 1 != 0,
                });
        }

        let rem = self.full & !self.visited;
        let region = match self.target {
            Some(_) => rem | 1 << cur,
            None => rem | 1 << cur | 1,
        };
        if !connected_within(self.masks, region, cur) {
            return Ok(false);
        }
        let mut scan = rem;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let needed = if self.target == Some(v) { 1 } else { 2 };
            if (self.masks[v] & region).count_ones() < needed {
                return Ok(false);
            }
        }
        // For cycles the closing vertex also needs a usable neighbor.
        if self.target.is_none() && self.masks[0] & region == 0 {
            return Ok(false);
        }

        let pending = self.req_adj[cur];
        if pending.count_ones() >= 2 {
            return Ok(false);
        }
        let mut cand = if pending != 0 {
            pending
        } else {
            self.masks[cur]
        };
        cand &= !self.visited;
        if let Some(t) = self.target {
            if rem != 1 << t {
                cand &= !(1 << t);
            }
        }
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let req_edge = self.req_adj[cur] >> w & 1 == 1;
            if req_edge {
                self.req_adj[cur] &= !(1 << w);
                self.req_adj[w] &= !(1 << cur);
                self.req_left -= 1;
            }
            self.visited |= 1 << w;
            self.path.push(w as u32);
            if self.dfs(w)? {
                return Ok(true);
            }
            self.path.pop();
            self.visited &= !(1 << w);
            if req_edge {
                self.req_adj[cur] |= 1 << w;
                self.req_adj[w] |= 1 << cur;
                self.req_left += 1;
            }
        }
        Ok(false)
    }
}

/// Is the `allowed` region connected when explored from `seed`?
fn connected_within(masks: &[u64], allowed: u64, seed: usize) -> bool {
    let mut component = 1u64 << seed;
    let mut frontier = component;
    while frontier != 0 {
        let mut grown = 0;
        let mut scan = frontier;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            grown |= masks[v] & allowed;
        }
        frontier = grown & !component;
        component |= frontier;
    }
    component == allowed
}
