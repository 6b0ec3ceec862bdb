//! Exact hamiltonian path and cycle queries.
//!
//! Two interchangeable engines sit behind one facade:
//!
//! * **Subset DP** — dynamic programming over (visited set, end vertex).
//!   Answers one start against all ends at once, which makes all-pairs
//!   tables cheap, but its table is `2^n` words, so it only runs on small
//!   orders (automatically up to [`24`](EngineChoice::Auto) vertices,
//!   at most 26 when forced).
//! * **Backtracking** — pruned depth-first search. Slower in the worst
//!   case but runs at any order up to the 64-vertex solver cap and is the
//!   only engine that honors required-edge constraints.
//!
//! Both engines return identical answers, and identical *witnesses*: a
//! witness is always the lexicographically least vertex sequence for the
//! query under a canonical orientation (paths are searched from the
//! smaller endpoint and flipped as needed; cycles start at vertex 0).
//! Results never depend on thread count or engine choice, so any query can
//! be replayed cheaply on the other engine as a cross-check.
//!
//! Every operation comes in two flavors: a plain form with default
//! configuration and no budget, and a `_with` form taking a [`SolveConfig`]
//! and a [`Meter`]. The meter counts backtracking node expansions (the DP
//! does no per-node work worth metering and reports 0) and can carry a
//! budget; exceeding it aborts the search with
//! [`SolveError::BudgetExhausted`] rather than returning a wrong answer.

mod backtrack;
mod dp;
mod oracle;

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

use crate::graph::{Graph, SOLVER_VERTEX_CAP};

/// Errors reported by the solving layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    /// The graph has more vertices than the selected engine can handle.
    #[error("graph order {order} exceeds this engine's cap of {cap} vertices")]
    TooLarge { order: usize, cap: usize },
    /// The query needs a minimum order (cycles need 3 vertices).
    #[error("graph order {order} is below the minimum of {min} for this query")]
    TooSmall { order: usize, min: usize },
    /// An endpoint does not name a vertex of the graph.
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    OutOfRange { vertex: u32, order: usize },
    /// Path queries need two distinct endpoints.
    #[error("path endpoints coincide at vertex {vertex}")]
    SameVertex { vertex: u32 },
    /// A required edge is absent from the graph.
    #[error("required edge ({u}, {v}) is not an edge of the graph")]
    EdgeNotInGraph { u: u32, v: u32 },
    /// The meter's expansion budget ran out before the search finished.
    #[error("search budget exhausted")]
    BudgetExhausted,
}

/// Which engine to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EngineChoice {
    /// Subset DP for orders up to 24, backtracking beyond.
    #[default]
    Auto,
    /// Force the subset DP (errors above 26 vertices).
    SubsetDp,
    /// Force the backtracker.
    Backtracking,
}

impl fmt::Display for EngineChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EngineChoice::Auto => "auto",
            EngineChoice::SubsetDp => "dp",
            EngineChoice::Backtracking => "backtrack",
        })
    }
}

/// How to run a query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveConfig {
    pub engine: EngineChoice,
    /// Spread independent subqueries (pair-table rows, for instance) over
    /// the rayon pool. Ignored when the `parallel` feature is compiled
    /// out. Answers are identical either way.
    pub parallel: bool,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            engine: EngineChoice::Auto,
            parallel: true,
        }
    }
}

/// Expansion counter with an optional abort budget, shared across threads.
#[derive(Debug, Default)]
pub struct Meter {
    expansions: AtomicU64,
    budget: Option<u64>,
}

impl Meter {
    /// Count expansions but never abort.
    pub fn unlimited() -> Self {
        Meter::default()
    }

    /// Abort any metered search once `budget` expansions have been spent.
    pub fn with_budget(budget: u64) -> Self {
        Meter {
            expansions: AtomicU64::new(0),
            budget: Some(budget),
        }
    }

    /// Total expansions spent so far.
    pub fn expansions(&self) -> u64 {
        self.expansions.load(Ordering::Relaxed)
    }

    /// Record `k` expansions; `false` once the budget is exceeded.
    pub(crate) fn spend(&self, k: u64) -> bool {
        let before = self.expansions.fetch_add(k, Ordering::Relaxed);
        match self.budget {
            None => true,
            Some(budget) => before + k <= budget,
        }
    }
}

/// A simple path (or a cycle cut open at its starting vertex), stored as
/// the vertex sequence it visits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    vertices: Vec<u32>,
}

impl Path {
    pub(crate) fn new_unchecked(vertices: Vec<u32>) -> Self {
        debug_assert!(!vertices.is_empty());
        Path { vertices }
    }

    /// The visited vertices, in order.
    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    /// First and last vertex.
    pub fn endpoints(&self) -> (u32, u32) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    /// Does the path traverse the undirected edge `(u, v)`?
    pub fn contains_edge(&self, u: u32, v: u32) -> bool {
        self.vertices
            .windows(2)
            .any(|w| (w[0], w[1]) == (u, v) || (w[0], w[1]) == (v, u))
    }

    /// Is this a hamiltonian path of `g`: every vertex exactly once, every
    /// step an edge?
    pub fn is_hamiltonian_path_of(&self, g: &Graph) -> bool {
        let n = g.order();
        if self.vertices.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &v in &self.vertices {
            if v as usize >= n || seen[v as usize] {
                return false;
            }
            seen[v as usize] = true;
        }
        self.vertices.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    /// Is this a hamiltonian cycle of `g` once the closing edge from the
    /// last vertex back to the first is added?
    pub fn is_hamiltonian_cycle_of(&self, g: &Graph) -> bool {
        g.order() >= 3
            && self.is_hamiltonian_path_of(g)
            && g.has_edge(self.vertices[0], *self.vertices.last().unwrap())
    }
}

/// Symmetric all-pairs answer table: bit `t` of row `s` says whether a
/// hamiltonian path joins `s` and `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairTable {
    n: usize,
    rows: Vec<u64>,
}

impl PairTable {
    /// Order of the underlying graph.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Is the unordered pair `{u, v}` joined by a hamiltonian path?
    ///
    /// # Panics
    /// If either vertex is out of range.
    pub fn connected(&self, u: u32, v: u32) -> bool {
        assert!(
            (u as usize) < self.n && (v as usize) < self.n,
            "vertex out of range"
        );
        self.rows[u as usize] >> v & 1 == 1
    }

    /// Row for `v` as a bitmask over the other vertices.
    pub fn row(&self, v: u32) -> u64 {
        self.rows[v as usize]
    }

    /// Number of joined unordered pairs.
    pub fn count(&self) -> u64 {
        self.rows
            .iter()
            .map(|r| u64::from(r.count_ones()))
            .sum::<u64>()
            / 2
    }

    /// All joined unordered pairs `(u, v)` with `u < v`, in ascending order.
    pub fn pairs(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let mut high = self.rows[u] & (u64::MAX << u << 1); // bits above u
            while high != 0 {
                let v = high.trailing_zeros();
                high &= high - 1;
                out.push((u as u32, v));
            }
        }
        out
    }

    /// Is every pair of distinct vertices joined? (Vacuously true below
    /// order 2.)
    pub fn all_pairs_connected(&self) -> bool {
        let full = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        (0..self.n).all(|v| self.rows[v] == full & !(1 << v))
    }
}

/// The engine a configuration resolves to at a given graph order, or an
/// error if a forced engine cannot run there. Never returns `Auto`.
pub fn selected_engine(order: usize, config: &SolveConfig) -> Result<EngineChoice, SolveError> {
    match config.engine {
        EngineChoice::Auto => Ok(if order <= dp::DP_AUTO_MAX {
            EngineChoice::SubsetDp
        } else {
            EngineChoice::Backtracking
        }),
        EngineChoice::SubsetDp => {
            if order <= dp::DP_FORCED_MAX {
                Ok(EngineChoice::SubsetDp)
            } else {
                Err(SolveError::TooLarge {
                    order,
                    cap: dp::DP_FORCED_MAX,
                })
            }
        }
        EngineChoice::Backtracking => Ok(EngineChoice::Backtracking),
    }
}

/// Is there a hamiltonian path with endpoints `s` and `t`?
pub fn has_ham_path(g: &Graph, s: u32, t: u32) -> Result<bool, SolveError> {
    has_ham_path_with(g, s, t, &SolveConfig::default(), &Meter::unlimited())
}

/// [`has_ham_path`] with explicit configuration and metering.
pub fn has_ham_path_with(
    g: &Graph,
    s: u32,
    t: u32,
    config: &SolveConfig,
    meter: &Meter,
) -> Result<bool, SolveError> {
    let masks = solver_masks(g)?;
    check_endpoints(g, s, t)?;
    let (a, b) = orient(s, t);
    match selected_engine(g.order(), config)? {
        EngineChoice::SubsetDp => Ok(dp::path_row(masks, a) >> b & 1 == 1),
        _ => Ok(backtrack::search_path(masks, a, b, &[], meter)?.is_some()),
    }
}

/// A hamiltonian path from `s` to `t`, if one exists: the
/// lexicographically least such path under canonical orientation, so both
/// engines and any thread count report the same witness.
pub fn ham_path_witness(g: &Graph, s: u32, t: u32) -> Result<Option<Path>, SolveError> {
    ham_path_witness_with(g, s, t, &SolveConfig::default(), &Meter::unlimited())
}

/// [`ham_path_witness`] with explicit configuration and metering.
pub fn ham_path_witness_with(
    g: &Graph,
    s: u32,
    t: u32,
    config: &SolveConfig,
    meter: &Meter,
) -> Result<Option<Path>, SolveError> {
    let masks = solver_masks(g)?;
    check_endpoints(g, s, t)?;
    let (a, b) = orient(s, t);
    let found = match selected_engine(g.order(), config)? {
        EngineChoice::SubsetDp => dp::lex_witness_path(masks, a, b),
        _ => backtrack::search_path(masks, a, b, &[], meter)?,
    };
    Ok(found.map(|seq| oriented_path(seq, s)))
}

/// The full symmetric table of hamiltonian-path-joined pairs.
pub fn ham_pair_table(g: &Graph) -> Result<PairTable, SolveError> {
    ham_pair_table_with(g, &SolveConfig::default(), &Meter::unlimited())
}

/// [`ham_pair_table`] with explicit configuration and metering. Rows are
/// computed independently (and in parallel when configured); the result
/// does not depend on scheduling.
pub fn ham_pair_table_with(
    g: &Graph,
    config: &SolveConfig,
    meter: &Meter,
) -> Result<PairTable, SolveError> {
    let masks = solver_masks(g)?;
    let n = g.order();
    let rows = match selected_engine(n, config)? {
        EngineChoice::SubsetDp => run_indexed(n, config, |s| Ok(dp::path_row(masks, s)))?,
        _ => {
            // One search per unordered pair, mirrored afterwards.
            let half = run_indexed(n, config, |s| {
                let mut row = 0u64;
                for t in s + 1..n {
                    if backtrack::search_path(masks, s, t, &[], meter)?.is_some() {
                        row |= 1 << t;
                    }
                }
                Ok(row)
            })?;
            mirror(half)
        }
    };
    debug_assert!((0..n).all(|u| (0..n).all(|v| rows[u] >> v & 1 == rows[v] >> u & 1)));
    Ok(PairTable { n, rows })
}

/// Is the graph hamiltonian? Needs order at least 3.
pub fn has_ham_cycle(g: &Graph) -> Result<bool, SolveError> {
    has_ham_cycle_with(g, &SolveConfig::default(), &Meter::unlimited())
}

/// [`has_ham_cycle`] with explicit configuration and metering.
pub fn has_ham_cycle_with(
    g: &Graph,
    config: &SolveConfig,
    meter: &Meter,
) -> Result<bool, SolveError> {
    let masks = solver_masks(g)?;
    check_cycle_order(g)?;
    match selected_engine(g.order(), config)? {
        EngineChoice::SubsetDp => Ok(dp::cycle_exists(masks)),
        _ => Ok(backtrack::search_cycle(masks, meter)?.is_some()),
    }
}

/// A hamiltonian cycle, if one exists, as the lexicographically least
/// vertex sequence starting at vertex 0 (closing edge implicit).
pub fn ham_cycle_witness(g: &Graph) -> Result<Option<Path>, SolveError> {
    ham_cycle_witness_with(g, &SolveConfig::default(), &Meter::unlimited())
}

/// [`ham_cycle_witness`] with explicit configuration and metering.
pub fn ham_cycle_witness_with(
    g: &Graph,
    config: &SolveConfig,
    meter: &Meter,
) -> Result<Option<Path>, SolveError> {
    let masks = solver_masks(g)?;
    check_cycle_order(g)?;
    let found = match selected_engine(g.order(), config)? {
        EngineChoice::SubsetDp => dp::lex_witness_cycle(masks),
        _ => backtrack::search_cycle(masks, meter)?,
    };
    Ok(found.map(Path::new_unchecked))
}

/// A hamiltonian path from `s` to `t` that traverses every edge in
/// `required`, if one exists.
///
/// With an empty `required` list this is exactly [`ham_path_witness`] and
/// follows the configured engine; otherwise the constrained search always
/// runs on the backtracker (the DP cannot track edge constraints), with
/// the same lexicographic witness guarantee.
pub fn find_ham_path_with_required_edges(
    g: &Graph,
    s: u32,
    t: u32,
    required: &[(u32, u32)],
) -> Result<Option<Path>, SolveError> {
    find_ham_path_with_required_edges_with(
        g,
        s,
        t,
        required,
        &SolveConfig::default(),
        &Meter::unlimited(),
    )
}

/// [`find_ham_path_with_required_edges`] with explicit configuration and
/// metering.
pub fn find_ham_path_with_required_edges_with(
    g: &Graph,
    s: u32,
    t: u32,
    required: &[(u32, u32)],
    config: &SolveConfig,
    meter: &Meter,
) -> Result<Option<Path>, SolveError> {
    let masks = solver_masks(g)?;
    check_endpoints(g, s, t)?;
    let mut req: Vec<(u32, u32)> = Vec::with_capacity(required.len());
    for &(u, v) in required {
        if !g.has_edge(u, v) {
            return Err(SolveError::EdgeNotInGraph { u, v });
        }
        let edge = (u.min(v), u.max(v));
        if !req.contains(&edge) {
            req.push(edge);
        }
    }
    if req.is_empty() {
        return ham_path_witness_with(g, s, t, config, meter);
    }
    let (a, b) = orient(s, t);
    let found = backtrack::search_path(masks, a, b, &req, meter)?;
    Ok(found.map(|seq| oriented_path(seq, s)))
}

/// Exact number of hamiltonian paths joining `s` and `t`, via the naive
/// reference counter. Capped at 16 vertices; meant for cross-checks, not
/// production queries.
pub fn count_ham_paths(g: &Graph, s: u32, t: u32) -> Result<u64, SolveError> {
    let masks = solver_masks(g)?;
    check_endpoints(g, s, t)?;
    if g.order() > oracle::ORACLE_MAX {
        return Err(SolveError::TooLarge {
            order: g.order(),
            cap: oracle::ORACLE_MAX,
        });
    }
    let (a, b) = orient(s, t);
    Ok(oracle::count_paths(masks, a, b))
}

fn solver_masks(g: &Graph) -> Result<&[u64], SolveError> {
    g.masks().ok_or(SolveError::TooLarge {
        order: g.order(),
        cap: SOLVER_VERTEX_CAP,
    })
}

fn check_endpoints(g: &Graph, s: u32, t: u32) -> Result<(), SolveError> {
    for v in [s, t] {
        if v as usize >= g.order() {
            return Err(SolveError::OutOfRange {
                vertex: v,
                order: g.order(),
            });
        }
    }
    if s == t {
        return Err(SolveError::SameVertex { vertex: s });
    }
    Ok(())
}

fn check_cycle_order(g: &Graph) -> Result<(), SolveError> {
    if g.order() < 3 {
        return Err(SolveError::TooSmall {
            order: g.order(),
            min: 3,
        });
    }
    Ok(())
}

/// Canonical search orientation: always from the smaller endpoint.
fn orient(s: u32, t: u32) -> (usize, usize) {
    (s.min(t) as usize, s.max(t) as usize)
}

/// Flip a canonically oriented witness so it starts at the caller's `s`.
fn oriented_path(mut seq: Vec<u32>, s: u32) -> Path {
    if seq[0] != s {
        seq.reverse();
    }
    Path::new_unchecked(seq)
}

/// Compute one value per index in `0..n`, on the rayon pool when both the
/// `parallel` feature and the configuration ask for it. The indexed jobs
/// must be independent, so the result never depends on scheduling.
pub(crate) fn run_indexed<T, F>(
    n: usize,
    config: &SolveConfig,
    job: F,
) -> Result<Vec<T>, SolveError>
where
    T: Send,
    F: Fn(usize) -> Result<T, SolveError> + Sync,
{
    #[cfg(feature = "parallel")]
    if config.parallel {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(&job).collect();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = config;
    (0..n).map(job).collect()
}

/// Reflect an upper-triangular row set into a full symmetric table.
fn mirror(mut rows: Vec<u64>) -> Vec<u64> {
    let n = rows.len();
    for s in 0..n {
        for t in s + 1..n {
            if rows[s] >> t & 1 == 1 {
                rows[t] |= 1 << s;
            }
        }
    }
    rows
}
