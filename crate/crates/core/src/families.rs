//! Named graph constructions.
//!
//! * [`petersen`] — the classic 3-regular hypohamiltonian graph;
//! * [`clique_with_pendant_path`] — a complete graph with a dangling path,
//!   the minimal example of a graph whose strung pairs all share one
//!   endpoint (the path's leaf);
//! * [`gamma`] / [`gamma_rotation`] — a 3-regular chorded-cycle family
//!   that is hamiltonian-connected while meeting the minimum-degree and
//!   edge-count conditions with equality, together with its defining
//!   rotational symmetry;
//! * [`attach_cliques`] and its ratio bounds — the amplification
//!   construction that pushes the pair connected ratio of nonhamiltonian
//!   graphs arbitrarily close to 1.

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexPermutation};
use crate::metrics::Ratio;

/// Errors from family constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    /// Parameters outside a family's stated domain.
    #[error("{0}")]
    Domain(String),
    /// Two attachment edges touch; they must be pairwise vertex-disjoint.
    #[error("attachment edges share vertex {vertex}")]
    EdgesShareVertex { vertex: u32 },
    /// An attachment edge is absent from the base graph.
    #[error("attachment edge ({u}, {v}) is not an edge of the base graph")]
    EdgeNotInBase { u: u32, v: u32 },
    /// The underlying graph construction failed.
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The Petersen graph: outer 5-cycle 0–4, inner pentagram 5–9, spokes
/// joining them. Nonhamiltonian, yet 30 of its 45 vertex pairs are joined
/// by hamiltonian paths.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5)); // outer cycle
        edges.push((i, i + 5)); // spoke
        edges.push((i + 5, (i + 2) % 5 + 5)); // inner pentagram
    }
    Graph::from_edge_list(10, &edges).expect("fixed edge list is valid")
}

/// A complete graph on `m` vertices (`0..m`) with a pendant path attached
/// at vertex `m-1`, extending through `m, m+1, ...` up to order `n`.
///
/// Every hamiltonian path must sweep the tail first, so the strung pairs
/// are exactly the leaf against each clique vertex other than the
/// attachment point: `m-1` pairs in total, all sharing the leaf.
pub fn clique_with_pendant_path(m: usize, n: usize) -> Result<Graph, FamilyError> {
    if m < 3 {
        return Err(FamilyError::Domain(format!(
            "the clique needs at least 3 vertices, got {m}"
        )));
    }
    if n <= m {
        return Err(FamilyError::Domain(format!(
            "total order {n} must exceed the clique order {m} to leave a tail"
        )));
    }
    let mut edges = Vec::new();
    for u in 0..m as u32 {
        for v in u + 1..m as u32 {
            edges.push((u, v));
        }
    }
    for v in m as u32..n as u32 {
        edges.push((v - 1, v));
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// The chorded-cycle graph Γ(n) for `n` a positive multiple of 3: a cycle
/// on `2n` vertices plus `n` chords, three per block of consecutive cycle
/// positions:
///
/// for each `i` in `0..n/3`, the chords `(3i, 3i+n)`, `(3i+1, 3i+n+2)`,
/// and `(3i+2, 3i+n+1)`, all mod `2n`.
///
/// The result is 3-regular with exactly `3n` edges, so it meets the
/// minimum-degree and edge-count conditions for hamiltonian-connectedness
/// with equality, and rotation by 3 ([`gamma_rotation`]) preserves it.
pub fn gamma(n: usize) -> Result<Graph, FamilyError> {
    check_gamma_order(n)?;
    let two_n = (2 * n) as u32;
    let mut edges = Vec::with_capacity(3 * n);
    for j in 0..two_n {
        edges.push((j, (j + 1) % two_n));
    }
    let n = n as u32;
    for i in 0..n / 3 {
        let b = 3 * i;
        edges.push((b % two_n, (b + n) % two_n));
        edges.push(((b + 1) % two_n, (b + n + 2) % two_n));
        edges.push(((b + 2) % two_n, (b + n + 1) % two_n));
    }
    Ok(Graph::from_edge_list(2 * n as usize, &edges)?)
}

/// The rotation `j ↦ j + 3 (mod 2n)`, an automorphism of [`gamma`]`(n)`.
pub fn gamma_rotation(n: usize) -> Result<VertexPermutation, FamilyError> {
    check_gamma_order(n)?;
    let two_n = 2 * n as u32;
    let map: Vec<u32> = (0..two_n).map(|j| (j + 3) % two_n).collect();
    Ok(VertexPermutation::new(map).expect("a rotation is a bijection"))
}

fn check_gamma_order(n: usize) -> Result<(), FamilyError> {
    if n < 3 || n % 3 != 0 {
        return Err(FamilyError::Domain(format!(
            "gamma is defined for positive multiples of 3, got {n}"
        )));
    }
    Ok(())
}

/// Attach a fresh `k`-clique to each of the given pairwise vertex-disjoint
/// edges of `base`: the `i`-th clique occupies vertices
/// `m + i*k .. m + (i+1)*k` (where `m` is the base order) and every one of
/// its vertices is joined to both endpoints of the `i`-th edge.
///
/// With `s = edges.len()` attachment edges the result has `m + s*k`
/// vertices. Any path can trade a visit of an attachment edge for a sweep
/// of its clique, which is what drives the pair connected ratio of the
/// result toward `(s-1)/s` as `k` grows — see [`gk_lower_bound`].
pub fn attach_cliques(base: &Graph, edges: &[(u32, u32)], k: usize) -> Result<Graph, FamilyError> {
    let s = edges.len();
    if s < 2 {
        return Err(FamilyError::Domain(format!(
            "need at least two attachment edges to join pairs across cliques, got {s}"
        )));
    }
    if k == 0 {
        return Err(FamilyError::Domain("clique size must be at least 1".into()));
    }
    let m = base.order();
    let order = m + s * k;
    if order > crate::graph::SOLVER_VERTEX_CAP {
        return Err(FamilyError::Domain(format!(
            "attachment would have order {order}, beyond the {} vertex solver cap",
            crate::graph::SOLVER_VERTEX_CAP
        )));
    }
    let mut used = vec![false; m];
    for &(u, v) in edges {
        if !base.has_edge(u, v) {
            return Err(FamilyError::EdgeNotInBase { u, v });
        }
        for w in [u, v] {
            if used[w as usize] {
                return Err(FamilyError::EdgesShareVertex { vertex: w });
            }
            used[w as usize] = true;
        }
    }

    let mut all = base.edges().to_vec();
    for (i, &(u, v)) in edges.iter().enumerate() {
        let lo = (m + i * k) as u32;
        let hi = (m + (i + 1) * k) as u32;
        for a in lo..hi {
            all.push((u, a));
            all.push((v, a));
            for b in a + 1..hi {
                all.push((a, b));
            }
        }
    }
    Ok(Graph::from_edge_list(order, &all)?)
}

/// Closed-form lower bound `s(s-1)k² / ((m+sk)(m+sk-1))` on the pair
/// connected ratio of [`attach_cliques`] output, valid whenever the base
/// is connected and nonhamiltonian with order `m ≥ 2s`: pairs taken from
/// two different cliques are always strung. Tends to `(s-1)/s` as `k → ∞`.
pub fn gk_lower_bound(s: usize, m: usize, k: usize) -> Result<Ratio, FamilyError> {
    if s < 2 {
        return Err(FamilyError::Domain(format!(
            "need at least 2 cliques, got {s}"
        )));
    }
    if m < 2 * s {
        return Err(FamilyError::Domain(format!(
            "base order {m} cannot host {s} disjoint edges"
        )));
    }
    if k == 0 {
        return Err(FamilyError::Domain("clique size must be at least 1".into()));
    }
    let (s, m, k) = (s as i128, m as i128, k as i128);
    let order = m + s * k;
    Ok(Ratio::new_i128(s * (s - 1) * k * k, order * (order - 1)))
}

/// Closed-form pair connected ratio for the Petersen graph with
/// `k`-cliques attached to a perfect matching (5 disjoint edges, base
/// order 10):
///
/// `4((10+5k)² - 25) / (5(9+5k)(10+5k))`
///
/// Equivalently, the form counts `10(k+1)(k+3)` strung pairs out of
/// `C(10+5k, 2)`. It is 2/3 at `k = 0` (the unmodified Petersen graph),
/// peaks at 198/245 at `k = 8`, and decays toward the limit 4/5 from
/// above.
///
/// Caveat: exhaustive measurement confirms the form only at `k = 0`. For
/// `k ∈ {1, 2, 3}` the measured count is `10k² + 40k + 20` — ten pairs
/// fewer at every `k ≥ 1`. The form implicitly keeps all 30 non-adjacent
/// base pairs strung, but attaching a clique to every spoke forces any
/// base-to-base hamiltonian path to traverse all five spokes, which
/// strands its endpoints on opposite sides of the matching: the 5
/// outer–outer and 5 inner–inner pairs die. Callers comparing this value
/// against a measured ratio should expect `measured < closed form` for
/// `k ≥ 1` and flag the difference rather than assume equality.
pub fn pk_exact_ratio(k: usize) -> Ratio {
    let k = k as i128;
    let order = 10 + 5 * k;
    Ratio::new_i128(4 * (order * order - 25), 5 * (order - 1) * order)
}
