//! Immutable graph representation for exact small-graph analysis.
//!
//! Graphs are simple and undirected: no self-loops, no parallel edges,
//! vertices numbered `0..n`. The representation keeps three views in sync —
//! a canonical sorted edge list, sorted neighbor lists, and (for graphs of
//! order at most [`SOLVER_VERTEX_CAP`]) one adjacency bitmask per vertex.
//! The bitmask view is what the solvers consume: a vertex subset is a `u64`,
//! and neighborhood intersection is a single AND.
//!
//! Construction validates once; afterwards a `Graph` never changes, so the
//! solvers can trust the invariants without re-checking.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest order the exact solvers accept: vertex sets must fit in a `u64`.
///
/// Graphs above this order can still be constructed, parsed, and written
/// (structural analysis and I/O have no such limit); only the hamiltonian
/// path machinery refuses them.
pub const SOLVER_VERTEX_CAP: usize = 64;

/// Errors from graph construction, parsing, and permutation handling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    /// A vertex index is not below the graph order.
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    OutOfRange { vertex: u32, order: usize },
    /// An edge joins a vertex to itself.
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: u32 },
    /// A permutation's length does not match the graph order.
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    /// A mapping repeats a value or leaves the domain, so it is no bijection.
    #[error("not a permutation: value {value} repeats or leaves the domain")]
    NotAPermutation { value: u32 },
    /// graph6 input that does not decode to a graph.
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    /// Edge-list text that does not parse.
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
}

/// A simple undirected graph with vertices `0..order()`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Canonical edge list: each edge stored as `(u, v)` with `u < v`,
    /// sorted lexicographically, no duplicates.
    edges: Vec<(u32, u32)>,
    /// Sorted neighbor list per vertex.
    adj: Vec<Vec<u32>>,
    /// Adjacency bitmask per vertex; present exactly when `n <= 64`.
    masks: Option<Vec<u64>>,
}

impl Graph {
    /// Builds a graph of order `n` from an edge list.
    ///
    /// Edges may appear in any orientation and order; duplicates (in either
    /// orientation) are merged. Rejects out-of-range endpoints and
    /// self-loops.
    ///
    /// # Examples
    ///
    /// ```
    /// use hampath::graph::Graph;
    ///
    /// let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
    /// assert_eq!(g.order(), 3);
    /// assert_eq!(g.size(), 2);
    /// assert!(g.has_edge(0, 1) && !g.has_edge(0, 2));
    /// ```
    pub fn from_edge_list(n: usize, edges: &[(u32, u32)]) -> Result<Self, GraphError> {
        let mut canon: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if (w as usize) >= n {
                    return Err(GraphError::OutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        canon.dedup();
        Ok(Self::from_canonical(n, canon))
    }

    /// Internal constructor: `edges` must already be canonical
    /// (u < v, sorted, deduplicated, in range).
    pub(crate) fn from_canonical(n: usize, edges: Vec<(u32, u32)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let masks = (n <= SOLVER_VERTEX_CAP).then(|| {
            let mut m = vec![0u64; n];
            for &(u, v) in &edges {
                m[u as usize] |= 1 << v;
                m[v as usize] |= 1 << u;
            }
            m
        });
        Graph {
            n,
            edges,
            adj,
            masks,
        }
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                edges.push((u, v));
            }
        }
        Self::from_canonical(n, edges)
    }

    /// The cycle on `n >= 3` vertices, edges `(i, i+1 mod n)`.
    ///
    /// # Panics
    ///
    /// Panics if `n < 3`; shorter cycles are not simple graphs.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<(u32, u32)> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n as u32 - 1));
        edges.sort_unstable();
        Self::from_canonical(n, edges)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// The canonical edge list: `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Whether `u` and `v` are adjacent. Out-of-range vertices are simply
    /// not adjacent to anything.
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        if (u as usize) < self.n && (v as usize) < self.n {
            self.adj[u as usize].binary_search(&v).is_ok()
        } else {
            false
        }
    }

    /// Sorted neighbors of `v`.
    ///
    /// # Panics
    ///
    /// Panics if `v` is out of range.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    /// Degree of `v`.
    ///
    /// # Panics
    ///
    /// Panics if `v` is out of range.
    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    /// Minimum degree, or `None` for the empty graph.
    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    /// Adjacency bitmasks (bit `v` of `masks()[u]` set iff `u ~ v`), present
    /// exactly when the order is within [`SOLVER_VERTEX_CAP`].
    pub fn masks(&self) -> Option<&[u64]> {
        self.masks.as_deref()
    }

    /// Whether the graph is connected. Graphs of order 0 and 1 count as
    /// connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.n
    }

    /// The graph with vertex `v` removed; vertices above `v` shift down by
    /// one so the result is numbered `0..n-1`.
    pub fn delete_vertex(&self, v: u32) -> Result<Self, GraphError> {
        if (v as usize) >= self.n {
            return Err(GraphError::OutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        let shift = |w: u32| if w > v { w - 1 } else { w };
        let mut edges: Vec<(u32, u32)> = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (shift(a), shift(b)))
            .collect();
        edges.sort_unstable();
        Ok(Self::from_canonical(self.n - 1, edges))
    }

    /// Whether `p` maps this graph onto itself: `{p(u), p(v)}` is an edge
    /// for every edge `{u, v}`. Since `p` is a bijection and the edge count
    /// is finite, this already makes `p` an automorphism.
    pub fn is_automorphism(&self, p: &VertexPermutation) -> Result<bool, GraphError> {
        if p.len() != self.n {
            return Err(GraphError::LengthMismatch {
                expected: self.n,
                got: p.len(),
            });
        }
        Ok(self
            .edges
            .iter()
            .all(|&(u, v)| self.has_edge(p.apply(u), p.apply(v))))
    }

    /// All perfect matchings, each as a sorted canonical edge list; the list
    /// of matchings is itself sorted, so the first entry is the
    /// lexicographically least matching.
    ///
    /// Empty when the order is odd (or zero edges prevent a matching).
    /// Intended for small graphs; the enumeration is exponential in general.
    pub fn perfect_matchings(&self) -> Vec<Vec<(u32, u32)>> {
        let mut out = Vec::new();
        if self.n % 2 != 0 {
            return out;
        }
        let mut matched = vec![false; self.n];
        let mut current = Vec::with_capacity(self.n / 2);
        self.match_from(0, &mut matched, &mut current, &mut out);
        // The recursion pairs the lowest unmatched vertex first, which already
        // yields lexicographic order, but sort anyway so the contract does not
        // depend on that subtlety.
        out.sort();
        out
    }

    fn match_from(
        &self,
        from: usize,
        matched: &mut [bool],
        current: &mut Vec<(u32, u32)>,
        out: &mut Vec<Vec<(u32, u32)>>,
    ) {
        let Some(u) = (from..self.n).find(|&u| !matched[u]) else {
            out.push(current.clone());
            return;
        };
        matched[u] = true;
        for &w in &self.adj[u] {
            if !matched[w as usize] {
                matched[w as usize] = true;
                current.push((u as u32, w));
                self.match_from(u + 1, matched, current, out);
                current.pop();
                matched[w as usize] = false;
            }
        }
        matched[u] = false;
    }

    /// Parses the plain-text edge list format.
    ///
    /// The first data line is `n m`; each of the following `m` data lines is
    /// one edge `u v`. Blank lines are skipped and `#` starts a comment,
    /// full-line or trailing. Duplicate edges merge as in
    /// [`Graph::from_edge_list`].
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
            let data = raw.split('#').next().unwrap_or("").trim();
            (!data.is_empty()).then_some((i + 1, data))
        });
        let (line_no, header) = lines
            .next()
            .ok_or_else(|| GraphError::MalformedEdgeList("empty input".into()))?;
        let (n, m) = parse_two::<usize>(header).ok_or_else(|| {
            GraphError::MalformedEdgeList(format!(
                "line {line_no}: expected header `n m`, got `{header}`"
            ))
        })?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (line_no, data) = lines.next().ok_or_else(|| {
                GraphError::MalformedEdgeList(format!(
                    "expected {m} edge lines, found {}",
                    edges.len()
                ))
            })?;
            let (u, v) = parse_two::<u32>(data).ok_or_else(|| {
                GraphError::MalformedEdgeList(format!(
                    "line {line_no}: expected edge `u v`, got `{data}`"
                ))
            })?;
            edges.push((u, v));
        }
        if let Some((line_no, data)) = lines.next() {
            return Err(GraphError::MalformedEdgeList(format!(
                "line {line_no}: unexpected trailing data `{data}` after {m} edges"
            )));
        }
        Self::from_edge_list(n, &edges)
    }

    /// Writes the edge-list text format read by [`Graph::parse_edge_list`]:
    /// a `n m` header, then one `u v` line per canonical edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_two<T: FromStr>(s: &str) -> Option<(T, T)> {
    let mut it = s.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.n,
            self.edges.len(),
            self.edges
        )
    }
}

/// A bijection on `0..len()`, used to test graph automorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPermutation {
    map: Vec<u32>,
}

impl VertexPermutation {
    /// Validates that `map` is a bijection on `0..map.len()`.
    pub fn new(map: Vec<u32>) -> Result<Self, GraphError> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &value in &map {
            if (value as usize) >= n || seen[value as usize] {
                return Err(GraphError::NotAPermutation { value });
            }
            seen[value as usize] = true;
        }
        Ok(VertexPermutation { map })
    }

    /// The identity on `0..n`.
    pub fn identity(n: usize) -> Self {
        VertexPermutation {
            map: (0..n as u32).collect(),
        }
    }

    /// Domain size.
    pub fn len(&self) -> usize {
        self.map.len()
    }

    /// Whether the domain is empty.
    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Image of `v`.
    ///
    /// # Panics
    ///
    /// Panics if `v` is outside the domain.
    pub fn apply(&self, v: u32) -> u32 {
        self.map[v as usize]
    }

    /// The composition `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &VertexPermutation) -> Result<Self, GraphError> {
        if self.len() != other.len() {
            return Err(GraphError::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(VertexPermutation {
            map: other.map.iter().map(|&v| self.apply(v)).collect(),
        })
    }

    /// The underlying mapping as a slice (`map()[v]` is the image of `v`).
    pub fn mapping(&self) -> &[u32] {
        &self.map
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edge_list_deduplicates_both_orientations() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 0), (2, 1), (1, 2)]).unwrap();
        assert_eq!(g.size(), 2);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn from_edge_list_rejects_out_of_range_and_self_loops() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::OutOfRange {
                vertex: 3,
                order: 3
            })
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(2, 2)]),
            Err(GraphError::SelfLoop { vertex: 2 })
        );
    }

    #[test]
    fn masks_present_exactly_up_to_the_solver_cap() {
        let small = Graph::from_edge_list(64, &[(0, 63)]).unwrap();
        let masks = small.masks().unwrap();
        assert_eq!(masks[0], 1 << 63);
        assert_eq!(masks[63], 1);
        let large = Graph::from_edge_list(65, &[(0, 64)]).unwrap();
        assert!(large.masks().is_none());
        assert!(large.has_edge(64, 0));
    }

    #[test]
    fn perfect_matchings_of_paths_claws_and_the_empty_graph() {
        // A path: exactly one. A claw: the center covers only one leaf.
        let path = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path.perfect_matchings(), vec![vec![(0, 1), (2, 3)]]);
        let claw = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(claw.perfect_matchings().is_empty());
        let empty = Graph::from_edge_list(0, &[]).unwrap();
        assert_eq!(empty.perfect_matchings(), vec![Vec::new()]);
    }

    #[test]
    fn degree_and_neighbors_agree_with_edges() {
        let g = Graph::from_edge_list(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        assert_eq!(g.neighbors(4), &[3]);
        assert_eq!(g.min_degree(), Some(1));
    }

    #[test]
    fn connectivity_detects_isolated_vertices_and_components() {
        assert!(Graph::from_edge_list(1, &[]).unwrap().is_connected());
        assert!(Graph::cycle(5).is_connected());
        let split = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!split.is_connected());
        let isolated = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert!(!isolated.is_connected());
    }

    #[test]
    fn delete_vertex_renumbers_downward() {
        // Path 0-1-2-3; deleting vertex 1 leaves edge (1,2) in the new
        // numbering (old 2-3) and disconnects old vertex 0.
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.delete_vertex(1).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(h.edges(), &[(1, 2)]);
        assert!(g.delete_vertex(4).is_err());
    }

    #[test]
    fn complete_and_cycle_constructors() {
        let k4 = Graph::complete(4);
        assert_eq!((k4.order(), k4.size()), (4, 6));
        assert_eq!(k4.min_degree(), Some(3));
        let c5 = Graph::cycle(5);
        assert_eq!((c5.order(), c5.size()), (5, 5));
        assert!(c5.has_edge(0, 4) && c5.has_edge(3, 4) && !c5.has_edge(0, 2));
    }

    #[test]
    fn permutation_validation() {
        assert!(VertexPermutation::new(vec![1, 2, 0]).is_ok());
        assert_eq!(
            VertexPermutation::new(vec![0, 0, 1]),
            Err(GraphError::NotAPermutation { value: 0 })
        );
        assert_eq!(
            VertexPermutation::new(vec![0, 3, 1]),
            Err(GraphError::NotAPermutation { value: 3 })
        );
    }

    #[test]
    fn identity_is_always_an_automorphism() {
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert!(g.is_automorphism(&VertexPermutation::identity(5)).unwrap());
        assert!(g.is_automorphism(&VertexPermutation::identity(4)).is_err());
    }

    #[test]
    fn cycle_rotation_is_an_automorphism_but_a_transposition_is_not() {
        let c5 = Graph::cycle(5);
        let rot = VertexPermutation::new(vec![1, 2, 3, 4, 0]).unwrap();
        assert!(c5.is_automorphism(&rot).unwrap());
        // Swapping two adjacent vertices of a path-like stretch breaks edges.
        let swap = VertexPermutation::new(vec![1, 0, 2, 3, 4]).unwrap();
        let p4 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(!p4.is_automorphism(&swap).unwrap());
    }

    #[test]
    fn compose_applies_right_then_left() {
        let a = VertexPermutation::new(vec![1, 2, 0]).unwrap(); // v -> v+1
        let b = VertexPermutation::new(vec![2, 0, 1]).unwrap(); // v -> v-1
        let id = a.compose(&b).unwrap();
        assert_eq!(id, VertexPermutation::identity(3));
        let aa = a.compose(&a).unwrap();
        assert_eq!(aa.mapping(), &[2, 0, 1]);
    }

    #[test]
    fn perfect_matchings_of_k4_and_odd_orders() {
        let k4 = Graph::complete(4);
        let pms = k4.perfect_matchings();
        assert_eq!(
            pms,
            vec![
                vec![(0, 1), (2, 3)],
                vec![(0, 2), (1, 3)],
                vec![(0, 3), (1, 2)],
            ]
        );
        assert!(Graph::complete(5).perfect_matchings().is_empty());
        let c6 = Graph::cycle(6);
        assert_eq!(
            c6.perfect_matchings(),
            vec![vec![(0, 1), (2, 3), (4, 5)], vec![(0, 5), (1, 2), (3, 4)],]
        );
    }

    #[test]
    fn edge_list_round_trip_with_comments() {
        let text = "# a square with a chord\n4 5\n0 1\n1 2\n2 3\n0 3 # close\n\n1 3\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!((g.order(), g.size()), (4, 5));
        let back = Graph::parse_edge_list(&g.to_edge_list()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn edge_list_rejects_bad_headers_counts_and_trailing_data() {
        assert!(matches!(
            Graph::parse_edge_list(""),
            Err(GraphError::MalformedEdgeList(_))
        ));
        assert!(matches!(
            Graph::parse_edge_list("3\n"),
            Err(GraphError::MalformedEdgeList(_))
        ));
        assert!(matches!(
            Graph::parse_edge_list("3 2\n0 1\n"),
            Err(GraphError::MalformedEdgeList(_))
        ));
        assert!(matches!(
            Graph::parse_edge_list("3 1\n0 1\n1 2\n"),
            Err(GraphError::MalformedEdgeList(_))
        ));
        assert!(matches!(
            Graph::parse_edge_list("3 1\nx y\n"),
            Err(GraphError::MalformedEdgeList(_))
        ));
        // Range errors surface as graph errors, not parse errors.
        assert!(matches!(
            Graph::parse_edge_list("2 1\n0 2\n"),
            Err(GraphError::OutOfRange {
                vertex: 2,
                order: 2
            })
        ));
    }
}
