//! H-path connected edge sets: verification and exhaustive search.
//!
//! An edge set `S = {e_1, ..., e_r}` (`r ≥ 2`) of a graph is *H-path
//! connected* when for every pair `i ≠ j` there is a hamiltonian path with
//! one endpoint in `e_i` and the other in `e_j` that traverses every edge
//! of `S − {e_i, e_j}`. Whether the witness must traverse `e_i` and `e_j`
//! themselves as well is a genuine fork in that wording, with structurally
//! different consequences, so both readings are implemented and every
//! entry point is explicit about which one it uses — see [`WitnessRule`].
//!
//! Such a set behaves like a set of sockets: any construction that grafts
//! gadgets onto the edges of `S` inherits hamiltonian paths between any
//! two gadgets, because a witness path can be rerouted through a gadget
//! exactly where it traverses that gadget's edge.
//!
//! Verification produces an [`HpcCertificate`] holding one explicit
//! witness path per pair, checkable by [`HpcCertificate::validate`]
//! without trusting any solver. The search side enumerates candidate sets
//! depth-first over candidate edges in a fixed order, which makes reported
//! sets deterministic; under either rule H-path connectedness is closed
//! under taking subsets (a witness traverses every set edge it is asked
//! about, and shrinking the set only shrinks what is asked), so the
//! enumeration tree prunes soundly at the first uncertifiable prefix.
//!
//! Searches run the engines sequentially: a fixed query order is what
//! makes budget-limited runs reproducible, abort included.

use thiserror::Error;

use crate::engine::{self, EngineChoice, Meter, PairTable, Path, SolveConfig, SolveError};
use crate::graph::Graph;

/// Errors from candidate validation or the underlying solver.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HpcError {
    /// Sets below two edges have no pairs to connect.
    #[error("an H-path connected set needs at least 2 edges, got {got}")]
    TooFewEdges { got: usize },
    /// The same edge appears twice in the candidate list.
    #[error("edge ({u}, {v}) appears more than once in the candidate set")]
    DuplicateEdge { u: u32, v: u32 },
    /// A candidate edge is not an edge of the graph.
    #[error("candidate edge ({u}, {v}) is not an edge of the graph")]
    EdgeNotInGraph { u: u32, v: u32 },
    /// The underlying solver failed (size caps, budget, bad vertices).
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// How a pair's witness path must relate to the pair's own two edges.
///
/// Every witness for the pair `(e_i, e_j)` is a hamiltonian path with one
/// endpoint in `e_i`, the other in `e_j` (all four endpoint combinations
/// are acceptable), traversing every edge of the set other than `e_i` and
/// `e_j`. The rules differ on `e_i` and `e_j` themselves:
///
/// - [`TerminalEdges`](Self::TerminalEdges) (the default): the witness
///   must traverse them too. An endpoint of the path lies in `e_i` and
///   has path-degree one, so the only way to traverse `e_i` is as the
///   path's first or last edge — witnesses run "edge to edge". Two
///   consequences follow in any nonhamiltonian graph of order > 3:
///   certified sets are pairwise vertex-disjoint (edges sharing a vertex
///   `x` would need `x` inside both terminal edges at once, and a witness
///   between adjacent endpoints would close into a hamiltonian cycle),
///   and their size is therefore capped by the matching number. This is
///   the reading under which clique-attachment constructions reroute a
///   witness through a gadget at *every* set edge, terminal ones
///   included.
/// - [`EndpointsOnly`](Self::EndpointsOnly): no constraint on `e_i` and
///   `e_j` containment — the literal minimum the definition's wording
///   demands. Certified sets need not be disjoint and can be larger: the
///   Petersen graph's maximum certified set has 7 edges under this rule
///   versus 5 under [`TerminalEdges`](Self::TerminalEdges).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WitnessRule {
    /// Witnesses traverse the pair's own edges as their terminal edges.
    #[default]
    TerminalEdges,
    /// Witnesses only need their endpoints inside the pair's edges.
    EndpointsOnly,
}

/// The witness for one pair of a certificate: a hamiltonian path whose
/// endpoints lie in `edges[i]` and `edges[j]` and which traverses every
/// other edge of the set (plus those two, under
/// [`WitnessRule::TerminalEdges`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairWitness {
    /// Position of the first edge in the certificate's edge list.
    pub i: usize,
    /// Position of the second edge (`i < j`).
    pub j: usize,
    /// The witness path.
    pub path: Path,
}

/// A fully witnessed H-path connected edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HpcCertificate {
    edges: Vec<(u32, u32)>,
    witnesses: Vec<PairWitness>,
    rule: WitnessRule,
}

impl HpcCertificate {
    /// The certified edges, as canonical `(lo, hi)` pairs.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// One witness per unordered pair of edge positions.
    pub fn witnesses(&self) -> &[PairWitness] {
        &self.witnesses
    }

    /// Number of edges in the set.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// The witness rule this certificate was issued under (and validates
    /// against).
    pub fn rule(&self) -> WitnessRule {
        self.rule
    }

    /// Re-check the whole certificate against `g` from first principles:
    /// edges distinct and present, one witness per pair, every witness a
    /// hamiltonian path with endpoints in its two edges that traverses
    /// all the others — and, under [`WitnessRule::TerminalEdges`], those
    /// two as well. Uses no solver, so it cross-checks them.
    pub fn validate(&self, g: &Graph) -> bool {
        let r = self.edges.len();
        if r < 2 {
            return false;
        }
        for (idx, &(u, v)) in self.edges.iter().enumerate() {
            if u >= v || !g.has_edge(u, v) || self.edges[..idx].contains(&(u, v)) {
                return false;
            }
        }
        let mut seen = vec![false; r * r];
        for w in &self.witnesses {
            if w.i >= w.j || w.j >= r || seen[w.i * r + w.j] {
                return false;
            }
            seen[w.i * r + w.j] = true;
            if !w.path.is_hamiltonian_path_of(g) {
                return false;
            }
            let (a, b) = w.path.endpoints();
            let ei = self.edges[w.i];
            let ej = self.edges[w.j];
            let straight = touches(a, ei) && touches(b, ej);
            let crossed = touches(a, ej) && touches(b, ei);
            if !straight && !crossed {
                return false;
            }
            for (idx, &(u, v)) in self.edges.iter().enumerate() {
                let exempt = self.rule == WitnessRule::EndpointsOnly && (idx == w.i || idx == w.j);
                if !exempt && !w.path.contains_edge(u, v) {
                    return false;
                }
            }
        }
        self.witnesses.len() == r * (r - 1) / 2
    }
}

fn touches(vertex: u32, edge: (u32, u32)) -> bool {
    vertex == edge.0 || vertex == edge.1
}

/// Outcome of verifying one candidate set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyOutcome {
    /// The set is H-path connected; here is a witness per pair.
    Certified(HpcCertificate),
    /// The pair at positions `i < j` in the candidate list admits no
    /// witness, so the set is not H-path connected.
    Failed { i: usize, j: usize },
}

/// Verify whether `edges` is an H-path connected set of `g` under the
/// default rule, [`WitnessRule::TerminalEdges`].
pub fn is_hpath_connected(g: &Graph, edges: &[(u32, u32)]) -> Result<VerifyOutcome, HpcError> {
    is_hpath_connected_with(
        g,
        edges,
        WitnessRule::default(),
        &SolveConfig::default(),
        &Meter::unlimited(),
    )
}

/// [`is_hpath_connected`] with an explicit witness rule, configuration,
/// and metering. Pairs are checked in ascending position order and the
/// first failure is reported; a budget abort surfaces as an error since a
/// partial verification proves nothing.
pub fn is_hpath_connected_with(
    g: &Graph,
    edges: &[(u32, u32)],
    rule: WitnessRule,
    config: &SolveConfig,
    meter: &Meter,
) -> Result<VerifyOutcome, HpcError> {
    let set = validate_candidate(g, edges)?;
    let r = set.len();
    let mut witnesses = Vec::with_capacity(r * (r - 1) / 2);
    for i in 0..r {
        for j in i + 1..r {
            let required: Vec<(u32, u32)> = set
                .iter()
                .enumerate()
                .filter(|&(idx, _)| rule == WitnessRule::TerminalEdges || (idx != i && idx != j))
                .map(|(_, &e)| e)
                .collect();
            match pair_witness(g, set[i], set[j], &required, config, meter)? {
                Some(path) => witnesses.push(PairWitness { i, j, path }),
                None => return Ok(VerifyOutcome::Failed { i, j }),
            }
        }
    }
    Ok(VerifyOutcome::Certified(HpcCertificate {
        edges: set,
        witnesses,
        rule,
    }))
}

/// Search for one witness joining `ei` and `ej`: the four endpoint
/// combinations are tried in a fixed order and the first hit wins, so the
/// stored witness is deterministic.
fn pair_witness(
    g: &Graph,
    ei: (u32, u32),
    ej: (u32, u32),
    required: &[(u32, u32)],
    config: &SolveConfig,
    meter: &Meter,
) -> Result<Option<Path>, SolveError> {
    for (a, b) in [(ei.0, ej.0), (ei.0, ej.1), (ei.1, ej.0), (ei.1, ej.1)] {
        if a == b {
            continue; // edges sharing a vertex skip the degenerate combo
        }
        let found =
            engine::find_ham_path_with_required_edges_with(g, a, b, required, config, meter)?;
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn validate_candidate(g: &Graph, edges: &[(u32, u32)]) -> Result<Vec<(u32, u32)>, HpcError> {
    if edges.len() < 2 {
        return Err(HpcError::TooFewEdges { got: edges.len() });
    }
    let mut set = Vec::with_capacity(edges.len());
    for &(u, v) in edges {
        if !g.has_edge(u, v) {
            return Err(HpcError::EdgeNotInGraph { u, v });
        }
        let edge = (u.min(v), u.max(v));
        if set.contains(&edge) {
            return Err(HpcError::DuplicateEdge {
                u: edge.0,
                v: edge.1,
            });
        }
        set.push(edge);
    }
    Ok(set)
}

/// Result of a search: the best certified set found, and whether the
/// answer is proven.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    /// For a sized search, a certificate of exactly the requested size;
    /// for a maximum search, the largest (first in enumeration order
    /// among ties) certified set. `None` when none was found.
    pub certificate: Option<HpcCertificate>,
    /// `true` when the search ran to its own completion, making the
    /// answer a proof — of existence, absence, or maximality. `false`
    /// means the expansion budget ran out first, so the result is only a
    /// lower bound (or, with no certificate, no information).
    pub exhaustive: bool,
}

/// Find an H-path connected set with exactly `size` edges, if one exists,
/// under the default rule, [`WitnessRule::TerminalEdges`].
/// Deterministic: reports the first certifiable set in depth-first order
/// over candidate edges sorted by degree sum (ascending, ties broken
/// lexicographically) — edges with low-degree endpoints constrain
/// witnesses hardest, so their failures prune earliest.
pub fn find_hpc_set(g: &Graph, size: usize) -> Result<SearchResult, HpcError> {
    find_hpc_set_with(g, size, WitnessRule::default(), &Meter::unlimited())
}

/// [`find_hpc_set`] under an explicit witness rule and a metered budget.
pub fn find_hpc_set_with(
    g: &Graph,
    size: usize,
    rule: WitnessRule,
    meter: &Meter,
) -> Result<SearchResult, HpcError> {
    if size < 2 {
        return Err(HpcError::TooFewEdges { got: size });
    }
    run_search(g, Some(size), rule, meter)
}

/// Find a maximum H-path connected set under the default rule,
/// [`WitnessRule::TerminalEdges`]. Deterministic like [`find_hpc_set`];
/// among maximum-size sets the one whose sorted edge list is
/// lexicographically least is reported (the search keeps exploring
/// branches that can still tie the best size, so the tie-break is exact,
/// not first-found).
pub fn max_hpc_set(g: &Graph) -> Result<SearchResult, HpcError> {
    max_hpc_set_with(g, WitnessRule::default(), &Meter::unlimited())
}

/// [`max_hpc_set`] under an explicit witness rule and a metered budget.
pub fn max_hpc_set_with(
    g: &Graph,
    rule: WitnessRule,
    meter: &Meter,
) -> Result<SearchResult, HpcError> {
    run_search(g, None, rule, meter)
}

fn run_search(
    g: &Graph,
    target: Option<usize>,
    rule: WitnessRule,
    meter: &Meter,
) -> Result<SearchResult, HpcError> {
    // Sequential engines keep the query order — and therefore budget
    // consumption and any abort point — identical from run to run.
    let config = SolveConfig {
        engine: EngineChoice::Auto,
        parallel: false,
    };
    let table = match engine::ham_pair_table_with(g, &config, meter) {
        Ok(table) => table,
        Err(SolveError::BudgetExhausted) => {
            return Ok(SearchResult {
                certificate: None,
                exhaustive: false,
            })
        }
        Err(other) => return Err(other.into()),
    };
    // Candidates by ascending degree sum, then lexicographically. On a
    // regular graph this is plain lexicographic order.
    let mut edges = g.edges().to_vec();
    edges.sort_by_key(|&(u, v)| (g.degree(u) + g.degree(v), u, v));
    let mut search = SetSearch {
        g,
        edges,
        table,
        rule,
        config,
        meter,
        target,
        current: Vec::new(),
        best: None,
    };
    let exhaustive = match search.dfs(0, &Vec::new()) {
        Ok(_) => true,
        Err(SolveError::BudgetExhausted) => false,
        Err(other) => return Err(other.into()),
    };
    let certificate = search.best.map(|(canonical, witnesses)| {
        let mut witnesses: Vec<PairWitness> = witnesses
            .into_iter()
            .map(|((a, b), path)| {
                let a = canonical
                    .binary_search(&search.edges[a])
                    .expect("witness edge is in the set");
                let b = canonical
                    .binary_search(&search.edges[b])
                    .expect("witness edge is in the set");
                PairWitness {
                    i: a.min(b),
                    j: a.max(b),
                    path,
                }
            })
            .collect();
        witnesses.sort_by_key(|w| (w.i, w.j));
        HpcCertificate {
            edges: canonical,
            witnesses,
            rule,
        }
    });
    Ok(SearchResult {
        certificate,
        exhaustive,
    })
}

/// A witness list keyed by pairs of *graph* edge indices.
type Witnesses = Vec<((usize, usize), Path)>;

struct SetSearch<'a> {
    g: &'a Graph,
    edges: Vec<(u32, u32)>,
    /// Unconstrained pair table used as a necessary-condition prefilter.
    table: PairTable,
    rule: WitnessRule,
    config: SolveConfig,
    meter: &'a Meter,
    /// `Some(size)`: stop at the first certified set of that size.
    /// `None`: enumerate everything, tracking the maximum.
    target: Option<usize>,
    current: Vec<usize>,
    /// Best set so far as its sorted edge list, plus its witnesses.
    best: Option<(Vec<(u32, u32)>, Witnesses)>,
}

impl SetSearch<'_> {
    /// The sorted edge list of `current`: candidate order is degree-sum
    /// first, so sort again to compare sets lexicographically.
    fn canonical(&self) -> Vec<(u32, u32)> {
        let mut edges: Vec<(u32, u32)> = self.current.iter().map(|&i| self.edges[i]).collect();
        edges.sort_unstable();
        edges
    }

    /// Extend `current` (already certified, witnessed by `witnesses`)
    /// with edges from `from` upward. Returns `Ok(true)` when a sized
    /// target has been hit and the search should unwind.
    fn dfs(&mut self, from: usize, witnesses: &Witnesses) -> Result<bool, SolveError> {
        match self.target {
            Some(size) => {
                if self.current.len() == size {
                    self.best = Some((self.canonical(), witnesses.to_vec()));
                    return Ok(true);
                }
            }
            None => {
                if self.current.len() >= 2 {
                    let canonical = self.canonical();
                    let better = match &self.best {
                        None => true,
                        Some((set, _)) => {
                            canonical.len() > set.len()
                                || (canonical.len() == set.len() && canonical < *set)
                        }
                    };
                    if better {
                        self.best = Some((canonical, witnesses.to_vec()));
                    }
                }
            }
        }
        for e in from..self.edges.len() {
            let left = self.edges.len() - e;
            match self.target {
                Some(size) if self.current.len() + left < size => break,
                None => {
                    // Keep branches that can still *tie* the best size:
                    // the lexicographic tie-break must see every
                    // maximum-size set, not just the first.
                    let best_len = self.best.as_ref().map_or(0, |(set, _)| set.len());
                    if self.current.len() + left < best_len {
                        break;
                    }
                }
                _ => {}
            }
            if !self.current.iter().all(|&i| self.weakly_compatible(i, e)) {
                continue;
            }
            if let Some(extended) = self.try_extend(witnesses, e)? {
                self.current.push(e);
                let done = self.dfs(e + 1, &extended)?;
                self.current.pop();
                if done {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// Necessary condition from the unconstrained pair table: if no
    /// endpoint combination of the two edges is joined by *any*
    /// hamiltonian path, no constrained witness can exist either.
    fn weakly_compatible(&self, i: usize, j: usize) -> bool {
        let (vi, wi) = self.edges[i];
        let (vj, wj) = self.edges[j];
        // A terminal-edge witness must have the pair's edges as its first
        // and last edge; edges sharing a vertex cannot both be terminal
        // once the graph has more than 3 vertices, so such pairs are dead
        // on arrival.
        if self.rule == WitnessRule::TerminalEdges
            && self.g.order() > 3
            && (vi == vj || vi == wj || wi == vj || wi == wj)
        {
            return false;
        }
        [(vi, vj), (vi, wj), (wi, vj), (wi, wj)]
            .iter()
            .any(|&(a, b)| a != b && self.table.connected(a, b))
    }

    /// Check whether `current ∪ {e}` stays certified: old pairs keep
    /// their witness when it already traverses the new edge and are
    /// re-searched otherwise, and every (old, new) pair needs a fresh
    /// witness. Returns the new witness list, or `None` when some pair
    /// has none.
    fn try_extend(&self, witnesses: &Witnesses, e: usize) -> Result<Option<Witnesses>, SolveError> {
        let new_edge = self.edges[e];
        let mut out: Witnesses = Vec::with_capacity(witnesses.len() + self.current.len());
        for ((i, j), path) in witnesses {
            // Under either rule the old witness already traverses every
            // edge it needs from `current`, so it stays valid exactly
            // when it also traverses the new edge.
            if path.contains_edge(new_edge.0, new_edge.1) {
                out.push(((*i, *j), path.clone()));
                continue;
            }
            let required = self.required_for(*i, *j, e);
            match pair_witness(
                self.g,
                self.edges[*i],
                self.edges[*j],
                &required,
                &self.config,
                self.meter,
            )? {
                Some(path) => out.push(((*i, *j), path)),
                None => return Ok(None),
            }
        }
        for &i in &self.current {
            let required = self.required_for(i, e, e);
            match pair_witness(
                self.g,
                self.edges[i],
                new_edge,
                &required,
                &self.config,
                self.meter,
            )? {
                Some(path) => out.push(((i, e), path)),
                None => return Ok(None),
            }
        }
        Ok(Some(out))
    }

    /// The edges a witness for the pair `(a, b)` must traverse when the
    /// candidate set is `current ∪ {extra}`: every one of them under
    /// [`WitnessRule::TerminalEdges`], every one but the pair's own two
    /// under [`WitnessRule::EndpointsOnly`].
    fn required_for(&self, a: usize, b: usize, extra: usize) -> Vec<(u32, u32)> {
        let keep = |i: usize| self.rule == WitnessRule::TerminalEdges || (i != a && i != b);
        let mut required: Vec<(u32, u32)> = self
            .current
            .iter()
            .copied()
            .filter(|&i| keep(i))
            .map(|i| self.edges[i])
            .collect();
        if keep(extra) && !self.current.contains(&extra) {
            required.push(self.edges[extra]);
        }
        required
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::cycle(5)
    }

    fn verify(g: &Graph, edges: &[(u32, u32)], rule: WitnessRule) -> VerifyOutcome {
        is_hpath_connected_with(g, edges, rule, &SolveConfig::default(), &Meter::unlimited())
            .unwrap()
    }

    fn certified_under(g: &Graph, edges: &[(u32, u32)], rule: WitnessRule) -> bool {
        match verify(g, edges, rule) {
            VerifyOutcome::Certified(cert) => {
                assert_eq!(cert.rule(), rule);
                assert!(cert.validate(g), "produced certificate must validate");
                true
            }
            VerifyOutcome::Failed { .. } => false,
        }
    }

    #[test]
    fn five_cycle_pairs_and_triples_by_hand() {
        use WitnessRule::{EndpointsOnly, TerminalEdges};
        // Disjoint pair: the path 1-0-4-3-2 joins endpoints of both edges
        // and traverses both, so it works under either rule.
        assert!(certified_under(&c5(), &[(0, 1), (2, 3)], TerminalEdges));
        assert!(certified_under(&c5(), &[(0, 1), (2, 3)], EndpointsOnly));
        // Adjacent pair: a path may leave from the shared structure when
        // only the endpoints matter, but the shared vertex can never sit
        // inside two terminal edges at once.
        assert!(certified_under(&c5(), &[(0, 1), (1, 2)], EndpointsOnly));
        assert!(!certified_under(&c5(), &[(0, 1), (1, 2)], TerminalEdges));
        // A triple certifiable under the permissive rule; under the
        // terminal rule C5 cannot even host a triple, since three
        // pairwise-disjoint edges need six vertices.
        assert!(certified_under(
            &c5(),
            &[(0, 1), (2, 3), (3, 4)],
            EndpointsOnly
        ));
        assert!(!certified_under(
            &c5(),
            &[(0, 1), (2, 3), (3, 4)],
            TerminalEdges
        ));
        // And a triple where the middle edge can never be traversed.
        assert!(!certified_under(
            &c5(),
            &[(0, 1), (1, 2), (2, 3)],
            EndpointsOnly
        ));
    }

    #[test]
    fn five_cycle_full_set_fails_at_the_first_bad_pair() {
        // Edges in canonical order: (0,1), (0,4), (1,2), (2,3), (3,4).
        // Pairs are scanned (0,1), (0,2), (0,3), ...
        let all: Vec<(u32, u32)> = c5().edges().to_vec();
        // Terminal rule: a witness would have to traverse all five edges,
        // i.e. the whole cycle, which no open path does — the very first
        // pair already fails.
        match verify(&c5(), &all, WitnessRule::TerminalEdges) {
            VerifyOutcome::Failed { i, j } => assert_eq!((i, j), (0, 1)),
            VerifyOutcome::Certified(_) => panic!("C5's full edge set is not H-path connected"),
        }
        // Permissive rule: the first failure is edges 0 and 3, i.e. (0,1)
        // with (2,3): a path joining them must traverse (0,4), (1,2), and
        // (3,4), and no endpoint choice closes those fragments into a
        // single open path.
        match verify(&c5(), &all, WitnessRule::EndpointsOnly) {
            VerifyOutcome::Failed { i, j } => assert_eq!((i, j), (0, 3)),
            VerifyOutcome::Certified(_) => panic!("C5's full edge set is not H-path connected"),
        }
    }

    #[test]
    fn witnesses_traverse_what_they_must() {
        // Terminal rule on C6's perfect matching: every witness contains
        // every set edge, its own two included.
        let g = Graph::cycle(6);
        let matching = [(0, 1), (2, 3), (4, 5)];
        let VerifyOutcome::Certified(cert) = is_hpath_connected(&g, &matching).unwrap() else {
            panic!("expected a certificate");
        };
        assert_eq!(cert.size(), 3);
        assert_eq!(cert.witnesses().len(), 3);
        for w in cert.witnesses() {
            for &(u, v) in cert.edges() {
                assert!(w.path.contains_edge(u, v));
            }
        }
        // Permissive rule on a C5 triple: the third edge (neither of the
        // pair's own) must still lie on the path.
        let g = c5();
        let VerifyOutcome::Certified(cert) =
            verify(&g, &[(0, 1), (2, 3), (3, 4)], WitnessRule::EndpointsOnly)
        else {
            panic!("expected a certificate");
        };
        for w in cert.witnesses() {
            let other = 3 - w.i - w.j;
            let (u, v) = cert.edges()[other];
            assert!(w.path.contains_edge(u, v));
        }
    }

    #[test]
    fn tampered_certificates_fail_validation() {
        let g = c5();
        let VerifyOutcome::Certified(cert) = is_hpath_connected(&g, &[(0, 1), (2, 3)]).unwrap()
        else {
            panic!("expected a certificate");
        };
        assert!(cert.validate(&g));
        // Swap in a valid hamiltonian path whose far endpoint misses the
        // second edge: the endpoint check must catch it.
        let mut broken = cert.clone();
        broken.witnesses[0].path = Path::new_unchecked(vec![0, 1, 2, 3, 4]);
        assert!(!broken.validate(&g));
        // And a certificate missing a witness fails too.
        let mut missing = cert;
        missing.witnesses.clear();
        assert!(!missing.validate(&g));
    }

    #[test]
    fn validation_checks_own_edge_traversal_only_under_the_terminal_rule() {
        // In K4 the path 0-3-1-2 joins an endpoint of (0,1) to an endpoint
        // of (2,3) without traversing either edge: evidence enough for the
        // permissive rule, not for the terminal one.
        let g = Graph::complete(4);
        let pair = [(0, 1), (2, 3)];
        for rule in [WitnessRule::TerminalEdges, WitnessRule::EndpointsOnly] {
            let VerifyOutcome::Certified(cert) = verify(&g, &pair, rule) else {
                panic!("expected a certificate");
            };
            let mut swapped = cert;
            swapped.witnesses[0].path = Path::new_unchecked(vec![0, 3, 1, 2]);
            assert_eq!(swapped.validate(&g), rule == WitnessRule::EndpointsOnly);
        }
    }

    #[test]
    fn candidate_validation_rejects_malformed_sets() {
        let g = c5();
        assert_eq!(
            is_hpath_connected(&g, &[(0, 1)]),
            Err(HpcError::TooFewEdges { got: 1 })
        );
        assert_eq!(
            is_hpath_connected(&g, &[(0, 1), (1, 0)]),
            Err(HpcError::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(
            is_hpath_connected(&g, &[(0, 1), (0, 2)]),
            Err(HpcError::EdgeNotInGraph { u: 0, v: 2 })
        );
        assert_eq!(find_hpc_set(&g, 1), Err(HpcError::TooFewEdges { got: 1 }));
    }

    #[test]
    fn sized_search_finds_the_first_set_in_edge_order() {
        // Terminal rule: (0,1)+(0,4) share a vertex, so the first
        // certifiable pair in depth-first order is (0,1)+(2,3).
        let got = find_hpc_set(&c5(), 2).unwrap();
        assert!(got.exhaustive);
        let cert = got.certificate.unwrap();
        assert_eq!(cert.edges(), &[(0, 1), (2, 3)]);
        assert!(cert.validate(&c5()));
        // Permissive rule: the adjacent pair is fine and comes first.
        let got =
            find_hpc_set_with(&c5(), 2, WitnessRule::EndpointsOnly, &Meter::unlimited()).unwrap();
        assert!(got.exhaustive);
        let cert = got.certificate.unwrap();
        assert_eq!(cert.edges(), &[(0, 1), (0, 4)]);
        assert!(cert.validate(&c5()));
    }

    #[test]
    fn maximum_on_the_five_cycle_depends_on_the_rule() {
        // Terminal rule: no room for three disjoint edges on five
        // vertices, so a disjoint pair is the best possible.
        let got = max_hpc_set(&c5()).unwrap();
        assert!(got.exhaustive);
        let cert = got.certificate.unwrap();
        assert_eq!(cert.edges(), &[(0, 1), (2, 3)]);
        assert!(cert.validate(&c5()));
        // Permissive rule: a triple exists; the lexicographically least
        // maximum set is reported.
        let got = max_hpc_set_with(&c5(), WitnessRule::EndpointsOnly, &Meter::unlimited()).unwrap();
        assert!(got.exhaustive);
        let cert = got.certificate.unwrap();
        assert_eq!(cert.size(), 3);
        assert_eq!(cert.edges(), &[(0, 1), (0, 4), (2, 3)]);
        assert!(cert.validate(&c5()));
    }

    #[test]
    fn impossible_sizes_are_proven_absent() {
        for rule in [WitnessRule::TerminalEdges, WitnessRule::EndpointsOnly] {
            let got = find_hpc_set_with(&c5(), 5, rule, &Meter::unlimited()).unwrap();
            assert!(got.exhaustive);
            assert!(got.certificate.is_none());
        }
    }

    #[test]
    fn complete_graph_maxima_under_both_rules() {
        // K4 is hamiltonian-connected, so the permissive maximum is bounded
        // only by witness combinatorics; the terminal maximum is capped by
        // the matching number, here 2.
        let g = Graph::complete(4);
        let got = max_hpc_set(&g).unwrap();
        assert!(got.exhaustive);
        assert_eq!(got.certificate.unwrap().edges(), &[(0, 1), (2, 3)]);
        let got = max_hpc_set_with(&g, WitnessRule::EndpointsOnly, &Meter::unlimited()).unwrap();
        assert!(got.exhaustive);
        let cert = got.certificate.unwrap();
        assert_eq!(cert.edges(), &[(0, 1), (0, 2), (0, 3), (1, 2)]);
        assert!(cert.validate(&g));
    }

    #[test]
    fn a_budget_abort_is_reported_as_inconclusive() {
        let g = crate::families::petersen();
        let meter = Meter::with_budget(3);
        let got = max_hpc_set_with(&g, WitnessRule::default(), &meter).unwrap();
        assert!(!got.exhaustive);
        // A verification under the same dead budget errors out instead.
        let spokes = [(0, 5), (1, 6), (2, 7), (3, 8), (4, 9)];
        assert_eq!(
            is_hpath_connected_with(
                &g,
                &spokes,
                WitnessRule::default(),
                &SolveConfig::default(),
                &meter
            ),
            Err(HpcError::Solve(SolveError::BudgetExhausted))
        );
    }

    #[test]
    fn spoke_matching_of_the_petersen_graph_certifies() {
        let g = crate::families::petersen();
        let spokes = [(0, 5), (1, 6), (2, 7), (3, 8), (4, 9)];
        let VerifyOutcome::Certified(cert) = is_hpath_connected(&g, &spokes).unwrap() else {
            panic!("the spoke matching must certify");
        };
        assert_eq!(cert.size(), 5);
        assert_eq!(cert.witnesses().len(), 10);
        assert_eq!(cert.rule(), WitnessRule::TerminalEdges);
        assert!(cert.validate(&g));
    }

    #[test]
    fn maximum_on_the_petersen_graph_depends_on_the_rule() {
        let g = crate::families::petersen();
        // Terminal rule: certified sets are matchings here, and the best
        // is a perfect matching of all five pair positions.
        let got = max_hpc_set(&g).unwrap();
        assert!(got.exhaustive);
        let cert = got.certificate.unwrap();
        assert_eq!(cert.edges(), &[(0, 1), (2, 3), (4, 9), (5, 7), (6, 8)]);
        assert!(cert.validate(&g));
        // Permissive rule: overlapping edges are allowed and seven fit.
        let got = max_hpc_set_with(&g, WitnessRule::EndpointsOnly, &Meter::unlimited()).unwrap();
        assert!(got.exhaustive);
        let cert = got.certificate.unwrap();
        assert_eq!(
            cert.edges(),
            &[(0, 1), (0, 4), (1, 2), (3, 8), (5, 7), (6, 9), (7, 9)]
        );
        assert!(cert.validate(&g));
        // A six-edge set therefore exists under the permissive rule but
        // is provably absent under the terminal one.
        let got =
            find_hpc_set_with(&g, 6, WitnessRule::EndpointsOnly, &Meter::unlimited()).unwrap();
        assert!(got.exhaustive);
        assert_eq!(got.certificate.map(|c| c.size()), Some(6));
        let got = find_hpc_set(&g, 6).unwrap();
        assert!(got.exhaustive);
        assert!(got.certificate.is_none());
    }

    #[test]
    fn verification_respects_input_edge_order() {
        // The same set in a different order certifies with reindexed
        // witnesses; the edges() echo follows the input order.
        let g = c5();
        let VerifyOutcome::Certified(cert) = is_hpath_connected(&g, &[(3, 4), (1, 0)]).unwrap()
        else {
            panic!("expected a certificate");
        };
        assert_eq!(cert.edges(), &[(3, 4), (0, 1)]);
        assert!(cert.validate(&g));
    }
}
