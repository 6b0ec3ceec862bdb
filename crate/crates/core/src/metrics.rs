//! Pair-connectivity metrics and structural classification.
//!
//! The central quantity is the *pair connected ratio*: the fraction of
//! unordered vertex pairs joined by a hamiltonian path. A graph is
//! hamiltonian-connected exactly when the ratio is 1, and for
//! nonhamiltonian graphs the ratio is provably capped below 1 — joining
//! two *adjacent* vertices by a hamiltonian path would close a hamiltonian
//! cycle, so at least a perfect matching's worth of pairs is always
//! missing. Ratios are exact rationals ([`Ratio`]); nothing here rounds.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Sub};

use thiserror::Error;

use crate::engine::{self, Meter, PairTable, SolveConfig, SolveError};
use crate::graph::Graph;

/// Errors reported by the metrics layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricsError {
    /// The underlying solver failed (size caps, budget, bad vertices).
    #[error(transparent)]
    Solve(#[from] SolveError),
    /// The graph is too small for the requested quantity to make sense.
    #[error("graph order {order} is too small to {what}")]
    TooSmall { order: usize, what: &'static str },
    /// The arguments are outside the stated domain of a formula.
    #[error("{0}")]
    Domain(String),
}

/// An exact rational number in canonical form: reduced to lowest terms
/// with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: i64,
    den: i64,
}

impl Ratio {
    /// The rational `num / den`, canonicalized.
    ///
    /// # Panics
    /// If `den` is zero, or if the canonical form overflows `i64`.
    pub fn new(num: i64, den: i64) -> Ratio {
        assert!(den != 0, "ratio denominator must be nonzero");
        Ratio::reduce(num as i128, den as i128)
    }

    /// The integer `n` as a ratio with denominator 1.
    pub fn from_integer(n: i64) -> Ratio {
        Ratio { num: n, den: 1 }
    }

    /// Like [`Ratio::new`] but with wide inputs, for closed forms whose
    /// raw numerator and denominator may only fit `i64` after reduction.
    pub(crate) fn new_i128(num: i128, den: i128) -> Ratio {
        assert!(den != 0, "ratio denominator must be nonzero");
        Ratio::reduce(num, den)
    }

    fn reduce(num: i128, den: i128) -> Ratio {
        debug_assert!(den != 0);
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()).max(1) as i128;
        let num = sign as i128 * num / g;
        let den = sign as i128 * den / g;
        Ratio {
            num: i64::try_from(num).expect("ratio numerator overflows i64"),
            den: i64::try_from(den).expect("ratio denominator overflows i64"),
        }
    }

    /// Numerator of the canonical form (carries the sign).
    pub fn numer(self) -> i64 {
        self.num
    }

    /// Denominator of the canonical form (always positive).
    pub fn denom(self) -> i64 {
        self.den
    }

    /// Absolute value.
    pub fn abs(self) -> Ratio {
        Ratio {
            num: self.num.abs(),
            den: self.den,
        }
    }

    /// Nearest double, for display alongside the exact form.
    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Ratio {
    /// Always `numerator/denominator`, even for integers, so output is
    /// unambiguous about being exact.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// A string that does not parse as a ratio.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {input:?} as a ratio (expected \"p/q\" or an integer)")]
pub struct ParseRatioError {
    input: String,
}

impl std::str::FromStr for Ratio {
    type Err = ParseRatioError;

    /// Parse `"p/q"` (or a bare integer `"p"`) into canonical form, so
    /// that displaying and re-parsing a ratio is the identity.
    fn from_str(s: &str) -> Result<Ratio, ParseRatioError> {
        let err = || ParseRatioError {
            input: s.to_owned(),
        };
        let (num, den) = match s.split_once('/') {
            Some((num, den)) => (
                num.parse().map_err(|_| err())?,
                den.parse().map_err(|_| err())?,
            ),
            None => (s.parse().map_err(|_| err())?, 1),
        };
        if den == 0 {
            return Err(err());
        }
        Ok(Ratio::new(num, den))
    }
}

impl Add for Ratio {
    type Output = Ratio;
    fn add(self, rhs: Ratio) -> Ratio {
        Ratio::reduce(
            self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128,
            self.den as i128 * rhs.den as i128,
        )
    }
}

impl Sub for Ratio {
    type Output = Ratio;
    fn sub(self, rhs: Ratio) -> Ratio {
        Ratio::reduce(
            self.num as i128 * rhs.den as i128 - rhs.num as i128 * self.den as i128,
            self.den as i128 * rhs.den as i128,
        )
    }
}

impl Mul for Ratio {
    type Output = Ratio;
    fn mul(self, rhs: Ratio) -> Ratio {
        Ratio::reduce(
            self.num as i128 * rhs.num as i128,
            self.den as i128 * rhs.den as i128,
        )
    }
}

impl Div for Ratio {
    type Output = Ratio;
    fn div(self, rhs: Ratio) -> Ratio {
        assert!(rhs.num != 0, "division by zero ratio");
        Ratio::reduce(
            self.num as i128 * rhs.den as i128,
            self.den as i128 * rhs.num as i128,
        )
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Ratio) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Ratio) -> Ordering {
        // Denominators are positive, so cross-multiplication preserves order.
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Number of unordered vertex pairs joined by a hamiltonian path.
pub fn pair_strung_count(g: &Graph) -> Result<u64, MetricsError> {
    pair_strung_count_with(g, &SolveConfig::default(), &Meter::unlimited())
}

/// [`pair_strung_count`] with explicit configuration and metering.
pub fn pair_strung_count_with(
    g: &Graph,
    config: &SolveConfig,
    meter: &Meter,
) -> Result<u64, MetricsError> {
    check_has_pairs(g)?;
    Ok(engine::ham_pair_table_with(g, config, meter)?.count())
}

/// The pair connected ratio: joined pairs over all `n(n-1)/2` pairs.
pub fn pair_connected_ratio(g: &Graph) -> Result<Ratio, MetricsError> {
    pair_connected_ratio_with(g, &SolveConfig::default(), &Meter::unlimited())
}

/// [`pair_connected_ratio`] with explicit configuration and metering.
pub fn pair_connected_ratio_with(
    g: &Graph,
    config: &SolveConfig,
    meter: &Meter,
) -> Result<Ratio, MetricsError> {
    let joined = pair_strung_count_with(g, config, meter)?;
    Ok(Ratio::new(joined as i64, total_pairs(g.order())))
}

/// The ratio of `table`, for callers that already computed the table.
pub fn ratio_of_table(table: &PairTable) -> Result<Ratio, MetricsError> {
    if table.order() < 2 {
        return Err(MetricsError::TooSmall {
            order: table.order(),
            what: "have any vertex pairs",
        });
    }
    Ok(Ratio::new(table.count() as i64, total_pairs(table.order())))
}

/// Upper bound `(n-2)/n` on the pair connected ratio of a nonhamiltonian
/// graph of order `n > 3`.
pub fn pair_ratio_upper_bound(n: usize) -> Result<Ratio, MetricsError> {
    if n <= 3 {
        return Err(MetricsError::Domain(format!(
            "the nonhamiltonian pair bound needs order above 3, got {n}"
        )));
    }
    Ok(Ratio::new(n as i64 - 2, n as i64))
}

/// Upper bound `(n-1)(n-2)/2` on the number of joined pairs in a
/// nonhamiltonian graph of order `n > 3`; the ratio bound times `n(n-1)/2`.
pub fn pair_count_upper_bound(n: usize) -> Result<u64, MetricsError> {
    pair_ratio_upper_bound(n)?;
    Ok((n as u64 - 1) * (n as u64 - 2) / 2)
}

/// Does the adjacent-pair obstruction hold: no edge of `g` joins a pair
/// that `table` reports as hamiltonian-path connected?
///
/// A hamiltonian path between adjacent vertices closes into a hamiltonian
/// cycle, so this must hold for every nonhamiltonian graph; a violation
/// means the graph is hamiltonian (or the table is wrong).
pub fn edge_pair_obstruction_holds(g: &Graph, table: &PairTable) -> bool {
    g.edges().iter().all(|&(u, v)| !table.connected(u, v))
}

/// How a graph sits in the hamiltonian landscape. Produced by [`classify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    /// Has a hamiltonian cycle.
    pub hamiltonian: bool,
    /// Vertices at which some hamiltonian path starts, ascending.
    pub traceable_starts: Vec<u32>,
    /// Every vertex starts a hamiltonian path.
    pub homogeneously_traceable: bool,
    /// Every pair of distinct vertices is joined by a hamiltonian path.
    pub hamiltonian_connected: bool,
    /// Vertices whose deletion leaves a nonhamiltonian graph, ascending.
    pub exceptional_vertices: Vec<u32>,
    /// Nonhamiltonian, but every vertex deletion leaves a hamiltonian graph.
    pub hypohamiltonian: bool,
    /// Nonhamiltonian with exactly one exceptional vertex.
    pub almost_hypohamiltonian: bool,
}

/// Classify `g` (order 3 or more): cycle existence, the all-pairs path
/// table, and hamiltonicity of every single-vertex deletion.
pub fn classify(g: &Graph) -> Result<Classification, MetricsError> {
    classify_with(g, &SolveConfig::default(), &Meter::unlimited())
}

/// [`classify`] with explicit configuration and metering. The deletions
/// are independent subproblems and run in parallel when configured.
pub fn classify_with(
    g: &Graph,
    config: &SolveConfig,
    meter: &Meter,
) -> Result<Classification, MetricsError> {
    let n = g.order();
    if n < 3 {
        return Err(MetricsError::TooSmall {
            order: n,
            what: "classify",
        });
    }
    let hamiltonian = engine::has_ham_cycle_with(g, config, meter)?;
    let table = engine::ham_pair_table_with(g, config, meter)?;
    let deletion_nonhamiltonian = engine::run_indexed(n, config, |v| {
        let rest = g.delete_vertex(v as u32).expect("vertex index is in range");
        if rest.order() < 3 {
            return Ok(true); // below order 3 nothing is hamiltonian
        }
        Ok(!engine::has_ham_cycle_with(&rest, config, meter)?)
    })?;

    let traceable_starts: Vec<u32> = (0..n as u32).filter(|&v| table.row(v) != 0).collect();
    let exceptional_vertices: Vec<u32> = (0..n as u32)
        .filter(|&v| deletion_nonhamiltonian[v as usize])
        .collect();
    Ok(Classification {
        hamiltonian,
        homogeneously_traceable: traceable_starts.len() == n,
        hamiltonian_connected: table.all_pairs_connected(),
        hypohamiltonian: !hamiltonian && exceptional_vertices.is_empty(),
        almost_hypohamiltonian: !hamiltonian && exceptional_vertices.len() == 1,
        traceable_starts,
        exceptional_vertices,
    })
}

/// The classical necessary conditions for hamiltonian-connectedness on
/// graphs of order at least 4: minimum degree 3, and at least `⌈3n/2⌉`
/// edges. Checked by [`moon_check`]; both passing proves nothing, but a
/// single failure rules hamiltonian-connectedness out without any search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoonCheck {
    /// Every vertex has degree at least 3.
    pub min_degree_ok: bool,
    /// Vertices of degree below 3, ascending.
    pub violating_vertices: Vec<u32>,
    /// The graph has at least `⌈3n/2⌉` edges.
    pub edge_count_ok: bool,
    /// Actual number of edges.
    pub edge_count: usize,
    /// The threshold `⌈3n/2⌉`.
    pub edges_required: usize,
}

impl MoonCheck {
    /// Both necessary conditions hold.
    pub fn passes(&self) -> bool {
        self.min_degree_ok && self.edge_count_ok
    }
}

/// Evaluate [`MoonCheck`] for `g` (order at least 4).
pub fn moon_check(g: &Graph) -> Result<MoonCheck, MetricsError> {
    let n = g.order();
    if n < 4 {
        return Err(MetricsError::Domain(format!(
            "the degree and edge-count conditions apply from order 4, got {n}"
        )));
    }
    let violating_vertices: Vec<u32> = (0..n as u32).filter(|&v| g.degree(v) < 3).collect();
    let edges_required = (3 * n).div_ceil(2);
    Ok(MoonCheck {
        min_degree_ok: violating_vertices.is_empty(),
        violating_vertices,
        edge_count_ok: g.size() >= edges_required,
        edge_count: g.size(),
        edges_required,
    })
}

fn check_has_pairs(g: &Graph) -> Result<(), MetricsError> {
    if g.order() < 2 {
        return Err(MetricsError::TooSmall {
            order: g.order(),
            what: "have any vertex pairs",
        });
    }
    Ok(())
}

fn total_pairs(n: usize) -> i64 {
    (n as i64) * (n as i64 - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratios_canonicalize_on_construction() {
        assert_eq!(Ratio::new(2, 4), Ratio::new(1, 2));
        assert_eq!(Ratio::new(1, -2), Ratio::new(-1, 2));
        assert_eq!(Ratio::new(-3, -6), Ratio::new(1, 2));
        assert_eq!(Ratio::new(0, -7), Ratio::new(0, 1));
        assert_eq!(Ratio::new(1, -2).to_string(), "-1/2");
        assert_eq!(Ratio::from_integer(5).to_string(), "5/1");
        assert_eq!(Ratio::new(30, 45).numer(), 2);
        assert_eq!(Ratio::new(30, 45).denom(), 3);
    }

    #[test]
    fn ratio_arithmetic_and_order() {
        let half = Ratio::new(1, 2);
        let third = Ratio::new(1, 3);
        assert_eq!(half + third, Ratio::new(5, 6));
        assert_eq!(half - third, Ratio::new(1, 6));
        assert_eq!(third - half, Ratio::new(-1, 6));
        assert_eq!((third - half).abs(), Ratio::new(1, 6));
        assert_eq!(half * third, Ratio::new(1, 6));
        assert_eq!(half / third, Ratio::new(3, 2));
        assert!(third < half);
        assert!(Ratio::new(-1, 2) < Ratio::new(1, 1_000_000));
        assert!(Ratio::new(198, 245) > Ratio::new(16, 21));
        assert!((half.to_f64() - 0.5).abs() < 1e-12);
    }

    #[test]
    #[should_panic(expected = "denominator must be nonzero")]
    fn zero_denominator_panics() {
        let _ = Ratio::new(1, 0);
    }

    #[test]
    fn ratios_parse_back_from_their_display_form() {
        for r in [
            Ratio::new(2, 3),
            Ratio::new(-7, 5),
            Ratio::from_integer(0),
            Ratio::new(198, 245),
        ] {
            assert_eq!(r.to_string().parse::<Ratio>(), Ok(r));
        }
        assert_eq!("6/4".parse::<Ratio>(), Ok(Ratio::new(3, 2)));
        assert_eq!("5".parse::<Ratio>(), Ok(Ratio::from_integer(5)));
        for bad in ["", "1/0", "a/b", "1/2/3", "1.5", "1 / 2"] {
            assert!(bad.parse::<Ratio>().is_err(), "{bad:?} must not parse");
        }
    }

    fn petersen() -> Graph {
        Graph::from_edge_list(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (0, 4),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (6, 9),
                (6, 8),
                (5, 8),
            ],
        )
        .unwrap()
    }

    /// Two triangles glued at vertex 0: nonhamiltonian with a cut vertex.
    fn bowtie() -> Graph {
        Graph::from_edge_list(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn pair_ratios_of_known_graphs() {
        assert_eq!(
            pair_connected_ratio(&Graph::cycle(5)).unwrap(),
            Ratio::new(1, 2)
        );
        assert_eq!(
            pair_connected_ratio(&Graph::complete(5)).unwrap(),
            Ratio::new(1, 1)
        );
        assert_eq!(pair_connected_ratio(&petersen()).unwrap(), Ratio::new(2, 3));
        assert_eq!(pair_strung_count(&petersen()).unwrap(), 30);
    }

    #[test]
    fn upper_bounds_match_their_closed_forms() {
        assert_eq!(pair_ratio_upper_bound(10).unwrap(), Ratio::new(4, 5));
        assert_eq!(pair_ratio_upper_bound(4).unwrap(), Ratio::new(1, 2));
        assert_eq!(pair_count_upper_bound(10).unwrap(), 36);
        assert!(pair_ratio_upper_bound(3).is_err());
        // The Petersen graph sits strictly under its order's bound.
        assert!(pair_connected_ratio(&petersen()).unwrap() < pair_ratio_upper_bound(10).unwrap());
    }

    #[test]
    fn obstruction_holds_exactly_for_nonhamiltonian_graphs() {
        let p = petersen();
        let table = engine::ham_pair_table(&p).unwrap();
        assert!(edge_pair_obstruction_holds(&p, &table));

        let c6 = Graph::cycle(6);
        let table = engine::ham_pair_table(&c6).unwrap();
        assert!(!edge_pair_obstruction_holds(&c6, &table));
    }

    #[test]
    fn petersen_classification() {
        let c = classify(&petersen()).unwrap();
        assert!(!c.hamiltonian);
        assert!(c.homogeneously_traceable);
        assert!(!c.hamiltonian_connected);
        assert!(c.hypohamiltonian);
        assert!(!c.almost_hypohamiltonian);
        assert!(c.exceptional_vertices.is_empty());
        assert_eq!(c.traceable_starts, (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn bowtie_classification() {
        let c = classify(&bowtie()).unwrap();
        assert!(!c.hamiltonian);
        // The cut vertex starts no hamiltonian path; the other four do.
        assert_eq!(c.traceable_starts, vec![1, 2, 3, 4]);
        assert!(!c.homogeneously_traceable);
        assert!(!c.hamiltonian_connected);
        // Every deletion leaves either a cut vertex or a missing link.
        assert_eq!(c.exceptional_vertices, vec![0, 1, 2, 3, 4]);
        assert!(!c.hypohamiltonian);
        assert!(!c.almost_hypohamiltonian);
    }

    #[test]
    fn hamiltonian_graphs_are_never_hypohamiltonian() {
        let c = classify(&Graph::complete(4)).unwrap();
        assert!(c.hamiltonian && c.hamiltonian_connected && c.homogeneously_traceable);
        assert!(c.exceptional_vertices.is_empty());
        assert!(!c.hypohamiltonian);

        // C4 is hamiltonian yet every deletion is nonhamiltonian: the
        // hypohamiltonian flags must still be off.
        let c = classify(&Graph::cycle(4)).unwrap();
        assert!(c.hamiltonian);
        assert_eq!(c.exceptional_vertices, vec![0, 1, 2, 3]);
        assert!(!c.hypohamiltonian && !c.almost_hypohamiltonian);
    }

    #[test]
    fn classification_respects_configuration() {
        let sequential = SolveConfig {
            parallel: false,
            ..SolveConfig::default()
        };
        let base = classify(&petersen()).unwrap();
        assert_eq!(
            base,
            classify_with(&petersen(), &sequential, &Meter::unlimited()).unwrap()
        );
    }

    #[test]
    fn moon_conditions_on_known_graphs() {
        let k4 = moon_check(&Graph::complete(4)).unwrap();
        assert!(k4.passes() && k4.min_degree_ok && k4.edge_count_ok);
        assert_eq!((k4.edge_count, k4.edges_required), (6, 6));

        let k5 = moon_check(&Graph::complete(5)).unwrap();
        assert!(k5.passes());

        let c8 = moon_check(&Graph::cycle(8)).unwrap();
        assert!(!c8.passes());
        assert!(!c8.min_degree_ok && !c8.edge_count_ok);
        assert_eq!(c8.violating_vertices.len(), 8);
        assert_eq!((c8.edge_count, c8.edges_required), (8, 12));

        assert!(matches!(
            moon_check(&Graph::complete(3)),
            Err(MetricsError::Domain(_))
        ));
    }

    #[test]
    fn small_orders_are_rejected() {
        let k1 = Graph::from_edge_list(1, &[]).unwrap();
        assert!(matches!(
            pair_strung_count(&k1),
            Err(MetricsError::TooSmall { order: 1, .. })
        ));
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert!(matches!(
            classify(&k2),
            Err(MetricsError::TooSmall { order: 2, .. })
        ));
    }
}
