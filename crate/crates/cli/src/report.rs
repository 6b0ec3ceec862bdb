//! Report rendering: the versioned JSON schema and the matching text forms.
//!
//! Schema contract (version "1"): every ratio appears as an object with an
//! authoritative exact `"p/q"` string plus a convenience decimal; solver
//! statistics (engine, node expansions, wall time) live under a dedicated
//! `stats` key so consumers comparing runs can drop the one nondeterministic
//! field (`wall_ms`) wholesale.

use std::time::Instant;

use hampath::hpc::{HpcCertificate, WitnessRule};
use hampath::metrics::Classification;
use hampath::{EngineChoice, Graph, Meter, Ratio, SolveConfig};
use serde::Serialize;

/// JSON schema version stamped on every report.
pub const SCHEMA: &str = "1";

#[derive(Serialize)]
pub struct RatioJson {
    /// Canonical `p/q`; parsing this back yields the identical ratio.
    pub exact: String,
    /// Nearest double, for eyeballing only.
    pub decimal: f64,
}

impl From<Ratio> for RatioJson {
    fn from(r: Ratio) -> Self {
        RatioJson {
            exact: r.to_string(),
            decimal: r.to_f64(),
        }
    }
}

#[derive(Serialize)]
pub struct InputJson {
    pub source: String,
    pub order: usize,
    pub size: usize,
}

impl InputJson {
    pub fn new(source: &str, g: &Graph) -> Self {
        InputJson {
            source: source.to_owned(),
            order: g.order(),
            size: g.size(),
        }
    }
}

#[derive(Serialize)]
pub struct StatsJson {
    pub engine: &'static str,
    pub expansions: u64,
    pub wall_ms: u128,
}

impl StatsJson {
    pub fn collect(g: &Graph, config: &SolveConfig, meter: &Meter, started: Instant) -> Self {
        StatsJson {
            engine: engine_name(g, config),
            expansions: meter.expansions(),
            wall_ms: started.elapsed().as_millis(),
        }
    }

    pub fn text(&self) -> String {
        format!(
            "stats: engine {}, expansions {}, wall {} ms",
            self.engine, self.expansions, self.wall_ms
        )
    }
}

/// The engine a configuration resolves to for this graph, as a stable name.
pub fn engine_name(g: &Graph, config: &SolveConfig) -> &'static str {
    match hampath::engine::selected_engine(g.order(), config) {
        Ok(EngineChoice::SubsetDp) => "subset-dp",
        Ok(EngineChoice::Backtracking) => "backtracking",
        // Auto never comes back resolved, and a selection error means the
        // queries themselves will report it; the label stays honest.
        _ => "unresolved",
    }
}

/// Stable wire name of a witness rule.
pub fn rule_name(rule: WitnessRule) -> &'static str {
    match rule {
        WitnessRule::TerminalEdges => "terminal-edges",
        WitnessRule::EndpointsOnly => "endpoints-only",
    }
}

#[derive(Serialize)]
pub struct ClassificationJson {
    pub hamiltonian: bool,
    pub traceable_starts: Vec<u32>,
    pub homogeneously_traceable: bool,
    pub hamiltonian_connected: bool,
    pub exceptional_vertices: Vec<u32>,
    pub hypohamiltonian: bool,
    pub almost_hypohamiltonian: bool,
}

impl From<&Classification> for ClassificationJson {
    fn from(c: &Classification) -> Self {
        ClassificationJson {
            hamiltonian: c.hamiltonian,
            traceable_starts: c.traceable_starts.clone(),
            homogeneously_traceable: c.homogeneously_traceable,
            hamiltonian_connected: c.hamiltonian_connected,
            exceptional_vertices: c.exceptional_vertices.clone(),
            hypohamiltonian: c.hypohamiltonian,
            almost_hypohamiltonian: c.almost_hypohamiltonian,
        }
    }
}

#[derive(Serialize)]
pub struct AnalyzeJson {
    pub schema: &'static str,
    pub command: &'static str,
    pub input: InputJson,
    pub classification: ClassificationJson,
    pub pair_strung_count: u64,
    pub pair_connected_ratio: RatioJson,
    pub stats: StatsJson,
}

#[derive(Serialize)]
pub struct WitnessJson {
    /// Positions into `edges` of the pair this path witnesses.
    pub pair: [usize; 2],
    pub path: Vec<u32>,
}

#[derive(Serialize)]
pub struct CertificateJson {
    pub edges: Vec<[u32; 2]>,
    pub witnesses: Vec<WitnessJson>,
}

impl From<&HpcCertificate> for CertificateJson {
    fn from(cert: &HpcCertificate) -> Self {
        CertificateJson {
            edges: cert.edges().iter().map(|&(u, v)| [u, v]).collect(),
            witnesses: cert
                .witnesses()
                .iter()
                .map(|w| WitnessJson {
                    pair: [w.i, w.j],
                    path: w.path.vertices().to_vec(),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct HpcVerifyJson {
    pub schema: &'static str,
    pub command: &'static str,
    pub input: InputJson,
    pub witness_rule: &'static str,
    pub edges: Vec<[u32; 2]>,
    /// `"certified"` or `"failed"`.
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failed_pair: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
    pub stats: StatsJson,
}

#[derive(Serialize)]
pub struct HpcSearchJson {
    pub schema: &'static str,
    pub command: &'static str,
    pub input: InputJson,
    pub witness_rule: &'static str,
    /// `"size"` for a target-size search, `"max"` otherwise.
    pub mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
    pub budget: u64,
    /// `"found"`, `"none"` (proven absent), or `"inconclusive"` (budget
    /// ran out without an answer).
    pub status: &'static str,
    pub exhaustive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
    pub stats: StatsJson,
}

/// Serialize any report to its wire form (pretty JSON, stable field order).
pub fn to_json<T: Serialize>(report: &T) -> String {
    serde_json::to_string_pretty(report).expect("reports serialize infallibly")
}

/// `yes`/`no` for text reports.
pub fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Space-joined vertex list, or `(none)`.
pub fn vertex_list(vs: &[u32]) -> String {
    if vs.is_empty() {
        "(none)".to_owned()
    } else {
        vs.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
    }
}

/// `(u,v) (x,y) ...` edge list for text reports.
pub fn edge_list(edges: &[(u32, u32)]) -> String {
    edges
        .iter()
        .map(|&(u, v)| format!("({u},{v})"))
        .collect::<Vec<_>>()
        .join(" ")
}
