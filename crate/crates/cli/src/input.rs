//! Input file handling: graph loading with format detection and edge-set
//! files.
//!
//! Graph files may be graph6 or edge-list text; the two are never
//! ambiguous (graph6 payload bytes are all `?`..`~`, while an edge list
//! starts with a decimal header), so detection just tries both parsers
//! and reports both diagnostics when neither accepts the file.

use std::fs;
use std::path::Path;

use hampath::graph::Graph;
use hampath::graph6;

/// Read and parse a graph file (graph6 or edge list).
pub fn load_graph(path: &Path) -> Result<Graph, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_graph_text(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_graph_text(text: &str) -> Result<Graph, String> {
    match graph6::parse_graph6(text) {
        Ok(g) => Ok(g),
        Err(g6) => match Graph::parse_edge_list(text) {
            Ok(g) => Ok(g),
            Err(el) => Err(format!(
                "not parseable as graph6 ({g6}) nor as an edge list ({el})"
            )),
        },
    }
}

/// Read an edge-set file: one `u v` pair per line, `#` comments and blank
/// lines ignored. Unlike a graph file there is no header line.
pub fn load_edge_set(path: &Path) -> Result<Vec<(u32, u32)>, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_edge_set(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_edge_set(text: &str) -> Result<Vec<(u32, u32)>, String> {
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(u), Some(v), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(format!("line {}: expected \"u v\", got {raw:?}", idx + 1));
        };
        let u: u32 = u
            .parse()
            .map_err(|_| format!("line {}: bad vertex {u:?}", idx + 1))?;
        let v: u32 = v
            .parse()
            .map_err(|_| format!("line {}: bad vertex {v:?}", idx + 1))?;
        edges.push((u, v));
    }
    if edges.is_empty() {
        return Err("edge file lists no edges".into());
    }
    Ok(edges)
}
