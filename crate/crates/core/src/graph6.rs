//! graph6 encoding and decoding.
//!
//! graph6 is the compact ASCII format used by nauty and by the standard
//! small-graph catalogues: a header encoding the order `n`, followed by the
//! upper triangle of the adjacency matrix read column by column — bit
//! `(i, j)` for `j` in `1..n`, `i` in `0..j` — packed big-endian into 6-bit
//! groups, each group offset by 63 into the printable range `?`..`~`.
//!
//! Orders 0..=62 use a single header byte `n + 63`; orders 63..=258047 use
//! `~` followed by three bytes carrying an 18-bit big-endian order. The
//! 36-bit form beyond that is rejected as out of range. Encoding is
//! canonical: one graph, one string.

use crate::graph::{Graph, GraphError};

/// Largest order [`parse_graph6`] and [`to_graph6`] support (the 18-bit
/// header form).
pub const MAX_GRAPH6_ORDER: usize = 258_047;

fn malformed(msg: impl Into<String>) -> GraphError {
    GraphError::MalformedGraph6(msg.into())
}

/// Decodes a single graph6 line.
///
/// Leading `>>graph6<<` headers and surrounding whitespace are tolerated;
/// everything else is validated strictly, including the exact data length
/// for the declared order.
///
/// # Examples
///
/// ```
/// use hampath::graph6::parse_graph6;
///
/// let k3 = parse_graph6("Bw").unwrap();
/// assert_eq!((k3.order(), k3.size()), (3, 3));
/// ```
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let mut s = text.trim();
    if let Some(rest) = s.strip_prefix(">>graph6<<") {
        s = rest;
    }
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(malformed("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(malformed(format!("byte {b:#04x} outside the graph6 range")));
    }

    let (n, header_len) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        return Err(malformed(format!(
            "order beyond {MAX_GRAPH6_ORDER} is not supported"
        )));
    } else {
        if bytes.len() < 4 {
            return Err(malformed("truncated long-form order"));
        }
        let n = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        (n, 4)
    };

    let pairs = n * n.saturating_sub(1) / 2;
    let groups = pairs.div_ceil(6);
    if bytes.len() != header_len + groups {
        return Err(malformed(format!(
            "order {n} needs {} data bytes, found {}",
            groups,
            bytes.len() - header_len
        )));
    }

    let data = &bytes[header_len..];
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n as u32 {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    // Padding bits beyond the triangle must be zero in canonical graph6;
    // tolerate them silently, as nauty's readers do.
    edges.sort_unstable();
    Ok(Graph::from_canonical(n, edges))
}

/// Encodes a graph as its canonical graph6 line (no trailing newline).
///
/// # Panics
///
/// Panics if the order exceeds [`MAX_GRAPH6_ORDER`].
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(
        n <= MAX_GRAPH6_ORDER,
        "graph6 supports orders up to {MAX_GRAPH6_ORDER}, got {n}"
    );
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push((n >> 12) as u8 + 63);
        out.push((n >> 6 & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n as u32 {
        for i in 0..j {
            group = group << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    /// Hand-checked encodings: `?` is the empty graph on 0 vertices, `@` a
    /// single vertex, `A_` one edge, `B?`/`Bw` the empty/complete graph on
    /// 3 vertices, `Cl` the 4-cycle (bits 101101 for pairs
    /// 01,02,12,03,13,23), `C~` the complete graph on 4 vertices.
    const KNOWN: &[(&str, usize, usize)] = &[
        ("?", 0, 0),
        ("@", 1, 0),
        ("A_", 2, 1),
        ("A?", 2, 0),
        ("B?", 3, 0),
        ("Bw", 3, 3),
        ("Cl", 4, 4),
        ("C~", 4, 6),
    ];

    #[test]
    fn known_encodings_decode_to_the_right_graphs() {
        for &(text, n, m) in KNOWN {
            let g = parse_graph6(text).unwrap();
            assert_eq!((g.order(), g.size()), (n, m), "decoding {text:?}");
        }
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3));
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6("Cl").unwrap(), Graph::cycle(4));
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4));
    }

    #[test]
    fn known_encodings_are_produced_byte_exactly() {
        for &(text, n, _) in KNOWN {
            let g = parse_graph6(text).unwrap();
            assert_eq!(to_graph6(&g), text, "re-encoding the graph of order {n}");
        }
    }

    #[test]
    fn header_prefix_and_whitespace_are_tolerated() {
        let g = parse_graph6(">>graph6<<Bw\n").unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn long_form_round_trips_at_order_63() {
        let g = Graph::from_edge_list(63, &[(0, 1)]).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with("~??~_"), "got {s:?}");
        assert_eq!(s.len(), 4 + (63 * 62 / 2usize).div_ceil(6));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs_are_rejected() {
        for bad in [
            "",         // empty
            " ",        // only whitespace
            "B",        // truncated data for order 3
            "Bww",      // excess data for order 3
            "B\u{1}",   // byte below the printable range
            "~~??????", // 36-bit order form
            "~?",       // truncated long-form header
        ] {
            assert!(
                matches!(parse_graph6(bad), Err(GraphError::MalformedGraph6(_))),
                "expected rejection of {bad:?}"
            );
        }
    }

    #[test]
    fn round_trip_is_identity_on_a_small_census() {
        // All graphs on 4 vertices (by edge subset), plus a scattering of
        // mid-size graphs: decode(encode(g)) == g and encode is stable.
        let all_pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        for subset in 0u32..64 {
            let edges: Vec<_> = all_pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| subset >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edge_list(4, &edges).unwrap();
            let s = to_graph6(&g);
            assert_eq!(parse_graph6(&s).unwrap(), g);
            assert_eq!(to_graph6(&parse_graph6(&s).unwrap()), s);
        }
    }
}
