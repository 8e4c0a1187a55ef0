//! Textual graph formats: a plain edge list and graph6.
//!
//! Both codecs are pure string transforms. Encoding compacts vertex ids to
//! `0..n-1` preserving their order, so graphs whose id space has gaps (after
//! vertex deletion or contraction) still serialize.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::graph::{Graph, GraphError};

/// Parses the edge-list format.
///
/// One edge `u v` per line. Blank lines and `#` comments are ignored. An
/// optional first line `n <count> [directed]` fixes the vertex count and
/// directedness; without it the graph is undirected with `n = 1 + max id`,
/// or empty when there are no edges.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(u32, bool)> = None;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut max_id: Option<u32> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();

        if header.is_none() && edges.is_empty() && tokens[0] == "n" {
            header = Some(parse_header(&tokens, line)?);
            continue;
        }

        if tokens.len() != 2 {
            return Err(GraphError::Parse {
                line,
                reason: format!("expected 'u v', got '{content}'"),
            });
        }
        let u = parse_id(tokens[0], line)?;
        let v = parse_id(tokens[1], line)?;
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        if let Some((n, _)) = header {
            if u >= n || v >= n {
                return Err(GraphError::Parse {
                    line,
                    reason: format!("vertex id {} exceeds declared count {n}", u.max(v)),
                });
            }
        }
        max_id = Some(max_id.unwrap_or(0).max(u).max(v));
        edges.push((u, v));
    }

    let (n, directed) = match header {
        Some(h) => h,
        None => (max_id.map_or(0, |m| m + 1), false),
    };
    Graph::from_edges(directed, n, &edges)
}

fn parse_header(tokens: &[&str], line: usize) -> Result<(u32, bool), GraphError> {
    let malformed = |reason: String| GraphError::Parse { line, reason };
    match tokens {
        ["n", count] => Ok((parse_id(count, line)?, false)),
        ["n", count, "directed"] => Ok((parse_id(count, line)?, true)),
        _ => Err(malformed(
            "header must be 'n <count>' or 'n <count> directed'".to_string(),
        )),
    }
}

fn parse_id(token: &str, line: usize) -> Result<u32, GraphError> {
    token.parse().map_err(|_| GraphError::Parse {
        line,
        reason: format!("'{token}' is not a vertex id"),
    })
}

/// Renders a graph in the edge-list format, ids compacted to `0..n-1`.
/// The header line is always present so edgeless vertices round-trip.
pub fn to_edge_list(g: &Graph) -> String {
    let ids: Vec<u32> = g.vertices().collect();
    let rank = |v: u32| ids.binary_search(&v).expect("endpoint is a vertex");
    let mut out = format!(
        "n {}{}\n",
        ids.len(),
        if g.directed() { " directed" } else { "" }
    );
    for (u, v) in g.edge_list() {
        out.push_str(&format!("{} {}\n", rank(u), rank(v)));
    }
    out
}

/// Parses one graph in graph6 encoding (undirected, `n <= 62`).
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.trim().as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Graph6("empty input".to_string()));
    }
    if bytes[0] == b'~' {
        return Err(GraphError::Graph6(
            "extended size encodings are not supported (n must be at most 62)".to_string(),
        ));
    }
    if !(63..=125).contains(&bytes[0]) {
        return Err(GraphError::Graph6(format!(
            "invalid size character 0x{:02x}",
            bytes[0]
        )));
    }
    let n = (bytes[0] - 63) as u32;
    let bit_count = (n as usize) * (n as usize - 1) / 2;
    let needed = bit_count.div_ceil(6);
    let data = &bytes[1..];
    if data.len() != needed {
        return Err(GraphError::Graph6(format!(
            "expected {needed} data characters for n={n}, got {}",
            data.len()
        )));
    }
    for &b in data {
        if !(63..=126).contains(&b) {
            return Err(GraphError::Graph6(format!("invalid character 0x{b:02x}")));
        }
    }

    let bit = |t: usize| (data[t / 6] - 63) >> (5 - t % 6) & 1 == 1;
    let mut g = Graph::with_vertex_count(false, n);
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(t) {
                g.add_edge(i, j).expect("ids below n");
            }
            t += 1;
        }
    }
    Ok(g)
}

/// Renders an undirected graph in graph6, ids compacted to `0..n-1`.
pub fn to_graph6(g: &Graph) -> Result<String, GraphError> {
    if g.directed() {
        return Err(GraphError::DirectedUnsupported("graph6 encoding"));
    }
    let ids: Vec<u32> = g.vertices().collect();
    let n = ids.len();
    if n > 62 {
        return Err(GraphError::TooLarge {
            what: "graph6 vertex count",
            limit: 62,
            actual: n,
        });
    }
    let rank = |v: u32| ids.binary_search(&v).expect("endpoint is a vertex") as u32;
    let compacted: alloc::collections::BTreeSet<(u32, u32)> = g
        .edge_list()
        .iter()
        .map(|&(u, v)| (rank(u), rank(v)))
        .collect();

    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n as u32 {
        for i in 0..j {
            chunk = chunk << 1 | compacted.contains(&(i, j)) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn edge_list_without_header() {
        let g = parse_edge_list("0 1\n1 2\n").unwrap();
        assert!(!g.directed());
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_list(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn edge_list_with_directed_header() {
        let g = parse_edge_list("n 3 directed\n0 1\n1 2\n").unwrap();
        assert!(g.directed());
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_list(), vec![(0, 1), (1, 2)]);
        assert!(!g.has_edge(1, 0));
    }

    #[test]
    fn edge_list_header_reserves_isolated_vertices() {
        let g = parse_edge_list("n 4\n0 1\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn edge_list_comments_blanks_duplicates() {
        let g = parse_edge_list("# triangle\n\n0 1\n1 2 # last\n2 0\n0 1\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn edge_list_empty_input_is_empty_graph() {
        let g = parse_edge_list("").unwrap();
        assert_eq!(g.vertex_count(), 0);
        let g = parse_edge_list("# nothing\n\n").unwrap();
        assert_eq!(g.vertex_count(), 0);
    }

    #[test]
    fn edge_list_malformed_line_number() {
        let err = parse_edge_list("0 1\nbogus line here\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }), "{err}");
        let err = parse_edge_list("0 1\n2 x\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn edge_list_self_loop_rejected() {
        let err = parse_edge_list("0 1\n3 3\n").unwrap_err();
        assert_eq!(err, GraphError::SelfLoop { vertex: 3 });
    }

    #[test]
    fn edge_list_id_beyond_header_count() {
        let err = parse_edge_list("n 2\n0 5\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn edge_list_round_trip_compacts_ids() {
        let g = parse_edge_list("0 1\n1 2\n2 0\n").unwrap();
        let sub = g.delete_vertex(1).unwrap();
        let text = to_edge_list(&sub);
        assert_eq!(text, "n 2\n0 1\n");
        assert_eq!(parse_edge_list(&text).unwrap().edge_count(), 1);
    }

    #[test]
    fn graph6_known_codes() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2.vertex_count(), 2);
        assert_eq!(k2.edge_list(), vec![(0, 1)]);

        let single = parse_graph6("@").unwrap();
        assert_eq!(single.vertex_count(), 1);
        assert!(single.is_edgeless());

        let c3 = parse_graph6("Bw").unwrap();
        assert_eq!(c3.vertex_count(), 3);
        assert_eq!(c3.edge_list(), vec![(0, 1), (0, 2), (1, 2)]);

        assert_eq!(to_graph6(&k2).unwrap(), "A_");
        assert_eq!(to_graph6(&single).unwrap(), "@");
        assert_eq!(to_graph6(&c3).unwrap(), "Bw");
    }

    #[test]
    fn graph6_trailing_newline_tolerated() {
        assert_eq!(parse_graph6("A_\n").unwrap().edge_count(), 1);
    }

    #[test]
    fn graph6_rejects_malformed() {
        assert!(matches!(parse_graph6(""), Err(GraphError::Graph6(_))));
        assert!(matches!(parse_graph6("~"), Err(GraphError::Graph6(_))));
        // n=3 needs exactly one data character.
        assert!(matches!(parse_graph6("B"), Err(GraphError::Graph6(_))));
        assert!(matches!(parse_graph6("Bww"), Err(GraphError::Graph6(_))));
        // 0x20 is below the graph6 alphabet.
        assert!(matches!(parse_graph6("B "), Err(GraphError::Graph6(_))));
    }

    #[test]
    fn graph6_rejects_directed() {
        let d = Graph::from_edges(true, 2, &[(0, 1)]).unwrap();
        assert!(matches!(
            to_graph6(&d),
            Err(GraphError::DirectedUnsupported(_))
        ));
    }

    #[test]
    fn graph6_round_trip_gappy_ids() {
        let g = parse_edge_list("0 1\n1 2\n2 0\n")
            .unwrap()
            .delete_vertex(0)
            .unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "A_");
    }
}
