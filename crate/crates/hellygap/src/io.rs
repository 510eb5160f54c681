//! Edge-list parsing and emission, plus tree-decomposition JSON loading.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::TreeDecomposition;

/// Parses the edge-list format: a header line `n m`, then `m` lines
/// `u v` with 0-based vertex ids. Blank lines and lines starting with
/// `#` are ignored. The graph must be simple and connected.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line_no, header) = lines
        .next()
        .ok_or(Error::Parse { line: 0, msg: "empty input, expected header \"n m\"".into() })?;
    let (n, m) = parse_pair(header)
        .ok_or_else(|| Error::Parse { line: line_no, msg: format!("bad header {header:?}, expected \"n m\"") })?;

    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        if edges.len() == m {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("extra edge line after the declared {m}"),
            });
        }
        let (u, v) = parse_pair(line).ok_or_else(|| Error::Parse {
            line: line_no,
            msg: format!("bad edge line {line:?}, expected \"u v\""),
        })?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, &edges)
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

/// Writes a graph back in the edge-list format, edges sorted.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Loads a tree decomposition from its JSON form:
/// `{"bags": [[..], ..], "tree_edges": [[i, j], ..]}` with bag indices
/// in `tree_edges`. Structural validity is checked separately by
/// `audit_tree_decomposition`.
pub fn parse_tree_decomposition(text: &str) -> Result<TreeDecomposition> {
    serde_json::from_str(text)
        .map_err(|e| Error::Parse { line: e.line(), msg: format!("tree decomposition: {e}") })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_p3() {
        let g = parse_graph("3 2\n0 1\n1 2").unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 2));
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let g = parse_graph("# a triangle\n3 3\n\n0 1\n# middle\n1 2\n0 2\n").unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn loop_is_rejected() {
        assert!(matches!(parse_graph("2 1\n0 0"), Err(Error::LoopEdge(0))));
    }

    #[test]
    fn disconnected_is_rejected() {
        assert!(matches!(parse_graph("4 2\n0 1\n2 3"), Err(Error::Disconnected)));
    }

    #[test]
    fn bad_lines_carry_numbers() {
        match parse_graph("3 2\n0 1\nx y") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_graph("3 2\n0 1") {
            Err(Error::Parse { .. }) => {}
            other => panic!("expected edge-count error, got {other:?}"),
        }
        match parse_graph("3 1\n0 1\n1 2") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected extra-edge error, got {other:?}"),
        }
    }

    #[test]
    fn edge_list_round_trip() {
        let text = "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n";
        let g = parse_graph(text).unwrap();
        let emitted = emit_edge_list(&g);
        assert_eq!(emitted, text);
        assert_eq!(emit_edge_list(&parse_graph(&emitted).unwrap()), emitted);
    }

    #[test]
    fn tree_decomposition_json() {
        let td =
            parse_tree_decomposition(r#"{"bags": [[0, 1], [1, 2]], "tree_edges": [[0, 1]]}"#)
                .unwrap();
        assert_eq!(td.bags, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(td.tree_edges, vec![(0, 1)]);
        assert!(parse_tree_decomposition("{\"bags\": 3}").is_err());
    }
}
