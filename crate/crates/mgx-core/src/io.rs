//! The `.mg` text format and its JSON mirror.
//!
//! Text format, one directive per line, `#` starts a comment:
//!
//! ```text
//! n 4        # vertex count, must appear before any edge
//! e 0 1      # undirected edge
//! a 1 2      # arc 1 -> 2
//! ```
//!
//! JSON mirror: `{"n":4,"edges":[{"u":0,"v":1,"kind":"e"},{"u":1,"v":2,"kind":"a"}]}`
//! where for `"a"` the arc points from `u` to `v`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, MixedGraph};

#[derive(Debug, Serialize, Deserialize)]
struct JsonEdge {
    u: usize,
    v: usize,
    kind: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<JsonEdge>,
}

/// Parses the `.mg` text format.
pub fn parse_mg(text: &str) -> Result<MixedGraph> {
    let mut graph: Option<MixedGraph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let tag = parts.next().unwrap();
        let parse_usize = |tok: Option<&str>, what: &str| -> Result<usize> {
            tok.ok_or_else(|| Error::Parse {
                line: line_no,
                message: format!("missing {what}"),
            })?
            .parse()
            .map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid {what}"),
            })
        };
        match tag {
            "n" => {
                if graph.is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "duplicate n line".into(),
                    });
                }
                let n = parse_usize(parts.next(), "vertex count")?;
                graph = Some(MixedGraph::new(n));
            }
            "e" | "a" => {
                let g = graph.as_mut().ok_or_else(|| Error::Parse {
                    line: line_no,
                    message: "edge before n line".into(),
                })?;
                let u = parse_usize(parts.next(), "vertex id")?;
                let v = parse_usize(parts.next(), "vertex id")?;
                let added = if tag == "e" {
                    g.add_edge(u, v)
                } else {
                    g.add_arc(u, v)
                };
                added.map_err(|e| Error::Parse {
                    line: line_no,
                    message: e.to_string(),
                })?;
            }
            other => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("unknown directive '{other}'"),
                })
            }
        }
        if parts.next().is_some() {
            return Err(Error::Parse {
                line: line_no,
                message: "trailing tokens".into(),
            });
        }
    }
    graph.ok_or(Error::Parse {
        line: 0,
        message: "missing n line".into(),
    })
}

/// Serializes to the `.mg` text format, edges in stored order.
pub fn to_mg(g: &MixedGraph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for e in g.edges() {
        match e.kind {
            EdgeKind::Undirected => out.push_str(&format!("e {} {}\n", e.u, e.v)),
            EdgeKind::Arc { tail, head } => out.push_str(&format!("a {tail} {head}\n")),
        }
    }
    out
}

/// Parses the JSON mirror.
pub fn parse_json(text: &str) -> Result<MixedGraph> {
    let jg: JsonGraph = serde_json::from_str(text)?;
    let mut g = MixedGraph::new(jg.n);
    for e in &jg.edges {
        match e.kind.as_str() {
            "e" => g.add_edge(e.u, e.v)?,
            "a" => g.add_arc(e.u, e.v)?,
            other => {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("unknown edge kind '{other}'"),
                })
            }
        }
    }
    Ok(g)
}

/// Serializes to the JSON mirror.
pub fn to_json(g: &MixedGraph) -> String {
    let edges = g
        .edges()
        .iter()
        .map(|e| match e.kind {
            EdgeKind::Undirected => JsonEdge {
                u: e.u,
                v: e.v,
                kind: "e".into(),
            },
            EdgeKind::Arc { tail, head } => JsonEdge {
                u: tail,
                v: head,
                kind: "a".into(),
            },
        })
        .collect();
    serde_json::to_string(&JsonGraph {
        n: g.vertex_count(),
        edges,
    })
    .expect("graph serialization cannot fail")
}

/// Reads a graph from a file, choosing the parser by `.json` extension.
pub fn read_graph_file(path: &std::path::Path) -> Result<MixedGraph> {
    let text = std::fs::read_to_string(path)?;
    if path.extension().is_some_and(|e| e == "json") {
        parse_json(&text)
    } else {
        parse_mg(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_text() {
        let text = "# a mixed graph\nn 4\ne 0 1\na 1 2\na 3 2\n";
        let g = parse_mg(text).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 3);
        let again = parse_mg(&to_mg(&g)).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn round_trip_json() {
        let g = parse_mg("n 3\na 2 0\ne 0 1\n").unwrap();
        let again = parse_json(&to_json(&g)).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match parse_mg("n 2\ne 0 5\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_mg("e 0 1\n").is_err());
        assert!(parse_mg("n 2\nz 0 1\n").is_err());
        assert!(parse_mg("").is_err());
        assert!(parse_mg("n 2\ne 0 1 9\n").is_err());
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let g = parse_mg("\n# top\nn 2 # inline\n\ne 0 1\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }
}
