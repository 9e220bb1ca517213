//! Plain-text edge lists.
//!
//! ```text
//! # comment lines start with '#'
//! 4          <- vertex count
//! 0 1        <- one edge per line, "i j" with 0 <= i < j < n
//! 1 2
//! ```
//!
//! Blank lines are ignored. Output is canonical: LF endings, edges sorted.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn read_edge_list(text: &str, allow_isolated: bool) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse = |tok: &str| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("expected a non-negative integer, found {tok:?}"),
            })
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match (n, tokens.as_slice()) {
            (None, [count]) => n = Some(parse(count)?),
            (None, _) => {
                return Err(Error::Parse {
                    line: line_no,
                    message: "first line must hold the vertex count".into(),
                })
            }
            (Some(order), [a, b]) => {
                let (i, j) = (parse(a)?, parse(b)?);
                if i >= order || j >= order {
                    return Err(Error::VertexOutOfRange {
                        vertex: i.max(j),
                        n: order,
                    });
                }
                if i > j {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("edge must be written low-high, found {i} {j}"),
                    });
                }
                edges.push((i, j));
            }
            (Some(_), _) => {
                return Err(Error::Parse {
                    line: line_no,
                    message: "expected two vertex indices".into(),
                })
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        message: "missing vertex count".into(),
    })?;
    Graph::new(n, &edges, allow_isolated)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", g.order());
    for &(i, j) in g.edges() {
        let _ = writeln!(out, "{i} {j}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_k2() {
        let g = read_edge_list("2\n0 1\n", false).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn canonical_round_trip() {
        let text = "# square\n4\n\n2 3\n0 1\n1 2\n0 3\n";
        let g = read_edge_list(text, false).unwrap();
        let out = write_edge_list(&g);
        assert_eq!(out, "4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(read_edge_list(&out, false).unwrap(), g);
    }

    #[test]
    fn errors() {
        assert_eq!(
            read_edge_list("3\n0 3\n", false),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert!(matches!(
            read_edge_list("3\n0 x\n", false),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            read_edge_list("3\n0 1 2\n", false),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(read_edge_list("# nothing\n", false), Err(Error::Parse { .. })));
        assert_eq!(
            read_edge_list("3\n0 1\n0 1\n", true),
            Err(Error::DuplicateEdge(0, 1))
        );
    }
}
