//! Plain-text graph files.
//!
//! ```text
//! # unbalanced triangle
//! vertices 3
//! edge 0 2 +
//! edge 0 1 +
//! edge 2 1 -
//! ```
//!
//! Everything after `#` on a line is ignored, as are blank lines. Exactly
//! one `vertices` line is required; edges keep their file order, which
//! fixes the signs of the differential.

use std::fmt::Write as _;

use schrom_core::{Edge, Sign, SignedGraph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: endpoint {vertex} out of range for a graph with {vertex_count} vertices")]
    Range {
        line: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("line {line}: duplicate \"vertices\" line (first on line {first})")]
    DuplicateVertices { line: usize, first: usize },
    #[error("missing \"vertices\" line")]
    MissingVertices,
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn number(line: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("expected {what}, found `{token}`")))
}

pub fn parse_graph(text: &str) -> Result<SignedGraph, ParseError> {
    let mut vertices: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, Edge)> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            ["vertices", n] => {
                if let Some((_, first)) = vertices {
                    return Err(ParseError::DuplicateVertices { line, first });
                }
                vertices = Some((number(line, n, "a vertex count")?, line));
            }
            ["edge", u, v, s] => {
                let tail = number(line, u, "a vertex id")?;
                let head = number(line, v, "a vertex id")?;
                let sign = match *s {
                    "+" => Sign::Positive,
                    "-" => Sign::Negative,
                    other => return Err(syntax(line, format!("expected sign `+` or `-`, found `{other}`"))),
                };
                edges.push((line, Edge::new(tail, head, sign)));
            }
            ["vertices", ..] => return Err(syntax(line, "expected `vertices N`")),
            ["edge", ..] => return Err(syntax(line, "expected `edge U V S`")),
            [other, ..] => return Err(syntax(line, format!("unknown directive `{other}`"))),
        }
    }
    let (vertex_count, _) = vertices.ok_or(ParseError::MissingVertices)?;
    for &(line, e) in &edges {
        for vertex in [e.tail, e.head] {
            if vertex >= vertex_count {
                return Err(ParseError::Range {
                    line,
                    vertex,
                    vertex_count,
                });
            }
        }
    }
    Ok(SignedGraph::new(vertex_count, edges.into_iter().map(|(_, e)| e)).expect("endpoints checked above"))
}

pub fn print_graph(g: &SignedGraph) -> String {
    let mut out = format!("vertices {}\n", g.vertex_count());
    for e in g.edges() {
        writeln!(out, "edge {} {} {}", e.tail, e.head, e.sign.symbol()).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use schrom_core::graph::named;

    #[test]
    fn reads_sp3_in_file_order() {
        let g = parse_graph("vertices 3\nedge 0 2 +\nedge 0 1 +\nedge 2 1 -").unwrap();
        assert_eq!(g, named::sp3());
        assert_eq!(parse_graph("vertices 2\nedge 0 1 +\nedge 0 1 -").unwrap(), named::sp2());
        assert_eq!(parse_graph("vertices 1").unwrap(), SignedGraph::edgeless(1));
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("# a loop\n\nvertices 1 # one vertex\nedge 0 0 - # negative\n").unwrap();
        assert_eq!(g, named::sn(1, 1));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_graph("vertices 2\nvertices 3"),
            Err(ParseError::DuplicateVertices { line: 2, first: 1 })
        );
        assert_eq!(
            parse_graph("vertices 2\n\nedge 0 2 +"),
            Err(ParseError::Range {
                line: 3,
                vertex: 2,
                vertex_count: 2
            })
        );
        assert!(matches!(parse_graph("vertices 2\nedge 0 1 *"), Err(ParseError::Syntax { line: 2, .. })));
        assert!(matches!(parse_graph("vertices x"), Err(ParseError::Syntax { line: 1, .. })));
        assert!(matches!(parse_graph("edges 1"), Err(ParseError::Syntax { line: 1, .. })));
        assert_eq!(parse_graph("edge 0 0 +"), Err(ParseError::MissingVertices));
    }

    #[test]
    fn round_trip() {
        let g = named::two_component_example();
        assert_eq!(parse_graph(&print_graph(&g)).unwrap(), g);
        assert_eq!(print_graph(&named::sp2()), "vertices 2\nedge 0 1 +\nedge 0 1 -\n");
    }
}
