//! DIMACS edge format.
//!
//! Reading: `c` lines are comments, exactly one `p edge <n> <m>` header must
//! precede the `e <u> <v>` lines, and vertices are 1-indexed. Vertex `i` of
//! the file becomes [`VertexId`] `i - 1`. The declared edge count `m` is not
//! enforced because duplicate lines collapse.
//!
//! Writing renumbers the vertices densely: the vertex with the `j`-th
//! smallest id becomes `j` (1-indexed). [`write_dimacs_with_map`] returns the
//! renumbering.

use std::io::BufRead;

use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

pub fn parse_dimacs_str(text: &str) -> Result<Graph, ParseError> {
    parse_dimacs(text.as_bytes())
}

pub fn parse_dimacs<R: BufRead>(reader: R) -> Result<Graph, ParseError> {
    let mut graph: Option<Graph> = None;
    let mut last_line = 0;
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = line.map_err(|e| err(lineno, format!("unreadable input: {e}")))?;
        let mut fields = line.split_whitespace();
        let Some(tag) = fields.next() else { continue };
        match tag {
            "c" => {}
            "p" => {
                if graph.is_some() {
                    return Err(err(lineno, "duplicate problem line"));
                }
                let format = fields.next();
                if format != Some("edge") {
                    return Err(err(lineno, "expected `p edge <n> <m>`"));
                }
                let n = parse_count(fields.next(), lineno, "vertex count")?;
                parse_count(fields.next(), lineno, "edge count")?;
                if fields.next().is_some() {
                    return Err(err(lineno, "trailing fields after problem line"));
                }
                if n > u32::MAX as usize {
                    return Err(err(lineno, "vertex count too large"));
                }
                graph = Some(Graph::with_vertices(n));
            }
            "e" => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| err(lineno, "edge line before problem line"))?;
                let n = g.vertex_count();
                let u = parse_vertex(fields.next(), n, lineno)?;
                let v = parse_vertex(fields.next(), n, lineno)?;
                if fields.next().is_some() {
                    return Err(err(lineno, "trailing fields after edge"));
                }
                if u == v {
                    return Err(err(lineno, format!("self-loop at vertex {}", u.raw() + 1)));
                }
                g.add_edge(u, v).expect("endpoints validated");
            }
            other => return Err(err(lineno, format!("unknown line type `{other}`"))),
        }
    }
    graph.ok_or_else(|| err(last_line.max(1), "missing `p edge` problem line"))
}

fn parse_count(field: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    field
        .ok_or_else(|| err(line, format!("missing {what}")))?
        .parse::<usize>()
        .map_err(|_| err(line, format!("malformed {what}")))
}

fn parse_vertex(field: Option<&str>, n: usize, line: usize) -> Result<VertexId, ParseError> {
    let raw = parse_count(field, line, "edge endpoint")?;
    if raw == 0 || raw > n {
        return Err(err(line, format!("vertex {raw} outside 1..={n}")));
    }
    Ok(VertexId::new((raw - 1) as u32))
}

pub fn write_dimacs(g: &Graph) -> String {
    write_dimacs_with_map(g).0
}

/// Writes `g` and returns the renumbering: entry `j` is the id written as
/// DIMACS vertex `j + 1`.
pub fn write_dimacs_with_map(g: &Graph) -> (String, Vec<VertexId>) {
    let order: Vec<VertexId> = g.vertices().collect();
    let index = |v: VertexId| order.binary_search(&v).unwrap() + 1;
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", index(u), index(v)));
    }
    (out, order)
}
