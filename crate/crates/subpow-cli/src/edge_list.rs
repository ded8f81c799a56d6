//! Edge-list text format for digraphs.
//!
//! The first significant line is `n <vertex_count>`; every following
//! significant line is one `u v` edge, whitespace-separated. Blank
//! lines and lines starting with `#` are ignored. Errors carry
//! 1-based line numbers.

use std::fmt;

use subpow::Digraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    /// No significant lines at all.
    MissingHeader,
    /// First significant line is not `n <vertex_count>`.
    BadHeader { line: usize },
    /// An edge line is not two integers.
    BadEdge { line: usize },
    /// An endpoint is not a vertex id below the declared count.
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        vertex_count: usize,
    },
}

impl fmt::Display for EdgeListError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            EdgeListError::MissingHeader => {
                write!(f, "missing header line \"n <vertex_count>\"")
            }
            EdgeListError::BadHeader { line } => {
                write!(f, "line {line}: expected header \"n <vertex_count>\"")
            }
            EdgeListError::BadEdge { line } => {
                write!(f, "line {line}: expected an edge \"u v\"")
            }
            EdgeListError::VertexOutOfRange {
                line,
                vertex,
                vertex_count,
            } => {
                write!(
                    f,
                    "line {line}: vertex {vertex} out of range for vertex count {vertex_count}"
                )
            }
        }
    }
}

impl std::error::Error for EdgeListError {}

fn significant(line: &str) -> Option<&str> {
    let line = line.trim();
    if line.is_empty() || line.starts_with('#') {
        None
    } else {
        Some(line)
    }
}

/// Parses the edge-list format into a digraph.
pub fn parse_edge_list(text: &str) -> Result<Digraph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter_map(|(i, l)| significant(l).map(|l| (i + 1, l)));

    let (header_line, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let vertex_count = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| EdgeListError::BadHeader { line: header_line })?,
        _ => return Err(EdgeListError::BadHeader { line: header_line }),
    };

    let mut edges = Vec::new();
    for (line, text) in lines {
        let endpoints: Vec<usize> = text
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| EdgeListError::BadEdge { line })?;
        let [u, v] = endpoints[..] else {
            return Err(EdgeListError::BadEdge { line });
        };
        for vertex in [u, v] {
            if vertex >= vertex_count {
                return Err(EdgeListError::VertexOutOfRange {
                    line,
                    vertex,
                    vertex_count,
                });
            }
        }
        edges.push((u, v));
    }

    Ok(Digraph::from_edges(vertex_count, edges)
        .expect("endpoints validated against the declared vertex count"))
}

/// Renders a digraph in the edge-list format, edges sorted.
pub fn write_edge_list(g: &Digraph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
