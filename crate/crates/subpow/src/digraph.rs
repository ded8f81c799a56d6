//! Directed graphs on dense integer vertices, the directed-cycle
//! constructor, and cycle decomposition of permutation graphs.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A finite directed graph on vertices `0..vertex_count`.
///
/// Loops are allowed, parallel edges are not. Out-edges are kept as
/// sorted adjacency lists, so successor lookups are binary searches and
/// iteration order is deterministic. Values are immutable after
/// construction and safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Digraph {
    /// Builds a graph from an edge list. Duplicate edges collapse;
    /// endpoints must be `< vertex_count`.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut out = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            for endpoint in [u, v] {
                if endpoint >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: endpoint,
                        vertex_count,
                    });
                }
            }
            out[u].push(v);
        }
        let mut edge_count = 0;
        for list in &mut out {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Digraph { out, edge_count })
    }

    /// The graph with `vertex_count` vertices and no edges.
    pub fn empty(vertex_count: usize) -> Self {
        Digraph {
            out: vec![Vec::new(); vertex_count],
            edge_count: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out
            .get(u)
            .is_some_and(|list| list.binary_search(&v).is_ok())
    }

    /// Out-neighbors of `u` in increasing order.
    pub fn out_neighbors(&self, u: usize) -> &[usize] {
        &self.out[u]
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out[u].len()
    }

    /// All edges as (source, target) pairs, sorted by source then target.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
    }

    /// In-degree of every vertex.
    pub fn in_degrees(&self) -> Vec<usize> {
        let mut degrees = vec![0; self.vertex_count()];
        for (_, v) in self.edges() {
            degrees[v] += 1;
        }
        degrees
    }

    /// The successor vector if every vertex has out-degree exactly one.
    pub fn successor_map(&self) -> Option<Vec<usize>> {
        self.out
            .iter()
            .map(|list| if list.len() == 1 { Some(list[0]) } else { None })
            .collect()
    }
}

/// The directed cycle on `l` vertices: edges `j -> (j + 1) mod l`.
///
/// For `l = 1` this is a single vertex with a loop.
pub fn make_cycle(l: usize) -> Result<Digraph> {
    if l == 0 {
        return Err(Error::ZeroCycleLength);
    }
    Digraph::from_edges(l, (0..l).map(|j| (j, (j + 1) % l)))
}

/// A directed cycle through distinct vertices of a host graph; a loop is
/// the length-1 case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCycle {
    vertices: Vec<usize>,
}

impl VertexCycle {
    pub(crate) fn new(vertices: Vec<usize>) -> Self {
        debug_assert!(!vertices.is_empty());
        VertexCycle { vertices }
    }

    /// The vertices in traversal order, starting at the smallest id.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Partitions a permutation graph (out-degree and in-degree exactly one
/// everywhere) into its cycles.
///
/// Each cycle starts at its minimum vertex id and cycles are ordered by
/// that minimum, so the output is deterministic. Rejects graphs where
/// any vertex violates the degree condition.
pub fn decompose_permutation_cycles(g: &Digraph) -> Result<Vec<VertexCycle>> {
    let successor = {
        let in_degrees = g.in_degrees();
        for (v, &in_degree) in in_degrees.iter().enumerate() {
            if g.out_degree(v) != 1 || in_degree != 1 {
                return Err(Error::NotPermutationGraph {
                    vertex: v,
                    out_degree: g.out_degree(v),
                    in_degree,
                });
            }
        }
        g.successor_map().expect("out-degrees checked above")
    };

    let mut visited = vec![false; g.vertex_count()];
    let mut cycles = Vec::new();
    for start in 0..g.vertex_count() {
        if visited[start] {
            continue;
        }
        // The first unvisited vertex of a cycle is its minimum: any
        // smaller member would have been reached on an earlier walk.
        let mut cycle = Vec::new();
        let mut v = start;
        loop {
            visited[v] = true;
            cycle.push(v);
            v = successor[v];
            if v == start {
                break;
            }
        }
        cycles.push(VertexCycle::new(cycle));
    }
    Ok(cycles)
}
