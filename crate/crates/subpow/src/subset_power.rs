//! Subset power graphs.
//!
//! The d-th subset power of a digraph has the d-element vertex subsets
//! as its vertices; an edge runs from subset A to subset B exactly when
//! the members of A can be paired one-to-one with the members of B so
//! that every pair is an edge of the base graph. The edge test is a
//! bipartite perfect-matching decision.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// A subset of a graph's vertices, kept as a strictly increasing list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetVertex {
    members: Vec<usize>,
}

impl SubsetVertex {
    /// Sorts the members and rejects duplicates.
    pub fn new(members: impl Into<Vec<usize>>) -> Result<Self> {
        let mut members = members.into();
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateMember { member: w[0] });
        }
        Ok(SubsetVertex { members })
    }

    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        SubsetVertex { members }
    }

    /// The members in increasing order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}

impl fmt::Display for SubsetVertex {
    /// Renders as `{a1,a2,...}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

/// All d-subsets of `{0..n-1}` in lexicographic order of their sorted
/// member lists. Empty when `d > n`; the single empty subset when
/// `d = 0`. The position of a subset in this list is its rank.
pub fn enumerate_d_subsets(n: usize, d: usize) -> Vec<SubsetVertex> {
    let mut subsets = Vec::new();
    if d > n {
        return subsets;
    }
    let mut current: Vec<usize> = (0..d).collect();
    loop {
        subsets.push(SubsetVertex::from_sorted(current.clone()));
        if !next_combination(&mut current, n) {
            return subsets;
        }
    }
}

/// Advances `current` to the next d-combination of `{0..n-1}` in
/// lexicographic order; false once the last combination is reached.
fn next_combination(current: &mut [usize], n: usize) -> bool {
    let d = current.len();
    let mut i = d;
    while i > 0 {
        i -= 1;
        if current[i] < n - (d - i) {
            current[i] += 1;
            for j in i + 1..d {
                current[j] = current[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// C(n, r) in u64 arithmetic; None when the value (or an intermediate)
/// exceeds u64.
pub(crate) fn binomial_u64(n: usize, r: usize) -> Option<u64> {
    if r > n {
        return Some(0);
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 1..=r {
        acc = acc.checked_mul((n - r + i) as u128)? / i as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Lexicographic rank of `a` among the d-subsets of `{0..n-1}`; None
/// when a member is out of range or the rank cannot be held in u64.
pub fn subset_rank(n: usize, a: &SubsetVertex) -> Option<u64> {
    let d = a.len();
    if a.members().last().is_some_and(|&m| m >= n) {
        return None;
    }
    let mut rank: u64 = 0;
    let mut prev_plus_one = 0;
    for (i, &m) in a.members().iter().enumerate() {
        // Subsets sharing the first i members whose next member falls
        // strictly between the previous member and m.
        let skipped =
            binomial_u64(n - prev_plus_one, d - i)?.checked_sub(binomial_u64(n - m, d - i)?)?;
        rank = rank.checked_add(skipped)?;
        prev_plus_one = m + 1;
    }
    Some(rank)
}

/// Inverse of [`subset_rank`]: the d-subset of `{0..n-1}` at `rank`, or
/// None when `rank >= C(n, d)`.
pub fn subset_unrank(n: usize, d: usize, mut rank: u64) -> Option<SubsetVertex> {
    if rank >= binomial_u64(n, d)? {
        return None;
    }
    let mut members = Vec::with_capacity(d);
    let mut v = 0;
    for i in 0..d {
        loop {
            let completions = binomial_u64(n - v - 1, d - i - 1)?;
            if rank < completions {
                members.push(v);
                v += 1;
                break;
            }
            rank -= completions;
            v += 1;
        }
    }
    Some(SubsetVertex::from_sorted(members))
}

/// True when the members of `a` can be paired bijectively with the
/// members of `b` along edges of `g`, i.e. when the bipartite graph with
/// parts a and b and pairs admissible along g-edges has a perfect
/// matching. Subset sizes must agree; members must be vertices of `g`.
pub fn edge_exists(g: &Digraph, a: &SubsetVertex, b: &SubsetVertex) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::SubsetSizeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    for &m in a.members().iter().chain(b.members()) {
        if m >= g.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: m,
                vertex_count: g.vertex_count(),
            });
        }
    }
    let d = a.len();
    // Admissible targets of each left member, as indices into b.
    let admissible: Vec<Vec<usize>> = a
        .members()
        .iter()
        .map(|&x| {
            b.members()
                .iter()
                .enumerate()
                .filter(|&(_, &y)| g.has_edge(x, y))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();

    let mut matched_to: Vec<Option<usize>> = vec![None; d];
    let mut size = 0;
    for left in 0..d {
        let mut seen = vec![false; d];
        if augment(&admissible, left, &mut seen, &mut matched_to) {
            size += 1;
        }
    }
    Ok(size == d)
}

/// Kuhn augmenting-path step: tries to match `left`, displacing earlier
/// matches along alternating paths.
fn augment(
    admissible: &[Vec<usize>],
    left: usize,
    seen: &mut [bool],
    matched_to: &mut [Option<usize>],
) -> bool {
    for &right in &admissible[left] {
        if seen[right] {
            continue;
        }
        seen[right] = true;
        let free = match matched_to[right] {
            None => true,
            Some(other) => augment(admissible, other, seen, matched_to),
        };
        if free {
            matched_to[right] = Some(left);
            return true;
        }
    }
    false
}

/// The d-th subset power of a digraph: the vertex list (all d-subsets in
/// lexicographic order) together with the graph over subset indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetPowerGraph {
    base: Digraph,
    d: usize,
    vertices: Vec<SubsetVertex>,
    graph: Digraph,
}

impl SubsetPowerGraph {
    pub fn base(&self) -> &Digraph {
        &self.base
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Subset vertices in lexicographic order; the graph's vertex ids
    /// index into this list.
    pub fn vertices(&self) -> &[SubsetVertex] {
        &self.vertices
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    /// Index of a subset in the vertex list.
    pub fn vertex_index(&self, a: &SubsetVertex) -> Option<usize> {
        self.vertices.binary_search(a).ok()
    }
}

/// Builds the d-th subset power of `g` with matching-based edge tests.
///
/// When every base vertex has out-degree exactly one the matching is
/// forced member-by-member, so edges are built directly from successor
/// images; the general quadratic pairwise path handles everything else.
/// Requires `1 <= d <= g.vertex_count()`.
pub fn build_subset_power(g: &Digraph, d: usize) -> Result<SubsetPowerGraph> {
    let n = g.vertex_count();
    if d == 0 || d > n {
        return Err(Error::SubsetSizeOutOfRange { d, n });
    }
    let vertices = enumerate_d_subsets(n, d);
    let mut edges: Vec<(usize, usize)> = Vec::new();

    if let Some(successor) = g.successor_map() {
        for (i, a) in vertices.iter().enumerate() {
            let mut image: Vec<usize> = a.members().iter().map(|&x| successor[x]).collect();
            image.sort_unstable();
            if image.windows(2).any(|w| w[0] == w[1]) {
                // Successor collapses two members: no injective pairing.
                continue;
            }
            let b = SubsetVertex::from_sorted(image);
            let j = vertices
                .binary_search(&b)
                .expect("successor image is a d-subset of the same vertex set");
            edges.push((i, j));
        }
    } else {
        for (i, a) in vertices.iter().enumerate() {
            for (j, b) in vertices.iter().enumerate() {
                if edge_exists(g, a, b)? {
                    edges.push((i, j));
                }
            }
        }
    }

    let graph = Digraph::from_edges(vertices.len(), edges)?;
    Ok(SubsetPowerGraph {
        base: g.clone(),
        d,
        vertices,
        graph,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::make_cycle;

    fn sv(members: &[usize]) -> SubsetVertex {
        SubsetVertex::new(members.to_vec()).unwrap()
    }

    #[test]
    fn enumerate_four_choose_two() {
        let subsets = enumerate_d_subsets(4, 2);
        let expected: Vec<SubsetVertex> = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]
            .iter()
            .map(|m| sv(m))
            .collect();
        assert_eq!(subsets, expected);
    }

    #[test]
    fn enumerate_zero_and_oversized() {
        assert_eq!(enumerate_d_subsets(3, 0), vec![sv(&[])]);
        assert_eq!(enumerate_d_subsets(2, 3), Vec::<SubsetVertex>::new());
    }

    #[test]
    fn subset_vertex_sorts_and_rejects_duplicates() {
        assert_eq!(sv(&[3, 0, 1]).members(), &[0, 1, 3]);
        assert_eq!(
            SubsetVertex::new(vec![1, 1]),
            Err(Error::DuplicateMember { member: 1 })
        );
    }

    #[test]
    fn subset_vertex_display() {
        assert_eq!(sv(&[0, 3]).to_string(), "{0,3}");
        assert_eq!(sv(&[]).to_string(), "{}");
    }

    #[test]
    fn rank_matches_enumeration_order() {
        for (n, d) in [(4, 2), (6, 3), (7, 1), (5, 5), (3, 0)] {
            for (i, a) in enumerate_d_subsets(n, d).iter().enumerate() {
                assert_eq!(subset_rank(n, a), Some(i as u64), "n={n} d={d} a={a}");
                assert_eq!(subset_unrank(n, d, i as u64).as_ref(), Some(a));
            }
        }
    }

    #[test]
    fn rank_out_of_range_member() {
        assert_eq!(subset_rank(3, &sv(&[0, 5])), None);
        assert_eq!(subset_unrank(4, 2, 6), None);
    }

    #[test]
    fn edge_exists_on_cycle_shift() {
        let g = make_cycle(4).unwrap();
        assert!(edge_exists(&g, &sv(&[0, 1]), &sv(&[1, 2])).unwrap());
        assert!(!edge_exists(&g, &sv(&[0, 1]), &sv(&[0, 1])).unwrap());
    }

    #[test]
    fn edge_exists_swap_matching() {
        let g = Digraph::from_edges(2, [(0, 1), (1, 0)]).unwrap();
        let a = sv(&[0, 1]);
        assert!(edge_exists(&g, &a, &a).unwrap());
    }

    #[test]
    fn edge_exists_rejects_size_mismatch() {
        let g = make_cycle(4).unwrap();
        assert_eq!(
            edge_exists(&g, &sv(&[0]), &sv(&[1, 2])),
            Err(Error::SubsetSizeMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn edge_exists_needs_augmenting_path() {
        // 0 -> {2, 3}, 1 -> {2}: matching 0->2 must be displaced to 0->3.
        let g = Digraph::from_edges(4, [(0, 2), (0, 3), (1, 2)]).unwrap();
        assert!(edge_exists(&g, &sv(&[0, 1]), &sv(&[2, 3])).unwrap());
    }

    #[test]
    fn build_power_of_c3_first() {
        let g = make_cycle(3).unwrap();
        let spg = build_subset_power(&g, 1).unwrap();
        assert_eq!(spg.graph().vertex_count(), 3);
        // {v} -> {v+1 mod 3} mirrors the base cycle.
        let edges: Vec<_> = spg.graph().edges().collect();
        assert_eq!(edges, vec![(0, 1), (1, 2), (2, 0)]);
    }

    #[test]
    fn build_power_rejects_bad_d() {
        let g = make_cycle(3).unwrap();
        assert!(matches!(
            build_subset_power(&g, 0),
            Err(Error::SubsetSizeOutOfRange { d: 0, n: 3 })
        ));
        assert!(matches!(
            build_subset_power(&g, 4),
            Err(Error::SubsetSizeOutOfRange { d: 4, n: 3 })
        ));
    }

    #[test]
    fn build_power_single_edge_base() {
        // Base 0 -> 1: the only 2-subset {0,1} has no out-edge because 1
        // has no successor.
        let g = Digraph::from_edges(2, [(0, 1)]).unwrap();
        let spg = build_subset_power(&g, 2).unwrap();
        assert_eq!(spg.graph().vertex_count(), 1);
        assert_eq!(spg.graph().edge_count(), 0);
    }

    #[test]
    fn fast_path_agrees_with_matching_path() {
        // Force the general path by adding an extra edge, then compare
        // against the out-degree-one fast path on the plain cycle.
        let cycle = make_cycle(5).unwrap();
        let fast = build_subset_power(&cycle, 2).unwrap();
        for (i, a) in fast.vertices().iter().enumerate() {
            for (j, b) in fast.vertices().iter().enumerate() {
                assert_eq!(
                    fast.graph().has_edge(i, j),
                    edge_exists(&cycle, a, b).unwrap(),
                    "a={a} b={b}"
                );
            }
        }
    }

    #[test]
    fn collapsing_successor_drops_edge() {
        // 0 and 1 both map to 2: {0,1} has no outgoing edge even though
        // out-degree is uniformly one.
        let g = Digraph::from_edges(3, [(0, 2), (1, 2), (2, 0)]).unwrap();
        let spg = build_subset_power(&g, 2).unwrap();
        let i = spg.vertex_index(&sv(&[0, 1])).unwrap();
        assert_eq!(spg.graph().out_degree(i), 0);
    }
}
