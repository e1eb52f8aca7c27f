//! Immutable simple graphs on at most 64 labeled vertices.
//!
//! Every adjacency row is a single `u64`, so neighborhood queries, set
//! algebra and degree computations are word operations.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("{0} vertices requested, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("adjacency is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
}

/// A subset of `{0, …, 63}` stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    /// `{0, …, n−1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[must_use]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[must_use]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in increasing order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::empty(), VertexSet::with)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl BitXor for VertexSet {
    type Output = VertexSet;
    fn bitxor(self, rhs: Self) -> Self {
        VertexSet(self.0 ^ rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        self.difference(rhs)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(s: VertexSet) -> Self {
        s.to_vec()
    }
}

impl TryFrom<Vec<usize>> for VertexSet {
    type Error = GraphError;

    fn try_from(v: Vec<usize>) -> Result<Self, GraphError> {
        v.into_iter().try_fold(VertexSet::empty(), |s, x| {
            if x < MAX_VERTICES {
                Ok(s.with(x))
            } else {
                Err(GraphError::VertexOutOfRange {
                    vertex: x,
                    n: MAX_VERTICES,
                })
            }
        })
    }
}

/// A simple undirected graph on the vertices `0..n`.
///
/// Values are immutable: every edit returns a new graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        check_order(n)?;
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        check_order(n)?;
        let all = VertexSet::full(n).bits();
        let rows = (0..n).map(|v| all & !(1u64 << v)).collect();
        Ok(Graph { n, rows })
    }

    /// Builds a graph from unordered pairs; duplicates collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        check_order(n)?;
        let mut rows = vec![0u64; n];
        for &(u, v) in edges {
            check_pair(n, u, v)?;
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Ok(Graph { n, rows })
    }

    /// Builds a graph from adjacency rows, validating symmetry and irreflexivity.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph, GraphError> {
        let n = rows.len();
        check_order(n)?;
        let outside = !VertexSet::full(n).bits();
        for (v, &row) in rows.iter().enumerate() {
            if row >> v & 1 == 1 {
                return Err(GraphError::Loop(v));
            }
            if row & outside != 0 {
                let vertex = (row & outside).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, n });
            }
        }
        let g = Graph { n, rows };
        for u in 0..n {
            if let Some(v) = g.neighbors(u).iter().find(|&v| !g.has_edge(v, u)) {
                return Err(GraphError::Asymmetric(u, v));
            }
        }
        Ok(g)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Graph {
        let g = Graph {
            n: rows.len(),
            rows,
        };
        debug_assert!(g.is_symmetric());
        g
    }

    fn is_symmetric(&self) -> bool {
        (0..self.n).all(|u| {
            self.rows[u] >> u & 1 == 0
                && self.neighbors(u).iter().all(|v| self.rows[v] >> u & 1 == 1)
        })
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// δ(G).
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.rows[u] & !((2u64 << u).wrapping_sub(1)))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Non-edges `(u, v)` with `u < v` in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            let later = VertexSet::full(self.n).bits() & !((2u64 << u).wrapping_sub(1));
            VertexSet(later & !self.rows[u]).iter().map(move |v| (u, v))
        })
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// The graph plus the edge `uv`; returns an equal graph if `uv` is present.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        check_pair(self.n, u, v)?;
        let mut rows = self.rows.clone();
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
        Ok(Graph { n: self.n, rows })
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        check_pair(self.n, u, v)?;
        let mut rows = self.rows.clone();
        rows[u] &= !(1 << v);
        rows[v] &= !(1 << u);
        Ok(Graph { n: self.n, rows })
    }

    pub fn complement(&self) -> Graph {
        let all = VertexSet::full(self.n).bits();
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, &r)| !r & all & !(1u64 << v))
            .collect();
        Graph { n: self.n, rows }
    }

    /// Is `g` a subgraph of `self` on the same labeled vertex set?
    pub fn contains_graph(&self, g: &Graph) -> bool {
        self.n == g.n && self.rows.iter().zip(&g.rows).all(|(a, b)| b & !a == 0)
    }

    /// Relabels vertex `v` as `perm[v]`.
    ///
    /// # Panics
    ///
    /// If `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length");
        assert_eq!(
            perm.iter().copied().collect::<VertexSet>(),
            self.vertices(),
            "not a permutation"
        );
        let mut rows = vec![0u64; self.n];
        for (u, v) in self.edges() {
            rows[perm[u]] |= 1 << perm[v];
            rows[perm[v]] |= 1 << perm[u];
        }
        Graph { n: self.n, rows }
    }

    /// `(⋃_{v∈s} N(v)) ∖ s`.
    pub fn union_neighborhood(&self, s: VertexSet) -> VertexSet {
        s.iter()
            .fold(VertexSet::empty(), |acc, v| acc | self.neighbors(v))
            - s
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter()
            .all(|v| (s.without(v)).is_subset(self.neighbors(v)))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.neighbors(v).is_disjoint(s))
    }

    /// Vertices reachable from `start` without entering `blocked`.
    pub fn component_of(&self, start: usize, blocked: VertexSet) -> VertexSet {
        let allowed = self.vertices() - blocked;
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = frontier
                .iter()
                .fold(VertexSet::empty(), |acc, v| acc | self.neighbors(v));
            frontier = (next & allowed) - seen;
            seen = seen | frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0, VertexSet::empty()) == self.vertices()
    }

    /// Vertices whose removal disconnects the graph.
    pub fn cut_vertices(&self) -> VertexSet {
        if self.n < 3 {
            return VertexSet::empty();
        }
        (0..self.n)
            .filter(|&v| {
                let rest = self.vertices().without(v);
                let start = rest.first().expect("n >= 3");
                self.component_of(start, VertexSet::singleton(v)) != rest
            })
            .collect()
    }

    /// At least three vertices, connected, and no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.cut_vertices().is_empty()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

fn check_order(n: usize) -> Result<(), GraphError> {
    match n {
        0 => Err(GraphError::NoVertices),
        n if n > MAX_VERTICES => Err(GraphError::TooManyVertices(n)),
        _ => Ok(()),
    }
}

fn check_pair(n: usize, u: usize, v: usize) -> Result<(), GraphError> {
    for vertex in [u, v] {
        if vertex >= n {
            return Err(GraphError::VertexOutOfRange { vertex, n });
        }
    }
    if u == v {
        return Err(GraphError::Loop(u));
    }
    Ok(())
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    pub(crate) fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edge_list(leaves + 1, &edges).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn edge_list_examples() {
        let k3 = Graph::from_edge_list(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(k3, Graph::complete(3).unwrap());
        assert_eq!(k3.edge_count(), 3);

        let e4 = Graph::from_edge_list(4, &[]).unwrap();
        assert_eq!(e4.edge_count(), 0);
        assert_eq!(e4.min_degree(), 0);

        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(c5.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(1, 1)]),
            Err(GraphError::Loop(1))
        );
        assert_eq!(
            Graph::from_edge_list(65, &[]),
            Err(GraphError::TooManyVertices(65))
        );
        assert_eq!(Graph::from_edge_list(0, &[]), Err(GraphError::NoVertices));
        assert!(Graph::from_edge_list(64, &[(0, 63)]).is_ok());
    }

    #[test]
    fn from_rows_rejects_asymmetric_and_loops() {
        assert_eq!(
            Graph::from_rows(vec![0b10, 0b00]),
            Err(GraphError::Asymmetric(0, 1))
        );
        assert_eq!(Graph::from_rows(vec![0b1]), Err(GraphError::Loop(0)));
        assert_eq!(
            Graph::from_rows(vec![0b10, 0b01]).unwrap(),
            Graph::complete(2).unwrap()
        );
    }

    #[test]
    fn with_edge_examples() {
        let c4 = cycle(4);
        let chord = c4.with_edge(0, 2).unwrap();
        assert_eq!(chord.edge_count(), 5);
        assert_eq!(c4.edge_count(), 4);

        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.with_edge(0, 1).unwrap(), k3);

        let k2 = Graph::empty(2).unwrap().with_edge(0, 1).unwrap();
        assert_eq!(k2, Graph::complete(2).unwrap());

        assert_eq!(k3.with_edge(2, 2), Err(GraphError::Loop(2)));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(
            Graph::complete(4).unwrap().complement(),
            Graph::empty(4).unwrap()
        );
        let c5 = cycle(5);
        // The complement of 0-1-2-3-4-0 is the pentagram 0-2-4-1-3-0.
        let pentagram = c5.complement();
        assert_eq!(pentagram.relabel(&[0, 3, 1, 4, 2]), c5);
        let k13 = star(3);
        let expected = Graph::from_edge_list(4, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k13.complement(), expected);
    }

    #[test]
    fn neighborhoods_and_cliques() {
        let c5 = cycle(5);
        assert_eq!(c5.union_neighborhood(set(&[0])), set(&[1, 4]));
        assert_eq!(
            c5.union_neighborhood(VertexSet::empty()),
            VertexSet::empty()
        );
        assert!(!c5.is_clique(set(&[0, 1, 2])));
        let k5 = Graph::complete(5).unwrap();
        assert!(k5.is_clique(set(&[1, 3, 4])));
        let k3 = Graph::complete(3).unwrap();
        assert!(!k3.is_independent(set(&[0, 1])));
        assert!(c5.is_independent(set(&[3])));
    }

    #[test]
    fn two_connectivity() {
        assert!(cycle(5).is_two_connected());
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!p3.is_two_connected());
        assert_eq!(p3.cut_vertices(), set(&[1]));
        let bowtie =
            Graph::from_edge_list(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert!(!bowtie.is_two_connected());
        assert!(!Graph::complete(2).unwrap().is_two_connected());
        assert!(Graph::complete(3).unwrap().is_two_connected());
        assert!(!Graph::empty(4).unwrap().is_connected());
    }

    #[test]
    fn edges_and_non_edges_partition_pairs() {
        let g = cycle(6).with_edge(0, 3).unwrap();
        let e: Vec<_> = g.edges().collect();
        let ne: Vec<_> = g.non_edges().collect();
        assert_eq!(e.len() + ne.len(), 15);
        assert!(e.iter().all(|&(u, v)| u < v && g.has_edge(u, v)));
        assert!(ne.iter().all(|&(u, v)| u < v && !g.has_edge(u, v)));
        let mut sorted = ne.clone();
        sorted.sort_unstable();
        assert_eq!(ne, sorted);
    }

    #[test]
    fn vertex_set_serde() {
        let s = set(&[0, 5, 63]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "[0,5,63]");
        assert_eq!(serde_json::from_str::<VertexSet>(&json).unwrap(), s);
        assert!(serde_json::from_str::<VertexSet>("[64]").is_err());
    }

    #[test]
    fn vertex_set_laws_exhaustive_on_four_elements() {
        let all: Vec<VertexSet> = (0..16u64).map(VertexSet::from_bits).collect();
        for &a in &all {
            assert_eq!(a.len(), a.iter().count());
            for &b in &all {
                assert_eq!(a | b, b | a);
                assert_eq!(a & b, b & a);
                assert_eq!((a - b) & b, VertexSet::empty());
                assert_eq!((a - b) | (a & b), a);
                assert_eq!((a | b).len() + (a & b).len(), a.len() + b.len());
                for &c in &all {
                    assert_eq!(a & (b | c), (a & b) | (a & c));
                }
            }
        }
    }
}
