//! Undirected multigraphs on at most 64 vertices.
//!
//! Vertex sets are single-word bitsets, which keeps the exhaustive searches
//! elsewhere in the crate allocation-free. Parallel edges are allowed because
//! contracting one shore of an edge cut produces them; loops are not.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

pub type Vertex = usize;

/// A set of vertices backed by a 64-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: Vertex) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: Vertex) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: Vertex) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Complement with respect to `0..n`.
    pub fn complement(self, n: usize) -> Self {
        VertexSet::full(n).difference(self)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<Vertex> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexSetIter {
        VertexSetIter(self.0)
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

pub struct VertexSetIter(u64);

impl Iterator for VertexSetIter {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
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

impl IntoIterator for VertexSet {
    type Item = Vertex;
    type IntoIter = VertexSetIter;

    fn into_iter(self) -> VertexSetIter {
        self.iter()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// A two-colouring of a bipartite graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl Bipartition {
    pub fn side_of(&self, v: Vertex) -> Side {
        if self.a.contains(v) {
            Side::A
        } else {
            Side::B
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    A,
    B,
}

/// An edge cut `∂(X)` together with the shore `X` it was taken from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeCut {
    pub side: VertexSet,
    /// Edge ids of the cut, ascending.
    pub edges: Vec<usize>,
}

impl EdgeCut {
    /// Trivial when one shore is a single vertex.
    pub fn is_trivial(&self, n: usize) -> bool {
        self.side.len() <= 1 || n - self.side.len() <= 1
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Result of [`Graph::induced_subgraph`]: `original[i]` is the vertex of the
/// host graph that became vertex `i`.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub original: Vec<Vertex>,
}

impl InducedSubgraph {
    /// Local id of a host vertex, if it was kept.
    pub fn local(&self, v: Vertex) -> Option<Vertex> {
        self.original.iter().position(|&w| w == v)
    }
}

/// Result of [`Graph::contract`]: `image[v]` is the new id of host vertex `v`;
/// every member of the contracted set maps to `vertex`.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: Graph,
    pub image: Vec<Vertex>,
    pub vertex: Vertex,
}

impl Contraction {
    /// The host vertex behind a new vertex, `None` for the contracted one.
    pub fn preimage(&self, w: Vertex) -> Option<Vertex> {
        if w == self.vertex {
            return None;
        }
        self.image.iter().position(|&x| x == w)
    }
}

/// Undirected multigraph without loops. Edge ids are positions in
/// [`Graph::edges`]; each edge is stored with its smaller end first.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<VertexSet>,
    incident: Vec<Vec<usize>>,
    simple: bool,
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            edges: Vec::new(),
            adj: vec![VertexSet::EMPTY; n],
            incident: vec![Vec::new(); n],
            simple: true,
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<usize> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidVertex(u.max(v)));
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        if self.adj[u].contains(v) {
            self.simple = false;
        }
        let id = self.edges.len();
        self.edges.push((u, v));
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.incident[u].push(id);
        self.incident[v].push(id);
        Ok(id)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (Vertex, Vertex) {
        self.edges[id]
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Distinct neighbours of `v`.
    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        self.adj[v]
    }

    /// `N[v]`.
    pub fn closed_neighborhood(&self, v: Vertex) -> VertexSet {
        self.adj[v].with(v)
    }

    /// Incident edge ids of `v` in insertion order.
    pub fn incident(&self, v: Vertex) -> &[usize] {
        &self.incident[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.incident[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn other_end(&self, edge: usize, v: Vertex) -> Vertex {
        let (a, b) = self.edges[edge];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> usize {
        self.incident[u]
            .iter()
            .filter(|&&e| self.other_end(e, u) == v)
            .count()
    }

    /// Lowest id of an edge joining `u` and `v`.
    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.incident
            .get(u)?
            .iter()
            .copied()
            .find(|&e| self.other_end(e, u) == v)
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.incident.iter().all(|inc| inc.len() == k)
    }

    pub fn is_cubic(&self) -> bool {
        self.is_regular(3)
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: Vertex, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Connected components of `G[within]`, ordered by smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.reach(v, within);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// The empty graph counts as disconnected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.reach(0, self.vertices()).len() == self.n
    }

    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.first() {
            None => false,
            Some(v) => self.reach(v, within) == within,
        }
    }

    /// Two-colouring of `G[within]`, each component's smallest vertex in `A`.
    pub fn bipartition_within(&self, within: VertexSet) -> Option<Bipartition> {
        let mut a = VertexSet::EMPTY;
        let mut b = VertexSet::EMPTY;
        for comp in self.components_within(within) {
            let root = comp.first().expect("components are nonempty");
            let mut layer = VertexSet::singleton(root);
            let mut seen = layer;
            let mut even = true;
            while !layer.is_empty() {
                if even {
                    a = a.union(layer);
                } else {
                    b = b.union(layer);
                }
                let mut next = VertexSet::EMPTY;
                for v in layer {
                    next = next.union(self.adj[v]);
                }
                layer = next.intersection(comp).difference(seen);
                seen = seen.union(layer);
                even = !even;
            }
        }
        for (u, v) in &self.edges {
            if within.contains(*u) && within.contains(*v) && a.contains(*u) == a.contains(*v) {
                return None;
            }
        }
        Some(Bipartition { a, b })
    }

    pub fn bipartition(&self) -> Option<Bipartition> {
        self.bipartition_within(self.vertices())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Edge ids of `∂(side)`, ascending.
    pub fn cut_edges(&self, side: VertexSet) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, (u, v))| side.contains(*u) != side.contains(*v))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn cut(&self, side: VertexSet) -> EdgeCut {
        EdgeCut {
            side,
            edges: self.cut_edges(side),
        }
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// `G[s]`, relabelled to `0..|s|` in increasing host order.
    pub fn induced_subgraph(&self, s: VertexSet) -> InducedSubgraph {
        let original = s.intersection(self.vertices()).to_vec();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in original.iter().enumerate() {
            local[v] = i;
        }
        let mut g = Graph::empty(original.len()).expect("subgraph is no larger than host");
        for &(u, v) in &self.edges {
            if s.contains(u) && s.contains(v) {
                g.add_edge(local[u], local[v]).expect("valid local ids");
            }
        }
        InducedSubgraph { graph: g, original }
    }

    /// `G/(X→x)`: the vertices outside `x` keep their relative order and the
    /// new vertex comes last. Edges inside `x` vanish, cut edges survive as
    /// (possibly parallel) edges at the new vertex.
    pub fn contract(&self, x: VertexSet) -> Contraction {
        let x = x.intersection(self.vertices());
        let kept = self.n - x.len();
        let mut image = vec![kept; self.n];
        let mut next = 0;
        for (v, slot) in image.iter_mut().enumerate() {
            if !x.contains(v) {
                *slot = next;
                next += 1;
            }
        }
        let new_n = if x.is_empty() { kept } else { kept + 1 };
        let mut g = Graph::empty(new_n).expect("contraction is no larger than host");
        for &(u, v) in &self.edges {
            if x.contains(u) && x.contains(v) {
                continue;
            }
            g.add_edge(image[u], image[v]).expect("cut edges cross");
        }
        Contraction {
            graph: g,
            image,
            vertex: kept,
        }
    }

    /// Copy with one extra edge `uv`.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    /// Copy without the edge of the given id; later ids shift down by one.
    pub fn without_edge(&self, id: usize) -> Graph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != id)
            .map(|(_, e)| *e);
        Graph::from_edges(self.n, edges).expect("subgraph of a valid graph")
    }

    /// Copy with vertices renamed by `perm[old] = new`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v]));
        Graph::from_edges(self.n, edges).expect("permutation of a valid graph")
    }

    /// Edges as a sorted list, for multiset comparison.
    pub fn sorted_edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.sorted_edges() == other.sorted_edges()
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn vertex_set_basics() {
        let s: VertexSet = [1, 4, 63].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_vec(), vec![1, 4, 63]);
        assert!(s.contains(63));
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(s.complement(5).to_vec(), vec![0, 2, 3]);
        assert_eq!(format!("{s:?}"), "{1, 4, 63}");
    }

    #[test]
    fn rejects_loops_and_bad_ids() {
        assert!(matches!(Graph::from_edges(2, [(1, 1)]), Err(Error::Loop(1))));
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
        assert!(matches!(Graph::empty(65), Err(Error::TooManyVertices(65))));
    }

    #[test]
    fn parallel_edges_clear_simple_flag() {
        let g = Graph::from_edges(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert!(!g.is_simple());
        assert!(g.is_cubic());
        assert_eq!(g.multiplicity(0, 1), 3);
    }

    #[test]
    fn induced_subgraph_of_k4() {
        let g = k4();
        let all = g.induced_subgraph(g.vertices());
        assert_eq!(all.graph, g);
        let tri = g.induced_subgraph([0, 2, 3].into_iter().collect());
        assert_eq!(tri.graph.m(), 3);
        assert!(tri.graph.is_regular(2));
        assert_eq!(tri.original, vec![0, 2, 3]);
        assert_eq!(tri.local(3), Some(2));
    }

    #[test]
    fn contract_single_vertex_is_identity_up_to_order() {
        let g = k4();
        let c = g.contract(VertexSet::singleton(0));
        // vertex 0 moves to the end
        assert_eq!(c.vertex, 3);
        assert_eq!(c.graph, g.relabel(&[3, 0, 1, 2]));
    }

    #[test]
    fn contract_prism_triangle() {
        let prism = Graph::from_edges(
            6,
            [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        let c = prism.contract([0, 1, 2].into_iter().collect());
        assert_eq!(c.graph.n(), 4);
        assert!(c.graph.is_simple());
        assert_eq!(c.graph, k4());
    }

    #[test]
    fn bipartition_and_components() {
        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let bp = c6.bipartition().unwrap();
        assert_eq!(bp.a.to_vec(), vec![0, 2, 4]);
        assert!(k4().bipartition().is_none());
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.components().len(), 2);
        assert!(!two.is_connected());
        assert!(!Graph::empty(0).unwrap().is_connected());
    }

    #[test]
    fn cut_edges_of_vertex() {
        let g = k4();
        let cut = g.cut(VertexSet::singleton(2));
        assert_eq!(cut.len(), 3);
        assert!(cut.is_trivial(4));
    }
}
