//! Maximum matchings, perfect-matching existence and enumeration.
//!
//! The core routine is Edmonds' blossom search restricted to a vertex mask,
//! so "does `G - W` have a perfect matching" never materialises `G - W`.
//! Neighbours are scanned in increasing order, which makes every result
//! reproducible.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

const NONE: usize = usize::MAX;

/// A set of pairwise disjoint edges, stored as ascending edge ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Matching {
    pub edges: Vec<usize>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn covered(&self, g: &Graph) -> VertexSet {
        self.edges.iter().fold(VertexSet::EMPTY, |s, &e| {
            let (u, v) = g.edge(e);
            s.with(u).with(v)
        })
    }

    /// No vertex is covered twice.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::EMPTY;
        for &e in &self.edges {
            let (u, v) = g.edge(e);
            if seen.contains(u) || seen.contains(v) {
                return false;
            }
            seen = seen.with(u).with(v);
        }
        true
    }

    pub fn is_perfect(&self, g: &Graph) -> bool {
        self.is_valid(g) && self.covered(g) == g.vertices()
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.edges.binary_search(&edge).is_ok()
    }
}

/// Blossom search state for one graph and one vertex mask.
struct Blossom<'a> {
    g: &'a Graph,
    alive: VertexSet,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: Vec<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph, alive: VertexSet) -> Self {
        let n = g.n();
        let mut b = Blossom {
            g,
            alive,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: Vec::with_capacity(n),
        };
        // greedy start, lowest index first
        for v in alive {
            if b.mate[v] != NONE {
                continue;
            }
            if let Some(w) = b.free_neighbors(v).first() {
                b.mate[v] = w;
                b.mate[w] = v;
            }
        }
        b
    }

    fn free_neighbors(&self, v: usize) -> VertexSet {
        self.g
            .neighbors(v)
            .intersection(self.alive)
            .iter()
            .filter(|&w| self.mate[w] == NONE)
            .collect()
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut marked = VertexSet::EMPTY;
        loop {
            a = self.base[a];
            marked.insert(a);
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if marked.contains(b) {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Searches an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push(root);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for to in self.g.neighbors(v).intersection(self.alive) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.alive.contains(i) && self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    /// Runs to optimality; stops early once `need` vertices stay exposed is
    /// unavoidable, i.e. when `stop_on_exposed` and one root fails.
    fn run(&mut self, stop_on_exposed: bool) -> bool {
        let mut perfect = true;
        for v in self.alive {
            if self.mate[v] != NONE {
                continue;
            }
            match self.find_path(v) {
                Some(end) => self.augment(end),
                None => {
                    perfect = false;
                    if stop_on_exposed {
                        return false;
                    }
                }
            }
        }
        perfect
    }
}

/// Whether `G[alive]` has a perfect matching.
pub fn has_perfect_matching_within(g: &Graph, alive: VertexSet) -> bool {
    if alive.len() % 2 == 1 {
        return false;
    }
    if alive.is_empty() {
        return true;
    }
    // an isolated live vertex settles it immediately
    if alive.iter().any(|v| g.neighbors(v).is_disjoint(alive)) {
        return false;
    }
    // A root that fails to augment stays exposed in every maximum matching
    // (a vertex unmatched after a failed search remains unmatched), so one
    // failure is final.
    Blossom::new(g, alive).run(true)
}

/// A maximum matching of `G[alive]`, as edge ids of `g`.
pub fn maximum_matching_within(g: &Graph, alive: VertexSet) -> Matching {
    let mut b = Blossom::new(g, alive);
    b.run(false);
    let mut edges: Vec<usize> = alive
        .iter()
        .filter(|&v| b.mate[v] != NONE && v < b.mate[v])
        .map(|v| g.edge_id(v, b.mate[v]).expect("matched pairs are adjacent"))
        .collect();
    edges.sort_unstable();
    Matching { edges }
}

pub fn maximum_matching(g: &Graph) -> Matching {
    maximum_matching_within(g, g.vertices())
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    has_perfect_matching_within(g, g.vertices())
}

/// `G - w` has a perfect matching, i.e. `G[w]` is a nice subgraph.
pub fn nice_check(g: &Graph, w: VertexSet) -> bool {
    has_perfect_matching_within(g, g.vertices().difference(w))
}

/// All perfect matchings (at most `limit` of them), branching on the
/// lowest-index uncovered vertex and its incident edges in id order.
pub fn perfect_matchings(g: &Graph, limit: Option<usize>) -> Vec<Matching> {
    let mut out = Vec::new();
    if g.n() % 2 == 1 {
        return out;
    }
    let mut chosen = Vec::with_capacity(g.n() / 2);
    enumerate_pm(g, g.vertices(), &mut chosen, limit.unwrap_or(usize::MAX), &mut |m| {
        out.push(m)
    });
    out
}

/// Number of perfect matchings; parallel edges count separately.
pub fn count_perfect_matchings(g: &Graph) -> usize {
    let mut count = 0;
    let mut chosen = Vec::new();
    if g.n().is_multiple_of(2) {
        enumerate_pm(g, g.vertices(), &mut chosen, usize::MAX, &mut |_| count += 1);
    }
    count
}

fn enumerate_pm(
    g: &Graph,
    free: VertexSet,
    chosen: &mut Vec<usize>,
    limit: usize,
    emit: &mut dyn FnMut(Matching),
) -> usize {
    let Some(v) = free.first() else {
        let mut edges = chosen.clone();
        edges.sort_unstable();
        emit(Matching { edges });
        return 1;
    };
    if !has_perfect_matching_within(g, free) {
        return 0;
    }
    let mut found = 0;
    for &e in g.incident(v) {
        let w = g.other_end(e, v);
        if !free.contains(w) {
            continue;
        }
        chosen.push(e);
        found += enumerate_pm(g, free.without(v).without(w), chosen, limit - found, emit);
        chosen.pop();
        if found >= limit {
            break;
        }
    }
    found
}

/// Every edge lies in a perfect matching: connected, at least two
/// vertices, and `G - u - v` perfectly matchable for each edge `uv`.
pub fn is_matching_covered(g: &Graph) -> bool {
    if g.n() < 2 || !g.is_connected() || !has_perfect_matching(g) {
        return false;
    }
    let all = g.vertices();
    g.edges()
        .iter()
        .all(|&(u, v)| has_perfect_matching_within(g, all.without(u).without(v)))
}

/// An edge that lies in no perfect matching, if any.
pub fn unmatchable_edge(g: &Graph) -> Option<usize> {
    let all = g.vertices();
    g.edges()
        .iter()
        .position(|&(u, v)| !has_perfect_matching_within(g, all.without(u).without(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::catalog;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn small_maximum_matchings() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(maximum_matching(&k2).edges, vec![0]);
        let m = maximum_matching(&catalog::k4());
        assert_eq!(m.len(), 2);
        assert!(m.is_perfect(&catalog::k4()));
        assert_eq!(maximum_matching(&cycle(5)).len(), 2);
    }

    #[test]
    fn blossom_is_needed() {
        // triangle 0-1-2 with pendant paths; greedy 0-1 must be undone
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (1, 4), (0, 5)]).unwrap();
        assert!(has_perfect_matching(&g));
        let petersen = catalog::petersen();
        assert!(has_perfect_matching(&petersen));
        assert_eq!(count_perfect_matchings(&petersen), 6);
    }

    #[test]
    fn perfect_matching_existence() {
        assert!(has_perfect_matching(&catalog::k4()));
        assert!(!has_perfect_matching(&cycle(5)));
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!has_perfect_matching(&star));
        // K33 minus one vertex: odd order
        let k33 = catalog::k33();
        assert!(!nice_check(&k33, VertexSet::singleton(0)));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(perfect_matchings(&catalog::k4(), None).len(), 3);
        assert_eq!(perfect_matchings(&catalog::k33(), None).len(), 6);
        assert!(perfect_matchings(&cycle(5), None).is_empty());
        assert_eq!(perfect_matchings(&catalog::k33(), Some(4)).len(), 4);
        let theta = Graph::from_edges(2, [(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(perfect_matchings(&theta, None).len(), 3);
        for m in perfect_matchings(&catalog::cube(), None) {
            assert!(m.is_perfect(&catalog::cube()));
        }
    }

    #[test]
    fn matching_covered_examples() {
        assert!(is_matching_covered(&catalog::k4()));
        assert!(is_matching_covered(&cycle(6)));
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!is_matching_covered(&star));
        // two triangles joined by a bridge: the bridge is forced, the
        // triangles' other edges at the bridge ends are not matchable
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap();
        assert!(has_perfect_matching(&g));
        assert!(!is_matching_covered(&g));
        assert!(unmatchable_edge(&g).is_some());
    }

    #[test]
    fn nice_check_edges() {
        let k4 = catalog::k4();
        assert!(nice_check(&k4, VertexSet::EMPTY));
        assert!(nice_check(&k4, k4.vertices()));
        for u in 0..4 {
            assert!(nice_check(&k4, k4.closed_neighborhood(u)));
        }
    }
}
