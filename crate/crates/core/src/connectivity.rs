//! Connectivity classes and small edge cuts.

use serde::Serialize;

use crate::graph::{Bipartition, EdgeCut, Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectivityProfile {
    pub connected: bool,
    pub two_connected: bool,
    pub three_connected: bool,
    pub cubic: bool,
    pub bipartition: Option<Bipartition>,
}

impl ConnectivityProfile {
    pub fn bipartite(&self) -> bool {
        self.bipartition.is_some()
    }
}

/// Vertex connectivity up to 3. For simple cubic graphs vertex and edge
/// connectivity coincide, so the cheaper edge test is used there.
pub fn connectivity_profile(g: &Graph) -> ConnectivityProfile {
    let connected = g.is_connected();
    let cubic = g.is_cubic();
    let (two_connected, three_connected) = if !connected {
        (false, false)
    } else if cubic && g.is_simple() {
        (
            edge_connectivity_at_least(g, 2),
            edge_connectivity_at_least(g, 3),
        )
    } else {
        (
            vertex_connectivity_at_least(g, 2),
            vertex_connectivity_at_least(g, 3),
        )
    };
    ConnectivityProfile {
        connected,
        two_connected,
        three_connected,
        cubic,
        bipartition: g.bipartition(),
    }
}

/// Whether `g` stays connected after deleting any `k - 1` vertices, with at
/// least `k + 1` vertices.
pub fn vertex_connectivity_at_least(g: &Graph, k: usize) -> bool {
    if g.n() <= k || !g.is_connected() {
        return false;
    }
    let all = g.vertices();
    let mut removed = Vec::with_capacity(k);
    fn rec(g: &Graph, all: VertexSet, start: usize, left: usize, removed: &mut Vec<usize>) -> bool {
        if left == 0 {
            let rest = removed.iter().fold(all, |s, &v| s.without(v));
            return g.is_connected_within(rest);
        }
        for v in start..g.n() {
            removed.push(v);
            let ok = rec(g, all, v + 1, left - 1, removed);
            removed.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    (1..k).all(|j| rec(g, all, 0, j, &mut removed))
}

/// Whether `g` stays connected after deleting any `k - 1` edges.
pub fn edge_connectivity_at_least(g: &Graph, k: usize) -> bool {
    if !g.is_connected() {
        return false;
    }
    let mut removed = Vec::with_capacity(k);
    fn rec(g: &Graph, start: usize, left: usize, removed: &mut Vec<usize>) -> bool {
        if left == 0 {
            return components_without(g, removed).len() == 1;
        }
        for e in start..g.m() {
            removed.push(e);
            let ok = rec(g, e + 1, left - 1, removed);
            removed.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    (1..k).all(|j| rec(g, 0, j, &mut removed))
}

/// Components of `g` minus the given edge ids.
pub fn components_without(g: &Graph, removed: &[usize]) -> Vec<VertexSet> {
    let mut seen = VertexSet::EMPTY;
    let mut out = Vec::new();
    for root in 0..g.n() {
        if seen.contains(root) {
            continue;
        }
        let mut comp = VertexSet::singleton(root);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &e in g.incident(v) {
                if removed.contains(&e) {
                    continue;
                }
                let w = g.other_end(e, v);
                if !comp.contains(w) {
                    comp.insert(w);
                    stack.push(w);
                }
            }
        }
        seen = seen.union(comp);
        out.push(comp);
    }
    out
}

/// The shore used to represent `{X, X̄}`: the smaller one, or on a tie the one
/// avoiding vertex 0.
pub fn canonical_shore(x: VertexSet, n: usize) -> VertexSet {
    let xc = x.complement(n);
    match x.len().cmp(&xc.len()) {
        std::cmp::Ordering::Less => x,
        std::cmp::Ordering::Greater => xc,
        std::cmp::Ordering::Equal if x.contains(0) => xc,
        std::cmp::Ordering::Equal => x,
    }
}

/// Every edge cut with exactly `k` edges, one entry per `{X, X̄}` with `X`
/// given by [`canonical_shore`]. Sorted by cut edges, then shore.
pub fn enumerate_cuts(g: &Graph, k: usize, nontrivial_only: bool) -> Vec<EdgeCut> {
    let n = g.n();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    let mut visit = |chosen: &[usize]| {
        let comps = components_without(g, chosen);
        let c = comps.len();
        if !(2..=16).contains(&c) {
            return;
        }
        // the component holding vertex 0 stays on the X̄ side of the mask
        for mask in 1u32..(1 << (c - 1)) {
            let x = (0..c - 1)
                .filter(|i| mask >> i & 1 == 1)
                .fold(VertexSet::EMPTY, |s, i| s.union(comps[i + 1]));
            let crosses = chosen.iter().all(|&e| {
                let (u, v) = g.edge(e);
                x.contains(u) != x.contains(v)
            });
            if !crosses {
                continue;
            }
            let side = canonical_shore(x, n);
            let cut = EdgeCut {
                side,
                edges: chosen.to_vec(),
            };
            if nontrivial_only && cut.is_trivial(n) {
                continue;
            }
            out.push(cut);
        }
    };
    fn rec(m: usize, start: usize, left: usize, chosen: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if left == 0 {
            f(chosen);
            return;
        }
        for e in start..m {
            chosen.push(e);
            rec(m, e + 1, left - 1, chosen, f);
            chosen.pop();
        }
    }
    if k == 0 {
        visit(&[]);
    } else {
        rec(g.m(), 0, k, &mut chosen, &mut visit);
    }
    out.sort_by(|a, b| a.edges.cmp(&b.edges).then(a.side.cmp(&b.side)));
    out
}
