//! Isomorphism testing for small multigraphs.
//!
//! Vertices are coloured by local invariants (degree, distance profile,
//! short cycles) refined by neighbour colours, then a backtracking search
//! extends a partial map along BFS order so every new vertex after the
//! first in its component has an already-mapped neighbour.

use crate::graph::{Graph, VertexSet};

fn mix(mut h: u64, x: u64) -> u64 {
    h ^= x.wrapping_add(0x9e37_79b9_7f4a_7c15).wrapping_add(h << 6).wrapping_add(h >> 2);
    // splitmix64 finaliser
    h = (h ^ (h >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    h = (h ^ (h >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    h ^ (h >> 31)
}

fn local_invariant(g: &Graph, v: usize) -> u64 {
    let all = g.vertices();
    let mut h = mix(0, g.degree(v) as u64);
    let mut seen = VertexSet::singleton(v);
    let mut layer = seen;
    while !layer.is_empty() {
        let mut next = VertexSet::EMPTY;
        for w in layer {
            next = next.union(g.neighbors(w));
        }
        layer = next.intersection(all).difference(seen);
        seen = seen.union(layer);
        h = mix(h, layer.len() as u64);
    }
    let nb = g.neighbors(v);
    let triangles: usize = nb.iter().map(|w| g.neighbors(w).intersection(nb).len()).sum();
    let mut squares = 0usize;
    for w in 0..g.n() {
        if w != v {
            let c = g.neighbors(w).intersection(nb).len();
            squares += c * c.saturating_sub(1) / 2;
        }
    }
    let loaded: usize = nb.iter().map(|w| g.multiplicity(v, w)).map(|k| k * k).sum();
    mix(mix(mix(h, triangles as u64), squares as u64), loaded as u64)
}

fn refine_step(g: &Graph, colors: &[u64]) -> Vec<u64> {
    (0..g.n())
        .map(|v| {
            let mut nb: Vec<u64> = g
                .incident(v)
                .iter()
                .map(|&e| colors[g.other_end(e, v)])
                .collect();
            nb.sort_unstable();
            nb.into_iter().fold(mix(colors[v], 0xc0ffee), mix)
        })
        .collect()
}

fn class_count(colors: &[u64]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn sorted(colors: &[u64]) -> Vec<u64> {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c
}

/// Stable colours of both graphs, or `None` if the colour histograms part.
fn joint_refinement(g1: &Graph, g2: &Graph, seed1: Vec<u64>, seed2: Vec<u64>) -> Option<(Vec<u64>, Vec<u64>)> {
    let (mut c1, mut c2) = (seed1, seed2);
    if sorted(&c1) != sorted(&c2) {
        return None;
    }
    loop {
        let before = class_count(&c1);
        let n1 = refine_step(g1, &c1);
        let n2 = refine_step(g2, &c2);
        if sorted(&n1) != sorted(&n2) {
            return None;
        }
        c1 = n1;
        c2 = n2;
        if class_count(&c1) == before {
            return Some((c1, c2));
        }
    }
}

/// Isomorphism-invariant fingerprint, used to bucket graphs before an exact
/// test.
pub fn fingerprint(g: &Graph) -> u64 {
    let mut colors: Vec<u64> = (0..g.n()).map(|v| local_invariant(g, v)).collect();
    loop {
        let before = class_count(&colors);
        colors = refine_step(g, &colors);
        if class_count(&colors) == before {
            break;
        }
    }
    sorted(&colors)
        .into_iter()
        .fold(mix(g.n() as u64, g.m() as u64), mix)
}

/// A vertex bijection `map[v1] = v2` preserving adjacency with
/// multiplicity, if one exists.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    find_isomorphism_with(g1, g2, &[])
}

/// Like [`is_isomorphic`], restricted to maps sending each `(a, b)` of
/// `fixed` to `map[a] = b`.
pub fn find_isomorphism_with(g1: &Graph, g2: &Graph, fixed: &[(usize, usize)]) -> Option<Vec<usize>> {
    let n = g1.n();
    if n != g2.n() || g1.m() != g2.m() || g1.is_simple() != g2.is_simple() {
        return None;
    }
    let mut d1 = g1.degrees();
    let mut d2 = g2.degrees();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return None;
    }
    let mut seed1: Vec<u64> = (0..n).map(|v| local_invariant(g1, v)).collect();
    let mut seed2: Vec<u64> = (0..n).map(|v| local_invariant(g2, v)).collect();
    for (i, &(a, b)) in fixed.iter().enumerate() {
        if a >= n || b >= n {
            return None;
        }
        let tag = mix(0xf1_7ed, i as u64);
        seed1[a] = mix(seed1[a], tag);
        seed2[b] = mix(seed2[b], tag);
    }
    let (c1, c2) = joint_refinement(g1, g2, seed1, seed2)?;

    let mult = |g: &Graph| -> Vec<u8> {
        let mut m = vec![0u8; n * n];
        for &(u, v) in g.edges() {
            m[u * n + v] += 1;
            m[v * n + u] += 1;
        }
        m
    };
    let m1 = mult(g1);
    let m2 = mult(g2);

    let order = search_order(g1, &c1, fixed);
    let mut map = vec![usize::MAX; n];
    let mut used = VertexSet::EMPTY;
    let mut forced = vec![None; n];
    for &(a, b) in fixed {
        match forced[a] {
            Some(prev) if prev != b => return None,
            _ => forced[a] = Some(b),
        }
    }
    let ctx = Search {
        forced: &forced,
        g1,
        g2,
        c1: &c1,
        c2: &c2,
        m1: &m1,
        m2: &m2,
        order: &order,
        n,
    };
    ctx.extend(0, &mut map, &mut used).then_some(map)
}

/// Fixed vertices first, then BFS from the rarest colour in each component.
fn search_order(g: &Graph, colors: &[u64], fixed: &[(usize, usize)]) -> Vec<(usize, Option<usize>)> {
    let n = g.n();
    let rarity = |v: usize| colors.iter().filter(|&&c| c == colors[v]).count();
    let mut placed = VertexSet::EMPTY;
    let mut order: Vec<(usize, Option<usize>)> = Vec::with_capacity(n);
    let mut queue = std::collections::VecDeque::new();
    for &(a, _) in fixed {
        if !placed.contains(a) {
            placed.insert(a);
            order.push((a, None));
            queue.push_back(a);
        }
    }
    loop {
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if !placed.contains(w) {
                    placed.insert(w);
                    order.push((w, Some(v)));
                    queue.push_back(w);
                }
            }
        }
        let root = (0..n)
            .filter(|&v| !placed.contains(v))
            .min_by_key(|&v| (rarity(v), v));
        match root {
            None => break,
            Some(r) => {
                placed.insert(r);
                order.push((r, None));
                queue.push_back(r);
            }
        }
    }
    order
}

struct Search<'a> {
    forced: &'a [Option<usize>],
    g1: &'a Graph,
    g2: &'a Graph,
    c1: &'a [u64],
    c2: &'a [u64],
    m1: &'a [u8],
    m2: &'a [u8],
    order: &'a [(usize, Option<usize>)],
    n: usize,
}

impl Search<'_> {
    fn extend(&self, depth: usize, map: &mut [usize], used: &mut VertexSet) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let (v, parent) = self.order[depth];
        let pool = match (self.forced[v], parent) {
            (Some(b), _) => VertexSet::singleton(b),
            (None, Some(p)) => self.g2.neighbors(map[p]),
            (None, None) => self.g2.vertices(),
        };
        for c in pool.difference(*used) {
            if self.c2[c] != self.c1[v] || self.g1.degree(v) != self.g2.degree(c) {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&(w, _)| {
                self.m1[v * self.n + w] == self.m2[c * self.n + map[w]]
            });
            if !consistent {
                continue;
            }
            map[v] = c;
            used.insert(c);
            if self.extend(depth + 1, map, used) {
                return true;
            }
            used.remove(c);
            map[v] = usize::MAX;
        }
        false
    }
}

/// All automorphisms, as `perm[v]` images. Intended for graphs with small
/// automorphism groups.
pub fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    let mut stack: Vec<(usize, usize)> = Vec::new();
    fn rec(g: &Graph, v: usize, stack: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<usize>>) {
        if v == g.n() {
            if let Some(m) = find_isomorphism_with(g, g, stack) {
                out.push(m);
            }
            return;
        }
        for t in 0..g.n() {
            if stack.iter().any(|&(_, b)| b == t) {
                continue;
            }
            stack.push((v, t));
            if find_isomorphism_with(g, g, stack).is_some() {
                rec(g, v + 1, stack, out);
            }
            stack.pop();
        }
    }
    if n > 0 {
        rec(g, 0, &mut stack, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::catalog;

    fn check_map(g1: &Graph, g2: &Graph, map: &[usize]) {
        let image = g1.relabel(map);
        assert_eq!(&image, g2);
    }

    #[test]
    fn k4_relabelled() {
        let g = catalog::k4();
        let h = g.relabel(&[2, 0, 3, 1]);
        let map = is_isomorphic(&g, &h).unwrap();
        check_map(&g, &h, &map);
    }

    #[test]
    fn k33_is_not_the_prism() {
        assert!(is_isomorphic(&catalog::k33(), &catalog::prism()).is_none());
    }

    #[test]
    fn respects_multiplicity() {
        let a = Graph::from_edges(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, [(0, 1), (1, 2), (1, 2)]).unwrap();
        let c = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let map = is_isomorphic(&a, &b).unwrap();
        check_map(&a, &b, &map);
        assert!(is_isomorphic(&a, &c).is_none());
    }

    #[test]
    fn fixed_pairs_constrain_the_map() {
        let g = catalog::k33_triangle();
        // a triangle vertex cannot map to a vertex outside the triangle
        let tri = (0..8)
            .find(|&v| g.neighbors(v).iter().any(|w| !g.neighbors(w).intersection(g.neighbors(v)).is_empty()))
            .unwrap();
        let far = (0..8)
            .find(|&v| g.neighbors(v).iter().all(|w| g.neighbors(w).intersection(g.neighbors(v)).is_empty()))
            .unwrap();
        assert!(find_isomorphism_with(&g, &g, &[(tri, tri)]).is_some());
        assert!(find_isomorphism_with(&g, &g, &[(tri, far)]).is_none());
    }

    #[test]
    fn disconnected_graphs() {
        let two_k4 = Graph::from_edges(
            8,
            [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)],
        )
        .unwrap();
        let shuffled = two_k4.relabel(&[7, 0, 5, 2, 1, 6, 3, 4]);
        let map = is_isomorphic(&two_k4, &shuffled).unwrap();
        check_map(&two_k4, &shuffled, &map);
        assert_eq!(fingerprint(&two_k4), fingerprint(&shuffled));
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphisms(&catalog::k4()).len(), 24);
        assert_eq!(automorphisms(&catalog::k33()).len(), 72);
        assert_eq!(automorphisms(&catalog::prism()).len(), 12);
    }
}
