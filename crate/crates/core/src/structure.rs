//! Barriers, bicritical/brick/brace classification and tight cuts.

use serde::Serialize;

use crate::connectivity::{canonical_shore, connectivity_profile, enumerate_cuts};
use crate::error::{Error, Result};
use crate::graph::{Contraction, EdgeCut, Graph, VertexSet};
use crate::matching::{
    has_perfect_matching, has_perfect_matching_within, is_matching_covered, perfect_matchings, unmatchable_edge,
};

/// Graphs up to this order also get the perfect-matching enumeration
/// cross-check inside [`is_tight_cut`].
pub const TIGHT_ENUMERATION_LIMIT: usize = 16;

/// Largest order for which non-cubic hosts get the subset sweep in
/// [`nontrivial_tight_cuts`].
pub const SUBSET_SWEEP_LIMIT: usize = 20;

/// Number of odd components of `G - s`.
pub fn odd_component_count(g: &Graph, s: VertexSet) -> usize {
    g.components_within(g.vertices().difference(s))
        .iter()
        .filter(|c| c.len() % 2 == 1)
        .count()
}

/// A nonempty set `S` with `o(G - S) = |S|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Barrier {
    pub s: VertexSet,
    pub odd_component_count: usize,
    /// `|S| >= 2`.
    pub nontrivial: bool,
    /// Nontrivial, and no proper subset of size at least 2 is a barrier.
    pub minimal_nontrivial: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BarrierMode {
    All,
    Nontrivial,
    MinimalNontrivial,
}

/// Barriers of `g` under the given filter, sorted by size then bitmask.
///
/// The empty set is never reported. Hosts that are matching covered are
/// searched over independent sets only.
pub fn barriers(g: &Graph, mode: BarrierMode) -> Result<Vec<Barrier>> {
    if !has_perfect_matching(g) {
        return Err(Error::domain("barriers need a graph with a perfect matching"));
    }
    let sets = barrier_sets(g, is_matching_covered(g));
    let nontrivial: Vec<VertexSet> = sets.iter().copied().filter(|s| s.len() >= 2).collect();
    let out = sets
        .into_iter()
        .map(|s| {
            let is_nontrivial = s.len() >= 2;
            let minimal = is_nontrivial && !nontrivial.iter().any(|&t| t != s && t.is_subset(s));
            Barrier {
                s,
                odd_component_count: s.len(),
                nontrivial: is_nontrivial,
                minimal_nontrivial: minimal,
            }
        })
        .filter(|b| match mode {
            BarrierMode::All => true,
            BarrierMode::Nontrivial => b.nontrivial,
            BarrierMode::MinimalNontrivial => b.minimal_nontrivial,
        })
        .collect();
    Ok(out)
}

/// Every nonempty `S` with `o(G - S) = |S|`, optionally restricted to
/// independent sets. Sorted by size, then bitmask.
pub fn barrier_sets(g: &Graph, independent_only: bool) -> Vec<VertexSet> {
    let n = g.n();
    let mut out = Vec::new();
    fn rec(
        g: &Graph,
        start: usize,
        s: VertexSet,
        cap: usize,
        independent_only: bool,
        out: &mut Vec<VertexSet>,
    ) {
        if !s.is_empty() && odd_component_count(g, s) == s.len() {
            out.push(s);
        }
        if s.len() == cap {
            return;
        }
        for v in start..g.n() {
            if independent_only && !g.neighbors(v).is_disjoint(s) {
                continue;
            }
            rec(g, v + 1, s.with(v), cap, independent_only, out);
        }
    }
    // o(G - S) <= n - |S| forces |S| <= n / 2
    rec(g, 0, VertexSet::EMPTY, n / 2, independent_only, &mut out);
    out.sort_by_key(|s| (s.len(), s.bits()));
    out
}

/// Whether `s` is a barrier (the empty set included).
pub fn is_barrier(g: &Graph, s: VertexSet) -> bool {
    odd_component_count(g, s) == s.len()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub matching_covered: bool,
    pub bicritical: bool,
    pub brick: bool,
    pub two_extendable: bool,
    pub brace: bool,
    /// An edge in no perfect matching.
    pub unmatchable_edge: Option<usize>,
    /// A vertex pair whose deletion leaves no perfect matching.
    pub bicritical_failure: Option<(usize, usize)>,
    /// Two disjoint edges (ids) that no perfect matching contains.
    pub extension_failure: Option<(usize, usize)>,
}

/// Matching-theoretic classification of a connected graph. For bipartite
/// hosts the brace flag is computed twice, from 2-extendability and from
/// the four-vertex deletion test; disagreement is an internal error.
pub fn classify(g: &Graph) -> Result<Classification> {
    let all = g.vertices();
    let connected = g.is_connected();
    let has_pm = has_perfect_matching(g);
    let matching_covered = is_matching_covered(g);
    let unmatchable = if connected && has_pm { unmatchable_edge(g) } else { None };

    let mut bicritical_failure = None;
    if g.m() > 0 {
        'outer: for u in 0..g.n() {
            for v in u + 1..g.n() {
                if !has_perfect_matching_within(g, all.without(u).without(v)) {
                    bicritical_failure = Some((u, v));
                    break 'outer;
                }
            }
        }
    }
    let bicritical = g.m() > 0 && g.n() >= 2 && bicritical_failure.is_none();

    let extension_failure = if connected && has_pm && g.n() >= 6 {
        first_non_extendable_pair(g)
    } else {
        None
    };
    let two_extendable = connected && has_pm && g.n() >= 6 && extension_failure.is_none();

    let bipartite = g.is_bipartite();
    let brace = bipartite && two_extendable;
    if bipartite && connected && g.n() >= 6 {
        let by_deletion = brace_by_deletion(g);
        if by_deletion != brace {
            return Err(Error::internal(format!(
                "brace tests disagree: 2-extendable gives {brace}, four-vertex deletion gives {by_deletion}"
            )));
        }
    }
    let brick = bicritical && connectivity_profile(g).three_connected;
    Ok(Classification {
        matching_covered,
        bicritical,
        brick,
        two_extendable,
        brace,
        unmatchable_edge: unmatchable,
        bicritical_failure,
        extension_failure,
    })
}

fn first_non_extendable_pair(g: &Graph) -> Option<(usize, usize)> {
    let all = g.vertices();
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        for (j, &(c, d)) in g.edges().iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let rest = all.without(a).without(b).without(c).without(d);
            if !has_perfect_matching_within(g, rest) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Connected bipartite test: `G` has a perfect matching and so does
/// `G - {a1, a2, b1, b2}` for all distinct `a1, a2` in `A`, `b1, b2` in `B`.
pub fn brace_by_deletion(g: &Graph) -> bool {
    let Some(bp) = g.bipartition() else {
        return false;
    };
    if !g.is_connected() || g.n() < 6 || !has_perfect_matching(g) {
        return false;
    }
    let a = bp.a.to_vec();
    let b = bp.b.to_vec();
    let all = g.vertices();
    for (i, &a1) in a.iter().enumerate() {
        for &a2 in &a[i + 1..] {
            for (j, &b1) in b.iter().enumerate() {
                for &b2 in &b[j + 1..] {
                    let rest = all.without(a1).without(a2).without(b1).without(b2);
                    if !has_perfect_matching_within(g, rest) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The larger and smaller colour class inside an odd shore.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteSplit {
    pub x_plus: VertexSet,
    pub x_minus: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutWitness {
    pub cut: EdgeCut,
    pub tight: bool,
    /// Present iff the host is bipartite and `|X|` is odd.
    pub bipartite_split: Option<BipartiteSplit>,
}

/// Tightness of `cut`. The primary test is exact and polynomial: `|X|` must
/// be odd and no three disjoint cut edges may extend to a perfect matching.
/// Up to [`TIGHT_ENUMERATION_LIMIT`] vertices every perfect matching is also
/// enumerated, and bipartite hosts are checked against the colour-class
/// criterion; any disagreement is an internal error.
pub fn is_tight_cut(g: &Graph, cut: &EdgeCut) -> Result<CutWitness> {
    if !has_perfect_matching(g) {
        return Err(Error::domain("tightness needs a graph with a perfect matching"));
    }
    let x = cut.side;
    let edges = g.cut_edges(x);
    let tight = tight_by_extension(g, x, &edges);
    if g.n() <= TIGHT_ENUMERATION_LIMIT {
        let by_enumeration = tight_by_enumeration(g, &edges);
        if by_enumeration != tight {
            return Err(Error::internal(format!(
                "tightness of {x:?}: extension test {tight}, enumeration {by_enumeration}"
            )));
        }
    }
    let bipartite_split = match g.bipartition() {
        Some(bp) if x.len() % 2 == 1 => {
            let (xa, xb) = (x.intersection(bp.a), x.intersection(bp.b));
            let (x_plus, x_minus) = if xa.len() > xb.len() { (xa, xb) } else { (xb, xa) };
            Some(BipartiteSplit { x_plus, x_minus })
        }
        _ => None,
    };
    if let Some(split) = bipartite_split {
        if is_matching_covered(g) {
            let by_criterion = tight_by_colour_classes(g, x, split);
            if by_criterion != tight {
                return Err(Error::internal(format!(
                    "tightness of {x:?}: extension test {tight}, colour-class criterion {by_criterion}"
                )));
            }
        }
    }
    Ok(CutWitness {
        cut: EdgeCut { side: x, edges },
        tight,
        bipartite_split,
    })
}

/// `|X|` odd and no perfect matching uses three or more cut edges.
pub fn tight_by_extension(g: &Graph, x: VertexSet, cut_edges: &[usize]) -> bool {
    if x.len().is_multiple_of(2) || x.is_empty() || x.len() == g.n() {
        return false;
    }
    let all = g.vertices();
    let k = cut_edges.len();
    for i in 0..k {
        let (a, b) = g.edge(cut_edges[i]);
        let s1 = VertexSet::EMPTY.with(a).with(b);
        for j in i + 1..k {
            let (c, d) = g.edge(cut_edges[j]);
            if s1.contains(c) || s1.contains(d) {
                continue;
            }
            let s2 = s1.with(c).with(d);
            for &e in &cut_edges[j + 1..] {
                let (p, q) = g.edge(e);
                if s2.contains(p) || s2.contains(q) {
                    continue;
                }
                if has_perfect_matching_within(g, all.difference(s2.with(p).with(q))) {
                    return false;
                }
            }
        }
    }
    true
}

/// Every perfect matching meets the cut exactly once.
pub fn tight_by_enumeration(g: &Graph, cut_edges: &[usize]) -> bool {
    perfect_matchings(g, None)
        .iter()
        .all(|m| cut_edges.iter().filter(|&&e| m.contains(e)).count() == 1)
}

/// Colour-class test for bipartite matching covered hosts:
/// `|X+| = |X-| + 1` and no edge joins `X-` to the smaller class of `X̄`.
pub fn tight_by_colour_classes(g: &Graph, x: VertexSet, split: BipartiteSplit) -> bool {
    if split.x_plus.len() != split.x_minus.len() + 1 {
        return false;
    }
    let Some(bp) = g.bipartition() else {
        return false;
    };
    let xc = x.complement(g.n());
    let (ca, cb) = (xc.intersection(bp.a), xc.intersection(bp.b));
    let xc_minus = if ca.len() < cb.len() { ca } else { cb };
    split
        .x_minus
        .iter()
        .all(|v| g.neighbors(v).is_disjoint(xc_minus))
}

/// All nontrivial tight cuts, one per `{X, X̄}`. 2-connected cubic hosts
/// only need their nontrivial 3-cuts inspected; other hosts get a sweep
/// over odd shores (at most [`SUBSET_SWEEP_LIMIT`] vertices).
pub fn nontrivial_tight_cuts(g: &Graph) -> Result<Vec<CutWitness>> {
    let profile = connectivity_profile(g);
    let n = g.n();
    let candidates: Vec<VertexSet> = if profile.cubic && profile.two_connected {
        enumerate_cuts(g, 3, true).into_iter().map(|c| c.side).collect()
    } else {
        if n > SUBSET_SWEEP_LIMIT {
            return Err(Error::Unsupported(format!(
                "tight-cut sweep over {n} vertices of a non-cubic host"
            )));
        }
        let mut sides = Vec::new();
        // shores avoiding vertex 0 cover every {X, X̄} once
        for bits in 0..(1u64 << n.saturating_sub(1)) {
            let x = VertexSet::from_bits(bits << 1);
            if x.len() % 2 == 1 && x.len() >= 2 && n - x.len() >= 2 {
                sides.push(canonical_shore(x, n));
            }
        }
        sides.sort_by_key(|s| (s.len(), s.bits()));
        sides
    };
    let mut out = Vec::new();
    for x in candidates {
        let w = is_tight_cut(g, &g.cut(x))?;
        if w.tight {
            out.push(w);
        }
    }
    Ok(out)
}

/// The two contractions `(G/X̄, G/X)` of a tight cut, with the maps back to
/// `g`'s labels.
pub fn tight_cut_contractions(g: &Graph, w: &CutWitness) -> Result<(Contraction, Contraction)> {
    if !w.tight {
        return Err(Error::ContractUntight);
    }
    let x = w.cut.side;
    Ok((g.contract(x.complement(g.n())), g.contract(x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::catalog;
    use crate::iso::is_isomorphic;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn odd_components() {
        assert_eq!(odd_component_count(&catalog::k4(), VertexSet::EMPTY), 0);
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(odd_component_count(&k2, set(&[0])), 1);
        // leaves the triangle and two singletons
        let g = catalog::k33_triangle();
        assert_eq!(odd_component_count(&g, set(&[3, 4, 5])), 3);
    }

    #[test]
    fn k4_barriers() {
        let all = barriers(&catalog::k4(), BarrierMode::All).unwrap();
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(|b| b.s.len() == 1));
        assert!(barriers(&catalog::k4(), BarrierMode::Nontrivial).unwrap().is_empty());
    }

    #[test]
    fn k33_colour_classes_are_barriers() {
        let nt = barriers(&catalog::k33(), BarrierMode::Nontrivial).unwrap();
        let sets: Vec<_> = nt.iter().map(|b| b.s).collect();
        assert!(sets.contains(&set(&[0, 1, 2])));
        assert!(sets.contains(&set(&[3, 4, 5])));
    }

    #[test]
    fn k33_triangle_minimal_barrier() {
        let g = catalog::k33_triangle();
        let min = barriers(&g, BarrierMode::MinimalNontrivial).unwrap();
        assert!(min.iter().any(|b| b.s == set(&[3, 4, 5])));
        let comps = g.components_within(g.vertices().difference(set(&[3, 4, 5])));
        let mut sizes: Vec<_> = comps.iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 3]);
    }

    #[test]
    fn no_perfect_matching_is_domain_error() {
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(matches!(barriers(&c5, BarrierMode::All), Err(Error::Domain(_))));
    }

    #[test]
    fn pruned_and_exhaustive_barrier_search_agree() {
        for g in [catalog::k33_triangle(), catalog::prism(), catalog::cube(), catalog::r8()] {
            assert_eq!(barrier_sets(&g, true), barrier_sets(&g, false));
        }
    }

    #[test]
    fn classification_examples() {
        let k4 = classify(&catalog::k4()).unwrap();
        assert!(k4.brick && k4.bicritical && k4.matching_covered && !k4.brace);
        let k33 = classify(&catalog::k33()).unwrap();
        assert!(k33.brace && k33.two_extendable && !k33.bicritical);
        let t = classify(&catalog::k33_triangle()).unwrap();
        assert!(t.matching_covered && !t.bicritical && !t.brick);
        assert!(t.bicritical_failure.is_some());
        assert!(classify(&catalog::cube()).unwrap().brace);
        assert!(classify(&catalog::petersen()).unwrap().brick);
    }

    #[test]
    fn trivial_cuts_are_tight() {
        let g = catalog::prism();
        for v in 0..g.n() {
            assert!(is_tight_cut(&g, &g.cut(VertexSet::singleton(v))).unwrap().tight);
        }
    }

    #[test]
    fn prism_triangle_cut_is_not_tight() {
        let g = catalog::prism();
        let w = is_tight_cut(&g, &g.cut(set(&[0, 1, 2]))).unwrap();
        assert!(!w.tight);
        assert_eq!(w.cut.edges.len(), 3);
    }

    #[test]
    fn k33_triangle_cut_and_contractions() {
        let g = catalog::k33_triangle();
        let w = is_tight_cut(&g, &g.cut(catalog::k33_triangle_triangle())).unwrap();
        assert!(w.tight);
        let (small, big) = tight_cut_contractions(&g, &w).unwrap();
        assert!(is_isomorphic(&small.graph, &catalog::k4()).is_some());
        assert!(is_isomorphic(&big.graph, &catalog::k33()).is_some());
        let cuts = nontrivial_tight_cuts(&g).unwrap();
        assert!(cuts.iter().any(|c| c.cut.side == catalog::k33_triangle_triangle()));
    }

    #[test]
    fn bricks_and_braces_have_no_nontrivial_tight_cuts() {
        assert!(nontrivial_tight_cuts(&catalog::k4()).unwrap().is_empty());
        assert!(nontrivial_tight_cuts(&catalog::k33()).unwrap().is_empty());
        assert!(nontrivial_tight_cuts(&catalog::cube()).unwrap().is_empty());
    }

    #[test]
    fn untight_contraction_is_rejected() {
        let g = catalog::prism();
        let w = is_tight_cut(&g, &g.cut(set(&[0, 1, 2]))).unwrap();
        assert!(matches!(tight_cut_contractions(&g, &w), Err(Error::ContractUntight)));
    }

    #[test]
    fn trivial_cut_contractions() {
        let g = catalog::k4();
        let w = is_tight_cut(&g, &g.cut(VertexSet::singleton(2))).unwrap();
        let (star, rest) = tight_cut_contractions(&g, &w).unwrap();
        assert_eq!((star.graph.n(), star.graph.m()), (2, 3));
        assert!(is_isomorphic(&rest.graph, &g).is_some());
    }

    #[test]
    fn bipartite_split_sizes() {
        let g = catalog::k33();
        let w = is_tight_cut(&g, &g.cut(set(&[0, 1, 3]))).unwrap();
        let split = w.bipartite_split.unwrap();
        assert_eq!((split.x_plus.len(), split.x_minus.len()), (2, 1));
        assert!(!w.tight);
    }
}
