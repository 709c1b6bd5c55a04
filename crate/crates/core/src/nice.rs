//! Nice vertices, Υ, and nice pairs.

use serde::Serialize;

use crate::connectivity::connectivity_profile;
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph, Vertex, VertexSet};
use crate::matching::{is_matching_covered, nice_check};
use crate::structure::barrier_sets;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NiceMethod {
    /// `G - N[u]` has a perfect matching.
    Definition,
    /// No barrier leaves `u` isolated.
    Barrier,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NiceReport {
    pub nice: VertexSet,
    /// `|nice|`.
    pub upsilon: usize,
    pub method: NiceMethod,
}

fn require_cubic(g: &Graph) -> Result<()> {
    if g.is_cubic() {
        Ok(())
    } else {
        Err(Error::domain("graph is not cubic"))
    }
}

pub fn is_nice_vertex(g: &Graph, u: Vertex) -> bool {
    nice_check(g, g.closed_neighborhood(u))
}

/// Nice vertices of a cubic graph. The barrier method needs a 2-connected
/// host.
pub fn nice_vertices(g: &Graph, method: NiceMethod) -> Result<NiceReport> {
    require_cubic(g)?;
    let nice = match method {
        NiceMethod::Definition => (0..g.n()).filter(|&u| is_nice_vertex(g, u)).collect(),
        NiceMethod::Barrier => {
            if !connectivity_profile(g).two_connected {
                return Err(Error::Unsupported(
                    "barrier niceness needs a 2-connected host".into(),
                ));
            }
            let sets = barrier_sets(g, is_matching_covered(g));
            let isolated = sets.iter().fold(VertexSet::EMPTY, |acc, &s| {
                acc.union(
                    (0..g.n())
                        .filter(|&u| !s.contains(u) && g.neighbors(u).is_subset(s))
                        .collect(),
                )
            });
            isolated.complement(g.n())
        }
    };
    Ok(NiceReport {
        nice,
        upsilon: nice.len(),
        method,
    })
}

/// A barrier leaving `u` isolated, if one exists.
pub fn isolating_barrier(g: &Graph, u: Vertex) -> Option<VertexSet> {
    barrier_sets(g, is_matching_covered(g))
        .into_iter()
        .find(|&s| !s.contains(u) && g.neighbors(u).is_subset(s))
}

/// The nice-pair relation of a cubic bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NicePairMatrix {
    pub bipartition: Bipartition,
    /// `A` in increasing order.
    pub a: Vec<Vertex>,
    /// `B` in increasing order.
    pub b: Vec<Vertex>,
    /// `rows[i]` holds the vertices of `B` forming a nice pair with `a[i]`.
    pub rows: Vec<VertexSet>,
    pub pair_count: usize,
}

impl NicePairMatrix {
    pub fn is_nice_pair(&self, a: Vertex, b: Vertex) -> bool {
        self.a
            .iter()
            .position(|&x| x == a)
            .is_some_and(|i| self.rows[i].contains(b))
    }

    /// Partners of `v` on the other side.
    pub fn partners(&self, v: Vertex) -> VertexSet {
        if let Some(i) = self.a.iter().position(|&x| x == v) {
            return self.rows[i];
        }
        self.a
            .iter()
            .zip(&self.rows)
            .filter(|(_, row)| row.contains(v))
            .map(|(&a, _)| a)
            .collect()
    }

    /// Largest number of partners of any vertex.
    pub fn max_partners(&self) -> usize {
        self.a
            .iter()
            .chain(&self.b)
            .map(|&v| self.partners(v).len())
            .max()
            .unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        self.pair_count == self.a.len() * self.b.len()
    }

    /// The same relation with the roles of `A` and `B` exchanged.
    pub fn transposed(&self) -> NicePairMatrix {
        let rows = self.b.iter().map(|&b| self.partners(b)).collect();
        NicePairMatrix {
            bipartition: Bipartition {
                a: self.bipartition.b,
                b: self.bipartition.a,
            },
            a: self.b.clone(),
            b: self.a.clone(),
            rows,
            pair_count: self.pair_count,
        }
    }
}

fn require_cubic_bipartite(g: &Graph) -> Result<Bipartition> {
    require_cubic(g)?;
    g.bipartition()
        .ok_or_else(|| Error::domain("graph is not bipartite"))
}

pub fn is_nice_pair(g: &Graph, a: Vertex, b: Vertex) -> bool {
    nice_check(g, g.closed_neighborhood(a).union(g.closed_neighborhood(b)))
}

pub fn nice_pair_matrix(g: &Graph) -> Result<NicePairMatrix> {
    let bipartition = require_cubic_bipartite(g)?;
    let a = bipartition.a.to_vec();
    let b = bipartition.b.to_vec();
    let rows: Vec<VertexSet> = a
        .iter()
        .map(|&x| b.iter().copied().filter(|&y| is_nice_pair(g, x, y)).collect())
        .collect();
    let pair_count = rows.iter().map(|r| r.len()).sum();
    Ok(NicePairMatrix {
        bipartition,
        a,
        b,
        rows,
        pair_count,
    })
}

/// A rectangle `A' × B'` of nice pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NicePairSet {
    pub a_side: VertexSet,
    pub b_side: VertexSet,
}

/// A nice pair set with both sides of size at least `k`, extended to a
/// maximal rectangle, or `None` when none exists (the search over
/// `k`-subsets of `A` is exhaustive).
pub fn find_nice_pair_set(g: &Graph, k: usize) -> Result<Option<NicePairSet>> {
    let m = nice_pair_matrix(g)?;
    Ok(pair_set_in(&m, k))
}

/// [`find_nice_pair_set`] on a precomputed matrix.
pub fn pair_set_in(m: &NicePairMatrix, k: usize) -> Option<NicePairSet> {
    pair_rectangle(m, k, k)
}

/// A nice pair set with at least `ka` vertices of `A` and `kb` of `B`,
/// extended to a maximal rectangle. Exhaustive over `ka`-subsets of `A`.
pub fn pair_rectangle(m: &NicePairMatrix, ka: usize, kb: usize) -> Option<NicePairSet> {
    if ka == 0 || kb == 0 {
        return Some(NicePairSet {
            a_side: VertexSet::EMPTY,
            b_side: VertexSet::EMPTY,
        });
    }
    fn rec(rows: &[VertexSet], start: usize, left: usize, common: VertexSet, kb: usize) -> Option<VertexSet> {
        if common.len() < kb {
            return None;
        }
        if left == 0 {
            return Some(common);
        }
        (start..rows.len()).find_map(|i| rec(rows, i + 1, left - 1, common.intersection(rows[i]), kb))
    }
    let full_b: VertexSet = m.b.iter().copied().collect();
    let b_side = rec(&m.rows, 0, ka, full_b, kb)?;
    let a_side = m
        .a
        .iter()
        .zip(&m.rows)
        .filter(|(_, r)| b_side.is_subset(**r))
        .map(|(&a, _)| a)
        .collect();
    Some(NicePairSet { a_side, b_side })
}

/// Every pair across the bipartition is nice.
pub fn all_pairs_nice(g: &Graph) -> Result<bool> {
    Ok(nice_pair_matrix(g)?.is_complete())
}

/// No nice pair set with nonempty sides has a side larger than 3, i.e.
/// every vertex has at most three nice partners.
pub fn pair_sets_bounded_by_three(m: &NicePairMatrix) -> bool {
    m.max_partners() <= 3
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::catalog;

    #[test]
    fn catalog_upsilon() {
        let up = |g: &Graph| nice_vertices(g, NiceMethod::Definition).unwrap().upsilon;
        assert_eq!(up(&catalog::k4()), 4);
        assert_eq!(up(&catalog::k33()), 0);
        assert_eq!(up(&catalog::prism()), 6);
        assert_eq!(up(&catalog::k33_triangle()), 6);
        assert_eq!(up(&catalog::petersen()), 10);
    }

    #[test]
    fn methods_agree_on_catalog() {
        for name in catalog::NAMES {
            let g = catalog::by_name(name).unwrap();
            let d = nice_vertices(&g, NiceMethod::Definition).unwrap();
            let b = nice_vertices(&g, NiceMethod::Barrier).unwrap();
            assert_eq!(d.nice, b.nice, "{name}");
        }
    }

    #[test]
    fn non_cubic_and_bridged_inputs() {
        let p = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(nice_vertices(&p, NiceMethod::Definition), Err(Error::Domain(_))));
        // two K4s with a subdivided edge, joined by a bridge 4-9
        let bridged = Graph::from_edges(
            10,
            [
                (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4),
                (5, 7), (5, 8), (6, 7), (6, 8), (7, 8), (5, 9), (6, 9), (4, 9),
            ],
        )
        .unwrap();
        assert!(bridged.is_cubic());
        assert!(matches!(nice_vertices(&bridged, NiceMethod::Barrier), Err(Error::Unsupported(_))));
        assert!(nice_vertices(&bridged, NiceMethod::Definition).is_ok());
    }

    #[test]
    fn k33_pairs() {
        let m = nice_pair_matrix(&catalog::k33()).unwrap();
        assert_eq!(m.pair_count, 9);
        assert!(all_pairs_nice(&catalog::k33()).unwrap());
        let set = find_nice_pair_set(&catalog::k33(), 3).unwrap().unwrap();
        assert_eq!((set.a_side.len(), set.b_side.len()), (3, 3));
        assert!(find_nice_pair_set(&catalog::k33(), 4).unwrap().is_none());
    }

    #[test]
    fn cube_pairs() {
        let m = nice_pair_matrix(&catalog::cube()).unwrap();
        assert_eq!(m.pair_count, 16);
        let set = find_nice_pair_set(&catalog::cube(), 4).unwrap().unwrap();
        assert_eq!((set.a_side.len(), set.b_side.len()), (4, 4));
    }

    #[test]
    fn rectangles_and_transpose() {
        let m = nice_pair_matrix(&catalog::cube()).unwrap();
        let t = m.transposed();
        assert_eq!(t.pair_count, 16);
        assert_eq!(t.transposed(), m);
        assert!(pair_rectangle(&m, 2, 4).is_some());
        assert!(pair_rectangle(&m, 3, 5).is_none());
    }

    #[test]
    fn non_bipartite_pairs_rejected() {
        assert!(matches!(nice_pair_matrix(&catalog::k4()), Err(Error::Domain(_))));
        assert!(matches!(all_pairs_nice(&catalog::prism()), Err(Error::Domain(_))));
    }

    #[test]
    fn isolating_barrier_for_non_nice_vertex() {
        let g = catalog::k33_triangle();
        for u in catalog::k33_triangle_non_nice() {
            let s = isolating_barrier(&g, u).unwrap();
            assert!(g.neighbors(u).is_subset(s));
        }
        assert!(isolating_barrier(&g, 0).is_none());
    }
}
