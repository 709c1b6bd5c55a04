//! Search for cubic graphs in which a minimum nontrivial barrier contains a
//! vertex that is not nice.
//!
//! Candidates are 3-connected, non-bipartite and not bicritical. Each hit is
//! re-checked against the definition of niceness and paired with a minimal
//! nontrivial barrier made of nice vertices, whose existence is expected for
//! every candidate.

use serde::Serialize;

use crate::connectivity::connectivity_profile;
use crate::error::Result;
use crate::families::{catalog, splice};
use crate::graph::{Graph, VertexSet};
use crate::graph6::write_graph6;
use crate::nice::{is_nice_vertex, nice_vertices, NiceMethod};
use crate::structure::{barriers, classify, BarrierMode};
use crate::verify::load_corpus;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleHit {
    pub graph6: String,
    /// `true` for graphs built by splicing rather than enumerated.
    pub constructed: bool,
    /// A minimum-size nontrivial barrier.
    pub barrier: VertexSet,
    /// Its vertices that are not nice.
    pub non_nice: VertexSet,
    /// A minimal nontrivial barrier made only of nice vertices.
    pub nice_barrier: Option<VertexSet>,
}

/// Inspects one graph; `None` when it is not a candidate or not a hit.
pub fn inspect(g: &Graph, constructed: bool) -> Result<Option<CounterexampleHit>> {
    let p = connectivity_profile(g);
    if !p.three_connected || p.bipartite() || classify(g)?.bicritical {
        return Ok(None);
    }
    let nice = nice_vertices(g, NiceMethod::Definition)?.nice;
    let minimal = barriers(g, BarrierMode::MinimalNontrivial)?;
    let smallest = minimal.iter().map(|b| b.s.len()).min().unwrap_or(0);
    let Some(hit) = minimal
        .iter()
        .find(|b| b.s.len() == smallest && !b.s.is_subset(nice))
    else {
        return Ok(None);
    };
    // re-check each flagged vertex directly
    let non_nice: VertexSet = hit.s.iter().filter(|&u| !is_nice_vertex(g, u)).collect();
    if non_nice.is_empty() {
        return Ok(None);
    }
    Ok(Some(CounterexampleHit {
        graph6: write_graph6(g)?,
        constructed,
        barrier: hit.s,
        non_nice,
        nice_barrier: minimal.iter().map(|b| b.s).find(|s| s.is_subset(nice)),
    }))
}

/// Graphs made by splicing bricks or 3-connected bipartite guests into the
/// non-nice vertices of `K33△`, in a fixed order.
pub fn constructed_candidates() -> Result<Vec<Graph>> {
    let base = catalog::k33_triangle();
    let [u, v] = <[usize; 2]>::try_from(catalog::k33_triangle_non_nice())
        .expect("K33△ has two non-nice vertices");
    let guests = [catalog::k4(), catalog::prism(), catalog::k33(), catalog::cube()];
    let id = [0, 1, 2];
    let mut out = Vec::new();
    for g1 in &guests {
        let once = splice(&base, u, g1, 0, &id)?;
        out.push(once.graph.clone());
        let v2 = once.from_host[v].expect("v survives the first splice");
        for g2 in &guests {
            out.push(splice(&once.graph, v2, g2, 0, &id)?.graph);
        }
    }
    Ok(out)
}

/// Hits over the connected corpus up to `max_n`, then over the spliced
/// constructions when asked.
pub fn search_barrier_counterexample(max_n: usize, include_constructed: bool) -> Result<Vec<CounterexampleHit>> {
    let mut hits = Vec::new();
    for e in load_corpus(max_n)? {
        hits.extend(inspect(&e.graph, false)?);
    }
    if include_constructed {
        for g in constructed_candidates()? {
            hits.extend(inspect(&g, true)?);
        }
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k33_triangle_is_not_a_hit() {
        assert!(inspect(&catalog::k33_triangle(), false).unwrap().is_none());
    }

    #[test]
    fn hits_keep_a_nice_barrier() {
        for h in search_barrier_counterexample(12, true).unwrap() {
            let g = crate::graph6::parse_graph6(&h.graph6).unwrap();
            assert!(h.non_nice.iter().all(|u| !is_nice_vertex(&g, u)));
            let s = h.nice_barrier.expect("a minimal barrier of nice vertices");
            assert!(s.iter().all(|u| is_nice_vertex(&g, u)));
        }
    }

    #[test]
    fn constructions_are_cubic() {
        let c = constructed_candidates().unwrap();
        assert_eq!(c.len(), 20);
        assert!(c.iter().all(Graph::is_cubic));
    }
}
