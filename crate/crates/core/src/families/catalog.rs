//! Fixed small graphs.

use crate::graph::{Graph, Vertex, VertexSet};
use crate::matching::nice_check;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).expect("catalog edge lists are valid")
}

pub fn k4() -> Graph {
    build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

/// Colour classes `{0, 1, 2}` and `{3, 4, 5}`.
pub fn k33() -> Graph {
    let edges: Vec<_> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
    build(6, &edges)
}

/// Complement of `C6`: triangles `{0, 1, 2}`, `{3, 4, 5}` and rungs `i, i + 3`.
pub fn prism() -> Graph {
    build(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
}

/// The prism with vertex 0 blown up into the triangle `{0, 6, 7}`.
pub fn r8() -> Graph {
    build(
        8,
        &[
            (0, 6), (0, 7), (6, 7), (0, 1), (6, 2), (7, 3),
            (1, 2), (3, 4), (3, 5), (4, 5), (1, 4), (2, 5),
        ],
    )
}

/// `K33` with vertex 0 blown up into the triangle `{0, 6, 7}`; the
/// remaining colour class is `{1, 2}` versus `{3, 4, 5}`.
pub fn k33_triangle() -> Graph {
    build(
        8,
        &[
            (0, 6), (0, 7), (6, 7), (0, 3), (6, 4), (7, 5),
            (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5),
        ],
    )
}

/// The 3-cube, the only connected cubic bipartite graph on 8 vertices.
pub fn cube() -> Graph {
    let mut edges = Vec::new();
    for v in 0..8usize {
        for bit in [1, 2, 4] {
            if v & bit == 0 {
                edges.push((v, v | bit));
            }
        }
    }
    build(8, &edges)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &edges)
}

/// Vertices of `K33△` whose closed neighbourhood is not a nice subgraph.
pub fn k33_triangle_non_nice() -> Vec<Vertex> {
    let g = k33_triangle();
    (0..g.n())
        .filter(|&u| !nice_check(&g, g.closed_neighborhood(u)))
        .collect()
}

/// Looks a catalog graph up by name (case-insensitive).
pub fn by_name(name: &str) -> Option<Graph> {
    let key: String = name.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_lowercase();
    Some(match key.as_str() {
        "k4" => k4(),
        "k33" => k33(),
        "prism" | "c6bar" | "complementc6" => prism(),
        "r8" => r8(),
        "k33triangle" | "k33t" => k33_triangle(),
        "h44" | "cube" | "q3" => cube(),
        "petersen" => petersen(),
        _ => return None,
    })
}

/// Names accepted by [`by_name`], one per graph.
pub const NAMES: [&str; 7] = ["K4", "K33", "prism", "R8", "K33triangle", "H44", "petersen"];

/// The triangle of `K33△`.
pub fn k33_triangle_triangle() -> VertexSet {
    [0, 6, 7].into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_graphs_are_cubic() {
        for name in NAMES {
            let g = by_name(name).unwrap();
            assert!(g.is_cubic() && g.is_simple() && g.is_connected(), "{name}");
        }
    }

    #[test]
    fn bipartite_members() {
        assert!(k33().is_bipartite());
        assert!(cube().is_bipartite());
        assert!(!prism().is_bipartite());
        assert!(!k33_triangle().is_bipartite());
    }

    #[test]
    fn k33_triangle_has_two_non_nice_vertices() {
        assert_eq!(k33_triangle_non_nice(), vec![1, 2]);
    }
}
