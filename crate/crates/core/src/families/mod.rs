//! Splicing, ladder chains, and the extremal families built from them.
//!
//! Conventions used throughout:
//! - `L_n` has top vertices `t_i = 2i` and bottom vertices `b_i = 2i + 1`
//!   for `i = 0..=n`, rungs `t_i b_i` and rails `t_i t_{i+1}`, `b_i b_{i+1}`.
//!   Its two end rungs are the edges whose ends both have degree 2.
//! - A diamond block is `L_n` edge-spliced with a cubic bipartite host at the
//!   rung `(t_0, b_0)`; its only remaining degree-2 edge is `(t_n, b_n)`.
//! - An `F` member starts from `K4` and replaces up to six of its edges by
//!   diamond blocks; `G1`/`G2` members splice 3-connected cubic bipartite
//!   guests into the non-nice vertices of `K33△`; `T` members grow from
//!   `K33` by attaching ladders that end in a copy of `K33`.

pub mod catalog;
mod recognize;

use serde::{Deserialize, Serialize};

use crate::connectivity::connectivity_profile;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::graph6::{parse_graph6, write_graph6};

pub use recognize::{decompose_diamond, recognize_family, DiamondParts, FamilyKind, FamilyMembership};

/// Output of [`splice`] and [`edge_splice`]: the new graph plus where each
/// input vertex went (`None` for consumed vertices).
#[derive(Clone, Debug)]
pub struct Spliced {
    pub graph: Graph,
    pub from_host: Vec<Option<Vertex>>,
    pub from_guest: Vec<Option<Vertex>>,
}

/// `(G1 ⊙ G2)_{u,v,φ}`. `phi[i]` is the position in `g2.incident(v)` joined
/// to `g1.incident(u)[i]`. Vertices of `g1 - u` come first in their order,
/// then those of `g2 - v`.
pub fn splice(g1: &Graph, u: Vertex, g2: &Graph, v: Vertex, phi: &[usize]) -> Result<Spliced> {
    if u >= g1.n() {
        return Err(Error::InvalidVertex(u));
    }
    if v >= g2.n() {
        return Err(Error::InvalidVertex(v));
    }
    let (du, dv) = (g1.degree(u), g2.degree(v));
    if du != dv {
        return Err(Error::SpliceDegreeMismatch { host: du, guest: dv });
    }
    let mut seen = vec![false; dv];
    if phi.len() != du || phi.iter().any(|&j| j >= dv || std::mem::replace(&mut seen[j], true)) {
        return Err(Error::InvalidSpec(format!("phi {phi:?} is not a bijection of {du} edges")));
    }
    let n1 = g1.n() - 1;
    let from_host: Vec<Option<Vertex>> =
        (0..g1.n()).map(|w| (w != u).then(|| w - usize::from(w > u))).collect();
    let from_guest: Vec<Option<Vertex>> =
        (0..g2.n()).map(|x| (x != v).then(|| n1 + x - usize::from(x > v))).collect();
    let mut g = Graph::empty(n1 + g2.n() - 1)?;
    for &(a, b) in g1.edges() {
        if a != u && b != u {
            g.add_edge(from_host[a].unwrap(), from_host[b].unwrap())?;
        }
    }
    for &(a, b) in g2.edges() {
        if a != v && b != v {
            g.add_edge(from_guest[a].unwrap(), from_guest[b].unwrap())?;
        }
    }
    for (i, &e) in g1.incident(u).iter().enumerate() {
        let a = g1.other_end(e, u);
        let b = g2.other_end(g2.incident(v)[phi[i]], v);
        g.add_edge(from_host[a].unwrap(), from_guest[b].unwrap())?;
    }
    Ok(Spliced {
        graph: g,
        from_host,
        from_guest,
    })
}

/// `(G1 ⊕ G2)_{e1,e2}` with `e1 = x1x2`, `e2 = y1y2`: one copy of each edge
/// is removed and `y_i` is identified with `x_i`. `g1` keeps its ids; the
/// other vertices of `g2` follow in order.
pub fn edge_splice(g1: &Graph, e1: (Vertex, Vertex), g2: &Graph, e2: (Vertex, Vertex)) -> Result<Spliced> {
    let (x1, x2) = e1;
    let (y1, y2) = e2;
    let id1 = g1
        .edge_id(x1, x2)
        .ok_or_else(|| Error::InvalidSpec(format!("({x1}, {x2}) is not an edge of the first graph")))?;
    let id2 = g2
        .edge_id(y1, y2)
        .ok_or_else(|| Error::InvalidSpec(format!("({y1}, {y2}) is not an edge of the second graph")))?;
    let n1 = g1.n();
    let mut next = n1;
    let from_guest: Vec<Option<Vertex>> = (0..g2.n())
        .map(|w| {
            Some(if w == y1 {
                x1
            } else if w == y2 {
                x2
            } else {
                next += 1;
                next - 1
            })
        })
        .collect();
    let mut g = Graph::empty(n1 + g2.n() - 2)?;
    for (i, &(a, b)) in g1.edges().iter().enumerate() {
        if i != id1 {
            g.add_edge(a, b)?;
        }
    }
    for (i, &(a, b)) in g2.edges().iter().enumerate() {
        if i != id2 {
            g.add_edge(from_guest[a].unwrap(), from_guest[b].unwrap())?;
        }
    }
    Ok(Spliced {
        graph: g,
        from_host: (0..n1).map(Some).collect(),
        from_guest,
    })
}

/// The ladder `L_n` with `n` quadrangles.
pub fn linear_chain(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::domain("a chain needs at least one quadrangle"));
    }
    let mut g = Graph::empty(2 * n + 2)?;
    for i in 0..=n {
        g.add_edge(2 * i, 2 * i + 1)?;
        if i < n {
            g.add_edge(2 * i, 2 * i + 2)?;
            g.add_edge(2 * i + 1, 2 * i + 3)?;
        }
    }
    Ok(g)
}

/// Edges whose two ends both have degree 2.
pub fn degree_two_edges(g: &Graph) -> Vec<(Vertex, Vertex)> {
    g.edges()
        .iter()
        .copied()
        .filter(|&(a, b)| g.degree(a) == 2 && g.degree(b) == 2)
        .collect()
}

/// A graph given by catalog name or as graph6.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HostRef {
    Name(String),
    Graph6 { graph6: String },
}

impl HostRef {
    pub fn resolve(&self) -> Result<Graph> {
        match self {
            HostRef::Name(name) => {
                catalog::by_name(name).ok_or_else(|| Error::InvalidSpec(format!("unknown graph name `{name}`")))
            }
            HostRef::Graph6 { graph6 } => parse_graph6(graph6),
        }
    }

    pub fn from_graph(g: &Graph) -> Result<Self> {
        Ok(HostRef::Graph6 {
            graph6: write_graph6(g)?,
        })
    }
}

/// `L_chain ⊕ host` at the rung `(t_0, b_0)` and `host_edge`, with
/// `t_0 = host_edge[0]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiamondSpec {
    pub chain: usize,
    pub host: HostRef,
    pub host_edge: [Vertex; 2],
}

/// One replaced edge of `K4`: `edge[0]` is joined to `t_n`, `edge[1]` to `b_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FBlock {
    pub edge: [Vertex; 2],
    #[serde(flatten)]
    pub diamond: DiamondSpec,
}

/// One guest spliced into `K33△` at `attach`. `phi` pairs a neighbour of
/// `attach` (in `K33△` labels) with a neighbour of `guest_vertex`; when
/// absent, neighbours are paired in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GBlock {
    pub attach: Vertex,
    pub guest: HostRef,
    pub guest_vertex: Vertex,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<[Vertex; 2]>>,
}

/// One growth step of `T`: the ladder `L_chain` ending in a fresh `K33` is
/// attached at `edge` of the current graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TStep {
    pub chain: usize,
    pub edge: [Vertex; 2],
}

/// A reproducible family member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum FamilySpec {
    /// `K4` with `blocks.len()` edges replaced (none gives `K4`).
    F { blocks: Vec<FBlock> },
    /// `K33△` with one guest.
    G1 { blocks: Vec<GBlock> },
    /// `K33△` with two guests.
    G2 { blocks: Vec<GBlock> },
    /// `K33` grown by `steps`.
    T { steps: Vec<TStep> },
    #[serde(rename = "Hdiamond")]
    HDiamond(DiamondSpec),
    /// A named catalog graph.
    Catalog { name: String },
}

/// A built family member. `base[i]` is where vertex `i` of the starting
/// graph (`K4`, `K33△` or `K33`) ended up.
#[derive(Clone, Debug)]
pub struct BuiltFamily {
    pub graph: Graph,
    pub spec: FamilySpec,
    pub base: Vec<Option<Vertex>>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidSpec(msg.into())
}

/// `L_chain ⊕ host`; the free end rung is `(2 chain, 2 chain + 1)`.
pub fn build_diamond(spec: &DiamondSpec) -> Result<Graph> {
    let host = spec.host.resolve()?;
    if !host.is_cubic() || !host.is_simple() || !host.is_bipartite() {
        return Err(invalid("diamond host must be a simple cubic bipartite graph"));
    }
    let [p, q] = spec.host_edge;
    if p >= host.n() || q >= host.n() || !host.has_edge(p, q) {
        return Err(invalid(format!("host edge ({p}, {q}) is not an edge")));
    }
    let chain = linear_chain(spec.chain).map_err(|_| invalid("chain length must be at least 1"))?;
    Ok(edge_splice(&chain, (0, 1), &host, (p, q))?.graph)
}

/// Builds the member described by `spec`.
pub fn build_family(spec: &FamilySpec) -> Result<BuiltFamily> {
    match spec {
        FamilySpec::F { blocks } => build_f(spec, blocks),
        FamilySpec::G1 { blocks } => {
            if blocks.len() != 1 {
                return Err(invalid("G1 takes exactly one guest"));
            }
            build_g(spec, blocks)
        }
        FamilySpec::G2 { blocks } => {
            if blocks.len() != 2 {
                return Err(invalid("G2 takes exactly two guests"));
            }
            build_g(spec, blocks)
        }
        FamilySpec::T { steps } => build_t(spec, steps),
        FamilySpec::HDiamond(d) => Ok(BuiltFamily {
            graph: build_diamond(d)?,
            spec: spec.clone(),
            base: Vec::new(),
        }),
        FamilySpec::Catalog { name } => {
            let graph = catalog::by_name(name).ok_or_else(|| invalid(format!("unknown graph name `{name}`")))?;
            let base = (0..graph.n()).map(Some).collect();
            Ok(BuiltFamily {
                graph,
                spec: spec.clone(),
                base,
            })
        }
    }
}

fn build_f(spec: &FamilySpec, blocks: &[FBlock]) -> Result<BuiltFamily> {
    if blocks.len() > 6 {
        return Err(invalid("K4 has only six edges to replace"));
    }
    let mut used = Vec::new();
    let mut g = catalog::k4();
    for block in blocks {
        let [y1, y2] = block.edge;
        if y1 >= 4 || y2 >= 4 || y1 == y2 {
            return Err(invalid(format!("({y1}, {y2}) is not an edge of K4")));
        }
        let key = (y1.min(y2), y1.max(y2));
        if used.contains(&key) {
            return Err(invalid(format!("K4 edge {key:?} replaced twice")));
        }
        used.push(key);
        let d = build_diamond(&block.diamond)?;
        let n = block.diamond.chain;
        // K4 ids survive edge splicing unchanged
        g = edge_splice(&g, (y1, y2), &d, (2 * n, 2 * n + 1))?.graph;
    }
    Ok(BuiltFamily {
        graph: g,
        spec: spec.clone(),
        base: (0..4).map(Some).collect(),
    })
}

fn build_g(spec: &FamilySpec, blocks: &[GBlock]) -> Result<BuiltFamily> {
    let base_graph = catalog::k33_triangle();
    let non_nice = catalog::k33_triangle_non_nice();
    let mut g = base_graph.clone();
    let mut base: Vec<Option<Vertex>> = (0..g.n()).map(Some).collect();
    for block in blocks {
        let u0 = block.attach;
        if !non_nice.contains(&u0) {
            return Err(invalid(format!("attachment vertex {u0} of K33△ is nice")));
        }
        let u = base
            .get(u0)
            .copied()
            .flatten()
            .ok_or_else(|| invalid(format!("attachment vertex {u0} already used")))?;
        let guest = block.guest.resolve()?;
        let p = connectivity_profile(&guest);
        if !(guest.is_simple() && p.cubic && p.three_connected && p.bipartite()) {
            return Err(invalid("guest must be a 3-connected simple cubic bipartite graph"));
        }
        let v = block.guest_vertex;
        if v >= guest.n() {
            return Err(invalid(format!("guest vertex {v} out of range")));
        }
        let phi = match &block.phi {
            None => {
                let mut hi: Vec<usize> = (0..g.degree(u)).collect();
                hi.sort_by_key(|&i| g.other_end(g.incident(u)[i], u));
                let mut gj: Vec<usize> = (0..guest.degree(v)).collect();
                gj.sort_by_key(|&j| guest.other_end(guest.incident(v)[j], v));
                let mut phi = vec![usize::MAX; hi.len()];
                for (&i, &j) in hi.iter().zip(&gj) {
                    phi[i] = j;
                }
                phi
            }
            Some(pairs) => {
                let mut phi = vec![usize::MAX; g.degree(u)];
                for &[k, w] in pairs {
                    let host_nb = base.get(k).copied().flatten();
                    let i = g
                        .incident(u)
                        .iter()
                        .position(|&e| Some(g.other_end(e, u)) == host_nb)
                        .ok_or_else(|| invalid(format!("{k} is not a neighbour of {u0} in K33△")))?;
                    let j = guest
                        .incident(v)
                        .iter()
                        .position(|&e| guest.other_end(e, v) == w)
                        .ok_or_else(|| invalid(format!("{w} is not a neighbour of guest vertex {v}")))?;
                    phi[i] = j;
                }
                phi
            }
        };
        let s = splice(&g, u, &guest, v, &phi)?;
        for slot in base.iter_mut() {
            *slot = slot.and_then(|x| s.from_host[x]);
        }
        g = s.graph;
    }
    Ok(BuiltFamily {
        graph: g,
        spec: spec.clone(),
        base,
    })
}

fn build_t(spec: &FamilySpec, steps: &[TStep]) -> Result<BuiltFamily> {
    let mut g = catalog::k33();
    for step in steps {
        let [p, q] = step.edge;
        if p >= g.n() || q >= g.n() || !g.has_edge(p, q) {
            return Err(invalid(format!("({p}, {q}) is not an edge of the current graph")));
        }
        let n = step.chain;
        // both end rungs of the chain are used, and they are disjoint for every n
        let tail = build_diamond(&DiamondSpec {
            chain: n,
            host: HostRef::Name("K33".into()),
            host_edge: [0, 3],
        })?;
        g = edge_splice(&g, (p, q), &tail, (2 * n, 2 * n + 1))?.graph;
    }
    Ok(BuiltFamily {
        graph: g,
        spec: spec.clone(),
        base: (0..6).map(Some).collect(),
    })
}

impl FamilySpec {
    /// Short label for reports.
    pub fn label(&self) -> String {
        match self {
            FamilySpec::F { blocks } if blocks.is_empty() => "K4".into(),
            FamilySpec::F { blocks } => format!("F{}", blocks.len()),
            FamilySpec::G1 { .. } => "G1".into(),
            FamilySpec::G2 { .. } => "G2".into(),
            FamilySpec::T { .. } => "T".into(),
            FamilySpec::HDiamond(_) => "Hdiamond".into(),
            FamilySpec::Catalog { name } => name.clone(),
        }
    }
}

/// Number of vertices of `L_n ⊕ host`.
pub fn diamond_order(chain: usize, host_order: usize) -> usize {
    2 * chain + host_order
}
