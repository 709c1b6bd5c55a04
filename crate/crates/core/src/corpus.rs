//! Enumeration of cubic graphs up to isomorphism.
//!
//! Connected loopless cubic multigraphs are built from the theta graph by
//! two operations: edge insertion (subdivide two edges, or one edge twice,
//! and join the two new vertices) and bridging (subdivide one edge in each
//! of two smaller graphs and join the new vertices). Together they reach
//! every connected loopless cubic multigraph; the simple ones form the
//! corpus. Duplicates are removed by fingerprint bucketing followed
//! by an isomorphism test, so every entry is a distinct isomorphism class.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{parse_graph6_lines, write_graph6};
use crate::iso::{fingerprint, is_isomorphic};

/// Largest order accepted by [`enumerate_cubic`].
pub const MAX_ORDER: usize = 16;

/// Environment variable naming the on-disk corpus cache directory.
pub const CACHE_ENV: &str = "NICECUBIC_CACHE_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Enumerated,
    File,
    Constructed,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusEntry {
    #[serde(skip)]
    pub graph: Graph,
    /// graph6 of the stored representative.
    pub id: String,
    pub provenance: Provenance,
}

impl CorpusEntry {
    pub fn new(graph: Graph, provenance: Provenance) -> Result<Self> {
        let id = write_graph6(&graph)?;
        Ok(CorpusEntry { graph, id, provenance })
    }
}

fn theta() -> Graph {
    Graph::from_edges(2, [(0, 1), (0, 1), (0, 1)]).expect("valid")
}

/// Every edge insertion into `g`, in a fixed order.
fn insertions(g: &Graph) -> Vec<Graph> {
    let n = g.n();
    let (x, y) = (n, n + 1);
    let m = g.m();
    let mut out = Vec::with_capacity(m * (m + 1) / 2);
    for i in 0..m {
        for j in i..m {
            let mut edges: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i && k != j)
                .map(|(_, &e)| e)
                .collect();
            let (a, b) = g.edge(i);
            if i == j {
                edges.extend([(a, x), (x, y), (x, y), (y, b)]);
            } else {
                let (c, d) = g.edge(j);
                edges.extend([(a, x), (x, b), (c, y), (y, d), (x, y)]);
            }
            out.push(Graph::from_edges(n + 2, edges).expect("insertion keeps ids valid"));
        }
    }
    out
}

/// Every bridge between a subdivided edge of `g1` and one of `g2`.
fn bridgings(g1: &Graph, g2: &Graph) -> Vec<Graph> {
    let (n1, n2) = (g1.n(), g2.n());
    let (x, y) = (n1 + n2, n1 + n2 + 1);
    let mut out = Vec::with_capacity(g1.m() * g2.m());
    for i in 0..g1.m() {
        for j in 0..g2.m() {
            let mut edges: Vec<(usize, usize)> = Vec::with_capacity(g1.m() + g2.m() + 3);
            edges.extend(g1.edges().iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &e)| e));
            edges.extend(
                g2.edges()
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, &(a, b))| (a + n1, b + n1)),
            );
            let (a, b) = g1.edge(i);
            let (c, d) = g2.edge(j);
            edges.extend([(a, x), (x, b), (c + n1, y), (y, d + n1), (x, y)]);
            out.push(Graph::from_edges(n1 + n2 + 2, edges).expect("bridging keeps ids valid"));
        }
    }
    out
}

/// Keeps the first member of every isomorphism class, in input order.
pub fn dedupe(graphs: Vec<Graph>) -> Vec<Graph> {
    let prints: Vec<u64> = graphs.par_iter().map(fingerprint).collect();
    let mut buckets: HashMap<u64, Vec<usize>> = HashMap::new();
    let mut kept: Vec<Graph> = Vec::new();
    for (g, fp) in graphs.into_iter().zip(prints) {
        let bucket = buckets.entry(fp).or_default();
        if bucket.iter().any(|&k| is_isomorphic(&kept[k], &g).is_some()) {
            continue;
        }
        bucket.push(kept.len());
        kept.push(g);
    }
    kept
}

type Level = Arc<Vec<Graph>>;

fn multigraph_levels() -> &'static Mutex<Vec<Level>> {
    static LEVELS: OnceLock<Mutex<Vec<Level>>> = OnceLock::new();
    LEVELS.get_or_init(|| Mutex::new(vec![Arc::new(vec![theta()])]))
}

/// All connected loopless cubic multigraphs on `n` vertices (`n` even, at
/// least 2), memoised per process.
pub fn connected_multigraphs(n: usize) -> Level {
    assert!(n >= 2 && n.is_multiple_of(2));
    let idx = n / 2 - 1;
    let mut levels = multigraph_levels().lock().expect("level cache poisoned");
    while levels.len() <= idx {
        let prev = levels.last().expect("seeded").clone();
        let mut candidates: Vec<Graph> = prev.par_iter().flat_map_iter(insertions).collect();
        // levels[k] has order 2k + 2; bridging levels i <= j lands at i + j + 2
        let target = levels.len();
        for i in 0..target.saturating_sub(1) {
            let j = target - 2 - i;
            if i > j {
                break;
            }
            let (l1, l2) = (levels[i].clone(), levels[j].clone());
            let joined: Vec<Graph> = l1
                .par_iter()
                .flat_map_iter(|g1| l2.iter().flat_map(|g2| bridgings(g1, g2)).collect::<Vec<_>>())
                .collect();
            candidates.extend(joined);
        }
        levels.push(Arc::new(dedupe(candidates)));
    }
    levels[idx].clone()
}

fn connected_simple(n: usize) -> Vec<Graph> {
    let mut out: Vec<Graph> = connected_multigraphs(n)
        .iter()
        .filter(|g| g.is_simple())
        .cloned()
        .collect();
    sort_by_id(&mut out);
    out
}

fn sort_by_id(graphs: &mut [Graph]) {
    graphs.sort_by_cached_key(|g| write_graph6(g).expect("simple"));
}

/// All cubic simple graphs on `n` vertices up to isomorphism, sorted by
/// id. Disconnected graphs are assembled from connected components.
pub fn enumerate_cubic(n: usize, connected_only: bool) -> Result<Vec<CorpusEntry>> {
    if n % 2 == 1 {
        return Err(Error::domain(format!("no cubic graph has odd order {n}")));
    }
    if n > MAX_ORDER {
        return Err(Error::domain(format!("order {n} exceeds the enumeration cap {MAX_ORDER}")));
    }
    if n < 4 {
        return Ok(Vec::new());
    }
    let mut graphs = if connected_only {
        connected_simple(n)
    } else {
        let mut out = Vec::new();
        let parts = |k: usize| if k >= 4 { connected_simple(k) } else { Vec::new() };
        // components in non-increasing (order, index) to list each multiset once
        fn rec(
            left: usize,
            max_key: (usize, usize),
            parts: &dyn Fn(usize) -> Vec<Graph>,
            acc: &mut Vec<Graph>,
            out: &mut Vec<Graph>,
        ) {
            if left == 0 {
                out.push(disjoint_union(acc));
                return;
            }
            for k in (4..=left.min(max_key.0)).rev().step_by(2) {
                let comps = parts(k);
                let top = if k == max_key.0 { max_key.1.min(comps.len()) } else { comps.len() };
                for idx in (0..top).rev() {
                    acc.push(comps[idx].clone());
                    rec(left - k, (k, idx + 1), parts, acc, out);
                    acc.pop();
                }
            }
        }
        rec(n, (n, usize::MAX), &parts, &mut Vec::new(), &mut out);
        out
    };
    sort_by_id(&mut graphs);
    graphs
        .into_iter()
        .map(|g| CorpusEntry::new(g, Provenance::Enumerated))
        .collect()
}

fn disjoint_union(parts: &[Graph]) -> Graph {
    let n: usize = parts.iter().map(|g| g.n()).sum();
    let mut g = Graph::empty(n).expect("corpus orders are small");
    let mut offset = 0;
    for p in parts {
        for &(a, b) in p.edges() {
            g.add_edge(a + offset, b + offset).expect("valid");
        }
        offset += p.n();
    }
    g
}

/// Connected cubic bipartite graphs on `n` vertices.
pub fn enumerate_cubic_bipartite(n: usize) -> Result<Vec<CorpusEntry>> {
    Ok(enumerate_cubic(n, true)?
        .into_iter()
        .filter(|e| e.graph.is_bipartite())
        .collect())
}

/// Connected cubic graphs of every even order from 4 to `max_n`.
pub fn corpus_up_to(max_n: usize) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for n in (4..=max_n).step_by(2) {
        out.extend(enumerate_cubic(n, true)?);
    }
    Ok(out)
}

fn cache_file(dir: &Path, n: usize, connected_only: bool) -> PathBuf {
    let tag = if connected_only { "connected" } else { "all" };
    dir.join(format!("cubic_{n}_{tag}.g6"))
}

/// [`enumerate_cubic`] backed by a graph6 file per `(n, connected)` in
/// `dir`; the file is written on a miss and trusted on a hit.
pub fn enumerate_cached(n: usize, connected_only: bool, dir: &Path) -> Result<Vec<CorpusEntry>> {
    let path = cache_file(dir, n, connected_only);
    if let Ok(text) = fs::read_to_string(&path) {
        let graphs = parse_graph6_lines(&text).map_err(|(line, e)| {
            Error::domain(format!("corrupt cache {} line {line}: {e}", path.display()))
        })?;
        return graphs
            .into_iter()
            .map(|g| CorpusEntry::new(g, Provenance::File))
            .collect();
    }
    let entries = enumerate_cubic(n, connected_only)?;
    fs::create_dir_all(dir)?;
    let body: String = entries.iter().map(|e| format!("{}\n", e.id)).collect();
    fs::write(&path, body)?;
    Ok(entries)
}

/// Cache directory from [`CACHE_ENV`], if set.
pub fn cache_dir_from_env() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).map(PathBuf::from)
}
