//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{adj, full, has_pm, nice_vertex};
use nicecubic::corpus::{corpus_up_to, enumerate_cubic};
use nicecubic::families::{
    build_family, catalog, DiamondSpec, FBlock, FamilyKind, FamilySpec, GBlock, HostRef, TStep,
};
use nicecubic::graph6::parse_graph6;
use nicecubic::nice::is_nice_vertex;
use nicecubic::verify::verify_suite;
use nicecubic::*;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn upsilon(g: &Graph) -> usize {
    nice_vertices(g, NiceMethod::Definition).unwrap().upsilon
}

fn catalog_exactness() -> Outcome {
    let k4 = upsilon(&catalog::k4());
    let prism = upsilon(&catalog::prism());
    let t = catalog::k33_triangle();
    let non_nice: Vec<usize> = (0..t.n()).filter(|&u| !is_nice_vertex(&t, u)).collect();
    let k33_pairs = nice_pair_matrix(&catalog::k33()).unwrap().pair_count;
    let h44 = nice_pair_matrix(&catalog::cube()).unwrap();
    ensure(k4 == 4, || format!("Υ(K4) = {k4}"))?;
    ensure(prism == 6, || format!("Υ(C6bar) = {prism}"))?;
    ensure(upsilon(&t) == 6 && non_nice.len() == 2, || format!("K33△ non-nice {non_nice:?}"))?;
    ensure(k33_pairs == 9, || format!("K33 has {k33_pairs} nice pairs"))?;
    ensure(h44.pair_count == 16 && h44.is_complete(), || format!("H44 has {} nice pairs", h44.pair_count))?;
    Ok("Υ = 4, 6, 6; K33△ has 2 non-nice vertices; K33 9 pairs; H44 16 pairs".into())
}

fn splicing_identities() -> Outcome {
    let cases = [
        ("K4 ⊙ K4", catalog::k4(), catalog::k4(), catalog::prism()),
        ("C6bar ⊙ K4", catalog::prism(), catalog::k4(), catalog::r8()),
        ("K33 ⊙ K4", catalog::k33(), catalog::k4(), catalog::k33_triangle()),
    ];
    let phis = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut checked = 0;
    for (name, g1, g2, want) in &cases {
        for phi in &phis {
            let s = splice(g1, 0, g2, 0, phi).map_err(|e| format!("{name}: {e}"))?;
            ensure(is_isomorphic(&s.graph, want).is_some(), || format!("{name} with phi {phi:?}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} splices matched"))
}

fn run_suites(names: &[&str], max_n: usize) -> std::result::Result<Vec<String>, String> {
    let mut lines = Vec::new();
    for name in names {
        let r = verify_suite(name, max_n).map_err(|e| format!("{name}: {e}"))?;
        if !r.passed() {
            return Err(format!("{name}: {} violations, first {:?}", r.violations.len(), r.violations[0]));
        }
        lines.push(format!("{name} {}/{}", r.applicable, r.graphs_checked));
    }
    Ok(lines)
}

fn nice_vertex_bounds() -> Outcome {
    // connected cubic graphs on 4, 6, ..., 12 vertices, as published
    const PUBLISHED: [usize; 5] = [1, 2, 5, 19, 85];
    for (i, &want) in PUBLISHED.iter().enumerate() {
        let n = 4 + 2 * i;
        let got = enumerate_cubic(n, true).map_err(|e| e.to_string())?.len();
        ensure(got == want, || format!("{got} connected cubic graphs on {n} vertices, expected {want}"))?;
    }
    // independent count of nice vertices
    for e in corpus_up_to(12).map_err(|e| e.to_string())? {
        let g = &e.graph;
        let p = connectivity_profile(g);
        if !p.two_connected || p.bipartite() {
            continue;
        }
        let a = adj(g);
        let count = (0..g.n()).filter(|&u| nice_vertex(&a, u)).count();
        let floor = if p.three_connected && g.n() > 4 { 6 } else { 4 };
        ensure(count >= floor, || format!("{}: {count} nice vertices", e.id))?;
    }
    Ok(run_suites(&["nice-vertex-bounds"], 12)?.join(", ") + "; corpus sizes 1, 2, 5, 19, 85")
}

fn bipartite_pairs() -> Outcome {
    let lines = run_suites(
        &["nice-pair-sets", "nine-nice-pairs", "brace-all-pairs-nice", "three-connected-pair-sets"],
        12,
    )?;
    let r = verify_suite("nine-nice-pairs", 12).map_err(|e| e.to_string())?;
    let equal: Vec<&String> = r.observations.iter().filter(|o| o.contains("exactly 9")).collect();
    ensure(equal.len() == 1, || format!("equality cases {equal:?}"))?;
    let id = equal[0].split(':').next().unwrap();
    let g = parse_graph6(id).map_err(|e| e.to_string())?;
    ensure(is_isomorphic(&g, &catalog::k33()).is_some(), || format!("equality at {id}"))?;
    Ok(lines.join(", ") + "; equality only at K33")
}

fn criteria_equivalence() -> Outcome {
    Ok(run_suites(&["criteria-equivalence"], 10)?.join(", "))
}

fn structure_suites() -> Outcome {
    let lines = run_suites(
        &[
            "tutte-cross-check",
            "two-connected-matching-covered",
            "bicritical-all-nice",
            "barrier-properties",
            "tight-cuts-are-3-cuts",
            "three-cuts-are-matchings",
            "bipartite-tight-criterion",
            "brick-brace-dichotomy",
            "brace-four-deletion",
            "barrier-component-structure",
            "nice-barrier-exists",
        ],
        10,
    )?;
    Ok(lines.join(", "))
}

fn lifting_suites() -> Outcome {
    let names = ["tight-cut-lifting", "two-cut-transfer", "pair-lifting", "non-brace-contraction"];
    let lines = run_suites(&names, 12)?;
    for name in names {
        let r = verify_suite(name, 12).map_err(|e| e.to_string())?;
        ensure(r.applicable > 0, || format!("{name}: hypotheses never met"))?;
    }
    Ok(lines.join(", "))
}

/// 3-connected cubic bipartite graphs up to `max_n` vertices.
fn hhat(max_n: usize) -> Vec<Graph> {
    corpus_up_to(max_n)
        .unwrap()
        .into_iter()
        .map(|e| e.graph)
        .filter(|g| g.is_bipartite() && connectivity_profile(g).three_connected)
        .collect()
}

fn host(g: &Graph) -> HostRef {
    HostRef::from_graph(g).unwrap()
}

fn diamond(chain: usize, h: &Graph, e: usize) -> DiamondSpec {
    let (p, q) = h.edge(e % h.m());
    DiamondSpec {
        chain,
        host: host(h),
        host_edge: [p, q],
    }
}

fn family_specs() -> Vec<(FamilySpec, FamilyKind)> {
    let hosts = hhat(12);
    let k33 = catalog::k33();
    let cube = catalog::cube();
    let mut specs = Vec::new();
    for h in &hosts {
        for chain in 1..=3 {
            for e in [0, 4] {
                if 2 * chain + h.n() <= 20 {
                    specs.push((FamilySpec::HDiamond(diamond(chain, h, e)), FamilyKind::HDiamond));
                }
            }
        }
    }
    let k4_edges = [[0, 1], [2, 3], [0, 2]];
    for h in &hosts {
        for chain in 1..=2 {
            if 2 * chain + h.n() + 2 <= 20 {
                let blocks = vec![FBlock { edge: k4_edges[0], diamond: diamond(chain, h, 1) }];
                specs.push((FamilySpec::F { blocks }, FamilyKind::F(1)));
            }
        }
    }
    for (a, b) in [(&k33, &k33), (&k33, &cube)] {
        for (e1, e2) in [(k4_edges[0], k4_edges[1]), (k4_edges[0], k4_edges[2])] {
            let blocks = vec![
                FBlock { edge: e1, diamond: diamond(1, a, 0) },
                FBlock { edge: e2, diamond: diamond(1, b, 2) },
            ];
            specs.push((FamilySpec::F { blocks }, FamilyKind::F(2)));
        }
    }
    // the smallest member with three blocks has 22 vertices
    let blocks = k4_edges
        .iter()
        .map(|&edge| FBlock { edge, diamond: diamond(1, &k33, 0) })
        .collect();
    specs.push((FamilySpec::F { blocks }, FamilyKind::F(3)));
    let [u, v] = <[usize; 2]>::try_from(catalog::k33_triangle_non_nice()).unwrap();
    for h in hosts.iter().filter(|h| h.n() + 6 <= 20) {
        for (attach, guest_vertex) in [(u, 0), (v, 1)] {
            let blocks = vec![GBlock { attach, guest: host(h), guest_vertex, phi: None }];
            specs.push((FamilySpec::G1 { blocks }, FamilyKind::G1));
        }
    }
    for (a, b) in [(&k33, &k33), (&k33, &cube), (&cube, &cube)] {
        let blocks = vec![
            GBlock { attach: u, guest: host(a), guest_vertex: 0, phi: None },
            GBlock { attach: v, guest: host(b), guest_vertex: 0, phi: None },
        ];
        specs.push((FamilySpec::G2 { blocks }, FamilyKind::G2));
    }
    for (c1, e1) in [(1, [0, 3]), (2, [0, 3]), (3, [0, 3])] {
        specs.push((FamilySpec::T { steps: vec![TStep { chain: c1, edge: e1 }] }, FamilyKind::T));
    }
    specs.push((
        FamilySpec::T { steps: vec![TStep { chain: 1, edge: [0, 3] }, TStep { chain: 1, edge: [1, 4] }] },
        FamilyKind::T,
    ));
    specs
}

fn family_round_trip() -> Outcome {
    let specs = family_specs();
    let mut over_20 = 0;
    for (spec, want) in &specs {
        let built = build_family(spec).map_err(|e| format!("{}: {e}", spec.label()))?;
        let g = &built.graph;
        over_20 += usize::from(g.n() > 20);
        let m = recognize_family(g).map_err(|e| format!("{}: {e}", spec.label()))?;
        let g6 = write_graph6(g).unwrap();
        ensure(m.family == *want, || format!("{g6}: built as {want}, recognized as {}", m.family))?;
        let witness = m.witness.as_ref().ok_or_else(|| format!("{g6}: no witness"))?;
        let rebuilt = build_family(witness).map_err(|e| format!("{g6}: witness {e}"))?;
        ensure(is_isomorphic(&rebuilt.graph, g).is_some(), || format!("{g6}: witness rebuilds another graph"))?;
        if g.is_cubic() && !g.is_bipartite() {
            let a = adj(g);
            let count = (0..g.n()).filter(|&u| has_pm(&a, full(g.n()) & !common::closed(&a, u))).count();
            ensure(count == upsilon(g), || format!("{g6}: Υ disagrees with brute force"))?;
        }
    }
    ensure(specs.len() >= 50, || format!("only {} members", specs.len()))?;
    Ok(format!("{} members recognized, {over_20} above 20 vertices", specs.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("catalog exactness", catalog_exactness),
        ("splicing identities", splicing_identities),
        ("nice vertex bounds, n <= 12", nice_vertex_bounds),
        ("bipartite nice pairs, n <= 12", bipartite_pairs),
        ("criterion equivalence, n <= 10", criteria_equivalence),
        ("structure suites, n <= 10", structure_suites),
        ("lifting suites, n <= 12", lifting_suites),
        ("family round trip", family_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({secs:.1}s) {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({secs:.1}s) {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
