//! Exhaustive verification suites over the enumerated corpus.
//!
//! Each suite checks one universally quantified claim on every connected
//! cubic graph up to a given order that meets the claim's hypotheses.
//! Graphs are checked in parallel; the report lists them in corpus order
//! (by order, then graph6 id), so it is byte-stable for fixed arguments.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::connectivity::{connectivity_profile, enumerate_cuts, ConnectivityProfile};
use crate::corpus::{cache_dir_from_env, enumerate_cached, enumerate_cubic, CorpusEntry};
use crate::error::{Error, Result};
use crate::families::catalog;
use crate::families::{recognize_family, FamilyKind};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::iso::is_isomorphic;
use crate::matching::{has_perfect_matching, has_perfect_matching_within, is_matching_covered, maximum_matching};
use crate::nice::{
    is_nice_pair, is_nice_vertex, nice_pair_matrix, nice_vertices, pair_rectangle, pair_set_in,
    pair_sets_bounded_by_three, NiceMethod,
};
use crate::structure::{
    barrier_sets, barriers, brace_by_deletion, classify, is_tight_cut, nontrivial_tight_cuts,
    tight_by_colour_classes, tight_by_enumeration, BarrierMode, BipartiteSplit,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub claim: String,
    pub detail: String,
    /// CLI invocation re-running the suite on this graph alone.
    pub replay: String,
}

/// `violations` is empty iff the suite passed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub suite: String,
    pub max_n: usize,
    pub graphs_checked: usize,
    /// Graphs meeting the suite's hypotheses.
    pub applicable: usize,
    pub violations: Vec<Violation>,
    pub observations: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Aligned plain-text rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{:<16}{}", "suite", self.suite);
        let _ = writeln!(out, "{:<16}{}", "max n", self.max_n);
        let _ = writeln!(out, "{:<16}{}", "graphs checked", self.graphs_checked);
        let _ = writeln!(out, "{:<16}{}", "applicable", self.applicable);
        let _ = writeln!(out, "{:<16}{}", "violations", self.violations.len());
        let _ = writeln!(out, "{:<16}{}", "status", status);
        for v in &self.violations {
            let _ = writeln!(out, "  {}  {}: {}", v.graph6, v.claim, v.detail);
            let _ = writeln!(out, "    replay: {}", v.replay);
        }
        for o in &self.observations {
            let _ = writeln!(out, "  note: {o}");
        }
        out
    }
}

#[derive(Default)]
struct Outcome {
    applicable: bool,
    findings: Vec<(String, String)>,
    notes: Vec<String>,
}

impl Outcome {
    fn fail(&mut self, claim: &str, detail: impl Into<String>) {
        self.findings.push((claim.to_string(), detail.into()));
    }

    fn expect(&mut self, ok: bool, claim: &str, detail: impl FnOnce() -> String) {
        if !ok {
            self.fail(claim, detail());
        }
    }
}

type Check = fn(&Graph, &ConnectivityProfile, &mut Outcome) -> Result<()>;

/// A registered suite.
pub struct Suite {
    pub name: &'static str,
    /// The checked statement.
    pub claim: &'static str,
    /// Library modules the suite exercises.
    pub modules: &'static [&'static str],
    check: Check,
}

pub static SUITES: &[Suite] = &[
    Suite {
        name: "nice-vertex-bounds",
        claim: "2-connected non-bipartite: Υ >= 4, with Υ = 4 exactly for K4 and F_i; \
                3-connected non-bipartite other than K4: Υ >= 6, with Υ = 6 exactly for the prism, K33△, G1 and G2",
        modules: &["nice", "families::recognize", "connectivity"],
        check: check_nice_vertex_bounds,
    },
    Suite {
        name: "nice-pair-sets",
        claim: "cubic bipartite: a 3x3 nice pair set exists; every vertex has at most 3 nice partners exactly for members of T",
        modules: &["nice", "families::recognize"],
        check: check_nice_pair_sets,
    },
    Suite {
        name: "nine-nice-pairs",
        claim: "cubic bipartite: at least 9 nice pairs, exactly 9 only for K33",
        modules: &["nice", "iso"],
        check: check_nine_nice_pairs,
    },
    Suite {
        name: "criteria-equivalence",
        claim: "2-connected cubic: u is not nice iff some barrier leaves u isolated",
        modules: &["nice", "structure"],
        check: check_criteria_equivalence,
    },
    Suite {
        name: "brace-all-pairs-nice",
        claim: "cubic bipartite: brace iff every pair across the bipartition is nice",
        modules: &["nice", "structure"],
        check: check_brace_all_pairs_nice,
    },
    Suite {
        name: "three-connected-pair-sets",
        claim: "3-connected cubic bipartite: every pair is nice below 10 vertices, otherwise a 3x5 nice pair set exists",
        modules: &["nice", "connectivity"],
        check: check_three_connected_pair_sets,
    },
    Suite {
        name: "tutte-cross-check",
        claim: "maximum matching size equals (n - max_S (o(G-S) - |S|)) / 2",
        modules: &["matching", "structure"],
        check: check_tutte,
    },
    Suite {
        name: "two-connected-matching-covered",
        claim: "cubic: 2-connected iff matching covered",
        modules: &["matching", "connectivity"],
        check: check_two_connected_matching_covered,
    },
    Suite {
        name: "bicritical-all-nice",
        claim: "cubic bicritical: every vertex is nice",
        modules: &["nice", "structure"],
        check: check_bicritical_all_nice,
    },
    Suite {
        name: "barrier-properties",
        claim: "matching covered: bicritical iff no nontrivial barrier; every barrier is independent and leaves no even component",
        modules: &["structure"],
        check: check_barrier_properties,
    },
    Suite {
        name: "tight-cuts-are-3-cuts",
        claim: "2-connected cubic: every tight cut has exactly 3 edges",
        modules: &["structure", "connectivity"],
        check: check_tight_cuts_are_3_cuts,
    },
    Suite {
        name: "three-cuts-are-matchings",
        claim: "3-connected cubic: every nontrivial 3-cut is a matching",
        modules: &["connectivity"],
        check: check_three_cuts_are_matchings,
    },
    Suite {
        name: "bipartite-tight-criterion",
        claim: "bipartite matching covered: a cut is tight iff |X| is odd, |X+| = |X-| + 1 and no edge joins X- to the smaller class outside X",
        modules: &["structure", "matching"],
        check: check_bipartite_tight_criterion,
    },
    Suite {
        name: "brick-brace-dichotomy",
        claim: "matching covered: no nontrivial tight cut iff brick or brace",
        modules: &["structure"],
        check: check_brick_brace_dichotomy,
    },
    Suite {
        name: "brace-four-deletion",
        claim: "connected bipartite on at least 6 vertices: brace iff deleting any two vertices from each class leaves a perfect matching",
        modules: &["structure"],
        check: check_brace_four_deletion,
    },
    Suite {
        name: "non-brace-contraction",
        claim: "bipartite matching covered non-brace: some nontrivial tight cut has a brace contraction",
        modules: &["structure"],
        check: check_non_brace_contraction,
    },
    Suite {
        name: "barrier-component-structure",
        claim: "3-connected cubic with a nontrivial barrier S: each nontrivial component K of G-S has a tight 3-cut that is a matching, \
                both contractions are 3-connected simple cubic, and a non-bipartite host has a non-bipartite nontrivial component",
        modules: &["structure", "connectivity"],
        check: check_barrier_component_structure,
    },
    Suite {
        name: "nice-barrier-exists",
        claim: "3-connected non-bicritical non-bipartite cubic: some minimal nontrivial barrier consists of nice vertices",
        modules: &["structure", "nice"],
        check: check_nice_barrier_exists,
    },
    Suite {
        name: "tight-cut-lifting",
        claim: "2-connected cubic, nontrivial tight cut with G/X̄ simple: a vertex of X nice in G/X̄ is nice in G",
        modules: &["structure", "nice"],
        check: check_tight_cut_lifting,
    },
    Suite {
        name: "two-cut-transfer",
        claim: "2-connected cubic with 2-cut {ab, cd}, a, c in X: X - a is a tight shore, both sides minus the cut ends are perfectly matchable, \
                a and c lie in distinct classes of a bipartite G[X], niceness in G[X] + ac lifts to G; \
                bipartite hosts keep nice pairs on one side and transfer them both ways",
        modules: &["nice", "structure", "connectivity"],
        check: check_two_cut_transfer,
    },
    Suite {
        name: "pair-lifting",
        claim: "cubic bipartite, nontrivial tight cut with |A ∩ X| = |B ∩ X| + 1 and G/X̄ simple: pairs inside X are nice in G iff in G/X̄; \
                for 3-connected hosts pairs nice through both contractions are nice in G",
        modules: &["nice", "structure"],
        check: check_pair_lifting,
    },
];

pub fn suite(name: &str) -> Result<&'static Suite> {
    SUITES
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))
}

/// Connected cubic graphs of every even order from 4 to `max_n`, read from
/// the cache directory when one is configured.
pub fn load_corpus(max_n: usize) -> Result<Vec<CorpusEntry>> {
    let dir = cache_dir_from_env();
    let mut out = Vec::new();
    for n in (4..=max_n).step_by(2) {
        out.extend(match &dir {
            Some(d) => enumerate_cached(n, true, d)?,
            None => enumerate_cubic(n, true)?,
        });
    }
    Ok(out)
}

/// Runs `name` over the corpus up to `max_n`.
pub fn verify_suite(name: &str, max_n: usize) -> Result<VerificationReport> {
    let s = suite(name)?;
    let corpus = load_corpus(max_n)?;
    Ok(run(s, &corpus, max_n))
}

/// [`verify_suite`] with a dedicated pool of `jobs` worker threads.
pub fn verify_suite_with_jobs(name: &str, max_n: usize, jobs: Option<usize>) -> Result<VerificationReport> {
    match jobs {
        None => verify_suite(name, max_n),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .map_err(|e| Error::internal(format!("thread pool: {e}")))?;
            pool.install(|| verify_suite(name, max_n))
        }
    }
}

/// Runs `name` over explicit graphs, reported with `max_n` set to their
/// largest order.
pub fn verify_graphs(name: &str, graphs: &[Graph]) -> Result<VerificationReport> {
    let s = suite(name)?;
    let entries = graphs
        .iter()
        .map(|g| CorpusEntry::new(g.clone(), crate::corpus::Provenance::File))
        .collect::<Result<Vec<_>>>()?;
    let max_n = graphs.iter().map(Graph::n).max().unwrap_or(0);
    Ok(run(s, &entries, max_n))
}

fn run(s: &Suite, corpus: &[CorpusEntry], max_n: usize) -> VerificationReport {
    let outcomes: Vec<Outcome> = corpus
        .par_iter()
        .map(|e| {
            let mut o = Outcome::default();
            let profile = connectivity_profile(&e.graph);
            if let Err(err) = (s.check)(&e.graph, &profile, &mut o) {
                o.applicable = true;
                o.fail("internal consistency", err.to_string());
            }
            o
        })
        .collect();
    let mut report = VerificationReport {
        schema_version: SCHEMA_VERSION,
        suite: s.name.to_string(),
        max_n,
        graphs_checked: corpus.len(),
        applicable: 0,
        violations: Vec::new(),
        observations: Vec::new(),
    };
    for (e, o) in corpus.iter().zip(outcomes) {
        report.applicable += usize::from(o.applicable);
        for (claim, detail) in o.findings {
            report.violations.push(Violation {
                graph6: e.id.clone(),
                claim,
                detail,
                replay: format!("nicecubic verify --suite {} --graph '{}'", s.name, e.id),
            });
        }
        report
            .observations
            .extend(o.notes.into_iter().map(|n| format!("{}: {n}", e.id)));
    }
    report
}

/// Shores `X` of odd size avoiding vertex 0, one per `{X, X̄}`, with both
/// sides of size at least `min_side`.
fn odd_shores(n: usize, min_side: usize) -> impl Iterator<Item = VertexSet> {
    (1u64..(1u64 << (n - 1))).filter_map(move |bits| {
        let x = VertexSet::from_bits(bits << 1);
        (x.len() % 2 == 1 && x.len() >= min_side && n - x.len() >= min_side).then_some(x)
    })
}

fn split_of(g: &Graph, x: VertexSet) -> Option<BipartiteSplit> {
    let bp = g.bipartition()?;
    let (xa, xb) = (x.intersection(bp.a), x.intersection(bp.b));
    Some(if xa.len() > xb.len() {
        BipartiteSplit { x_plus: xa, x_minus: xb }
    } else {
        BipartiteSplit { x_plus: xb, x_minus: xa }
    })
}

fn check_nice_vertex_bounds(g: &Graph, p: &ConnectivityProfile, o: &mut Outcome) -> Result<()> {
    if !p.two_connected || p.bipartite() {
        return Ok(());
    }
    o.applicable = true;
    let upsilon = nice_vertices(g, NiceMethod::Definition)?.upsilon;
    let is_k4 = g.n() == 4;
    o.expect(upsilon >= 4, "Υ >= 4", || format!("Υ = {upsilon}"));
    if p.three_connected && !is_k4 {
        o.expect(upsilon >= 6, "Υ >= 6 when 3-connected and not K4", || format!("Υ = {upsilon}"));
    }
    let family = recognize_family(g)?.family;
    let four = matches!(family, FamilyKind::K4 | FamilyKind::F(_));
    o.expect((upsilon == 4) == four, "Υ = 4 iff K4 or F_i", || {
        format!("Υ = {upsilon}, family {family}")
    });
    if p.three_connected && !is_k4 {
        let six = matches!(
            family,
            FamilyKind::Prism | FamilyKind::K33Triangle | FamilyKind::G1 | FamilyKind::G2
        );
        o.expect((upsilon == 6) == six, "Υ = 6 iff prism, K33△, G1 or G2", || {
            format!("Υ = {upsilon}, family {family}")
        });
    }
    if upsilon <= 6 {
        o.notes.push(format!("Υ = {upsilon}, family {family}"));
    }
    Ok(())
}

fn check_nice_pair_sets(g: &Graph, p: &ConnectivityProfile, o: &mut Outcome) -> Result<()> {
    if !p.bipartite() {
        return Ok(());
    }
    o.applicable = true;
    let m = nice_pair_matrix(g)?;
    o.expect(pair_set_in(&m, 3).is_some(), "a 3x3 nice pair set exists", || {
        format!("largest partner count {}", m.max_partners())
    });
    let bounded = pair_sets_bounded_by_three(&m);
    // a 4x4 set would give some vertex four partners
    o.expect(!bounded || pair_set_in(&m, 4).is_none(), "bounded sets exclude 4x4", String::new);
    let family = recognize_family(g)?.family;
    o.expect(bounded == (family == FamilyKind::T), "pair sets bounded by 3 iff member of T", || {
        format!("bounded {bounded}, family {family}")
    });
    if bounded {
        o.notes.push("pair sets bounded by 3".into());
    }
    Ok(())
}

fn check_nine_nice_pairs(g: &Graph, p: &ConnectivityProfile, o: &mut Outcome) -> Result<()> {
    if !p.bipartite() {
        return Ok(());
    }
    o.applicable = true;
    let count = nice_pair_matrix(g)?.pair_count;
    o.expect(count >= 9, "at least 9 nice pairs", || format!("{count} nice pairs"));
    let is_k33 = is_isomorphic(g, &catalog::k33()).is_some();
    o.expect((count == 9) == is_k33, "exactly 9 nice pairs only for K33", || {
        format!("{count} nice pairs, K33: {is_k33}")
    });
    if count == 9 {
        o.notes.push("exactly 9 nice pairs".into());
    }
    Ok(())
}

fn check_criteria_equivalence(g: &Graph, p: &ConnectivityProfile, o: &mut Outcome) -> Result<()> {
    if !p.two_connected {
        return Ok(());
    }
    o.applicable = true;
    let d = nice_vertices(g, NiceMethod::Definition)?.nice;
    let b = nice_vertices(g, NiceMethod::Barrier)?.nice;
    o.expect(d == b, "definitional and barrier niceness agree", || {
        format!("definition {:?}, barrier {:?}", d.to_vec(), b.to_vec())
    });
    Ok(())
}

fn check_brace_all_pairs_nice(g: &Graph, p: &ConnectivityProfile, o: &mut Outcome) -> Result<()> {
    if !p.bipartite() {
        return Ok(());
    }
    o.applicable = true;
    let all = nice_pair_matrix(g)?.is_complete();
    let brace = classify(g)?.brace;
    o.expect(all == brace, "brace iff all pairs nice", || format!("brace {brace}, all pairs nice {all}"));
    Ok(())
}

fn check_three_connected_pair_sets(g: &Graph, p: &ConnectivityProfile, o: &mut Outcome) -> Result<()> {
    if !p.bipartite() || !p.three_connected {
        return Ok(());
    }
    o.applicable = true;
    let m = nice_pair_matrix(g)?;
    if g.n() < 10 {
        o.expect(m.is_complete(), "every pair nice below 10 vertices", || {
            format!("{} of {} pairs nice", m.pair_count, m.a.len() * m.b.len())
        });
    } else {
        for (label, mat) in [("A", m.clone()), ("B", m.transposed())] {
            o.expect(pair_rectangle(&mat, 3, 5).is_some(), "a 3x5 nice pair set exists", || {
                format!("no set with 3 vertices from {label} and 5 from the other class")
            });
        }
    }
    Ok(())
}

fn check_tutte(g: &Graph, _: &ConnectivityProfile, o: &mut Outcome) -> Result<()> {
    o.applicable = true;
    let n = g.n();
    let m = maximum_matching(g);
    o.expect(m.is_valid(g), "maximum matching is a matching", String::new);
    let deficiency = (0u64..(1u64 << n))
        .map(|bits| {
            let s = VertexSet::from_bits(bits);
            let odd = g
                .components_within(g.vertices().difference(s))
                .iter()
                .filter(|c| c.len() % 2 == 1)
                .count();
            odd as i64 - s.len() as i64
        })
        .max()
        .unwrap_or(0);
    let expected = (n as i64 - deficiency) / 2;
    o.expect(m.len() as i64 == expected, "Tutte-Berge formula", || {
        format!("matching size {}, formula {expected}", m.len())
    });
    o.expect(has_perfect_matching(g) == (deficiency == 0), "Tutte condition", || {
        format!("deficiency {deficiency}")
    });
    Ok(())
}

fn check_two_connected_matching_covered(g: &Graph, p: &ConnectivityProfile, o: &mut Outcome) -> Result<()> {
    o.applicable = true;
    let mc = is_matching_covered(g);
    o.expect(p.two_connected == mc, "2-connected iff matching covered", || {
        format!("2-connected {}, matching covered {mc}", p.two_connected)
    });
    Ok(())
}

fn check_bicritical_all_nice(g: &Graph, _: &ConnectivityProfile, o: &mut Outcome) -> Result<()> {
    if !classify(g)?.bicritical {
        return Ok(());
    }
    o.applicable = true;
    let upsilon = nice_vertices(g, NiceMethod::Definition)?.upsilon;
    o.expect(upsilon == g.n(), "every vertex nice", || format!("Υ = {upsilon} of {}", g.n()));
    Ok(())
}

fn check_barrier_properties(g: &Graph, _: &ConnectivityProfile, o: &mut Outcome) -> Result<()> {
    if !is_matching_covered(g) {
        return Ok(());
    }
    o.applicable = true;
    let all = barrier_sets(g, false);
    let bicritical = classify(g)?.bicritical;
    let has_nontrivial = all.iter().any(|s| s.len() >= 2);
    o.expect(bicritical != has_nontrivial, "bicritical iff no nontrivial barrier", || {
        format!("bicritical {bicritical}, nontrivial barrier {has_nontrivial}")
    });
    for &s in &all {
        let even = g
            .components_within(g.vertices().difference(s))
            .into_iter()
            .find(|c| c.len() % 2 == 0);
        if let Some(c) = even {
            o.fail("no even component", format!("barrier {:?} leaves {:?}", s.to_vec(), c.to_vec()));
        }
        o.expect(g.is_independent(s), "barriers are independent", || format!("barrier {:?}", s.to_vec()));
    }
    let listed: Vec<VertexSet> = barriers(g, BarrierMode::All)?.iter().map(|b| b.s).collect();
    o.expect(listed == all, "pruned barrier search is complete", || {
        format!("{} pruned, {} exhaustive", listed.len(), all.len())
    });
    let nontrivial: Vec<VertexSet> = all.iter().copied().filter(|s| s.len() >= 2).collect();
    for b in barriers(g, BarrierMode::MinimalNontrivial)? {
        let has_sub = nontrivial.iter().any(|&t| t != b.s && t.is_subset(b.s));
        o.expect(!has_sub, "minimal barriers have no nontrivial sub-barrier", || {
            format!("{:?}", b.s.to_vec())
        });
    }
    Ok(())
}

fn check_tight_cuts_are_3_cuts(g: &Graph, p: &ConnectivityProfile, o: &mut Outcome) -> Result<()> {
    if !p.two_connected {
        return Ok(());
    }
    o.applicable = true;
    let n = g.n();
    let mut swept = Vec::new();
    for x in odd_shores(n, 1) {
        let w = is_tight_cut(g, &g.cut(x))?;
        if !w.tight {
            continue;
        }
        o.expect(w.cut.len() == 3, "tight cuts have 3 edges", || {
            format!("shore {:?} has {} cut edges", x.to_vec(), w.cut.len())
        });
        if x.len() >= 3 && n - x.len() >= 3 {
            swept.push(crate::connectivity::canonical_shore(x, n));
        }
    }
    swept.sort_by_key(|s| (s.len(), s.bits()));
    let mut listed: Vec<VertexSet> = nontrivial_tight_cuts(g)?.iter().map(|w| w.cut.side).collect();
    listed.sort_by_key(|s| (s.len(), s.bits()));
    o.expect(swept == listed, "3-cut candidates find every nontrivial tight cut", || {
        format!("{} by sweep, {} listed", swept.len(), listed.len())
    });
    Ok(())
}

fn is_matching_of_edges(g: &Graph, edges: &[usize]) -> bool {
    let mut seen = VertexSet::EMPTY;
    for &e in edges {
        let (u, v) = g.edge(e);
        if seen.contains(u) || seen.contains(v) {
            return false;
        }
        seen = seen.with(u).with(v);
    }
    true
}

fn check_three_cuts_are_matchings(g: &Graph, p: &ConnectivityProfile, o: &mut Outcome) -> Result<()> {
    if !p.three_connected {
        return Ok(());
    }
    o.applicable = true;
    for cut in enumerate_cuts(g, 3, true) {
        o.expect(is_matching_of_edges(g, &cut.edges), "nontrivial 3-cuts are matchings", || {
            format!("shore {:?}", cut.side.to_vec())
        });
    }
    Ok(())
}

fn check_bipartite_tight_criterion(g: &Graph, p: &ConnectivityProfile, o: &mut Outcome) -> Result<()> {
    if !p.bipartite() || !is_matching_covered(g) {
        return Ok(());
    }
    o.applicable = true;
    for x in odd_shores(g.n(), 1) {
        let edges = g.cut_edges(x);
        let split = split_of(g, x).expect("bipartite");
        let by_enumeration = tight_by_enumeration(g, &edges);
        let by_criterion = tight_by_colour_classes(g, x, split);
        o.expect(by_enumeration == by_criterion, "colour-class criterion matches enumeration", || {
            format!("shore {:?}: enumeration {by_enumeration}, criterion {by_criterion}", x.to_vec())
        });
    }
    Ok(())
}

fn check_brick_brace_dichotomy(g: &Graph, _: &ConnectivityProfile, o: &mut Outcome) -> Result<()> {
    if !is_matching_covered(g) {
        return Ok(());
    }
    o.applicable = true;
    let c = classify(g)?;
    let none = nontrivial_tight_cuts(g)?.is_empty();
    o.expect(none == (c.brick || c.brace), "no nontrivial tight cut iff brick or brace", || {
        format!("no tight cut {none}, brick {}, brace {}", c.brick, c.brace)
    });
    Ok(())
}

fn check_brace_four_deletion(g: &Graph, p: &ConnectivityProfile, o: &mut Outcome) -> Result<()> {
    if !p.bipartite() || g.n() < 6 {
        return Ok(());
    }
    o.applicable = true;
    let by_deletion = brace_by_deletion(g);
    let extendable = classify(g)?.two_extendable;
    o.expect(by_deletion == extendable, "four-vertex deletion test matches 2-extendability", || {
        format!("deletion {by_deletion}, 2-extendable {extendable}")
    });
    Ok(())
}

fn check_non_brace_contraction(g: &Graph, p: &ConnectivityProfile, o: &mut Outcome) -> Result<()> {
    if !p.bipartite() || !is_matching_covered(g) || classify(g)?.brace {
        return Ok(());
    }
    o.applicable = true;
    let cuts = nontrivial_tight_cuts(g)?;
    let mut found = false;
    for w in &cuts {
        let x = w.cut.side;
        let c1 = g.contract(x.complement(g.n()));
        let c2 = g.contract(x);
        if classify(&c1.graph)?.brace || classify(&c2.graph)?.brace {
            found = true;
            break;
        }
    }
    o.expect(found, "a tight cut has a brace contraction", || {
        format!("{} nontrivial tight cuts, none with a brace contraction", cuts.len())
    });
    Ok(())
}

fn check_barrier_component_structure(g: &Graph, p: &ConnectivityProfile, o: &mut Outcome) -> Result<()> {
    if !p.three_connected {
        return Ok(());
    }
    let nontrivial: Vec<VertexSet> = barrier_sets(g, false).into_iter().filter(|s| s.len() >= 2).collect();
    if nontrivial.is_empty() {
        return Ok(());
    }
    o.applicable = true;
    for s in nontrivial {
        let comps = g.components_within(g.vertices().difference(s));
        let big: Vec<VertexSet> = comps.into_iter().filter(|c| c.len() > 1).collect();
        for &k in &big {
            let w = is_tight_cut(g, &g.cut(k))?;
            let at = || format!("barrier {:?}, component {:?}", s.to_vec(), k.to_vec());
            o.expect(w.tight, "component cut is tight", at);
            o.expect(w.cut.len() == 3, "component cut has 3 edges", at);
            o.expect(is_matching_of_edges(g, &w.cut.edges), "component cut is a matching", at);
            for c in [g.contract(k), g.contract(k.complement(g.n()))] {
                let cp = connectivity_profile(&c.graph);
                o.expect(
                    c.graph.is_simple() && cp.cubic && cp.three_connected,
                    "contractions are 3-connected simple cubic",
                    at,
                );
            }
        }
        if !p.bipartite() {
            let odd_cycle = big.iter().any(|&k| g.bipartition_within(k).is_none());
            o.expect(odd_cycle, "a nontrivial component is non-bipartite", || {
                format!("barrier {:?}", s.to_vec())
            });
        }
    }
    Ok(())
}

fn check_nice_barrier_exists(g: &Graph, p: &ConnectivityProfile, o: &mut Outcome) -> Result<()> {
    if !p.three_connected || p.bipartite() || classify(g)?.bicritical {
        return Ok(());
    }
    o.applicable = true;
    let nice = nice_vertices(g, NiceMethod::Definition)?.nice;
    let minimal = barriers(g, BarrierMode::MinimalNontrivial)?;
    o.expect(
        minimal.iter().any(|b| b.s.is_subset(nice)),
        "a minimal nontrivial barrier has only nice vertices",
        || format!("{} minimal nontrivial barriers", minimal.len()),
    );
    let smallest = minimal.iter().map(|b| b.s.len()).min().unwrap_or(0);
    for b in minimal.iter().filter(|b| b.s.len() == smallest) {
        if !b.s.is_subset(nice) {
            o.notes.push(format!(
                "minimum nontrivial barrier {:?} has non-nice vertices {:?}",
                b.s.to_vec(),
                b.s.difference(nice).to_vec()
            ));
        }
    }
    Ok(())
}

fn check_tight_cut_lifting(g: &Graph, p: &ConnectivityProfile, o: &mut Outcome) -> Result<()> {
    if !p.two_connected {
        return Ok(());
    }
    let n = g.n();
    for w in nontrivial_tight_cuts(g)? {
        for x in [w.cut.side, w.cut.side.complement(n)] {
            let c = g.contract(x.complement(n));
            if !c.graph.is_simple() {
                continue;
            }
            o.applicable = true;
            for u in x.iter() {
                if is_nice_vertex(&c.graph, c.image[u]) {
                    o.expect(is_nice_vertex(g, u), "niceness lifts from G/X̄", || {
                        format!("shore {:?}, vertex {u}", x.to_vec())
                    });
                }
            }
        }
    }
    Ok(())
}

fn check_two_cut_transfer(g: &Graph, p: &ConnectivityProfile, o: &mut Outcome) -> Result<()> {
    if !p.two_connected {
        return Ok(());
    }
    let n = g.n();
    let all = g.vertices();
    let matrix = if p.bipartite() { Some(nice_pair_matrix(g)?) } else { None };
    for cut in enumerate_cuts(g, 2, false) {
        o.applicable = true;
        for x in [cut.side, cut.side.complement(n)] {
            let ends = |e: usize| -> (Vertex, Vertex) {
                let (u, v) = g.edge(e);
                if x.contains(u) {
                    (u, v)
                } else {
                    (v, u)
                }
            };
            let (a, b) = ends(cut.edges[0]);
            let (c, d) = ends(cut.edges[1]);
            let at = || format!("shore {:?}, cut ends {a}-{b}, {c}-{d}", x.to_vec());
            o.expect(is_tight_cut(g, &g.cut(x.without(a)))?.tight, "X - a is a tight shore", at);
            let inner = x.without(a).without(c);
            let outer = all.difference(x).without(b).without(d);
            o.expect(
                has_perfect_matching_within(g, inner) && has_perfect_matching_within(g, outer),
                "both sides minus the cut ends are perfectly matchable",
                at,
            );
            if let Some(bp) = g.bipartition_within(x) {
                o.expect(bp.a.contains(a) != bp.a.contains(c), "a and c in distinct classes of G[X]", at);
            }
            if g.has_edge(a, c) {
                continue;
            }
            let h = g.induced_subgraph(x);
            let (la, lc) = (h.local(a).expect("in X"), h.local(c).expect("in X"));
            let closed = h.graph.with_edge(la, lc)?;
            for (lu, &u) in h.original.iter().enumerate() {
                if is_nice_vertex(&closed, lu) {
                    o.expect(is_nice_vertex(g, u), "niceness lifts from G[X] + ac", || {
                        format!("{}, vertex {u}", at())
                    });
                }
            }
            if let Some(m) = &matrix {
                for &pa in &m.a {
                    for &pb in &m.b {
                        if x.contains(pa) != x.contains(pb) {
                            o.expect(!m.is_nice_pair(pa, pb), "nice pairs stay on one side of a 2-cut", || {
                                format!("{}, pair ({pa}, {pb})", at())
                            });
                        } else if x.contains(pa) {
                            let (lpa, lpb) = (h.local(pa).expect("in X"), h.local(pb).expect("in X"));
                            let inside = is_nice_pair(&closed, lpa, lpb);
                            o.expect(inside == m.is_nice_pair(pa, pb), "pairs inside X transfer both ways", || {
                                format!("{}, pair ({pa}, {pb})", at())
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_pair_lifting(g: &Graph, p: &ConnectivityProfile, o: &mut Outcome) -> Result<()> {
    let Some(bp) = p.bipartition else {
        return Ok(());
    };
    let n = g.n();
    for w in nontrivial_tight_cuts(g)? {
        for x in [w.cut.side, w.cut.side.complement(n)] {
            let xc = x.complement(n);
            let g1 = g.contract(xc);
            if !g1.graph.is_simple() {
                continue;
            }
            o.applicable = true;
            // `big` plays the role of A: one more vertex than `small` inside X
            let (big, small) = if x.intersection(bp.a).len() > x.intersection(bp.b).len() {
                (bp.a, bp.b)
            } else {
                (bp.b, bp.a)
            };
            let at = |a: Vertex, b: Vertex| format!("shore {:?}, pair ({a}, {b})", x.to_vec());
            for a in x.intersection(big).iter() {
                for b in x.intersection(small).iter() {
                    let in_g = is_nice_pair(g, a, b);
                    let in_g1 = is_nice_pair(&g1.graph, g1.image[a], g1.image[b]);
                    o.expect(in_g == in_g1, "pairs inside X agree with G/X̄", || at(a, b));
                }
            }
            if !p.three_connected {
                continue;
            }
            let g2 = g.contract(x);
            for a in x.intersection(big).iter() {
                if !is_nice_pair(&g1.graph, g1.image[a], g1.vertex) {
                    continue;
                }
                for b in xc.intersection(small).iter() {
                    if is_nice_pair(&g2.graph, g2.vertex, g2.image[b]) {
                        o.expect(is_nice_pair(g, a, b), "pairs nice through both contractions are nice", || {
                            at(a, b)
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Registered suite names, in registry order.
pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).collect()
}
