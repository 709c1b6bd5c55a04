//! Per-graph dossiers: connectivity, classification, barriers, tight cuts,
//! nice vertices, nice pairs and family membership.
//!
//! The JSON form follows `docs/analyze.schema.json`; [`AnalysisReport::to_text`]
//! renders the same data as an aligned table.

use std::fmt::Write as _;

use serde::Serialize;

use crate::connectivity::{connectivity_profile, ConnectivityProfile};
use crate::error::{Error, Result};
use crate::families::{recognize_family, FamilyMembership};
use crate::graph::{Graph, VertexSet};
use crate::graph6::{parse_graph6, write_graph6};
use crate::matching::has_perfect_matching;
use crate::nice::{nice_pair_matrix, nice_vertices, pair_set_in, NiceMethod, NicePairSet, NiceReport};
use crate::structure::{barriers, classify, nontrivial_tight_cuts, BarrierMode, Classification};

pub const SCHEMA_VERSION: u32 = 1;

/// Barriers listed per graph; the total is always reported.
pub const BARRIER_CAP: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BarrierSection {
    pub total: usize,
    pub nontrivial: usize,
    /// Minimal nontrivial barriers, at most [`BARRIER_CAP`].
    pub minimal_nontrivial: Vec<VertexSet>,
    pub truncated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TightCutSummary {
    pub shore: VertexSet,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NicePairSection {
    pub a: VertexSet,
    pub b: VertexSet,
    pub pair_count: usize,
    pub max_partners: usize,
    /// `partners[i]` lists the partners of the `i`-th vertex of `a`.
    pub partners: Vec<VertexSet>,
    pub three_by_three: Option<NicePairSet>,
    pub all_pairs_nice: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub connectivity: ConnectivityProfile,
    pub has_perfect_matching: bool,
    pub classification: Option<Classification>,
    pub barriers: Option<BarrierSection>,
    pub tight_cuts: Option<Vec<TightCutSummary>>,
    pub nice_vertices: Option<NiceReport>,
    pub nice_pairs: Option<NicePairSection>,
    pub family: Option<FamilyMembership>,
    /// Sections left out and why.
    pub notes: Vec<String>,
}

/// Builds the dossier of one simple graph.
pub fn analyze(g: &Graph) -> Result<AnalysisReport> {
    let connectivity = connectivity_profile(g);
    let pm = has_perfect_matching(g);
    let mut notes = Vec::new();
    let classification = if connectivity.connected {
        Some(classify(g)?)
    } else {
        notes.push("classification skipped: disconnected".into());
        None
    };
    let barriers = if pm {
        let all = barriers(g, BarrierMode::All)?;
        let minimal: Vec<VertexSet> = all.iter().filter(|b| b.minimal_nontrivial).map(|b| b.s).collect();
        Some(BarrierSection {
            total: all.len(),
            nontrivial: all.iter().filter(|b| b.nontrivial).count(),
            truncated: minimal.len() > BARRIER_CAP,
            minimal_nontrivial: minimal.into_iter().take(BARRIER_CAP).collect(),
        })
    } else {
        notes.push("barriers skipped: no perfect matching".into());
        None
    };
    let tight_cuts = if classification.as_ref().is_some_and(|c| c.matching_covered) {
        match nontrivial_tight_cuts(g) {
            Ok(cuts) => Some(
                cuts.iter()
                    .map(|w| TightCutSummary {
                        shore: w.cut.side,
                        edges: w.cut.edges.iter().map(|&e| <[usize; 2]>::from(g.edge(e))).collect(),
                    })
                    .collect(),
            ),
            Err(Error::Unsupported(why)) => {
                notes.push(format!("tight cuts skipped: {why}"));
                None
            }
            Err(e) => return Err(e),
        }
    } else {
        notes.push("tight cuts skipped: not matching covered".into());
        None
    };
    let nice = if connectivity.cubic {
        Some(nice_vertices(g, NiceMethod::Definition)?)
    } else {
        notes.push("nice vertices skipped: not cubic".into());
        None
    };
    let nice_pairs = if connectivity.cubic && connectivity.connected && connectivity.bipartite() {
        let m = nice_pair_matrix(g)?;
        Some(NicePairSection {
            a: m.bipartition.a,
            b: m.bipartition.b,
            pair_count: m.pair_count,
            max_partners: m.max_partners(),
            three_by_three: pair_set_in(&m, 3),
            all_pairs_nice: m.is_complete(),
            partners: m.rows,
        })
    } else {
        None
    };
    let family = if connectivity.connected {
        match recognize_family(g) {
            Ok(f) => Some(f),
            Err(Error::Domain(why)) => {
                notes.push(format!("family skipped: {why}"));
                None
            }
            Err(e) => return Err(e),
        }
    } else {
        notes.push("family skipped: disconnected".into());
        None
    };
    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        graph6: write_graph6(g)?,
        n: g.n(),
        m: g.m(),
        connectivity,
        has_perfect_matching: pm,
        classification,
        barriers,
        tight_cuts,
        nice_vertices: nice,
        nice_pairs,
        family,
        notes,
    })
}

/// Dossiers for every non-empty graph6 line; errors name the line.
pub fn analyze_text(text: &str) -> Result<Vec<AnalysisReport>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let line = i + 1;
            let wrap = |e: Error| Error::Line {
                line,
                source: Box::new(e),
            };
            let g = parse_graph6(l.trim()).map_err(wrap)?;
            analyze(&g).map_err(wrap)
        })
        .collect()
}

fn list(s: VertexSet) -> String {
    let v: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl AnalysisReport {
    /// Aligned two-column table.
    pub fn to_text(&self) -> String {
        let mut rows: Vec<(String, String)> = vec![
            ("graph6".into(), self.graph6.clone()),
            ("vertices / edges".into(), format!("{} / {}", self.n, self.m)),
            ("connected".into(), flag(self.connectivity.connected).into()),
            ("2-connected".into(), flag(self.connectivity.two_connected).into()),
            ("3-connected".into(), flag(self.connectivity.three_connected).into()),
            ("cubic".into(), flag(self.connectivity.cubic).into()),
            ("bipartite".into(), flag(self.connectivity.bipartite()).into()),
            ("perfect matching".into(), flag(self.has_perfect_matching).into()),
        ];
        if let Some(c) = &self.classification {
            rows.push(("matching covered".into(), flag(c.matching_covered).into()));
            rows.push(("bicritical".into(), flag(c.bicritical).into()));
            rows.push(("brick".into(), flag(c.brick).into()));
            rows.push(("2-extendable".into(), flag(c.two_extendable).into()));
            rows.push(("brace".into(), flag(c.brace).into()));
        }
        if let Some(b) = &self.barriers {
            rows.push(("barriers".into(), format!("{} ({} nontrivial)", b.total, b.nontrivial)));
            let shown: Vec<String> = b.minimal_nontrivial.iter().map(|&s| list(s)).collect();
            let more = if b.truncated { " ..." } else { "" };
            rows.push(("minimal nontrivial".into(), format!("{}{more}", shown.join(" "))));
        }
        if let Some(t) = &self.tight_cuts {
            let shores: Vec<String> = t.iter().map(|c| list(c.shore)).collect();
            rows.push(("nontrivial tight cuts".into(), format!("{} {}", t.len(), shores.join(" "))));
        }
        if let Some(nv) = &self.nice_vertices {
            rows.push(("nice vertices".into(), list(nv.nice)));
            rows.push(("Υ".into(), nv.upsilon.to_string()));
        }
        if let Some(p) = &self.nice_pairs {
            rows.push(("nice pairs".into(), p.pair_count.to_string()));
            rows.push(("max partners".into(), p.max_partners.to_string()));
            rows.push(("all pairs nice".into(), flag(p.all_pairs_nice).into()));
            if let Some(s) = &p.three_by_three {
                rows.push(("pair set".into(), format!("{} x {}", list(s.a_side), list(s.b_side))));
            }
        }
        if let Some(f) = &self.family {
            rows.push(("family".into(), f.family.to_string()));
        }
        for n in &self.notes {
            rows.push(("note".into(), n.clone()));
        }
        let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            let pad = width - k.chars().count();
            let line = format!("{k}{}  {v}", " ".repeat(pad));
            let _ = writeln!(out, "{}", line.trim_end());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{catalog, FamilyKind};

    #[test]
    fn k33_triangle_dossier() {
        let r = analyze(&catalog::k33_triangle()).unwrap();
        assert_eq!(r.nice_vertices.as_ref().unwrap().upsilon, 6);
        assert!(!r.classification.as_ref().unwrap().bicritical);
        assert_eq!(r.family.as_ref().unwrap().family, FamilyKind::K33Triangle);
        assert!(r.nice_pairs.is_none());
    }

    #[test]
    fn k4_dossier() {
        let r = analyze_text("C~\n").unwrap().remove(0);
        assert!(r.classification.as_ref().unwrap().brick);
        assert_eq!(r.nice_vertices.as_ref().unwrap().upsilon, 4);
        assert_eq!(r.family.as_ref().unwrap().family, FamilyKind::K4);
    }

    #[test]
    fn bipartite_dossier_has_pairs() {
        let r = analyze(&catalog::k33()).unwrap();
        assert_eq!(r.nice_vertices.as_ref().unwrap().upsilon, 0);
        assert_eq!(r.nice_pairs.as_ref().unwrap().pair_count, 9);
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = analyze_text("C~\n\nnot graph6 \u{1}\n").unwrap_err();
        assert!(matches!(err, Error::Line { line: 3, .. }), "{err}");
    }

    #[test]
    fn non_cubic_input_is_noted() {
        let p = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let r = analyze(&p).unwrap();
        assert!(r.nice_vertices.is_none());
        assert!(r.notes.iter().any(|n| n.contains("not cubic")));
        assert!(r.to_text().contains("note"));
    }
}
