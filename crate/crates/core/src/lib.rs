//! Nice vertices and nice pairs in cubic graphs.
//!
//! A vertex `u` of a cubic graph is *nice* when `G - N[u]` has a perfect
//! matching; in a cubic bipartite graph a pair `(a, b)` across the
//! bipartition is nice when `G - N[a] - N[b]` has one. The crate computes
//! both, the barrier and tight-cut structure behind them, the extremal
//! families built by splicing, and exhaustive checks over enumerated
//! corpora of small cubic graphs.

pub mod analyze;
pub mod connectivity;
pub mod corpus;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod matching;
pub mod nice;
pub mod search;
pub mod structure;
pub mod verify;

pub use analyze::{analyze, analyze_text, AnalysisReport};
pub use connectivity::{connectivity_profile, enumerate_cuts, ConnectivityProfile};
pub use error::{Error, Result};
pub use families::{
    build_family, edge_splice, linear_chain, recognize_family, splice, BuiltFamily, FamilyMembership,
    FamilySpec,
};
pub use graph::{Bipartition, EdgeCut, Graph, Side, Vertex, VertexSet};
pub use graph6::{parse_graph6, write_graph6};
pub use iso::is_isomorphic;
pub use matching::{
    has_perfect_matching, is_matching_covered, maximum_matching, nice_check, perfect_matchings, Matching,
};
pub use nice::{
    all_pairs_nice, find_nice_pair_set, nice_pair_matrix, nice_vertices, NicePairMatrix, NicePairSet,
    NiceMethod, NiceReport,
};
pub use structure::{
    barriers, classify, is_tight_cut, nontrivial_tight_cuts, odd_component_count, tight_cut_contractions,
    Barrier, BarrierMode, Classification, CutWitness,
};
pub use search::{search_barrier_counterexample, CounterexampleHit};
pub use verify::{verify_suite, VerificationReport};
