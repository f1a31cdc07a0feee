//! Exact computation of packing chromatic numbers and related
//! invariants on small graphs.
//!
//! A packing colouring assigns colour classes V_1, ..., V_k so that
//! vertices in V_i are pairwise more than distance i apart; the packing
//! chromatic number is the least such k.  This crate computes it
//! exactly by bounded search, together with clique, chromatic, and
//! independence numbers, Mycielskian constructions, parametric graph
//! families, exhaustive small-graph enumeration, and corpus-wide
//! verification of the inequalities relating these invariants.
//!
//! Graphs are simple and undirected, live in memory as bit-set
//! adjacency rows, and interchange as graph6 strings.  Potentially
//! expensive searches take a [`solve::Budget`] bounding the number of
//! search nodes; exceeding it surfaces as an error rather than a wrong
//! answer.

pub mod bitset;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod mycielskian;
pub mod packing;
pub mod realizability;
pub mod solve;

pub use bitset::VertexSet;
pub use graph::{distances, DistanceMatrix, Graph, GraphError, UNREACHABLE};
pub use graph6::{emit_graph6, parse_graph6, parse_graph6_lines, Graph6Error, MAX_ORDER};
pub use invariants::{
    chromatic_number, clique_number, independence_number, independent_sets, is_k_colorable,
    is_k_critical, max_clique, max_independent_set, BoundRecord, InvariantReport, Relation,
};
pub use mycielskian::{
    alpha_mycielskian, mycielski_bound_report, mycielski_power, mycielski_power_bound, mycielskian,
    AlphaMycielskian, MycielskiBoundReport, MycielskiLayout,
};
pub use packing::{
    bound_delta_alpha_lower, bound_indep_upper, h_class_equality_check, invariant_report,
    is_i_packing, is_s_packing_colorable, packing_chromatic_number, s_packing_color, HClassCheck,
    HClassError, PackingColoring, SPackingSpec, SpecError,
};
pub use realizability::{
    corpus_digest, realize_higher, run_scan, search_counterexample, seed_m_table, triple_of,
    CheckId, CheckReport, CheckStatus, MTableRow, RealizeError, ScanOptions, ScanReport,
    SearchHit, SearchOptions, SearchOutcome, Triple, UnknownCheck,
};
pub use solve::{Budget, BudgetExceeded, BUDGET_ENV, DEFAULT_BUDGET};
