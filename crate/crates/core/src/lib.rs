//! Leap eccentric connectivity and companion indices on subdivision-derived
//! graphs, subdivision joins and double coronas, plus a brute-force auditor
//! that checks closed-form statements about them on small graphs.

pub mod compositions;
pub mod constructions;
pub mod coronas;
pub mod distance;
pub mod error;
pub mod format;
pub mod generate;
pub mod graph;
pub mod invariants;
pub mod predicates;
pub mod verify;

pub use compositions::{sd_edge_join, sd_vertex_edge_join, sd_vertex_join, JoinGraph, JoinKind, JoinParams, JoinTag};
pub use constructions::{
    derive, line_graph, q_graph, r_graph, split_by_provenance, subdivision, total_graph, DerivedGraph,
    DerivedKind, Provenance,
};
pub use coronas::{corona_d2_table, double_corona, CoronaGraph, CoronaTag};
pub use distance::{all_pairs_distances, degree_vector, eccentricities, DegreeVector, DistanceMatrix, EccentricityProfile, UNREACHABLE};
pub use error::{Error, Result};
pub use format::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
pub use graph::{Graph, GraphBuilder};
pub use invariants::{index_report, IndexReport};
pub use predicates::{girth, is_bipartite, is_connected, is_star, pendant_ecc_property, Girth};
pub use verify::{
    check_claim, find_counterexample, registry, sweep, ClaimResult, Counterexample, Family, Status, SweepConfig,
    SweepReport,
};
