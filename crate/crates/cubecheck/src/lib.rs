//! Partial-cube machinery at desk scale.
//!
//! The crate provides the metric backbone (BFS distance kernel, Cartesian
//! products, graph6 I/O), the Djoković–Winkler relation with halfspace
//! decompositions and convexity tests, convex-cycle enumeration with girth
//! signatures and traverses, automorphism/isomorphism search, constructors
//! for the classical cubic families (prisms, generalized Petersen, middle
//! levels, Coxeter Cayley graphs of A3/B3/H3), and a classification pipeline
//! that checks every cubic vertex-transitive partial cube against the known
//! families — exhaustively over all connected cubic graphs at small orders.

pub mod classify;
pub mod cycles;
pub mod enumerate;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod metric;
pub mod symmetry;

pub use classify::{
    census, classify, coxeter_edge_coloring, expected_census_tags, CensusEntry, CensusPositive,
    Classification, ClassificationVerdict, ColoringReport, CutColor,
};
pub use enumerate::{
    connected_cubic_graphs, enumeration_cap, naive_connected_cubic_graphs,
    DEFAULT_ENUMERATION_CAP,
};
pub use cycles::{
    all_incident_pairs_covered, claims_audit, cycles_up_to, default_cycle_bound,
    enumerate_convex_cycles, euler_report, find_convex_traverse, find_isometric_embedding,
    girth_signature, intertwining, isometric_cycles_up_to, shortest_convex_cycle_through,
    verify_traverse, ClaimsAudit, ConvexTraverse, CycleRecord, EulerReport, GirthSignature,
    IntertwiningRecord, TraverseFinder,
};
pub use graph::{bfs_distances, Bipartiteness, DistanceMatrix, EdgeId, Graph, Vertex};
pub use graph6::{parse_graph6, write_graph6};
pub use metric::{
    check_partial_cube, convexity_lemma_check, is_convex_subgraph, is_geodesic,
    is_isometric_subgraph, theta_related, theta_star_classes, CubeVerdict,
    HalfspaceDecomposition, HypercubeLabeling, NonCubeWitness, PartialCube, ThetaPartition,
};
pub use symmetry::{
    automorphisms, canonical_graph6, has_trivial_stabilizers, is_isomorphic,
    is_vertex_transitive, AutomorphismReport, IsoCertificate, Refutation,
};

/// Errors shared across the toolkit. Variants carry the offending data so
/// callers can report precisely what was rejected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("loop edge at vertex {vertex}")]
    LoopEdge { vertex: u32 },
    #[error("edge ({u}, {v}) out of range for {n} vertices")]
    EdgeOutOfRange { u: u32, v: u32, n: u32 },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: u32, degree: u32 },
    #[error("graph is not a partial cube")]
    NotPartialCube,
    #[error("vertex set is empty")]
    EmptySubset,
    #[error("vertex set does not induce a connected subgraph")]
    SubsetNotConnected,
    #[error("sequence is not a path in the graph")]
    NotAPath,
    #[error("vertices {u} and {v} are not adjacent")]
    NotAdjacent { u: u32, v: u32 },
    #[error("cycle length bound {max_len} must be even and at least 4")]
    BadCycleBound { max_len: u32 },
    #[error("edges ({:?}, {:?}) are not theta-related", e1, e2)]
    NotThetaRelated { e1: (u32, u32), e2: (u32, u32) },
    #[error("no convex traverse from {e1:?} to {e2:?}: would falsify the traverse existence lemma")]
    TraverseNotFound { e1: (u32, u32), e2: (u32, u32) },
    #[error("cycle length {k} too small, need at least 3")]
    CycleTooShort { k: u32 },
    #[error("hypercube dimension {d} outside supported range 1..=12")]
    BadHypercubeDim { d: u32 },
    #[error("generalized Petersen parameters ({n}, {k}) violate 3 <= n, 1 <= k < n/2")]
    BadPetersenParams { n: u32, k: u32 },
    #[error("middle levels parameter {t} outside supported range 1..=6")]
    BadMiddleLevelsParam { t: u32 },
    #[error("invalid Coxeter matrix: {reason}")]
    InvalidCoxeterMatrix { reason: &'static str },
    #[error("Coxeter order m[{i}][{j}] = {m} unsupported; exact arithmetic covers orders 2..=6")]
    BadCoxeterOrder { i: usize, j: usize, m: u32 },
    #[error("group generation exceeded the element cap {cap}; presumed infinite or too large")]
    ElementCapExceeded { cap: usize },
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: &'static str },
    #[error("enumeration order {n} must be even and at least 4")]
    BadEnumerationOrder { n: u32 },
    #[error("enumeration order {n} exceeds the hard cap {cap} (set CUBECHECK_CAP to override)")]
    EnumerationCapExceeded { n: u32, cap: u32 },
    #[error("girth signature {found:?} does not match required {required:?}")]
    SignatureMismatch { found: [u32; 3], required: [u32; 3] },
    #[error("faces share more than one edge: {c1:?} and {c2:?}")]
    FacePairOverlap { c1: Vec<u32>, c2: Vec<u32> },
    #[error("face count consequence violated: {detail}")]
    EulerConsequence { detail: String },
    #[error("no convex cycle through ({u1}, {u}, {u2}) within the diameter bound")]
    IncidentPairUncovered { u1: u32, u: u32, u2: u32 },
    #[error("edge coloring ill-defined at edge {edge:?}: {reason}")]
    ColoringIllDefined { edge: (u32, u32), reason: String },
    #[error("operation requires classification {required}, got {got}")]
    WrongClassification { required: &'static str, got: String },
    #[error("census hit a counterexample candidate at n={n}: {graph6}")]
    CensusContradiction { n: u32, graph6: String },
}
