//! Rotation systems of multigraphs: face tracing, canonical forms,
//! embedding surgery, exhaustive enumeration, chord diagrams and polygon
//! words.

pub mod canon;
pub mod chord;
pub mod embedding;
pub mod enumerate;
pub mod family;
pub mod graph;
pub mod pipeline;
pub mod polygon;
pub mod surgery;

pub use canon::{
    are_isomorphic, automorphism_group_order, canonical_key, chirality, dedup,
    graph_automorphism_count, CanonError, CanonicalKey, Chirality, DedupMode, EmbeddingClass,
    IsoWitness, SizeGuard,
};
pub use embedding::{Embedding, EmbeddingError, FaceSet, SurfaceStats};
pub use enumerate::{
    exhaustive_classes, genus_distribution, theta_embeddings, EnumError, Filter, GenusDistribution,
    ScanConfig,
};
pub use family::{build_graph, GraphSpec};
pub use graph::{Dart, EdgeId, End, GraphError, MultiGraph, VertexId};
pub use polygon::{boundary_word, surface_from_word, words_equivalent, PolygonWord, SurfaceType};
