//! Total simplicial complexes of finite simple graphs.
//!
//! Build the total graph T(G) and its complex Δ_T(G), compute simplicial
//! homology over Q or GF(p), decide Cohen-Macaulay / Buchsbaum / CM_t, and
//! enumerate minimal vertex covers for unmixedness and the facet-ideal
//! primary decomposition.
//!
//! The hot loops run on rayon when the `parallel` feature is enabled (the
//! default); see [`exec::Exec`].

pub mod cm;
pub mod complex;
pub mod corpus;
pub mod cover;
pub mod error;
pub mod exec;
pub mod field;
pub mod friendship;
pub mod graph;
pub mod homology;
pub mod tsc;

pub use cm::{is_buchsbaum, is_cm, is_cm_t, tsc_cm_shortcut, vertex_links_connected, CmReport, Witness};
pub use complex::{ComplexFile, FVector, Face, SimplicialComplex};
pub use cover::{
    facet_ideal_decomposition, friendship_cover_count, is_unmixed, minimal_vertex_covers,
    stanley_reisner_generators, CoverReport, Decomposition, PrimeComponent,
};
pub use error::{Error, Result};
pub use exec::Exec;
pub use field::FieldSpec;
pub use graph::{c42, friendship, Graph, GraphFile, Node, TotalGraph, TotalLabeling};
pub use homology::{boundary_matrix, euler_characteristic, homology_summary, BoundaryMatrix, HomologySummary};
pub use tsc::{build_tsc, c42_fixture, friendship_facets_closed_form, total_indices, TotalIndexSet};
