use thiserror::Error;

/// Errors raised by the library. Every variant is an input problem; the CLI
/// maps all of them to exit code 2.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={m}")]
    VertexOutOfRange { vertex: u32, m: usize },
    #[error("loop at vertex {0}")]
    Loop(u32),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(u32, u32),
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("labeling does not match graph: {0}")]
    LabelingMismatch(String),
    #[error("family parameter n must be >= {min}, got {got}")]
    FamilyParameter { min: u64, got: u64 },
    #[error("complex needs at least one facet")]
    NoFacets,
    #[error("facets must be non-empty")]
    EmptyFacet,
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<u32>),
    #[error("boundary dimension {r} out of range 1..={dim}")]
    DimensionOutOfRange { r: usize, dim: i64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid field spec {0:?}; expected \"q\" or \"gf:<p>\"")]
    FieldSpec(String),
    #[error("graph is disconnected; the first-homology shortcut needs a connected graph")]
    Disconnected,
    #[error(
        "cover-count formula is only stated for n >= 2 (n = 1 gives 10, \
         while enumeration finds 15 covers)"
    )]
    CoverCountDomain(u64),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
