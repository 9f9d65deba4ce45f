use alloc::string::String;

/// Errors raised by the geometric and combinatorial operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zero vector has no primitive form")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ambient dimension {0} outside supported range 1..=5")]
    UnsupportedDimension(usize),
    #[error("empty input")]
    EmptyInput,
    #[error("facet description requires full dimension")]
    NotFullDimensional,
    #[error("polytope is not a lattice polytope")]
    NotLattice,
    #[error("operation undefined on the empty polytope")]
    EmptyPolytope,
    #[error("negative dilation factor")]
    NegativeDilation,
    #[error("half-space system has a lineality space; no vertex description")]
    NotPointed,
    #[error("triangulate first: cone generators are linearly dependent")]
    DependentRays,
    #[error("support undefined: Fine interior is empty")]
    SupportUndefined,
    #[error("not a support vector at any dilation")]
    NotSupportVector,
    #[error("use width-1 projection predicate")]
    WidthOne,
    #[error("subpolytope search root has {0} lattice points, more than the supported 128")]
    RootTooLarge(usize),
    #[error("invariant violation: {0}")]
    Invariant(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
