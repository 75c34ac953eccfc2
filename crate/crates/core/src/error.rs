use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("endpoint {vertex} out of range for graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: u32, vertex_count: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex {vertex} has degree {degree}, exceeding the cubic bound of 3")]
    DegreeExceedsCubic { vertex: u32, degree: u32 },

    #[error("complexity 3g-3+n = {complexity} is below 1")]
    ComplexityTooLow { complexity: i64 },

    #[error("graph with {vertices} vertices is too large for canonicalization (cap {cap})")]
    TooLargeForCanonicalization { vertices: usize, cap: usize },

    #[error("edge ({u}, {v}) copy {copy} is not present")]
    EdgeNotFound { u: u32, v: u32, copy: usize },

    #[error("vertex {vertex} already has degree 3; cannot attach a pendant")]
    PendantTargetFull { vertex: u32 },

    #[error("vertex {vertex} has degree 3; no boundary slot to fill")]
    NoBoundarySlot { vertex: u32 },

    #[error("vertex {vertex} is closed by its own loop; cannot fill")]
    LoopVertexFill { vertex: u32 },

    #[error("malformed move: {0}")]
    MalformedMove(String),

    #[error("move would raise vertex {vertex} to degree 4")]
    MoveDegreeViolation { vertex: u32 },

    #[error("move disconnects the graph")]
    MoveDisconnects,

    #[error("genus {genus} is below 2; no genus-separating target exists")]
    GenusTooLow { genus: u32 },

    #[error("no decomposition at signature (g={g}, n={n}) contains a separating curve")]
    NoTargetAtSignature { g: u32, n: u32 },

    #[error("search exceeded max depth {0} without reaching the target")]
    MaxDepthExceeded(usize),

    #[error("internal integrity failure: {0}")]
    Integrity(String),

    #[error("girth parameter must be at least 5, got {0}")]
    GirthTooSmall(u32),

    #[error("vertex budget {0} must be even and at least 140")]
    BadGammaSize(usize),

    #[error("graph is not 3-regular")]
    NotThreeRegular,

    #[error("could only place {placed} of {requested} spaced boundary vertices")]
    SpacingInfeasible { requested: usize, placed: usize },

    #[error("LCF syntax error: {0}")]
    LcfSyntax(String),

    #[error("LCF jump {jump} out of range for {n} vertices (need 2 <= |jump| <= n-2)")]
    LcfJumpOutOfRange { jump: i64, n: usize },

    #[error("LCF chord assignment is not an involution at vertex {vertex}")]
    LcfInvolution { vertex: u32 },

    #[error("LCF code yields a parallel edge between {u} and {v}")]
    LcfParallelEdge { u: u32, v: u32 },

    #[error("unknown named graph \"{0}\"")]
    UnknownNamedGraph(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
