use thiserror::Error;

use crate::minor::ModelViolation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graphs are limited to 64 vertices, got {0}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency is not symmetric between {0} and {1}")]
    Asymmetric(usize, usize),
    #[error("{0}{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("not a permutation of the vertex set")]
    BadPermutation,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed graph6 size header")]
    BadHeader,
    #[error("graph6 payload has {got} bytes, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("graph6 padding bits are not zero")]
    TrailingBits,
    #[error("byte {0:#04x} is outside the graph6 alphabet")]
    InvalidByte(u8),
    #[error("graph6 encodes {0} vertices, at most 64 are supported")]
    TooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("unknown pattern name `{0}`")]
    UnknownName(String),
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters { family: &'static str, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("pattern has {expected} roots but {got} host roots were given")]
    RootArity { expected: usize, got: usize },
    #[error("host roots must be distinct")]
    RootsNotDistinct,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColorError {
    #[error("coloring has {got} entries for a graph on {n} vertices")]
    WrongLength { n: usize, got: usize },
    #[error("color {color} at vertex {vertex} is not below the palette size {k}")]
    ColorOutOfPalette { vertex: usize, color: usize, k: usize },
    #[error("edge {0}{1} is monochromatic")]
    Monochromatic(usize, usize),
    #[error("the second chain color equals the color of the anchor")]
    SameColor,
    #[error("chain does not match the Kempe chain of its anchor")]
    InvalidChain,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KempeError {
    #[error("a cycle model needs at least 3 roots, got {0}")]
    TooFewRoots(usize),
    #[error("roots {0} and {1} share a color")]
    RepeatedColor(usize, usize),
    #[error("roots must be distinct")]
    RepeatedRoot,
    #[error("no Kempe chain joins root {index} to root {next}")]
    ChainBroken { index: usize, next: usize },
    #[error("no rooted cycle model inside the relevant color classes")]
    NoModel,
    #[error(transparent)]
    Color(#[from] ColorError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("generation supports 0 <= n <= 11, got {0}")]
    UnsupportedOrder(usize),
    #[error("inconsistent edge bounds: min {min}, max {max}, at most {cap} possible")]
    InconsistentBounds { min: usize, max: usize, cap: usize },
}

#[derive(Debug, Error)]
pub enum CertificateError {
    #[error("certificate is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("model fails revalidation: {0}")]
    Model(#[from] ModelViolation),
    #[error("coloring fails revalidation: {0}")]
    Coloring(#[from] ColorError),
    #[error("revalidation failed: {0}")]
    Revalidation(String),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Pattern(#[from] PatternError),
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("{claim} is defined for {lo} <= n <= {hi}, got {n}")]
    OutOfRange { claim: &'static str, n: usize, lo: usize, hi: usize },
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error("could not start worker pool: {0}")]
    Pool(String),
}
