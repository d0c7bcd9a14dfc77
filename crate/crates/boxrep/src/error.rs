use thiserror::Error;

/// Errors produced by graph construction, representation building and the
/// exact solvers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("loop edge ({0},{0}) is not allowed")]
    LoopEdge(usize),
    #[error("duplicate edge ({0},{1}) in simple graph")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex sets of the inputs do not match ({left} vs {right})")]
    VertexCountMismatch { left: usize, right: usize },
    #[error("expected a nonempty list of graphs")]
    EmptyGraphList,
    #[error("order is not a permutation of the vertex set")]
    NotAPermutation,
    #[error("coloring is not proper: edge ({0},{1}) is monochromatic")]
    ImproperColoring(usize, usize),
    #[error("partition block {block} violates the critical-clique precondition")]
    NotACriticalClique { block: usize },
    #[error("partition does not cover the vertex set exactly")]
    InvalidPartition,
    #[error("hypercube dimension {dim} exceeds cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("graph has no edges")]
    EdgelessGraph,
    #[error("interval has l > r: [{0},{1}]")]
    BadInterval(i64, i64),
    #[error("box representation must have at least one dimension")]
    NoDimensions,
    #[error("box representation is not valid for the target graph")]
    InvalidRepresentation,
    #[error("ground set size must be at least 1")]
    EmptyGroundSet,
    #[error("beta is undefined for s = t (= {0})")]
    BetaEqualElements(usize),
    #[error("element {element} out of range for ground set [{n}]")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("exhaustive search supports 2 <= n <= {max}, got {n}")]
    SearchSizeUnsupported { n: usize, max: usize },
    #[error("no simply 3-suitable family of size <= {cap} exists for n = {n}")]
    SearchCapExceeded { n: usize, cap: usize },
    #[error("original vertices {0} and {1} share a {2} endpoint in dimension {3}")]
    TiedEndpoints(usize, usize, &'static str, usize),
    #[error("subdivided complete graph needs n >= 2, got {0}")]
    CompleteTooSmall(usize),
    #[error("sides do not partition the vertex set")]
    NotAPartitionIntoSides,
    #[error("side is not independent: edge ({0},{1}) inside it")]
    SideNotIndependent(usize, usize),
    #[error("degree-2 hypothesis violated: vertex {vertex} has degree {degree}")]
    DegreeHypothesis { vertex: usize, degree: usize },
    #[error("vertices {0} and {1} of the de-cliqued side have identical neighborhoods")]
    DuplicateNeighborhoods(usize, usize),
    #[error("monochromatic neighbor bound violated at vertex {0}; input is not a line graph coloring")]
    MonochromaticBound(usize),
    #[error("graph exceeds oracle cap: {what} = {value}, cap = {cap}")]
    OracleCap {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("isolated vertex ids must extend the domain densely")]
    BadIsolatedIds,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
