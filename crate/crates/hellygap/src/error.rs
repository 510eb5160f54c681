use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("empty target set")]
    EmptyTargetSet,
    #[error("slice index {k} out of range 0..={max}")]
    SliceOutOfRange { k: u32, max: u32 },
    #[error("graph power requires k >= 1")]
    InvalidPower,
    #[error("vertex mapping is not injective")]
    NonInjectiveMap,
    #[error("metric function has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("hull size guard exceeded: more than {guard} extremal functions ({found} found so far)")]
    GuardExceeded { guard: usize, found: usize },
    #[error("oracle budget exceeded: {0} radius functions")]
    OracleBudget(u128),
    #[error("subset iteration requires n <= {max}, got n = {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("invalid generator parameters: {0}")]
    InvalidFamilySpec(String),
    #[error("unknown report format: {0}")]
    UnknownFormat(String),
    #[error("shortest-path enumeration guard exceeded ({0} paths)")]
    PathGuardExceeded(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
