use thiserror::Error;

/// Errors produced by graph construction, format codecs, family builders,
/// and certificate machinery.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {0} is not a vertex of the graph")]
    InvalidVertex(usize),
    #[error("({0}, {1}) is not an edge of the graph")]
    MissingEdge(usize, usize),
    #[error("({0}, {1}) is not a valid vertex pair")]
    InvalidEdge(usize, usize),
    #[error("graph order {0} exceeds the supported maximum {1}")]
    OrderTooLarge(usize, usize),
    #[error("order {0} exceeds the configured cap {1}")]
    OverCap(usize, usize),
    #[error("invalid graph6 data: {0}")]
    Graph6(String),
    #[error("invalid graph json: {0}")]
    GraphJson(String),
    #[error("invalid family spec: {0}")]
    Spec(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("graph is not maximal outerplanar")]
    NotMaxOuterplanar,
    #[error("schedule step {index} is not applicable: {reason}")]
    ScheduleStep { index: usize, reason: String },
    #[error("applying the schedule did not produce a K_{0} subgraph")]
    TargetNotReached(usize),
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
