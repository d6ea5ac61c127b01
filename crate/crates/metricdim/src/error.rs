use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("graph is disconnected, which `{op}` does not accept")]
    Disconnected { op: &'static str },

    #[error("{u}-{v} is not an edge of the graph")]
    NotAnEdge { u: usize, v: usize },

    #[error("graph is not a cactus")]
    NotCactus,

    #[error("graph is a path or a single vertex and has no thread anchors")]
    NoThreadAnchors,

    #[error("graph is a tree; `{op}` requires at least one cycle")]
    TreeInput { op: &'static str },

    #[error("graph has {found} cycles but `{op}` requires at least {required}")]
    TooFewCycles {
        op: &'static str,
        required: usize,
        found: usize,
    },

    #[error("pair universe has {pairs} pairs, exceeding the cap of {cap}")]
    PairUniverseExceeded { pairs: usize, cap: usize },

    #[error("BBR enumeration explored {nodes} candidates, exceeding the cap of {cap}")]
    BbrCapExceeded { nodes: usize, cap: usize },

    #[error("per-graph time budget of {budget_ms} ms exceeded")]
    TimeBudgetExceeded { budget_ms: u64 },

    #[error("minimum degree is {found} but `{op}` requires at least {required}")]
    MinDegree {
        op: &'static str,
        required: usize,
        found: usize,
    },

    #[error("graph is a cycle, which `{op}` excludes")]
    IsCycle { op: &'static str },

    #[error("graph has fewer than {required} vertices")]
    TooSmall { required: usize },

    #[error("set is not biactive on cycle {cycle}")]
    NotBiactive { cycle: usize },

    #[error("internal verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
