use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("exponent {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("edge {from}->{to} has cost {cost}; unit costs required")]
    NonUnitCost { from: usize, to: usize, cost: u64 },

    #[error("edge {from}->{to} has zero cost")]
    ZeroCost { from: usize, to: usize },

    #[error("no vertex reaches (or is reached by) every other vertex")]
    NoCenter,

    #[error("graph is not strongly connected; bottleneck value undefined")]
    NotStronglyConnected,

    #[error("graph bottleneck needs at least two vertices")]
    Degenerate,

    #[error("infeasible request: {0}")]
    Infeasible(String),

    #[error("vertex index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("exhaustive path enumeration limited to n <= {limit}, got n = {n}")]
    TooLargeForEnumeration { n: usize, limit: usize },
}

impl Error {
    /// Domain errors describe the input graph (no center, not strongly
    /// connected, ...) rather than malformed input or misuse.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::NoCenter
                | Error::NotStronglyConnected
                | Error::Degenerate
                | Error::NonUnitCost { .. }
                | Error::ZeroCost { .. }
        )
    }
}
