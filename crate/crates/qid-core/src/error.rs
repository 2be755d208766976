use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QidError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar from {0:?}")]
    Parse(String),
    #[error("degenerate q: (q;q) factor vanishes below order {0}")]
    DegenerateQ(usize),
    #[error("coincident points in slots {slot} and {}", slot + 1)]
    CoincidentPoints { slot: usize },
    #[error("c-singular pair: x_{slot} * x_{} = c", slot + 1)]
    SingularPair { slot: usize },
    #[error("zero coordinate in slot {slot} with c != 0")]
    ZeroCoordinate { slot: usize },
    #[error("function of arity {need} evaluated at a tuple of length {got}")]
    Arity { need: usize, got: usize },
    #[error("degenerate nodes: {0}")]
    DegenerateNodes(String),
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("coefficients violate f_(n-m) = c^m f_(n+m) at m = {0}")]
    NotBcSymmetric(usize),
    #[error("wrong path: {0}")]
    WrongPath(String),
    #[error("matrix is {rows}x{cols}, expected square")]
    Shape { rows: usize, cols: usize },
    #[error("index out of range: {0}")]
    Index(String),
    #[error("sampler exhausted after {attempts} rejections: {reason}")]
    SamplerExhausted { attempts: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, QidError>;
