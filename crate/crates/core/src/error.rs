use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid rational: {0}")]
    BadRational(String),

    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),

    #[error("unknown edge {0:?}")]
    UnknownEdge(String),

    #[error("vertex {0:?} lies in no edge and cannot be covered")]
    Uncoverable(String),

    #[error("{0}")]
    Precondition(String),

    #[error("hypergraph is not reduced: {0}")]
    NotReduced(String),

    #[error("multi-intersection precondition violated: edges {edges:?} intersect in {size} > {bound} vertices")]
    MiwidthExceeded {
        edges: Vec<String>,
        size: usize,
        bound: usize,
    },

    #[error("budget of {budget} exceeded while {what}; retry with smaller parameters or a coarser variant")]
    BudgetExceeded { budget: usize, what: String },

    #[error("{what} needs |{quantity}| <= {cap} but got {actual}; raise the cap flag to override")]
    CapExceeded {
        what: String,
        quantity: String,
        cap: usize,
        actual: usize,
    },

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("assignment falsifies clause {0} of the formula")]
    Unsatisfied(usize),

    #[error("{0}")]
    Lp(String),
}
