use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cycle detected through `{0}`")]
    CycleDetected(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("`{0}` and `{1}` are not comparable as an interval (need {0} <= {1})")]
    NotComparable(String, String),
    #[error("instance is not bounded")]
    NotBounded,
    #[error("relation endpoints differ: {0}")]
    RelationEndpointMismatch(String),
    #[error("generator `{0}` is decomposable")]
    GeneratorDecomposable(String),
    #[error("facet ordering does not list every facet exactly once")]
    IncompleteOrdering,
    #[error("search bound exceeded: {size} > {bound}")]
    SearchBoundExceeded { size: usize, bound: usize },
    #[error("prefix condition violated between `{0}` and `{1}`")]
    PrefixViolation(String, String),
    #[error("zero element has no leading term")]
    ZeroElement,
    #[error("monomial order cannot separate `{0}` and `{1}`")]
    IncomparableTie(String, String),
    #[error("no maximal chain carries `{0}`")]
    NoCarrier(String),
    #[error("monomial order is not total: {0}")]
    OrderNotTotal(String),
    #[error("element `{0}` is not in the parallel ideal")]
    NotInIdeal(String),
    #[error("path enumeration exceeded the bound of {bound} paths")]
    PathBoundExceeded { bound: usize },
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("sweep budget exceeded: {needed} pairs > budget {budget}")]
    SweepBudgetExceeded { needed: u64, budget: u64 },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid instance: {0}")]
    Validation(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
