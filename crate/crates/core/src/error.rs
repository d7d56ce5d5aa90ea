use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("count must be positive, got {0}")]
    NonPositiveCount(f64),

    #[error("time order violated: t2 ({t2}) must be later than t1 ({t1})")]
    TimeOrder { t1: f64, t2: f64 },

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("path length must exceed 1 (log base undefined), got {0}")]
    DegenerateBase(f64),

    #[error("proportion must lie in {range}, got {value}")]
    BadProportion { value: f64, range: &'static str },

    #[error("graph is disconnected: {unreachable} node pairs have no path")]
    Disconnected { unreachable: u64 },

    #[error("need at least 2 nodes, got {0}")]
    TooSmall(usize),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid small-world spec: {0}")]
    BadSpec(String),

    #[error("division by zero: {0}")]
    DivisionByZero(&'static str),

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("bad ordering: {0}")]
    BadOrdering(String),

    #[error("unknown dataset key `{0}`")]
    MissingKey(String),

    #[error("dataset key `{key}` holds a {found}, not a {wanted}")]
    WrongPayload {
        key: String,
        wanted: &'static str,
        found: &'static str,
    },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("validation error at line {line}: {source}")]
    Validation { line: usize, source: Box<Error> },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub(crate) fn ensure_finite(value: f64, what: &str) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::DegenerateInput(format!(
            "{what} must be finite, got {value}"
        )))
    }
}
