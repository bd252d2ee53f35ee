use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the toolkit can report.
///
/// The CLI maps these onto exit codes: usage and parse problems exit with 1,
/// capacity problems with 2.
#[derive(Debug, Error)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// Exact distance search gave up; carries the best deletion set found.
    #[error(
        "distance search budget of {budget} subsets exhausted for {class}; best upper bound k={} via {{{}}}",
        upper_bound.len(),
        upper_bound.join(",")
    )]
    DistanceBudget {
        class: String,
        budget: u64,
        upper_bound: Vec<String>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }

    pub(crate) fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity(_) | Error::DistanceBudget { .. })
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        if self.is_capacity() {
            2
        } else {
            1
        }
    }
}
