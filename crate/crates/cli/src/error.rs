use thiserror::Error;

/// Exit code for a successful run.
pub const EXIT_OK: i32 = 0;
/// A sampled point where the definition and the inequalities disagree.
pub const EXIT_FALSIFIED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;
pub const EXIT_DIMENSION: i32 = 4;
/// The requested shape cannot be a cell.
pub const EXIT_IMPOSSIBLE: i32 = 5;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("unsupported dimension {0}; this command needs planar input")]
    UnsupportedDimension(usize),
    #[error(transparent)]
    Invariant(#[from] kcell::Error),
}

impl CliError {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        CliError::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Usage(_) | CliError::Io { .. } => EXIT_PARSE,
            CliError::UnsupportedDimension(_) => EXIT_DIMENSION,
            CliError::Invariant(_) => EXIT_INVARIANT,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
