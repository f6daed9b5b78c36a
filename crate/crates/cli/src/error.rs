use std::fmt;

use surplus_core::Error as CoreError;

/// Process exit status for each failure class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitKind {
    Usage = 1,
    Parse = 2,
    Precondition = 3,
    Internal = 4,
}

impl ExitKind {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub kind: ExitKind,
    pub message: String,
}

pub type CliResult<T> = Result<T, CliError>;

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            kind: ExitKind::Usage,
            message: message.into(),
        }
    }

    pub fn parse(message: impl Into<String>) -> Self {
        Self {
            kind: ExitKind::Parse,
            message: message.into(),
        }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        Self {
            kind: ExitKind::Internal,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        use CoreError::*;
        let kind = match &e {
            Parse { .. } | SelfLoop(_) | DuplicateEdge(..) | VertexOutOfRange { .. } => ExitKind::Parse,
            NotSparse { .. } | IsolatedVertex(_) | NotRegular | TooLarge { .. } | NotAnEdge(..) => {
                ExitKind::Precondition
            }
            InvalidEpsilon(_)
            | NonPositiveC(_)
            | InvalidAlpha(_)
            | InvalidTau(_)
            | InvalidInput(_)
            | InvalidSize(_)
            | InvalidProbability(_)
            | NotPrime(_)
            | KOutOfRange { .. }
            | KstTooLarge { .. } => ExitKind::Usage,
            LengthMismatch { .. } | ArcsinDomain { .. } | InvalidPartialCut(_) | NoConvergence(_) => {
                ExitKind::Internal
            }
        };
        Self {
            kind,
            message: e.to_string(),
        }
    }
}
