use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("writing output: {0}")]
    Write(#[from] std::io::Error),
    #[error("writing csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Math(iklp_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Math(_) => 1,
            CliError::Io { .. } | CliError::Write(_) | CliError::Csv(_) => 3,
        }
    }
}

/// Bad parameters are the caller's fault; anything else from the core is a
/// mathematical finding.
impl From<iklp_core::Error> for CliError {
    fn from(e: iklp_core::Error) -> Self {
        use iklp_core::Error as E;
        match e {
            E::InvalidParams(_)
            | E::InvalidRank { .. }
            | E::InvalidRange { .. }
            | E::DegreeExceedsN { .. }
            | E::LengthTooShort { .. }
            | E::NegativeInput { .. }
            | E::NegativeLeadingCoefficient(_)
            | E::ZeroPolynomial => CliError::Usage(e.to_string()),
            other => CliError::Math(other),
        }
    }
}
