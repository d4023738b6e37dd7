use std::path::PathBuf;

use thiserror::Error;

/// Anything the commands can fail with. `exit_code` groups the variants
/// into the process exit contract: 1 for load and parse failures, 2 when
/// there is nothing to work on.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot write output: {0}")]
    Write(#[from] std::io::Error),
    #[error("{path}: {source}")]
    Load {
        path: PathBuf,
        #[source]
        source: sentilex_core::kb::LoadError,
    },
    #[error("{path} line {line}: {message}")]
    Corpus {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("{path} line {line}: {message}")]
    Gold {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("{path} line {line}: {message}")]
    Predictions {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("corpus {path} contains no feedback")]
    EmptyCorpus { path: PathBuf },
    #[error("no prediction ids matched the gold labels")]
    NoMatchedIds,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::EmptyCorpus { .. } | CliError::NoMatchedIds => 2,
            _ => 1,
        }
    }
}

pub fn read_to_string(path: &std::path::Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.into(), source })
}
