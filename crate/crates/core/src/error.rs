use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid run description: bad extents, unknown names, parameters out of range.
    #[error("configuration error ({key}): {message}")]
    Config { key: String, message: String },

    /// Physically or numerically invalid state reached during a run.
    #[error("state error at step {step}: {message}")]
    State { step: usize, message: String },

    /// Non-finite input data (initial profiles, interior values).
    #[error("data error: {0}")]
    Data(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn config(key: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            key: key.into(),
            message: message.into(),
        }
    }

    pub fn state(step: usize, message: impl Into<String>) -> Self {
        Error::State {
            step,
            message: message.into(),
        }
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config { .. } => 2,
            Error::State { .. } | Error::Data(_) => 3,
            Error::Io(_) | Error::Csv(_) | Error::Json(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
