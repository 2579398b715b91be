use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed input: bad JSON, bad operation word, bad flag value.
    #[error("{0}")]
    Input(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    /// The document parsed but describes an invalid object.
    #[error("invalid document: {0}")]
    Document(deltaflip::Error),
    /// The computation itself failed.
    #[error("{0}")]
    Math(#[from] deltaflip::Error),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Input(_) => "Input",
            CliError::Io { .. } => "Io",
            CliError::Document(e) | CliError::Math(e) => e.kind(),
        }
    }

    /// 2 for input problems and size guards, 1 for mathematical failures.
    pub fn exit_code(&self) -> u8 {
        use deltaflip::Error as E;
        match self {
            CliError::Input(_) | CliError::Io { .. } | CliError::Document(_) => 2,
            CliError::Math(E::SizeLimit { .. } | E::CapExceeded { .. } | E::GroundTooLarge(_)) => 2,
            CliError::Math(_) => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
