use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown verb {0:?}; expected pfk, invert, conjugate, roots, hl or verify")]
    UnknownVerb(String),
    #[error("bad series spec {token:?} at position {position}: {message}")]
    BadSpec {
        token: String,
        position: usize,
        message: String,
    },
    #[error("{0:?} is not an exact rational (num/den) or q")]
    BadRational(String),
    #[error("index {k} exceeds truncation order {order}; raise --order")]
    OrderTooSmall { k: usize, order: usize },
    #[error("{0}")]
    Usage(String),
    /// `--help` and `--version`: not an error, but handled on the same path.
    #[error("{0}")]
    Info(String),
    #[error(transparent)]
    Core(#[from] adjoint_core::Error),
}

impl CliError {
    pub(crate) fn from_clap(e: clap::Error) -> Self {
        use clap::error::ErrorKind;
        match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliError::Info(e.render().to_string()),
            _ => CliError::Usage(e.render().to_string().trim_end().to_string()),
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::UnknownVerb(_) => "UNKNOWN_VERB",
            CliError::BadSpec { .. } => "BAD_SPEC",
            CliError::BadRational(_) => "BAD_RATIONAL",
            CliError::OrderTooSmall { .. } => "ORDER_TOO_SMALL",
            CliError::Usage(_) | CliError::Info(_) => "USAGE",
            CliError::Core(e) => e.code(),
        }
    }

    /// The machine-readable payload written to standard output.
    pub fn to_json(&self) -> Value {
        let mut v = json!({ "error": self.code(), "detail": self.to_string() });
        match self {
            CliError::BadSpec { position, .. } => v["position"] = json!(position),
            CliError::Core(adjoint_core::Error::VanishingLeadingCoeff { k }) => {
                v["k"] = json!(k);
                v["hint"] = json!("use zk path");
            }
            _ => {}
        }
        v
    }
}
