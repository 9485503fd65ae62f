use thiserror::Error;

/// Failure modes shared by every computation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different coefficient domains ({left} vs {right})")]
    DomainMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("domain {0} is not a field")]
    NotAField(String),
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("constant term must be exactly 1, found {0}")]
    NonunitConstantTerm(String),
    #[error("index {k} exceeds truncation order {order}")]
    KExceedsOrder { k: usize, order: usize },
    #[error("series spec {spec} cannot be realized over {domain}")]
    SpecDomainMismatch { spec: String, domain: String },
    #[error("coefficient a_{k} vanishes; use the zk path")]
    VanishingLeadingCoeff { k: usize },
    #[error("symmetric function list must start with e_0 = 1")]
    BadSymmetrics,
    #[error("invalid series spec: {0}")]
    InvalidSpec(String),
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DomainMismatch { .. } => "DOMAIN_MISMATCH",
            Error::DivisionByZero => "DIVISION_BY_ZERO",
            Error::NotAField(_) => "NOT_A_FIELD",
            Error::BothZero => "BOTH_ZERO",
            Error::NonunitConstantTerm(_) => "NONUNIT_CONSTANT_TERM",
            Error::KExceedsOrder { .. } => "K_EXCEEDS_ORDER",
            Error::SpecDomainMismatch { .. } => "SPEC_DOMAIN_MISMATCH",
            Error::VanishingLeadingCoeff { .. } => "VANISHING_LEADING_COEFF",
            Error::BadSymmetrics => "BAD_SYMMETRICS",
            Error::InvalidSpec(_) => "BAD_SPEC",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
