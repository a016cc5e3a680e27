use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("momentum has zero frequency (k0 = 0)")]
    ZeroFrequency,
    #[error("momentum is not lightlike: k1²+k2²+k3² = {spatial} but k0² = {energy}")]
    NotLightlike { spatial: String, energy: String },
    #[error("momentum is off the mass shell: k² = {k_sq}, expected -m² = {expected}")]
    OffShell { k_sq: String, expected: String },
    #[error("mass must be positive, got {0}")]
    NonPositiveMass(String),
    #[error("kappa must be nonzero")]
    ZeroKappa,
    #[error(
        "matrix is not rank one: 2×2 minor at rows ({r0},{r1}) columns ({c0},{c1}) is {value}"
    )]
    NotRankOne {
        r0: String,
        r1: String,
        c0: String,
        c1: String,
        value: String,
    },
    #[error("matrix is not rank one: it is the zero matrix")]
    ZeroMatrix,
    #[error("rank-one matrix has zero trace, cannot be normalized as a dyad")]
    ZeroTrace,
    #[error("the two routes to the spin-squared operator disagree; max residual {0}")]
    SpinFormMismatch(String),
    #[error("no annihilating polynomial of degree ≤ {0}")]
    NoMinimalPolynomial(usize),
    #[error("{0}")]
    Parse(String),
}

impl Error {
    /// Errors caused by malformed user input rather than a failed identity.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::ZeroFrequency
                | Error::NotLightlike { .. }
                | Error::OffShell { .. }
                | Error::NonPositiveMass(_)
                | Error::ZeroKappa
                | Error::Parse(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
