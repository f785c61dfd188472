use thiserror::Error;

use crate::label::Label;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A table has the wrong shape or an entry that is not a valid position.
    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("unknown {kind} label `{label}`")]
    UnknownLabel { kind: &'static str, label: Label },

    #[error("duplicate {kind} label `{label}`")]
    DuplicateLabel { kind: &'static str, label: Label },

    #[error("soft sets are not over a common universe")]
    UniverseMismatch,

    #[error("structures do not share an identically ordered Γ")]
    GammaMismatch,

    #[error("strict mode requires Γ addition table")]
    StrictModeRequiresGammaAdd,

    #[error("operation requires a designated zero")]
    MissingZero,

    #[error("carrier of size {size} exceeds the bound {bound}")]
    CarrierTooLarge { size: usize, bound: usize },

    #[error("empty family of soft sets")]
    EmptyFamily,

    /// Restricted operations need `⋂ Wᵢ ≠ ∅`.
    #[error("parameter sets have an empty intersection (Z = W ∩ Y ≠ ∅ violated)")]
    EmptyParameterIntersection,

    #[error("soft function compatibility fails at parameter `{parameter}`")]
    IncompatibleSoftFunction { parameter: Label },

    #[error("soft functions do not chain: target of the first is not the source of the second")]
    SoftFunctionChainMismatch,

    #[error("map is not a Γ-semiring homomorphism")]
    NotAHomomorphism,

    #[error("homomorphism is not onto")]
    NotOnto,

    #[error("not a soft Γ-semiring: {0}")]
    NotSoftGammaSemiring(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("instance generation failed: {0}")]
    Generation(String),

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Errors that come from the algebra refusing a well-formed request rather
    /// than from malformed input.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::EmptyParameterIntersection
                | Error::IncompatibleSoftFunction { .. }
                | Error::SoftFunctionChainMismatch
                | Error::NotAHomomorphism
                | Error::NotOnto
                | Error::NotSoftGammaSemiring(_)
                | Error::CarrierTooLarge { .. }
                | Error::Generation(_)
        )
    }
}
