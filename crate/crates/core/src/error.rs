use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A part of size zero, or a negative part or multiplicity.
    #[error("invalid partition entry: {0}")]
    Domain(String),

    #[error("malformed partition token {token:?}: {reason}")]
    Syntax { token: String, reason: String },

    #[error("invalid parameters: {0}")]
    Params(String),

    /// A bare multiplicity that cannot be split into `M*v + g`.
    #[error(
        "multiplicity {multiplicity} lies in residue class j = {class} and must be at least {threshold}"
    )]
    DisallowedMultiplicity {
        multiplicity: u64,
        class: u64,
        threshold: u64,
    },

    /// A partition outside the restricted-multiplicity family.
    #[error(
        "part {part} has multiplicity {multiplicity} in residue class j = {class}, below threshold {threshold}"
    )]
    MultiplicityViolation {
        part: u64,
        multiplicity: u64,
        class: u64,
        threshold: u64,
    },

    /// A partition outside the congruence-restricted family.
    #[error("part {part} is forbidden: it is not divisible by {p} and not congruent to -s*{block} mod {modulus}")]
    ForbiddenPart {
        part: u64,
        p: u64,
        block: u64,
        modulus: u64,
    },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("{what} {value} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },
}
