//! Error taxonomy shared across the crate.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum QpwError {
    #[error("denominator of {value} is not a power of {prime}")]
    NotPPower { prime: u32, value: String },

    #[error("cannot split a ball of radius exponent {gamma} into coarser radius {gamma_target}")]
    BadSplit { gamma: i64, gamma_target: i64 },

    #[error("division by zero scalar")]
    DivisionByZero,

    #[error("gamma parameter is not of unit modulus")]
    NonUnitGamma,

    #[error("Kozyrev index k={k} out of range for p={p}")]
    KozyrevIndexOutOfRange { p: u32, k: u32 },

    #[error("leading digit s_0 of a generalized Kozyrev frequency must be nonzero")]
    ZeroLeadingDigit,

    #[error("operator input is not a Lizorkin function (nonzero integral)")]
    NotLizorkin,

    #[error("symbol constancy certificate violated near {context}")]
    CertificateViolation { context: String },

    #[error("eigenvalue requested but the eigenfunction criterion fails")]
    CriterionFails,

    #[error("malformed wavelet index: {0}")]
    BadWaveletIndex(String),

    #[error("zero function has no local constancy parameters")]
    ZeroFunction,

    #[error("mismatched prime or dimension")]
    Mismatch,

    #[error("{0}")]
    Parse(String),
}
