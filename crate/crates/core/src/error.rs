use thiserror::Error;

/// Errors produced by the invariant calculators.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("orbifold is not hyperbolic (chi_orb = {chi})", chi = .0)]
    NonHyperbolic(crate::rational::Rational),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("bundle data misaligned with curve: {0}")]
    Misaligned(String),
    #[error("non-integral sheaf Euler characteristic {0}: corrupted bundle data")]
    NonIntegralChi(crate::rational::Rational),
    #[error("invalid permutation action: {0}")]
    InvalidAction(String),
    #[error("signature parse error at byte {offset}: expected {expected}")]
    Parse { offset: usize, expected: String },
}

pub type Result<T> = std::result::Result<T, Error>;
