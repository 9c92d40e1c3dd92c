use thiserror::Error;

/// Errors raised by the analytic solvers and the numerical oracle.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HulthenError {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("radius must be positive, got r = {0}")]
    NonPositiveRadius(f64),

    #[error("invalid state label `{label}`: {reason}")]
    InvalidLabel { label: String, reason: String },

    #[error("pole of the gamma function at x = {0}")]
    GammaPole(f64),

    #[error("hypergeometric lower parameter c = {0} is a non-positive integer")]
    HypergeometricPole(f64),

    #[error("negative radicand {radicand} in {context}")]
    NegativeRadicand { context: &'static str, radicand: f64 },

    #[error("no candidate pi(s) gives tau'(s) < 0")]
    NoDecreasingTau,

    #[error("state n_r = {n_r}, l = {l} has no normalizable eigenfunction ({reason})")]
    NotNormalizable { n_r: u32, l: u32, reason: String },

    #[error("state n_r = {n_r} missing from the {mode} spectrum ({available} bound levels found)")]
    MissingState { n_r: u32, mode: &'static str, available: usize },
}

pub type Result<T> = std::result::Result<T, HulthenError>;
