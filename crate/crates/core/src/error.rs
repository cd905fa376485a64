use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("alpha must lie strictly inside (0, 1), got {0}")]
    AlphaOutOfRange(f64),

    #[error("y must lie in [0, 1], got {0}")]
    YOutOfRange(f64),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("adaptive quadrature did not reach tolerance {tolerance:e} within depth {max_depth}")]
    QuadratureNonConvergence { tolerance: f64, max_depth: u32 },

    #[error("degree of difficulty is negative: {terms} terms for {variables} variables")]
    DegreeOfDifficultyNegative { terms: usize, variables: usize },

    #[error("dual problem is infeasible: {0}")]
    InfeasibleDual(String),

    #[error("dual objective is unbounded (the primal problem is infeasible)")]
    UnboundedDual,

    #[error("dual solver did not converge after {iterations} iterations (gradient norm {gradient_norm:e})")]
    NonConvergence {
        iterations: usize,
        gradient_norm: f64,
    },

    #[error("primal recovery system has rank {rank} < {variables}")]
    RankDeficient { rank: usize, variables: usize },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameters(msg.into())
    }
}

pub(crate) fn check_open_unit(alpha: f64) -> Result<f64> {
    if alpha > 0.0 && alpha < 1.0 {
        Ok(alpha)
    } else {
        Err(Error::AlphaOutOfRange(alpha))
    }
}
