use crate::predictor::SaddleSolution;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A parameter or configuration value is invalid.
    #[error("invalid configuration: {0}")]
    Config(String),
    /// A runtime input (vector, matrix, scalar) violates a precondition.
    #[error("invalid input: {0}")]
    Input(String),
    /// An objective evaluation produced a non-finite value.
    #[error("objective evaluation failed: {0}")]
    Evaluation(String),
    /// The saddle-point solver exhausted its iteration budget. The best
    /// iterate found so far is attached for diagnostics.
    #[error("saddle solver did not converge: {detail}")]
    SaddleNonConvergence {
        detail: String,
        best: Box<SaddleSolution>,
    },
    /// A scalar optimum kept landing on a bracket edge even after the
    /// allowed number of bracket growths.
    #[error("bracket for {variable} exhausted at {edge}; grow the bracket and retry")]
    BracketExhausted { variable: &'static str, edge: f64 },
    /// The normal equations are singular (rank-deficient channel at zeta = 0).
    #[error("linear system is singular; use zeta > 0 or a full-rank channel")]
    SingularSystem,
    /// Every trial of a scenario failed.
    #[error("all {0} trials of the scenario failed")]
    AllTrialsFailed(usize),
    /// A regularizer search probe failed; the offending zeta is attached.
    #[error("optimal-zeta probe failed at zeta = {zeta}: {source}")]
    ZetaProbe {
        zeta: f64,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
