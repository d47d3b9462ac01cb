use thiserror::Error;

/// Error type shared by all solver layers.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid geometry, mismatched meshes, non-divisible intervals and the like.
    #[error("configuration error: {0}")]
    Config(String),

    /// An iterative linear solve ran out of its iteration budget.
    #[error("{system} solve did not converge: residual {residual:e} after {iterations} iterations")]
    SolveFailure {
        system: &'static str,
        residual: f64,
        iterations: usize,
    },

    /// Non-finite values appeared in a state.
    #[error("solution diverged (non-finite values): {0}")]
    Diverged(String),

    /// A fine-slice solve failed inside a parareal iteration.
    #[error("slice {slice} failed at iteration {iteration}: {source}")]
    SliceFailure {
        slice: usize,
        iteration: usize,
        #[source]
        source: Box<Error>,
    },

    /// The parareal iteration error grew past the abort threshold.
    #[error("parareal iteration diverged at k={iteration}: error {error:e} exceeds {limit:e}")]
    PintDiverged {
        iteration: usize,
        error: f64,
        limit: f64,
    },

    /// Wall-clock measurement could not be formed (e.g. zero coarse time).
    #[error("measurement error: {0}")]
    Measurement(String),

    /// File input/output while dumping or loading fields.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Malformed field dump or CSV content.
    #[error("format error: {0}")]
    Format(String),
}

impl Error {
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}
