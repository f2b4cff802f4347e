use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("quadrature failed to converge: estimate {estimate:e}, error {error:e} after {subdivisions} subdivisions")]
    QuadratureFailure {
        estimate: f64,
        error: f64,
        subdivisions: usize,
    },

    #[error("SCF did not converge after {iterations} iterations (last energy {energy:.12})")]
    ScfNotConverged { iterations: usize, energy: f64 },

    #[error("optimizer exceeded {max_iterations} iterations")]
    OptimizerExceeded { max_iterations: usize },

    #[error("system too large: {qubits} qubits exceeds the dense limit of {limit}")]
    TooManyQubits { qubits: usize, limit: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}
