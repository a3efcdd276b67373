use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    #[error("{what}: argument {value} outside the domain ({expected})")]
    Domain {
        what: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("{what}: series diverges at this argument")]
    Divergent { what: &'static str },

    /// A series or quadrature hit its work cap before reaching tolerance.
    /// `estimate` is the best value available when it gave up.
    #[error("{what} did not converge after {work} steps (estimate {estimate:e}, error {error:e})")]
    NoConvergence {
        what: &'static str,
        estimate: f64,
        error: f64,
        work: usize,
    },

    #[error("cannot parse {token:?}: {reason}")]
    Parse { token: String, reason: &'static str },

    /// An asymptotic formula was requested outside its regime.
    #[error("{what} requires {requirement} (x = {x})")]
    Regime {
        what: &'static str,
        requirement: &'static str,
        x: f64,
    },

    #[error("invalid configuration: {0}")]
    Config(String),
}

impl Error {
    pub fn is_convergence(&self) -> bool {
        matches!(self, Error::NoConvergence { .. })
    }
}
