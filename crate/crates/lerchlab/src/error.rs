use thiserror::Error;

/// Everything that can go wrong while evaluating or verifying.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum LerchError {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("series did not converge within {terms} terms (last tail bound {bound:e})")]
    NonConvergence { terms: usize, bound: f64 },

    #[error("acceleration failed to stabilize: last difference {last_diff:e}, target {target:e}")]
    AccelerationFailure { last_diff: f64, target: f64 },

    #[error("degenerate parameters: {0}")]
    Degenerate(String),

    #[error("pole at s = {0}")]
    Pole(String),

    #[error("point ({a}, {c}) lies on the discontinuity lattice with denominator {d}")]
    GridPoint { a: f64, c: f64, d: u64 },

    #[error("point ({a}, {c}) is within the stencil width of the discontinuity lattice")]
    LatticeProximity { a: f64, c: f64 },

    #[error("stencil step {0:e} is too small")]
    StepUnderflow(f64),

    #[error("no commutation relation is known for the pair ({0}, {1})")]
    UnknownPair(String, String),

    #[error("identity violated: {0}")]
    IdentityViolation(String),

    #[error("quadrature failure: {0}")]
    Quadrature(String),

    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, LerchError>;
