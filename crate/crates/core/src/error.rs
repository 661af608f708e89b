//! Error type shared by all lab subsystems.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by geometry construction, certificate selection, solvers,
/// and sweep post-processing.
#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the operation's domain (nonpositive thickness, point
    /// outside an end, nonpositive coefficient, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A geometric invariant was violated (curve amplitude bound, ...).
    #[error("geometry error: {0}")]
    Geometry(String),

    /// An exponent constraint of the asymptotic regime was violated.
    #[error("constraint violated: {0}")]
    Constraint(String),

    /// Mesh construction failed (too coarse, degenerate cells, ...).
    #[error("mesh error: {0}")]
    Mesh(String),

    /// No admissible CGO direction: the domain is not contained in a strict
    /// angular sector seen from the origin.
    #[error("sector error: {0}")]
    Sector(String),

    /// Unknown boundary segment tag.
    #[error("unknown boundary tag: {0}")]
    Tag(String),

    /// The medium contrast q - 1 crosses zero.
    #[error("singular medium: {0}")]
    SingularMedium(String),

    /// Transmission boundary conditions violated beyond tolerance.
    #[error("boundary data error: {0}")]
    BoundaryData(String),

    /// Outside the asymptotic regime: a lower-bound factor became nonpositive.
    #[error("regime error: {0}")]
    Regime(String),

    /// A certified lower bound was violated by the measured integral.
    #[error("bound violated: {0}")]
    BoundViolated(String),

    /// Degenerate sweep input (too few points, unordered epsilons, ...).
    #[error("sweep error: {0}")]
    Sweep(String),

    /// Log-log fit impossible (nonpositive values).
    #[error("fit error: {0}")]
    Fit(String),

    /// Iterative solver failed to converge.
    #[error("solver error: {0}")]
    Solver(String),

    /// Medium grid violates solvability conditions.
    #[error("medium error: {0}")]
    Medium(String),

    /// Far-field records use incompatible conventions.
    #[error("convention mismatch: {0}")]
    Convention(String),
}
