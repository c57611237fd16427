//! Error taxonomy for the whole crate.
//!
//! Every failure mode a caller can act on gets its own variant with enough
//! context to diagnose the run without re-running it. Numerical guards fail
//! loudly here instead of silently degrading accuracy.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    // ===== grids and discretizations =====
    /// A requested grid could not be built (bad bounds, too few points, …).
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// An eigenfunction has not decayed below the decay tolerance at the
    /// artificial boundary; the domain is too narrow for the requested mode.
    #[error("grid too narrow: |ψ| = {boundary_mass:.3e} at the boundary (tolerance {tol:.1e}); widen the domain")]
    GridTooNarrow { boundary_mass: f64, tol: f64 },

    /// Two grids that must coincide (e.g. an operator and a field living on
    /// it) do not.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    // ===== 1D eigen solves =====
    /// Bisection/bracketing of an eigenvalue failed to converge.
    #[error("eigenvalue bracketing failed: {0}")]
    BracketingFailed(String),

    /// A computed ground state changes sign; the solver lost track of the
    /// lowest mode.
    #[error("ground state not positive: min component {min:.3e} after sign normalization")]
    NonPositiveGroundState { min: f64 },

    /// Band minimization found a point where the second difference is not
    /// positive; the scan bracket does not contain a non-degenerate minimum.
    #[error("band not convex at candidate minimum ξ = {xi:.6}: second difference {second_diff:.3e}")]
    NonConvexAtMinimum { xi: f64, second_diff: f64 },

    /// Iterative eigensolver did not reach its residual target.
    #[error("eigensolver failed to converge: {0}")]
    ConvergenceFailure(String),

    // ===== resolvent / moments =====
    /// The deflated linear system lost its definiteness or the refinement
    /// stalled; the regularized resolvent cannot be applied reliably.
    #[error("singular or ill-conditioned deflated system: {0}")]
    SingularSystem(String),

    /// Moment order outside the implemented range.
    #[error("unsupported moment order n = {n} (supported: 0 ≤ n ≤ 3)")]
    UnsupportedMoment { n: u32 },

    /// A cross-check identity failed beyond its tolerance.
    #[error("invariant violated: {name}: |residual| = {residual:.3e} > {tol:.1e}")]
    InvariantViolation {
        name: &'static str,
        residual: f64,
        tol: f64,
    },

    // ===== geometry =====
    /// Curve parameters out of range (non-positive radius, |coefficients|
    /// too large, wrong number of samples, …).
    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    /// The curve intersects itself or fails the embedding checks.
    #[error("curve is not embedded: {0}")]
    NonEmbedded(String),

    /// Curvature is (numerically) constant: no well structure exists.
    #[error("degenerate curvature: relative variation {variation:.3e} below {tol:.1e}")]
    DegenerateCurvature { variation: f64, tol: f64 },

    /// The curvature does not have exactly two symmetric global maxima.
    #[error("double-well validation failed: {0}")]
    WellValidationFailed(String),

    // ===== effective potential / tunneling =====
    /// The effective potential went negative beyond round-off, violating
    /// V = scale·(k_max − k) ≥ 0.
    #[error("effective potential negative: min V = {min:.3e} at s = {at:.6}")]
    NegativePotential { min: f64, at: f64 },

    /// Edge constants degenerate (μ″ ≤ 0 or M3 ≥ 0): the mini-well picture
    /// does not apply.
    #[error("degenerate edge constants: {0}")]
    DegenerateConstants(String),

    /// A quadrature's Richardson error estimate stayed above target.
    #[error("quadrature not converged: {name}: error estimate {err:.3e} > {tol:.1e}")]
    QuadratureNotConverged {
        name: &'static str,
        err: f64,
        tol: f64,
    },

    /// A symmetry that must hold (even curve, equal well depths, …) fails.
    #[error("symmetry violated: {0}")]
    SymmetryViolation(String),

    // ===== effective 1D operator =====
    /// The eigenvalue gap is at or below the solver noise floor; an
    /// exponent fit on it would be meaningless.
    #[error("gap {gap:.3e} below noise floor {floor:.3e} at h = {h:.5}")]
    GapBelowNoiseFloor { gap: f64, floor: f64, h: f64 },

    /// A least-squares fit was requested on an ill-conditioned design.
    #[error("fit ill-conditioned: {0}")]
    FitIllConditioned(String),

    // ===== WKB =====
    /// Quasimode order outside the constructed range.
    #[error("quasimode order N = {n} not available (constructed through N = 3)")]
    OrderNotAvailable { n: u32 },

    /// The local series start of the transport equation failed (degenerate
    /// well data).
    #[error("transport series start failed: {0}")]
    SingularStartFailure(String),

    // ===== 2D operator =====
    /// The curve-coordinate weight 1 − ℏ c_μ(τ) τ k(σ) dropped below its
    /// positivity guard somewhere on the grid.
    #[error("weight not positive: min 𝔞 = {min:.4} < guard {guard:.2} (ℏ = {hbar:.4}, k_max = {k_max:.4})")]
    WeightNotPositive { min: f64, guard: f64, hbar: f64, k_max: f64 },

    /// A grid-level guard failed (resolution, boundary mass, cutoff).
    #[error("grid guard failed: {0}")]
    GridGuardFailure(String),

    /// The one-sided curvature extension is not unimodal after blending.
    #[error("curvature extension not unimodal: {0}")]
    ExtensionNotUnimodal(String),

    // ===== I/O =====
    /// Malformed tabulated-curve input.
    #[error("curve table error: {0}")]
    CurveTable(String),

    /// Underlying I/O error (tabulated curves, report export).
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
