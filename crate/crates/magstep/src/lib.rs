//! Spectral toolkit for a two-dimensional magnetic Laplacian whose magnetic
//! field takes two constant values on the two sides of a smooth closed curve
//! (a "magnetic step"), together with the one-dimensional reductions that
//! govern its low-lying spectrum in the semiclassical limit.
//!
//! # Overview
//!
//! The operator under study is `(ih∇ + A)²` on the plane, with magnetic field
//! `B = 1` inside a smooth closed curve Γ and `B = a ∈ (−1, 0)` outside.
//! States with energy below the essential spectrum `[|a|h, ∞)` concentrate
//! along Γ, and their analysis factorizes into:
//!
//! * [`model1d`] — the fiber family on the line, `−d²/dτ² + (ξ + b_a(τ)τ)²`
//!   with `b_a = 1` for `τ > 0` and `b_a = a` for `τ < 0`; its band function
//!   `μ_a(ξ)`, band minimum `β_a = μ_a(ζ_a)`, and the Neumann (de Gennes)
//!   analogue on the half-line.
//! * [`moments`] — weighted moments of the band ground state, the regularized
//!   resolvent at the band minimum, and the closed-form identities tying them
//!   together; packaged as [`model1d::EdgeConstants`].
//! * [`geometry`] — arc-length models of the interface curve, curvature
//!   extrema (the "wells"), circulation and flux data.
//! * [`tunneling`] — the curvature-induced effective double-well potential on
//!   Γ, Agmon actions and amplitude prefactors, and the closed-form
//!   tunneling-splitting prediction with its flux-driven interference phase.
//! * [`effective1d`] — a periodic 1D effective operator on Γ whose eigenvalue
//!   gap reproduces the predicted splitting; used to fit actions numerically.
//! * [`wkb`] — single-well quasimodes in curve coordinates: transport and
//!   phase equations, profile construction through third order, and residual
//!   certification against the exact conjugated operator.
//! * [`operator2d`] — direct discretizations of the curve-coordinate operator
//!   (single-well line model and full periodic model) with structured
//!   Hermitian eigensolvers, used to cross-validate every closed form above.
//!
//! Support modules: [`grid`] (1D grids), [`quad`] (quadrature), [`linalg`]
//! (tridiagonal/banded/deflated solvers), [`tolerances`] (every numeric
//! threshold, named and documented), [`errors`], and [`validate`] (the
//! end-to-end acceptance suite shared by the test harness and the CLI).
//!
//! # Conventions
//!
//! Throughout, `h` is the physical semiclassical parameter, `ℏ = h^{1/2}` the
//! tangential one; eigenvalues of the curve-coordinate models are normalized
//! as `λ/h` unless a function says otherwise. All computations are
//! deterministic: identical inputs produce bit-identical outputs (seeded
//! start vectors, fixed iteration controls, no wall-clock dependence).

pub mod errors;
pub mod grid;
pub mod linalg;
pub mod quad;
pub mod tolerances;

pub mod effective1d;
pub mod geometry;
pub mod model1d;
pub mod moments;
pub mod operator2d;
pub mod tunneling;
pub mod validate;
pub mod wkb;

pub use errors::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
