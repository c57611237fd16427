//! Every numeric threshold used by the crate, in one place.
//!
//! Each constant documents what it guards and why the value is what it is;
//! solver code must reference these rather than hard-coding literals, so a
//! tolerance change is a one-line diff with a visible blast radius.

// ===== generic iteration controls =====

/// Relative width at which eigenvalue bisection stops:
/// `(b − a) < 2·EPS·max(|mid|, 1)`. Machine-precision level; bisection on a
/// Sturm count is backward stable so there is no reason to stop earlier.
pub const BISECTION_REL_EPS: f64 = 4.0 * f64::EPSILON;

/// Hard cap on bisection iterations. 52 halvings exhaust an f64 mantissa
/// starting from an O(1) bracket; 200 leaves a wide safety margin for
/// brackets that start several orders larger.
pub const BISECTION_MAX_ITER: usize = 200;

/// Pivot guard for LDLᵀ Sturm counts: pivots smaller in magnitude than this
/// (relative to the matrix scale) are clamped so the recurrence never
/// divides by an exact zero. Standard Sturm-bisection practice.
pub const STURM_PIVOT_GUARD: f64 = 1e-300;

/// Inverse-iteration convergence: relative eigen-residual
/// `‖(T − λ)v‖ / ‖T‖` below this accepts the vector. A tridiagonal solve is
/// backward stable, so two or three iterations reach this level.
pub const INVERSE_ITER_RESIDUAL: f64 = 1e-12;

/// Maximum inverse-iteration sweeps before declaring failure.
pub const INVERSE_ITER_MAX: usize = 8;

// ===== 1D model grids =====

/// Half-width of the whole-line τ-domain. Band ground states decay like
/// Gaussians; at |τ| = 30 the mass is far below round-off for every a in
/// the admissible range and every ξ the minimizer visits.
pub const WHOLE_LINE_HALF_WIDTH: f64 = 30.0;

/// Panels per side of the *fine* whole-line grid (nodes = 2·panels + 1).
/// Δτ = 30/16000 ≈ 1.9e−3 puts the raw O(Δ²) eigenvalue bias near 4e−7 and
/// the extrapolated (fine+coarse Richardson) bias near 1e−11.
pub const WHOLE_LINE_PANELS_PER_SIDE_FINE: usize = 16_000;

/// Panels per side of the *coarse* companion grid used for Richardson
/// extrapolation (exactly half the fine resolution).
pub const WHOLE_LINE_PANELS_PER_SIDE_COARSE: usize = 8_000;

/// Length of the Neumann half-line domain.
pub const HALF_LINE_LENGTH: f64 = 30.0;

/// Interior panels of the fine half-line grid.
pub const HALF_LINE_PANELS_FINE: usize = 16_000;

/// Interior panels of the coarse half-line grid.
pub const HALF_LINE_PANELS_COARSE: usize = 8_000;

/// Eigenfunction magnitude allowed at an artificial boundary before the
/// domain is declared too narrow. With Gaussian decay the true values at
/// the default boundaries are ≪ 1e−200; anything above 1e−10 signals a
/// mode that is not confined the way the theory assumes.
pub const BOUNDARY_DECAY_TOL: f64 = 1e-10;

// ===== band minimization =====

/// Coarse scan bounds and step for bracketing the band minimum in ξ.
/// The minimizer ζ_a lies in (−1, 0) for all a ∈ (−1, 0); the scan is wide
/// enough to also bracket the Neumann minimizer ξ₀ ≈ −0.768.
pub const BAND_SCAN_LO: f64 = -3.0;
pub const BAND_SCAN_HI: f64 = 1.0;
pub const BAND_SCAN_STEP: f64 = 0.05;

/// Golden-section width at which the bracket is handed to the derivative
/// polish. There is no point shrinking further by function values alone:
/// near a quadratic minimum, function-value resolution limits position
/// accuracy to ~√ε.
pub const BAND_GOLDEN_WIDTH: f64 = 1e-6;

/// Stationarity target for the derivative polish: the plain-dot
/// Feynman–Hellmann sum `2Σ(ξ+bτ)|φ|²Δ` (which is the exact derivative of
/// the discrete eigenvalue) is driven below this by secant steps.
pub const BAND_STATIONARITY_TOL: f64 = 1e-12;

/// Maximum secant iterations for the stationarity polish.
pub const BAND_SECANT_MAX: usize = 40;

/// Finite-difference steps for the band second derivative; the two-step
/// Richardson pair (δ, δ/2) cancels the O(δ²) term.
pub const BAND_D2_STEP: f64 = 0.05;

/// Five-point parabolic-fit spacing for the μ″ cross-check. Small enough
/// that quartic contamination (≈ 0.37·μ⁗·δ²) stays below the 1e−4
/// agreement tolerance for any plausible μ⁗.
pub const BAND_PARBOLIC_FIT_STEP: f64 = 0.01;

/// Agreement tolerance between the finite-difference μ″ and the parabolic
/// fit / the perturbation-theory identity μ″ = 2 − 8·I2.
pub const MU_PP_CROSS_TOL: f64 = 1e-4;

// ===== moments and identities =====

/// Tolerance on the vanishing first moment M1 (after grid extrapolation).
pub const M1_TOL: f64 = 1e-8;

/// Tolerance on the M2/M3 closed forms and the five weighted-moment
/// identities (after grid extrapolation).
pub const IDENTITY_TOL: f64 = 1e-6;

/// Tolerance on the stationarity integral ∫(ζ+bτ)|φ|² reported with the
/// converged band data.
pub const STATIONARITY_TOL: f64 = 1e-6;

/// Tolerance on I2 against (1/4 − μ″/8).
pub const I2_TOL: f64 = 1e-4;

/// Defining-property and self-adjointness tolerance for the regularized
/// resolvent: ‖(H−β)Ru − u‖/‖u‖ and |⟨Ru,v⟩ − ⟨u,Rv⟩| for deflated u, v.
pub const RESOLVENT_DEFINING_TOL: f64 = 1e-8;

/// Downward spectral shift (relative to 1 + |β|) that makes H − β + s
/// positive definite for the deflated solve. With a spectral gap of order
/// 1e−1 above β, three refinement passes at shift 1e−6 reduce the solve
/// error to machine level.
pub const RESOLVENT_SHIFT: f64 = 1e-6;

/// Refinement passes for the deflated solve.
pub const RESOLVENT_REFINE_PASSES: usize = 4;

// ===== de Gennes / reference values =====

/// Agreement tolerance |β_{−1} − Θ₀| between the whole-line a = −1 band
/// minimum and the half-line Neumann (de Gennes) constant.
pub const DEGENNES_MATCH_TOL: f64 = 1e-5;

/// Tolerance on the identity ξ₀ = −√Θ₀.
pub const XI0_IDENTITY_TOL: f64 = 1e-4;

/// Symmetry tolerance ‖φ_{−1}(τ) − φ_{−1}(−τ)‖_∞ at a = −1.
pub const A_MINUS_ONE_SYMMETRY_TOL: f64 = 1e-6;

// ===== geometry =====

/// Default number of arc-length nodes for curve sampling.
pub const CURVE_ARC_NODES: usize = 4096;

/// Arc-length closure / reparameterization consistency tolerance.
pub const CURVE_CLOSURE_TOL: f64 = 1e-10;

/// Newton tolerance for inverting the cumulative arc-length map.
pub const ARC_NEWTON_TOL: f64 = 1e-13;

/// Well positions are refined until the curvature derivative root is
/// located to this accuracy in arc length.
pub const WELL_POSITION_TOL: f64 = 1e-10;

/// Relative curvature variation below which the curve is declared
/// degenerate (a circle up to round-off).
pub const DEGENERATE_CURVATURE_TOL: f64 = 1e-8;

/// |k₂| below this flags a near-degenerate (flat-well) curve in reports.
pub const NEAR_DEGENERATE_K2: f64 = 0.1;

/// Equality tolerance for the two global curvature maxima (relative).
pub const WELL_EQUALITY_TOL: f64 = 1e-8;

/// Tangent-norm check |dM/ds| = 1 tolerance.
pub const UNIT_SPEED_TOL: f64 = 1e-8;

// ===== quadrature =====

/// Gauss–Legendre panel order used by the arc/action quadratures.
pub const GAUSS_PANEL_ORDER: usize = 16;

/// Default panel count for action/amplitude integrals.
pub const ACTION_PANELS: usize = 64;

/// Relative Richardson target for action/amplitude quadratures.
pub const ACTION_QUAD_REL_TOL: f64 = 1e-6;

/// Arc distance from a well below which the amplitude integrand switches
/// to its two-term local series (the integrand is an exactly removable
/// 0/0 there; the direct formula is used elsewhere).
pub const AMPLITUDE_SERIES_SWITCH: f64 = 1e-3;

// ===== tunneling / effective model =====

/// Tolerance for the convention-swap invariance of the predicted gap.
pub const CONVENTION_SWAP_TOL: f64 = 1e-12;

/// Dilation-scaling test tolerance (S → √ρ·S under V → ρ·V).
pub const ACTION_SCALING_TOL: f64 = 1e-6;

/// Factor over the eigensolver noise floor a gap must exceed to enter the
/// exponent fit.
pub const GAP_FLOOR_FACTOR: f64 = 1e3;

/// Relative accuracy (vs ‖operator‖·ε) attributed to the effective-model
/// eigensolver when estimating its noise floor.
pub const EIG_NOISE_MULTIPLIER: f64 = 50.0;

// ===== 2D operator =====

/// Weight positivity guard: min 𝔞 on the realized grid must stay above
/// this. Below it, the generalized eigenproblem's metric degenerates and
/// the curve-coordinate reduction is untrustworthy.
pub const WEIGHT_POSITIVITY_GUARD: f64 = 0.2;

/// Default τ half-width of the 2D strip. Ground-state mass beyond |τ| = 12
/// is e^{−50}-level for every parameter set the crate accepts.
pub const STRIP_TAU_HALF_WIDTH: f64 = 12.0;

/// Post-solve boundary-mass guard for 2D eigenvectors.
pub const STRIP_BOUNDARY_MASS_TOL: f64 = 1e-8;

/// Shift-invert subspace iteration: block size, iteration cap, and
/// relative residual target.
pub const SUBSPACE_BLOCK: usize = 4;
pub const SUBSPACE_MAX_ITER: usize = 30;
pub const SUBSPACE_RESIDUAL_TOL: f64 = 1e-11;

/// Agreement tolerance between the iterative eigensolver and the dense
/// reference solve on small grids (pure linear-algebra comparison).
pub const DENSE_ORACLE_TOL: f64 = 1e-10;

/// Separable-limit (zero curvature) torus oracle tolerance against the
/// fiber band values on the discrete dual lattice.
pub const SEPARABLE_ORACLE_TOL: f64 = 1e-4;

// ===== WKB =====

/// Exponent η in the cutoff scale μ = ℏ^{1/2+2η} (admissible range (0, ¼)).
pub const WKB_ETA_DEFAULT: f64 = 0.125;

/// Residual σ-window half-width, in units of the harmonic quasimode width
/// (√ℏ/g)^{1/2}.
pub const WKB_WINDOW_WIDTHS: f64 = 3.0;

/// σ-grid spacing for residual evaluation. Small enough that fourth-order
/// phase differentiation errors sit far below the smallest residual signal
/// in the certified ℏ range.
pub const WKB_SIGMA_STEP: f64 = 1e-3;

/// τ half-width and node count of the residual grid (its own resolvent
/// context is built on this grid, so the recursion is discretely
/// self-consistent).
pub const WKB_TAU_HALF_WIDTH: f64 = 16.0;
pub const WKB_TAU_PANELS: usize = 2_000;

/// Minimum log-log slope margin: certified slope must exceed
/// (N+1)/2 − WKB_SLOPE_MARGIN.
pub const WKB_SLOPE_MARGIN: f64 = 0.3;
