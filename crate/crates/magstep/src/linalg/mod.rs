//! Structured linear algebra built for the solvers in this crate.
//!
//! Everything here is deterministic and allocation-predictable:
//!
//! * [`tridiag`] — symmetric tridiagonal eigenvalues by Sturm-sequence
//!   bisection, eigenvectors by inverse iteration, SPD (and cyclic SPD)
//!   tridiagonal solves;
//! * [`banded`] — Hermitian banded matrices with in-place complex Cholesky;
//! * [`subspace`] — shift-invert subspace iteration (real and complex) with
//!   Rayleigh–Ritz extraction, for a few extreme eigenpairs of large
//!   structured matrices;
//! * [`dense`] — dense symmetric/Hermitian reference solves (the oracles the
//!   iterative paths are tested against).

pub mod banded;
pub mod dense;
pub mod subspace;
pub mod tridiag;
