//! Uniform 1D grids for the fiber models.
//!
//! Two kinds are used throughout:
//!
//! * **whole-line** grids, symmetric about τ = 0 with τ = 0 exactly a node
//!   (the field profile `b_a` jumps there, and several quadratures split at
//!   that node);
//! * **half-line** grids on `[0, T]` with τ = 0 the first node (Neumann
//!   boundary for the de Gennes model).
//!
//! Nodes are stored explicitly; constructors enforce the invariants (strict
//! monotonicity, uniform spacing, exact symmetry for whole-line grids) so
//! downstream code can rely on them without re-checking.

use crate::errors::Error;
use crate::Result;

/// Which boundary model a [`Grid1D`] represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridKind {
    /// Symmetric interval `[−T, T]` with τ = 0 a node; Dirichlet ends.
    WholeLine,
    /// Interval `[0, T]`; Neumann at 0, Dirichlet at T.
    HalfLine,
}

/// A uniform 1D grid.
#[derive(Debug, Clone)]
pub struct Grid1D {
    kind: GridKind,
    /// Node coordinates, strictly increasing, uniformly spaced.
    nodes: Vec<f64>,
    /// Spacing between adjacent nodes.
    delta: f64,
    /// Index of the τ = 0 node.
    zero_index: usize,
}

impl Grid1D {
    /// Whole-line grid on `[−half_width, half_width]` with `panels_per_side`
    /// uniform panels on each side of τ = 0 (so `2·panels_per_side + 1`
    /// nodes in total).
    ///
    /// Nodes are generated as `(i − m)·Δ` with `m = panels_per_side`, which
    /// makes the grid *exactly* symmetric in floating point:
    /// `τ[n−1−i] == −τ[i]` bitwise. Simpson quadratures that split at the
    /// kink τ = 0 need an even panel count per side, which this guarantees
    /// when `panels_per_side` is even.
    pub fn whole_line(half_width: f64, panels_per_side: usize) -> Result<Self> {
        if !(half_width > 0.0) || !half_width.is_finite() {
            return Err(Error::InvalidGrid(format!(
                "half_width must be positive and finite, got {half_width}"
            )));
        }
        if panels_per_side < 8 {
            return Err(Error::InvalidGrid(format!(
                "need at least 8 panels per side, got {panels_per_side}"
            )));
        }
        if panels_per_side % 2 != 0 {
            return Err(Error::InvalidGrid(format!(
                "panels per side must be even for split-Simpson quadrature, got {panels_per_side}"
            )));
        }
        let m = panels_per_side as isize;
        let delta = half_width / panels_per_side as f64;
        let nodes: Vec<f64> = (-m..=m).map(|i| i as f64 * delta).collect();
        Ok(Self {
            kind: GridKind::WholeLine,
            nodes,
            delta,
            zero_index: panels_per_side,
        })
    }

    /// Half-line grid on `[0, length]` with `panels` uniform panels
    /// (`panels + 1` nodes, node 0 at τ = 0).
    pub fn half_line(length: f64, panels: usize) -> Result<Self> {
        if !(length > 0.0) || !length.is_finite() {
            return Err(Error::InvalidGrid(format!(
                "length must be positive and finite, got {length}"
            )));
        }
        if panels < 8 {
            return Err(Error::InvalidGrid(format!(
                "need at least 8 panels, got {panels}"
            )));
        }
        if panels % 2 != 0 {
            return Err(Error::InvalidGrid(format!(
                "panel count must be even for Simpson quadrature, got {panels}"
            )));
        }
        let delta = length / panels as f64;
        let nodes: Vec<f64> = (0..=panels).map(|i| i as f64 * delta).collect();
        Ok(Self {
            kind: GridKind::HalfLine,
            nodes,
            delta,
            zero_index: 0,
        })
    }

    /// Grid kind.
    #[must_use]
    pub fn kind(&self) -> GridKind {
        self.kind
    }

    /// Number of nodes.
    #[must_use]
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// True when the grid has no nodes (never, for constructed grids).
    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Node coordinates.
    #[must_use]
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Uniform spacing Δ.
    #[must_use]
    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// First node (τ_min).
    #[must_use]
    pub fn tau_min(&self) -> f64 {
        self.nodes[0]
    }

    /// Last node (τ_max).
    #[must_use]
    pub fn tau_max(&self) -> f64 {
        *self.nodes.last().expect("grid is non-empty")
    }

    /// Index of the τ = 0 node (0 for half-line grids).
    #[must_use]
    pub fn zero_index(&self) -> usize {
        self.zero_index
    }

    /// A grid of the same kind and extent with half the spacing
    /// (double the panel count); used for Richardson extrapolation pairs.
    pub fn refined(&self) -> Result<Self> {
        match self.kind {
            GridKind::WholeLine => {
                Self::whole_line(self.tau_max(), 2 * self.zero_index)
            }
            GridKind::HalfLine => Self::half_line(self.tau_max(), 2 * (self.len() - 1)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whole_line_is_bitwise_symmetric() {
        let g = Grid1D::whole_line(30.0, 1000).unwrap();
        let n = g.len();
        assert_eq!(n, 2001);
        assert_eq!(g.nodes()[g.zero_index()], 0.0);
        for i in 0..n {
            assert_eq!(
                g.nodes()[i],
                -g.nodes()[n - 1 - i],
                "node {i} not an exact mirror"
            );
        }
    }

    #[test]
    fn whole_line_spacing_uniform() {
        let g = Grid1D::whole_line(30.0, 16).unwrap();
        let d = g.delta();
        for w in g.nodes().windows(2) {
            assert!((w[1] - w[0] - d).abs() < 1e-15, "non-uniform spacing");
        }
    }

    #[test]
    fn half_line_starts_at_zero() {
        let g = Grid1D::half_line(30.0, 100).unwrap();
        assert_eq!(g.tau_min(), 0.0);
        assert_eq!(g.zero_index(), 0);
        assert!((g.tau_max() - 30.0).abs() < 1e-12);
    }

    #[test]
    fn refinement_halves_spacing() {
        let g = Grid1D::whole_line(30.0, 64).unwrap();
        let f = g.refined().unwrap();
        assert_eq!(f.len(), 2 * g.len() - 1);
        assert!((f.delta() - 0.5 * g.delta()).abs() < 1e-16);
        assert_eq!(f.tau_max(), g.tau_max());
    }

    #[test]
    fn rejects_odd_panels() {
        assert!(Grid1D::whole_line(30.0, 15).is_err());
        assert!(Grid1D::half_line(30.0, 9).is_err());
    }
}
