//! Quadrature rules tuned to the integrands met in this crate.
//!
//! ```text
//! Three situations recur:
//!
//! 1. Grid functions on uniform meshes whose integrand has a kink at a
//!    single known node (a piecewise coefficient changes its law at the
//!    interface).  Composite Simpson applied separately on each side
//!    keeps the full O(delta^4) order; applied blindly across the kink
//!    it would degrade to O(delta^3) locally.
//!
//! 2. Pairs of such integrals computed on a coarse grid and its
//!    refinement.  The leading error is a clean c * delta^2 from the
//!    underlying eigenfunction discretization, so one Richardson step
//!    (4 fine - coarse) / 3 removes it and leaves O(delta^4).
//!
//! 3. Smooth analytic integrands (curvature data, action integrands)
//!    where spectral accuracy per panel is cheap: composite 16-point
//!    Gauss–Legendre, with panel boundaries placed at the few special
//!    points (well positions), is exact to machine precision for the
//!    sizes used here.
//! ```

use crate::{Error, Result};

// ===== Composite Simpson on uniform grids =====

/// Composite Simpson for samples on a uniform grid with spacing `delta`.
/// Requires an odd number of nodes (an even panel count).
pub fn simpson_uniform(values: &[f64], delta: f64) -> Result<f64> {
    let n = values.len();
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidGrid(format!(
            "Simpson needs an odd node count >= 3, got {n}"
        )));
    }
    let mut acc = values[0] + values[n - 1];
    let mut four = 0.0;
    let mut two = 0.0;
    for (i, v) in values.iter().enumerate().take(n - 1).skip(1) {
        if i % 2 == 1 {
            four += v;
        } else {
            two += v;
        }
    }
    acc += 4.0 * four + 2.0 * two;
    Ok(acc * delta / 3.0)
}

/// Composite Simpson with a kink at node index `split`: the rule is
/// applied independently on `values[..=split]` and `values[split..]`,
/// so a derivative jump at the split node costs no accuracy.  Both
/// sides must have even panel counts.
pub fn simpson_split(values: &[f64], delta: f64, split: usize) -> Result<f64> {
    if split == 0 || split + 1 == values.len() {
        return simpson_uniform(values, delta);
    }
    if split >= values.len() {
        return Err(Error::InvalidGrid(format!(
            "split index {split} outside {} samples",
            values.len()
        )));
    }
    let left = simpson_uniform(&values[..=split], delta)?;
    let right = simpson_uniform(&values[split..], delta)?;
    Ok(left + right)
}

// ===== Richardson extrapolation =====

/// One Richardson step for a quantity with leading error `c * delta^2`:
/// given the coarse-grid and half-spacing values, returns the
/// extrapolant `(4 fine - coarse) / 3`, accurate to `O(delta^4)`.
#[must_use]
pub fn richardson2(coarse: f64, fine: f64) -> f64 {
    (4.0 * fine - coarse) / 3.0
}

// ===== Gauss–Legendre =====

/// Abscissas of the 16-point Gauss–Legendre rule on `[-1, 1]`
/// (positive half; the rule is symmetric).
const GL16_X: [f64; 8] = [
    0.095_012_509_837_637_44,
    0.281_603_550_779_258_9,
    0.458_016_777_657_227_4,
    0.617_876_244_402_643_7,
    0.755_404_408_355_003_0,
    0.865_631_202_387_831_7,
    0.944_575_023_073_232_6,
    0.989_400_934_991_649_9,
];

/// Weights matching [`GL16_X`].
const GL16_W: [f64; 8] = [
    0.189_450_610_455_068_5,
    0.182_603_415_044_923_6,
    0.169_156_519_395_002_55,
    0.149_595_988_816_576_73,
    0.124_628_971_255_533_87,
    0.095_158_511_682_492_78,
    0.062_253_523_938_647_89,
    0.027_152_459_411_754_095,
];

/// 16-point Gauss–Legendre on a single interval `[a, b]`.
pub fn gauss16(f: &mut dyn FnMut(f64) -> f64, a: f64, b: f64) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = 0.0;
    for (x, w) in GL16_X.iter().zip(GL16_W.iter()) {
        acc += w * (f(mid + half * x) + f(mid - half * x));
    }
    acc * half
}

/// Composite 16-point Gauss–Legendre with `panels` equal panels on
/// `[a, b]`.  Orientation-aware: `a > b` yields the negated integral.
pub fn gauss16_panels(f: &mut dyn FnMut(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    let panels = panels.max(1);
    let h = (b - a) / panels as f64;
    let mut acc = 0.0;
    for i in 0..panels {
        let lo = a + i as f64 * h;
        acc += gauss16(f, lo, lo + h);
    }
    acc
}

/// Composite Gauss–Legendre over a segmented range: integrates `f` from
/// `boundaries[0]` to `boundaries[last]` with `panels_per_segment` equal
/// panels inside every consecutive pair.  Used when the integrand is
/// piecewise smooth with known break points (e.g. well positions on a
/// boundary arc).
pub fn gauss16_segmented(
    f: &mut dyn FnMut(f64) -> f64,
    boundaries: &[f64],
    panels_per_segment: usize,
) -> Result<f64> {
    if boundaries.len() < 2 {
        return Err(Error::InvalidGrid(
            "segmented quadrature needs at least two boundaries".into(),
        ));
    }
    let mut acc = 0.0;
    for pair in boundaries.windows(2) {
        acc += gauss16_panels(f, pair[0], pair[1], panels_per_segment);
    }
    Ok(acc)
}

/// Cumulative integral of `f` along the ordered sample points `points`,
/// anchored so the value at `points[anchor]` is zero: returns
/// `F[i] = integral from points[anchor] to points[i]`.  Each consecutive
/// gap is integrated with a single 16-point panel, so for the smooth
/// integrands and fine grids used here the result is exact to roundoff.
pub fn cumulative_gauss16(
    f: &mut dyn FnMut(f64) -> f64,
    points: &[f64],
    anchor: usize,
) -> Result<Vec<f64>> {
    let n = points.len();
    if n == 0 {
        return Err(Error::InvalidGrid("cumulative quadrature over no points".into()));
    }
    if anchor >= n {
        return Err(Error::InvalidGrid(format!(
            "anchor index {anchor} outside {n} points"
        )));
    }
    let mut out = vec![0.0; n];
    // March upward from the anchor...
    for i in anchor..n - 1 {
        out[i + 1] = out[i] + gauss16(f, points[i], points[i + 1]);
    }
    // ...and downward.
    for i in (0..anchor).rev() {
        out[i] = out[i + 1] - gauss16(f, points[i], points[i + 1]);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn simpson_is_exact_for_cubics() {
        let n = 11;
        let delta = 0.2;
        let values: Vec<f64> = (0..n)
            .map(|i| {
                let x = i as f64 * delta;
                x * x * x - 2.0 * x + 1.0
            })
            .collect();
        let b = (n - 1) as f64 * delta;
        let exact = b.powi(4) / 4.0 - b * b + b;
        assert_abs_diff_eq!(simpson_uniform(&values, delta).unwrap(), exact, epsilon = 1e-13);
    }

    #[test]
    fn split_rule_handles_a_kink_exactly() {
        // |x|^3 is cubic on each side of 0, so the split rule is exact,
        // while the naive rule straddling the kink is not.
        let m = 8;
        let delta = 0.125;
        let values: Vec<f64> = (-(m as i64)..=m as i64)
            .map(|i| (i as f64 * delta).abs().powi(3))
            .collect();
        let exact = 2.0 * (m as f64 * delta).powi(4) / 4.0;
        let split = simpson_split(&values, delta, m).unwrap();
        let naive = simpson_uniform(&values, delta).unwrap();
        assert_abs_diff_eq!(split, exact, epsilon = 1e-14);
        assert!(
            (naive - exact).abs() > 1e-6,
            "naive rule should visibly feel the kink (err {:.3e})",
            (naive - exact).abs()
        );
    }

    #[test]
    fn richardson_removes_the_quadratic_term() {
        let exact = 10.0;
        let model = |d: f64| exact + 3.0 * d * d + 0.5 * d.powi(4);
        let coarse = model(0.1);
        let fine = model(0.05);
        let extravagant = richardson2(coarse, fine);
        assert_abs_diff_eq!(extravagant, exact, epsilon = 1e-5);
        assert!((extravagant - exact).abs() < 1e-2 * (coarse - exact).abs());
    }

    #[test]
    fn gauss16_integrates_high_degree_polynomials_exactly() {
        // Degree 31 is the highest exact degree for 16 points.
        let mut f = |x: f64| x.powi(30);
        let got = gauss16(&mut f, 0.0, 1.0);
        assert_abs_diff_eq!(got, 1.0 / 31.0, epsilon = 1e-15);
    }

    #[test]
    fn gauss16_panels_nails_the_exponential() {
        let mut f = |x: f64| x.exp();
        let got = gauss16_panels(&mut f, 0.0, 1.0, 2);
        assert_abs_diff_eq!(got, 1.0_f64.exp() - 1.0, epsilon = 1e-14);
        // Orientation flip negates.
        let rev = gauss16_panels(&mut f, 1.0, 0.0, 2);
        assert_abs_diff_eq!(rev, -(1.0_f64.exp() - 1.0), epsilon = 1e-14);
    }

    #[test]
    fn segmented_rule_concatenates() {
        let mut f = |x: f64| (3.0 * x).sin();
        let whole = gauss16_panels(&mut f, -1.0, 2.0, 8);
        let parts = gauss16_segmented(&mut f, &[-1.0, 0.25, 2.0], 4).unwrap();
        assert_abs_diff_eq!(whole, parts, epsilon = 1e-13);
    }

    #[test]
    fn cumulative_integral_is_anchored_and_consistent() {
        let points: Vec<f64> = (0..21).map(|i| -1.0 + 0.1 * i as f64).collect();
        let anchor = 7;
        let mut f = |x: f64| x.cos();
        let cum = cumulative_gauss16(&mut f, &points, anchor).unwrap();
        assert_abs_diff_eq!(cum[anchor], 0.0, epsilon = 0.0);
        for (i, p) in points.iter().enumerate() {
            let exact = p.sin() - points[anchor].sin();
            assert_abs_diff_eq!(cum[i], exact, epsilon = 1e-14);
        }
    }
}
