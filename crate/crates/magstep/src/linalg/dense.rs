//! Dense reference eigensolvers.
//!
//! Two tools live here:
//!
//! * a cyclic-sweep complex Hermitian Jacobi eigensolver for *small*
//!   matrices — the Rayleigh–Ritz blocks of the subspace iteration
//!   (dimension below ten), where determinism and self-containment
//!   matter more than asymptotics;
//! * a dense Hermitian eigenvalue oracle for *moderate* matrices via the
//!   real-symmetric embedding
//!
//! ```text
//!     A = X + iY Hermitian  =>  E = [[X, -Y], [Y, X]] symmetric,
//! ```
//!
//!   whose spectrum is that of `A` with every eigenvalue doubled
//!   (`z = u + iv` and `iz` give two real eigenvectors each).  Sorting
//!   and collapsing adjacent pairs by averaging recovers the spectrum of
//!   `A`.  This path exists to cross-check the iterative solvers on
//!   small instances; it is never on the production path.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::{Error, Result};

/// Eigendecomposition of a small dense Hermitian matrix by cyclic Jacobi
/// sweeps with complex rotations.
///
/// `a` is row-major `n * n`; it is consumed as workspace.  Returns
/// `(values, vectors)` with eigenvalues ascending and eigenvectors as
/// columns of a row-major `n * n` unitary (`vectors[i * n + j]` is
/// component `i` of eigenvector `j`).
pub fn herm_jacobi_eig(n: usize, a: &mut [Complex64]) -> Result<(Vec<f64>, Vec<Complex64>)> {
    if a.len() != n * n {
        return Err(Error::GridMismatch(format!(
            "Jacobi input length {} does not match n^2 = {}",
            a.len(),
            n * n
        )));
    }
    let scale = a.iter().map(|z| z.norm()).fold(0.0_f64, f64::max).max(1e-300);
    let mut v = vec![Complex64::ZERO; n * n];
    for i in 0..n {
        v[i * n + i] = Complex64::ONE;
    }
    let idx = |i: usize, j: usize| i * n + j;
    let max_sweeps = 60;
    for _sweep in 0..max_sweeps {
        let mut off = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off += a[idx(p, q)].norm_sqr();
            }
        }
        if off.sqrt() <= 1e-14 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[idx(p, q)];
                let b = apq.norm();
                if b <= 1e-18 * scale {
                    continue;
                }
                let phase = apq / b; // e^{i phi}
                let alpha = a[idx(p, p)].re;
                let gamma = a[idx(q, q)].re;
                // Angle zeroing the rotated off-diagonal entry:
                // (alpha - gamma) c s + b (c^2 - s^2) = 0.
                let theta = 0.5 * (2.0 * b).atan2(gamma - alpha);
                let (s, c) = theta.sin_cos();
                let su = s * phase; // s e^{i phi}
                // Column update: A <- A U with U acting on columns p, q.
                for k in 0..n {
                    let akp = a[idx(k, p)];
                    let akq = a[idx(k, q)];
                    a[idx(k, p)] = c * akp - su.conj() * akq;
                    a[idx(k, q)] = su * akp + c * akq;
                }
                // Row update: A <- U^H A.
                for k in 0..n {
                    let apk = a[idx(p, k)];
                    let aqk = a[idx(q, k)];
                    a[idx(p, k)] = c * apk - su * aqk;
                    a[idx(q, k)] = su.conj() * apk + c * aqk;
                }
                // Accumulate the eigenvector basis: V <- V U.
                for k in 0..n {
                    let vkp = v[idx(k, p)];
                    let vkq = v[idx(k, q)];
                    v[idx(k, p)] = c * vkp - su.conj() * vkq;
                    v[idx(k, q)] = su * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a[idx(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).expect("finite eigenvalues"));
    let values: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let mut vectors = vec![Complex64::ZERO; n * n];
    for (jnew, &jold) in order.iter().enumerate() {
        for i in 0..n {
            vectors[idx(i, jnew)] = v[idx(i, jold)];
        }
    }
    Ok((values, vectors))
}

/// All eigenvalues of a dense Hermitian matrix through the doubled
/// real-symmetric embedding, ascending.
///
/// `get(i, j)` must return `A[i][j]` for any pair (the routine reads the
/// full matrix and symmetrizes nothing — supply a genuinely Hermitian
/// callback).
pub fn herm_eigenvalues_embedded(n: usize, get: &dyn Fn(usize, usize) -> Complex64) -> Vec<f64> {
    let mut e = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let z = get(i, j);
            e[(i, j)] = z.re;
            e[(n + i, n + j)] = z.re;
            e[(i, n + j)] = -z.im;
            e[(n + i, j)] = z.im;
        }
    }
    let eig = e.symmetric_eigen();
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    // Collapse the exact doubling pair-by-pair, averaging out roundoff.
    let mut out = Vec::with_capacity(n);
    let mut i = 0;
    while i + 1 < vals.len() {
        out.push(0.5 * (vals[i] + vals[i + 1]));
        i += 2;
    }
    out
}

/// All eigenvalues of a dense real symmetric matrix, ascending.
#[must_use]
pub fn sym_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    let eig = m.clone().symmetric_eigen();
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    vals
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_hermitian(n: usize, seed: u64) -> Vec<Complex64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut a = vec![Complex64::ZERO; n * n];
        for i in 0..n {
            a[i * n + i] = Complex64::new(rng.gen_range(-2.0..2.0), 0.0);
            for j in i + 1..n {
                let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                a[i * n + j] = z;
                a[j * n + i] = z.conj();
            }
        }
        a
    }

    #[test]
    fn jacobi_diagonalizes_random_hermitian() {
        let n = 7;
        let a0 = random_hermitian(n, 11);
        let mut work = a0.clone();
        let (vals, vecs) = herm_jacobi_eig(n, &mut work).unwrap();
        // Check A v_j = lambda_j v_j directly against the original matrix.
        for j in 0..n {
            for i in 0..n {
                let mut av = Complex64::ZERO;
                for k in 0..n {
                    av += a0[i * n + k] * vecs[k * n + j];
                }
                let want = vals[j] * vecs[i * n + j];
                assert_abs_diff_eq!(av.re, want.re, epsilon = 1e-10);
                assert_abs_diff_eq!(av.im, want.im, epsilon = 1e-10);
            }
        }
        // Eigenvalues ascending.
        for j in 1..n {
            assert!(vals[j] >= vals[j - 1]);
        }
    }

    #[test]
    fn jacobi_vectors_are_unitary() {
        let n = 6;
        let mut a = random_hermitian(n, 29);
        let (_, vecs) = herm_jacobi_eig(n, &mut a).unwrap();
        for p in 0..n {
            for q in 0..n {
                let dot: Complex64 =
                    (0..n).map(|i| vecs[i * n + p].conj() * vecs[i * n + q]).sum();
                let want = if p == q { 1.0 } else { 0.0 };
                assert_abs_diff_eq!(dot.re, want, epsilon = 1e-12);
                assert_abs_diff_eq!(dot.im, 0.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn embedding_matches_jacobi_on_the_same_matrix() {
        let n = 8;
        let a = random_hermitian(n, 51);
        let mut work = a.clone();
        let (jac, _) = herm_jacobi_eig(n, &mut work).unwrap();
        let emb = herm_eigenvalues_embedded(n, &|i, j| a[i * n + j]);
        for (x, y) in jac.iter().zip(&emb) {
            assert_abs_diff_eq!(*x, *y, epsilon = 1e-10);
        }
    }

    #[test]
    fn embedding_reproduces_a_real_diagonal() {
        let n = 5;
        let diag = [3.0, -1.0, 0.25, 7.5, 0.25];
        let vals = herm_eigenvalues_embedded(n, &|i, j| {
            if i == j {
                Complex64::new(diag[i], 0.0)
            } else {
                Complex64::ZERO
            }
        });
        let mut want = diag.to_vec();
        want.sort_by(|x, y| x.partial_cmp(y).unwrap());
        for (got, expect) in vals.iter().zip(&want) {
            assert_abs_diff_eq!(*got, *expect, epsilon = 1e-12);
        }
    }
}
