//! Cyclic Jacobi eigensolver for dense symmetric matrices.
//!
//! Each sweep visits every off-diagonal pair `(p, q)` in row order and applies
//! the plane rotation that annihilates `a[p][q]`. Accumulating the rotations
//! gives the eigenvectors. Convergence is quadratic once the off-diagonal
//! mass is small, so the loop stops when the off-diagonal Frobenius norm falls
//! below `tol * ‖M‖_F`.

use super::{Spectrum, SymMatrix};
use crate::error::{invalid, Error, Result};

const ROTATIONS_PER_ENTRY: usize = 100;

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            s += a[i * n + j] * a[i * n + j];
        }
    }
    (2.0 * s).sqrt()
}

fn check(m: &SymMatrix, tol: f64) -> Result<()> {
    if tol.is_nan() || tol <= 0.0 {
        return invalid(format!("eigensolver tolerance must be positive, got {tol}"));
    }
    let n = m.dim();
    for i in 0..n {
        for j in 0..i {
            if m.get(i, j) != m.get(j, i) {
                return invalid(format!("matrix is not symmetric at ({i}, {j})"));
            }
        }
    }
    Ok(())
}

/// Runs the sweeps in place. `v`, when present, accumulates the rotations
/// (column `k` of `v` is the `k`-th eigenvector).
fn diagonalize(a: &mut [f64], n: usize, mut v: Option<&mut [f64]>, tol: f64) -> Result<()> {
    let target = tol * a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let cap = ROTATIONS_PER_ENTRY * n * n;
    let mut rotations = 0;
    loop {
        let off = off_norm(a, n);
        if off <= target || off == 0.0 {
            return Ok(());
        }
        if rotations >= cap {
            return Err(Error::NoConvergence {
                rotations,
                off_norm: off,
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                a[p * n + p] -= t * apq;
                a[q * n + q] += t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_p = c * arp - s * arq;
                    let new_q = s * arp + c * arq;
                    a[r * n + p] = new_p;
                    a[p * n + r] = new_p;
                    a[r * n + q] = new_q;
                    a[q * n + r] = new_q;
                }
                if let Some(v) = v.as_deref_mut() {
                    for r in 0..n {
                        let vrp = v[r * n + p];
                        let vrq = v[r * n + q];
                        v[r * n + p] = c * vrp - s * vrq;
                        v[r * n + q] = s * vrp + c * vrq;
                    }
                }
                rotations += 1;
            }
        }
    }
}

/// Full eigendecomposition, eigenvalues ascending.
pub fn eig_sym(m: &SymMatrix, tol: f64) -> Result<Spectrum> {
    check(m, tol)?;
    let n = m.dim();
    let mut a = m.data().to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    diagonalize(&mut a, n, Some(&mut v), tol)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]).then(i.cmp(&j)));
    let eigenvalues: Vec<f64> = order.iter().map(|&k| a[k * n + k]).collect();
    let eigenvectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&k| (0..n).map(|r| v[r * n + k]).collect())
        .collect();
    let residual_bound = eigenvalues
        .iter()
        .zip(&eigenvectors)
        .map(|(&l, x)| {
            m.mul_vec(x)
                .iter()
                .zip(x)
                .map(|(mx, xi)| (mx - l * xi).abs())
                .fold(0.0, f64::max)
        })
        .fold(0.0, f64::max);
    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
        residual_bound,
    })
}

/// Eigenvalues only, ascending.
pub fn eigenvalues_sym(m: &SymMatrix, tol: f64) -> Result<Vec<f64>> {
    check(m, tol)?;
    let n = m.dim();
    let mut a = m.data().to_vec();
    diagonalize(&mut a, n, None, tol)?;
    let mut values: Vec<f64> = (0..n).map(|k| a[k * n + k]).collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}
