//! Dense real nonsymmetric eigenvalue solver.
//!
//! Classic three-stage pipeline: balancing (permutation phase isolates
//! eigenvalues that are exactly readable off the diagonal, scaling phase
//! equilibrates row/column norms by powers of two), Householder reduction
//! to upper Hessenberg form, and Francis double-shift QR iteration with
//! exceptional shifts. Eigenvalues only; no Schur vectors are accumulated.
//!
//! The shapes follow EISPACK `balanc`/`orthes`/`hqr`. Deflation uses the
//! standard subdiagonal smallness test against the neighbouring diagonal
//! magnitudes; a 2x2 trailing block is solved directly, producing exact
//! conjugate pairs for complex eigenvalues.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::Matrix;

const RADIX: f64 = 2.0;
/// Per-block sweep budget; standard practice for shifted QR.
const MAX_SWEEPS_PER_BLOCK: usize = 30;

/// Eigenvalues of a real square matrix, in no particular order.
///
/// Fails with [`Error::NonConvergence`] if any diagonal block exceeds the
/// sweep budget (30 per block, 30n overall); garbage is never returned.
pub fn eigenvalues(m: &Matrix) -> Result<Vec<Complex64>> {
    let n = m.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut a = m.clone();
    let (lo, hi) = balance(&mut a);

    let mut eigs: Vec<Complex64> = Vec::with_capacity(n);
    for i in 0..lo {
        eigs.push(Complex64::new(a[(i, i)], 0.0));
    }
    for i in hi..n {
        eigs.push(Complex64::new(a[(i, i)], 0.0));
    }

    if hi > lo {
        let w = hi - lo;
        let mut h = Matrix::zeros(w);
        for i in 0..w {
            for j in 0..w {
                h[(i, j)] = a[(lo + i, lo + j)];
            }
        }
        hessenberg(&mut h);
        francis_qr(&mut h, &mut eigs)?;
    }
    Ok(eigs)
}

/// EISPACK `balanc`: returns the active window `[lo, hi)`; rows/columns
/// outside it were isolated by similarity permutations and their diagonal
/// entries are exact eigenvalues.
fn balance(a: &mut Matrix) -> (usize, usize) {
    let n = a.n();
    let mut lo = 0usize;
    let mut hi = n; // exclusive

    // Push rows whose off-diagonal entries vanish to the bottom: such a row
    // means the diagonal entry is an eigenvalue of the (permuted) matrix.
    loop {
        let isolated = (lo..hi)
            .rev()
            .find(|&j| (lo..hi).filter(|&i| i != j).map(|i| a[(j, i)].abs()).sum::<f64>() == 0.0);
        match isolated {
            Some(j) if lo < hi => {
                a.swap_rows(j, hi - 1);
                a.swap_cols(j, hi - 1);
                hi -= 1;
            }
            _ => break,
        }
    }
    // Same for columns, pushed to the left.
    loop {
        let isolated = (lo..hi)
            .find(|&j| (lo..hi).filter(|&i| i != j).map(|i| a[(i, j)].abs()).sum::<f64>() == 0.0);
        match isolated {
            Some(j) if lo < hi => {
                a.swap_rows(j, lo);
                a.swap_cols(j, lo);
                lo += 1;
            }
            _ => break,
        }
    }
    if lo >= hi {
        return (lo, lo);
    }

    // Diagonal scaling by powers of the radix until row and column norms
    // are comparable. Converges quickly; the sweep cap is a safety net.
    let b2 = RADIX * RADIX;
    for _ in 0..100 {
        let mut converged = true;
        for i in lo..hi {
            let mut c: f64 = (lo..hi).filter(|&j| j != i).map(|j| a[(j, i)].abs()).sum();
            let r: f64 = (lo..hi).filter(|&j| j != i).map(|j| a[(i, j)].abs()).sum();
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut g = r / RADIX;
            while c < g {
                f *= RADIX;
                c *= b2;
            }
            g = r * RADIX;
            while c >= g {
                f /= RADIX;
                c /= b2;
            }
            if (c + r) / f < 0.95 * s {
                converged = false;
                let g = 1.0 / f;
                for j in 0..n {
                    a[(i, j)] *= g;
                }
                for j in 0..n {
                    a[(j, i)] *= f;
                }
            }
        }
        if converged {
            break;
        }
    }
    (lo, hi)
}

/// Householder reduction to upper Hessenberg form (EISPACK `orthes`),
/// in place on the full matrix.
fn hessenberg(a: &mut Matrix) {
    let n = a.n();
    if n < 3 {
        return;
    }
    let mut ort = vec![0.0f64; n];
    for m in 1..n - 1 {
        let scale: f64 = (m..n).map(|i| a[(i, m - 1)].abs()).sum();
        if scale == 0.0 {
            continue;
        }
        let mut h = 0.0;
        for i in (m..n).rev() {
            ort[i] = a[(i, m - 1)] / scale;
            h += ort[i] * ort[i];
        }
        let g = -h.sqrt().copysign(ort[m]);
        h -= ort[m] * g;
        ort[m] -= g;

        // Apply P = I - (u u^T)/h from the left ...
        for j in m..n {
            let mut f = 0.0;
            for i in (m..n).rev() {
                f += ort[i] * a[(i, j)];
            }
            f /= h;
            for i in m..n {
                a[(i, j)] -= f * ort[i];
            }
        }
        // ... and from the right.
        for i in 0..n {
            let mut f = 0.0;
            for j in (m..n).rev() {
                f += ort[j] * a[(i, j)];
            }
            f /= h;
            for j in m..n {
                a[(i, j)] -= f * ort[j];
            }
        }
        a[(m, m - 1)] = scale * g;
        for i in m + 1..n {
            a[(i, m - 1)] = 0.0;
        }
    }
}

/// Francis double-shift QR on an upper Hessenberg matrix; appends the
/// eigenvalues to `out`.
fn francis_qr(h: &mut Matrix, out: &mut Vec<Complex64>) -> Result<()> {
    let n = h.n();
    let eps = f64::EPSILON;
    let sweep_budget = MAX_SWEEPS_PER_BLOCK * n;
    let mut total_sweeps = 0usize;

    let anorm: f64 = {
        let mut s = 0.0;
        for i in 0..n {
            for j in i.saturating_sub(1)..n {
                s += h[(i, j)].abs();
            }
        }
        s
    };

    let mut t = 0.0f64; // accumulated exceptional shift
    let mut nn = n as isize - 1;
    while nn >= 0 {
        let mut its = 0usize;
        loop {
            let nnu = nn as usize;
            // Find a small subdiagonal element; the block [l..=nn] is active.
            let mut l = nnu;
            while l >= 1 {
                let mut s = h[(l - 1, l - 1)].abs() + h[(l, l)].abs();
                if s == 0.0 {
                    s = anorm;
                }
                if h[(l, l - 1)].abs() <= eps * s {
                    h[(l, l - 1)] = 0.0;
                    break;
                }
                l -= 1;
            }

            let x = h[(nnu, nnu)];
            if l == nnu {
                out.push(Complex64::new(x + t, 0.0));
                nn -= 1;
                break;
            }
            let y = h[(nnu - 1, nnu - 1)];
            let w = h[(nnu, nnu - 1)] * h[(nnu - 1, nnu)];
            if l + 1 == nnu {
                // 2x2 trailing block: solve its characteristic equation.
                let p = 0.5 * (y - x);
                let q = p * p + w;
                let z = q.abs().sqrt();
                let x = x + t;
                if q >= 0.0 {
                    let z = p + z.copysign(p);
                    let first = x + z;
                    let second = if z != 0.0 { x - w / z } else { first };
                    out.push(Complex64::new(first, 0.0));
                    out.push(Complex64::new(second, 0.0));
                } else {
                    out.push(Complex64::new(x + p, z));
                    out.push(Complex64::new(x + p, -z));
                }
                nn -= 2;
                break;
            }

            if its == MAX_SWEEPS_PER_BLOCK || total_sweeps > sweep_budget {
                return Err(Error::NonConvergence {
                    n,
                    iterations: total_sweeps.max(its),
                });
            }
            let (mut x, mut y, mut w) = (x, y, w);
            if its == 10 || its == 20 {
                // Exceptional shift to break symmetric stagnation.
                t += x;
                for i in 0..=nnu {
                    let d = h[(i, i)];
                    h[(i, i)] = d - x;
                }
                let s = h[(nnu, nnu - 1)].abs() + h[(nnu - 1, nnu - 2)].abs();
                x = 0.75 * s;
                y = x;
                w = -0.4375 * s * s;
            }
            its += 1;
            total_sweeps += 1;

            // Look for two consecutive small subdiagonals to start the
            // implicit double shift further down the block.
            let mut m = nnu - 2;
            let (mut p, mut q, mut r);
            loop {
                let z = h[(m, m)];
                let rr = x - z;
                let ss = y - z;
                p = (rr * ss - w) / h[(m + 1, m)] + h[(m, m + 1)];
                q = h[(m + 1, m + 1)] - z - rr - ss;
                r = h[(m + 2, m + 1)];
                let s = p.abs() + q.abs() + r.abs();
                p /= s;
                q /= s;
                r /= s;
                if m == l {
                    break;
                }
                let u = h[(m, m - 1)].abs() * (q.abs() + r.abs());
                let v = p.abs() * (h[(m - 1, m - 1)].abs() + z.abs() + h[(m + 1, m + 1)].abs());
                if u <= eps * v {
                    break;
                }
                m -= 1;
            }
            for i in m + 2..=nnu {
                h[(i, i - 2)] = 0.0;
                if i != m + 2 {
                    h[(i, i - 3)] = 0.0;
                }
            }

            // Double QR sweep on rows/columns m..=nn.
            for k in m..nnu {
                if k != m {
                    p = h[(k, k - 1)];
                    q = h[(k + 1, k - 1)];
                    r = if k != nnu - 1 { h[(k + 2, k - 1)] } else { 0.0 };
                    x = p.abs() + q.abs() + r.abs();
                    if x != 0.0 {
                        p /= x;
                        q /= x;
                        r /= x;
                    }
                }
                let s = (p * p + q * q + r * r).sqrt().copysign(p);
                if s == 0.0 {
                    continue;
                }
                if k == m {
                    if l != m {
                        h[(k, k - 1)] = -h[(k, k - 1)];
                    }
                } else {
                    h[(k, k - 1)] = -s * x;
                }
                p += s;
                x = p / s;
                y = q / s;
                let z = r / s;
                q /= p;
                r /= p;
                for j in k..=nnu {
                    let mut pp = h[(k, j)] + q * h[(k + 1, j)];
                    if k != nnu - 1 {
                        pp += r * h[(k + 2, j)];
                        h[(k + 2, j)] -= pp * z;
                    }
                    h[(k + 1, j)] -= pp * y;
                    h[(k, j)] -= pp * x;
                }
                let mmin = nnu.min(k + 3);
                for i in l..=mmin {
                    let mut pp = x * h[(i, k)] + y * h[(i, k + 1)];
                    if k != nnu - 1 {
                        pp += z * h[(i, k + 2)];
                        h[(i, k + 2)] -= pp * r;
                    }
                    h[(i, k + 1)] -= pp * q;
                    h[(i, k)] -= pp;
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_reals(mut v: Vec<Complex64>) -> Vec<f64> {
        v.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        v.into_iter().map(|c| c.re).collect()
    }

    #[test]
    fn diagonal_matrix_is_exact() {
        let mut m = Matrix::zeros(4);
        for (i, v) in [3.0, -1.0, 0.5, 7.0].iter().enumerate() {
            m[(i, i)] = *v;
        }
        let eigs = sorted_reals(eigenvalues(&m).unwrap());
        assert_eq!(eigs, vec![-1.0, 0.5, 3.0, 7.0]);
    }

    #[test]
    fn permuted_triangular_is_exact() {
        // Balancing's permutation phase must isolate every eigenvalue.
        let m = Matrix::from_rows(&[
            vec![2.0, 0.0, -1.0],
            vec![-0.5, 1.0, 0.25],
            vec![0.0, 0.0, 3.0],
        ]);
        let eigs = sorted_reals(eigenvalues(&m).unwrap());
        assert_eq!(eigs, vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn rotation_block_gives_conjugate_pair() {
        let m = Matrix::from_rows(&[vec![0.0, -1.0], vec![1.0, 0.0]]);
        let mut eigs = eigenvalues(&m).unwrap();
        eigs.sort_by(|a, b| a.im.partial_cmp(&b.im).unwrap());
        assert!((eigs[0] - Complex64::new(0.0, -1.0)).norm() < 1e-14);
        assert!((eigs[1] - Complex64::new(0.0, 1.0)).norm() < 1e-14);
        assert_eq!(eigs[0].re, eigs[1].re);
        assert_eq!(eigs[0].im, -eigs[1].im);
    }

    #[test]
    fn empty_and_single() {
        assert!(eigenvalues(&Matrix::zeros(0)).unwrap().is_empty());
        let mut m = Matrix::zeros(1);
        m[(0, 0)] = 4.25;
        assert_eq!(eigenvalues(&m).unwrap(), vec![Complex64::new(4.25, 0.0)]);
    }
}
