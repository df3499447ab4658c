//! Spectra as multisets of complex numbers, Hausdorff/spectral-variation
//! distances between them, and eigenvalue condition numbers for complete
//! dominance graphs.

use num_complex::Complex64;

use crate::digraph::Digraph;
use crate::eigen;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Relative tolerance for snapping near-real eigenvalues onto the real
/// axis: real matrices have conjugate-symmetric spectra, so tiny imaginary
/// parts are roundoff. Scaled by `max(1, ||m||_inf)`.
pub const IMAG_TOL: f64 = 1e-8;

/// Relative tolerance for counting zero eigenvalues (isolated-component
/// multiplicity). Scaled by `max(1, ||m||_inf)`.
pub const MULT_TOL: f64 = 1e-6;

/// Eigenvalue multiset with a deterministic display order (real part
/// descending, then imaginary part descending).
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<Complex64>,
    source_dim: usize,
}

impl Spectrum {
    /// Spectrum of a real square matrix via the QR eigensolver, with
    /// conjugate symmetry enforced and near-real values snapped.
    pub fn from_matrix(m: &Matrix) -> Result<Spectrum> {
        let raw = eigen::eigenvalues(m)?;
        let tol = IMAG_TOL * m.norm_inf().max(1.0);
        let values = enforce_conjugate_symmetry(raw, tol)?;
        Ok(Spectrum::from_complex(values, m.n()))
    }

    /// Multiset of real values, e.g. the diagonal of an out-degree matrix.
    pub fn from_reals(vals: &[f64]) -> Spectrum {
        let values = vals.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        Spectrum::from_complex(values, vals.len())
    }

    fn from_complex(mut values: Vec<Complex64>, source_dim: usize) -> Spectrum {
        values.sort_by(|a, b| {
            b.re.partial_cmp(&a.re)
                .unwrap()
                .then(b.im.partial_cmp(&a.im).unwrap())
        });
        Spectrum { values, source_dim }
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    /// Number of eigenvalues with modulus below `tol`.
    pub fn zero_multiplicity(&self, tol: f64) -> usize {
        self.values.iter().filter(|v| v.norm() < tol).count()
    }
}

/// Snap near-real values to the axis, then pair every strictly complex
/// value with a conjugate partner (greedy nearest-neighbour over the upper
/// half-plane) and symmetrize each pair. A missing or distant partner is a
/// solver bug, reported as an error rather than repaired.
fn enforce_conjugate_symmetry(mut values: Vec<Complex64>, tol: f64) -> Result<Vec<Complex64>> {
    for v in values.iter_mut() {
        if v.im.abs() < tol {
            *v = Complex64::new(v.re, 0.0);
        }
    }
    let mut reals: Vec<Complex64> = values.iter().copied().filter(|v| v.im == 0.0).collect();
    let mut upper: Vec<Complex64> = values.iter().copied().filter(|v| v.im > 0.0).collect();
    let mut lower: Vec<Complex64> = values.iter().copied().filter(|v| v.im < 0.0).collect();
    upper.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap().then(a.im.partial_cmp(&b.im).unwrap()));

    let mut out = Vec::with_capacity(values.len());
    out.append(&mut reals);
    for u in upper {
        let target = u.conj();
        let best = lower
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| (**a - target).norm().partial_cmp(&(**b - target).norm()).unwrap())
            .map(|(i, _)| i);
        let i = match best {
            Some(i) if (lower[i] - target).norm() <= 2.0 * tol => i,
            _ => {
                return Err(Error::ConjugateMismatch {
                    re: u.re,
                    im: u.im,
                    tol,
                })
            }
        };
        let l = lower.swap_remove(i);
        let re = 0.5 * (u.re + l.re);
        let im = 0.5 * (u.im - l.im);
        out.push(Complex64::new(re, im));
        out.push(Complex64::new(re, -im));
    }
    if let Some(orphan) = lower.first() {
        return Err(Error::ConjugateMismatch {
            re: orphan.re,
            im: orphan.im,
            tol,
        });
    }
    Ok(out)
}

/// Directed spectral variation sv(A, B): for each eigenvalue of `b` (the
/// perturbed spectrum), the distance to the nearest eigenvalue of `a`
/// (the reference), maximized. Note the argument order: the max runs over
/// `b`, matching sv(A, A~) with the tilde on the second argument.
pub fn spectral_variation(a: &Spectrum, b: &Spectrum) -> Result<f64> {
    Ok(directed_variation(a, b)?.0)
}

fn directed_variation(a: &Spectrum, b: &Spectrum) -> Result<(f64, (Complex64, Complex64))> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    let mut best = (-1.0, (a.values[0], b.values[0]));
    for &bv in &b.values {
        let (d, nearest) = a
            .values
            .iter()
            .map(|&av| ((bv - av).norm(), av))
            .min_by(|x, y| x.0.partial_cmp(&y.0).unwrap())
            .expect("non-empty spectrum");
        if d > best.0 {
            best = (d, (nearest, bv));
        }
    }
    Ok(best)
}

/// Hausdorff distance between two spectra with both directed components
/// and the realizing pair.
#[derive(Debug, Clone, PartialEq)]
pub struct HausdorffResult {
    pub distance: f64,
    /// sv(A, B): max over B's values of the distance to A.
    pub sv_forward: f64,
    /// sv(B, A): max over A's values of the distance to B.
    pub sv_backward: f64,
    /// (value from A, value from B) realizing `distance`.
    pub argmax_pair: (Complex64, Complex64),
}

pub fn hausdorff(a: &Spectrum, b: &Spectrum) -> Result<HausdorffResult> {
    let (fwd, fwd_pair) = directed_variation(a, b)?;
    let (bwd, bwd_pair) = directed_variation(b, a)?;
    let (distance, argmax_pair) = if fwd >= bwd {
        (fwd, fwd_pair)
    } else {
        // bwd_pair is (nearest in B, value in A); normalize to (A, B).
        (bwd, (bwd_pair.1, bwd_pair.0))
    };
    Ok(HausdorffResult {
        distance,
        sv_forward: fwd,
        sv_backward: bwd,
        argmax_pair,
    })
}

/// Eigenvalue condition numbers kappa(lambda_i) = ||v_i|| ||w_i|| / |w_i* v_i|
/// of a complete dominance graph's Laplacian, computed from the closed-form
/// right eigenvectors (cumulative basis vectors) and left eigenvectors
/// (rows of the bidiagonal inverse), indexed i = 1..n for lambda_i = n - i.
///
/// For i < n this equals sqrt(2i). At i = n the left eigenvector is a lone
/// standard basis vector, so the computed value is sqrt(n); see the module
/// documentation on the lib root for the discrepancy with the sqrt(2i)
/// formula at that index.
pub fn eigen_condition_numbers(g: &Digraph) -> Result<Vec<f64>> {
    ensure_dominance(g)?;
    let n = g.n();
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        // v_i = e_1 + ... + e_i and w_i = e_i - e_{i+1} (w_n = e_n) in the
        // dominance ordering; condition numbers are basis-independent.
        let mut v = vec![0.0; n];
        for e in v.iter_mut().take(i) {
            *e = 1.0;
        }
        let mut w = vec![0.0; n];
        w[i - 1] = 1.0;
        if i < n {
            w[i] = -1.0;
        }
        out.push(kappa(&v, &w));
    }
    Ok(out)
}

/// Numerical cross-check for [`eigen_condition_numbers`]: permutes the
/// Laplacian to upper-triangular form and computes each eigenvector by
/// back/forward substitution instead of the closed forms.
pub fn eigen_condition_numbers_numeric(g: &Digraph) -> Result<Vec<f64>> {
    let order = dominance_order(g)?;
    let n = g.n();
    let t = g.laplacian().permuted(&order);
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let lambda = t[(k, k)];
        // Right eigenvector: x[k] = 1, back-substitute upward.
        let mut v = vec![0.0; n];
        v[k] = 1.0;
        for j in (0..k).rev() {
            let s: f64 = (j + 1..=k).map(|c| t[(j, c)] * v[c]).sum();
            v[j] = s / (lambda - t[(j, j)]);
        }
        // Left eigenvector: y[k] = 1, forward-substitute downward.
        let mut w = vec![0.0; n];
        w[k] = 1.0;
        for j in k + 1..n {
            let s: f64 = (k..j).map(|c| w[c] * t[(c, j)]).sum();
            w[j] = s / (lambda - t[(j, j)]);
        }
        out.push(kappa(&v, &w));
    }
    Ok(out)
}

fn kappa(v: &[f64], w: &[f64]) -> f64 {
    let nv = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nw = w.iter().map(|x| x * x).sum::<f64>().sqrt();
    let dot: f64 = v.iter().zip(w).map(|(a, b)| a * b).sum();
    nv * nw / dot.abs()
}

fn ensure_dominance(g: &Digraph) -> Result<()> {
    if crate::rankability::is_complete_dominance(g)? {
        Ok(())
    } else {
        Err(Error::NotDominance)
    }
}

/// Vertex ordering by descending out-degree; for a complete dominance
/// graph this permutes the Laplacian to upper-triangular form.
fn dominance_order(g: &Digraph) -> Result<Vec<usize>> {
    ensure_dominance(g)?;
    let d = g.out_degrees();
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by(|&a, &b| d[b].partial_cmp(&d[a]).unwrap());
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectrum_sorting_is_deterministic() {
        let s = Spectrum::from_complex(
            vec![
                Complex64::new(1.0, -2.0),
                Complex64::new(3.0, 0.0),
                Complex64::new(1.0, 2.0),
            ],
            3,
        );
        let v = s.values();
        assert_eq!(v[0], Complex64::new(3.0, 0.0));
        assert_eq!(v[1], Complex64::new(1.0, 2.0));
        assert_eq!(v[2], Complex64::new(1.0, -2.0));
    }

    #[test]
    fn sv_argument_order_matches_definition() {
        // sv(A, B) maxes over B's values; the worked pair from the docs:
        // sv({5..0}, {0,6,6,6,6,6}) = 1 and sv({0,6,...}, {5..0}) = 3.
        let a = Spectrum::from_reals(&[5.0, 4.0, 3.0, 2.0, 1.0, 0.0]);
        let b = Spectrum::from_reals(&[0.0, 6.0, 6.0, 6.0, 6.0, 6.0]);
        assert_eq!(spectral_variation(&a, &b).unwrap(), 1.0);
        assert_eq!(spectral_variation(&b, &a).unwrap(), 3.0);
        let hd = hausdorff(&a, &b).unwrap();
        assert_eq!(hd.distance, 3.0);
        assert_eq!(hd.sv_forward, 1.0);
        assert_eq!(hd.sv_backward, 3.0);
    }

    #[test]
    fn hausdorff_is_symmetric_and_zero_on_self() {
        let a = Spectrum::from_reals(&[2.0, 1.0, 0.0]);
        let b = Spectrum::from_reals(&[2.5, 0.5, 0.25]);
        let ab = hausdorff(&a, &b).unwrap();
        let ba = hausdorff(&b, &a).unwrap();
        assert_eq!(ab.distance, ba.distance);
        assert_eq!(hausdorff(&a, &a).unwrap().distance, 0.0);
    }

    #[test]
    fn empty_spectrum_errors() {
        let a = Spectrum::from_reals(&[]);
        let b = Spectrum::from_reals(&[1.0]);
        assert!(matches!(spectral_variation(&a, &b), Err(Error::EmptySpectrum)));
        assert!(matches!(hausdorff(&a, &b), Err(Error::EmptySpectrum)));
    }

    #[test]
    fn conjugate_enforcement_symmetrizes_pairs() {
        let vals = vec![
            Complex64::new(1.0, 1.0 + 1e-12),
            Complex64::new(1.0 + 1e-12, -1.0),
            Complex64::new(0.5, 1e-12),
        ];
        let out = enforce_conjugate_symmetry(vals, 1e-8).unwrap();
        assert_eq!(out[0], Complex64::new(0.5, 0.0));
        assert_eq!(out[1].re, out[2].re);
        assert_eq!(out[1].im, -out[2].im);
    }

    #[test]
    fn unpaired_complex_value_is_an_error() {
        let vals = vec![Complex64::new(1.0, 1.0), Complex64::new(1.0, 0.0)];
        assert!(matches!(
            enforce_conjugate_symmetry(vals, 1e-8),
            Err(Error::ConjugateMismatch { .. })
        ));
    }
}
