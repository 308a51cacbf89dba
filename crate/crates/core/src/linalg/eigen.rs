//! Eigenvalue routines for small dense complex matrices.
//!
//! Hermitian problems use cyclic complex Jacobi rotations, which are slow but
//! accurate to a few ulps of the matrix norm. General (non-normal) problems
//! use Householder reduction to Hessenberg form followed by single-shift
//! complex QR iterations with Wilkinson shifts.

use alloc::vec::Vec;

use super::matrix::{ComplexMatrix, C64, ZERO};
use crate::error::{Error, Result};

/// Max absolute deviation of `m - m†` accepted as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-10;
/// Eigenvalues of a PSD matrix down to this value are clamped to zero.
pub const PSD_CLAMP: f64 = 1e-10;

const MAX_JACOBI_SWEEPS: usize = 100;
const QR_ITERS_PER_EIGENVALUE: usize = 60;

/// Eigendecomposition of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    /// Ascending.
    pub values: Vec<f64>,
    /// Column `k` is the unit eigenvector of `values[k]`.
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    /// `V diag(f(λ)) V†`.
    pub fn map_values(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.values.len();
        let mut out = ComplexMatrix::zeros(n, n);
        for (k, &lam) in self.values.iter().enumerate() {
            let w = f(lam);
            if w == 0.0 {
                continue;
            }
            for i in 0..n {
                let vik = self.vectors[(i, k)] * w;
                for j in 0..n {
                    out[(i, j)] += vik * self.vectors[(j, k)].conj();
                }
            }
        }
        out
    }
}

/// Eigenvalues (ascending) and eigenvectors of a Hermitian matrix.
pub fn eig_hermitian(m: &ComplexMatrix) -> Result<HermitianEigen> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let defect = m.hermiticity_defect();
    if defect > HERMITIAN_TOL {
        return Err(Error::NotHermitian(defect));
    }
    let n = m.rows();
    // symmetrize so the rotations act on an exactly Hermitian matrix
    let mut a = m.clone();
    for i in 0..n {
        a[(i, i)] = C64::new(a[(i, i)].re, 0.0);
        for j in i + 1..n {
            let z = (a[(i, j)] + a[(j, i)].conj()) * 0.5;
            a[(i, j)] = z;
            a[(j, i)] = z.conj();
        }
    }
    let mut v = ComplexMatrix::identity(n);
    let scale = a.frobenius_norm();

    let mut converged = n < 2 || scale == 0.0;
    for _ in 0..MAX_JACOBI_SWEEPS {
        if converged {
            break;
        }
        let off: f64 = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)].norm_sqr())
            .sum();
        if libm::sqrt(off) <= f64::EPSILON * 1e-2 * scale {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                jacobi_rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged {
        let off: f64 = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)].norm_sqr())
            .sum();
        // the last sweep usually finishes the job without being re-checked
        if libm::sqrt(off) > 1e-14 * scale {
            return Err(Error::NoConvergence);
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&k| a[(k, k)].re).collect();
    let mut vectors = ComplexMatrix::zeros(n, n);
    for (col, &k) in order.iter().enumerate() {
        for i in 0..n {
            vectors[(i, col)] = v[(i, k)];
        }
    }
    Ok(HermitianEigen { values, vectors })
}

/// One complex Jacobi rotation annihilating `a[p][q]`.
fn jacobi_rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let n = a.rows();
    let phase = apq / mag; // e^{iφ}
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (2.0 * mag);
    let t = if theta >= 0.0 {
        1.0 / (theta + libm::sqrt(1.0 + theta * theta))
    } else {
        -1.0 / (-theta + libm::sqrt(1.0 + theta * theta))
    };
    let c = 1.0 / libm::sqrt(1.0 + t * t);
    let s = t * c;
    let ph_c = phase.conj();

    // A ← A G with G = [[c, s], [-s e^{-iφ}, c e^{-iφ}]] on (p, q)
    for i in 0..n {
        let aip = a[(i, p)];
        let aiq = a[(i, q)];
        a[(i, p)] = aip * c - aiq * ph_c * s;
        a[(i, q)] = aip * s + aiq * ph_c * c;
        let vip = v[(i, p)];
        let viq = v[(i, q)];
        v[(i, p)] = vip * c - viq * ph_c * s;
        v[(i, q)] = vip * s + viq * ph_c * c;
    }
    // A ← G† A
    for j in 0..n {
        let apj = a[(p, j)];
        let aqj = a[(q, j)];
        a[(p, j)] = apj * c - aqj * phase * s;
        a[(q, j)] = apj * s + aqj * phase * c;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = C64::new(a[(q, q)].re, 0.0);
}

/// Eigenvalues of a general square matrix, in no particular order.
pub fn eig_general(m: &ComplexMatrix) -> Result<Vec<C64>> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let mut h = m.clone();
    hessenberg(&mut h);

    let mut hi = n - 1;
    let mut iter = 0;
    let mut budget = QR_ITERS_PER_EIGENVALUE * n;
    while hi > 0 {
        // locate the bottom of the unreduced block ending at `hi`
        let mut lo = hi;
        while lo > 0 {
            let sub = h[(lo, lo - 1)].norm();
            let mut diag = h[(lo, lo)].norm() + h[(lo - 1, lo - 1)].norm();
            if diag == 0.0 {
                diag = h.frobenius_norm();
            }
            if sub <= f64::EPSILON * diag {
                h[(lo, lo - 1)] = ZERO;
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            hi -= 1;
            iter = 0;
            continue;
        }
        if budget == 0 {
            return Err(Error::NoConvergence);
        }
        budget -= 1;
        iter += 1;

        let shift = if iter % 11 == 0 {
            // exceptional shift to break rare cycles
            h[(hi, hi)] + C64::new(h[(hi, hi - 1)].norm(), 0.0)
        } else {
            wilkinson_shift(h[(hi - 1, hi - 1)], h[(hi - 1, hi)], h[(hi, hi - 1)], h[(hi, hi)])
        };
        qr_step(&mut h, lo, hi, shift);
    }
    Ok(h.diagonal())
}

/// Eigenvalue of the trailing 2×2 block closest to its bottom-right entry.
fn wilkinson_shift(a: C64, b: C64, c: C64, d: C64) -> C64 {
    let half = (a - d) * 0.5;
    let disc = (half * half + b * c).sqrt();
    let mid = (a + d) * 0.5;
    let r1 = mid + disc;
    let r2 = mid - disc;
    if (r1 - d).norm() <= (r2 - d).norm() {
        r1
    } else {
        r2
    }
}

/// One explicitly shifted QR step on the active block `lo..=hi`.
fn qr_step(h: &mut ComplexMatrix, lo: usize, hi: usize, shift: C64) {
    for k in lo..=hi {
        h[(k, k)] -= shift;
    }
    let mut rotations: Vec<(C64, C64)> = Vec::with_capacity(hi - lo);
    for k in lo..hi {
        let x = h[(k, k)];
        let y = h[(k + 1, k)];
        let r = libm::hypot(x.norm(), y.norm());
        let (c, s) = if r == 0.0 { (C64::new(1.0, 0.0), ZERO) } else { (x / r, y / r) };
        for j in k..=hi {
            let hk = h[(k, j)];
            let hk1 = h[(k + 1, j)];
            h[(k, j)] = c.conj() * hk + s.conj() * hk1;
            h[(k + 1, j)] = -s * hk + c * hk1;
        }
        rotations.push((c, s));
    }
    for (idx, &(c, s)) in rotations.iter().enumerate() {
        let k = lo + idx;
        for i in lo..=(k + 2).min(hi) {
            let hik = h[(i, k)];
            let hik1 = h[(i, k + 1)];
            h[(i, k)] = hik * c + hik1 * s;
            h[(i, k + 1)] = -hik * s.conj() + hik1 * c.conj();
        }
    }
    for k in lo..=hi {
        h[(k, k)] += shift;
    }
}

/// In-place Householder reduction to upper Hessenberg form (similarity).
fn hessenberg(h: &mut ComplexMatrix) {
    let n = h.rows();
    if n < 3 {
        return;
    }
    for k in 0..n - 2 {
        let norm = libm::sqrt((k + 1..n).map(|i| h[(i, k)].norm_sqr()).sum::<f64>());
        if norm == 0.0 {
            continue;
        }
        let x0 = h[(k + 1, k)];
        let phase = if x0.norm() == 0.0 { C64::new(1.0, 0.0) } else { x0 / x0.norm() };
        let alpha = -phase * norm;
        let mut v: Vec<C64> = (k + 1..n).map(|i| h[(i, k)]).collect();
        v[0] -= alpha;
        let vnorm = libm::sqrt(v.iter().map(|z| z.norm_sqr()).sum::<f64>());
        if vnorm == 0.0 {
            continue;
        }
        for z in &mut v {
            *z /= vnorm;
        }
        // H ← (I - 2vv†) H
        for j in 0..n {
            let dot: C64 = v.iter().enumerate().map(|(r, vr)| vr.conj() * h[(k + 1 + r, j)]).sum();
            for (r, vr) in v.iter().enumerate() {
                h[(k + 1 + r, j)] -= vr * dot * 2.0;
            }
        }
        // H ← H (I - 2vv†)
        for i in 0..n {
            let dot: C64 = v.iter().enumerate().map(|(r, vr)| h[(i, k + 1 + r)] * vr).sum();
            for (r, vr) in v.iter().enumerate() {
                h[(i, k + 1 + r)] -= dot * vr.conj() * 2.0;
            }
        }
        for i in k + 2..n {
            h[(i, k)] = ZERO;
        }
    }
}

/// Hermitian PSD square root. Eigenvalues in `[-1e-10, 0)` are clamped to zero.
pub fn sqrt_psd(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = eig_hermitian(m)?;
    if let Some(&min) = eig.values.first() {
        if min < -PSD_CLAMP {
            return Err(Error::NegativeEigenvalue(min));
        }
    }
    Ok(eig.map_values(|x| libm::sqrt(x.max(0.0))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::{pauli, ONE};
    use alloc::vec;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn diagonal_spectrum_is_sorted() {
        let e = eig_hermitian(&ComplexMatrix::from_diag(&[3.0, 1.0, 2.0])).unwrap();
        assert_eq!(e.values, vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn pauli_x_spectrum() {
        let e = eig_hermitian(&pauli(0)).unwrap();
        assert!((e.values[0] + 1.0).abs() < 1e-15 && (e.values[1] - 1.0).abs() < 1e-15);
        let rec = e.map_values(|x| x);
        assert!(rec.max_abs_diff(&pauli(0)) < 1e-15);
    }

    #[test]
    fn complex_hermitian_reconstructs() {
        let m = ComplexMatrix::from_vec(3, 3, vec![
            c(2.0, 0.0), c(1.0, -1.0), c(0.0, 0.5),
            c(1.0, 1.0), c(-1.0, 0.0), c(0.3, 0.0),
            c(0.0, -0.5), c(0.3, 0.0), c(0.5, 0.0),
        ])
        .unwrap();
        let e = eig_hermitian(&m).unwrap();
        assert!(e.map_values(|x| x).max_abs_diff(&m) < 1e-13);
        let vv = e.vectors.adjoint().matmul(&e.vectors).unwrap();
        assert!(vv.max_abs_diff(&ComplexMatrix::identity(3)) < 1e-13);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::from_vec(2, 2, vec![ONE, ONE, ZERO, ONE]).unwrap();
        assert!(matches!(eig_hermitian(&m), Err(Error::NotHermitian(_))));
        assert!(matches!(eig_hermitian(&ComplexMatrix::zeros(2, 3)), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn upper_triangular_general_spectrum() {
        let m = ComplexMatrix::from_vec(3, 3, vec![
            c(1.0, 1.0), c(5.0, 0.0), c(-2.0, 3.0),
            ZERO, c(-2.0, 0.0), c(7.0, 1.0),
            ZERO, ZERO, c(0.5, -0.5),
        ])
        .unwrap();
        let mut ev = eig_general(&m).unwrap();
        ev.sort_by(|a, b| a.re.total_cmp(&b.re));
        let expected = [c(-2.0, 0.0), c(0.5, -0.5), c(1.0, 1.0)];
        for (got, want) in ev.iter().zip(expected) {
            assert!((got - want).norm() < 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn rotation_matrix_has_complex_pair() {
        // real 2×2 rotation by 90°: eigenvalues ±i
        let m = ComplexMatrix::from_real(2, 2, &[0.0, -1.0, 1.0, 0.0]).unwrap();
        let mut ev = eig_general(&m).unwrap();
        ev.sort_by(|a, b| a.im.total_cmp(&b.im));
        assert!((ev[0] - c(0.0, -1.0)).norm() < 1e-14);
        assert!((ev[1] - c(0.0, 1.0)).norm() < 1e-14);
    }

    #[test]
    fn companion_matrix_roots() {
        // x^4 - 10x^3 + 35x^2 - 50x + 24 = (x-1)(x-2)(x-3)(x-4)
        let m = ComplexMatrix::from_real(4, 4, &[
            10.0, -35.0, 50.0, -24.0,
            1.0, 0.0, 0.0, 0.0,
            0.0, 1.0, 0.0, 0.0,
            0.0, 0.0, 1.0, 0.0,
        ])
        .unwrap();
        let mut ev = eig_general(&m).unwrap();
        ev.sort_by(|a, b| a.re.total_cmp(&b.re));
        for (k, z) in ev.iter().enumerate() {
            assert!((z - c(k as f64 + 1.0, 0.0)).norm() < 1e-9, "{z}");
        }
    }

    #[test]
    fn sqrt_of_diagonal() {
        let r = sqrt_psd(&ComplexMatrix::from_diag(&[4.0, 9.0])).unwrap();
        assert!(r.max_abs_diff(&ComplexMatrix::from_diag(&[2.0, 3.0])) < 1e-15);
        let id = sqrt_psd(&ComplexMatrix::identity(3)).unwrap();
        assert!(id.max_abs_diff(&ComplexMatrix::identity(3)) < 1e-15);
    }

    #[test]
    fn sqrt_clamps_rounding_noise_but_rejects_negatives() {
        assert!(sqrt_psd(&ComplexMatrix::from_diag(&[1.0, -5e-11])).is_ok());
        assert!(matches!(
            sqrt_psd(&ComplexMatrix::from_diag(&[1.0, -1e-6])),
            Err(Error::NegativeEigenvalue(_))
        ));
    }
}
