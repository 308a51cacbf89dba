#![allow(dead_code)]

use entsplit_core::linalg::eig_hermitian;
use entsplit_core::{ComplexMatrix, C64};
use rand::Rng;

pub fn gaussian_ish<R: Rng>(rng: &mut R) -> f64 {
    // sum of uniforms; plenty for generic test matrices
    (0..6).map(|_| rng.gen::<f64>()).sum::<f64>() - 3.0
}

pub fn random_matrix<R: Rng>(rng: &mut R, n: usize) -> ComplexMatrix {
    let data = (0..n * n).map(|_| C64::new(gaussian_ish(rng), gaussian_ish(rng))).collect();
    ComplexMatrix::from_vec(n, n, data).unwrap()
}

pub fn random_hermitian<R: Rng>(rng: &mut R, n: usize) -> ComplexMatrix {
    let g = random_matrix(rng, n);
    (&g + &g.adjoint()).scale_real(0.5)
}

/// `G G† / Tr`: full rank with probability one.
pub fn random_density<R: Rng>(rng: &mut R, n: usize) -> ComplexMatrix {
    let g = random_matrix(rng, n);
    let m = g.matmul(&g.adjoint()).unwrap();
    let tr = m.trace().re;
    m.scale_real(1.0 / tr)
}

pub fn random_unitary<R: Rng>(rng: &mut R, n: usize) -> ComplexMatrix {
    eig_hermitian(&random_hermitian(rng, n)).unwrap().vectors
}

pub fn random_ket<R: Rng>(rng: &mut R, n: usize) -> Vec<C64> {
    let v: Vec<C64> = (0..n).map(|_| C64::new(gaussian_ish(rng), gaussian_ish(rng))).collect();
    let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|x| x / norm).collect()
}

pub fn alpha_sq_grid(points: usize) -> impl Iterator<Item = f64> {
    (0..points).map(move |i| i as f64 / (points - 1) as f64)
}
