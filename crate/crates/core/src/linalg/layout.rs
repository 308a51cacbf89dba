use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::matrix::{ComplexMatrix, ZERO};
use crate::error::{Error, Result};

/// Labeled tensor-product structure of a Hilbert space.
///
/// Ordering is big-endian: the first label is the most significant factor of
/// a flat basis index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsystemLayout {
    labels: Vec<String>,
    dims: Vec<usize>,
}

impl SubsystemLayout {
    pub fn new(labels: &[&str], dims: &[usize]) -> Result<Self> {
        if labels.len() != dims.len() {
            return Err(Error::DimensionMismatch { expected: labels.len(), found: dims.len() });
        }
        if let Some(&d) = dims.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidSubsystemDim(d));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.to_string()));
            }
        }
        Ok(Self { labels: labels.iter().map(|l| l.to_string()).collect(), dims: dims.to_vec() })
    }

    /// All subsystems are qubits.
    pub fn qubits(labels: &[&str]) -> Result<Self> {
        Self::new(labels, &alloc::vec![2; labels.len()])
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(String::as_str)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn position(&self, label: &str) -> Result<usize> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Stride of each subsystem digit in a flat index.
    fn strides(&self) -> Vec<usize> {
        let mut strides = alloc::vec![1; self.dims.len()];
        for i in (0..self.dims.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * self.dims[i + 1];
        }
        strides
    }

    /// Positions of `keep`, sorted into layout order.
    fn positions(&self, keep: &[&str]) -> Result<Vec<usize>> {
        let mut pos = keep.iter().map(|l| self.position(l)).collect::<Result<Vec<_>>>()?;
        pos.sort_unstable();
        pos.dedup();
        Ok(pos)
    }

    /// The layout of the kept subsystems, in their original relative order.
    pub fn restrict(&self, keep: &[&str]) -> Result<Self> {
        let pos = self.positions(keep)?;
        Ok(Self {
            labels: pos.iter().map(|&p| self.labels[p].clone()).collect(),
            dims: pos.iter().map(|&p| self.dims[p]).collect(),
        })
    }

    fn check_square(&self, rho: &ComplexMatrix) -> Result<()> {
        if !rho.is_square() {
            return Err(Error::NotSquare { rows: rho.rows(), cols: rho.cols() });
        }
        if rho.rows() != self.total_dim() {
            return Err(Error::DimensionMismatch { expected: self.total_dim(), found: rho.rows() });
        }
        Ok(())
    }

    /// Flat indices of the subspace spanned by `positions`, enumerated in
    /// big-endian order of those subsystems; other digits zero.
    fn sub_offsets(&self, positions: &[usize], strides: &[usize]) -> Vec<usize> {
        let size: usize = positions.iter().map(|&p| self.dims[p]).product();
        let mut out = Vec::with_capacity(size);
        for mut k in 0..size {
            let mut flat = 0;
            for &p in positions.iter().rev() {
                flat += (k % self.dims[p]) * strides[p];
                k /= self.dims[p];
            }
            out.push(flat);
        }
        out
    }
}

/// Reduce `rho` onto the subsystems in `keep`, tracing out the rest.
///
/// The kept subsystems stay in their original relative order regardless of
/// the order of `keep`.
pub fn partial_trace(rho: &ComplexMatrix, layout: &SubsystemLayout, keep: &[&str]) -> Result<ComplexMatrix> {
    layout.check_square(rho)?;
    let kept = layout.positions(keep)?;
    let traced: Vec<usize> = (0..layout.len()).filter(|p| !kept.contains(p)).collect();
    let strides = layout.strides();
    let k_off = layout.sub_offsets(&kept, &strides);
    let t_off = layout.sub_offsets(&traced, &strides);

    let dk = k_off.len();
    let mut out = ComplexMatrix::zeros(dk, dk);
    for (i, &ki) in k_off.iter().enumerate() {
        for (j, &kj) in k_off.iter().enumerate() {
            let mut acc = ZERO;
            for &t in &t_off {
                acc += rho[(ki + t, kj + t)];
            }
            out[(i, j)] = acc;
        }
    }
    Ok(out)
}

/// Transpose the indices of one subsystem, leaving the others untouched.
pub fn partial_transpose(rho: &ComplexMatrix, layout: &SubsystemLayout, subsystem: &str) -> Result<ComplexMatrix> {
    layout.check_square(rho)?;
    let p = layout.position(subsystem)?;
    let stride = layout.strides()[p];
    let dim = layout.dims[p];
    let n = rho.rows();
    let mut out = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        let di = (i / stride) % dim;
        for j in 0..n {
            let dj = (j / stride) % dim;
            let src_i = i - di * stride + dj * stride;
            let src_j = j - dj * stride + di * stride;
            out[(i, j)] = rho[(src_i, src_j)];
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::{tensor, C64};

    fn singlet_projector() -> ComplexMatrix {
        let s = libm::sqrt(0.5);
        let v = [ZERO, C64::new(s, 0.0), C64::new(-s, 0.0), ZERO];
        ComplexMatrix::outer(&v, &v)
    }

    #[test]
    fn layout_validation() {
        assert_eq!(SubsystemLayout::new(&["A", "A"], &[2, 2]), Err(Error::DuplicateLabel("A".into())));
        assert_eq!(SubsystemLayout::new(&["A"], &[1]), Err(Error::InvalidSubsystemDim(1)));
        let l = SubsystemLayout::new(&["A", "B1", "anc"], &[2, 2, 4]).unwrap();
        assert_eq!(l.total_dim(), 16);
        assert_eq!(l.strides(), alloc::vec![8, 4, 1]);
        assert_eq!(l.position("x"), Err(Error::UnknownLabel("x".into())));
    }

    #[test]
    fn singlet_marginal_is_maximally_mixed() {
        let l = SubsystemLayout::qubits(&["A", "B"]).unwrap();
        let r = partial_trace(&singlet_projector(), &l, &["A"]).unwrap();
        assert!(r.max_abs_diff(&ComplexMatrix::identity(2).scale_real(0.5)) < 1e-15);
    }

    #[test]
    fn big_endian_ordering() {
        // |0⟩⟨0| ⊗ |1⟩⟨1| ⊗ I/2 : keeping B must give |1⟩⟨1| regardless of keep order.
        let p0 = ComplexMatrix::from_diag(&[1.0, 0.0]);
        let p1 = ComplexMatrix::from_diag(&[0.0, 1.0]);
        let mix = ComplexMatrix::from_diag(&[0.5, 0.5]);
        let rho = tensor(&tensor(&p0, &p1), &mix);
        let l = SubsystemLayout::qubits(&["A", "B", "C"]).unwrap();
        assert_eq!(partial_trace(&rho, &l, &["B"]).unwrap(), p1);
        assert_eq!(partial_trace(&rho, &l, &["B", "A"]).unwrap(), tensor(&p0, &p1));
        assert_eq!(partial_trace(&rho, &l, &["A", "B"]).unwrap(), tensor(&p0, &p1));
    }

    #[test]
    fn partial_trace_errors() {
        let l = SubsystemLayout::qubits(&["A", "B"]).unwrap();
        assert_eq!(partial_trace(&ComplexMatrix::identity(4), &l, &["Z"]), Err(Error::UnknownLabel("Z".into())));
        assert!(matches!(
            partial_trace(&ComplexMatrix::identity(8), &l, &["A"]),
            Err(Error::DimensionMismatch { expected: 4, found: 8 })
        ));
        assert_eq!(partial_transpose(&ComplexMatrix::identity(4), &l, "Q"), Err(Error::UnknownLabel("Q".into())));
    }

    #[test]
    fn transpose_of_product_state() {
        let a = ComplexMatrix::from_vec(2, 2, alloc::vec![
            C64::new(0.7, 0.0), C64::new(0.1, 0.2), C64::new(0.1, -0.2), C64::new(0.3, 0.0)
        ])
        .unwrap();
        let b = ComplexMatrix::from_vec(2, 2, alloc::vec![
            C64::new(0.4, 0.0), C64::new(-0.2, 0.1), C64::new(-0.2, -0.1), C64::new(0.6, 0.0)
        ])
        .unwrap();
        let l = SubsystemLayout::qubits(&["A", "B"]).unwrap();
        let pt = partial_transpose(&tensor(&a, &b), &l, "B").unwrap();
        assert_eq!(pt, tensor(&a, &b.transpose()));
    }

    #[test]
    fn partial_transpose_is_an_involution() {
        let l = SubsystemLayout::new(&["A", "B"], &[2, 3]).unwrap();
        let data = (0..36).map(|k| C64::new(k as f64, -(k as f64) / 7.0)).collect();
        let m = ComplexMatrix::from_vec(6, 6, data).unwrap();
        for s in ["A", "B"] {
            let twice = partial_transpose(&partial_transpose(&m, &l, s).unwrap(), &l, s).unwrap();
            assert_eq!(twice, m);
        }
    }
}
