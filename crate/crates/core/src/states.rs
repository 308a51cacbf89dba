//! Pure and mixed states used by the splitting experiments: computational
//! basis states, the Bell basis, Schmidt-form pure states and Werner states.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{eig_hermitian, partial_trace, ComplexMatrix, SubsystemLayout, C64, ONE, ZERO};

/// Tolerance on `Σ|amplitude|² = 1`.
pub const NORM_TOL: f64 = 1e-12;
/// Tolerance on `Tr ρ = 1` and on Hermiticity of a density matrix.
pub const TRACE_TOL: f64 = 1e-10;
/// Most negative eigenvalue accepted for a density matrix.
pub const POSITIVITY_TOL: f64 = 1e-9;

/// A normalized state vector over a labeled tensor product.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    amplitudes: Vec<C64>,
    layout: SubsystemLayout,
}

impl PureState {
    pub fn new(amplitudes: Vec<C64>, layout: SubsystemLayout) -> Result<Self> {
        if amplitudes.len() != layout.total_dim() {
            return Err(Error::DimensionMismatch { expected: layout.total_dim(), found: amplitudes.len() });
        }
        let norm: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm - 1.0).abs() > NORM_TOL || !norm.is_finite() {
            return Err(Error::NotNormalized((norm - 1.0).abs()));
        }
        Ok(Self { amplitudes, layout })
    }

    /// The computational basis state with flat index `index`.
    pub fn basis(layout: SubsystemLayout, index: usize) -> Result<Self> {
        let n = layout.total_dim();
        if index >= n {
            return Err(Error::DimensionMismatch { expected: n, found: index });
        }
        let mut amplitudes = vec![ZERO; n];
        amplitudes[index] = ONE;
        Ok(Self { amplitudes, layout })
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn layout(&self) -> &SubsystemLayout {
        &self.layout
    }

    /// `|s⟩⟨s|`.
    pub fn to_density(&self) -> DensityMatrix {
        DensityMatrix {
            matrix: ComplexMatrix::outer(&self.amplitudes, &self.amplitudes),
            layout: self.layout.clone(),
        }
    }

    pub fn inner(&self, other: &PureState) -> C64 {
        self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a.conj() * b).sum()
    }
}

/// A trace-one, Hermitian, positive semidefinite matrix with a layout.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    layout: SubsystemLayout,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity.
    pub fn new(matrix: ComplexMatrix, layout: SubsystemLayout) -> Result<Self> {
        let rho = Self::new_unchecked_positivity(matrix, layout)?;
        let min = eig_hermitian(&rho.matrix)?.values[0];
        if min < -POSITIVITY_TOL {
            return Err(Error::NegativeEigenvalue(min));
        }
        Ok(rho)
    }

    /// Checks shape, Hermiticity and trace but skips the eigenvalue test.
    ///
    /// For matrices that are PSD by construction (`K ρ K†` with `ρ` valid).
    pub(crate) fn new_unchecked_positivity(matrix: ComplexMatrix, layout: SubsystemLayout) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare { rows: matrix.rows(), cols: matrix.cols() });
        }
        if matrix.rows() != layout.total_dim() {
            return Err(Error::DimensionMismatch { expected: layout.total_dim(), found: matrix.rows() });
        }
        let herm = matrix.hermiticity_defect();
        if herm > TRACE_TOL {
            return Err(Error::NotHermitian(herm));
        }
        let tr = matrix.trace();
        let dev = (tr - ONE).norm();
        if dev > TRACE_TOL {
            return Err(Error::NotNormalized(dev));
        }
        Ok(Self { matrix, layout })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn layout(&self) -> &SubsystemLayout {
        &self.layout
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    /// Reduced state on `keep` (original relative order preserved).
    pub fn reduce(&self, keep: &[&str]) -> Result<DensityMatrix> {
        let matrix = partial_trace(&self.matrix, &self.layout, keep)?;
        let layout = self.layout.restrict(keep)?;
        Ok(DensityMatrix { matrix, layout })
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> f64 {
        let n = self.matrix.rows();
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                acc += (self.matrix[(i, j)] * self.matrix[(j, i)]).re;
            }
        }
        acc
    }

    /// `⟨ψ|ρ|ψ⟩` for a state on the same space.
    pub fn overlap(&self, psi: &PureState) -> f64 {
        self.matrix.expectation(psi.amplitudes()).re
    }

    /// Whether both subsystems are qubits and there are exactly two.
    pub fn is_two_qubit(&self) -> bool {
        self.layout.dims() == [2, 2]
    }

    pub(crate) fn require_two_qubit(&self) -> Result<()> {
        if self.is_two_qubit() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: 4, found: self.matrix.rows() })
        }
    }
}

/// The four Bell states.
///
/// `|Ψ±⟩ = (|01⟩ ± |10⟩)/√2`, `|Φ±⟩ = (|00⟩ ± |11⟩)/√2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BellState {
    PsiMinus,
    PsiPlus,
    PhiPlus,
    PhiMinus,
}

impl BellState {
    /// Singlet first; this order is used for Bell-basis components.
    pub const ALL: [BellState; 4] = [BellState::PsiMinus, BellState::PsiPlus, BellState::PhiPlus, BellState::PhiMinus];

    pub fn amplitudes(self) -> [C64; 4] {
        let s = C64::new(core::f64::consts::FRAC_1_SQRT_2, 0.0);
        match self {
            BellState::PsiMinus => [ZERO, s, -s, ZERO],
            BellState::PsiPlus => [ZERO, s, s, ZERO],
            BellState::PhiPlus => [s, ZERO, ZERO, s],
            BellState::PhiMinus => [s, ZERO, ZERO, -s],
        }
    }
}

fn two_qubit_layout() -> SubsystemLayout {
    SubsystemLayout::qubits(&["A", "B1"]).expect("static layout")
}

pub fn bell_state(which: BellState) -> PureState {
    PureState { amplitudes: which.amplitudes().to_vec(), layout: two_qubit_layout() }
}

/// Coefficients `α`, `β` of the Schmidt-form state `α|01⟩ - β|10⟩`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SchmidtParams {
    alpha: C64,
    beta: C64,
}

impl SchmidtParams {
    pub fn new(alpha: C64, beta: C64) -> Result<Self> {
        let norm = alpha.norm_sqr() + beta.norm_sqr();
        if (norm - 1.0).abs() > NORM_TOL || !norm.is_finite() {
            return Err(Error::NotNormalized((norm - 1.0).abs()));
        }
        Ok(Self { alpha, beta })
    }

    /// Real, nonnegative `α = √x`, `β = √(1-x)`.
    pub fn from_alpha_sq(alpha_sq: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&alpha_sq) {
            return Err(Error::OutOfRange { what: "|alpha|^2", value: alpha_sq });
        }
        Ok(Self { alpha: C64::new(libm::sqrt(alpha_sq), 0.0), beta: C64::new(libm::sqrt(1.0 - alpha_sq), 0.0) })
    }

    pub fn alpha(&self) -> C64 {
        self.alpha
    }

    pub fn beta(&self) -> C64 {
        self.beta
    }

    pub fn alpha_sq(&self) -> f64 {
        self.alpha.norm_sqr()
    }

    /// `|αβ|`.
    pub fn abs_alpha_beta(&self) -> f64 {
        self.alpha.norm() * self.beta.norm()
    }
}

/// `α|01⟩ - β|10⟩` on `(A, B1)`, signs exactly as written.
pub fn schmidt_state(p: &SchmidtParams) -> PureState {
    PureState { amplitudes: vec![ZERO, p.alpha, -p.beta, ZERO], layout: two_qubit_layout() }
}

/// `F|Ψ⁻⟩⟨Ψ⁻| + (1-F)/3 (|Ψ⁺⟩⟨Ψ⁺| + |Φ⁺⟩⟨Φ⁺| + |Φ⁻⟩⟨Φ⁻|)` on `(A, B1)`.
pub fn werner_state(fw: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&fw) {
        return Err(Error::OutOfRange { what: "Werner fraction", value: fw });
    }
    let rest = (1.0 - fw) / 3.0;
    let mut m = ComplexMatrix::zeros(4, 4);
    for (k, bell) in BellState::ALL.into_iter().enumerate() {
        let w = if k == 0 { fw } else { rest };
        let amp = bell.amplitudes();
        m = &m + &ComplexMatrix::outer(&amp, &amp).scale_real(w);
    }
    Ok(DensityMatrix { matrix: m, layout: two_qubit_layout() })
}

/// `ρ` in the Bell basis, ordered `Ψ⁻, Ψ⁺, Φ⁺, Φ⁻`.
pub fn bell_basis_components(rho: &DensityMatrix) -> Result<ComplexMatrix> {
    rho.require_two_qubit()?;
    let mut out = ComplexMatrix::zeros(4, 4);
    let basis: Vec<[C64; 4]> = BellState::ALL.iter().map(|b| b.amplitudes()).collect();
    let m = rho.matrix();
    for (i, bi) in basis.iter().enumerate() {
        for (j, bj) in basis.iter().enumerate() {
            let mut acc = ZERO;
            for r in 0..4 {
                for c in 0..4 {
                    acc += bi[r].conj() * m[(r, c)] * bj[c];
                }
            }
            out[(i, j)] = acc;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const S: f64 = core::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn singlet_amplitudes() {
        let s = bell_state(BellState::PsiMinus);
        assert_eq!(s.amplitudes(), &[ZERO, C64::new(S, 0.0), C64::new(-S, 0.0), ZERO]);
        let p = bell_state(BellState::PhiPlus);
        assert_eq!(p.amplitudes(), &[C64::new(S, 0.0), ZERO, ZERO, C64::new(S, 0.0)]);
    }

    #[test]
    fn bell_basis_is_orthonormal() {
        for (i, a) in BellState::ALL.iter().enumerate() {
            for (j, b) in BellState::ALL.iter().enumerate() {
                let ov = bell_state(*a).inner(&bell_state(*b));
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((ov - C64::new(want, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn schmidt_endpoints() {
        let sym = SchmidtParams::new(C64::new(S, 0.0), C64::new(S, 0.0)).unwrap();
        assert_eq!(schmidt_state(&sym), bell_state(BellState::PsiMinus));
        let prod = SchmidtParams::from_alpha_sq(1.0).unwrap();
        assert_eq!(schmidt_state(&prod).amplitudes(), &[ZERO, ONE, ZERO, ZERO]);
        assert!(matches!(SchmidtParams::new(ONE, ONE), Err(Error::NotNormalized(_))));
        assert!(SchmidtParams::from_alpha_sq(1.5).is_err());
    }

    #[test]
    fn werner_special_points() {
        let w1 = werner_state(1.0).unwrap();
        assert!(w1.matrix().max_abs_diff(bell_state(BellState::PsiMinus).to_density().matrix()) < 1e-15);
        let w = werner_state(0.25).unwrap();
        assert!(w.matrix().max_abs_diff(&ComplexMatrix::identity(4).scale_real(0.25)) < 1e-15);
        assert!(werner_state(1.01).is_err());
        assert!(werner_state(-0.1).is_err());
    }

    #[test]
    fn werner_is_bell_diagonal() {
        for fw in [0.0, 0.3, 0.625, 0.75, 1.0] {
            let comps = bell_basis_components(&werner_state(fw).unwrap()).unwrap();
            let r = (1.0 - fw) / 3.0;
            for i in 0..4 {
                for j in 0..4 {
                    let want = if i != j { 0.0 } else if i == 0 { fw } else { r };
                    assert!((comps[(i, j)] - C64::new(want, 0.0)).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn to_density_of_basis_and_singlet() {
        let l = SubsystemLayout::qubits(&["q"]).unwrap();
        let rho = PureState::basis(l, 0).unwrap().to_density();
        assert_eq!(rho.matrix(), &ComplexMatrix::from_diag(&[1.0, 0.0]));
        let s = bell_state(BellState::PsiMinus).to_density();
        let m = s.matrix();
        assert!((m[(1, 1)].re - 0.5).abs() < 1e-15 && (m[(1, 2)].re + 0.5).abs() < 1e-15);
        assert!((m[(2, 1)].re + 0.5).abs() < 1e-15 && (m[(2, 2)].re - 0.5).abs() < 1e-15);
        assert_eq!(m[(0, 0)], ZERO);
        assert!((s.purity() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn schmidt_marginal_on_a() {
        let p = SchmidtParams::new(C64::new(0.6, 0.0), C64::new(0.0, 0.8)).unwrap();
        let r = schmidt_state(&p).to_density().reduce(&["A"]).unwrap();
        assert!(r.matrix().max_abs_diff(&ComplexMatrix::from_diag(&[0.36, 0.64])) < 1e-15);
    }

    #[test]
    fn density_validation() {
        let l = SubsystemLayout::qubits(&["A"]).unwrap();
        let bad = ComplexMatrix::from_diag(&[1.5, -0.5]);
        assert!(matches!(DensityMatrix::new(bad, l.clone()), Err(Error::NegativeEigenvalue(_))));
        let untrace = ComplexMatrix::from_diag(&[0.5, 0.4]);
        assert!(matches!(DensityMatrix::new(untrace, l), Err(Error::NotNormalized(_))));
    }
}
