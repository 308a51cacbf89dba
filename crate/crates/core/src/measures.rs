//! Entanglement and channel diagnostics for two-qubit states.

use crate::error::{Error, Result};
use crate::linalg::{
    eig_general, eig_hermitian, partial_transpose, pauli, sqrt_psd, tensor, ComplexMatrix, C64,
};
use crate::states::DensityMatrix;

/// A PPT eigenvalue below `-ENTANGLEMENT_TOL` means entangled.
pub const ENTANGLEMENT_TOL: f64 = 1e-9;
/// Imaginary parts of spin-flip eigenvalues up to this are rounding noise.
pub const XI_IMAG_TOL: f64 = 1e-8;
/// Negative spin-flip eigenvalues down to this are clamped to zero.
pub const XI_NEG_TOL: f64 = 1e-10;
/// Fidelity achievable by measure-and-prepare teleportation.
pub const CLASSICAL_TELEPORT_FIDELITY: f64 = 2.0 / 3.0;

/// Spectrum of the partial transpose.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PptResult {
    /// Ascending.
    pub eigenvalues: [f64; 4],
    pub entangled: bool,
    /// Minimum eigenvalue in `[-1e-9, 0)`: separable, but only up to rounding.
    pub boundary: bool,
}

impl PptResult {
    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }
}

/// Peres–Horodecki test; necessary and sufficient for two qubits.
pub fn ppt_check(rho: &DensityMatrix) -> Result<PptResult> {
    rho.require_two_qubit()?;
    let second = rho.layout().labels().nth(1).expect("two subsystems");
    let pt = partial_transpose(rho.matrix(), rho.layout(), second)?;
    let values = eig_hermitian(&pt)?.values;
    let eigenvalues = [values[0], values[1], values[2], values[3]];
    let min = eigenvalues[0];
    Ok(PptResult { eigenvalues, entangled: min < -ENTANGLEMENT_TOL, boundary: (-ENTANGLEMENT_TOL..0.0).contains(&min) })
}

/// Concurrence and entanglement of formation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EntanglementReport {
    pub concurrence: f64,
    pub eof: f64,
    /// Eigenvalues of `ρ (σ_y⊗σ_y) ρ* (σ_y⊗σ_y)`, descending.
    pub xi: [f64; 4],
}

/// Wootters concurrence from the spin-flipped product spectrum.
pub fn concurrence(rho: &DensityMatrix) -> Result<EntanglementReport> {
    rho.require_two_qubit()?;
    let yy = tensor(&pauli(1), &pauli(1));
    let m = rho.matrix();
    let flipped = yy.matmul(&m.conj())?.matmul(&yy)?;
    let product = m.matmul(&flipped)?;
    let raw = eig_general(&product)?;

    // eigenvalues below this are indistinguishable from zero in double precision
    let floor = 16.0 * f64::EPSILON * product.frobenius_norm();
    let mut xi = [0.0; 4];
    for (slot, z) in xi.iter_mut().zip(raw) {
        if z.im.abs() > XI_IMAG_TOL {
            return Err(Error::ComplexEigenvalue(z.im));
        }
        if z.re < -XI_NEG_TOL {
            return Err(Error::NegativeEigenvalue(z.re));
        }
        *slot = if z.re <= floor { 0.0 } else { z.re };
    }
    xi.sort_by(|a, b| b.total_cmp(a));
    let roots = xi.map(libm::sqrt);
    let c = (roots[0] - roots[1] - roots[2] - roots[3]).clamp(0.0, 1.0);
    Ok(EntanglementReport { concurrence: c, eof: eof_from_concurrence(c), xi })
}

/// `-x log₂ x - (1-x) log₂(1-x)` with `0 log₂ 0 = 0`.
pub fn binary_entropy(x: f64) -> f64 {
    let term = |p: f64| if p <= 0.0 { 0.0 } else { -p * libm::log2(p) };
    term(x) + term(1.0 - x)
}

/// Entanglement of formation as a function of the concurrence.
pub fn eof_from_concurrence(c: f64) -> f64 {
    let c = c.clamp(0.0, 1.0);
    let root = libm::sqrt(1.0 - c * c);
    binary_entropy(0.5 + 0.5 * root)
}

/// Pauli expansion `ρ = ¼(1⊗1 + s⁽¹⁾·σ⊗1 + 1⊗s⁽²⁾·σ + Σ T_ij σ_i⊗σ_j)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TMatrix {
    /// `T_ij = Tr[ρ σ_i⊗σ_j]`, basis `x, y, z`.
    pub entries: [[f64; 3]; 3],
    pub bloch_a: [f64; 3],
    pub bloch_b: [f64; 3],
}

impl TMatrix {
    pub fn from_entries(entries: [[f64; 3]; 3]) -> Self {
        Self { entries, bloch_a: [0.0; 3], bloch_b: [0.0; 3] }
    }

    /// Density matrix rebuilt from the expansion.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let id = ComplexMatrix::identity(2);
        let mut m = ComplexMatrix::identity(4);
        for i in 0..3 {
            m = &m + &tensor(&pauli(i), &id).scale_real(self.bloch_a[i]);
            m = &m + &tensor(&id, &pauli(i)).scale_real(self.bloch_b[i]);
            for j in 0..3 {
                m = &m + &tensor(&pauli(i), &pauli(j)).scale_real(self.entries[i][j]);
            }
        }
        m.scale_real(0.25)
    }

    /// `Tᵀ T` as a (real symmetric) complex matrix.
    pub fn gram(&self) -> ComplexMatrix {
        let t = &self.entries;
        let mut g = ComplexMatrix::zeros(3, 3);
        for i in 0..3 {
            for j in 0..3 {
                let s: f64 = (0..3).map(|k| t[k][i] * t[k][j]).sum();
                g[(i, j)] = C64::new(s, 0.0);
            }
        }
        g
    }

    /// Ascending eigenvalues of `Tᵀ T`, clamped at zero.
    pub fn gram_spectrum(&self) -> [f64; 3] {
        let v = eig_hermitian(&self.gram()).expect("TᵀT is real symmetric").values;
        [v[0].max(0.0), v[1].max(0.0), v[2].max(0.0)]
    }
}

pub fn t_matrix(rho: &DensityMatrix) -> Result<TMatrix> {
    rho.require_two_qubit()?;
    let id = ComplexMatrix::identity(2);
    let m = rho.matrix();
    let expect = |op: &ComplexMatrix| -> Result<f64> { Ok(m.matmul(op)?.trace().re) };
    let mut t = TMatrix { entries: [[0.0; 3]; 3], bloch_a: [0.0; 3], bloch_b: [0.0; 3] };
    for i in 0..3 {
        t.bloch_a[i] = expect(&tensor(&pauli(i), &id))?;
        t.bloch_b[i] = expect(&tensor(&id, &pauli(i)))?;
        for j in 0..3 {
            t.entries[i][j] = expect(&tensor(&pauli(i), &pauli(j)))?;
        }
    }
    Ok(t)
}

/// Maximal teleportation fidelity `½(1 + ⅓ Tr√(TᵀT))`.
pub fn teleport_fidelity(t: &TMatrix) -> f64 {
    let root = sqrt_psd(&t.gram()).expect("TᵀT is PSD");
    0.5 * (1.0 + root.trace().re / 3.0)
}

/// Whether a fidelity beats measure-and-prepare teleportation.
pub fn beats_classical(f_max: f64) -> bool {
    f_max > CLASSICAL_TELEPORT_FIDELITY
}

/// Sum of the two largest eigenvalues of `TᵀT`; above one the state violates CHSH.
pub fn chsh_statistic(t: &TMatrix) -> f64 {
    let s = t.gram_spectrum();
    s[1] + s[2]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::SubsystemLayout;
    use crate::states::{bell_state, werner_state, BellState, PureState};

    #[test]
    fn maximally_mixed_is_separable() {
        let r = ppt_check(&werner_state(0.25).unwrap()).unwrap();
        for e in r.eigenvalues {
            assert!((e - 0.25).abs() < 1e-15);
        }
        assert!(!r.entangled && !r.boundary);
    }

    #[test]
    fn singlet_measures() {
        let s = bell_state(BellState::PsiMinus).to_density();
        let e = concurrence(&s).unwrap();
        assert!((e.concurrence - 1.0).abs() < 1e-12);
        assert!((e.eof - 1.0).abs() < 1e-12);
        assert!((e.xi[0] - 1.0).abs() < 1e-12 && e.xi[1..].iter().all(|&x| x.abs() < 1e-12));
        let t = t_matrix(&s).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { -1.0 } else { 0.0 };
                assert!((t.entries[i][j] - want).abs() < 1e-15);
            }
            assert!(t.bloch_a[i].abs() < 1e-15 && t.bloch_b[i].abs() < 1e-15);
        }
        assert!((teleport_fidelity(&t) - 1.0).abs() < 1e-12);
        assert!((chsh_statistic(&t) - 2.0).abs() < 1e-12);
        assert!(ppt_check(&s).unwrap().entangled);
    }

    #[test]
    fn product_state_t_matrix() {
        let l = SubsystemLayout::qubits(&["A", "B"]).unwrap();
        let rho = PureState::basis(l, 0).unwrap().to_density();
        let t = t_matrix(&rho).unwrap();
        assert_eq!(t.entries, [[0.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 1.0]]);
        assert_eq!(t.bloch_a, [0.0, 0.0, 1.0]);
        assert_eq!(t.bloch_b, [0.0, 0.0, 1.0]);
        assert!(t.reconstruct().max_abs_diff(rho.matrix()) < 1e-15);
        assert_eq!(concurrence(&rho).unwrap().concurrence, 0.0);
    }

    #[test]
    fn zero_t_matrix_has_no_chsh_violation() {
        assert_eq!(chsh_statistic(&TMatrix::from_entries([[0.0; 3]; 3])), 0.0);
        assert!((teleport_fidelity(&TMatrix::from_entries([[0.0; 3]; 3])) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn eof_endpoints_and_midpoint() {
        assert_eq!(eof_from_concurrence(0.0), 0.0);
        assert_eq!(eof_from_concurrence(1.0), 1.0);
        // h(½ + √3/4) evaluated independently
        let p: f64 = 0.5 + 3f64.sqrt() / 4.0;
        let h = -p * p.log2() - (1.0 - p) * (1.0 - p).log2();
        assert!((eof_from_concurrence(0.5) - h).abs() < 1e-15);
        assert!((h - 0.354_578_903).abs() < 1e-9);
    }

    #[test]
    fn wrong_dimension_is_rejected() {
        let l = SubsystemLayout::qubits(&["A", "B", "C"]).unwrap();
        let rho = PureState::basis(l, 0).unwrap().to_density();
        assert!(matches!(ppt_check(&rho), Err(Error::DimensionMismatch { .. })));
        assert!(concurrence(&rho).is_err());
        assert!(t_matrix(&rho).is_err());
    }
}
