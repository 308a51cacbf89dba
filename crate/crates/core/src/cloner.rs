//! Symmetric local transformations on Bob's qubit, a blank qubit and an ancilla.
//!
//! A transformation is fixed by its action on the two basis states of Bob's
//! qubit (the blank qubit and the ancilla start in `|0⟩`):
//!
//! ```text
//! U|0⟩|0⟩|0⟩ = a |00⟩|A⟩ + b (|01⟩ + |10⟩)|B⟩ + c |11⟩|C⟩
//! U|1⟩|0⟩|0⟩ = ã |11⟩|Ã⟩ + b̃ (|10⟩ + |01⟩)|B̃⟩ + c̃ |00⟩|C̃⟩
//! ```
//!
//! Both images are symmetric under exchange of the two output qubits. In each
//! [`Branch`], `a` weighs "both outputs equal the input", `b` "one output
//! flipped" and `c` "both flipped".

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, SubsystemLayout, C64, ZERO};
use crate::states::{DensityMatrix, PureState};

/// Normalization / orthogonality tolerance for the image vectors.
pub const UNITARITY_TOL: f64 = 1e-10;
/// A constraint passes when its residual is at most this.
pub const CONSTRAINT_TOL: f64 = 1e-9;

/// Coefficients and ancilla kets for one input basis state.
#[derive(Clone, Debug, PartialEq)]
pub struct Branch {
    pub a: C64,
    pub b: C64,
    pub c: C64,
    pub anc_a: Vec<C64>,
    pub anc_b: Vec<C64>,
    pub anc_c: Vec<C64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CloneTransform {
    zero: Branch,
    one: Branch,
    ancilla_dim: usize,
}

fn braket(x: &[C64], y: &[C64]) -> C64 {
    x.iter().zip(y).map(|(a, b)| a.conj() * b).sum()
}

fn real(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn ket(dim: usize, entries: &[(usize, f64)]) -> Vec<C64> {
    let mut v = vec![ZERO; dim];
    for &(i, x) in entries {
        v[i] = real(x);
    }
    v
}

impl CloneTransform {
    /// `zero` is the image of `|0⟩` (a, b, c, |A⟩, |B⟩, |C⟩), `one` the image
    /// of `|1⟩` (ã, b̃, c̃, |Ã⟩, |B̃⟩, |C̃⟩).
    pub fn new(zero: Branch, one: Branch) -> Result<Self> {
        let d = zero.anc_a.len();
        if d < 2 {
            return Err(Error::InvalidSubsystemDim(d));
        }
        for k in [&zero.anc_a, &zero.anc_b, &zero.anc_c, &one.anc_a, &one.anc_b, &one.anc_c] {
            if k.len() != d {
                return Err(Error::DimensionMismatch { expected: d, found: k.len() });
            }
            let n: f64 = k.iter().map(|z| z.norm_sqr()).sum();
            if !n.is_finite() || (n - 1.0).abs() > UNITARITY_TOL {
                return Err(Error::NotNormalized((n - 1.0).abs()));
            }
        }
        let t = Self { zero, one, ancilla_dim: d };
        let (v0, v1) = t.raw_images();
        for v in [&v0, &v1] {
            let n: f64 = v.iter().map(|z| z.norm_sqr()).sum();
            if !n.is_finite() || (n - 1.0).abs() > UNITARITY_TOL {
                return Err(Error::NotNormalized((n - 1.0).abs()));
            }
        }
        let ov = braket(&v0, &v1).norm();
        if ov > UNITARITY_TOL {
            return Err(Error::NotOrthogonal(ov));
        }
        Ok(t)
    }

    /// The optimal universal symmetric cloner with a one-qubit ancilla:
    /// `a = ã = √(2/3)`, `b = b̃ = √(1/6)`, `c = c̃ = 0`,
    /// `|A⟩ = |B̃⟩ = |0⟩`, `|B⟩ = |Ã⟩ = |1⟩`.
    pub fn optimal() -> Self {
        let a = real(libm::sqrt(2.0 / 3.0));
        let b = real(libm::sqrt(1.0 / 6.0));
        let k0 = ket(2, &[(0, 1.0)]);
        let k1 = ket(2, &[(1, 1.0)]);
        let zero = Branch { a, b, c: ZERO, anc_a: k0.clone(), anc_b: k1.clone(), anc_c: k0.clone() };
        let one = Branch { a, b, c: ZERO, anc_a: k1, anc_b: k0.clone(), anc_c: k0 };
        Self::new(zero, one).expect("optimal cloner is unitary")
    }

    /// An isotropic but suboptimal cloner (cloning fidelity 3/4) on a
    /// two-qubit ancilla `|a1 a2⟩`.
    pub fn bad() -> Self {
        let h = core::f64::consts::FRAC_1_SQRT_2;
        let a = real(h);
        let b = real(0.5);
        // ancilla index = 2·a1 + a2
        let a00 = ket(4, &[(0, 1.0)]);
        let a10 = ket(4, &[(2, 1.0)]);
        let a1p = ket(4, &[(2, h), (3, h)]);
        let a0p = ket(4, &[(0, h), (1, h)]);
        let zero = Branch { a, b, c: ZERO, anc_a: a00.clone(), anc_b: a10, anc_c: a00.clone() };
        let one = Branch { a, b, c: ZERO, anc_a: a1p, anc_b: a0p, anc_c: a00 };
        Self::new(zero, one).expect("bad cloner is unitary")
    }

    /// Member of a two-parameter family of symmetric isotropic transforms on a
    /// four-dimensional ancilla, indexed by real `a = ã` and `c = c̃`.
    ///
    /// `b` follows from normalization and the ancilla overlaps are solved so
    /// that every splitting constraint holds exactly. Returns `None` where no
    /// member exists. The family contains the optimal cloner at
    /// `(√(2/3), 0)` and the universal-NOT point `(1/√6, 1/√2)`.
    pub fn isotropic_family(a: f64, c: f64) -> Option<Self> {
        const EDGE: f64 = 1e-12;
        if !(a > 0.0 && c >= 0.0) {
            return None;
        }
        let b_sq = (1.0 - a * a - c * c) / 2.0;
        if b_sq <= 0.0 {
            return None;
        }
        let b = libm::sqrt(b_sq);
        let mut p = (a * a - c * c) / (2.0 * a * b);
        if p.abs() > 1.0 + EDGE {
            return None;
        }
        p = p.clamp(-1.0, 1.0);
        let q = libm::sqrt(1.0 - p * p);

        let e3 = ket(4, &[(3, 1.0)]);
        let anc_c = if c == 0.0 {
            // orthogonality of the images then forces q = 0
            if q > 1e-9 {
                return None;
            }
            e3
        } else {
            let wn = libm::sqrt(1.0 + q * q);
            let mut s = b_sq * q * wn / (a * c);
            if s > 1.0 + EDGE {
                return None;
            }
            s = s.min(1.0);
            let t = libm::sqrt(1.0 - s * s);
            ket(4, &[(0, -s * q / wn), (1, -s * q / wn), (2, s * p / wn), (3, t)])
        };
        let zero = Branch {
            a: real(a),
            b: real(b),
            c: real(c),
            anc_a: ket(4, &[(0, 1.0)]),
            anc_b: ket(4, &[(1, p), (2, q)]),
            anc_c: anc_c.clone(),
        };
        let one = Branch {
            a: real(a),
            b: real(b),
            c: real(c),
            anc_a: ket(4, &[(1, 1.0)]),
            anc_b: ket(4, &[(0, p), (2, q)]),
            anc_c,
        };
        Self::new(zero, one).ok()
    }

    /// The family member that erases a singlet completely (singlet fraction 0).
    pub fn universal_not() -> Self {
        Self::isotropic_family(libm::sqrt(1.0 / 6.0), core::f64::consts::FRAC_1_SQRT_2)
            .expect("universal-NOT point lies in the family")
    }

    pub fn zero_branch(&self) -> &Branch {
        &self.zero
    }

    pub fn one_branch(&self) -> &Branch {
        &self.one
    }

    pub fn ancilla_dim(&self) -> usize {
        self.ancilla_dim
    }

    /// Layout `(B1, B2, anc)` of the output space.
    pub fn output_layout(&self) -> SubsystemLayout {
        SubsystemLayout::new(&["B1", "B2", "anc"], &[2, 2, self.ancilla_dim]).expect("valid layout")
    }

    fn raw_images(&self) -> (Vec<C64>, Vec<C64>) {
        let d = self.ancilla_dim;
        let mut v0 = vec![ZERO; 4 * d];
        let mut v1 = vec![ZERO; 4 * d];
        // qubit pair index `pair` (B1 B2) occupies v[pair·d .. pair·d + d]
        let add = |v: &mut Vec<C64>, pair: usize, coeff: C64, anc: &[C64]| {
            for (k, x) in anc.iter().enumerate() {
                v[pair * d + k] += coeff * x;
            }
        };
        let z = &self.zero;
        add(&mut v0, 0b00, z.a, &z.anc_a);
        add(&mut v0, 0b01, z.b, &z.anc_b);
        add(&mut v0, 0b10, z.b, &z.anc_b);
        add(&mut v0, 0b11, z.c, &z.anc_c);
        let o = &self.one;
        add(&mut v1, 0b11, o.a, &o.anc_a);
        add(&mut v1, 0b10, o.b, &o.anc_b);
        add(&mut v1, 0b01, o.b, &o.anc_b);
        add(&mut v1, 0b00, o.c, &o.anc_c);
        (v0, v1)
    }

    /// Images of `|0⟩|0⟩|0⟩` and `|1⟩|0⟩|0⟩` on `(B1, B2, anc)`.
    pub fn image_vectors(&self) -> (PureState, PureState) {
        let (v0, v1) = self.raw_images();
        let l = self.output_layout();
        (
            PureState::new(v0, l.clone()).expect("checked at construction"),
            PureState::new(v1, l).expect("checked at construction"),
        )
    }

    /// Residuals of the seven splitting constraints.
    pub fn check_constraints(&self) -> ConstraintReport {
        let (a, b, c) = (self.zero.a, self.zero.b, self.zero.c);
        let (at, bt, ct) = (self.one.a, self.one.b, self.one.c);
        let (ka, kb, kc) = (&self.zero.anc_a, &self.zero.anc_b, &self.zero.anc_c);
        let (kat, kbt, kct) = (&self.one.anc_a, &self.one.anc_b, &self.one.anc_c);

        let eta = a.norm_sqr() - c.norm_sqr();
        let eta_t = at.norm_sqr() - ct.norm_sqr();
        let x = bt.conj() * a * braket(kbt, ka) + at.conj() * b * braket(kat, kb);

        let r1 = (eta - eta_t).abs();
        let r2 = (eta - x.re).abs();
        let r3 = x.im.abs();
        let r4 = (b.conj() * ct * braket(kb, kct) + c.conj() * bt * braket(kc, kbt)).norm();
        let r5 = (b.conj() * a * braket(kb, ka) + c.conj() * b * braket(kc, kb)).norm();
        let r6 = (bt.conj() * at * braket(kbt, kat) + ct.conj() * bt * braket(kct, kbt)).norm();
        let lhs7 = ct.conj() * a * braket(kct, ka) - at * c.conj() * braket(kc, kat);
        let rhs7 = bt * b.conj() * braket(kb, kbt) - b * bt.conj() * braket(kbt, kb);
        let r7 = (lhs7 - rhs7).norm();
        ConstraintReport { residuals: [r1, r2, r3, r4, r5, r6, r7] }
    }

    /// `(|a|² - |c|²)` of the `|0⟩` branch.
    pub fn shrinking_factor(&self) -> f64 {
        self.zero.a.norm_sqr() - self.zero.c.norm_sqr()
    }

    /// Full unitary on `B1 ⊗ B2 ⊗ anc`.
    ///
    /// Columns `0` and `2·d_anc` (inputs `|0⟩|0⟩|0⟩`, `|1⟩|0⟩|0⟩`) are the
    /// image vectors; the rest is a Gram–Schmidt completion over the standard
    /// basis taken in index order.
    pub fn as_unitary(&self) -> Result<ComplexMatrix> {
        let (v0, v1) = self.raw_images();
        let n = v0.len();
        let ov = braket(&v0, &v1).norm();
        if ov > UNITARITY_TOL {
            return Err(Error::NotOrthogonal(ov));
        }
        let one_col = 2 * self.ancilla_dim;
        let mut basis: Vec<Vec<C64>> = vec![v0.clone(), v1.clone()];
        let mut free_cols = (0..n).filter(|&j| j != 0 && j != one_col);
        let mut u = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            u[(i, 0)] = v0[i];
            u[(i, one_col)] = v1[i];
        }
        for k in 0..n {
            if basis.len() == n {
                break;
            }
            let mut cand = vec![ZERO; n];
            cand[k] = real(1.0);
            for _ in 0..2 {
                for q in &basis {
                    let proj = braket(q, &cand);
                    for (x, qi) in cand.iter_mut().zip(q) {
                        *x -= proj * qi;
                    }
                }
            }
            let norm = libm::sqrt(cand.iter().map(|z| z.norm_sqr()).sum::<f64>());
            if norm < 1e-6 {
                continue;
            }
            for x in &mut cand {
                *x /= norm;
            }
            let col = free_cols.next().expect("column count matches basis size");
            for i in 0..n {
                u[(i, col)] = cand[i];
            }
            basis.push(cand);
        }
        Ok(u)
    }

    /// `(1_A ⊗ U)(ρ ⊗ |0⟩⟨0|_B2 ⊗ |0⟩⟨0|_anc)(1_A ⊗ U)†` on `(A, B1, B2, anc)`.
    ///
    /// Only the two image vectors matter, so the product is formed with the
    /// isometry `1_A ⊗ [v0 v1]` instead of the full unitary.
    pub fn apply_split(&self, input: &DensityMatrix) -> Result<DensityMatrix> {
        input.require_two_qubit()?;
        let (v0, v1) = self.raw_images();
        let m = v0.len();
        let mut w = ComplexMatrix::zeros(m, 2);
        for i in 0..m {
            w[(i, 0)] = v0[i];
            w[(i, 1)] = v1[i];
        }
        let k = ComplexMatrix::identity(2).kron(&w);
        let out = input.matrix().conjugate_by(&k)?;
        DensityMatrix::new_unchecked_positivity(out, self.split_layout())
    }

    /// Same result as [`apply_split`](Self::apply_split), computed with the
    /// completed unitary acting on the full blank-padded input.
    pub fn apply_split_unitary(&self, input: &DensityMatrix) -> Result<DensityMatrix> {
        input.require_two_qubit()?;
        let d = self.ancilla_dim;
        let mut blank = ComplexMatrix::zeros(2 * d, 2 * d);
        blank[(0, 0)] = real(1.0);
        let padded = input.matrix().kron(&blank);
        let full = ComplexMatrix::identity(2).kron(&self.as_unitary()?);
        let out = padded.conjugate_by(&full)?;
        DensityMatrix::new_unchecked_positivity(out, self.split_layout())
    }

    fn split_layout(&self) -> SubsystemLayout {
        SubsystemLayout::new(&["A", "B1", "B2", "anc"], &[2, 2, 2, self.ancilla_dim]).expect("valid layout")
    }

    /// Reduced state of output `B1` when the transform acts on the pure qubit
    /// `amplitudes` (with blank qubit and ancilla in `|0⟩`).
    pub fn clone_output(&self, amplitudes: [C64; 2]) -> Result<DensityMatrix> {
        let (v0, v1) = self.raw_images();
        let psi: Vec<C64> = v0.iter().zip(&v1).map(|(x, y)| amplitudes[0] * x + amplitudes[1] * y).collect();
        PureState::new(psi, self.output_layout())?.to_density().reduce(&["B1"])
    }
}

/// The seven splitting constraints, in order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraint {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
}

impl Constraint {
    pub const ALL: [Constraint; 7] =
        [Constraint::I, Constraint::II, Constraint::III, Constraint::IV, Constraint::V, Constraint::VI, Constraint::VII];

    pub fn name(self) -> &'static str {
        ["i", "ii", "iii", "iv", "v", "vi", "vii"][self as usize]
    }

    /// Constraints (i)–(vi) coincide with those of isotropic symmetric 1→2
    /// cloning; (vii) is specific to splitting.
    pub fn shared_with_cloning(self) -> bool {
        self != Constraint::VII
    }
}

/// Residuals of [`CloneTransform::check_constraints`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConstraintReport {
    residuals: [f64; 7],
}

impl ConstraintReport {
    pub fn residual(&self, c: Constraint) -> f64 {
        self.residuals[c as usize]
    }

    pub fn residuals(&self) -> [f64; 7] {
        self.residuals
    }

    pub fn passes(&self, c: Constraint) -> bool {
        self.residual(c) <= CONSTRAINT_TOL
    }

    pub fn all_pass(&self) -> bool {
        Constraint::ALL.iter().all(|&c| self.passes(c))
    }

    /// Whether (i)–(vi), the constraints shared with cloning, pass.
    pub fn cloning_constraints_pass(&self) -> bool {
        Constraint::ALL.iter().filter(|c| c.shared_with_cloning()).all(|&c| self.passes(c))
    }

    /// First failing constraint, as an error.
    pub fn into_result(self) -> Result<()> {
        match Constraint::ALL.iter().find(|&&c| !self.passes(c)) {
            None => Ok(()),
            Some(&c) => Err(Error::ConstraintViolation { constraint: c.name(), residual: self.residual(c) }),
        }
    }
}
