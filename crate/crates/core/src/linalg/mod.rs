//! Dense complex linear algebra for matrices of dimension at most 64.

mod eigen;
mod layout;
mod matrix;

pub use eigen::{eig_general, eig_hermitian, sqrt_psd, HermitianEigen, HERMITIAN_TOL, PSD_CLAMP};
pub use layout::{partial_trace, partial_transpose, SubsystemLayout};
pub use matrix::{pauli, tensor, ComplexMatrix, C64};
pub(crate) use matrix::{ONE, ZERO};

/// Largest matrix dimension the crate is designed for (six qubits).
pub const MAX_DIM: usize = 64;
