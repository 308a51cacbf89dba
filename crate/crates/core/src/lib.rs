//! Entanglement splitting of two-qubit states.
//!
//! Bob holds one half of a pure (or mixed) two-qubit state shared with Alice.
//! He runs a symmetric cloning-type unitary on his qubit, a blank qubit and an
//! ancilla, handing the blank qubit to a third party. This crate simulates the
//! transformation and evaluates every diagnostic of the resulting two-qubit
//! channels: singlet fraction, PPT spectrum, concurrence, entanglement of
//! formation, maximal teleportation fidelity and the CHSH criterion.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, sweeps and the
//! command-line front end live in the `entsplit` crate.
//!
//! Conventions used everywhere:
//!
//! * Tensor products are big-endian: the first subsystem label is the most
//!   significant factor of a basis index.
//! * Qubit basis order is `|0⟩, |1⟩`; two-qubit order is `|00⟩, |01⟩, |10⟩, |11⟩`.
//! * Pauli matrices are the standard ones, `σ_y = [[0, -i], [i, 0]]`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod cloner;
pub mod error;
pub mod linalg;
pub mod measures;
pub mod splitting;
pub mod states;

pub use cloner::{Branch, CloneTransform, Constraint, ConstraintReport};
pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, SubsystemLayout, C64};
pub use measures::{EntanglementReport, PptResult, TMatrix};
pub use splitting::{PairStatus, PairwiseMap, ProbeOutcome, SplitReport, WernerSplit, Window};
pub use states::{BellState, DensityMatrix, PureState, SchmidtParams};
