//! Minimal-basis quantum chemistry for diatomics in a static electric field.
//!
//! The crate computes STO-3G matrix elements for H2 and LiH on the z axis
//! (including Stark terms), runs restricted Hartree-Fock, builds the
//! second-quantized and Jordan-Wigner qubit Hamiltonians, and solves for
//! ground-state energies by exact diagonalization and by VQE with a
//! Trotterized UCCSD ansatz.
//!
//! Layout mirrors the pipeline: `specfun` (special functions and quadrature),
//! `basis` (contracted Gaussians), `one_electron` / `two_electron`
//! (integrals), `stark` (field matrices), `scf` (RHF), `fermi` (second
//! quantization), `jw` (qubit mapping), `quantum` (statevector), `solvers`
//! (exact + VQE), `pipeline` (sweeps and output).

pub mod basis;
pub mod error;
pub mod fermi;
pub mod jw;
pub mod one_electron;
pub mod par;
pub mod pipeline;
pub mod quantum;
pub mod scf;
pub mod solvers;
pub mod specfun;
pub mod stark;
pub mod two_electron;

pub use error::{Error, Result};
