//! Static axial electric field terms.
//!
//! A uniform field E along z adds a one-electron term -E z to the electronic
//! Hamiltonian and a constant +E sum_A Z_A z_A for the nuclei, so the total
//! energy of a neutral molecule is invariant under shifting the coordinate
//! origin. The production pipeline uses exactly this pair.
//!
//! `field_matrix` additionally exposes a compensated variant with the
//! diagonal removed: each orbital's coupling is measured relative to its own
//! center, which isolates the genuine interorbital Stark couplings from the
//! origin-dependent diagonal shifts. It is useful for inspecting coupling
//! strengths but deliberately discards the diagonal, so it is not used to
//! form total energies.

use crate::basis::Molecule;
use crate::one_electron::z_moment_matrix;
use nalgebra::DMatrix;

/// Uncompensated one-electron field operator -E <i|z|j>.
pub fn field_operator(mol: &Molecule, field: f64) -> DMatrix<f64> {
    -field * z_moment_matrix(mol)
}

/// Compensated field coupling matrix: -E <i|z|j> off the diagonal, zero on
/// the diagonal.
pub fn field_matrix(mol: &Molecule, field: f64) -> DMatrix<f64> {
    let mut m = field_operator(mol, field);
    for i in 0..m.nrows() {
        m[(i, i)] = 0.0;
    }
    m
}

/// Constant nuclear term +E sum_A Z_A z_A.
pub fn nuclear_field_energy(mol: &Molecule, field: f64) -> f64 {
    field * mol.nuclei.iter().map(|n| n.charge * n.z).sum::<f64>()
}

/// Internuclear repulsion sum_{A<B} Z_A Z_B / |z_A - z_B|.
pub fn nuclear_repulsion(mol: &Molecule) -> f64 {
    let mut e = 0.0;
    for (a, na) in mol.nuclei.iter().enumerate() {
        for nb in mol.nuclei.iter().skip(a + 1) {
            e += na.charge * nb.charge / (na.z - nb.z).abs();
        }
    }
    e
}
