//! Restricted Hartree-Fock against frozen reference energies and
//! self-consistency properties.

use approx::assert_abs_diff_eq;
use nalgebra::DMatrix;
use qstark::basis::{Molecule, Species, Zetas};
use qstark::one_electron::{core_hamiltonian, overlap_matrix};
use qstark::pipeline;
use qstark::scf::{lowdin_orthogonalizer, restricted_hartree_fock, ScfConfig};
use qstark::stark::nuclear_repulsion;
use qstark::two_electron::eri_tensor;
use qstark::Error;

fn solve(mol: &Molecule) -> qstark::scf::ScfSolution {
    let core = core_hamiltonian(mol).unwrap();
    let s = overlap_matrix(mol);
    let eri = eri_tensor(mol);
    restricted_hartree_fock(
        &core,
        &s,
        &eri,
        mol.n_electrons,
        nuclear_repulsion(mol),
        &ScfConfig::default(),
    )
    .unwrap()
}

#[test]
fn lowdin_inverts_the_overlap() {
    for mol in [
        Molecule::build(Species::H2, 1.4, &Zetas::default()),
        Molecule::build(Species::LiH, 3.0, &Zetas::default()),
    ] {
        let s = overlap_matrix(&mol);
        let x = lowdin_orthogonalizer(&s).unwrap();
        let should_be_identity = x.transpose() * &s * &x;
        let k = s.nrows();
        let err = (&should_be_identity - DMatrix::<f64>::identity(k, k)).abs().max();
        assert!(err < 1e-12, "X^T S X deviates from identity by {err:.3e}");
        // symmetric orthogonalizer
        assert!((&x - x.transpose()).abs().max() < 1e-12);
    }
}

#[test]
fn h2_reference_energy() {
    let mol = Molecule::build(Species::H2, 1.4, &Zetas::default());
    let scf = solve(&mol);
    assert_abs_diff_eq!(scf.energy, -1.116714325176, epsilon = 1e-9);
    assert!(scf.iterations > 1);
}

#[test]
fn lih_reference_energy() {
    let mol = Molecule::build(Species::LiH, 3.0, &Zetas::default());
    let scf = solve(&mol);
    assert_abs_diff_eq!(scf.energy, -7.862246324083, epsilon = 1e-8);
}

#[test]
fn pipeline_equilibrium_energies() {
    let asm = pipeline::assemble(Species::H2, 0.7, 0.0).unwrap();
    let scf = pipeline::mean_field(&asm).unwrap();
    assert_abs_diff_eq!(scf.energy, -1.117349033691, epsilon = 1e-9);

    let asm = pipeline::assemble(Species::LiH, 1.6, 0.0).unwrap();
    let scf = pipeline::mean_field(&asm).unwrap();
    assert_abs_diff_eq!(scf.energy, -7.861864787597, epsilon = 1e-8);
}

#[test]
fn field_reference_energies() {
    let asm = pipeline::assemble(Species::LiH, 1.6, 1e-2).unwrap();
    let scf = pipeline::mean_field(&asm).unwrap();
    assert_abs_diff_eq!(scf.energy, -7.881260264927, epsilon = 1e-8);

    let asm = pipeline::assemble(Species::H2, 0.7, 0.1).unwrap();
    let scf = pipeline::mean_field(&asm).unwrap();
    assert_abs_diff_eq!(scf.energy, -1.131346740838, epsilon = 1e-9);
}

#[test]
fn density_traces_to_electron_count() {
    for (species, d, n) in [(Species::H2, 1.4, 2.0), (Species::LiH, 3.0, 4.0)] {
        let mol = Molecule::build(species, d, &Zetas::default());
        let scf = solve(&mol);
        let s = overlap_matrix(&mol);
        let trace = (&scf.density * &s).trace();
        assert_abs_diff_eq!(trace, n, epsilon = 1e-8);
    }
}

#[test]
fn orbitals_are_orthonormal_and_energies_sorted() {
    let mol = Molecule::build(Species::LiH, 3.0, &Zetas::default());
    let scf = solve(&mol);
    let s = overlap_matrix(&mol);
    let gram = scf.coefficients.transpose() * s * &scf.coefficients;
    let k = gram.nrows();
    assert!((&gram - DMatrix::<f64>::identity(k, k)).abs().max() < 1e-10);
    for w in scf.orbital_energies.windows(2) {
        assert!(w[0] <= w[1] + 1e-12);
    }
}

#[test]
fn variational_against_basis_distortion() {
    // the converged energy must not rise when starting from the converged
    // density (idempotence of the fixed point): rerun with tighter tolerance
    let mol = Molecule::build(Species::H2, 1.4, &Zetas::default());
    let loose = restricted_hartree_fock(
        &core_hamiltonian(&mol).unwrap(),
        &overlap_matrix(&mol),
        &eri_tensor(&mol),
        2,
        nuclear_repulsion(&mol),
        &ScfConfig { density_tolerance: 1e-6, energy_tolerance: 1e-8, ..ScfConfig::default() },
    )
    .unwrap();
    let tight = solve(&mol);
    assert!(tight.energy <= loose.energy + 1e-10);
}

#[test]
fn odd_electron_count_is_rejected() {
    let mol = Molecule::build(Species::H2, 1.4, &Zetas::default());
    let err = restricted_hartree_fock(
        &core_hamiltonian(&mol).unwrap(),
        &overlap_matrix(&mol),
        &eri_tensor(&mol),
        3,
        0.0,
        &ScfConfig::default(),
    )
    .unwrap_err();
    assert!(matches!(err, Error::InvalidInput(_)));
}

#[test]
fn singular_overlap_is_rejected() {
    // duplicate basis function makes the overlap exactly singular
    let mut mol = Molecule::build(Species::H2, 1.4, &Zetas::default());
    let dup = mol.orbitals[0].clone();
    mol.orbitals.push(dup);
    let s = overlap_matrix(&mol);
    assert!(matches!(lowdin_orthogonalizer(&s), Err(Error::InvalidInput(_))));
}
