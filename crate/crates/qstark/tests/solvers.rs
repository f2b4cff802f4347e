//! Optimizers on closed-form objectives, exact diagonalization against the
//! full spectrum, and the variational loop on the four-qubit problem where
//! the ansatz is expressive enough to reach the exact ground state.

use approx::assert_abs_diff_eq;
use num_complex::Complex64;
use qstark::basis::{Species, ANGSTROM};
use qstark::fermi::{mo_transform, molecular_hamiltonian};
use qstark::jw::{jordan_wigner, PauliString, PauliSum};
use qstark::pipeline;
use qstark::quantum::UccsdAnsatz;
use qstark::solvers::{
    exact_ground_energy, nelder_mead, pauli_spectrum, spsa, vqe, OptimizerKind, SpsaConfig,
    VqeConfig,
};

#[test]
fn nelder_mead_minimizes_shifted_quadratic() {
    let f = |x: &[f64]| {
        (x[0] - 1.5).powi(2) + 2.0 * (x[1] + 0.5).powi(2) + 0.25 * (x[2] - 3.0).powi(2) + 7.0
    };
    let r = nelder_mead(f, &[0.0, 0.0, 0.0], 0.5, 1e-12, 10_000);
    assert!(r.converged);
    assert_abs_diff_eq!(r.fx, 7.0, epsilon = 1e-9);
    assert_abs_diff_eq!(r.x[0], 1.5, epsilon = 1e-5);
    assert_abs_diff_eq!(r.x[1], -0.5, epsilon = 1e-5);
    assert_abs_diff_eq!(r.x[2], 3.0, epsilon = 1e-5);
}

#[test]
fn nelder_mead_handles_rosenbrock() {
    let f = |x: &[f64]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2);
    let r = nelder_mead(f, &[-1.2, 1.0], 0.5, 1e-14, 20_000);
    assert!(r.converged);
    assert_abs_diff_eq!(r.x[0], 1.0, epsilon = 1e-4);
    assert_abs_diff_eq!(r.x[1], 1.0, epsilon = 1e-4);
}

#[test]
fn nelder_mead_reports_budget_exhaustion() {
    let f = |x: &[f64]| x[0] * x[0];
    let r = nelder_mead(f, &[10.0], 0.1, 1e-16, 8);
    assert!(!r.converged);
    assert!(r.evaluations <= 9);
}

#[test]
fn spsa_approaches_quadratic_minimum() {
    let f = |x: &[f64]| (x[0] - 2.0).powi(2) + (x[1] + 1.0).powi(2);
    let cfg = SpsaConfig { iterations: 4000, ..SpsaConfig::default() };
    let r = spsa(f, &[0.0, 0.0], &cfg);
    assert!((r.x[0] - 2.0).abs() < 0.05, "x0 = {}", r.x[0]);
    assert!((r.x[1] + 1.0).abs() < 0.05, "x1 = {}", r.x[1]);
}

#[test]
fn spsa_is_seed_deterministic() {
    let f = |x: &[f64]| x.iter().map(|v| v * v).sum::<f64>();
    let cfg = SpsaConfig { iterations: 500, ..SpsaConfig::default() };
    let r1 = spsa(f, &[1.0, -2.0, 0.5], &cfg);
    let r2 = spsa(f, &[1.0, -2.0, 0.5], &cfg);
    assert_eq!(r1.x, r2.x);
    assert_eq!(r1.fx.to_bits(), r2.fx.to_bits());
}

fn h2_hamiltonian(d_angstrom: f64) -> (PauliSum, usize) {
    let asm = pipeline::assemble(Species::H2, d_angstrom, 0.0).unwrap();
    let scf = pipeline::mean_field(&asm).unwrap();
    let (h_mo, eri_mo) = mo_transform(&asm.core, &asm.eri, &scf.coefficients);
    let op = molecular_hamiltonian(&h_mo, &eri_mo, 2, asm.constant);
    (jordan_wigner(&op).unwrap(), asm.molecule.n_electrons)
}

#[test]
fn exact_ground_energy_matches_reference() {
    let (h, n) = h2_hamiltonian(1.4 / ANGSTROM);
    let e = exact_ground_energy(&h, n).unwrap();
    assert_abs_diff_eq!(e, -1.137275943783, epsilon = 1e-9);
}

#[test]
fn sector_ground_state_sits_inside_full_spectrum() {
    let (h, n) = h2_hamiltonian(0.7);
    let e_sector = exact_ground_energy(&h, n).unwrap();
    let spectrum = pauli_spectrum(&h).unwrap();
    assert_eq!(spectrum.len(), 16);
    // the two-particle ground state is an eigenvalue of the full operator
    let hit = spectrum.iter().any(|&ev| (ev - e_sector).abs() < 1e-9);
    assert!(hit, "sector energy missing from spectrum");
    // and it cannot undercut the unconstrained minimum
    assert!(e_sector >= spectrum[0] - 1e-12);
}

#[test]
fn qubit_limit_is_enforced() {
    let mut sum = PauliSum::new(11);
    sum.add(PauliString::single(10, 'Z'), Complex64::new(1.0, 0.0));
    assert!(exact_ground_energy(&sum, 1).is_err());
    assert!(pauli_spectrum(&sum).is_err());
}

#[test]
fn vqe_reaches_exact_energy_on_four_qubits() {
    let (h, n) = h2_hamiltonian(0.7);
    let exact = exact_ground_energy(&h, n).unwrap();
    let ansatz = UccsdAnsatz::build(4, n, 1).unwrap();
    let result = vqe(&h, &ansatz, &VqeConfig::default()).unwrap();
    assert!(result.converged);
    assert!(result.energy >= exact - 1e-9, "variational bound violated");
    assert!(
        result.energy - exact < 1e-6,
        "gap {:.3e}",
        result.energy - exact
    );
}

#[test]
fn vqe_spsa_lands_near_minimum() {
    let (h, n) = h2_hamiltonian(0.7);
    let exact = exact_ground_energy(&h, n).unwrap();
    let ansatz = UccsdAnsatz::build(4, n, 1).unwrap();
    let cfg = VqeConfig {
        optimizer: OptimizerKind::Spsa,
        max_iterations: 4000,
        ..VqeConfig::default()
    };
    let result = vqe(&h, &ansatz, &cfg).unwrap();
    assert!(result.energy >= exact - 1e-9);
    assert!(result.energy - exact < 1e-3, "gap {:.3e}", result.energy - exact);
}
