//! End-to-end molecular pipeline: integrals, mean field, qubit Hamiltonian,
//! exact diagonalization and the variational solve, plus sweep drivers and
//! deterministic output formatting.
//!
//! Distances cross this interface in angstrom (matching the output schema)
//! and are converted to bohr internally; energies are hartree and fields
//! atomic units throughout.

use crate::basis::{Molecule, Species, Zetas, ANGSTROM};
use crate::error::Result;
use crate::fermi::{molecular_hamiltonian, mo_transform};
use crate::jw::{jordan_wigner, PauliSum};
use crate::one_electron::{core_hamiltonian, overlap_matrix};
use crate::scf::{restricted_hartree_fock, ScfConfig, ScfSolution};
use crate::solvers::{exact_ground_energy, vqe, OptimizerKind, VqeConfig};
use crate::stark::{field_operator, nuclear_field_energy, nuclear_repulsion};
use crate::two_electron::{eri_tensor, Eri};
use crate::quantum::UccsdAnsatz;
use nalgebra::DMatrix;
use serde::Serialize;

/// Settings shared by every point of a run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub seed: u64,
    pub trotter_steps: usize,
    pub optimizer: OptimizerKind,
    pub max_iterations: usize,
    pub energy_tolerance: f64,
    pub initial_step: f64,
    pub restarts: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            seed: 7,
            trotter_steps: 1,
            optimizer: OptimizerKind::NelderMead,
            max_iterations: 15_000,
            energy_tolerance: 1e-8,
            initial_step: 0.1,
            restarts: 2,
        }
    }
}

/// All matrices needed downstream of the integral stage.
#[derive(Debug, Clone)]
pub struct Assembly {
    pub molecule: Molecule,
    pub overlap: DMatrix<f64>,
    /// One-electron matrix including the field term.
    pub core: DMatrix<f64>,
    pub eri: Eri,
    /// Nuclear repulsion plus the nuclear field energy.
    pub constant: f64,
}

/// Build molecule and integrals for one (distance, field) point.
pub fn assemble(species: Species, d_angstrom: f64, field: f64) -> Result<Assembly> {
    let mol = Molecule::build(species, d_angstrom * ANGSTROM, &Zetas::default());
    let overlap = overlap_matrix(&mol);
    let core = core_hamiltonian(&mol)? + field_operator(&mol, field);
    let eri = eri_tensor(&mol);
    let constant = nuclear_repulsion(&mol) + nuclear_field_energy(&mol, field);
    Ok(Assembly { molecule: mol, overlap, core, eri, constant })
}

/// Mean-field solution for an assembled point.
pub fn mean_field(asm: &Assembly) -> Result<ScfSolution> {
    restricted_hartree_fock(
        &asm.core,
        &asm.overlap,
        &asm.eri,
        asm.molecule.n_electrons,
        asm.constant,
        &ScfConfig::default(),
    )
}

/// Qubit Hamiltonian in the molecular-orbital basis of the mean-field
/// solution, constant included.
pub fn qubit_hamiltonian(asm: &Assembly, scf: &ScfSolution) -> Result<PauliSum> {
    let (h_mo, eri_mo) = mo_transform(&asm.core, &asm.eri, &scf.coefficients);
    let k = asm.molecule.n_orbitals();
    let fermi = molecular_hamiltonian(&h_mo, &eri_mo, k, asm.constant);
    jordan_wigner(&fermi)
}

/// One output record.
#[derive(Debug, Clone, Serialize)]
pub struct PointRow {
    pub molecule: String,
    pub d_angstrom: f64,
    pub field_au: f64,
    pub e_hf: f64,
    pub e_exact: f64,
    pub e_vqe: f64,
    pub vqe_iterations: usize,
    pub converged: bool,
}

/// Deterministic per-point seed derived from the base seed and coordinates.
pub fn point_seed(base: u64, d_angstrom: f64, field: f64) -> u64 {
    fn mix(mut z: u64) -> u64 {
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
    let mut s = mix(base.wrapping_add(0x9e37_79b9_7f4a_7c15));
    s = mix(s ^ d_angstrom.to_bits());
    s = mix(s ^ field.to_bits());
    s
}

/// Full pipeline for one point: integrals, SCF, exact ground state, VQE.
pub fn compute_point(
    species: Species,
    d_angstrom: f64,
    field: f64,
    config: &RunConfig,
) -> Result<PointRow> {
    let asm = assemble(species, d_angstrom, field)?;
    let scf = mean_field(&asm)?;
    let h = qubit_hamiltonian(&asm, &scf)?;
    let n_electrons = asm.molecule.n_electrons;
    let e_exact = exact_ground_energy(&h, n_electrons)?;

    let ansatz = UccsdAnsatz::build(h.n_qubits, n_electrons, config.trotter_steps)?;
    let vqe_cfg = VqeConfig {
        optimizer: config.optimizer,
        max_iterations: config.max_iterations,
        energy_tolerance: config.energy_tolerance,
        initial_step: config.initial_step,
        restarts: config.restarts,
        seed: point_seed(config.seed, d_angstrom, field),
    };
    let v = vqe(&h, &ansatz, &vqe_cfg)?;

    Ok(PointRow {
        molecule: species.name().to_string(),
        d_angstrom,
        field_au: field,
        e_hf: scf.energy,
        e_exact,
        e_vqe: v.energy,
        vqe_iterations: v.evaluations,
        converged: v.converged,
    })
}

/// Cartesian sweep over distances and fields. Points are independent and are
/// evaluated through the parallel map; the row order is the deterministic
/// (distance-major) input order either way.
pub fn sweep(
    species: Species,
    distances_angstrom: &[f64],
    fields: &[f64],
    config: &RunConfig,
) -> Result<Vec<PointRow>> {
    let mut points = Vec::new();
    for &d in distances_angstrom {
        for &f in fields {
            points.push((d, f));
        }
    }
    let results = crate::par::map_collect(points, |(d, f)| compute_point(species, d, f, config));
    results.into_iter().collect()
}

/// Default dissociation grid: 0.2 to 4.0 angstrom in 0.1 steps.
pub fn default_distances() -> Vec<f64> {
    (2..=40).map(|i| i as f64 / 10.0).collect()
}

/// Default field strengths in atomic units.
pub fn default_fields() -> Vec<f64> {
    vec![0.0, 1e-4, 1e-3, 1e-2, 1e-1]
}

/// Equilibrium bond length in angstrom used by the field scans.
pub fn equilibrium_distance(species: Species) -> f64 {
    match species {
        Species::H2 => 0.7,
        Species::LiH => 1.6,
    }
}

/// Render rows to the CSV schema. Formatting is fixed-width so identical
/// inputs produce byte-identical files.
pub fn rows_to_csv(rows: &[PointRow]) -> String {
    let mut out = String::from("molecule,d_angstrom,field_au,e_hf,e_exact,e_vqe,vqe_iterations,converged\n");
    for r in rows {
        out.push_str(&format!(
            "{},{:.4},{:.6e},{:.12},{:.12},{:.12},{},{}\n",
            r.molecule,
            r.d_angstrom,
            r.field_au,
            r.e_hf,
            r.e_exact,
            r.e_vqe,
            r.vqe_iterations,
            r.converged
        ));
    }
    out
}

/// Machine-readable run descriptor written next to each CSV.
#[derive(Debug, Clone, Serialize)]
pub struct RunMetadata {
    pub program: String,
    pub version: String,
    pub molecule: String,
    pub seed: u64,
    pub optimizer: String,
    pub trotter_steps: usize,
    pub max_iterations: usize,
    pub distances_angstrom: Vec<f64>,
    pub fields_au: Vec<f64>,
}

impl RunMetadata {
    pub fn new(species: Species, distances: &[f64], fields: &[f64], config: &RunConfig) -> Self {
        RunMetadata {
            program: "qstark".to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            molecule: species.name().to_string(),
            seed: config.seed,
            optimizer: match config.optimizer {
                OptimizerKind::NelderMead => "nelder-mead".to_string(),
                OptimizerKind::Spsa => "spsa".to_string(),
            },
            trotter_steps: config.trotter_steps,
            max_iterations: config.max_iterations,
            distances_angstrom: distances.to_vec(),
            fields_au: fields.to_vec(),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}
