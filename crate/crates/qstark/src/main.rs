use clap::{Args, Parser, Subcommand, ValueEnum};
use qstark::basis::{Molecule, Species, Zetas, ANGSTROM};
use qstark::one_electron::{
    self, kinetic_matrix, nuclear_attraction, overlap_matrix, z_moment_matrix,
};
use qstark::pipeline::{
    self, compute_point, default_fields, equilibrium_distance, rows_to_csv, PointRow, RunConfig,
    RunMetadata,
};
use qstark::quantum::UccsdAnsatz;
use qstark::solvers::{exact_ground_energy, OptimizerKind};
use qstark::specfun::{integrate_3d, integrate_6d, AxialGaussian, QuadratureSpec};
use qstark::two_electron::electron_repulsion;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "qstark",
    version,
    about = "Minimal-basis molecular electronic structure on simulated qubits: \
             dissociation curves and static-field energy shifts for H2 and LiH"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MoleculeArg {
    H2,
    Lih,
}

impl MoleculeArg {
    fn species(self) -> Species {
        match self {
            MoleculeArg::H2 => Species::H2,
            MoleculeArg::Lih => Species::LiH,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OptimizerArg {
    NelderMead,
    Spsa,
}

#[derive(Args)]
struct SolverOpts {
    /// Base seed; each grid point derives its own stream from it.
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = OptimizerArg::NelderMead)]
    optimizer: OptimizerArg,
    /// First-order Trotter steps in the ansatz circuit.
    #[arg(long, default_value_t = 1)]
    trotter_steps: usize,
    /// Objective evaluation budget per point.
    #[arg(long, default_value_t = 15_000)]
    max_iterations: usize,
}

impl SolverOpts {
    fn run_config(&self) -> RunConfig {
        RunConfig {
            seed: self.seed,
            trotter_steps: self.trotter_steps,
            optimizer: match self.optimizer {
                OptimizerArg::NelderMead => OptimizerKind::NelderMead,
                OptimizerArg::Spsa => OptimizerKind::Spsa,
            },
            max_iterations: self.max_iterations,
            ..RunConfig::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Dissociation sweep over a bond-length grid, optionally under fields.
    Sweep {
        #[arg(long, value_enum)]
        molecule: MoleculeArg,
        /// Smallest bond length in angstrom.
        #[arg(long, default_value_t = 0.2)]
        d_min: f64,
        /// Largest bond length in angstrom.
        #[arg(long, default_value_t = 4.0)]
        d_max: f64,
        /// Grid step in angstrom.
        #[arg(long, default_value_t = 0.1)]
        d_step: f64,
        /// Comma-separated field strengths in atomic units (default: 0).
        #[arg(long, value_delimiter = ',')]
        fields: Option<Vec<f64>>,
        /// CSV output path; a .json run descriptor is written beside it.
        #[arg(long)]
        output: PathBuf,
        #[command(flatten)]
        solver: SolverOpts,
    },
    /// Field scan at fixed bond length.
    Stark {
        #[arg(long, value_enum)]
        molecule: MoleculeArg,
        /// Bond length in angstrom (default: equilibrium for the molecule).
        #[arg(long)]
        distance: Option<f64>,
        /// Comma-separated field strengths in atomic units.
        #[arg(long, value_delimiter = ',')]
        fields: Option<Vec<f64>>,
        #[arg(long)]
        output: PathBuf,
        #[command(flatten)]
        solver: SolverOpts,
    },
    /// Full pipeline at a single geometry, human-readable report.
    Point {
        #[arg(long, value_enum)]
        molecule: MoleculeArg,
        /// Bond length in angstrom.
        #[arg(long)]
        distance: f64,
        /// Field strength in atomic units.
        #[arg(long, default_value_t = 0.0)]
        field: f64,
        #[command(flatten)]
        solver: SolverOpts,
    },
    /// Print the integral matrices for a geometry.
    Integrals {
        #[arg(long, value_enum)]
        molecule: MoleculeArg,
        /// Bond length in angstrom.
        #[arg(long)]
        distance: f64,
    },
    /// Verify analytic integrals, the qubit mapping and pipeline determinism.
    Selftest,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> qstark::Result<ExitCode> {
    match command {
        Command::Sweep { molecule, d_min, d_max, d_step, fields, output, solver } => {
            let species = molecule.species();
            let distances = grid(d_min, d_max, d_step)?;
            let fields = fields.unwrap_or_else(|| vec![0.0]);
            run_sweep(species, &distances, &fields, &solver.run_config(), &output)
        }
        Command::Stark { molecule, distance, fields, output, solver } => {
            let species = molecule.species();
            let distances = vec![distance.unwrap_or_else(|| equilibrium_distance(species))];
            let fields = fields.unwrap_or_else(default_fields);
            run_sweep(species, &distances, &fields, &solver.run_config(), &output)
        }
        Command::Point { molecule, distance, field, solver } => {
            run_point_report(molecule.species(), distance, field, &solver.run_config())
        }
        Command::Integrals { molecule, distance } => {
            print_integrals(molecule.species(), distance)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Selftest => Ok(run_selftest()),
    }
}

fn grid(d_min: f64, d_max: f64, d_step: f64) -> qstark::Result<Vec<f64>> {
    let valid = d_min.is_finite()
        && d_max.is_finite()
        && d_step.is_finite()
        && d_min > 0.0
        && d_step > 0.0
        && d_max >= d_min;
    if !valid {
        return Err(qstark::Error::InvalidInput(format!(
            "invalid grid: d_min {d_min}, d_max {d_max}, d_step {d_step}"
        )));
    }
    let n = ((d_max - d_min) / d_step + 1e-9).floor() as usize;
    Ok((0..=n).map(|i| d_min + i as f64 * d_step).collect())
}

fn run_sweep(
    species: Species,
    distances: &[f64],
    fields: &[f64],
    config: &RunConfig,
    output: &Path,
) -> qstark::Result<ExitCode> {
    let rows = pipeline::sweep(species, distances, fields, config)?;
    let csv = rows_to_csv(&rows);
    std::fs::write(output, &csv)?;
    let meta = RunMetadata::new(species, distances, fields, config);
    let sidecar = output.with_extension("json");
    std::fs::write(&sidecar, meta.to_json()?)?;
    let stragglers: Vec<&PointRow> = rows.iter().filter(|r| !r.converged).collect();
    println!(
        "wrote {} rows to {} (descriptor {})",
        rows.len(),
        output.display(),
        sidecar.display()
    );
    if stragglers.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        for r in &stragglers {
            eprintln!(
                "warning: optimizer budget exhausted at d = {:.4} A, field = {:e}",
                r.d_angstrom, r.field_au
            );
        }
        Ok(ExitCode::from(1))
    }
}

fn run_point_report(
    species: Species,
    distance: f64,
    field: f64,
    config: &RunConfig,
) -> qstark::Result<ExitCode> {
    let asm = pipeline::assemble(species, distance, field)?;
    let scf = pipeline::mean_field(&asm)?;
    let h = pipeline::qubit_hamiltonian(&asm, &scf)?;
    let n_electrons = asm.molecule.n_electrons;
    let e_exact = exact_ground_energy(&h, n_electrons)?;
    let row = compute_point(species, distance, field, config)?;

    println!("molecule            {}", species.name());
    println!("bond length         {distance:.4} A ({:.6} bohr)", distance * ANGSTROM);
    println!("field               {field:e} au");
    println!("electrons           {n_electrons}");
    println!("qubits              {}", h.n_qubits);
    println!("pauli terms         {}", h.n_terms());
    println!("scf iterations      {}", scf.iterations);
    println!("E(mean field)       {:+.10} Ha", scf.energy);
    println!("E(exact)            {e_exact:+.10} Ha");
    println!("E(vqe)              {:+.10} Ha", row.e_vqe);
    println!("vqe error           {:+.3e} Ha", row.e_vqe - e_exact);
    println!("correlation energy  {:+.3e} Ha", e_exact - scf.energy);
    println!("vqe evaluations     {}", row.vqe_iterations);
    println!("vqe converged       {}", row.converged);
    Ok(if row.converged { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn print_matrix(name: &str, m: &nalgebra::DMatrix<f64>) {
    println!("{name}:");
    for i in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols()).map(|j| format!("{:+.10e}", m[(i, j)])).collect();
        println!("  [{}]", row.join(", "));
    }
}

fn print_integrals(species: Species, distance: f64) -> qstark::Result<()> {
    let mol = Molecule::build(species, distance * ANGSTROM, &Zetas::default());
    println!(
        "{} at d = {distance:.4} A; orbitals: {:?}",
        species.name(),
        mol.orbitals.iter().map(|o| o.kind).collect::<Vec<_>>()
    );
    print_matrix("overlap", &overlap_matrix(&mol));
    print_matrix("kinetic", &kinetic_matrix(&mol));
    for (a, nuc) in mol.nuclei.iter().enumerate() {
        let k = mol.n_orbitals();
        let mut v = nalgebra::DMatrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                v[(i, j)] = nuclear_attraction(&mol, i, j, nuc.z)?;
            }
        }
        print_matrix(&format!("attraction to nucleus {a} (Z = {})", nuc.charge), &v);
    }
    print_matrix("z moment", &z_moment_matrix(&mol));
    let k = mol.n_orbitals();
    println!("repulsion integrals (ij|kl), unique index quadruples:");
    for i in 0..k {
        for j in 0..=i {
            for kk in 0..=i {
                let l_max = if kk == i { j } else { kk };
                for l in 0..=l_max {
                    println!("  ({i}{j}|{kk}{l}) = {:+.10e}", electron_repulsion(&mol, i, j, kk, l));
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// selftest
// ---------------------------------------------------------------------------

struct SelfTest {
    failures: usize,
}

impl SelfTest {
    fn check(&mut self, name: &str, got: f64, want: f64, tol: f64) {
        let diff = (got - want).abs();
        let scale = want.abs().max(1.0);
        if diff <= tol * scale {
            println!("PASS {name} (|diff| = {diff:.2e})");
        } else {
            println!("FAIL {name} (got {got:.12e}, want {want:.12e}, |diff| = {diff:.2e})");
            self.failures += 1;
        }
    }

    fn check_flag(&mut self, name: &str, ok: bool, detail: &str) {
        if ok {
            println!("PASS {name}");
        } else {
            println!("FAIL {name} ({detail})");
            self.failures += 1;
        }
    }
}

fn orbital_product(
    mol: &Molecule,
    i: usize,
    j: usize,
) -> impl Fn(f64, f64, f64) -> f64 + '_ {
    move |x, y, z| mol.eval_orbital(i, (x * x + y * y).sqrt(), z) * mol.eval_orbital(j, (x * x + y * y).sqrt(), z)
}

fn run_selftest() -> ExitCode {
    let mut t = SelfTest { failures: 0 };
    let spec = QuadratureSpec {
        relative_tolerance: 1e-9,
        absolute_tolerance: 1e-12,
        max_subdivisions: 4000,
    };

    // one-electron closed forms against blind 3D quadrature, LiH geometry
    let mol = Molecule::build(Species::LiH, 3.0, &Zetas::default());
    for (i, j) in [(0, 1), (0, 3), (2, 3)] {
        let f = orbital_product(&mol, i, j);
        let (s_q, _) = integrate_3d(&f, &spec).expect("overlap quadrature");
        t.check(&format!("overlap[{i}{j}] vs quadrature"), one_electron::overlap(&mol, i, j), s_q, 1e-7);
        let g = |x: f64, y: f64, z: f64| f(x, y, z) * z;
        let (m_q, _) = integrate_3d(&g, &spec).expect("moment quadrature");
        t.check(&format!("z_moment[{i}{j}] vs quadrature"), one_electron::z_moment(&mol, i, j), m_q, 1e-7);
    }

    // attraction families against 3D quadrature with the bare Coulomb kernel
    for (i, j, zc, label) in [
        (0usize, 1usize, 0.0, "two-center s-s, center on Li"),
        (2, 3, 3.0, "same-center s-p, center on H"),
        (0, 3, 0.0, "two-center s-p, center on p orbital"),
        (0, 3, 3.0, "two-center s-p, center on s orbital"),
    ] {
        let f = orbital_product(&mol, i, j);
        let g = move |x: f64, y: f64, z: f64| {
            let r = (x * x + y * y + (z - zc) * (z - zc)).sqrt();
            if r < 1e-12 {
                0.0
            } else {
                f(x, y, z) / r
            }
        };
        let (v_q, _) = integrate_3d(&g, &spec).expect("attraction quadrature");
        let v = nuclear_attraction(&mol, i, j, zc).expect("attraction");
        t.check(&format!("attraction[{i}{j}] {label}"), v, v_q, 1e-6);
    }

    // radial-quadrature s-p attraction families against the closed-form
    // Hermite route, at primitive level
    for (a, b, sep) in [(0.9_f64, 0.3_f64, 2.2_f64), (2.0, 1.1, 1.0)] {
        let pair = Molecule {
            species: Species::H2,
            distance: sep,
            nuclei: vec![],
            orbitals: vec![
                qstark::basis::Orbital {
                    kind: qstark::basis::OrbitalKind::H1s,
                    angular: qstark::basis::Angular::S,
                    center_z: sep,
                    primitives: vec![qstark::basis::Primitive { exponent: a, weight: 1.0 }],
                },
                qstark::basis::Orbital {
                    kind: qstark::basis::OrbitalKind::Li2pz,
                    angular: qstark::basis::Angular::Pz,
                    center_z: 0.0,
                    primitives: vec![qstark::basis::Primitive { exponent: b, weight: 1.0 }],
                },
            ],
            n_electrons: 0,
        };
        for (zc, fam) in [(0.0, "center on p"), (sep, "center on s")] {
            let v = nuclear_attraction(&pair, 0, 1, zc).expect("attraction");
            let h = one_electron::attraction_prim_hermite(a, sep, false, b, 0.0, true, zc);
            t.check(
                &format!("s-p radial family ({fam}, a={a}, b={b}, d={sep})"),
                v,
                h,
                1e-8,
            );
        }
    }

    // repulsion integral against the 6D transform quadrature
    let h2 = Molecule::build(Species::H2, 1.4, &Zetas::default());
    let charge = |mol: &Molecule, i: usize, j: usize| -> Vec<AxialGaussian> {
        let (oi, oj) = (&mol.orbitals[i], &mol.orbitals[j]);
        let mut lobes = Vec::new();
        for a in &oi.primitives {
            for b in &oj.primitives {
                let p = a.exponent + b.exponent;
                let center = (a.exponent * oi.center_z + b.exponent * oj.center_z) / p;
                let weight = a.weight
                    * b.weight
                    * (-(a.exponent * b.exponent / p)
                        * (oi.center_z - oj.center_z)
                        * (oi.center_z - oj.center_z))
                        .exp();
                // polynomial factors in u = z - center
                let mut poly = vec![weight];
                for (orb, flagged) in [(oi, oi.angular == qstark::basis::Angular::Pz), (oj, oj.angular == qstark::basis::Angular::Pz)] {
                    if flagged {
                        let shift = center - orb.center_z;
                        let mut next = vec![0.0; poly.len() + 1];
                        for (k, c) in poly.iter().enumerate() {
                            next[k] += c * shift;
                            next[k + 1] += c;
                        }
                        poly = next;
                    }
                }
                lobes.push(AxialGaussian { exponent: p, center_z: center, poly });
            }
        }
        lobes
    };
    let eri_spec = QuadratureSpec {
        relative_tolerance: 1e-8,
        absolute_tolerance: 1e-12,
        max_subdivisions: 4000,
    };
    let mut acc = 0.0;
    for l1 in charge(&h2, 0, 1) {
        for l2 in charge(&h2, 0, 1) {
            acc += integrate_6d(&l1, &l2, &eri_spec).expect("6d quadrature").0;
        }
    }
    t.check("(01|01) vs 6D quadrature", electron_repulsion(&h2, 0, 1, 0, 1), acc, 1e-6);

    // qubit mapping checks at the reference geometries
    let cfg = RunConfig::default();
    let asm = pipeline::assemble(Species::H2, 0.7, 0.0).expect("assemble");
    let scf = pipeline::mean_field(&asm).expect("scf");
    let h = pipeline::qubit_hamiltonian(&asm, &scf).expect("mapping");
    t.check_flag(
        "H2 qubit Hamiltonian has 15 terms",
        h.n_terms() == 15,
        &format!("got {}", h.n_terms()),
    );
    let e = exact_ground_energy(&h, 2).expect("exact");
    t.check("H2 exact ground energy at 0.7 A", e, -1.136189450779, 1e-8);
    t.check_flag(
        "H2 imaginary coefficients vanish",
        h.max_imag() < 1e-12,
        &format!("max imag {:.2e}", h.max_imag()),
    );
    let ansatz = UccsdAnsatz::build(4, 2, 1).expect("ansatz");
    t.check_flag(
        "H2 ansatz has 3 parameters",
        ansatz.n_parameters() == 3,
        &format!("got {}", ansatz.n_parameters()),
    );

    // deterministic output
    let rows1 = pipeline::sweep(Species::H2, &[0.7], &[0.0, 1e-3], &cfg).expect("sweep");
    let rows2 = pipeline::sweep(Species::H2, &[0.7], &[0.0, 1e-3], &cfg).expect("sweep");
    t.check_flag(
        "sweep output is reproducible",
        rows_to_csv(&rows1) == rows_to_csv(&rows2),
        "CSV bytes differ between identical runs",
    );

    if t.failures == 0 {
        println!("selftest: all checks passed");
        ExitCode::SUCCESS
    } else {
        println!("selftest: {} check(s) failed", t.failures);
        ExitCode::from(1)
    }
}
