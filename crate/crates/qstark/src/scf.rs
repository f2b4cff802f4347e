//! Restricted Hartree-Fock in a nonorthogonal basis.
//!
//! Works directly from a core matrix, an overlap matrix and the repulsion
//! tensor, so field terms and constant energy offsets are composed by the
//! caller. Orbitals are obtained through Lowdin symmetric orthogonalization
//! and the Roothaan equations are iterated with simple density damping when
//! the update oscillates.

use crate::error::{Error, Result};
use crate::two_electron::Eri;
use nalgebra::{DMatrix, SymmetricEigen};

#[derive(Debug, Clone)]
pub struct ScfConfig {
    pub max_iterations: usize,
    /// Root-mean-square density change required for convergence.
    pub density_tolerance: f64,
    /// Energy change required for convergence.
    pub energy_tolerance: f64,
}

impl Default for ScfConfig {
    fn default() -> Self {
        Self {
            max_iterations: 5000,
            density_tolerance: 1e-10,
            energy_tolerance: 1e-12,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ScfSolution {
    /// Total energy including the constant offset passed in.
    pub energy: f64,
    /// Electronic part only.
    pub electronic_energy: f64,
    /// Orbital energies, ascending.
    pub orbital_energies: Vec<f64>,
    /// Orbital coefficients, one molecular orbital per column.
    pub coefficients: DMatrix<f64>,
    /// Spin-summed density matrix.
    pub density: DMatrix<f64>,
    pub iterations: usize,
}

/// Eigendecomposition sorted by ascending eigenvalue.
fn sorted_eigen(m: &DMatrix<f64>) -> (Vec<f64>, DMatrix<f64>) {
    let eig = SymmetricEigen::new(m.clone());
    let n = m.nrows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let vals = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vecs = DMatrix::zeros(n, n);
    for (col, &i) in order.iter().enumerate() {
        vecs.set_column(col, &eig.eigenvectors.column(i));
    }
    (vals, vecs)
}

/// S^(-1/2) by symmetric eigendecomposition.
pub fn lowdin_orthogonalizer(s: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let (vals, vecs) = sorted_eigen(s);
    if vals[0] <= 1e-10 {
        return Err(Error::InvalidInput(format!(
            "overlap matrix is not positive definite (smallest eigenvalue {:.3e})",
            vals[0]
        )));
    }
    let inv_sqrt = DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
        vals.len(),
        vals.iter().map(|v| 1.0 / v.sqrt()),
    ));
    Ok(&vecs * inv_sqrt * vecs.transpose())
}

fn two_electron_part(eri: &Eri, d: &DMatrix<f64>) -> DMatrix<f64> {
    let k = d.nrows();
    let mut g = DMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            let mut acc = 0.0;
            for a in 0..k {
                for b in 0..k {
                    acc += d[(a, b)] * (eri.get(i, j, a, b) - 0.5 * eri.get(i, a, j, b));
                }
            }
            g[(i, j)] = acc;
        }
    }
    g
}

fn density_from(c: &DMatrix<f64>, n_occ: usize) -> DMatrix<f64> {
    let c_occ = c.columns(0, n_occ);
    2.0 * &c_occ * c_occ.transpose()
}

/// Solve the restricted Hartree-Fock equations.
///
/// `core` is the one-electron matrix (kinetic, attraction and any field
/// term), `constant` a field- and geometry-dependent energy offset such as
/// the internuclear repulsion.
pub fn restricted_hartree_fock(
    core: &DMatrix<f64>,
    overlap: &DMatrix<f64>,
    eri: &Eri,
    n_electrons: usize,
    constant: f64,
    config: &ScfConfig,
) -> Result<ScfSolution> {
    if n_electrons == 0 || !n_electrons.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!(
            "restricted solver needs a positive even electron count, got {n_electrons}"
        )));
    }
    let k = core.nrows();
    let n_occ = n_electrons / 2;
    if n_occ > k {
        return Err(Error::InvalidInput(format!(
            "{n_electrons} electrons do not fit in {k} spatial orbitals"
        )));
    }
    let x = lowdin_orthogonalizer(overlap)?;

    let solve = |f: &DMatrix<f64>| -> (Vec<f64>, DMatrix<f64>) {
        let f_ortho = x.transpose() * f * &x;
        let (vals, vecs) = sorted_eigen(&f_ortho);
        (vals, &x * vecs)
    };

    // core guess
    let (_, c0) = solve(core);
    let mut d = density_from(&c0, n_occ);
    let mut e_elec = 0.0;
    let mut prev_rms = f64::INFINITY;

    for iter in 1..=config.max_iterations {
        let f = core + two_electron_part(eri, &d);
        let new_e = 0.5 * (d.component_mul(&(core + &f))).sum();
        let (eps, c) = solve(&f);
        let mut new_d = density_from(&c, n_occ);

        let rms = ((&new_d - &d).map(|v| v * v).sum() / (k * k) as f64).sqrt();
        if rms > prev_rms {
            new_d = 0.5 * &new_d + 0.5 * &d;
        }
        let de = (new_e - e_elec).abs();
        let converged = rms < config.density_tolerance && de < config.energy_tolerance;

        d = new_d;
        e_elec = new_e;
        prev_rms = rms;

        if converged {
            return Ok(ScfSolution {
                energy: e_elec + constant,
                electronic_energy: e_elec,
                orbital_energies: eps,
                coefficients: c,
                density: d,
                iterations: iter,
            });
        }
    }
    Err(Error::ScfNotConverged {
        iterations: config.max_iterations,
        energy: e_elec + constant,
    })
}
