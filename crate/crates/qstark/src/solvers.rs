//! Classical reference solvers and the variational eigensolver loop.
//!
//! Exact ground energies come from dense diagonalization of the qubit
//! Hamiltonian restricted to the requested particle-number sector. The
//! variational loop minimizes the ansatz energy with either Nelder-Mead
//! (for noiseless statevector objectives) or SPSA (robust to shot noise).

use crate::error::{Error, Result};
use crate::fermi::number_sector;
use crate::jw::PauliSum;
use crate::quantum::{expectation, UccsdAnsatz};
use nalgebra::{Complex, DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

/// Largest register accepted by the exact eigensolver.
pub const MAX_EXACT_QUBITS: usize = 10;

/// Dense matrix of a Pauli sum over the full computational basis.
pub fn pauli_dense(sum: &PauliSum) -> Result<DMatrix<Complex64>> {
    if sum.n_qubits > MAX_EXACT_QUBITS {
        return Err(Error::TooManyQubits { qubits: sum.n_qubits, limit: MAX_EXACT_QUBITS });
    }
    let dim = 1usize << sum.n_qubits;
    let mut m = DMatrix::from_element(dim, dim, Complex64::new(0.0, 0.0));
    for &(p, c) in &sum.terms {
        for col in 0..dim {
            let (row, phase) = p.apply_to_basis(col as u64);
            m[(row as usize, col)] += c * phase;
        }
    }
    Ok(m)
}

/// Lowest eigenvalue of the Hamiltonian in the fixed particle-number sector.
pub fn exact_ground_energy(sum: &PauliSum, n_particles: usize) -> Result<f64> {
    if sum.n_qubits > MAX_EXACT_QUBITS {
        return Err(Error::TooManyQubits { qubits: sum.n_qubits, limit: MAX_EXACT_QUBITS });
    }
    let sector = number_sector(sum.n_qubits, n_particles);
    let dim = sector.len();
    if dim == 0 {
        return Err(Error::InvalidInput(format!(
            "no {}-particle states over {} qubits",
            n_particles, sum.n_qubits
        )));
    }
    let mut position = vec![usize::MAX; 1 << sum.n_qubits];
    for (pos, &s) in sector.iter().enumerate() {
        position[s] = pos;
    }
    let mut block: DMatrix<f64> = DMatrix::zeros(dim, dim);
    let mut max_imag: f64 = 0.0;
    for (col, &s) in sector.iter().enumerate() {
        for &(p, c) in &sum.terms {
            let (t, phase) = p.apply_to_basis(s as u64);
            let row = position[t as usize];
            if row != usize::MAX {
                let v = c * phase;
                max_imag = max_imag.max(v.im.abs());
                block[(row, col)] += v.re;
            }
        }
    }
    if max_imag > 1e-9 {
        return Err(Error::InvalidInput(format!(
            "sector Hamiltonian has imaginary entries up to {max_imag:.3e}"
        )));
    }
    let eig = SymmetricEigen::new(block);
    Ok(eig.eigenvalues.iter().fold(f64::INFINITY, |a, &b| a.min(b)))
}

/// Full spectrum of a Hermitian Pauli sum (test and inspection helper).
pub fn pauli_spectrum(sum: &PauliSum) -> Result<Vec<f64>> {
    let m = pauli_dense(sum)?;
    let m_na = m.map(|v| Complex::new(v.re, v.im));
    let eig = m_na.symmetric_eigen();
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(f64::total_cmp);
    Ok(vals)
}

// ---------------------------------------------------------------------------
// derivative-free optimizers
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct OptimizeResult {
    pub x: Vec<f64>,
    pub fx: f64,
    pub evaluations: usize,
    pub converged: bool,
}

/// Nelder-Mead simplex minimization.
///
/// The simplex starts at `x0` displaced by `step` along each coordinate and
/// the search stops when the value spread across the simplex falls below
/// `tolerance` or the evaluation budget is spent.
pub fn nelder_mead<F: FnMut(&[f64]) -> f64>(
    mut f: F,
    x0: &[f64],
    step: f64,
    tolerance: f64,
    max_evaluations: usize,
) -> OptimizeResult {
    let n = x0.len();
    let mut evals = 0usize;
    let mut eval = |x: &[f64], evals: &mut usize| -> f64 {
        *evals += 1;
        f(x)
    };

    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    simplex.push(x0.to_vec());
    for i in 0..n {
        let mut v = x0.to_vec();
        v[i] += step;
        simplex.push(v);
    }
    let mut values: Vec<f64> = simplex.iter().map(|x| eval(x, &mut evals)).collect();

    let (alpha, gamma, rho, sigma) = (1.0, 2.0, 0.5, 0.5);
    loop {
        let mut order: Vec<usize> = (0..=n).collect();
        order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        let reordered: Vec<Vec<f64>> = order.iter().map(|&i| simplex[i].clone()).collect();
        let revalues: Vec<f64> = order.iter().map(|&i| values[i]).collect();
        simplex = reordered;
        values = revalues;

        let spread = values[n] - values[0];
        if spread.abs() < tolerance {
            return OptimizeResult { x: simplex[0].clone(), fx: values[0], evaluations: evals, converged: true };
        }
        if evals >= max_evaluations {
            return OptimizeResult { x: simplex[0].clone(), fx: values[0], evaluations: evals, converged: false };
        }

        let mut centroid = vec![0.0; n];
        for v in simplex.iter().take(n) {
            for (c, x) in centroid.iter_mut().zip(v) {
                *c += x / n as f64;
            }
        }
        let combine = |a: &[f64], b: &[f64], t: f64| -> Vec<f64> {
            a.iter().zip(b).map(|(x, y)| x + t * (y - x)).collect()
        };

        // reflect the worst vertex through the centroid
        let reflected = combine(&centroid, &simplex[n], -alpha);
        let fr = eval(&reflected, &mut evals);
        if fr < values[0] {
            let expanded = combine(&centroid, &reflected, gamma);
            let fe = eval(&expanded, &mut evals);
            if fe < fr {
                simplex[n] = expanded;
                values[n] = fe;
            } else {
                simplex[n] = reflected;
                values[n] = fr;
            }
        } else if fr < values[n - 1] {
            simplex[n] = reflected;
            values[n] = fr;
        } else {
            let (candidate, fc) = if fr < values[n] {
                let outside = combine(&centroid, &reflected, rho);
                let fv = eval(&outside, &mut evals);
                (outside, fv)
            } else {
                let inside = combine(&centroid, &simplex[n], rho);
                let fv = eval(&inside, &mut evals);
                (inside, fv)
            };
            if fc < values[n].min(fr) {
                simplex[n] = candidate;
                values[n] = fc;
            } else {
                // shrink toward the best vertex
                for i in 1..=n {
                    simplex[i] = combine(&simplex[0], &simplex[i], sigma);
                    values[i] = eval(&simplex[i], &mut evals);
                }
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct SpsaConfig {
    pub a: f64,
    pub c: f64,
    pub stability: f64,
    pub alpha: f64,
    pub gamma: f64,
    pub iterations: usize,
    pub seed: u64,
}

impl Default for SpsaConfig {
    fn default() -> Self {
        Self { a: 0.2, c: 0.1, stability: 100.0, alpha: 0.602, gamma: 0.101, iterations: 2000, seed: 7 }
    }
}

/// Simultaneous-perturbation stochastic approximation with Bernoulli
/// perturbation directions from a seeded stream. Suitable for noisy
/// objectives; the returned value is a fresh evaluation at the final point.
pub fn spsa<F: FnMut(&[f64]) -> f64>(mut f: F, x0: &[f64], cfg: &SpsaConfig) -> OptimizeResult {
    let n = x0.len();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut x = x0.to_vec();
    let mut evals = 0usize;
    for k in 0..cfg.iterations {
        let ak = cfg.a / (k as f64 + 1.0 + cfg.stability).powf(cfg.alpha);
        let ck = cfg.c / (k as f64 + 1.0).powf(cfg.gamma);
        let delta: Vec<f64> = (0..n)
            .map(|_| if rng.gen::<bool>() { 1.0 } else { -1.0 })
            .collect();
        let xp: Vec<f64> = x.iter().zip(&delta).map(|(xi, d)| xi + ck * d).collect();
        let xm: Vec<f64> = x.iter().zip(&delta).map(|(xi, d)| xi - ck * d).collect();
        let fp = f(&xp);
        let fm = f(&xm);
        evals += 2;
        let diff = (fp - fm) / (2.0 * ck);
        for (xi, d) in x.iter_mut().zip(&delta) {
            *xi -= ak * diff * d;
        }
    }
    let fx = f(&x);
    evals += 1;
    let converged = fx.is_finite();
    OptimizeResult { x, fx, evaluations: evals, converged }
}

// ---------------------------------------------------------------------------
// variational eigensolver
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OptimizerKind {
    NelderMead,
    Spsa,
}

#[derive(Debug, Clone)]
pub struct VqeConfig {
    pub optimizer: OptimizerKind,
    pub max_iterations: usize,
    pub energy_tolerance: f64,
    /// Initial simplex displacement for Nelder-Mead.
    pub initial_step: f64,
    /// Polish passes: rerun the optimizer from the current optimum with a
    /// tighter initial step while the budget lasts.
    pub restarts: usize,
    pub seed: u64,
}

impl Default for VqeConfig {
    fn default() -> Self {
        Self {
            optimizer: OptimizerKind::NelderMead,
            max_iterations: 15_000,
            energy_tolerance: 1e-8,
            initial_step: 0.1,
            restarts: 2,
            seed: 7,
        }
    }
}

#[derive(Debug, Clone)]
pub struct VqeResult {
    pub energy: f64,
    pub parameters: Vec<f64>,
    pub evaluations: usize,
    pub converged: bool,
}

/// Minimize the statevector energy of the ansatz over its parameters,
/// starting from the zero vector (the bare reference determinant).
pub fn vqe(h: &PauliSum, ansatz: &UccsdAnsatz, config: &VqeConfig) -> Result<VqeResult> {
    let n = ansatz.n_parameters();
    let mut evaluations = 0usize;
    let objective = |theta: &[f64], evaluations: &mut usize| -> f64 {
        *evaluations += 1;
        let state = ansatz
            .prepare_state(theta)
            .expect("parameter count fixed by ansatz");
        expectation(h, &state)
    };

    match config.optimizer {
        OptimizerKind::NelderMead => {
            let mut x = vec![0.0; n];
            let mut best_fx = f64::INFINITY;
            let mut converged = false;
            let mut step = config.initial_step;
            for _round in 0..=config.restarts {
                let remaining = config.max_iterations.saturating_sub(evaluations);
                if remaining < 2 * n + 2 {
                    break;
                }
                let r = nelder_mead(
                    |t| objective(t, &mut evaluations),
                    &x,
                    step,
                    config.energy_tolerance,
                    remaining,
                );
                let improved = r.fx < best_fx - config.energy_tolerance;
                if r.fx < best_fx {
                    best_fx = r.fx;
                    x = r.x;
                }
                converged = r.converged;
                step *= 0.2;
                if !improved && _round > 0 {
                    break;
                }
            }
            Ok(VqeResult { energy: best_fx, parameters: x, evaluations, converged })
        }
        OptimizerKind::Spsa => {
            let spsa_cfg = SpsaConfig {
                iterations: config.max_iterations / 2,
                seed: config.seed,
                ..SpsaConfig::default()
            };
            let r = spsa(|t| objective(t, &mut evaluations), &vec![0.0; n], &spsa_cfg);
            Ok(VqeResult { energy: r.fx, parameters: r.x, evaluations, converged: r.converged })
        }
    }
}
