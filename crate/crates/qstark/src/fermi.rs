//! Second-quantized molecular Hamiltonians over blocked spin orbitals.
//!
//! Spatial molecular orbitals 0..K map to spin orbitals 0..K (up) and
//! K..2K (down). Operators are kept as sums of ladder-operator products
//! with real coefficients; a dense matrix realization over occupation
//! bitstrings (mode m = bit m, bit 0 least significant) provides exact
//! diagonalization in a fixed particle-number sector.

use crate::error::{Error, Result};
use crate::two_electron::Eri;
use nalgebra::{DMatrix, SymmetricEigen};

/// One ladder factor: mode index and whether it is a creation operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ladder {
    pub mode: usize,
    pub creation: bool,
}

/// A product of ladder operators (leftmost factor first) with a coefficient.
#[derive(Debug, Clone)]
pub struct FermionTerm {
    pub factors: Vec<Ladder>,
    pub coefficient: f64,
}

/// Sum of ladder products plus a scalar.
#[derive(Debug, Clone)]
pub struct FermionOperator {
    pub n_modes: usize,
    pub constant: f64,
    pub terms: Vec<FermionTerm>,
}

const COEFF_CUTOFF: f64 = 1e-12;

/// Transform the one-electron matrix and repulsion tensor from the atomic
/// basis to the molecular-orbital basis defined by the coefficient columns.
pub fn mo_transform(
    h_ao: &DMatrix<f64>,
    eri_ao: &Eri,
    c: &DMatrix<f64>,
) -> (DMatrix<f64>, Vec<f64>) {
    let k = c.nrows();
    let h_mo = c.transpose() * h_ao * c;
    // quarter transformations, one index at a time
    let idx = |i: usize, j: usize, a: usize, b: usize| ((i * k + j) * k + a) * k + b;
    let mut t = vec![0.0; k * k * k * k];
    for i in 0..k {
        for j in 0..k {
            for a in 0..k {
                for b in 0..k {
                    t[idx(i, j, a, b)] = eri_ao.get(i, j, a, b);
                }
            }
        }
    }
    for _pass in 0..4 {
        let mut next = vec![0.0; k * k * k * k];
        for p in 0..k {
            for j in 0..k {
                for a in 0..k {
                    for b in 0..k {
                        let mut acc = 0.0;
                        for i in 0..k {
                            // rotate the first index, then cycle so each pass
                            // hits a fresh index
                            acc += c[(i, p)] * t[idx(i, j, a, b)];
                        }
                        next[idx(j, a, b, p)] = acc;
                    }
                }
            }
        }
        t = next;
    }
    (h_mo, t)
}

/// Build the electronic Hamiltonian in second quantization from
/// molecular-orbital integrals. `eri_mo` is indexed in chemist order
/// (pq|rs) as a flat K^4 array.
pub fn molecular_hamiltonian(
    h_mo: &DMatrix<f64>,
    eri_mo: &[f64],
    n_spatial: usize,
    constant: f64,
) -> FermionOperator {
    let k = n_spatial;
    let idx = |p: usize, q: usize, r: usize, s: usize| ((p * k + q) * k + r) * k + s;
    let mut terms = Vec::new();
    // one-body: tau_pq a+_ps a_qs for both spins
    for p in 0..k {
        for q in 0..k {
            let v = h_mo[(p, q)];
            if v.abs() < COEFF_CUTOFF {
                continue;
            }
            for spin in [0, k] {
                terms.push(FermionTerm {
                    factors: vec![
                        Ladder { mode: p + spin, creation: true },
                        Ladder { mode: q + spin, creation: false },
                    ],
                    coefficient: v,
                });
            }
        }
    }
    // two-body: (pq|rs)/2 a+_ps a+_rt a_st a_qs over spin pairs (s, t)
    for p in 0..k {
        for q in 0..k {
            for r in 0..k {
                for s in 0..k {
                    let v = 0.5 * eri_mo[idx(p, q, r, s)];
                    if v.abs() < COEFF_CUTOFF {
                        continue;
                    }
                    for s1 in [0, k] {
                        for s2 in [0, k] {
                            terms.push(FermionTerm {
                                factors: vec![
                                    Ladder { mode: p + s1, creation: true },
                                    Ladder { mode: r + s2, creation: true },
                                    Ladder { mode: s + s2, creation: false },
                                    Ladder { mode: q + s1, creation: false },
                                ],
                                coefficient: v,
                            });
                        }
                    }
                }
            }
        }
    }
    FermionOperator {
        n_modes: 2 * k,
        constant,
        terms,
    }
}

/// Apply one ladder factor to an occupation bitstring. Returns the new
/// bitstring and the fermionic sign, or None if the state is annihilated.
fn apply_ladder(state: u64, op: Ladder) -> Option<(u64, f64)> {
    let bit = 1u64 << op.mode;
    let occupied = state & bit != 0;
    if op.creation == occupied {
        return None;
    }
    let below = (state & (bit - 1)).count_ones();
    let sign = if below.is_multiple_of(2) { 1.0 } else { -1.0 };
    Some((state ^ bit, sign))
}

impl FermionOperator {
    /// Apply one product term to a basis state, rightmost factor first.
    fn apply_term(term: &FermionTerm, state: u64) -> Option<(u64, f64)> {
        let mut s = state;
        let mut sign = 1.0;
        for &f in term.factors.iter().rev() {
            let (ns, fs) = apply_ladder(s, f)?;
            s = ns;
            sign *= fs;
        }
        Some((s, sign))
    }

    /// Dense matrix over the full 2^n occupation basis.
    pub fn dense_matrix(&self) -> Result<DMatrix<f64>> {
        if self.n_modes > 16 {
            return Err(Error::TooManyQubits {
                qubits: self.n_modes,
                limit: 16,
            });
        }
        let dim = 1usize << self.n_modes;
        let mut m = DMatrix::zeros(dim, dim);
        for col in 0..dim {
            m[(col, col)] += self.constant;
            for term in &self.terms {
                if let Some((row, sign)) = Self::apply_term(term, col as u64) {
                    m[(row as usize, col)] += sign * term.coefficient;
                }
            }
        }
        Ok(m)
    }
}

/// Indices of occupation basis states with exactly `n_particles` set bits.
pub fn number_sector(n_modes: usize, n_particles: usize) -> Vec<usize> {
    (0..1usize << n_modes)
        .filter(|s| s.count_ones() as usize == n_particles)
        .collect()
}

/// Lowest eigenvalue of a dense Hamiltonian restricted to a particle-number
/// sector, together with the eigenvector embedded in the full basis.
pub fn sector_ground_state(
    h: &DMatrix<f64>,
    n_modes: usize,
    n_particles: usize,
) -> (f64, Vec<f64>) {
    let sector = number_sector(n_modes, n_particles);
    let dim = sector.len();
    let mut block = DMatrix::zeros(dim, dim);
    for (a, &sa) in sector.iter().enumerate() {
        for (b, &sb) in sector.iter().enumerate() {
            block[(a, b)] = h[(sa, sb)];
        }
    }
    let eig = SymmetricEigen::new(block);
    let mut best = 0;
    for i in 1..dim {
        if eig.eigenvalues[i] < eig.eigenvalues[best] {
            best = i;
        }
    }
    let mut full = vec![0.0; h.nrows()];
    for (a, &sa) in sector.iter().enumerate() {
        full[sa] = eig.eigenvectors[(a, best)];
    }
    (eig.eigenvalues[best], full)
}
