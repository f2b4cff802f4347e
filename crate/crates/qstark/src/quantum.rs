//! Statevector simulation, Pauli expectation values and the Trotterized
//! unitary coupled-cluster ansatz.
//!
//! States are dense complex amplitude vectors over computational basis
//! states; basis index bit q is the occupation of spin orbital q under the
//! Jordan-Wigner convention used throughout.

use crate::error::{Error, Result};
use crate::fermi::{FermionOperator, FermionTerm, Ladder};
use crate::jw::{jordan_wigner, PauliString, PauliSum};
use num_complex::Complex64;
use rand::Rng;

/// Largest statevector register this crate will simulate.
pub const MAX_STATE_QUBITS: usize = 24;

pub type State = Vec<Complex64>;

fn check_qubits(n_qubits: usize) -> Result<()> {
    if n_qubits > MAX_STATE_QUBITS {
        return Err(Error::TooManyQubits { qubits: n_qubits, limit: MAX_STATE_QUBITS });
    }
    Ok(())
}

/// |bits> as a statevector.
pub fn basis_state(n_qubits: usize, bits: u64) -> Result<State> {
    check_qubits(n_qubits)?;
    let mut v = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
    v[bits as usize] = Complex64::new(1.0, 0.0);
    Ok(v)
}

/// Occupation bitstring of the restricted reference determinant: the lowest
/// n/2 spatial orbitals doubly occupied, in blocked spin ordering.
pub fn reference_bits(n_qubits: usize, n_electrons: usize) -> u64 {
    let k = n_qubits / 2;
    let n_occ = n_electrons / 2;
    let spatial = (1u64 << n_occ) - 1;
    spatial | spatial << k
}

/// The reference determinant as a statevector.
pub fn hartree_fock_state(n_qubits: usize, n_electrons: usize) -> Result<State> {
    basis_state(n_qubits, reference_bits(n_qubits, n_electrons))
}

/// Apply a Pauli string: w = P v.
pub fn apply_pauli(p: &PauliString, v: &State) -> State {
    let mut w = vec![Complex64::new(0.0, 0.0); v.len()];
    for (s, &amp) in v.iter().enumerate() {
        if amp != Complex64::new(0.0, 0.0) {
            let (t, phase) = p.apply_to_basis(s as u64);
            w[t as usize] = phase * amp;
        }
    }
    w
}

/// In-place v <- exp(i angle P) v = cos(angle) v + i sin(angle) P v.
pub fn apply_pauli_exponential(v: &mut State, p: &PauliString, angle: f64) {
    let (c, s) = (angle.cos(), angle.sin());
    let is = Complex64::new(0.0, s);
    if p.x_mask == 0 {
        // diagonal string: per-state phase factor
        for (st, amp) in v.iter_mut().enumerate() {
            let (_, phase) = p.apply_to_basis(st as u64);
            *amp *= Complex64::new(c, 0.0) + is * phase;
        }
        return;
    }
    let x = p.x_mask;
    for st in 0..v.len() as u64 {
        let partner = st ^ x;
        if st < partner {
            let (_, ph_a) = p.apply_to_basis(st);
            let (_, ph_b) = p.apply_to_basis(partner);
            let a = v[st as usize];
            let b = v[partner as usize];
            v[st as usize] = c * a + is * ph_b * b;
            v[partner as usize] = c * b + is * ph_a * a;
        }
    }
}

/// <v| sum |v>, real part (imaginary part vanishes for Hermitian sums).
pub fn expectation(sum: &PauliSum, v: &State) -> f64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &(p, coeff) in &sum.terms {
        let mut term = Complex64::new(0.0, 0.0);
        for (s, &amp) in v.iter().enumerate() {
            if amp != Complex64::new(0.0, 0.0) {
                let (t, phase) = p.apply_to_basis(s as u64);
                term += v[t as usize].conj() * phase * amp;
            }
        }
        acc += coeff * term;
    }
    acc.re
}

/// Shot-noise estimate of <v| sum |v>.
///
/// Each non-identity string is measured independently with `shots_per_term`
/// single-shot outcomes, drawn as +-1 with the exact Born probability
/// p(+1) = (1 + <P>)/2. Returns the estimate and its standard error
/// propagated from the per-term sample variances.
pub fn sampled_expectation<R: Rng>(
    sum: &PauliSum,
    v: &State,
    shots_per_term: usize,
    rng: &mut R,
) -> (f64, f64) {
    let mut estimate = 0.0;
    let mut variance = 0.0;
    for &(p, coeff) in &sum.terms {
        let c = coeff.re;
        if p == PauliString::IDENTITY {
            estimate += c;
            continue;
        }
        let single = PauliSum { n_qubits: sum.n_qubits, terms: vec![(p, Complex64::new(1.0, 0.0))] };
        let exact = expectation(&single, v).clamp(-1.0, 1.0);
        let p_plus = 0.5 * (1.0 + exact);
        let mut plus = 0usize;
        for _ in 0..shots_per_term {
            if rng.gen::<f64>() < p_plus {
                plus += 1;
            }
        }
        let mean = 2.0 * plus as f64 / shots_per_term as f64 - 1.0;
        estimate += c * mean;
        // unbiased sample variance of the +-1 outcomes
        let n = shots_per_term as f64;
        let var_outcome = (1.0 - mean * mean) * n / (n - 1.0);
        variance += c * c * var_outcome / n;
    }
    (estimate, variance.sqrt())
}

/// One excitation amplitude of the cluster operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Excitation {
    Single { from: usize, to: usize },
    Double { from: (usize, usize), to: (usize, usize) },
}

/// Trotterized unitary coupled-cluster ansatz with single and double
/// excitations from the restricted reference determinant.
#[derive(Debug, Clone)]
pub struct UccsdAnsatz {
    pub n_qubits: usize,
    pub reference: u64,
    pub excitations: Vec<Excitation>,
    /// Per parameter: the Pauli strings of the mapped generator T - T+ and
    /// the real factor c in its coefficient i c.
    pub generators: Vec<Vec<(PauliString, f64)>>,
    pub trotter_steps: usize,
}

fn spin_of(mode: usize, k: usize) -> usize {
    usize::from(mode >= k)
}

impl UccsdAnsatz {
    /// Enumerate spin-conserving singles and doubles for `n_electrons`
    /// electrons in `n_qubits / 2` spatial orbitals.
    pub fn build(n_qubits: usize, n_electrons: usize, trotter_steps: usize) -> Result<UccsdAnsatz> {
        check_qubits(n_qubits)?;
        if !n_qubits.is_multiple_of(2)
            || !n_electrons.is_multiple_of(2)
            || n_electrons == 0
            || n_electrons >= n_qubits
        {
            return Err(Error::InvalidInput(format!(
                "ansatz needs an even electron count 0 < N < qubits, got N={n_electrons} over {n_qubits} qubits"
            )));
        }
        if trotter_steps == 0 {
            return Err(Error::InvalidInput("trotter_steps must be positive".into()));
        }
        let k = n_qubits / 2;
        let n_occ = n_electrons / 2;
        let occ: Vec<usize> = (0..n_occ).chain(k..k + n_occ).collect();
        let virt: Vec<usize> = (n_occ..k).chain(k + n_occ..n_qubits).collect();

        let mut excitations = Vec::new();
        for &i in &occ {
            for &a in &virt {
                if spin_of(i, k) == spin_of(a, k) {
                    excitations.push(Excitation::Single { from: i, to: a });
                }
            }
        }
        for (xi, &i) in occ.iter().enumerate() {
            for &j in occ.iter().skip(xi + 1) {
                for (xa, &a) in virt.iter().enumerate() {
                    for &b in virt.iter().skip(xa + 1) {
                        let occ_spin = spin_of(i, k) + spin_of(j, k);
                        let virt_spin = spin_of(a, k) + spin_of(b, k);
                        if occ_spin == virt_spin {
                            excitations.push(Excitation::Double { from: (i, j), to: (a, b) });
                        }
                    }
                }
            }
        }

        let mut generators = Vec::with_capacity(excitations.len());
        for &exc in &excitations {
            let forward = match exc {
                Excitation::Single { from, to } => vec![
                    Ladder { mode: to, creation: true },
                    Ladder { mode: from, creation: false },
                ],
                Excitation::Double { from: (i, j), to: (a, b) } => vec![
                    Ladder { mode: a, creation: true },
                    Ladder { mode: b, creation: true },
                    Ladder { mode: j, creation: false },
                    Ladder { mode: i, creation: false },
                ],
            };
            let reverse: Vec<Ladder> = forward
                .iter()
                .rev()
                .map(|l| Ladder { mode: l.mode, creation: !l.creation })
                .collect();
            let gen_op = FermionOperator {
                n_modes: n_qubits,
                constant: 0.0,
                terms: vec![
                    FermionTerm { factors: forward, coefficient: 1.0 },
                    FermionTerm { factors: reverse, coefficient: -1.0 },
                ],
            };
            let mapped = jordan_wigner(&gen_op)?;
            let mut strings = Vec::with_capacity(mapped.terms.len());
            for (p, c) in mapped.terms {
                debug_assert!(c.re.abs() < 1e-12, "antihermitian generator must map to imaginary coefficients");
                strings.push((p, c.im));
            }
            generators.push(strings);
        }

        Ok(UccsdAnsatz {
            n_qubits,
            reference: reference_bits(n_qubits, n_electrons),
            excitations,
            generators,
            trotter_steps,
        })
    }

    pub fn n_parameters(&self) -> usize {
        self.generators.len()
    }

    /// Prepare exp(T - T+)|ref> by first-order Trotterization: each step
    /// applies every generator term as a Pauli exponential, term order fixed
    /// by the simplified generator layout.
    pub fn prepare_state(&self, params: &[f64]) -> Result<State> {
        if params.len() != self.n_parameters() {
            return Err(Error::InvalidInput(format!(
                "ansatz has {} parameters, got {}",
                self.n_parameters(),
                params.len()
            )));
        }
        let mut state = basis_state(self.n_qubits, self.reference)?;
        let inv = 1.0 / self.trotter_steps as f64;
        for _ in 0..self.trotter_steps {
            for (theta, strings) in params.iter().zip(&self.generators) {
                for &(p, c) in strings {
                    apply_pauli_exponential(&mut state, &p, theta * c * inv);
                }
            }
        }
        Ok(state)
    }
}
