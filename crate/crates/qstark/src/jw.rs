//! Jordan-Wigner mapping of ladder operators onto Pauli strings.
//!
//! Pauli strings are held in symplectic form: bit q of `x_mask` / `z_mask`
//! marks an X / Z factor on qubit q, both bits together mean Y. As a matrix,
//! a string is i^{|x&z|} X^x Z^z, so applying it to a computational basis
//! state flips the x bits and contributes a phase. Qubit q stores the
//! occupation of spin orbital (mode) q, bit 0 least significant.
//!
//! The annihilator maps as a_m -> (Z_0 ... Z_{m-1}) (X_m + i Y_m) / 2.

use crate::error::{Error, Result};
use crate::fermi::FermionOperator;
use num_complex::Complex64;
use std::fmt;

/// Pauli string in symplectic (x, z) mask form, no stored phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliString {
    pub z_mask: u64,
    pub x_mask: u64,
}

const I_POWERS: [Complex64; 4] = [
    Complex64::new(1.0, 0.0),
    Complex64::new(0.0, 1.0),
    Complex64::new(-1.0, 0.0),
    Complex64::new(0.0, -1.0),
];

impl PauliString {
    pub const IDENTITY: PauliString = PauliString { z_mask: 0, x_mask: 0 };

    pub fn single(qubit: usize, letter: char) -> PauliString {
        let bit = 1u64 << qubit;
        match letter {
            'I' => PauliString::IDENTITY,
            'X' => PauliString { z_mask: 0, x_mask: bit },
            'Y' => PauliString { z_mask: bit, x_mask: bit },
            'Z' => PauliString { z_mask: bit, x_mask: 0 },
            other => panic!("unknown Pauli letter {other:?}"),
        }
    }

    pub fn letter(&self, qubit: usize) -> char {
        let x = self.x_mask >> qubit & 1 != 0;
        let z = self.z_mask >> qubit & 1 != 0;
        match (x, z) {
            (false, false) => 'I',
            (true, false) => 'X',
            (true, true) => 'Y',
            (false, true) => 'Z',
        }
    }

    /// Number of non-identity factors.
    pub fn weight(&self) -> u32 {
        (self.x_mask | self.z_mask).count_ones()
    }

    /// Product self * other as a string plus the accumulated phase.
    pub fn mul(&self, other: &PauliString) -> (PauliString, Complex64) {
        let x = self.x_mask ^ other.x_mask;
        let z = self.z_mask ^ other.z_mask;
        // i^{|x1&z1|} X^{x1} Z^{z1} i^{|x2&z2|} X^{x2} Z^{z2}
        //   = i^{|x1&z1|+|x2&z2|} (-1)^{|z1&x2|} X^x Z^z
        // and X^x Z^z = i^{-|x&z|} * string(x, z)
        let mut e = (self.x_mask & self.z_mask).count_ones() as i64
            + (other.x_mask & other.z_mask).count_ones() as i64
            - (x & z).count_ones() as i64
            + 2 * (self.z_mask & other.x_mask).count_ones() as i64;
        e = e.rem_euclid(4);
        (PauliString { z_mask: z, x_mask: x }, I_POWERS[e as usize])
    }

    /// Apply to a computational basis state: returns (new state, phase).
    #[inline]
    pub fn apply_to_basis(&self, state: u64) -> (u64, Complex64) {
        let e = ((self.x_mask & self.z_mask).count_ones()
            + 2 * (self.z_mask & state).count_ones()) as usize
            % 4;
        (state ^ self.x_mask, I_POWERS[e])
    }

    pub fn letters(&self, n_qubits: usize) -> String {
        (0..n_qubits).map(|q| self.letter(q)).collect()
    }

    pub fn from_letters(s: &str) -> Result<PauliString> {
        let mut p = PauliString::IDENTITY;
        for (q, ch) in s.chars().enumerate() {
            if q >= 64 {
                return Err(Error::TooManyQubits { qubits: s.len(), limit: 64 });
            }
            match ch {
                'I' | 'X' | 'Y' | 'Z' => {
                    let single = PauliString::single(q, ch);
                    p.x_mask |= single.x_mask;
                    p.z_mask |= single.z_mask;
                }
                other => {
                    return Err(Error::InvalidInput(format!(
                        "invalid Pauli letter {other:?} in {s:?}"
                    )))
                }
            }
        }
        Ok(p)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top = 64 - (self.x_mask | self.z_mask | 1).leading_zeros() as usize;
        write!(f, "{}", self.letters(top))
    }
}

/// Weighted sum of Pauli strings.
#[derive(Debug, Clone)]
pub struct PauliSum {
    pub n_qubits: usize,
    pub terms: Vec<(PauliString, Complex64)>,
}

impl PauliSum {
    pub fn new(n_qubits: usize) -> PauliSum {
        PauliSum { n_qubits, terms: Vec::new() }
    }

    pub fn add(&mut self, p: PauliString, c: Complex64) {
        self.terms.push((p, c));
    }

    /// Merge duplicate strings and drop negligible coefficients. Terms end
    /// up ordered by the lexicographic letter sequence of the string, so a
    /// simplified sum has a deterministic layout.
    pub fn simplify(&mut self) {
        let n = self.n_qubits;
        self.terms.sort_by_cached_key(|t| t.0.letters(n));
        let mut merged: Vec<(PauliString, Complex64)> = Vec::with_capacity(self.terms.len());
        for &(p, c) in &self.terms {
            match merged.last_mut() {
                Some((lp, lc)) if *lp == p => *lc += c,
                _ => merged.push((p, c)),
            }
        }
        merged.retain(|&(_, c)| c.norm() >= 1e-12);
        self.terms = merged;
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest absolute imaginary part over the coefficients.
    pub fn max_imag(&self) -> f64 {
        self.terms
            .iter()
            .map(|&(_, c)| c.im.abs())
            .fold(0.0, f64::max)
    }

    /// One line per term: "coeff_re coeff_im letters", qubit 0 first.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for &(p, c) in &self.terms {
            out.push_str(&format!(
                "{:+.16e} {:+.16e} {}\n",
                c.re,
                c.im,
                p.letters(self.n_qubits)
            ));
        }
        out
    }

    pub fn deserialize(text: &str) -> Result<PauliSum> {
        let mut terms = Vec::new();
        let mut n_qubits = 0;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let (re, im, letters) = match (parts.next(), parts.next(), parts.next()) {
                (Some(re), Some(im), Some(l)) => (re, im, l),
                _ => {
                    return Err(Error::InvalidInput(format!(
                        "malformed Pauli term line {line:?}"
                    )))
                }
            };
            let re: f64 = re
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad coefficient in {line:?}")))?;
            let im: f64 = im
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad coefficient in {line:?}")))?;
            n_qubits = n_qubits.max(letters.len());
            terms.push((PauliString::from_letters(letters)?, Complex64::new(re, im)));
        }
        Ok(PauliSum { n_qubits, terms })
    }
}

/// Jordan-Wigner image of one ladder factor as two weighted strings.
fn ladder_strings(mode: usize, creation: bool) -> [(PauliString, Complex64); 2] {
    let parity = (1u64 << mode) - 1;
    let x_part = PauliString { z_mask: parity, x_mask: 1 << mode };
    let y_part = PauliString { z_mask: parity | 1 << mode, x_mask: 1 << mode };
    let half = Complex64::new(0.5, 0.0);
    let half_i = Complex64::new(0.0, if creation { -0.5 } else { 0.5 });
    [(x_part, half), (y_part, half_i)]
}

/// Map a ladder-product operator to a simplified Pauli sum.
pub fn jordan_wigner(op: &FermionOperator) -> Result<PauliSum> {
    if op.n_modes > 64 {
        return Err(Error::TooManyQubits { qubits: op.n_modes, limit: 64 });
    }
    let mut sum = PauliSum::new(op.n_modes);
    if op.constant != 0.0 {
        sum.add(PauliString::IDENTITY, Complex64::new(op.constant, 0.0));
    }
    for term in &op.terms {
        // expand the product of two-string factors left to right
        let mut partial: Vec<(PauliString, Complex64)> =
            vec![(PauliString::IDENTITY, Complex64::new(term.coefficient, 0.0))];
        for f in &term.factors {
            let images = ladder_strings(f.mode, f.creation);
            let mut next = Vec::with_capacity(partial.len() * 2);
            for &(p, c) in &partial {
                for &(q, w) in &images {
                    let (prod, phase) = p.mul(&q);
                    next.push((prod, c * w * phase));
                }
            }
            partial = next;
        }
        for (p, c) in partial {
            sum.add(p, c);
        }
    }
    sum.simplify();
    Ok(sum)
}
