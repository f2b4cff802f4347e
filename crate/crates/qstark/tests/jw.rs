//! Pauli-string algebra and the fermion-to-qubit mapping.  The key check is
//! that the mapped operator, realized as a dense matrix through its action on
//! computational basis states, agrees entrywise with the dense matrix built
//! directly from the ladder-operator representation.

use nalgebra::DMatrix;
use num_complex::Complex64;
use qstark::basis::{Species, ANGSTROM};
use qstark::fermi::{mo_transform, molecular_hamiltonian, FermionOperator};
use qstark::jw::{jordan_wigner, PauliString, PauliSum};
use qstark::pipeline;

fn pauli_dense(p: &PauliString, n_qubits: usize) -> DMatrix<Complex64> {
    let dim = 1usize << n_qubits;
    let mut m = DMatrix::zeros(dim, dim);
    for col in 0..dim {
        let (row, phase) = p.apply_to_basis(col as u64);
        m[(row as usize, col)] += phase;
    }
    m
}

fn sum_dense(sum: &PauliSum) -> DMatrix<Complex64> {
    let dim = 1usize << sum.n_qubits;
    let mut m = DMatrix::zeros(dim, dim);
    for (p, c) in &sum.terms {
        m += pauli_dense(p, sum.n_qubits) * *c;
    }
    m
}

#[test]
fn single_qubit_multiplication_table() {
    let i = Complex64::i();
    let one = Complex64::new(1.0, 0.0);
    let cases = [
        ('X', 'Y', 'Z', i),
        ('Y', 'Z', 'X', i),
        ('Z', 'X', 'Y', i),
        ('Y', 'X', 'Z', -i),
        ('Z', 'Y', 'X', -i),
        ('X', 'Z', 'Y', -i),
        ('X', 'X', 'I', one),
        ('Y', 'Y', 'I', one),
        ('Z', 'Z', 'I', one),
    ];
    for (a, b, want, phase) in cases {
        let pa = PauliString::single(0, a);
        let pb = PauliString::single(0, b);
        let (prod, ph) = pa.mul(&pb);
        assert_eq!(prod.letter(0), want, "{a}*{b}");
        assert!((ph - phase).norm() < 1e-15, "{a}*{b} phase {ph}");
    }
}

#[test]
fn multiplication_matches_dense_matrices() {
    // random-ish strings on 3 qubits: mul must agree with matrix product
    let strings = ["XYZ", "ZZI", "IXY", "YIY", "XXX", "ZIX"];
    for a in strings {
        for b in strings {
            let pa = PauliString::from_letters(a).unwrap();
            let pb = PauliString::from_letters(b).unwrap();
            let (prod, phase) = pa.mul(&pb);
            let want = pauli_dense(&pa, 3) * pauli_dense(&pb, 3);
            let got = pauli_dense(&prod, 3) * phase;
            assert!((&want - &got).norm() < 1e-14, "{a} * {b}");
        }
    }
}

#[test]
fn letters_roundtrip_and_weight() {
    for s in ["IIII", "XIZY", "ZZZZ", "IXII"] {
        let p = PauliString::from_letters(s).unwrap();
        assert_eq!(p.letters(4), s);
    }
    assert_eq!(PauliString::from_letters("XIZY").unwrap().weight(), 3);
    assert_eq!(PauliString::IDENTITY.weight(), 0);
    assert!(PauliString::from_letters("XQ").is_err());
}

#[test]
fn number_operator_maps_to_half_one_minus_z() {
    // a+_0 a_0 on a single mode must map to (I - Z)/2
    let op = FermionOperator {
        n_modes: 1,
        constant: 0.0,
        terms: vec![qstark::fermi::FermionTerm {
            factors: vec![
                qstark::fermi::Ladder { mode: 0, creation: true },
                qstark::fermi::Ladder { mode: 0, creation: false },
            ],
            coefficient: 1.0,
        }],
    };
    let sum = jordan_wigner(&op).unwrap();
    let m = sum_dense(&sum);
    assert!((m[(0, 0)] - Complex64::new(0.0, 0.0)).norm() < 1e-15);
    assert!((m[(1, 1)] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    assert!(m[(0, 1)].norm() < 1e-15 && m[(1, 0)].norm() < 1e-15);
}

fn mapped_and_direct(species: Species, d_angstrom: f64) -> (DMatrix<Complex64>, DMatrix<f64>) {
    let asm = pipeline::assemble(species, d_angstrom, 0.0).unwrap();
    let scf = pipeline::mean_field(&asm).unwrap();
    let (h_mo, eri_mo) = mo_transform(&asm.core, &asm.eri, &scf.coefficients);
    let k = asm.molecule.n_orbitals();
    let op = molecular_hamiltonian(&h_mo, &eri_mo, k, asm.constant);
    let direct = op.dense_matrix().unwrap();
    let sum = jordan_wigner(&op).unwrap();
    (sum_dense(&sum), direct)
}

#[test]
fn mapped_hamiltonian_matches_ladder_realization_h2() {
    let (mapped, direct) = mapped_and_direct(Species::H2, 1.4 / ANGSTROM);
    assert_eq!(mapped.nrows(), 16);
    for col in 0..16 {
        for row in 0..16 {
            let want = Complex64::new(direct[(row, col)], 0.0);
            assert!(
                (mapped[(row, col)] - want).norm() < 1e-10,
                "mismatch at ({row}, {col})"
            );
        }
    }
}

#[test]
fn mapped_hamiltonian_matches_ladder_realization_lih() {
    let (mapped, direct) = mapped_and_direct(Species::LiH, 1.6);
    assert_eq!(mapped.nrows(), 256);
    let mut worst = 0.0f64;
    for col in 0..256 {
        for row in 0..256 {
            let want = Complex64::new(direct[(row, col)], 0.0);
            worst = worst.max((mapped[(row, col)] - want).norm());
        }
    }
    assert!(worst < 1e-9, "worst entry deviation {worst:.3e}");
}

#[test]
fn h2_operator_content() {
    let asm = pipeline::assemble(Species::H2, 1.4 / ANGSTROM, 0.0).unwrap();
    let scf = pipeline::mean_field(&asm).unwrap();
    let (h_mo, eri_mo) = mo_transform(&asm.core, &asm.eri, &scf.coefficients);
    let op = molecular_hamiltonian(&h_mo, &eri_mo, 2, asm.constant);
    let sum = jordan_wigner(&op).unwrap();

    assert_eq!(sum.n_terms(), 15);
    assert!(sum.max_imag() < 1e-12);

    // breakdown by structure: identity, 4 single-Z, 6 ZZ, and 4 strings made
    // of X and Y pairs threaded through the string
    let mut n_id = 0;
    let mut n_z1 = 0;
    let mut n_zz = 0;
    let mut n_xy = 0;
    for (p, _) in &sum.terms {
        let letters = p.letters(4);
        let zs = letters.chars().filter(|&c| c == 'Z').count();
        let xys = letters.chars().filter(|&c| c == 'X' || c == 'Y').count();
        match (zs, xys) {
            (0, 0) => n_id += 1,
            (1, 0) => n_z1 += 1,
            (2, 0) => n_zz += 1,
            (0, 4) => n_xy += 1,
            other => panic!("unexpected term shape {other:?}: {letters}"),
        }
    }
    assert_eq!((n_id, n_z1, n_zz, n_xy), (1, 4, 6, 4));
}

#[test]
fn simplify_merges_and_drops() {
    let mut sum = PauliSum::new(2);
    let p = PauliString::from_letters("XZ").unwrap();
    sum.add(p, Complex64::new(0.5, 0.0));
    sum.add(p, Complex64::new(0.25, 0.0));
    sum.add(PauliString::from_letters("ZI").unwrap(), Complex64::new(1e-15, 0.0));
    sum.simplify();
    assert_eq!(sum.n_terms(), 1);
    assert!((sum.terms[0].1 - Complex64::new(0.75, 0.0)).norm() < 1e-15);
}

#[test]
fn serialization_roundtrip() {
    let (op, _) = {
        let asm = pipeline::assemble(Species::H2, 0.7, 0.0).unwrap();
        let scf = pipeline::mean_field(&asm).unwrap();
        let (h_mo, eri_mo) = mo_transform(&asm.core, &asm.eri, &scf.coefficients);
        (molecular_hamiltonian(&h_mo, &eri_mo, 2, asm.constant), 0)
    };
    let sum = jordan_wigner(&op).unwrap();
    let text = sum.serialize();
    let back = PauliSum::deserialize(&text).unwrap();
    assert_eq!(back.n_qubits, sum.n_qubits);
    assert_eq!(back.n_terms(), sum.n_terms());
    for ((p1, c1), (p2, c2)) in sum.terms.iter().zip(back.terms.iter()) {
        assert_eq!(p1, p2);
        assert!((c1 - c2).norm() < 1e-15);
    }
    assert!(PauliSum::deserialize("not a number XZ").is_err());
}
