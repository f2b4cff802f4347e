//! Analytic integral matrices against frozen reference values computed with
//! an independent implementation, plus structural properties.

use approx::assert_abs_diff_eq;
use nalgebra::DMatrix;
use qstark::basis::{Molecule, Species, Zetas};
use qstark::one_electron::{
    core_hamiltonian, kinetic_matrix, nuclear_attraction, overlap_matrix, z_moment_matrix,
};
use qstark::two_electron::{electron_repulsion, eri_tensor};

fn h2() -> Molecule {
    Molecule::build(Species::H2, 1.4, &Zetas::default())
}

fn lih() -> Molecule {
    Molecule::build(Species::LiH, 3.0, &Zetas::default())
}

/// Total -sum_A Z_A <i|1/|r-A||j> matrix, recovered from the core matrix.
fn attraction_total(mol: &Molecule) -> DMatrix<f64> {
    core_hamiltonian(mol).unwrap() - kinetic_matrix(mol)
}

fn assert_matrix(got: &DMatrix<f64>, want: &[&[f64]], tol: f64) {
    assert_eq!(got.nrows(), want.len());
    for (i, row) in want.iter().enumerate() {
        assert_eq!(got.ncols(), row.len());
        for (j, &w) in row.iter().enumerate() {
            assert_abs_diff_eq!(got[(i, j)], w, epsilon = tol);
        }
    }
}

#[test]
fn h2_reference_matrices() {
    let mol = h2();
    assert_matrix(
        &overlap_matrix(&mol),
        &[
            &[1.00000000006999, 6.59318205850890e-1],
            &[6.59318205850890e-1, 1.00000000006999],
        ],
        1e-12,
    );
    assert_matrix(
        &kinetic_matrix(&mol),
        &[
            &[7.60031879975584e-1, 2.36454658290793e-1],
            &[2.36454658290793e-1, 7.60031879975584e-1],
        ],
        1e-12,
    );
    assert_matrix(
        &attraction_total(&mol),
        &[
            &[-1.88044089052278, -1.19483462205357],
            &[-1.19483462205357, -1.88044089052278],
        ],
        1e-10,
    );
    assert_matrix(
        &z_moment_matrix(&mol),
        &[
            &[1.40000000009799, 4.61522744095623e-1],
            &[4.61522744095623e-1, 0.0],
        ],
        1e-12,
    );
}

#[test]
fn h2_reference_repulsion() {
    let mol = h2();
    let cases = [
        ((0, 0, 0, 0), 7.74605944319919e-1),
        ((0, 0, 1, 1), 5.69675926551623e-1),
        ((0, 1, 0, 1), 2.97028541222628e-1),
        ((0, 0, 0, 1), 4.44107658953352e-1),
        ((0, 1, 1, 1), 4.44107658953352e-1),
    ];
    for ((i, j, k, l), want) in cases {
        assert_abs_diff_eq!(electron_repulsion(&mol, i, j, k, l), want, epsilon = 1e-12);
    }
}

#[test]
fn lih_reference_matrices() {
    let mol = lih();
    assert_matrix(
        &overlap_matrix(&mol),
        &[
            &[1.00000000006999, 6.83098435596987e-2, 3.98386563656205e-1, 5.15229134211909e-1],
            &[6.83098435596987e-2, 1.00000000008653, 2.41136573877666e-1, 0.0],
            &[3.98386563656205e-1, 2.41136573877666e-1, 1.00000000006805, 0.0],
            &[5.15229134211909e-1, 0.0, 0.0, 1.00000000002453],
        ],
        1e-12,
    );
    assert_matrix(
        &kinetic_matrix(&mol),
        &[
            &[7.60031879975584e-1, -1.59075408063982e-2, 4.29929263843371e-2, 1.30583627411412e-1],
            &[-1.59075408063982e-2, 3.57678634623113, -2.02374352726435e-2, 0.0],
            &[4.29929263843371e-2, -2.02374352726435e-2, 1.02163329930636e-1, 0.0],
            &[1.30583627411412e-1, 0.0, 0.0, 3.19681577199284e-1],
        ],
        1e-12,
    );
    // rows/columns touching the p orbital include the radial-quadrature
    // families, so the tolerance is the quadrature tolerance
    assert_matrix(
        &attraction_total(&mol),
        &[
            &[-2.22385243475409, -2.94617208014448e-1, -7.43966259026904e-1, -9.75143119237571e-1],
            &[-2.94617208014448e-1, -8.31621462078711, -1.04471702418966, -1.63518191445661e-2],
            &[-7.43966259026904e-1, -1.04471702418966, -1.49939880281609, -1.22849675245990e-1],
            &[-9.75143119237571e-1, -1.63518191445661e-2, -1.22849675245990e-1, -1.55538050494662],
        ],
        1e-8,
    );
    assert_matrix(
        &z_moment_matrix(&mol),
        &[
            &[3.00000000020997, 3.72425691479662e-2, 9.39291758386646e-1, 1.43122661828938],
            &[3.72425691479662e-2, 0.0, 0.0, 1.47239954909623e-1],
            &[9.39291758386646e-1, 0.0, 0.0, 1.80329866194376],
            &[1.43122661828938, 1.47239954909623e-1, 1.80329866194376, 0.0],
        ],
        1e-12,
    );
}

#[test]
fn lih_reference_repulsion() {
    let mol = lih();
    let cases = [
        ((0, 0, 0, 0), 7.74605944319919e-1),
        ((1, 1, 1, 1), 1.68039515334213),
        ((2, 2, 2, 2), 2.90562238547715e-1),
        ((3, 3, 3, 3), 3.12945454085423e-1),
        ((0, 0, 1, 1), 3.32015713583073e-1),
        ((0, 1, 0, 1), 4.18916560682859e-3),
        ((0, 0, 3, 3), 3.30582518080099e-1),
        ((0, 3, 0, 3), 1.47740168848252e-1),
        ((2, 3, 2, 3), 6.41843156049460e-2),
        ((2, 2, 3, 3), 2.90496921288526e-1),
        ((0, 0, 2, 3), 1.06100773053801e-1),
        ((0, 2, 1, 3), 5.87412656705475e-3),
        ((1, 2, 3, 3), 9.28803535016984e-2),
        ((0, 1, 2, 3), 3.15486027981199e-3),
    ];
    for ((i, j, k, l), want) in cases {
        assert_abs_diff_eq!(electron_repulsion(&mol, i, j, k, l), want, epsilon = 1e-12);
    }
}

#[test]
fn eri_tensor_matches_entrywise_and_is_symmetric() {
    let mol = lih();
    let t = eri_tensor(&mol);
    let k = mol.n_orbitals();
    for i in 0..k {
        for j in 0..k {
            for a in 0..k {
                for b in 0..k {
                    let v = t.get(i, j, a, b);
                    assert_abs_diff_eq!(v, electron_repulsion(&mol, i, j, a, b), epsilon = 1e-13);
                    // eightfold permutational symmetry
                    assert_abs_diff_eq!(v, t.get(j, i, a, b), epsilon = 0.0);
                    assert_abs_diff_eq!(v, t.get(i, j, b, a), epsilon = 0.0);
                    assert_abs_diff_eq!(v, t.get(a, b, i, j), epsilon = 0.0);
                }
            }
        }
    }
}

#[test]
fn one_electron_matrices_are_symmetric() {
    for mol in [h2(), lih()] {
        for m in [
            overlap_matrix(&mol),
            kinetic_matrix(&mol),
            z_moment_matrix(&mol),
            core_hamiltonian(&mol).unwrap(),
        ] {
            assert!((&m - m.transpose()).abs().max() < 1e-13);
        }
    }
}

#[test]
fn attraction_is_symmetric_under_orbital_swap() {
    let mol = lih();
    for zc in [0.0, 3.0] {
        for i in 0..4 {
            for j in 0..4 {
                let a = nuclear_attraction(&mol, i, j, zc).unwrap();
                let b = nuclear_attraction(&mol, j, i, zc).unwrap();
                assert_abs_diff_eq!(a, b, epsilon = 1e-10);
            }
        }
    }
}

#[test]
fn zeta_rescaling_preserves_normalization_and_scales_kinetic() {
    // exponents scale with zeta^2; a single-center orbital keeps unit norm
    // while its kinetic diagonal picks up the zeta^2 factor
    let base = Molecule::build(Species::H2, 1.4, &Zetas::default());
    let scaled = Molecule::build(
        Species::H2,
        1.4,
        &Zetas { h_1s: 1.24 * 1.3, ..Zetas::default() },
    );
    let s0 = overlap_matrix(&base);
    let s1 = overlap_matrix(&scaled);
    assert_abs_diff_eq!(s1[(0, 0)], s0[(0, 0)], epsilon = 1e-12);
    let t0 = kinetic_matrix(&base);
    let t1 = kinetic_matrix(&scaled);
    assert_abs_diff_eq!(t1[(0, 0)], 1.3 * 1.3 * t0[(0, 0)], epsilon = 1e-10);
}

#[test]
fn h2_and_lih_share_the_hydrogen_block() {
    // the H 1s diagonal entries are molecule-independent
    let a = kinetic_matrix(&h2())[(0, 0)];
    let b = kinetic_matrix(&lih())[(0, 0)];
    assert_abs_diff_eq!(a, b, epsilon = 1e-14);
}
