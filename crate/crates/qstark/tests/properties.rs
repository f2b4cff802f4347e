//! Randomized algebraic properties: the Pauli group structure under the
//! symplectic encoding, unitarity of string exponentials, and symmetries of
//! the special functions.

use num_complex::Complex64;
use proptest::prelude::*;
use qstark::jw::PauliString;
use qstark::quantum::{apply_pauli_exponential, basis_state};
use qstark::specfun::{boys, boys_f0, dawson, erf};

const N: usize = 4;
const MASK: u64 = (1 << N) - 1;

fn pauli(x: u64, z: u64) -> PauliString {
    PauliString { x_mask: x & MASK, z_mask: z & MASK }
}

proptest! {
    #[test]
    fn pauli_multiplication_is_associative(
        x1 in 0u64..16, z1 in 0u64..16,
        x2 in 0u64..16, z2 in 0u64..16,
        x3 in 0u64..16, z3 in 0u64..16,
    ) {
        let (p1, p2, p3) = (pauli(x1, z1), pauli(x2, z2), pauli(x3, z3));
        let (p12, f12) = p1.mul(&p2);
        let (left, fl) = p12.mul(&p3);
        let (p23, f23) = p2.mul(&p3);
        let (right, fr) = p1.mul(&p23);
        prop_assert_eq!(left, right);
        prop_assert!((f12 * fl - f23 * fr).norm() < 1e-15);
    }

    #[test]
    fn pauli_strings_square_to_identity(x in 0u64..16, z in 0u64..16) {
        let p = pauli(x, z);
        let (sq, phase) = p.mul(&p);
        prop_assert_eq!(sq, PauliString::IDENTITY);
        prop_assert!((phase - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn multiplication_phases_are_fourth_roots_of_unity(
        x1 in 0u64..16, z1 in 0u64..16,
        x2 in 0u64..16, z2 in 0u64..16,
    ) {
        let (_, phase) = pauli(x1, z1).mul(&pauli(x2, z2));
        prop_assert!((phase.norm() - 1.0).abs() < 1e-15);
        prop_assert!((phase.powu(4) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn basis_action_composes_like_multiplication(
        x1 in 0u64..16, z1 in 0u64..16,
        x2 in 0u64..16, z2 in 0u64..16,
        state in 0u64..16,
    ) {
        // acting with p2 then p1 must equal acting with the product p1 p2
        let (p1, p2) = (pauli(x1, z1), pauli(x2, z2));
        let (mid, f2) = p2.apply_to_basis(state);
        let (end, f1) = p1.apply_to_basis(mid);
        let (prod, fp) = p1.mul(&p2);
        let (direct, fd) = prod.apply_to_basis(state);
        prop_assert_eq!(end, direct);
        prop_assert!((f1 * f2 - fp * fd).norm() < 1e-15);
    }

    #[test]
    fn letters_roundtrip(x in 0u64..16, z in 0u64..16) {
        let p = pauli(x, z);
        let back = PauliString::from_letters(&p.letters(N)).unwrap();
        prop_assert_eq!(p, back);
    }

    #[test]
    fn string_exponentials_are_unitary(
        x in 0u64..16, z in 0u64..16,
        bits in 0u64..16,
        angle in -3.2f64..3.2,
    ) {
        let mut v = basis_state(N, bits).unwrap();
        apply_pauli_exponential(&mut v, &pauli(x, z), angle);
        let norm: f64 = v.iter().map(|a| a.norm_sqr()).sum();
        prop_assert!((norm - 1.0).abs() < 1e-12);
        // the inverse rotation restores the basis state exactly
        apply_pauli_exponential(&mut v, &pauli(x, z), -angle);
        prop_assert!((v[bits as usize].re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn erf_is_odd_and_bounded(x in -6.0f64..6.0) {
        prop_assert!((erf(x) + erf(-x)).abs() < 1e-15);
        prop_assert!(erf(x).abs() <= 1.0);
        // monotonicity over a short forward step
        prop_assert!(erf(x + 0.125) >= erf(x));
    }

    #[test]
    fn dawson_is_odd(x in -8.0f64..8.0) {
        prop_assert!((dawson(x) + dawson(-x)).abs() < 1e-14);
    }

    #[test]
    fn boys_values_decrease_in_order_and_argument(x in 0.0f64..60.0) {
        let f = boys(4, x);
        prop_assert!((f[0] - boys_f0(x)).abs() < 1e-13);
        for m in 0..4 {
            prop_assert!(f[m + 1] <= f[m] + 1e-15, "order ordering failed at m = {m}");
            prop_assert!(f[m] > 0.0);
        }
        let g = boys(4, x + 0.5);
        for m in 0..=4 {
            prop_assert!(g[m] < f[m], "argument ordering failed at m = {m}");
        }
    }
}
