//! Two-electron repulsion integrals over the axial s / p_z basis.
//!
//! Each primitive quartet is evaluated in closed form by a one-dimensional
//! Hermite expansion: the Gaussian product rule collapses each electron to a
//! single center, the p_z polynomial factors become derivative operators on
//! that center, and the remaining kernel derivatives form a Boys-function
//! table. This route is uniform over every center pattern and is smooth as
//! the two product centers coalesce. Chemist notation (ij|kl) throughout.

use crate::basis::{Angular, Molecule};
use crate::specfun::boys;

const PI: f64 = std::f64::consts::PI;

/// Convert a polynomial in (z - Z_center), coefficients low to high degree,
/// into coefficients of Hermite derivative operators d^t/dZ^t.
fn derivative_ops(c: [f64; 3], p: f64) -> [f64; 3] {
    let mut ops = [0.0; 3];
    ops[0] += c[0];
    ops[1] += c[1] / (2.0 * p);
    ops[2] += c[2] / (4.0 * p * p);
    ops[0] += c[2] / (2.0 * p);
    ops
}

fn pair_poly(p_center: f64, za: f64, pa: bool, zb: f64, pb: bool) -> [f64; 3] {
    let mut c = [1.0, 0.0, 0.0];
    for (flag, zx) in [(pa, za), (pb, zb)] {
        if flag {
            let shift = p_center - zx;
            let prev = c;
            c = [
                prev[0] * shift,
                prev[0] + prev[1] * shift,
                prev[1] + prev[2] * shift,
            ];
        }
    }
    c
}

/// Primitive (ab|cd) with angular flags marking p_z factors.
#[allow(clippy::too_many_arguments)]
pub(crate) fn eri_prim(
    a: f64,
    za: f64,
    pa: bool,
    b: f64,
    zb: f64,
    pb: bool,
    c: f64,
    zc: f64,
    pc: bool,
    d: f64,
    zd: f64,
    pd: bool,
) -> f64 {
    let p = a + b;
    let q = c + d;
    let cp = (a * za + b * zb) / p;
    let cq = (c * zc + d * zd) / q;
    let w = (-(a * b / p) * (za - zb) * (za - zb)).exp()
        * (-(c * d / q) * (zc - zd) * (zc - zd)).exp();
    let rho = p * q / (p + q);
    let r = cq - cp;
    let t = rho * r * r;
    let f = boys(4, t);
    let r2 = r * r;
    let lam = [
        f[0],
        -2.0 * rho * r * f[1],
        -2.0 * rho * f[1] + 4.0 * rho * rho * r2 * f[2],
        12.0 * rho * rho * r * f[2] - 8.0 * rho.powi(3) * r2 * r * f[3],
        12.0 * rho * rho * f[2] - 48.0 * rho.powi(3) * r2 * f[3]
            + 16.0 * rho.powi(4) * r2 * r2 * f[4],
    ];
    let o1 = derivative_ops(pair_poly(cp, za, pa, zb, pb), p);
    let o2 = derivative_ops(pair_poly(cq, zc, pc, zd, pd), q);
    let kfac = 2.0 * PI.powf(2.5) / (p * q * (p + q).sqrt());
    let mut total = 0.0;
    for (t1, &v1) in o1.iter().enumerate() {
        if v1 == 0.0 {
            continue;
        }
        let sign = if t1 % 2 == 1 { -1.0 } else { 1.0 };
        for (t2, &v2) in o2.iter().enumerate() {
            if v2 != 0.0 {
                total += v1 * v2 * sign * lam[t1 + t2];
            }
        }
    }
    kfac * w * total
}

/// Contracted repulsion integral (ij|kl) in chemist notation.
pub fn electron_repulsion(mol: &Molecule, i: usize, j: usize, k: usize, l: usize) -> f64 {
    let (oi, oj, ok, ol) = (
        &mol.orbitals[i],
        &mol.orbitals[j],
        &mol.orbitals[k],
        &mol.orbitals[l],
    );
    let flags = [
        oi.angular == Angular::Pz,
        oj.angular == Angular::Pz,
        ok.angular == Angular::Pz,
        ol.angular == Angular::Pz,
    ];
    let mut acc = 0.0;
    for p1 in &oi.primitives {
        for p2 in &oj.primitives {
            for p3 in &ok.primitives {
                for p4 in &ol.primitives {
                    acc += p1.weight
                        * p2.weight
                        * p3.weight
                        * p4.weight
                        * eri_prim(
                            p1.exponent,
                            oi.center_z,
                            flags[0],
                            p2.exponent,
                            oj.center_z,
                            flags[1],
                            p3.exponent,
                            ok.center_z,
                            flags[2],
                            p4.exponent,
                            ol.center_z,
                            flags[3],
                        );
                }
            }
        }
    }
    acc
}

/// Full (ij|kl) tensor with the eightfold permutational symmetry of real
/// orbitals filled in from the unique quadruples.
#[derive(Debug, Clone)]
pub struct Eri {
    k: usize,
    data: Vec<f64>,
}

impl Eri {
    pub fn n_orbitals(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        let n = self.k;
        self.data[((i * n + j) * n + k) * n + l]
    }

    fn set_all(&mut self, i: usize, j: usize, k: usize, l: usize, v: f64) {
        let n = self.k;
        for (a, b, c, d) in [
            (i, j, k, l),
            (j, i, k, l),
            (i, j, l, k),
            (j, i, l, k),
            (k, l, i, j),
            (l, k, i, j),
            (k, l, j, i),
            (l, k, j, i),
        ] {
            self.data[((a * n + b) * n + c) * n + d] = v;
        }
    }
}

fn unique_quadruples(k: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut quads = Vec::new();
    for i in 0..k {
        for j in 0..=i {
            for kk in 0..=i {
                let l_max = if kk == i { j } else { kk };
                for l in 0..=l_max {
                    quads.push((i, j, kk, l));
                }
            }
        }
    }
    quads
}

/// Build the contracted ERI tensor, evaluating only symmetry-unique entries.
pub fn eri_tensor(mol: &Molecule) -> Eri {
    let k = mol.n_orbitals();
    let quads = unique_quadruples(k);
    let values = crate::par::map_collect(quads.clone(), |(i, j, kk, l)| {
        electron_repulsion(mol, i, j, kk, l)
    });
    let mut eri = Eri {
        k,
        data: vec![0.0; k * k * k * k],
    };
    for ((i, j, kk, l), v) in quads.into_iter().zip(values) {
        eri.set_all(i, j, kk, l, v);
    }
    eri
}
