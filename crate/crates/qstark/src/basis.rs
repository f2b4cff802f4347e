//! STO-3G contracted Gaussian basis for H and Li on the z axis.
//!
//! Each atomic orbital is a fixed three-term contraction of primitive
//! Gaussians; p_z primitives carry a factor (z - center). Primitive
//! normalization constants are folded into the stored weights, so matrix
//! elements are plain double sums over primitives.

use serde::{Deserialize, Serialize};

/// Bohr per Angstrom.
pub const ANGSTROM: f64 = 1.8897259886;

const PI: f64 = std::f64::consts::PI;

// exponents here are already scaled by the default zeta for each shell
const H_1S_EXP: [f64; 3] = [3.425250914, 0.6239137298, 0.1688554040];
const LI_1S_EXP: [f64; 3] = [16.11957475, 2.936200663, 0.7946504870];
const LI_2SP_EXP: [f64; 3] = [0.6362897469, 0.1478600533, 0.04808867840];
const COEF_1S: [f64; 3] = [0.1543289673, 0.5353281423, 0.4446345422];
const COEF_2S: [f64; 3] = [-0.09996722919, 0.3995128261, 0.7001154689];
const COEF_2P: [f64; 3] = [0.1559162750, 0.6076837186, 0.3919573931];

pub const ZETA_H_1S: f64 = 1.24;
pub const ZETA_LI_1S: f64 = 2.69;
pub const ZETA_LI_2SP: f64 = 0.75;

/// Slater exponents for the three shells; `Default` gives the standard
/// values 1.24 / 2.69 / 0.75.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Zetas {
    pub h_1s: f64,
    pub li_1s: f64,
    pub li_2sp: f64,
}

impl Default for Zetas {
    fn default() -> Self {
        Zetas {
            h_1s: ZETA_H_1S,
            li_1s: ZETA_LI_1S,
            li_2sp: ZETA_LI_2SP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Angular {
    S,
    Pz,
}

/// Orbital labels in the fixed basis ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrbitalKind {
    H1s,
    Li1s,
    Li2s,
    Li2pz,
}

/// Primitive Gaussian with its contraction weight; the weight already
/// includes the primitive normalization constant.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Primitive {
    pub exponent: f64,
    pub weight: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Orbital {
    pub kind: OrbitalKind,
    pub angular: Angular,
    /// z coordinate of the center, bohr
    pub center_z: f64,
    pub primitives: Vec<Primitive>,
}

/// s-primitive normalization (2 a / pi)^(3/4).
pub fn norm_s(a: f64) -> f64 {
    (2.0 * a / PI).powf(0.75)
}

/// p-primitive normalization (128 a^5 / pi^3)^(1/4).
pub fn norm_p(a: f64) -> f64 {
    (128.0 * a.powi(5) / (PI * PI * PI)).powf(0.25)
}

fn contract(exps: &[f64; 3], coefs: &[f64; 3], scale: f64, ang: Angular) -> Vec<Primitive> {
    exps.iter()
        .zip(coefs)
        .map(|(&e, &d)| {
            let a = e * scale * scale;
            Primitive {
                exponent: a,
                weight: d * match ang {
                    Angular::S => norm_s(a),
                    Angular::Pz => norm_p(a),
                },
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Species {
    H2,
    LiH,
}

impl Species {
    pub fn parse(s: &str) -> Option<Species> {
        match s.to_ascii_lowercase().as_str() {
            "h2" => Some(Species::H2),
            "lih" => Some(Species::LiH),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Species::H2 => "H2",
            Species::LiH => "LiH",
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Nucleus {
    pub charge: f64,
    pub z: f64,
}

/// A diatomic on the z axis: the heavy atom sits at the origin and the
/// hydrogen at (0, 0, d).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Molecule {
    pub species: Species,
    /// internuclear distance, bohr
    pub distance: f64,
    pub nuclei: Vec<Nucleus>,
    pub orbitals: Vec<Orbital>,
    pub n_electrons: usize,
}

impl Molecule {
    /// Build the STO-3G basis and geometry for the requested molecule.
    ///
    /// Orbital ordering is [H 1s, (H 1s | Li 1s, Li 2s, Li 2pz)]; the second
    /// center is at the origin and the hydrogen A center at z = d (bohr).
    pub fn build(species: Species, distance: f64, zetas: &Zetas) -> Molecule {
        build_impl(species, distance, zetas)
    }
}

fn build_impl(species: Species, distance: f64, zetas: &Zetas) -> Molecule {
    assert!(distance > 0.0, "internuclear distance must be positive");
    let rel = |z: f64, z0: f64| z / z0;
    match species {
        Species::H2 => {
            let prim = |center| Orbital {
                kind: OrbitalKind::H1s,
                angular: Angular::S,
                center_z: center,
                primitives: contract(&H_1S_EXP, &COEF_1S, rel(zetas.h_1s, ZETA_H_1S), Angular::S),
            };
            Molecule {
                species,
                distance,
                nuclei: vec![
                    Nucleus { charge: 1.0, z: distance },
                    Nucleus { charge: 1.0, z: 0.0 },
                ],
                orbitals: vec![prim(distance), prim(0.0)],
                n_electrons: 2,
            }
        }
        Species::LiH => Molecule {
            species,
            distance,
            nuclei: vec![
                Nucleus { charge: 3.0, z: 0.0 },
                Nucleus { charge: 1.0, z: distance },
            ],
            orbitals: vec![
                Orbital {
                    kind: OrbitalKind::H1s,
                    angular: Angular::S,
                    center_z: distance,
                    primitives: contract(&H_1S_EXP, &COEF_1S, rel(zetas.h_1s, ZETA_H_1S), Angular::S),
                },
                Orbital {
                    kind: OrbitalKind::Li1s,
                    angular: Angular::S,
                    center_z: 0.0,
                    primitives: contract(&LI_1S_EXP, &COEF_1S, rel(zetas.li_1s, ZETA_LI_1S), Angular::S),
                },
                Orbital {
                    kind: OrbitalKind::Li2s,
                    angular: Angular::S,
                    center_z: 0.0,
                    primitives: contract(&LI_2SP_EXP, &COEF_2S, rel(zetas.li_2sp, ZETA_LI_2SP), Angular::S),
                },
                Orbital {
                    kind: OrbitalKind::Li2pz,
                    angular: Angular::Pz,
                    center_z: 0.0,
                    primitives: contract(&LI_2SP_EXP, &COEF_2P, rel(zetas.li_2sp, ZETA_LI_2SP), Angular::Pz),
                },
            ],
            n_electrons: 4,
        },
    }
}

impl Molecule {
    pub fn n_orbitals(&self) -> usize {
        self.orbitals.len()
    }

    /// Value of orbital i at a point (axially symmetric basis, so only
    /// rho = sqrt(x^2 + y^2) and z matter). Handy for quadrature oracles.
    pub fn eval_orbital(&self, i: usize, rho: f64, z: f64) -> f64 {
        let orb = &self.orbitals[i];
        let dz = z - orb.center_z;
        let r2 = rho * rho + dz * dz;
        let mut v = 0.0;
        for p in &orb.primitives {
            v += p.weight * (-p.exponent * r2).exp();
        }
        match orb.angular {
            Angular::S => v,
            Angular::Pz => dz * v,
        }
    }
}
