//! Boson–fermion superoscillator realization of the superalgebra on a
//! truncated Fock space: `ν` boson modes, each with occupations
//! `0..=cutoff`, and `ν` fermion modes in the Jordan–Wigner ordering.

use nalgebra::DMatrix;

use super::GeneratorId;
use crate::error::{usage, Result};

#[derive(Debug, Clone)]
pub struct OscillatorRealization {
    pub nu: usize,
    pub cutoff: usize,
    /// Indexed by [`GeneratorId::index`].
    pub mats: Vec<DMatrix<f64>>,
    /// Columns whose boson occupations leave room for two more quanta in
    /// every mode.
    pub interior: Vec<bool>,
}

impl OscillatorRealization {
    pub fn get(&self, id: GeneratorId) -> &DMatrix<f64> {
        &self.mats[id.index()]
    }

    pub fn dim(&self) -> usize {
        self.interior.len()
    }

    /// `ℋ^s = 4ω(K0 + Y)`.
    pub fn hamiltonian(&self, omega: f64) -> DMatrix<f64> {
        (self.get(GeneratorId::K0) + self.get(GeneratorId::Y)) * (4.0 * omega)
    }

    /// `(Q, Q†) = 2√ω (W_+, V_-)`.
    pub fn supercharges(&self, omega: f64) -> (DMatrix<f64>, DMatrix<f64>) {
        let s = 2.0 * omega.sqrt();
        (self.get(GeneratorId::WPlus) * s, self.get(GeneratorId::VMinus) * s)
    }
}

struct Space {
    nu: usize,
    levels: usize,
}

impl Space {
    fn n_ferm(&self) -> usize {
        1 << self.nu
    }

    fn dim(&self) -> usize {
        self.levels.pow(self.nu as u32) * self.n_ferm()
    }

    fn decode(&self, idx: usize) -> (Vec<usize>, usize) {
        let f = idx % self.n_ferm();
        let mut b = idx / self.n_ferm();
        let mut occ = vec![0; self.nu];
        for o in occ.iter_mut() {
            *o = b % self.levels;
            b /= self.levels;
        }
        (occ, f)
    }

    fn encode(&self, occ: &[usize], f: usize) -> usize {
        let b = occ.iter().rev().fold(0, |acc, &m| acc * self.levels + m);
        b * self.n_ferm() + f
    }
}

/// Image of a basis state under a single boson ladder step on mode `i`.
fn boson_step(occ: &mut [usize], i: usize, raise: bool, levels: usize) -> Option<f64> {
    if raise {
        if occ[i] + 1 >= levels {
            return None;
        }
        occ[i] += 1;
        Some((occ[i] as f64).sqrt())
    } else {
        if occ[i] == 0 {
            return None;
        }
        let c = (occ[i] as f64).sqrt();
        occ[i] -= 1;
        Some(c)
    }
}

/// Fermion creation (`raise`) or annihilation on mode `i` with the
/// Jordan–Wigner sign from lower modes.
fn fermion_step(f: usize, i: usize, raise: bool) -> Option<(usize, f64)> {
    let bit = 1 << i;
    if raise == (f & bit != 0) {
        return None;
    }
    let sign = if (f & (bit - 1)).count_ones() % 2 == 0 { 1.0 } else { -1.0 };
    Some((f ^ bit, sign))
}

pub fn oscillator_realization(nu: usize, cutoff: usize) -> Result<OscillatorRealization> {
    if nu == 0 {
        return usage("the oscillator realization needs at least one mode");
    }
    if cutoff < 4 {
        return usage(format!("boson cutoff must be at least 4, got {cutoff}"));
    }
    let sp = Space { nu, levels: cutoff + 1 };
    let dim = sp.dim();
    let mut mats: Vec<DMatrix<f64>> = (0..8).map(|_| DMatrix::zeros(dim, dim)).collect();
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    let half_nu = nu as f64 / 2.0;
    let mut interior = Vec::with_capacity(dim);
    for col in 0..dim {
        let (occ, f) = sp.decode(col);
        interior.push(occ.iter().all(|&m| m + 2 <= cutoff));
        let total: usize = occ.iter().sum();
        let nf = f.count_ones() as f64;
        mats[GeneratorId::K0.index()][(col, col)] = 0.5 * (total as f64 + half_nu);
        mats[GeneratorId::Y.index()][(col, col)] = 0.5 * (nf - half_nu);
        for i in 0..nu {
            for (id, raise) in [(GeneratorId::KPlus, true), (GeneratorId::KMinus, false)] {
                let mut o = occ.clone();
                if let Some(c1) = boson_step(&mut o, i, raise, sp.levels) {
                    if let Some(c2) = boson_step(&mut o, i, raise, sp.levels) {
                        mats[id.index()][(sp.encode(&o, f), col)] += 0.5 * c1 * c2;
                    }
                }
            }
            let odd = [
                (GeneratorId::VPlus, true, true),
                (GeneratorId::VMinus, false, true),
                (GeneratorId::WPlus, true, false),
                (GeneratorId::WMinus, false, false),
            ];
            for (id, boson_raise, fermion_raise) in odd {
                let Some((f2, sign)) = fermion_step(f, i, fermion_raise) else { continue };
                let mut o = occ.clone();
                if let Some(c) = boson_step(&mut o, i, boson_raise, sp.levels) {
                    mats[id.index()][(sp.encode(&o, f2), col)] += inv_sqrt2 * sign * c;
                }
            }
        }
    }
    Ok(OscillatorRealization { nu, cutoff, mats, interior })
}
