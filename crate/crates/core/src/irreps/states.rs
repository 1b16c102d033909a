//! Catalog expansions of the zero-, one- and two-fermion states of a sector
//! and the orthonormal super-basis built from them.

use serde::{Deserialize, Serialize};

use crate::error::{usage, Result};
use crate::fock::Occupation;
use crate::generators::{CatalogState, CatalogTerm, RadialKind};
use crate::model::{weights_of, ModelParams};
use crate::specfun::{ln_factorial, ln_gamma};

/// Raising (`Plus`) or lowering (`Minus`) member of a generator pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dir {
    Plus,
    Minus,
}

fn parity(n: usize) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `Ψ_{N,n}|0⟩`.
pub fn zero_fermion_state(p: &ModelParams, big_n: usize, n: usize) -> CatalogState {
    let _ = p;
    let mut s = CatalogState::empty();
    s.push(CatalogTerm {
        coeff: parity(big_n),
        radial_index: big_n as i64,
        radial_kind: RadialKind::Standard,
        sector: n,
        angular_shift: 0,
        occ: Occupation::VACUUM,
    });
    s
}

/// Coefficient of the unit lowered radial function `j` in
/// `z^{-1/2}`-rescaled unit radial function `N` of sector `n`, up to the
/// factor of the Laguerre re-expansion.
fn lowered_ratio(p: &ModelParams, big_n: usize, n: usize, j: usize) -> f64 {
    let alpha = p.radial_exponent(n);
    (0.5 * (ln_factorial(big_n) + ln_gamma(j as f64 + alpha) - ln_factorial(j) - ln_gamma(big_n as f64 + alpha + 1.0)))
        .exp()
}

/// Exact expansion of `V_± Ψ_{N,n}|0⟩` (not normalized).
pub fn v_action(dir: Dir, p: &ModelParams, big_n: usize, n: usize) -> CatalogState {
    let nk = n as f64 * p.k;
    let b_sh = p.shifted_exponent(n);
    let mix = (nk * b_sh).sqrt();
    let sign = parity(big_n);
    let nf = big_n as f64;
    let mut s = CatalogState::empty();
    let top = match dir {
        Dir::Plus => big_n + 1,
        Dir::Minus => big_n,
    };
    for j in 0..=top {
        let r = lowered_ratio(p, big_n, n, j);
        let cx = match dir {
            Dir::Plus if j <= big_n => b_sh,
            Dir::Plus => -(nf + 1.0),
            Dir::Minus if j < big_n => -b_sh,
            Dir::Minus => nf + nk,
        };
        s.push(CatalogTerm {
            coeff: sign * r * cx,
            radial_index: j as i64,
            radial_kind: RadialKind::Lowered,
            sector: n,
            angular_shift: 0,
            occ: Occupation::X,
        });
        if n >= 1 && j <= big_n {
            let cy = match dir {
                Dir::Plus => -mix,
                Dir::Minus => mix,
            };
            s.push(CatalogTerm {
                coeff: sign * r * cy,
                radial_index: j as i64,
                radial_kind: RadialKind::Lowered,
                sector: n,
                angular_shift: 1,
                occ: Occupation::Y,
            });
        }
    }
    s
}

/// Normalized `V_+ V_- Ψ_{N,n}|0⟩`; empty for `n = 0`.
pub fn two_fermion_state(p: &ModelParams, big_n: usize, n: usize) -> CatalogState {
    let _ = p;
    let mut s = CatalogState::empty();
    if n >= 1 {
        s.push(CatalogTerm {
            coeff: parity(big_n),
            radial_index: big_n as i64,
            radial_kind: RadialKind::Standard,
            sector: n,
            angular_shift: 1,
            occ: Occupation::XY,
        });
    }
    s
}

/// `‖V_± Ψ_{N,n}|0⟩‖²`: `N + (n+a+b)k + 1` for `+`, `N + nk` for `-`.
pub fn v_norm_sq(dir: Dir, p: &ModelParams, big_n: usize, n: usize) -> f64 {
    match dir {
        Dir::Plus => big_n as f64 + p.shifted_exponent(n) + 1.0,
        Dir::Minus => big_n as f64 + n as f64 * p.k,
    }
}

/// Unit one-fermion state `V_± Ψ_{N,n}|0⟩ / ‖·‖`; empty when the state
/// vanishes (`n = N = 0` for `-`).
pub fn one_fermion_state(dir: Dir, p: &ModelParams, big_n: usize, n: usize) -> CatalogState {
    let norm_sq = v_norm_sq(dir, p, big_n, n);
    if norm_sq == 0.0 {
        return CatalogState::empty();
    }
    CatalogState::combine(&[(1.0 / norm_sq.sqrt(), &v_action(dir, p, big_n, n))])
}

/// Overlap of the unit states `V_+Ψ_{N-1}` and `V_-Ψ_N`, which share a
/// `K0` eigenvalue.
pub fn overlap(p: &ModelParams, big_n: usize, n: usize) -> Result<f64> {
    if big_n == 0 {
        return usage("the overlap needs N >= 1: the lowering partner is absent at N = 0");
    }
    let nf = big_n as f64;
    let num = nf * (nf + p.radial_exponent(n));
    let den = (nf + p.shifted_exponent(n)) * (nf + n as f64 * p.k);
    Ok((num / den).sqrt())
}

/// Coefficients `(α, β, γ, δ)` combining the one-fermion states of sector
/// `n ≥ 1` into the even-subalgebra bases with lowest weights `τ ∓ ½`.
pub fn mixing_coeffs(p: &ModelParams, big_n: usize, n: usize) -> Result<(f64, f64, f64, f64)> {
    if n == 0 {
        return usage("mixing coefficients are defined for n >= 1 only");
    }
    let (nf, k) = (big_n as f64, p.k);
    let (a_ex, b_ex, nk) = (p.radial_exponent(n), p.shifted_exponent(n), n as f64 * k);
    let n_f = n as f64;
    let s = p.a + p.b + n_f;
    let two = 2.0 * n_f + p.a + p.b;
    let alpha = ((nf + a_ex) * (nf + nk) / (n_f * two * k * k)).sqrt();
    let beta = -(nf * (nf + b_ex) / (n_f * two * k * k)).sqrt();
    let gamma = ((nf + 1.0) * (nf + nk + 1.0) / (s * two * k * k)).sqrt();
    let delta = -((nf + b_ex + 1.0) * (nf + a_ex + 1.0) / (s * two * k * k)).sqrt();
    Ok((alpha, beta, gamma, delta))
}

/// Which of the four families of a sector a basis state belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Zero fermions, lowest weight `τ`.
    Zero,
    /// One fermion, lowest weight `τ - ½`.
    Minus,
    /// One fermion, lowest weight `τ + ½`.
    Plus,
    /// Two fermions, lowest weight `τ`.
    Two,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisState {
    pub sector: usize,
    pub family: Family,
    pub radial: usize,
    /// `K0` and `Y` eigenvalues.
    pub k0: f64,
    pub y: f64,
    pub state: CatalogState,
}

/// Orthonormal basis of sectors `0..=nmax_sector`, radial labels
/// `0..=nmax_radial`, ordered by sector, then family, then radial label.
pub fn super_basis(p: &ModelParams, nmax_radial: usize, nmax_sector: usize) -> Vec<BasisState> {
    let mut out = Vec::new();
    for n in 0..=nmax_sector {
        let w = weights_of(p, n);
        let (tau, q) = (w.tau, w.q);
        let mut push = |family, big_n: usize, k0, y, state| {
            out.push(BasisState { sector: n, family, radial: big_n, k0, y, state });
        };
        for big_n in 0..=nmax_radial {
            push(Family::Zero, big_n, tau + big_n as f64, q, zero_fermion_state(p, big_n, n));
        }
        if n == 0 {
            for big_n in 0..=nmax_radial {
                let st = one_fermion_state(Dir::Plus, p, big_n, n);
                push(Family::Plus, big_n, tau + big_n as f64 + 0.5, q + 0.5, st);
            }
            continue;
        }
        for big_n in 0..=nmax_radial {
            let (al, be, _, _) = mixing_coeffs(p, big_n, n).expect("n >= 1");
            let minus = one_fermion_state(Dir::Minus, p, big_n, n);
            let st = if big_n == 0 {
                CatalogState::combine(&[(al, &minus)])
            } else {
                CatalogState::combine(&[(al, &minus), (be, &one_fermion_state(Dir::Plus, p, big_n - 1, n))])
            };
            push(Family::Minus, big_n, tau + big_n as f64 - 0.5, q + 0.5, st);
        }
        for big_n in 0..=nmax_radial {
            let (_, _, ga, de) = mixing_coeffs(p, big_n, n).expect("n >= 1");
            let st = CatalogState::combine(&[
                (ga, &one_fermion_state(Dir::Minus, p, big_n + 1, n)),
                (de, &one_fermion_state(Dir::Plus, p, big_n, n)),
            ]);
            push(Family::Plus, big_n, tau + big_n as f64 + 0.5, q + 0.5, st);
        }
        for big_n in 0..=nmax_radial {
            push(Family::Two, big_n, tau + big_n as f64, q + 1.0, two_fermion_state(p, big_n, n));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overlap_examples() {
        let p = ModelParams::new(2.0, 1.0, 1.0, 1.0).unwrap();
        assert!((overlap(&p, 1, 1).unwrap() - (3.0f64 / 7.0).sqrt()).abs() < 1e-14);
        assert!(overlap(&p, 0, 1).is_err());
        for big_n in 1..6 {
            assert!((overlap(&p, big_n, 0).unwrap() - 1.0).abs() < 1e-14);
            assert!(overlap(&p, big_n, 2).unwrap() < 1.0);
        }
    }

    #[test]
    fn mixing_examples() {
        let p = ModelParams::new(2.0, 1.5, 2.5, 1.0).unwrap();
        assert!(mixing_coeffs(&p, 0, 0).is_err());
        let (_, beta0, _, _) = mixing_coeffs(&p, 0, 2).unwrap();
        assert_eq!(beta0, 0.0);
        // unit norm of both combinations given the overlap
        for n in 1..4 {
            for big_n in 0..5 {
                let (al, be, ga, de) = mixing_coeffs(&p, big_n, n).unwrap();
                let c = if big_n == 0 { 0.0 } else { overlap(&p, big_n, n).unwrap() };
                assert!((al * al + be * be + 2.0 * al * be * c - 1.0).abs() < 1e-12);
                let c1 = overlap(&p, big_n + 1, n).unwrap();
                assert!((ga * ga + de * de + 2.0 * ga * de * c1 - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn vanishing_states() {
        let p = ModelParams::new(1.0, 1.0, 1.0, 1.0).unwrap();
        assert!(v_action(Dir::Minus, &p, 0, 0).is_empty());
        assert!(two_fermion_state(&p, 3, 0).is_empty());
        assert!(!two_fermion_state(&p, 3, 1).is_empty());
    }
}
