//! Model parameters, exact eigenfunctions, spectrum and quadrature grids.

mod basis;
mod grid;
mod jet;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::specfun::{jacobi_raw, laguerre_raw};

pub use basis::{angular_basis, angular_ln_norm, radial_basis, radial_ln_norm};
pub use grid::{inner_product, GridKey, QuadGrid, ScalarField, SpinorField};
pub use jet::{Jet, SpinorJet};

/// Parameters `(k, a, b, ω)` of the planar Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub k: f64,
    pub a: f64,
    pub b: f64,
    pub omega: f64,
}

impl ModelParams {
    /// Checked constructor. Couplings in `(0, ½]` are accepted; see
    /// [`ModelParams::in_validated_regime`].
    pub fn new(k: f64, a: f64, b: f64, omega: f64) -> Result<Self> {
        let p = ModelParams { k, a, b, omega };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let ModelParams { k, a, b, omega } = *self;
        if !(k.is_finite() && k > 0.0) {
            return domain(format!("k must be positive, got {k}"));
        }
        if !(omega.is_finite() && omega > 0.0) {
            return domain(format!("omega must be positive, got {omega}"));
        }
        if !(a.is_finite() && a > 0.0 && b.is_finite() && b > 0.0) {
            return domain(format!("couplings must be positive, got a={a}, b={b}"));
        }
        Ok(())
    }

    /// `a, b > ½`, where all quadrature weights are well conditioned.
    pub fn in_validated_regime(&self) -> bool {
        self.a > 0.5 && self.b > 0.5
    }

    /// Radial exponent and Laguerre parameter of sector `n`: `(2n+a+b)k`.
    pub fn radial_exponent(&self, n: usize) -> f64 {
        (2.0 * n as f64 + self.a + self.b) * self.k
    }

    /// `(n+a+b)k`, recurring throughout the fermionic formulas.
    pub fn shifted_exponent(&self, n: usize) -> f64 {
        (n as f64 + self.a + self.b) * self.k
    }

    /// Upper end of the angular domain, `π/(2k)`.
    pub fn phi_max(&self) -> f64 {
        std::f64::consts::FRAC_PI_2 / self.k
    }

    pub(crate) fn check_angle(&self, phi: f64) -> Result<()> {
        if !(phi > 0.0 && phi < self.phi_max()) {
            return domain(format!("angle {phi} outside the open interval (0, {})", self.phi_max()));
        }
        Ok(())
    }
}

/// Radial and angular quantum numbers `(N, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Labels {
    pub radial: usize,
    pub angular: usize,
}

impl Labels {
    pub fn new(radial: usize, angular: usize) -> Self {
        Labels { radial, angular }
    }
}

/// Lowest weight of the even subalgebra and the charge of the
/// zero-fermion states of a sector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Weights {
    pub tau: f64,
    pub q: f64,
}

/// `E = 2ω[2N + (2n+a+b)k + 1]`.
pub fn energy(p: &ModelParams, l: Labels) -> f64 {
    2.0 * p.omega * (2.0 * l.radial as f64 + p.radial_exponent(l.angular) + 1.0)
}

/// Energy above the ground state; vanishes on the ground state.
pub fn susy_energy(p: &ModelParams, l: Labels) -> f64 {
    energy(p, l) - energy(p, Labels::new(0, 0))
}

pub fn weights_of(p: &ModelParams, n: usize) -> Weights {
    Weights {
        tau: (n as f64 + 0.5 * (p.a + p.b)) * p.k + 0.5,
        q: -0.5 * ((p.a + p.b) * p.k + 1.0),
    }
}

/// Unnormalized radial factor `(z/ω)^{α/2} L_N^{(α)}(z) e^{-z/2}`, `α = (2n+a+b)k`.
pub fn eval_radial(p: &ModelParams, big_n: usize, n: usize, z: f64) -> f64 {
    let alpha = p.radial_exponent(n);
    if z == 0.0 {
        return 0.0;
    }
    let env = (0.5 * alpha * (z / p.omega).ln() - 0.5 * z).exp();
    env * laguerre_raw(big_n, alpha, z)
}

/// Unnormalized angular factor `cos^a kφ sin^b kφ P_n^{(a-½, b-½)}(-cos 2kφ)`.
pub fn eval_angular(p: &ModelParams, n: usize, phi: f64) -> Result<f64> {
    p.check_angle(phi)?;
    let kp = p.k * phi;
    let env = (p.a * kp.cos().ln() + p.b * kp.sin().ln()).exp();
    Ok(env * jacobi_raw(n, p.a - 0.5, p.b - 0.5, -(2.0 * kp).cos()))
}

/// Normalization constant of `Ψ_{N,n}`, including the phase `(-1)^N`.
pub fn norm_constant(p: &ModelParams, l: Labels) -> Result<f64> {
    p.validate()?;
    let alpha = p.radial_exponent(l.angular);
    let m = l.angular as f64;
    for g in [l.radial as f64 + alpha + 1.0, p.a + m + 0.5, p.b + m + 0.5, p.a + p.b + m] {
        if !(g > 0.0) {
            return domain(format!("non-positive gamma argument {g} in normalization"));
        }
    }
    let ln = radial_ln_norm(alpha, l.radial, p.omega) + angular_ln_norm(p.a, p.b, l.angular, p.k);
    let sign = if l.radial % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * ln.exp())
}

/// Normalized eigenfunction `Ψ_{N,n}(r, φ)`.
pub fn eval_wavefunction(p: &ModelParams, l: Labels, r: f64, phi: f64) -> Result<f64> {
    if !(r > 0.0) {
        return domain(format!("radius must be positive, got {r}"));
    }
    p.check_angle(phi)?;
    let sign = if l.radial % 2 == 0 { 1.0 } else { -1.0 };
    let rad = radial_basis(p.radial_exponent(l.angular), l.radial, p.omega, r)[0];
    let ang = angular_basis(p.a, p.b, l.angular, p.k, phi)[0];
    Ok(sign * rad * ang)
}

/// Jet of `Ψ_{N,n}` at `(r, φ)`.
pub fn wavefunction_jet(p: &ModelParams, l: Labels, r: f64, phi: f64) -> Jet {
    let sign = if l.radial % 2 == 0 { 1.0 } else { -1.0 };
    let rad = radial_basis(p.radial_exponent(l.angular), l.radial, p.omega, r);
    let ang = angular_basis(p.a, p.b, l.angular, p.k, phi);
    Jet::separable(rad, ang).scale(sign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn p(k: f64, a: f64, b: f64, omega: f64) -> ModelParams {
        ModelParams::new(k, a, b, omega).unwrap()
    }

    #[test]
    fn energy_examples() {
        assert_eq!(energy(&p(1.0, 1.0, 1.0, 1.0), Labels::new(0, 0)), 6.0);
        assert_eq!(energy(&p(3.0, 1.0, 1.0, 1.0), Labels::new(1, 1)), 30.0);
        let q = p(1.7, 0.9, 2.2, 0.6);
        let ground = 2.0 * q.omega * ((q.a + q.b) * q.k + 1.0);
        assert!((energy(&q, Labels::new(0, 0)) - ground).abs() < 1e-14);
    }

    #[test]
    fn susy_energy_examples() {
        assert_eq!(susy_energy(&p(1.3, 1.0, 2.0, 1.0), Labels::new(0, 0)), 0.0);
        assert!((susy_energy(&p(2.0, 1.0, 1.0, 1.0), Labels::new(1, 1)) - 12.0).abs() < 1e-12);
        assert!((susy_energy(&p(2.5, 1.0, 1.0, 0.7), Labels::new(2, 1)) - 12.6).abs() < 1e-12);
    }

    #[test]
    fn weights_examples() {
        let w = weights_of(&p(1.0, 1.0, 1.0, 1.0), 0);
        assert_eq!((w.tau, w.q), (1.5, -1.5));
        let q = p(2.0, 1.5, 2.5, 1.0);
        assert!((weights_of(&q, 1).tau - 6.5).abs() < 1e-14);
        assert_eq!(weights_of(&q, 0).q, weights_of(&q, 5).q);
        for n in 0..6 {
            let w = weights_of(&q, n);
            assert!((w.tau + w.q - n as f64 * q.k).abs() < 1e-13);
        }
    }

    #[test]
    fn radial_factor() {
        let q = p(2.0, 1.5, 2.5, 0.8);
        assert_eq!(eval_radial(&q, 0, 0, 0.0), 0.0);
        let alpha = q.radial_exponent(2);
        for z in [0.3, 1.0, 4.0, 9.5] {
            let ratio = eval_radial(&q, 1, 2, z) / eval_radial(&q, 0, 2, z);
            assert!((ratio - (1.0 + alpha - z)).abs() < 1e-12 * (1.0 + alpha));
        }
        assert!(eval_radial(&q, 0, 0, 400.0) < 1e-60);
    }

    #[test]
    fn angular_factor() {
        let q = p(1.0, 1.0, 1.0, 1.0);
        assert!((eval_angular(&q, 0, PI / 4.0).unwrap() - 0.5).abs() < 1e-15);
        let q2 = p(2.0, 1.0, 1.0, 1.0);
        assert!(eval_angular(&q2, 1, PI / 8.0).unwrap().abs() < 1e-15);
        assert!(eval_angular(&q2, 1, 0.0).is_err());
        assert!(eval_angular(&q2, 1, PI / 4.0).is_err());
        let sym = p(2.7, 1.3, 1.3, 1.0);
        for n in 0..6 {
            for phi in [0.05, 0.2, 0.41] {
                let l = eval_angular(&sym, n, phi).unwrap();
                let r = eval_angular(&sym, n, sym.phi_max() - phi).unwrap();
                let s = if n % 2 == 0 { 1.0 } else { -1.0 };
                assert!((r - s * l).abs() < 1e-12 * l.abs().max(1e-3));
            }
        }
    }

    #[test]
    fn normalization_sign_and_positivity() {
        let q = p(2.0, 1.5, 2.5, 1.0);
        assert!(norm_constant(&q, Labels::new(0, 3)).unwrap() > 0.0);
        assert!(norm_constant(&q, Labels::new(1, 2)).unwrap() < 0.0);
        let angular_only = angular_ln_norm(q.a, q.b, 4, q.k).exp();
        assert!(angular_only.is_finite() && angular_only > 0.0);
    }

    #[test]
    fn ground_state_is_positive() {
        let q = p(std::f64::consts::SQRT_2, 1.2, 0.8, 1.0);
        for r in [0.05, 0.5, 1.3, 3.0] {
            for phi in [0.01, 0.3, 1.0] {
                assert!(eval_wavefunction(&q, Labels::new(0, 0), r, phi).unwrap() > 0.0);
            }
        }
    }

    #[test]
    fn wavefunction_matches_unnormalized_factors() {
        let q = p(2.5, 0.8, 1.3, 0.7);
        let l = Labels::new(3, 2);
        let (r, phi) = (1.1, 0.4);
        let direct = norm_constant(&q, l).unwrap()
            * eval_radial(&q, 3, 2, q.omega * r * r)
            * eval_angular(&q, 2, phi).unwrap();
        let got = eval_wavefunction(&q, l, r, phi).unwrap();
        assert!((got - direct).abs() < 1e-12 * direct.abs());
    }

    #[test]
    fn rejects_bad_params() {
        assert!(ModelParams::new(0.0, 1.0, 1.0, 1.0).is_err());
        assert!(ModelParams::new(1.0, -0.2, 1.0, 1.0).is_err());
        assert!(ModelParams::new(1.0, 1.0, 1.0, 0.0).is_err());
        let weak = ModelParams::new(1.0, 0.4, 1.0, 1.0).unwrap();
        assert!(!weak.in_validated_regime());
    }

    proptest::proptest! {
        #[test]
        fn energy_and_weight_identities(
            k in 0.1f64..5.0,
            a in 0.6f64..4.0,
            b in 0.6f64..4.0,
            omega in 0.1f64..3.0,
            big_n in 0usize..20,
            n in 0usize..20,
        ) {
            let q = p(k, a, b, omega);
            let l = Labels::new(big_n, n);
            proptest::prop_assert_eq!(susy_energy(&q, l), energy(&q, l) - energy(&q, Labels::new(0, 0)));
            let want = 4.0 * omega * (big_n as f64 + n as f64 * k);
            proptest::prop_assert!((susy_energy(&q, l) - want).abs() <= 1e-12 * want.max(1.0));
            let w = weights_of(&q, n);
            proptest::prop_assert!((w.tau + w.q - n as f64 * k).abs() < 1e-12 * (n as f64 * k).max(1.0));
            proptest::prop_assert!(w.tau > 0.5);
        }

        #[test]
        fn symmetric_angular_factor_has_parity(k in 0.3f64..4.0, a in 0.6f64..3.0, n in 0usize..8, t in 0.02f64..0.98) {
            let q = p(k, a, a, 1.0);
            let phi = t * q.phi_max();
            let lhs = eval_angular(&q, n, q.phi_max() - phi).unwrap();
            let rhs = if n % 2 == 0 { 1.0 } else { -1.0 } * eval_angular(&q, n, phi).unwrap();
            proptest::prop_assert!((lhs - rhs).abs() < 1e-10 * rhs.abs().max(1e-3));
        }
    }
}
