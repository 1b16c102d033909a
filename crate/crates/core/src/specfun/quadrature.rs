//! Gauss–Laguerre and Gauss–Jacobi rules.
//!
//! Nodes start from the eigenvalues of the symmetric Jacobi matrix of the
//! three-term recurrence and are polished by Newton iteration on the
//! polynomial itself; weights come from the derivative formula evaluated in
//! log space so that large parameters do not overflow.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::specfun::gamma::ln_gamma;
use crate::specfun::poly::{jacobi_deriv_raw, jacobi_raw, laguerre_deriv_raw, laguerre_raw};

const NEWTON_TOL: f64 = 1e-14;
const NEWTON_MAX_ITER: usize = 60;

/// Weight function of a Gauss rule.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum RuleKind {
    /// `z^alpha e^{-z}` on `(0, ∞)`.
    Laguerre { alpha: f64 },
    /// `(1-x)^alpha (1+x)^beta` on `(-1, 1)`.
    Jacobi { alpha: f64, beta: f64 },
}

impl RuleKind {
    /// Weight function evaluated at `x`.
    pub fn weight(&self, x: f64) -> f64 {
        match *self {
            RuleKind::Laguerre { alpha } => x.powf(alpha) * (-x).exp(),
            RuleKind::Jacobi { alpha, beta } => (1.0 - x).powf(alpha) * (1.0 + x).powf(beta),
        }
    }

    /// `ln` of the weight function at `x`.
    pub fn ln_weight(&self, x: f64) -> f64 {
        match *self {
            RuleKind::Laguerre { alpha } => alpha * x.ln() - x,
            RuleKind::Jacobi { alpha, beta } => alpha * (1.0 - x).ln() + beta * (1.0 + x).ln(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub kind: RuleKind,
    pub order: usize,
}

impl QuadratureRule {
    /// `Σ w_i f(x_i)`.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }
}

/// Builds the `order`-point Gauss rule for `kind`.
pub fn gauss_rule(kind: RuleKind, order: usize) -> Result<QuadratureRule> {
    if order == 0 {
        return domain("a Gauss rule needs at least one node");
    }
    let (nodes, weights) = match kind {
        RuleKind::Laguerre { alpha } => {
            if !(alpha > -1.0) || !alpha.is_finite() {
                return domain(format!("Gauss-Laguerre parameter must exceed -1, got {alpha}"));
            }
            laguerre_rule(alpha, order)
        }
        RuleKind::Jacobi { alpha, beta } => {
            if !(alpha > -1.0) || !(beta > -1.0) || !alpha.is_finite() || !beta.is_finite() {
                return domain(format!("Gauss-Jacobi parameters must exceed -1, got ({alpha}, {beta})"));
            }
            jacobi_rule(alpha, beta, order)
        }
    };
    Ok(QuadratureRule { nodes, weights, kind, order })
}

fn tridiagonal_eigenvalues(diag: &[f64], off: &[f64]) -> Vec<f64> {
    let m = diag.len();
    let mut t = DMatrix::<f64>::zeros(m, m);
    for i in 0..m {
        t[(i, i)] = diag[i];
    }
    for (i, &b) in off.iter().enumerate() {
        t[(i, i + 1)] = b;
        t[(i + 1, i)] = b;
    }
    let mut ev: Vec<f64> = SymmetricEigen::new(t).eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ev
}

fn newton_polish(x0: f64, lo: f64, hi: f64, f: impl Fn(f64) -> (f64, f64)) -> f64 {
    let mut x = x0;
    for _ in 0..NEWTON_MAX_ITER {
        let (p, dp) = f(x);
        if dp == 0.0 {
            break;
        }
        let step = p / dp;
        let next = x - step;
        if !(next > lo && next < hi) {
            break;
        }
        x = next;
        if step.abs() <= NEWTON_TOL * x.abs().max(1.0) {
            break;
        }
    }
    x
}

fn laguerre_rule(alpha: f64, m: usize) -> (Vec<f64>, Vec<f64>) {
    let diag: Vec<f64> = (0..m).map(|j| 2.0 * j as f64 + alpha + 1.0).collect();
    let off: Vec<f64> = (1..m).map(|j| (j as f64 * (j as f64 + alpha)).sqrt()).collect();
    let guesses = tridiagonal_eigenvalues(&diag, &off);

    let ln_const = ln_gamma(m as f64 + alpha + 1.0) - ln_gamma(m as f64 + 1.0);
    let mut nodes = Vec::with_capacity(m);
    let mut weights = Vec::with_capacity(m);
    for g in guesses {
        let x = newton_polish(g.max(f64::MIN_POSITIVE), 0.0, f64::INFINITY, |x| {
            (laguerre_raw(m, alpha, x), laguerre_deriv_raw(m, alpha, x, 1))
        });
        let dp = laguerre_deriv_raw(m, alpha, x, 1);
        nodes.push(x);
        weights.push((ln_const - x.ln() - 2.0 * dp.abs().ln()).exp());
    }
    (nodes, weights)
}

fn jacobi_rule(alpha: f64, beta: f64, m: usize) -> (Vec<f64>, Vec<f64>) {
    let ab = alpha + beta;
    let diag: Vec<f64> = (0..m)
        .map(|j| {
            if j == 0 {
                (beta - alpha) / (ab + 2.0)
            } else {
                let c = 2.0 * j as f64 + ab;
                (beta * beta - alpha * alpha) / (c * (c + 2.0))
            }
        })
        .collect();
    let off: Vec<f64> = (1..m)
        .map(|j| {
            let jf = j as f64;
            let c = 2.0 * jf + ab;
            let num = jf * (jf + alpha) * (jf + beta) * (jf + ab);
            let den = (c - 1.0) * (c + 1.0);
            2.0 / c * (num / den).abs().sqrt()
        })
        .collect();
    let guesses = tridiagonal_eigenvalues(&diag, &off);

    let mf = m as f64;
    let ln_const = (ab + 1.0) * std::f64::consts::LN_2 + ln_gamma(mf + alpha + 1.0) + ln_gamma(mf + beta + 1.0)
        - ln_gamma(mf + ab + 1.0)
        - ln_gamma(mf + 1.0);
    let mut nodes = Vec::with_capacity(m);
    let mut weights = Vec::with_capacity(m);
    for g in guesses {
        let g = g.clamp(-1.0 + f64::EPSILON, 1.0 - f64::EPSILON);
        let x = newton_polish(g, -1.0, 1.0, |x| {
            (jacobi_raw(m, alpha, beta, x), jacobi_deriv_raw(m, alpha, beta, x, 1))
        });
        let dp = jacobi_deriv_raw(m, alpha, beta, x, 1);
        nodes.push(x);
        weights.push((ln_const - ((1.0 - x) * (1.0 + x)).ln() - 2.0 * dp.abs().ln()).exp());
    }
    (nodes, weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gamma::log_gamma;

    fn beta_fn_ln(p: f64, q: f64) -> f64 {
        ln_gamma(p) + ln_gamma(q) - ln_gamma(p + q)
    }

    #[test]
    fn single_node_laguerre() {
        let r = gauss_rule(RuleKind::Laguerre { alpha: 0.0 }, 1).unwrap();
        assert!((r.nodes[0] - 1.0).abs() < 1e-15);
        assert!((r.weights[0] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn two_node_legendre() {
        let r = gauss_rule(RuleKind::Jacobi { alpha: 0.0, beta: 0.0 }, 2).unwrap();
        let x = 1.0 / 3f64.sqrt();
        assert!((r.nodes[0] + x).abs() < 1e-15 && (r.nodes[1] - x).abs() < 1e-15);
        assert!((r.weights[0] - 1.0).abs() < 1e-14 && (r.weights[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn gamma_moment() {
        let r = gauss_rule(RuleKind::Laguerre { alpha: 2.5 }, 8).unwrap();
        let exact = log_gamma(3.5).unwrap().exp();
        assert!((r.integrate(|_| 1.0) - exact).abs() / exact < 1e-12);
    }

    #[test]
    fn laguerre_monomial_moments() {
        for &alpha in &[-0.5, 0.0, 1.83, 4.0, 12.7, 47.0] {
            for &m in &[1usize, 3, 10, 40, 80] {
                let r = gauss_rule(RuleKind::Laguerre { alpha }, m).unwrap();
                assert!(r.nodes.windows(2).all(|w| w[0] < w[1]));
                assert!(r.nodes[0] > 0.0 && r.weights.iter().all(|&w| w > 0.0));
                for d in 0..(2 * m).min(40) {
                    // ∫ z^{α+d} e^{-z} = Γ(α+d+1)
                    let exact_ln = ln_gamma(alpha + d as f64 + 1.0);
                    let got = r.integrate(|z| z.powi(d as i32));
                    assert!(
                        (got.ln() - exact_ln).abs() < 1e-12 * exact_ln.abs().max(1.0) + 1e-12,
                        "alpha={alpha} m={m} d={d}: {} vs {}",
                        got.ln(),
                        exact_ln
                    );
                }
            }
        }
    }

    #[test]
    fn jacobi_monomial_moments() {
        for &(alpha, beta) in &[(0.0, 0.0), (0.5, 0.5), (1.0, 2.0), (-0.3, 1.7), (0.7, 0.3)] {
            for &m in &[1usize, 2, 7, 30, 80] {
                let r = gauss_rule(RuleKind::Jacobi { alpha, beta }, m).unwrap();
                assert!(r.nodes.windows(2).all(|w| w[0] < w[1]));
                assert!(r.nodes[0] > -1.0 && *r.nodes.last().unwrap() < 1.0);
                for d in 0..(2 * m).min(30) {
                    // ∫ (1-x)^{α+d} (1+x)^β = 2^{α+β+d+1} B(α+d+1, β+1)
                    let exact = ((alpha + beta + d as f64 + 1.0) * std::f64::consts::LN_2
                        + beta_fn_ln(alpha + d as f64 + 1.0, beta + 1.0))
                    .exp();
                    let got = r.integrate(|x| (1.0 - x).powi(d as i32));
                    assert!((got - exact).abs() <= 1e-12 * exact, "({alpha},{beta}) m={m} d={d}");
                }
            }
        }
    }

    #[test]
    fn invalid_parameters() {
        assert!(gauss_rule(RuleKind::Laguerre { alpha: -1.0 }, 4).is_err());
        assert!(gauss_rule(RuleKind::Jacobi { alpha: 0.0, beta: -2.0 }, 4).is_err());
        assert!(gauss_rule(RuleKind::Laguerre { alpha: 0.0 }, 0).is_err());
    }

    proptest::proptest! {
        #[test]
        fn rules_are_exact_to_degree_2m_minus_1(
            alpha in -0.5f64..8.0,
            beta in -0.5f64..8.0,
            m in 1usize..=30,
            frac in 0.0f64..1.0,
        ) {
            let d = ((2 * m - 1) as f64 * frac).round() as usize;
            let r = gauss_rule(RuleKind::Laguerre { alpha }, m).unwrap();
            let got = r.integrate(|z| z.powi(d as i32)).ln();
            let exact = ln_gamma(alpha + d as f64 + 1.0);
            proptest::prop_assert!((got - exact).abs() < 1e-12 * exact.abs().max(1.0) + 1e-12);
            let r = gauss_rule(RuleKind::Jacobi { alpha, beta }, m).unwrap();
            let a1 = alpha + d as f64 + 1.0;
            let exact = ((a1 + beta) * std::f64::consts::LN_2 + beta_fn_ln(a1, beta + 1.0)).exp();
            let got = r.integrate(|x| (1.0 - x).powi(d as i32));
            proptest::prop_assert!((got - exact).abs() <= 1e-12 * exact);
        }
    }
}
