//! Tensor-product quadrature on the wedge `0 < r < ∞, 0 < φ < π/(2k)`.
//!
//! The radial direction uses `z = ωr²` with a Gauss–Laguerre rule whose
//! weight exponent is `(2n+a+b)k - 1` for a chosen sector `n`; the angular
//! direction uses `ξ = -cos 2kφ` with the Gauss–Jacobi weight
//! `(1-ξ)^{a-½} (1+ξ)^{b-½}`. Products of two sector-`n` states (any
//! fermion number) are then polynomial against the rule weights, so inner
//! products are exact up to roundoff. Each stored node weight already
//! contains the inverse rule weight and the Jacobian of `r dr dφ`.

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ModelParams;
use crate::error::{usage, Result};
use crate::specfun::{gauss_rule, RuleKind};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridKey {
    pub params: ModelParams,
    pub sector: usize,
    pub radial_order: usize,
    pub angular_order: usize,
}

#[derive(Debug, Clone)]
pub struct QuadGrid {
    pub key: GridKey,
    /// Point `p = i * angular_order + j` sits at `(r[p], phi[p])`.
    pub r: Vec<f64>,
    pub phi: Vec<f64>,
    pub weight: Vec<f64>,
}

impl QuadGrid {
    pub fn new(params: &ModelParams, sector: usize, radial_order: usize, angular_order: usize) -> Result<Arc<Self>> {
        params.validate()?;
        let ModelParams { k, a, b, omega } = *params;
        let alpha_g = params.radial_exponent(sector) - 1.0;
        let rad = gauss_rule(RuleKind::Laguerre { alpha: alpha_g }, radial_order)?;
        let ang = gauss_rule(RuleKind::Jacobi { alpha: a - 0.5, beta: b - 0.5 }, angular_order)?;

        let jac = (4.0 * omega * k).ln();
        let rad_w: Vec<f64> =
            rad.nodes.iter().zip(&rad.weights).map(|(&z, &w)| w.ln() - alpha_g * z.ln() + z - jac).collect();
        let ang_w: Vec<f64> = ang
            .nodes
            .iter()
            .zip(&ang.weights)
            .map(|(&x, &w)| w.ln() - a * (1.0 - x).ln() - b * (1.0 + x).ln())
            .collect();

        let n = radial_order * angular_order;
        let (mut r, mut phi, mut weight) = (Vec::with_capacity(n), Vec::with_capacity(n), Vec::with_capacity(n));
        for (i, &z) in rad.nodes.iter().enumerate() {
            for (j, &x) in ang.nodes.iter().enumerate() {
                r.push((z / omega).sqrt());
                phi.push((-x).acos() / (2.0 * k));
                weight.push((rad_w[i] + ang_w[j]).exp());
            }
        }
        let key = GridKey { params: *params, sector, radial_order, angular_order };
        Ok(Arc::new(QuadGrid { key, r, phi, weight }))
    }

    pub fn len(&self) -> usize {
        self.r.len()
    }

    pub fn is_empty(&self) -> bool {
        self.r.is_empty()
    }

    pub fn sample(self: &Arc<Self>, f: impl Fn(f64, f64) -> f64 + Sync) -> ScalarField {
        let values = (0..self.len()).into_par_iter().map(|p| f(self.r[p], self.phi[p])).collect();
        ScalarField { grid: Arc::clone(self), values }
    }

    pub fn sample_spinor(self: &Arc<Self>, f: impl Fn(f64, f64) -> [f64; 4] + Sync) -> SpinorField {
        let values = (0..self.len()).into_par_iter().map(|p| f(self.r[p], self.phi[p])).collect();
        SpinorField { grid: Arc::clone(self), values }
    }
}

fn same_grid(f: &Arc<QuadGrid>, g: &Arc<QuadGrid>) -> Result<()> {
    if Arc::ptr_eq(f, g) || f.key == g.key {
        Ok(())
    } else {
        usage(format!("fields live on different grids: {:?} vs {:?}", f.key, g.key))
    }
}

/// A real function sampled on a [`QuadGrid`].
#[derive(Debug, Clone)]
pub struct ScalarField {
    pub grid: Arc<QuadGrid>,
    pub values: Vec<f64>,
}

/// `∫∫ f g r dr dφ` by quadrature.
pub fn inner_product(f: &ScalarField, g: &ScalarField) -> Result<f64> {
    same_grid(&f.grid, &g.grid)?;
    Ok(f.grid.weight.iter().zip(f.values.iter().zip(&g.values)).map(|(w, (a, b))| w * a * b).sum())
}

/// Four-component field in the unbarred basis `{|00⟩, |10⟩, |01⟩, |11⟩}`.
#[derive(Debug, Clone)]
pub struct SpinorField {
    pub grid: Arc<QuadGrid>,
    pub values: Vec<[f64; 4]>,
}

impl SpinorField {
    pub fn zeros(grid: &Arc<QuadGrid>) -> Self {
        SpinorField { grid: Arc::clone(grid), values: vec![[0.0; 4]; grid.len()] }
    }

    /// Sum of the componentwise quadrature inner products.
    pub fn dot(&self, other: &SpinorField) -> Result<f64> {
        same_grid(&self.grid, &other.grid)?;
        let mut acc = 0.0;
        for ((w, u), v) in self.grid.weight.iter().zip(&self.values).zip(&other.values) {
            acc += w * (u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3]);
        }
        Ok(acc)
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).map(f64::sqrt).unwrap_or(f64::NAN)
    }

    pub fn component(&self, c: usize) -> ScalarField {
        ScalarField { grid: Arc::clone(&self.grid), values: self.values.iter().map(|v| v[c]).collect() }
    }

    /// `self += c · other`.
    pub fn axpy(&mut self, c: f64, other: &SpinorField) -> Result<()> {
        same_grid(&self.grid, &other.grid)?;
        for (u, v) in self.values.iter_mut().zip(&other.values) {
            for i in 0..4 {
                u[i] += c * v[i];
            }
        }
        Ok(())
    }

    pub fn scaled(&self, c: f64) -> SpinorField {
        let values = self.values.iter().map(|v| v.map(|x| c * x)).collect();
        SpinorField { grid: Arc::clone(&self.grid), values }
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().flat_map(|v| v.iter()).fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Largest pointwise component difference.
    pub fn max_abs_diff(&self, other: &SpinorField) -> Result<f64> {
        same_grid(&self.grid, &other.grid)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .flat_map(|(u, v)| (0..4).map(move |i| (u[i] - v[i]).abs()))
            .fold(0.0, f64::max))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{eval_wavefunction, Labels};

    fn gram(params: &ModelParams, nmax: usize, big_nmax: usize, order: usize) -> f64 {
        let states: Vec<Labels> =
            (0..=nmax).flat_map(|n| (0..=big_nmax).map(move |nn| Labels::new(nn, n))).collect();
        let grids: Vec<_> = (0..=nmax).map(|s| QuadGrid::new(params, s, order, order).unwrap()).collect();
        let mut worst: f64 = 0.0;
        for (i, li) in states.iter().enumerate() {
            for lj in &states[i..] {
                let g = &grids[li.angular.min(lj.angular)];
                let f1 = g.sample(|r, p| eval_wavefunction(params, *li, r, p).unwrap());
                let f2 = g.sample(|r, p| eval_wavefunction(params, *lj, r, p).unwrap());
                let want = if li == lj { 1.0 } else { 0.0 };
                worst = worst.max((inner_product(&f1, &f2).unwrap() - want).abs());
            }
        }
        worst
    }

    #[test]
    fn ground_state_norm_and_orthogonality() {
        let q = ModelParams::new(1.0, 1.0, 1.0, 1.0).unwrap();
        let g = QuadGrid::new(&q, 0, 40, 40).unwrap();
        let f0 = g.sample(|r, p| eval_wavefunction(&q, Labels::new(0, 0), r, p).unwrap());
        let f1 = g.sample(|r, p| eval_wavefunction(&q, Labels::new(1, 0), r, p).unwrap());
        assert!((inner_product(&f0, &f0).unwrap() - 1.0).abs() < 1e-10);
        assert!(inner_product(&f0, &f1).unwrap().abs() < 1e-10);
    }

    #[test]
    fn gram_matrix_is_identity() {
        let q = ModelParams::new(2.0, 1.5, 2.5, 1.0).unwrap();
        assert!(gram(&q, 4, 4, 40) < 1e-9);
        let irr = ModelParams::new(std::f64::consts::SQRT_2, 1.2, 0.8, 0.6).unwrap();
        assert!(gram(&irr, 3, 4, 40) < 1e-9);
    }

    #[test]
    fn mismatched_grids_are_rejected() {
        let q = ModelParams::new(1.0, 1.0, 1.0, 1.0).unwrap();
        let g1 = QuadGrid::new(&q, 0, 10, 10).unwrap();
        let g2 = QuadGrid::new(&q, 1, 10, 10).unwrap();
        let f = g1.sample(|_, _| 1.0);
        let h = g2.sample(|_, _| 1.0);
        assert!(matches!(inner_product(&f, &h), Err(crate::Error::Usage(_))));
    }
}
