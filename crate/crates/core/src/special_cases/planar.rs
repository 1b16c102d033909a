//! The two planar cases, `k = 1` on the quadrant and `k = 2` on the sector
//! `0 < y < x`.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::{
    cartesian_super, cartesian_to_polar, polar_to_cartesian, random_polar, rng, CartesianJet, CaseReport,
    LogSuperpotential, PolyGauss,
};
use crate::error::{domain, usage, Result};
use crate::fock::multimode_creators;
use crate::generators::{superpotential, BasisCache, GeneratorId, PointCtx};
use crate::irreps::super_basis;
use crate::model::{ModelParams, SpinorJet};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanarPoint {
    pub x: f64,
    pub y: f64,
}

impl PlanarPoint {
    pub fn from_polar(r: f64, phi: f64) -> Self {
        PlanarPoint { x: r * phi.cos(), y: r * phi.sin() }
    }

    pub fn polar(&self) -> (f64, f64) {
        (self.x.hypot(self.y), self.y.atan2(self.x))
    }
}

fn sw_potential(p: &ModelParams) -> LogSuperpotential<2> {
    LogSuperpotential { terms: vec![(p.a, [1.0, 0.0]), (p.b, [0.0, 1.0])] }
}

fn bc2_potential(p: &ModelParams) -> LogSuperpotential<2> {
    LogSuperpotential {
        terms: vec![(p.a, [1.0, -1.0]), (p.a, [1.0, 1.0]), (p.b, [1.0, 0.0]), (p.b, [0.0, 1.0])],
    }
}

fn require_k(p: &ModelParams, k: f64) -> Result<()> {
    if (p.k - k).abs() > 1e-12 {
        return usage(format!("this construction needs k = {k}, got {}", p.k));
    }
    Ok(())
}

/// `W = -a ln x - b ln y`.
pub fn sw_superpotential(p: &ModelParams, pt: PlanarPoint) -> Result<f64> {
    require_k(p, 1.0)?;
    if pt.x <= 0.0 || pt.y <= 0.0 {
        return domain(format!("({}, {}) is not inside the open quadrant", pt.x, pt.y));
    }
    Ok(sw_potential(p).eval(&[pt.x, pt.y]).v)
}

/// `W = -a(ln|x-y| + ln|x+y|) - b(ln|x| + ln|y|)`.
pub fn bc2_superpotential(p: &ModelParams, pt: PlanarPoint) -> Result<f64> {
    require_k(p, 2.0)?;
    if !(pt.y > 0.0 && pt.x > pt.y) {
        return domain(format!("({}, {}) is not inside the sector 0 < y < x", pt.x, pt.y));
    }
    Ok(bc2_potential(p).eval(&[pt.x, pt.y]).v)
}

/// `(ℋ^s ψ, Q ψ)` of the cartesian construction.
fn planar_super(
    p: &ModelParams,
    w: &LogSuperpotential<2>,
    pt: PlanarPoint,
    psi: &[CartesianJet<2>; 4],
) -> ([f64; 4], [f64; 4]) {
    let x = [pt.x, pt.y];
    let creators: Vec<DMatrix<f64>> = multimode_creators(2);
    let (h, q) = cartesian_super(p.omega, &x, &w.eval(&x), &creators, psi);
    (std::array::from_fn(|o| h[o]), std::array::from_fn(|o| q[o]))
}

pub fn sw_super(p: &ModelParams, pt: PlanarPoint, psi: &[CartesianJet<2>; 4]) -> Result<([f64; 4], [f64; 4])> {
    sw_superpotential(p, pt)?;
    Ok(planar_super(p, &sw_potential(p), pt, psi))
}

pub fn bc2_super(p: &ModelParams, pt: PlanarPoint, psi: &[CartesianJet<2>; 4]) -> Result<([f64; 4], [f64; 4])> {
    bc2_superpotential(p, pt)?;
    Ok(planar_super(p, &bc2_potential(p), pt, psi))
}

fn max_diff(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    (0..4).map(|o| (a[o] - b[o]).abs()).fold(0.0, f64::max)
}

/// Test spinors at one point: catalog basis states and random
/// polynomial–Gaussian spinors, as polar and cartesian jets.
pub(crate) struct TestSpinors {
    pub polar: Vec<SpinorJet>,
    pub cartesian: Vec<[CartesianJet<2>; 4]>,
}

pub(crate) fn test_spinors(
    p: &ModelParams,
    basis: &[crate::irreps::BasisState],
    randoms: &[[PolyGauss<2>; 4]],
    r: f64,
    phi: f64,
    cache: &mut BasisCache,
) -> TestSpinors {
    let mut polar = Vec::new();
    let mut cartesian = Vec::new();
    for b in basis {
        cache.clear();
        let j = b.state.jet_at(p, r, phi, cache);
        cartesian.push(j.map(|c| polar_to_cartesian(&c, r, phi)));
        polar.push(j);
    }
    let x = [r * phi.cos(), r * phi.sin()];
    for spinor in randoms {
        let cj: [CartesianJet<2>; 4] = std::array::from_fn(|o| spinor[o].jet(&x));
        polar.push(cj.map(|c| cartesian_to_polar(&c, r, phi)));
        cartesian.push(cj);
    }
    TestSpinors { polar, cartesian }
}

/// Test-spinor sources for a parameter set: the catalog basis up to a
/// small truncation and four random spinors.
pub(crate) fn spinor_sources(
    p: &ModelParams,
    seed: u64,
) -> (Vec<crate::irreps::BasisState>, Vec<[PolyGauss<2>; 4]>) {
    let mut r = rng(seed ^ 0x5eed);
    let randoms = (0..4).map(|_| std::array::from_fn(|_| PolyGauss::random(p.omega, &mut r))).collect();
    (super_basis(p, 3, 2), randoms)
}

fn verify_planar(p: &ModelParams, case: &str, w: &LogSuperpotential<2>, points: usize, seed: u64) -> CaseReport {
    let (basis, randoms) = spinor_sources(p, seed);
    let mut pts = rng(seed);
    let mut cache = BasisCache::new();
    let (mut h_res, mut q_res, mut free_res, mut w_res) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let q_scale = 2.0 * p.omega.sqrt();
    // constant offset between the cartesian and polar superpotentials
    let w_offset = if case == "bc2" { p.b * std::f64::consts::LN_2 } else { 0.0 };
    let free_shift = -2.0 * p.omega * (p.k * (p.a + p.b) + 1.0);
    let mut n_spinors = 0;
    for _ in 0..points {
        let (r, phi) = random_polar(&mut pts, p.phi_max());
        let pt = PlanarPoint::from_polar(r, phi);
        let ctx = PointCtx::new(p, r, phi);
        let ts = test_spinors(p, &basis, &randoms, r, phi, &mut cache);
        n_spinors = ts.polar.len();
        for (pj, cj) in ts.polar.iter().zip(&ts.cartesian) {
            let (h, q) = planar_super(p, w, pt, cj);
            let hp = ctx.hamiltonian_super_direct(pj);
            let qp = ctx.apply(GeneratorId::WPlus, pj).map(|v| q_scale * v);
            h_res = h_res.max(max_diff(&h, &hp));
            q_res = q_res.max(max_diff(&q, &qp));
            // fermion-free component: H_k plus a constant
            let hb = ctx.hamiltonian_bosonic(pj);
            free_res = free_res.max((h[0] - (hb[0] + free_shift * pj[0].v)).abs());
        }
        let w_polar = superpotential(p, r, phi).unwrap_or(f64::NAN);
        w_res = w_res.max((w.eval(&[pt.x, pt.y]).v - (w_polar + w_offset)).abs());
    }
    CaseReport {
        case: case.to_string(),
        points,
        spinors: n_spinors,
        hamiltonian: h_res,
        supercharge: q_res,
        extra: vec![("fermion-free block".into(), free_res), ("superpotential".into(), w_res)],
    }
}

/// Compares the `k = 1` cartesian construction with the polar one at
/// `points` random interior points.
pub fn verify_sw(p: &ModelParams, points: usize, seed: u64) -> Result<CaseReport> {
    require_k(p, 1.0)?;
    Ok(verify_planar(p, "sw", &sw_potential(p), points, seed))
}

pub fn verify_bc2(p: &ModelParams, points: usize, seed: u64) -> Result<CaseReport> {
    require_k(p, 2.0)?;
    Ok(verify_planar(p, "bc2", &bc2_potential(p), points, seed))
}
