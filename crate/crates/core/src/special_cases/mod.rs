//! Cartesian supersymmetric constructions for `k = 1` (Smorodinsky–
//! Winternitz), `k = 2` (rational BC₂) and `k = 3` (three-particle
//! Calogero–Marchioro–Wolfes), compared pointwise with the polar
//! realization.
//!
//! Each case has a superpotential `W = -Σ_t c_t ln|ℓ_t · x|` built from
//! linear forms, so its gradient and Hessian are exact rational functions.
//! The cartesian operators are
//! `Q = Σ_i b_i (-∂_i + ω x_i + ∂_i W)` and
//! `ℋ^s = {Q, Q†} = -Δ + ω²x² + |∇W|² - ΔW + 2ω x·∇W - dω + 2ω N_F + 2 Σ_ij ∂_ij W b†_i b_j`.

mod cmw;
mod planar;

use nalgebra::DMatrix;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::model::Jet;

pub use cmw::{
    cm_super, cmw_super, cmw_superpotential, mode_transform, mode_transform_car_residual, rel_super,
    trig_resummation_residual, verify_cmw, Point3,
};
pub use planar::{bc2_super, bc2_superpotential, sw_super, sw_superpotential, verify_bc2, verify_sw, PlanarPoint};

/// Value, gradient and Hessian of a scalar function of `D` cartesian
/// coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartesianJet<const D: usize> {
    pub v: f64,
    pub g: [f64; D],
    pub h: [[f64; D]; D],
}

impl<const D: usize> CartesianJet<D> {
    pub fn laplacian(&self) -> f64 {
        (0..D).map(|i| self.h[i][i]).sum()
    }
}

/// Cartesian jet in the plane from a polar jet at `(r, φ)`.
pub fn polar_to_cartesian(j: &Jet, r: f64, phi: f64) -> CartesianJet<2> {
    let (s, c) = phi.sin_cos();
    let (r1, r2) = (1.0 / r, 1.0 / (r * r));
    let (cc, ss, cs) = (c * c, s * s, c * s);
    let xx = cc * j.rr - 2.0 * cs * r1 * j.rp + 2.0 * cs * r2 * j.p + ss * r1 * j.r + ss * r2 * j.pp;
    let yy = ss * j.rr + 2.0 * cs * r1 * j.rp - 2.0 * cs * r2 * j.p + cc * r1 * j.r + cc * r2 * j.pp;
    let xy = cs * j.rr + (cc - ss) * r1 * j.rp - (cc - ss) * r2 * j.p - cs * r1 * j.r - cs * r2 * j.pp;
    CartesianJet { v: j.v, g: [c * j.r - s * r1 * j.p, s * j.r + c * r1 * j.p], h: [[xx, xy], [xy, yy]] }
}

/// Polar jet at `(r, φ)` from a cartesian jet in the plane.
pub fn cartesian_to_polar(j: &CartesianJet<2>, r: f64, phi: f64) -> Jet {
    let (s, c) = phi.sin_cos();
    let [fx, fy] = j.g;
    let [[fxx, fxy], [_, fyy]] = j.h;
    Jet {
        v: j.v,
        r: c * fx + s * fy,
        p: r * (-s * fx + c * fy),
        rr: c * c * fxx + 2.0 * c * s * fxy + s * s * fyy,
        rp: -s * fx + c * fy + r * (c * (-s * fxx + c * fxy) + s * (-s * fxy + c * fyy)),
        pp: -r * (c * fx + s * fy) + r * r * (s * s * fxx - 2.0 * s * c * fxy + c * c * fyy),
    }
}

/// `W = -Σ_t c_t ln|ℓ_t · x|` with its gradient and Hessian at `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct LogSuperpotential<const D: usize> {
    pub terms: Vec<(f64, [f64; D])>,
}

impl<const D: usize> LogSuperpotential<D> {
    /// Smallest `|ℓ_t · x|`, zero on a singular hyperplane.
    pub fn clearance(&self, x: &[f64; D]) -> f64 {
        self.terms.iter().map(|(_, l)| dot(l, x).abs()).fold(f64::INFINITY, f64::min)
    }

    pub fn eval(&self, x: &[f64; D]) -> CartesianJet<D> {
        let mut out = CartesianJet { v: 0.0, g: [0.0; D], h: [[0.0; D]; D] };
        for (c, l) in &self.terms {
            let t = dot(l, x);
            out.v -= c * t.abs().ln();
            for i in 0..D {
                out.g[i] -= c * l[i] / t;
                for j in 0..D {
                    out.h[i][j] += c * l[i] * l[j] / (t * t);
                }
            }
        }
        out
    }
}

fn dot<const D: usize>(a: &[f64; D], b: &[f64; D]) -> f64 {
    (0..D).map(|i| a[i] * b[i]).sum()
}

/// `ℋ^s ψ` and `Q ψ` for the cartesian construction in `D` dimensions.
/// `creators[i]` is `b†_i` on the fermion space and `psi[o]` the jet of
/// component `o`.
pub fn cartesian_super<const D: usize>(
    omega: f64,
    x: &[f64; D],
    w: &CartesianJet<D>,
    creators: &[DMatrix<f64>],
    psi: &[CartesianJet<D>],
) -> (Vec<f64>, Vec<f64>) {
    let nf = psi.len();
    let x2 = dot(x, x);
    let grad2 = dot(&w.g, &w.g);
    let scalar = omega * omega * x2 + grad2 - w.laplacian() + 2.0 * omega * dot(x, &w.g) - D as f64 * omega;
    let vals: Vec<f64> = psi.iter().map(|j| j.v).collect();
    let mut h: Vec<f64> = psi.iter().map(|j| -j.laplacian() + scalar * j.v).collect();
    let mut q = vec![0.0; nf];
    for i in 0..D {
        let ann = creators[i].transpose();
        let ai: Vec<f64> = psi.iter().map(|j| -j.g[i] + (omega * x[i] + w.g[i]) * j.v).collect();
        let qi = &ann * nalgebra::DVector::from_vec(ai);
        let bv = &ann * nalgebra::DVector::from_column_slice(&vals);
        // 2ω N_F from the diagonal, 2 W_ij b†_i b_j from the Hessian
        let ni = &creators[i] * &bv;
        for o in 0..nf {
            q[o] += qi[o];
            h[o] += 2.0 * omega * ni[o];
        }
        for (k, row) in creators.iter().enumerate().take(D) {
            let t = row * &bv;
            for o in 0..nf {
                h[o] += 2.0 * w.h[k][i] * t[o];
            }
        }
    }
    (h, q)
}

/// Random `(polynomial of degree 2) × e^{-ω|x|²/2}` test function.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyGauss<const D: usize> {
    pub omega: f64,
    pub c0: f64,
    pub c1: [f64; D],
    pub c2: [[f64; D]; D],
}

impl<const D: usize> PolyGauss<D> {
    pub fn random(omega: f64, rng: &mut impl Rng) -> Self {
        let mut c2 = [[0.0; D]; D];
        for i in 0..D {
            for j in i..D {
                let v = rng.gen_range(-1.0..1.0);
                c2[i][j] = v;
                c2[j][i] = v;
            }
        }
        PolyGauss {
            omega,
            c0: rng.gen_range(-1.0..1.0),
            c1: std::array::from_fn(|_| rng.gen_range(-1.0..1.0)),
            c2,
        }
    }

    pub fn jet(&self, x: &[f64; D]) -> CartesianJet<D> {
        let w = self.omega;
        let g = (-0.5 * w * dot(x, x)).exp();
        // polynomial P = c0 + c1·x + xᵀ c2 x / 2
        let mut p = self.c0 + dot(&self.c1, x);
        let mut pg = self.c1;
        for i in 0..D {
            for j in 0..D {
                p += 0.5 * self.c2[i][j] * x[i] * x[j];
                pg[i] += self.c2[i][j] * x[j];
            }
        }
        let mut out = CartesianJet { v: p * g, g: [0.0; D], h: [[0.0; D]; D] };
        for i in 0..D {
            out.g[i] = (pg[i] - w * x[i] * p) * g;
            for j in 0..D {
                let delta = if i == j { 1.0 } else { 0.0 };
                out.h[i][j] = (self.c2[i][j] - w * x[j] * pg[i] - w * x[i] * pg[j]
                    + p * (w * w * x[i] * x[j] - w * delta))
                    * g;
            }
        }
        out
    }
}

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Interior sample `(r, φ)` of the wedge, kept away from its edges.
pub(crate) fn random_polar(rng: &mut impl Rng, phi_max: f64) -> (f64, f64) {
    (rng.gen_range(0.4..2.5), rng.gen_range(0.1..0.9) * phi_max)
}

/// Largest residuals of one cartesian-versus-polar comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case: String,
    pub points: usize,
    pub spinors: usize,
    /// Max-abs difference of `ℋ^s ψ`.
    pub hamiltonian: f64,
    /// Max-abs difference of `Q ψ`.
    pub supercharge: f64,
    /// Case-specific checks by name.
    pub extra: Vec<(String, f64)>,
}

impl CaseReport {
    pub fn max_residual(&self) -> f64 {
        self.extra.iter().map(|e| e.1).fold(self.hamiltonian.max(self.supercharge), f64::max)
    }
}
