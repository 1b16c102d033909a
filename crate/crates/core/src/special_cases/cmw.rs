//! Three particles on a line (`k = 3`): the cartesian construction with
//! three fermion modes, its split into relative and centre-of-mass parts
//! after an orthogonal change of coordinates and modes, and the comparison
//! of the relative part with the polar realization.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::planar::{spinor_sources, test_spinors};
use super::{cartesian_super, rng, random_polar, CartesianJet, CaseReport, LogSuperpotential, PolyGauss};
use crate::error::{domain, usage, Result};
use crate::fock::{fermion_matrices, multimode_creators, FermionOp};
use crate::generators::{BasisCache, GeneratorId, PointCtx};
use crate::model::{ModelParams, SpinorJet};

const S2: f64 = std::f64::consts::SQRT_2;

/// Rows map particle coordinates to `(u, v, X)` with `u = r cos φ`,
/// `v = r sin φ` and `X` the scaled centre of mass.
fn rotation() -> [[f64; 3]; 3] {
    let s6 = 6f64.sqrt();
    let s3 = 3f64.sqrt();
    [[1.0 / S2, -1.0 / S2, 0.0], [1.0 / s6, 1.0 / s6, -2.0 / s6], [1.0 / s3, 1.0 / s3, 1.0 / s3]]
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point3 {
    pub x: [f64; 3],
}

impl Point3 {
    pub fn from_relative(r: f64, phi: f64, big_x: f64) -> Self {
        let o = rotation();
        let w = [r * phi.cos(), r * phi.sin(), big_x];
        Point3 { x: std::array::from_fn(|i| (0..3).map(|a| o[a][i] * w[a]).sum()) }
    }

    /// `(r, φ, X)`.
    pub fn relative(&self) -> (f64, f64, f64) {
        let o = rotation();
        let w: [f64; 3] = std::array::from_fn(|a| (0..3).map(|i| o[a][i] * self.x[i]).sum());
        (w[0].hypot(w[1]), w[1].atan2(w[0]), w[2])
    }
}

fn potential(p: &ModelParams) -> LogSuperpotential<3> {
    let (a, b) = (p.a, p.b);
    LogSuperpotential {
        terms: vec![
            (a, [1.0, -1.0, 0.0]),
            (a, [1.0, 0.0, -1.0]),
            (a, [0.0, 1.0, -1.0]),
            (b, [1.0, 1.0, -2.0]),
            (b, [1.0, -2.0, 1.0]),
            (b, [-2.0, 1.0, 1.0]),
        ],
    }
}

fn require_k3(p: &ModelParams) -> Result<()> {
    if (p.k - 3.0).abs() > 1e-12 {
        return usage(format!("the three-particle construction needs k = 3, got {}", p.k));
    }
    Ok(())
}

/// `W = -a Σ_{i<j} ln|x_ij| - b Σ_{i<j} ln|y_ij|`.
pub fn cmw_superpotential(p: &ModelParams, pt: &Point3) -> Result<f64> {
    require_k3(p)?;
    let w = potential(p);
    if w.clearance(&pt.x) < 1e-12 {
        return domain(format!("{:?} is a coincidence point", pt.x));
    }
    Ok(w.eval(&pt.x).v)
}

/// `(ℋ^s ψ, Q ψ)` with three fermion modes in the particle basis.
pub fn cmw_super(p: &ModelParams, pt: &Point3, psi: &[CartesianJet<3>; 8]) -> Result<([f64; 8], [f64; 8])> {
    cmw_superpotential(p, pt)?;
    let (h, q) = cartesian_super(p.omega, &pt.x, &potential(p).eval(&pt.x), &multimode_creators(3), psi);
    Ok((std::array::from_fn(|o| h[o]), std::array::from_fn(|o| q[o])))
}

/// Creation operators of the relative modes `x`, `y` and the
/// centre-of-mass mode `X` on the three-mode Fock space.
pub fn mode_transform() -> [DMatrix<f64>; 3] {
    let o = rotation();
    let c = multimode_creators(3);
    std::array::from_fn(|a| &c[0] * o[a][0] + &c[1] * o[a][1] + &c[2] * o[a][2])
}

/// `[c†, c]` for the mode `c = u_x b_x + u_y b_y`.
fn mode_commutator(u: [f64; 2]) -> FermionOp {
    let f = fermion_matrices();
    let c = f.bx * u[0] + f.by * u[1];
    let cd = f.bx_dag * u[0] + f.by_dag * u[1];
    cd * c - c * cd
}

/// Relative super-Hamiltonian and supercharge written out with the six
/// two-body terms and explicit `k = 3` trigonometric coefficients.
pub fn rel_super(p: &ModelParams, r: f64, phi: f64, psi: &SpinorJet) -> Result<([f64; 4], [f64; 4])> {
    require_k3(p)?;
    p.check_angle(phi)?;
    let (a, b, om) = (p.a, p.b, p.omega);
    let h3 = 3f64.sqrt() / 2.0;
    let r2 = r * r;
    let f = fermion_matrices();
    let mut op = FermionOp::zeros();
    let pairs = [
        (a / (r2 * phi.cos().powi(2)), a, [1.0, 0.0]),
        (a / (r2 * (phi - 2.0 * PI / 3.0).cos().powi(2)), a, [-0.5, h3]),
        (a / (r2 * (phi - 4.0 * PI / 3.0).cos().powi(2)), a, [0.5, h3]),
        (b / (r2 * phi.sin().powi(2)), b, [0.0, 1.0]),
        (b / (r2 * (phi - 2.0 * PI / 3.0).sin().powi(2)), b, [h3, 0.5]),
        (b / (r2 * (phi - 4.0 * PI / 3.0).sin().powi(2)), b, [h3, -0.5]),
    ];
    for (pref, coupling, u) in pairs {
        op += (FermionOp::identity() * coupling + mode_commutator(u)) * pref;
    }
    op += f.number() * (2.0 * om);
    op += FermionOp::identity() * (om * om * r2 - 2.0 * om * (3.0 * a + 3.0 * b + 1.0));
    let vals = nalgebra::Vector4::from_fn(|o, _| psi[o].v);
    let fermi = op * vals;
    let h: [f64; 4] = std::array::from_fn(|o| {
        let j = &psi[o];
        -(j.rr + j.r / r + j.pp / r2) + fermi[o]
    });
    let (s, c) = phi.sin_cos();
    let (c2, s2, c3, s3) = ((2.0 * phi).cos(), (2.0 * phi).sin(), (3.0 * phi).cos(), (3.0 * phi).sin());
    let ax = nalgebra::Vector4::from_fn(|o, _| {
        let j = &psi[o];
        -c * j.r + s / r * j.p + (om * r * c - 3.0 * a / r * c2 / c3 - 3.0 * b / r * s2 / s3) * j.v
    });
    let ay = nalgebra::Vector4::from_fn(|o, _| {
        let j = &psi[o];
        -s * j.r - c / r * j.p + (om * r * s + 3.0 * a / r * s2 / c3 - 3.0 * b / r * c2 / s3) * j.v
    });
    let q = f.bx * ax + f.by * ay;
    Ok((h, std::array::from_fn(|o| q[o])))
}

/// Centre-of-mass part on a one-mode spinor `g[n]`, given as value and
/// first two derivatives in `X`.
pub fn cm_super(omega: f64, big_x: f64, g: &[[f64; 3]; 2]) -> ([f64; 2], [f64; 2]) {
    let h = std::array::from_fn(|n| {
        -g[n][2] + omega * omega * big_x * big_x * g[n][0] + 2.0 * omega * (n as f64 - 0.5) * g[n][0]
    });
    let q = [-g[1][1] + omega * big_x * g[1][0], 0.0];
    (h, q)
}

/// Relative error of the resummations
/// `Σ_j sec²(φ - 2πj/3) = 9 sec² 3φ` and `Σ_j csc²(φ - 2πj/3) = 9 csc² 3φ`.
pub fn trig_resummation_residual(phi: f64) -> f64 {
    let shifts = [0.0, 2.0 * PI / 3.0, 4.0 * PI / 3.0];
    let sec: f64 = shifts.iter().map(|d| (phi - d).cos().powi(-2)).sum();
    let csc: f64 = shifts.iter().map(|d| (phi - d).sin().powi(-2)).sum();
    let want_sec = 9.0 / (3.0 * phi).cos().powi(2);
    let want_csc = 9.0 / (3.0 * phi).sin().powi(2);
    ((sec - want_sec) / want_sec).abs().max(((csc - want_csc) / want_csc).abs())
}

/// Basis vectors `(b†_x)^{n_x} (b†_y)^{n_y} (b†_X)^t |0⟩` of the
/// transformed modes, indexed by `[n_x + 2 n_y][t]`.
fn transformed_basis(modes: &[DMatrix<f64>; 3]) -> [[DVector<f64>; 2]; 4] {
    let vac = DVector::from_fn(8, |i, _| if i == 0 { 1.0 } else { 0.0 });
    std::array::from_fn(|s| {
        std::array::from_fn(|t| {
            let mut v = vac.clone();
            if t == 1 {
                v = &modes[2] * v;
            }
            if s & 2 != 0 {
                v = &modes[1] * v;
            }
            if s & 1 != 0 {
                v = &modes[0] * v;
            }
            v
        })
    })
}

fn max_diff<const N: usize>(a: &[f64; N], b: &[f64; N]) -> f64 {
    (0..N).map(|o| (a[o] - b[o]).abs()).fold(0.0, f64::max)
}

/// `max |{c_α, c†_β} - δ_αβ|` and `max |{c_α, c_β}|` over the transformed
/// modes.
pub fn mode_transform_car_residual() -> f64 {
    let m = mode_transform();
    let mut worst = 0.0f64;
    for a in 0..3 {
        for b in 0..3 {
            let ca = m[a].transpose();
            let anti = &ca * &m[b] + &m[b] * &ca;
            let want = if a == b { DMatrix::identity(8, 8) } else { DMatrix::zeros(8, 8) };
            worst = worst.max((anti - want).amax());
            let cb = m[b].transpose();
            worst = worst.max((&ca * &cb + &cb * &ca).amax());
        }
    }
    worst
}

/// One-dimensional `(polynomial) × e^{-ωX²/2}` pair for the centre-of-mass
/// mode; `None` stands for the plain Gaussian in the empty mode.
fn cm_spinors(omega: f64, rng: &mut impl Rng) -> Vec<[Option<PolyGauss<1>>; 2]> {
    let gauss = PolyGauss { omega, c0: 1.0, c1: [0.0], c2: [[0.0]] };
    vec![
        [Some(gauss), None],
        [Some(PolyGauss::random(omega, rng)), Some(PolyGauss::random(omega, rng))],
        [None, Some(PolyGauss::random(omega, rng))],
    ]
}

fn jet1(g: &Option<PolyGauss<1>>, big_x: f64) -> [f64; 3] {
    match g {
        Some(g) => {
            let j = g.jet(&[big_x]);
            [j.v, j.g[0], j.h[0][0]]
        }
        None => [0.0; 3],
    }
}

/// Compares the three-particle construction with its relative plus
/// centre-of-mass split, and the relative part with the polar realization
/// at `k = 3`.
pub fn verify_cmw(p: &ModelParams, points: usize, seed: u64) -> Result<CaseReport> {
    require_k3(p)?;
    let o = rotation();
    let modes = mode_transform();
    let e = transformed_basis(&modes);
    let (basis, randoms) = spinor_sources(p, seed);
    let mut pts = rng(seed);
    let cms = cm_spinors(p.omega, &mut rng(seed ^ 0xc3));
    let mut cache = BasisCache::new();
    let q_scale = 2.0 * p.omega.sqrt();
    let (mut rel_h, mut rel_q, mut split_h, mut split_q, mut trig, mut ground) = (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let mut n_spinors = 0;
    for _ in 0..points {
        let (r, phi) = random_polar(&mut pts, p.phi_max());
        let big_x = pts.gen_range(-1.5..1.5);
        let pt = Point3::from_relative(r, phi, big_x);
        let ctx = PointCtx::new(p, r, phi);
        trig = trig.max(trig_resummation_residual(phi));
        let gj: Vec<[[f64; 3]; 2]> = cms.iter().map(|g| [jet1(&g[0], big_x), jet1(&g[1], big_x)]).collect();
        let (hg, _) = cm_super(p.omega, big_x, &gj[0]);
        ground = ground.max(hg[0].abs());
        let ts = test_spinors(p, &basis, &randoms, r, phi, &mut cache);
        n_spinors = ts.polar.len() * cms.len();
        for (pj, cj) in ts.polar.iter().zip(&ts.cartesian) {
            let (hr, qr) = rel_super(p, r, phi, pj)?;
            rel_h = rel_h.max(max_diff(&hr, &ctx.hamiltonian_super_direct(pj)));
            rel_q = rel_q.max(max_diff(&qr, &ctx.apply(GeneratorId::WPlus, pj).map(|v| q_scale * v)));
            for g in &gj {
                let (hc, qc) = cm_super(p.omega, big_x, g);
                // ψ = Σ f_s(u, v) g_t(X) e_{s,t}, as jets in (u, v, X) then in particle coordinates
                let mut psi_w = [CartesianJet::<3> { v: 0.0, g: [0.0; 3], h: [[0.0; 3]; 3] }; 8];
                let mut want_h = [0.0; 8];
                let mut want_q = [0.0; 8];
                for s in 0..4 {
                    let f = &cj[s];
                    let parity = if s == 0 || s == 3 { 1.0 } else { -1.0 };
                    for t in 0..2 {
                        let [gv, g1, g2] = g[t];
                        let fw = CartesianJet::<3> {
                            v: f.v * gv,
                            g: [f.g[0] * gv, f.g[1] * gv, f.v * g1],
                            h: [
                                [f.h[0][0] * gv, f.h[0][1] * gv, f.g[0] * g1],
                                [f.h[1][0] * gv, f.h[1][1] * gv, f.g[1] * g1],
                                [f.g[0] * g1, f.g[1] * g1, f.v * g2],
                            ],
                        };
                        let hcoef = hr[s] * gv + f.v * hc[t];
                        let qcoef = qr[s] * gv + parity * f.v * qc[t];
                        for comp in 0..8 {
                            let ev = e[s][t][comp];
                            if ev == 0.0 {
                                continue;
                            }
                            want_h[comp] += hcoef * ev;
                            want_q[comp] += qcoef * ev;
                            let pw = &mut psi_w[comp];
                            pw.v += ev * fw.v;
                            for i in 0..3 {
                                pw.g[i] += ev * fw.g[i];
                                for j in 0..3 {
                                    pw.h[i][j] += ev * fw.h[i][j];
                                }
                            }
                        }
                    }
                }
                let psi_x: [CartesianJet<3>; 8] = psi_w.map(|jw| CartesianJet {
                    v: jw.v,
                    g: std::array::from_fn(|i| (0..3).map(|a| o[a][i] * jw.g[a]).sum()),
                    h: std::array::from_fn(|i| {
                        std::array::from_fn(|j| {
                            let mut acc = 0.0;
                            for a in 0..3 {
                                for b in 0..3 {
                                    acc += o[a][i] * jw.h[a][b] * o[b][j];
                                }
                            }
                            acc
                        })
                    }),
                });
                let (h, q) = cmw_super(p, &pt, &psi_x)?;
                split_h = split_h.max(max_diff(&h, &want_h));
                split_q = split_q.max(max_diff(&q, &want_q));
            }
        }
    }
    Ok(CaseReport {
        case: "cmw".into(),
        points,
        spinors: n_spinors,
        hamiltonian: rel_h.max(split_h),
        supercharge: rel_q.max(split_q),
        extra: vec![
            ("relative vs polar hamiltonian".into(), rel_h),
            ("relative vs polar supercharge".into(), rel_q),
            ("split hamiltonian".into(), split_h),
            ("split supercharge".into(), split_q),
            ("mode transform anticommutators".into(), mode_transform_car_residual()),
            ("trigonometric resummation".into(), trig),
            ("centre-of-mass ground state".into(), ground),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinate_map() {
        let pt = Point3::from_relative(1.3, 0.2, -0.4);
        let (r, phi, big_x) = pt.relative();
        assert!((r - 1.3).abs() < 1e-14 && (phi - 0.2).abs() < 1e-14 && (big_x + 0.4).abs() < 1e-14);
        let x = pt.x;
        assert!(((x[0] - x[1]) / S2 - r * phi.cos()).abs() < 1e-14);
        assert!(((x[0] + x[1] - 2.0 * x[2]) / 6f64.sqrt() - r * phi.sin()).abs() < 1e-14);
        let p = ModelParams::new(3.0, 2.0, 2.0, 1.0).unwrap();
        assert!(cmw_superpotential(&p, &Point3 { x: [1.0, 1.0, 0.0] }).is_err());
        assert!(cmw_superpotential(&ModelParams::new(2.0, 2.0, 2.0, 1.0).unwrap(), &pt).is_err());
    }

    #[test]
    fn mode_transform_is_canonical() {
        assert!(mode_transform_car_residual() < 1e-15);
    }

    #[test]
    fn trig_resummation() {
        for phi in [0.05, 0.2, 0.4, 0.51] {
            assert!(trig_resummation_residual(phi) < 1e-13);
        }
    }

    #[test]
    fn centre_of_mass_gaussian_has_zero_energy() {
        let om: f64 = 1.7;
        for big_x in [-1.0f64, 0.0, 0.8] {
            let g = (-0.5 * om * big_x * big_x).exp();
            let gj = [[g, -om * big_x * g, (om * om * big_x * big_x - om) * g], [0.0; 3]];
            let (h, q) = cm_super(om, big_x, &gj);
            assert!(h[0].abs() < 1e-14 && q[0].abs() < 1e-14);
        }
    }

    #[test]
    fn three_particle_case_agrees() {
        for (a, b, om) in [(2.0, 2.0, 1.0), (1.3, 0.9, 0.7)] {
            let p = ModelParams::new(3.0, a, b, om).unwrap();
            let rep = verify_cmw(&p, 10, 5).unwrap();
            assert!(rep.max_residual() < 1e-9, "{rep:?}");
        }
    }
}
