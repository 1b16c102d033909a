//! The eight generators as differential operators acting on a spinor jet
//! at a single point `(r, φ)`.

use super::superpotential::{angular_derivatives, angular_potential, radial_constant};
use super::GeneratorId;
use crate::fock::fermion_matrices;
use crate::model::{Jet, ModelParams, SpinorJet};

type Mat4 = [[f64; 4]; 4];

fn to_array(m: &crate::fock::FermionOp) -> Mat4 {
    let mut out = [[0.0; 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = m[(i, j)];
        }
    }
    out
}

fn mul(m: &Mat4, v: &[f64; 4]) -> [f64; 4] {
    let mut out = [0.0; 4];
    for i in 0..4 {
        out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2] + m[i][3] * v[3];
    }
    out
}

fn add_assign(a: &mut [f64; 4], b: &[f64; 4]) {
    for i in 0..4 {
        a[i] += b[i];
    }
}

/// Fermionic matrices in the unbarred basis, as plain arrays.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Modes {
    pub bx: Mat4,
    pub bx_dag: Mat4,
    pub by: Mat4,
    pub by_dag: Mat4,
}

impl Modes {
    pub fn new() -> Self {
        let f = fermion_matrices();
        Modes { bx: to_array(&f.bx), bx_dag: to_array(&f.bx_dag), by: to_array(&f.by), by_dag: to_array(&f.by_dag) }
    }
}

/// Everything about the point `(r, φ)` that the generators need.
#[derive(Debug, Clone)]
pub struct PointCtx {
    pub r: f64,
    pub phi: f64,
    pub omega: f64,
    cos: f64,
    sin: f64,
    /// `∂_r W` and `∂_φ W`.
    wr: f64,
    wphi: f64,
    /// `|∇W|² - ΔW`.
    bosonic_potential: f64,
    /// `ω² r² + k²/r² [a(a-1) sec² kφ + b(b-1) csc² kφ]`.
    hk_potential: f64,
    gamma: Mat4,
    y_diag: [f64; 4],
    modes: Modes,
}

impl PointCtx {
    pub fn new(p: &ModelParams, r: f64, phi: f64) -> Self {
        let (sin, cos) = phi.sin_cos();
        let c = radial_constant(p);
        let (f1, f2) = angular_derivatives(p.k, p.a, p.b, phi);
        let wr = c / r;
        let r2 = r * r;
        let modes = Modes::new();
        let gamma = gamma_cartesian(&modes, p.omega, r, phi, c, f1, f2);
        let mut y_diag = [0.0; 4];
        for (i, y) in y_diag.iter_mut().enumerate() {
            let nf = (i & 1) + ((i >> 1) & 1);
            *y = 0.5 * (c + nf as f64 - 1.0);
        }
        PointCtx {
            r,
            phi,
            omega: p.omega,
            cos,
            sin,
            wr,
            wphi: f1,
            bosonic_potential: (-f2 + f1 * f1 + c * c) / r2,
            hk_potential: p.omega * p.omega * r2 + angular_potential(p, phi) / r2,
            gamma,
            y_diag,
            modes,
        }
    }

    /// `-∂_x f` in polar form.
    fn minus_dx(&self, f: &Jet) -> f64 {
        -self.cos * f.r + self.sin / self.r * f.p
    }

    /// `-∂_y f` in polar form.
    fn minus_dy(&self, f: &Jet) -> f64 {
        -self.sin * f.r - self.cos / self.r * f.p
    }

    fn laplacian(&self, f: &Jet) -> f64 {
        f.rr + f.r / self.r + f.pp / (self.r * self.r)
    }

    fn wx(&self) -> f64 {
        self.cos * self.wr - self.sin / self.r * self.wphi
    }

    fn wy(&self) -> f64 {
        self.sin * self.wr + self.cos / self.r * self.wphi
    }

    fn values(psi: &SpinorJet) -> [f64; 4] {
        [psi[0].v, psi[1].v, psi[2].v, psi[3].v]
    }

    /// `(1/2√ω) Σ_i m_i (sd·(-∂_i) + ω x_i + sw·∂_i W)` with `m_i` the
    /// creation or annihilation matrices.
    fn odd(&self, psi: &SpinorJet, sd: f64, sw: f64, creators: bool) -> [f64; 4] {
        let wr = self.omega * self.r;
        let (wx, wy) = (self.wx(), self.wy());
        let mut ax = [0.0; 4];
        let mut ay = [0.0; 4];
        for o in 0..4 {
            ax[o] = sd * self.minus_dx(&psi[o]) + (wr * self.cos + sw * wx) * psi[o].v;
            ay[o] = sd * self.minus_dy(&psi[o]) + (wr * self.sin + sw * wy) * psi[o].v;
        }
        let (mx, my) =
            if creators { (&self.modes.bx_dag, &self.modes.by_dag) } else { (&self.modes.bx, &self.modes.by) };
        let mut out = mul(mx, &ax);
        add_assign(&mut out, &mul(my, &ay));
        let norm = 0.5 / self.omega.sqrt();
        out.map(|x| norm * x)
    }

    /// `D ψ = (1/4ω)[-Δψ + (|∇W|² - ΔW) ψ]`, componentwise.
    pub fn dilatation_part(&self, psi: &SpinorJet) -> [f64; 4] {
        let s = 0.25 / self.omega;
        let mut out = [0.0; 4];
        for o in 0..4 {
            out[o] = s * (-self.laplacian(&psi[o]) + self.bosonic_potential * psi[o].v);
        }
        out
    }

    /// `Γ ψ`, the fermionic Hessian term.
    pub fn gamma_part(&self, psi: &SpinorJet) -> [f64; 4] {
        mul(&self.gamma, &Self::values(psi))
    }

    pub fn apply(&self, id: GeneratorId, psi: &SpinorJet) -> [f64; 4] {
        let quarter = 0.25 * self.omega * self.r * self.r;
        match id {
            GeneratorId::K0 => {
                let d = self.dilatation_part(psi);
                let g = self.gamma_part(psi);
                std::array::from_fn(|o| d[o] + quarter * psi[o].v + g[o])
            }
            GeneratorId::KPlus | GeneratorId::KMinus => {
                let sign = if id == GeneratorId::KPlus { 1.0 } else { -1.0 };
                let d = self.dilatation_part(psi);
                let g = self.gamma_part(psi);
                std::array::from_fn(|o| {
                    -d[o] + quarter * psi[o].v - sign * 0.5 * (self.r * psi[o].r + psi[o].v) - g[o]
                })
            }
            GeneratorId::Y => std::array::from_fn(|o| self.y_diag[o] * psi[o].v),
            GeneratorId::VPlus => self.odd(psi, 1.0, -1.0, true),
            GeneratorId::VMinus => self.odd(psi, -1.0, 1.0, true),
            GeneratorId::WPlus => self.odd(psi, 1.0, 1.0, false),
            GeneratorId::WMinus => self.odd(psi, -1.0, -1.0, false),
        }
    }

    /// Bosonic Hamiltonian `H_k` applied componentwise.
    pub fn hamiltonian_bosonic(&self, psi: &SpinorJet) -> [f64; 4] {
        std::array::from_fn(|o| -self.laplacian(&psi[o]) + self.hk_potential * psi[o].v)
    }

    /// `H_k + 4ω(Γ + Y)`.
    pub fn hamiltonian_super_direct(&self, psi: &SpinorJet) -> [f64; 4] {
        let h = self.hamiltonian_bosonic(psi);
        let g = self.gamma_part(psi);
        let w = 4.0 * self.omega;
        std::array::from_fn(|o| h[o] + w * (g[o] + self.y_diag[o] * psi[o].v))
    }

    /// `4ω(K0 + Y)`.
    pub fn hamiltonian_super_weights(&self, psi: &SpinorJet) -> [f64; 4] {
        let k0 = self.apply(GeneratorId::K0, psi);
        let y = self.apply(GeneratorId::Y, psi);
        std::array::from_fn(|o| 4.0 * self.omega * (k0[o] + y[o]))
    }

    pub fn gamma_matrix(&self) -> [[f64; 4]; 4] {
        self.gamma
    }
}

/// `Γ = (1/2ω) Σ_ij ∂_ij W b†_i b_j` from the cartesian Hessian of
/// `W = C ln r + F(φ)`.
fn gamma_cartesian(m: &Modes, omega: f64, r: f64, phi: f64, c: f64, f1: f64, f2: f64) -> Mat4 {
    let (s, co) = phi.sin_cos();
    let r2 = r * r;
    let (wr, wrr) = (c / r, -c / r2);
    let hxx = co * co * wrr + s * s / r2 * f2 + s * s / r * wr + 2.0 * s * co / r2 * f1;
    let hxy = s * co * wrr - s * co / r2 * f2 - s * co / r * wr - (co * co - s * s) / r2 * f1;
    let hyy = s * s * wrr + co * co / r2 * f2 + co * co / r * wr - 2.0 * s * co / r2 * f1;
    let prod = |a: &Mat4, b: &Mat4| -> Mat4 {
        std::array::from_fn(|i| std::array::from_fn(|j| (0..4).map(|l| a[i][l] * b[l][j]).sum()))
    };
    let xx = prod(&m.bx_dag, &m.bx);
    let xy = prod(&m.bx_dag, &m.by);
    let yx = prod(&m.by_dag, &m.bx);
    let yy = prod(&m.by_dag, &m.by);
    let s2 = 0.5 / omega;
    std::array::from_fn(|i| {
        std::array::from_fn(|j| s2 * (hxx * xx[i][j] + hxy * (xy[i][j] + yx[i][j]) + hyy * yy[i][j]))
    })
}
