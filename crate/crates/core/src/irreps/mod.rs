//! Closed-form representation theory of the sectors: ladder coefficients,
//! fermionic states, the action of every generator on the super-basis,
//! Casimir operators and the irrep content of each sector.

mod states;

use std::collections::HashMap;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

pub use states::{
    mixing_coeffs, one_fermion_state, overlap, super_basis, two_fermion_state, v_action, v_norm_sq, zero_fermion_state,
    BasisState, Dir, Family,
};

use crate::error::{usage, Result};
use crate::generators::GeneratorId;
use crate::model::{weights_of, ModelParams};

/// `K_±` matrix element between consecutive states of a lowest-weight
/// `τ` irrep of the even subalgebra.
pub fn k_ladder_coeff(dir: Dir, tau: f64, big_n: usize) -> f64 {
    let nf = big_n as f64;
    match dir {
        Dir::Plus => ((nf + 1.0) * (2.0 * tau + nf)).sqrt(),
        Dir::Minus => (nf * (2.0 * tau + nf - 1.0)).sqrt(),
    }
}

/// Second- and third-order Casimir eigenvalues on sector `n`.
pub fn casimir_eigenvalues(p: &ModelParams, n: usize) -> (f64, f64) {
    let nf = n as f64;
    let base = nf * (nf + p.a + p.b) * p.k * p.k;
    (base, -0.5 * (p.a + p.b) * base * p.k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IrrepKind {
    /// Shortened lowest-weight irrep with `τ = -q`, holding the ground state.
    AtypicalLws,
    NonLws,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IrrepLabel {
    pub n: usize,
    pub kind: IrrepKind,
    /// `(τ, q)` lowest weights of the even-subalgebra blocks.
    pub blocks: Vec<(f64, f64)>,
    /// Eigenvalue `(2n+a+b)²k²` of the angular integral of motion.
    pub x_k: f64,
}

pub fn classify(p: &ModelParams, n: usize) -> IrrepLabel {
    let w = weights_of(p, n);
    let (tau, q) = (w.tau, w.q);
    let (kind, blocks) = if n == 0 {
        (IrrepKind::AtypicalLws, vec![(tau, q), (tau + 0.5, q + 0.5)])
    } else {
        (IrrepKind::NonLws, vec![(tau, q), (tau - 0.5, q + 0.5), (tau + 0.5, q + 0.5), (tau, q + 1.0)])
    };
    let x = p.radial_exponent(n);
    IrrepLabel { n, kind, blocks, x_k: x * x }
}

/// `(C2, C3)` from the eight generator matrices (indexed by
/// [`GeneratorId::index`]).
pub fn casimir_matrices(mats: &[DMatrix<f64>]) -> Result<(DMatrix<f64>, DMatrix<f64>)> {
    if mats.len() < 8 {
        return usage(format!("expected eight generator matrices, got {}", mats.len()));
    }
    let dim = mats[0].nrows();
    if mats.iter().any(|m| m.nrows() != dim || m.ncols() != dim) {
        return usage("generator matrices must share one square shape");
    }
    let g = |id: GeneratorId| &mats[id.index()];
    use GeneratorId::*;
    let id = DMatrix::<f64>::identity(dim, dim);
    let (k0, y) = (g(K0), g(Y));
    let kk = g(KPlus) * g(KMinus);
    let c2 = k0 * (k0 - &id) - y * (y + &id) - &kk + g(VMinus) * g(WPlus) - g(VPlus) * g(WMinus);
    let yh = y + &id * 0.5;
    let c3 = (k0 + y) * (k0 - y - &id) * &yh - &yh * &kk
        + (g(KMinus) * g(VPlus) - (k0 - y * 3.0) * g(VMinus)) * g(WPlus) * 0.5
        + (g(KPlus) * g(VMinus) - (k0 + y * 3.0) * g(VPlus)) * g(WMinus) * 0.5;
    Ok((c2, c3))
}

/// Named unit vectors within one sector: the zero-fermion state, the
/// normalized `V_-` and `V_+` images of it, and the two-fermion state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Abstract {
    Z(i64),
    M(i64),
    P(i64),
    T(i64),
}

struct SectorAlgebra<'a> {
    p: &'a ModelParams,
    n: usize,
    tau: f64,
    q: f64,
    nmax: i64,
    index: &'a HashMap<(usize, Family, usize), usize>,
}

impl SectorAlgebra<'_> {
    fn mu(&self, big_n: i64) -> f64 {
        if big_n < 0 {
            0.0
        } else {
            v_norm_sq(Dir::Minus, self.p, big_n as usize, self.n).sqrt()
        }
    }

    fn pi(&self, big_n: i64) -> f64 {
        if big_n < 0 {
            0.0
        } else {
            v_norm_sq(Dir::Plus, self.p, big_n as usize, self.n).sqrt()
        }
    }

    fn mix(&self) -> f64 {
        (self.n as f64 * self.p.k * self.p.shifted_exponent(self.n)).sqrt()
    }

    fn c(&self, dir: Dir, big_n: i64) -> f64 {
        if big_n < 0 {
            0.0
        } else {
            k_ladder_coeff(dir, self.tau, big_n as usize)
        }
    }

    fn decompose(&self, family: Family, big_n: usize) -> Vec<(f64, Abstract)> {
        let nn = big_n as i64;
        match family {
            Family::Zero => vec![(1.0, Abstract::Z(nn))],
            Family::Two => vec![(1.0, Abstract::T(nn))],
            Family::Plus if self.n == 0 => vec![(1.0, Abstract::P(nn))],
            Family::Minus => {
                let (al, be, _, _) = mixing_coeffs(self.p, big_n, self.n).expect("n >= 1");
                vec![(al, Abstract::M(nn)), (be, Abstract::P(nn - 1))]
            }
            Family::Plus => {
                let (_, _, ga, de) = mixing_coeffs(self.p, big_n, self.n).expect("n >= 1");
                vec![(ga, Abstract::M(nn + 1)), (de, Abstract::P(nn))]
            }
        }
    }

    fn apply(&self, g: GeneratorId, v: Abstract) -> Vec<(f64, Abstract)> {
        use Abstract::*;
        use GeneratorId::*;
        let (tau, q) = (self.tau, self.q);
        let s = self.mix();
        let cp = |n| self.c(Dir::Plus, n);
        let cm = |n| self.c(Dir::Minus, n);
        match (g, v) {
            (K0, Z(n)) | (K0, T(n)) => vec![(tau + n as f64, v)],
            (K0, M(n)) => vec![(tau + n as f64 - 0.5, v)],
            (K0, P(n)) => vec![(tau + n as f64 + 0.5, v)],
            (Y, Z(_)) => vec![(q, v)],
            (Y, M(_)) | (Y, P(_)) => vec![(q + 0.5, v)],
            (Y, T(_)) => vec![(q + 1.0, v)],
            (KPlus, Z(n)) => vec![(cp(n), Z(n + 1))],
            (KPlus, T(n)) => vec![(cp(n), T(n + 1))],
            (KPlus, P(n)) => vec![(cp(n) * self.pi(n + 1) / self.pi(n), P(n + 1))],
            (KPlus, M(n)) => {
                vec![(cp(n) * self.mu(n + 1) / self.mu(n), M(n + 1)), (-self.pi(n) / self.mu(n), P(n))]
            }
            (KMinus, Z(n)) => vec![(cm(n), Z(n - 1))],
            (KMinus, T(n)) => vec![(cm(n), T(n - 1))],
            (KMinus, M(n)) => vec![(cm(n) * self.mu(n - 1) / self.mu(n), M(n - 1))],
            (KMinus, P(n)) => {
                vec![(cm(n) * self.pi(n - 1) / self.pi(n), P(n - 1)), (self.mu(n) / self.pi(n), M(n))]
            }
            (VPlus, Z(n)) => vec![(self.pi(n), P(n))],
            (VPlus, M(n)) => vec![(s / self.mu(n), T(n))],
            (VMinus, Z(n)) => vec![(self.mu(n), M(n))],
            (VMinus, P(n)) => vec![(-s / self.pi(n), T(n))],
            (VPlus, _) | (VMinus, _) => vec![],
            (WPlus, Z(_)) | (WMinus, Z(_)) => vec![],
            (WPlus, P(n)) => vec![(cp(n) / self.pi(n), Z(n + 1))],
            (WPlus, M(n)) => vec![((tau + n as f64 + q) / self.mu(n), Z(n))],
            (WPlus, T(n)) => vec![
                (cp(n) * self.mu(n + 1) / s, M(n + 1)),
                (-(1.0 + tau + n as f64 + q) * self.pi(n) / s, P(n)),
            ],
            (WMinus, P(n)) => vec![((tau + n as f64 - q) / self.pi(n), Z(n))],
            (WMinus, M(n)) => vec![(cm(n) / self.mu(n), Z(n - 1))],
            (WMinus, T(n)) => vec![
                ((tau + n as f64 - q - 1.0) * self.mu(n) / s, M(n)),
                (-cm(n) * self.pi(n - 1) / s, P(n - 1)),
            ],
        }
    }

    fn slot(&self, family: Family, big_n: i64) -> Option<usize> {
        if big_n < 0 || big_n > self.nmax {
            return None;
        }
        self.index.get(&(self.n, family, big_n as usize)).copied()
    }

    /// Adds `c · v` to `out` in basis coordinates. Vectors above the
    /// truncation are dropped.
    fn embed(&self, c: f64, v: Abstract, out: &mut [f64]) {
        let mut put = |family, big_n: i64, x: f64| {
            if let Some(i) = self.slot(family, big_n) {
                out[i] += x;
            }
        };
        match v {
            Abstract::Z(n) => put(Family::Zero, n, c),
            Abstract::T(n) => put(Family::Two, n, c),
            Abstract::P(n) if self.n == 0 => put(Family::Plus, n, c),
            // at n = 0 the normalized V_- image coincides with the V_+ image one level down
            Abstract::M(n) if self.n == 0 => put(Family::Plus, n - 1, c),
            Abstract::M(0) => {
                let (al, _, _, _) = mixing_coeffs(self.p, 0, self.n).expect("n >= 1");
                put(Family::Minus, 0, c / al);
            }
            Abstract::M(n) | Abstract::P(n) => {
                // level shared by M(m+1) and P(m)
                let m = if let Abstract::M(_) = v { n - 1 } else { n };
                if m < 0 {
                    return;
                }
                let (al, be, _, _) = mixing_coeffs(self.p, (m + 1) as usize, self.n).expect("n >= 1");
                let (_, _, ga, de) = mixing_coeffs(self.p, m as usize, self.n).expect("n >= 1");
                let det = al * de - be * ga;
                // [Minus_{m+1}; Plus_m] = [[al, be], [ga, de]] [M; P]
                let (to_minus, to_plus) = match v {
                    Abstract::M(_) => (de / det, -be / det),
                    _ => (-ga / det, al / det),
                };
                put(Family::Minus, m + 1, c * to_minus);
                put(Family::Plus, m, c * to_plus);
            }
        }
    }
}

/// Matrices of the eight generators on `basis` (as built by
/// [`super_basis`] with radial labels up to `nmax_radial`) from the
/// closed-form ladder actions. Columns whose images leave the truncation
/// are cut off there.
pub fn closed_form_matrices(p: &ModelParams, basis: &[BasisState], nmax_radial: usize) -> Vec<DMatrix<f64>> {
    let dim = basis.len();
    let index: HashMap<(usize, Family, usize), usize> =
        basis.iter().enumerate().map(|(i, b)| ((b.sector, b.family, b.radial), i)).collect();
    let mut mats: Vec<DMatrix<f64>> = (0..8).map(|_| DMatrix::zeros(dim, dim)).collect();
    for (j, b) in basis.iter().enumerate() {
        let w = weights_of(p, b.sector);
        let alg = SectorAlgebra { p, n: b.sector, tau: w.tau, q: w.q, nmax: nmax_radial as i64, index: &index };
        let mut parts = alg.decompose(b.family, b.radial);
        parts.retain(|(c, _)| *c != 0.0);
        for g in GeneratorId::ALL {
            let mut col = vec![0.0; dim];
            for &(c, v) in &parts {
                for (d, img) in alg.apply(g, v) {
                    if c * d != 0.0 {
                        alg.embed(c * d, img, &mut col);
                    }
                }
            }
            for (i, x) in col.into_iter().enumerate() {
                mats[g.index()][(i, j)] = x;
            }
        }
    }
    mats
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::check_structure_constants;

    #[test]
    fn ladder_examples() {
        assert_eq!(k_ladder_coeff(Dir::Minus, 2.3, 0), 0.0);
        assert!((k_ladder_coeff(Dir::Plus, 1.5, 0) - 3f64.sqrt()).abs() < 1e-15);
        for big_n in 0..8 {
            let tau = 1.7;
            let d = k_ladder_coeff(Dir::Plus, tau, big_n).powi(2) - k_ladder_coeff(Dir::Minus, tau, big_n).powi(2);
            assert!((d - (2.0 * tau + 2.0 * big_n as f64)).abs() < 1e-12);
        }
    }

    #[test]
    fn casimir_examples() {
        let p = ModelParams::new(2.0, 1.0, 1.0, 1.0).unwrap();
        assert_eq!(casimir_eigenvalues(&p, 0), (0.0, 0.0));
        let (c2, c3) = casimir_eigenvalues(&p, 1);
        assert!((c2 - 12.0).abs() < 1e-12 && (c3 + 24.0).abs() < 1e-12);
        let p = ModelParams::new(3.0, 1.5, 0.7, 1.0).unwrap();
        let (c2, c3) = casimir_eigenvalues(&p, 2);
        let want = 2.0 * 4.2 * 9.0;
        assert!((c2 - want).abs() < 1e-12 && (c3 + 0.5 * 2.2 * want * 3.0).abs() < 1e-10);
    }

    #[test]
    fn classify_examples() {
        let p = ModelParams::new(2.0, 1.0, 1.0, 1.0).unwrap();
        let l0 = classify(&p, 0);
        assert_eq!(l0.kind, IrrepKind::AtypicalLws);
        assert_eq!(l0.blocks.len(), 2);
        assert!((l0.blocks[0].0 + l0.blocks[0].1).abs() < 1e-14);
        let l1 = classify(&p, 1);
        assert_eq!(l1.kind, IrrepKind::NonLws);
        assert_eq!(l1.blocks.len(), 4);
        assert!((l1.x_k - 64.0).abs() < 1e-12);
    }

    #[test]
    fn closed_form_obeys_relations() {
        for (k, a, b) in [(1.0, 1.0, 1.0), (2.0, 1.5, 2.5), (std::f64::consts::SQRT_2, 1.2, 0.8)] {
            let p = ModelParams::new(k, a, b, 1.0).unwrap();
            let (nmax, smax) = (5, 3);
            let basis = super_basis(&p, nmax, smax);
            let mats = closed_form_matrices(&p, &basis, nmax);
            let top = |s| weights_of(&p, s).tau + nmax as f64;
            let interior: Vec<bool> = basis.iter().map(|b| b.k0 + 1.0 <= top(b.sector) + 1e-9).collect();
            let rep = check_structure_constants(&mats, &interior);
            assert!(rep.max_residual < 1e-12, "k={k}: {:?}", rep.worst());
            let interior2: Vec<bool> = basis.iter().map(|b| b.k0 + 2.0 <= top(b.sector) + 1e-9).collect();
            let (c2, c3) = casimir_matrices(&mats).unwrap();
            for (j, bj) in basis.iter().enumerate().filter(|(j, _)| interior2[*j]) {
                let (e2, e3) = casimir_eigenvalues(&p, bj.sector);
                for i in 0..basis.len() {
                    let d = if i == j { 1.0 } else { 0.0 };
                    assert!((c2[(i, j)] - e2 * d).abs() < 1e-9, "C2 at ({i},{j})");
                    assert!((c3[(i, j)] - e3 * d).abs() < 1e-9, "C3 at ({i},{j})");
                }
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn ladder_coefficients_close_the_even_algebra(tau in 0.5f64..20.0, big_n in 0usize..40) {
            // ⟨N|[K+, K-]|N⟩ = -2(τ + N), and K- undoes K+
            let up = k_ladder_coeff(Dir::Plus, tau, big_n);
            let down = k_ladder_coeff(Dir::Minus, tau, big_n);
            let comm = down * down - up * up;
            proptest::prop_assert!((comm + 2.0 * (tau + big_n as f64)).abs() < 1e-10 * (tau + big_n as f64));
            proptest::prop_assert!((k_ladder_coeff(Dir::Minus, tau, big_n + 1) - up).abs() < 1e-12 * up.max(1.0));
        }

        #[test]
        fn overlap_is_a_cosine(k in 0.2f64..4.0, a in 0.6f64..3.0, b in 0.6f64..3.0, big_n in 1usize..30, n in 0usize..10) {
            let p = ModelParams::new(k, a, b, 1.0).unwrap();
            let o = overlap(&p, big_n, n).unwrap();
            proptest::prop_assert!(o > 0.0 && o <= 1.0 + 1e-15);
            if n == 0 {
                proptest::prop_assert!((o - 1.0).abs() < 1e-14);
            }
        }
    }
}
