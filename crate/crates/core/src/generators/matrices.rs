//! Matrix elements `⟨B_i | G | B_j⟩` of the generators on a truncated
//! orthonormal basis, by quadrature.
//!
//! Same-sector blocks are integrated on that sector's grid, where the
//! integrands are polynomial against the rule weights. Blocks between
//! different sectors vanish by angular orthogonality alone, which a much
//! smaller grid already resolves exactly, so they use a coarse grid of the
//! lower sector.

use std::sync::Arc;

use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{BasisCache, GeneratorId, PointCtx};
use crate::error::Result;
use crate::irreps::{super_basis, BasisState, Family};
use crate::model::{weights_of, ModelParams, QuadGrid};

/// Number of operators assembled: the eight generators plus the
/// super-Hamiltonian in its bosonic-plus-fermionic form.
const N_OPS: usize = 9;
pub const HAMILTONIAN_SLOT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MatrixOptions {
    pub radial_order: usize,
    pub angular_order: usize,
    /// Order of both rules on the grids used for cross-sector blocks.
    pub cross_order: usize,
    pub cross_sector: bool,
}

impl Default for MatrixOptions {
    fn default() -> Self {
        MatrixOptions { radial_order: 80, angular_order: 80, cross_order: 32, cross_sector: true }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BasisInfo {
    pub sector: usize,
    pub family: Family,
    pub radial: usize,
    pub k0: f64,
    pub y: f64,
}

#[derive(Debug, Clone)]
pub struct GeneratorMatrices {
    pub params: ModelParams,
    pub nmax_radial: usize,
    pub nmax_sector: usize,
    pub basis: Vec<BasisInfo>,
    pub gram: DMatrix<f64>,
    /// Indexed by [`GeneratorId::index`]; slot [`HAMILTONIAN_SLOT`] holds
    /// `H_k + 4ω(Γ + Y)`.
    pub mats: Vec<DMatrix<f64>>,
    /// Per operator, the largest pointwise deviation between `G B_j` and the
    /// supplied reference expansion `Σ_i R_ij B_i`, over interior columns.
    pub reference_residual: Option<Vec<f64>>,
}

impl GeneratorMatrices {
    pub fn get(&self, id: GeneratorId) -> &DMatrix<f64> {
        &self.mats[id.index()]
    }

    pub fn hamiltonian(&self) -> &DMatrix<f64> {
        &self.mats[HAMILTONIAN_SLOT]
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Highest `K0` eigenvalue up to which each sector's truncated basis is
    /// complete.
    pub fn top_level(&self, sector: usize) -> f64 {
        weights_of(&self.params, sector).tau + self.nmax_radial as f64
    }

    /// Columns whose images under any product of `depth` generators stay
    /// inside the truncation (each generator raises `K0` by at most 1).
    pub fn interior(&self, depth: usize) -> Vec<bool> {
        self.basis.iter().map(|b| b.k0 + depth as f64 <= self.top_level(b.sector) + 1e-9).collect()
    }
}

/// Matrix of one generator; see [`generator_matrices`].
pub fn matrix_of(
    id: GeneratorId,
    p: &ModelParams,
    truncation: (usize, usize),
    opts: &MatrixOptions,
) -> Result<DMatrix<f64>> {
    let basis = super_basis(p, truncation.0, truncation.1);
    let m = generator_matrices(p, &basis, truncation.0, opts, None)?;
    Ok(m.get(id).clone())
}

struct Acc {
    gram: DMatrix<f64>,
    mats: Vec<DMatrix<f64>>,
    ref_res: Vec<f64>,
}

impl Acc {
    fn new(rows: usize, cols: usize) -> Self {
        Acc {
            gram: DMatrix::zeros(rows, cols),
            mats: (0..N_OPS).map(|_| DMatrix::zeros(rows, cols)).collect(),
            ref_res: vec![0.0; N_OPS],
        }
    }

    fn merge(mut self, o: Acc) -> Acc {
        self.gram += o.gram;
        for (a, b) in self.mats.iter_mut().zip(o.mats) {
            *a += b;
        }
        for (a, b) in self.ref_res.iter_mut().zip(o.ref_res) {
            *a = a.max(b);
        }
        self
    }
}

fn dot4(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]
}

/// Values and operator images of `states` at one point.
fn evaluate(
    p: &ModelParams,
    states: &[&BasisState],
    r: f64,
    phi: f64,
    cache: &mut BasisCache,
) -> (Vec<[f64; 4]>, Vec<Vec<[f64; 4]>>) {
    cache.clear();
    let ctx = PointCtx::new(p, r, phi);
    let mut vals = Vec::with_capacity(states.len());
    let mut imgs: Vec<Vec<[f64; 4]>> = (0..N_OPS).map(|_| Vec::with_capacity(states.len())).collect();
    for s in states {
        let jet = s.state.jet_at(p, r, phi, cache);
        vals.push([jet[0].v, jet[1].v, jet[2].v, jet[3].v]);
        for g in GeneratorId::ALL {
            imgs[g.index()].push(ctx.apply(g, &jet));
        }
        imgs[HAMILTONIAN_SLOT].push(ctx.hamiltonian_super_direct(&jet));
    }
    (vals, imgs)
}

/// `⟨rows_i | G | cols_j⟩` for all operators on `grid`; when `reference`
/// is given (as the block of coefficients within this sector), the
/// pointwise deviation of interior columns from their reference
/// expansions is recorded too.
fn assemble_block(
    p: &ModelParams,
    grid: &Arc<QuadGrid>,
    rows: &[&BasisState],
    cols: &[&BasisState],
    reference: Option<(&[DMatrix<f64>], &[bool])>,
) -> Acc {
    let same = std::ptr::eq(rows.as_ptr(), cols.as_ptr()) && rows.len() == cols.len();
    let (nr, nc) = (rows.len(), cols.len());
    let chunk = 64;
    let n_chunks = grid.len().div_ceil(chunk);
    // per-chunk partial sums merged in chunk order, so results do not depend
    // on thread scheduling
    let partials: Vec<Acc> = (0..n_chunks)
        .into_par_iter()
        .map_init(BasisCache::new, |cache, c| {
            let mut acc = Acc::new(nr, nc);
            for i in c * chunk..((c + 1) * chunk).min(grid.len()) {
                let (r, phi, w) = (grid.r[i], grid.phi[i], grid.weight[i]);
                let (cv, ci) = evaluate(p, cols, r, phi, cache);
                let rv = if same { cv.clone() } else { evaluate(p, rows, r, phi, cache).0 };
                for a in 0..nr {
                    let wa = rv[a].map(|x| w * x);
                    for b in 0..nc {
                        acc.gram[(a, b)] += dot4(&wa, &cv[b]);
                        for (m, img) in acc.mats.iter_mut().zip(&ci) {
                            m[(a, b)] += dot4(&wa, &img[b]);
                        }
                    }
                }
                if let Some((refs, interior)) = reference {
                    for (op, refm) in refs.iter().enumerate() {
                        for b in 0..nc {
                            if !interior[b] {
                                continue;
                            }
                            let mut f = [0.0; 4];
                            for a in 0..nr {
                                let c = refm[(a, b)];
                                if c != 0.0 {
                                    for o in 0..4 {
                                        f[o] += c * rv[a][o];
                                    }
                                }
                            }
                            let d = (0..4).map(|o| (f[o] - ci[op][b][o]).abs()).fold(0.0, f64::max);
                            acc.ref_res[op] = acc.ref_res[op].max(d);
                        }
                    }
                }
            }
            acc
        })
        .collect();
    partials.into_iter().fold(Acc::new(nr, nc), Acc::merge)
}

/// Assembles the generator matrices on `basis` (as produced by
/// [`super_basis`]). `reference`, if given, holds for each of the eight
/// generators a full-size coefficient matrix whose column `j` is the
/// expected expansion of `G B_j`; the result then records the pointwise
/// field deviation over interior columns.
pub fn generator_matrices(
    p: &ModelParams,
    basis: &[BasisState],
    nmax_radial: usize,
    opts: &MatrixOptions,
    reference: Option<&[DMatrix<f64>]>,
) -> Result<GeneratorMatrices> {
    p.validate()?;
    let dim = basis.len();
    let nmax_sector = basis.iter().map(|b| b.sector).max().unwrap_or(0);
    let info: Vec<BasisInfo> = basis
        .iter()
        .map(|b| BasisInfo { sector: b.sector, family: b.family, radial: b.radial, k0: b.k0, y: b.y })
        .collect();
    let mut out = GeneratorMatrices {
        params: *p,
        nmax_radial,
        nmax_sector,
        basis: info,
        gram: DMatrix::zeros(dim, dim),
        mats: (0..N_OPS).map(|_| DMatrix::zeros(dim, dim)).collect(),
        reference_residual: reference.map(|_| vec![0.0; GeneratorId::ALL.len()]),
    };
    let interior = out.interior(1);
    let sectors: Vec<Vec<usize>> =
        (0..=nmax_sector).map(|n| (0..dim).filter(|&i| basis[i].sector == n).collect()).collect();

    for (n, idx) in sectors.iter().enumerate() {
        if idx.is_empty() {
            continue;
        }
        let grid = QuadGrid::new(p, n, opts.radial_order, opts.angular_order)?;
        let states: Vec<&BasisState> = idx.iter().map(|&i| &basis[i]).collect();
        let local_refs: Option<Vec<DMatrix<f64>>> =
            reference.map(|refs| refs.iter().map(|m| m.select_rows(idx).select_columns(idx)).collect());
        let local_interior: Vec<bool> = idx.iter().map(|&i| interior[i]).collect();
        let acc = assemble_block(
            p,
            &grid,
            &states,
            &states,
            local_refs.as_ref().map(|r| (r.as_slice(), local_interior.as_slice())),
        );
        scatter(&mut out, &acc, idx, idx);
        if let Some(res) = out.reference_residual.as_mut() {
            for (a, b) in res.iter_mut().zip(&acc.ref_res) {
                *a = a.max(*b);
            }
        }
    }

    if opts.cross_sector {
        for n in 0..=nmax_sector {
            for m in n + 1..=nmax_sector {
                let (rows, cols) = (&sectors[n], &sectors[m]);
                if rows.is_empty() || cols.is_empty() {
                    continue;
                }
                let grid = QuadGrid::new(p, n, opts.cross_order, opts.cross_order)?;
                let rs: Vec<&BasisState> = rows.iter().map(|&i| &basis[i]).collect();
                let cs: Vec<&BasisState> = cols.iter().map(|&i| &basis[i]).collect();
                let acc = assemble_block(p, &grid, &rs, &cs, None);
                scatter(&mut out, &acc, rows, cols);
                let acc = assemble_block(p, &grid, &cs, &rs, None);
                scatter(&mut out, &acc, cols, rows);
            }
        }
    }
    Ok(out)
}

fn scatter(out: &mut GeneratorMatrices, acc: &Acc, rows: &[usize], cols: &[usize]) {
    for (a, &i) in rows.iter().enumerate() {
        for (b, &j) in cols.iter().enumerate() {
            out.gram[(i, j)] = acc.gram[(a, b)];
            for (m, src) in out.mats.iter_mut().zip(&acc.mats) {
                m[(i, j)] = src[(a, b)];
            }
        }
    }
}
