//! The eight superalgebra generators as differential operators in polar
//! coordinates, their matrices on a truncated basis, the structure-constant
//! checks, and an independent boson–fermion oscillator realization.

mod catalog;
mod matrices;
mod oscillator;
mod pointwise;
mod structure;
mod superpotential;

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::model::{ModelParams, QuadGrid, SpinorField, SpinorJet};

pub use catalog::{BasisCache, CatalogState, CatalogTerm, RadialKind};
pub use matrices::{generator_matrices, matrix_of, BasisInfo, GeneratorMatrices, MatrixOptions, HAMILTONIAN_SLOT};
pub use oscillator::{oscillator_realization, OscillatorRealization};
pub use pointwise::PointCtx;
pub use structure::{
    check_structure_constants, hermiticity_residual, relations, Relation, RelationKind, RelationResidual, StructureReport,
};
pub use superpotential::{
    angular_derivatives, angular_potential, radial_constant, riccati_residual, riccati_residual_with, superpotential,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GeneratorId {
    K0,
    KPlus,
    KMinus,
    Y,
    VPlus,
    VMinus,
    WPlus,
    WMinus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl GeneratorId {
    pub const ALL: [GeneratorId; 8] = [
        GeneratorId::K0,
        GeneratorId::KPlus,
        GeneratorId::KMinus,
        GeneratorId::Y,
        GeneratorId::VPlus,
        GeneratorId::VMinus,
        GeneratorId::WPlus,
        GeneratorId::WMinus,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn parity(self) -> Parity {
        match self {
            GeneratorId::K0 | GeneratorId::KPlus | GeneratorId::KMinus | GeneratorId::Y => Parity::Even,
            _ => Parity::Odd,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GeneratorId::K0 => "K0",
            GeneratorId::KPlus => "K+",
            GeneratorId::KMinus => "K-",
            GeneratorId::Y => "Y",
            GeneratorId::VPlus => "V+",
            GeneratorId::VMinus => "V-",
            GeneratorId::WPlus => "W+",
            GeneratorId::WMinus => "W-",
        }
    }

    /// Hermitian conjugate.
    pub fn adjoint(self) -> GeneratorId {
        match self {
            GeneratorId::KPlus => GeneratorId::KMinus,
            GeneratorId::KMinus => GeneratorId::KPlus,
            GeneratorId::VPlus => GeneratorId::WMinus,
            GeneratorId::VMinus => GeneratorId::WPlus,
            GeneratorId::WPlus => GeneratorId::VMinus,
            GeneratorId::WMinus => GeneratorId::VPlus,
            g => g,
        }
    }
}

/// Samples `f(ctx, jet)` for `state` at every node of `grid`.
pub fn sample_with(
    p: &ModelParams,
    state: &CatalogState,
    grid: &Arc<QuadGrid>,
    f: impl Fn(&PointCtx, &SpinorJet) -> [f64; 4] + Sync,
) -> SpinorField {
    let values = (0..grid.len())
        .into_par_iter()
        .map_init(BasisCache::new, |cache, i| {
            cache.clear();
            let (r, phi) = (grid.r[i], grid.phi[i]);
            let jet = state.jet_at(p, r, phi, cache);
            f(&PointCtx::new(p, r, phi), &jet)
        })
        .collect();
    SpinorField { grid: Arc::clone(grid), values }
}

/// The field of `state` itself.
pub fn sample_state(p: &ModelParams, state: &CatalogState, grid: &Arc<QuadGrid>) -> SpinorField {
    let values = (0..grid.len())
        .into_par_iter()
        .map_init(BasisCache::new, |cache, i| {
            cache.clear();
            let jet = state.jet_at(p, grid.r[i], grid.phi[i], cache);
            [jet[0].v, jet[1].v, jet[2].v, jet[3].v]
        })
        .collect();
    SpinorField { grid: Arc::clone(grid), values }
}

pub fn apply_generator(id: GeneratorId, state: &CatalogState, p: &ModelParams, grid: &Arc<QuadGrid>) -> SpinorField {
    sample_with(p, state, grid, |ctx, jet| ctx.apply(id, jet))
}

/// Which of the two equivalent forms of the super-Hamiltonian to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HamiltonianForm {
    /// `H_k + 4ω(Γ + Y)`.
    BosonicPlusFermionic,
    /// `4ω(K0 + Y)`.
    Weights,
}

pub fn hamiltonian_super(
    p: &ModelParams,
    state: &CatalogState,
    grid: &Arc<QuadGrid>,
    form: HamiltonianForm,
) -> SpinorField {
    match form {
        HamiltonianForm::BosonicPlusFermionic => sample_with(p, state, grid, |c, j| c.hamiltonian_super_direct(j)),
        HamiltonianForm::Weights => sample_with(p, state, grid, |c, j| c.hamiltonian_super_weights(j)),
    }
}

/// `(Q ψ, Q† ψ)` with `Q = 2√ω W_+` and `Q† = 2√ω V_-`.
pub fn supercharges(p: &ModelParams, state: &CatalogState, grid: &Arc<QuadGrid>) -> (SpinorField, SpinorField) {
    let s = 2.0 * p.omega.sqrt();
    let q = apply_generator(GeneratorId::WPlus, state, p, grid).scaled(s);
    let qd = apply_generator(GeneratorId::VMinus, state, p, grid).scaled(s);
    (q, qd)
}
