//! Finite expansions over separable basis functions times barred fermion
//! occupations.
//!
//! A term is `coeff · R(r) · A(φ) · |occ⟩` where `R` is the unit-normed
//! `r^β L_j^{(β)}(ωr²) e^{-ωr²/2}` with `β = (2n+a+b)k` (standard) or one
//! less (lowered), `A` is the unit-normed angular function with couplings
//! `(a+s, b+s)` and index `n-s` for shift `s ∈ {0, 1}`, and `|occ⟩` is built
//! from the barred creation operators. Negative indices stand for the zero
//! function.

use serde::{Deserialize, Serialize};

use crate::fock::Occupation;
use crate::model::{angular_basis, radial_basis, Jet, ModelParams, SpinorJet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RadialKind {
    Standard,
    Lowered,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CatalogTerm {
    pub coeff: f64,
    pub radial_index: i64,
    pub radial_kind: RadialKind,
    pub sector: usize,
    pub angular_shift: u8,
    pub occ: Occupation,
}

impl CatalogTerm {
    pub fn angular_index(&self) -> i64 {
        self.sector as i64 - self.angular_shift as i64
    }

    pub fn is_null(&self) -> bool {
        self.radial_index < 0 || self.angular_index() < 0
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct CatalogState {
    pub terms: Vec<CatalogTerm>,
}

impl CatalogState {
    pub fn empty() -> Self {
        CatalogState { terms: Vec::new() }
    }

    pub fn push(&mut self, t: CatalogTerm) {
        debug_assert!(!t.is_null() || t.coeff == 0.0, "null catalog term with nonzero coefficient");
        if !t.is_null() && t.coeff != 0.0 {
            self.terms.push(t);
        }
    }

    /// `Σ c_i s_i`.
    pub fn combine(parts: &[(f64, &CatalogState)]) -> Self {
        let mut out = CatalogState::empty();
        for (c, s) in parts {
            for t in &s.terms {
                out.push(CatalogTerm { coeff: c * t.coeff, ..*t });
            }
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Unbarred spinor jet at `(r, φ)`.
    pub fn jet_at(&self, p: &ModelParams, r: f64, phi: f64, cache: &mut BasisCache) -> SpinorJet {
        let occ_jets = occupation_jets(phi);
        let mut out = [Jet::ZERO; 4];
        for t in &self.terms {
            let scalar = cache.term_jet(p, t, r, phi).scale(t.coeff);
            let occ = &occ_jets[t.occ.index()];
            for (o, oj) in occ.iter().enumerate() {
                if let Some(oj) = oj {
                    out[o] += scalar * *oj;
                }
            }
        }
        out
    }
}

/// Unbarred components, as jets in `φ`, of the four barred occupation
/// states; `None` marks identically vanishing components.
fn occupation_jets(phi: f64) -> [[Option<Jet>; 4]; 4] {
    let (s, c) = phi.sin_cos();
    let one = Some(Jet::angular(1.0, 0.0, 0.0));
    let cj = Jet::angular(c, -s, -c);
    let sj = Jet::angular(s, c, -s);
    [
        [one, None, None, None],
        [None, Some(cj), Some(sj), None],
        [None, Some(-sj), Some(cj), None],
        [None, None, None, one],
    ]
}

/// Per-point memo of radial and angular basis jets. Call
/// [`BasisCache::clear`] whenever the point changes.
#[derive(Debug, Default)]
pub struct BasisCache {
    radial: Vec<Option<[f64; 3]>>,
    angular: Vec<Option<[f64; 3]>>,
}

const RADIAL_STRIDE: usize = 64;

impl BasisCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn clear(&mut self) {
        self.radial.iter_mut().for_each(|x| *x = None);
        self.angular.iter_mut().for_each(|x| *x = None);
    }

    fn term_jet(&mut self, p: &ModelParams, t: &CatalogTerm, r: f64, phi: f64) -> Jet {
        let lowered = t.radial_kind == RadialKind::Lowered;
        let j = t.radial_index as usize;
        let compute_radial = || {
            let beta = p.radial_exponent(t.sector) - if lowered { 1.0 } else { 0.0 };
            radial_basis(beta, j, p.omega, r)
        };
        let rad = if j < RADIAL_STRIDE {
            let idx = (2 * t.sector + lowered as usize) * RADIAL_STRIDE + j;
            if idx >= self.radial.len() {
                self.radial.resize(idx + 1, None);
            }
            *self.radial[idx].get_or_insert_with(compute_radial)
        } else {
            compute_radial()
        };
        let aidx = 2 * t.sector + t.angular_shift as usize;
        if aidx >= self.angular.len() {
            self.angular.resize(aidx + 1, None);
        }
        let ang = *self.angular[aidx].get_or_insert_with(|| {
            let s = t.angular_shift as f64;
            angular_basis(p.a + s, p.b + s, t.angular_index() as usize, p.k, phi)
        });
        Jet::separable(rad, ang)
    }
}
