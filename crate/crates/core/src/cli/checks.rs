use std::collections::HashMap;
use std::sync::Arc;
use std::time::Instant;

use nalgebra::DMatrix;

use super::{CheckRecord, Suite, SuiteConfig, VerificationReport};
use crate::error::Result;
use crate::generators::{
    apply_generator, check_structure_constants, generator_matrices, hamiltonian_super, hermiticity_residual,
    oscillator_realization, riccati_residual, riccati_residual_with, sample_state, sample_with, supercharges,
    GeneratorId, GeneratorMatrices, HamiltonianForm, MatrixOptions,
};
use crate::irreps::{
    casimir_eigenvalues, casimir_matrices, classify, closed_form_matrices, k_ladder_coeff, one_fermion_state, overlap,
    super_basis, v_action, zero_fermion_state, Dir, Family,
};
use crate::model::{
    energy, eval_wavefunction, inner_product, norm_constant, susy_energy, weights_of, Labels, ModelParams, QuadGrid,
};
use crate::special_cases::{verify_bc2, verify_cmw, verify_sw, CaseReport};
use crate::specfun::series::{jacobi_series, laguerre_series};
use crate::specfun::{
    gauss_rule, jacobi, jacobi_deriv, laguerre, laguerre_deriv, ln_gamma, log_gamma, RuleKind,
};

type Outcome = Result<(f64, Option<String>)>;

struct Recorder<'a> {
    cfg: &'a SuiteConfig,
    out: Vec<CheckRecord>,
}

impl Recorder<'_> {
    fn check(
        &mut self,
        suite: Suite,
        params: Option<ModelParams>,
        name: &str,
        anchor: &str,
        key: &str,
        f: impl FnOnce() -> Outcome,
    ) {
        let start = Instant::now();
        let (residual, detail) = match f() {
            Ok(v) => v,
            Err(e) => (f64::NAN, Some(e.to_string())),
        };
        let tolerance = self.cfg.tol(key);
        self.out.push(CheckRecord {
            suite: suite.name().to_string(),
            name: name.to_string(),
            anchor: anchor.to_string(),
            params,
            residual,
            tolerance,
            pass: residual <= tolerance,
            detail,
            wall_time_s: start.elapsed().as_secs_f64(),
        });
    }
}

/// Running maximum that remembers where it was attained.
struct Worst {
    value: f64,
    at: Option<String>,
}

impl Worst {
    fn new() -> Self {
        Worst { value: 0.0, at: None }
    }

    fn add(&mut self, v: f64, at: impl FnOnce() -> String) {
        if v > self.value || v.is_nan() {
            self.value = v;
            self.at = Some(at());
        }
    }

    fn done(self) -> Outcome {
        Ok((self.value, self.at))
    }
}

pub(super) fn run(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let mut rec = Recorder { cfg, out: Vec::new() };
    let warnings: Vec<String> = cfg
        .params
        .iter()
        .filter(|p| !p.in_validated_regime())
        .map(|p| format!("parameter set {p:?} has a or b <= 1/2; quadrature weights are poorly conditioned"))
        .collect();
    let suites = cfg.selected();
    let mut fixtures: HashMap<usize, Result<Fixture>> = HashMap::new();
    for suite in suites {
        match suite {
            Suite::Specfun => specfun_suite(&mut rec),
            Suite::Model => {
                for p in &cfg.params {
                    model_suite(&mut rec, p);
                }
            }
            Suite::Algebra => {
                for (i, p) in cfg.params.iter().enumerate() {
                    let fx = fixtures.entry(i).or_insert_with(|| Fixture::build(cfg, p));
                    algebra_suite(&mut rec, p, fx);
                }
                oscillator_checks(&mut rec);
            }
            Suite::Irreps => {
                for (i, p) in cfg.params.iter().enumerate() {
                    let fx = fixtures.entry(i).or_insert_with(|| Fixture::build(cfg, p));
                    irreps_suite(&mut rec, p, fx);
                }
            }
            Suite::SpecialCases => special_cases_suite(&mut rec),
            Suite::All => unreachable!("expanded by selected()"),
        }
        // free the matrices once no later suite needs them
        if suite == Suite::Irreps {
            fixtures.clear();
        }
    }
    Ok(VerificationReport::new(rec.out, warnings))
}

fn scaled_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(1.0)
}

const POLY_PARAMS: [f64; 9] = [-0.4, -0.1, 0.0, 0.5, 1.3, 2.5, 4.0, 7.5, 10.0];

fn specfun_suite(rec: &mut Recorder) {
    let s = Suite::Specfun;
    rec.check(s, None, "log-gamma against factorial products", "ln Γ(x) for x in [0.5, 300]", "log_gamma", || {
        let mut w = Worst::new();
        let half = 0.5 * std::f64::consts::PI.ln();
        let (mut int_acc, mut half_acc) = (0.0f64, half);
        for j in 1..=300usize {
            // int_acc = ln (j-1)!, half_acc = ln Γ(j - 1/2)
            let x = j as f64;
            let got = log_gamma(x)?;
            w.add(scaled_err(got, int_acc), || format!("x={x}"));
            let xh = x - 0.5;
            let got = log_gamma(xh)?;
            w.add(scaled_err(got, half_acc), || format!("x={xh}"));
            int_acc += x.ln();
            half_acc += xh.ln();
        }
        w.add(scaled_err(log_gamma(11.0)?, 15.104_412_573_075_516), || "x=11".into());
        w.done()
    });
    rec.check(
        s,
        None,
        "laguerre recurrence against series",
        "L_N^(α)(z) = Σ_j (-1)^j C(N+α, N-j) z^j / j!",
        "series",
        || {
            let mut w = Worst::new();
            for n in 0..=12 {
                for &alpha in &POLY_PARAMS {
                    for &z in &[0.0, 0.1, 0.9, 2.0, 5.5, 11.0, 20.0] {
                        let e = scaled_err(laguerre(n, alpha, z)?, laguerre_series(n, alpha, z));
                        w.add(e, || format!("N={n} α={alpha} z={z}"));
                    }
                }
            }
            w.done()
        },
    );
    rec.check(
        s,
        None,
        "jacobi recurrence against series",
        "P_n^(α,β)(ξ) = Σ_s C(n+α, n-s) C(n+β, s) ((ξ-1)/2)^s ((ξ+1)/2)^(n-s)",
        "series",
        || {
            let mut w = Worst::new();
            for n in 0..=12 {
                for &alpha in &POLY_PARAMS {
                    for &beta in &POLY_PARAMS {
                        for &x in &[-1.0, -0.85, -0.3, 0.0, 0.41, 0.77, 1.0] {
                            let e = scaled_err(jacobi(n, alpha, beta, x)?, jacobi_series(n, alpha, beta, x));
                            w.add(e, || format!("n={n} α={alpha} β={beta} ξ={x}"));
                        }
                    }
                }
            }
            w.done()
        },
    );
    rec.check(
        s,
        None,
        "derivative identities against central differences",
        "dL_N^(α)/dz = -L_(N-1)^(α+1), dP_n^(α,β)/dξ = (n+α+β+1)/2 P_(n-1)^(α+1,β+1)",
        "derivative",
        || {
            let (h, mut w) = (1e-6, Worst::new());
            for n in 0..=8 {
                for &alpha in &[-0.4, 0.5, 2.0, 6.0] {
                    for &z in &[0.3, 1.7, 4.0] {
                        let fd = (laguerre(n, alpha, z + h)? - laguerre(n, alpha, z - h)?) / (2.0 * h);
                        w.add(scaled_err(laguerre_deriv(n, alpha, z)?, fd), || format!("L N={n} α={alpha} z={z}"));
                    }
                    for &beta in &[-0.3, 1.0, 3.5] {
                        for &x in &[-0.9, -0.2, 0.55] {
                            let fd = (jacobi(n, alpha, beta, x + h)? - jacobi(n, alpha, beta, x - h)?) / (2.0 * h);
                            let d = jacobi_deriv(n, alpha, beta, x)?;
                            w.add(scaled_err(d, fd), || format!("P n={n} α={alpha} β={beta} ξ={x}"));
                        }
                    }
                }
            }
            w.done()
        },
    );
    rec.check(
        s,
        None,
        "gauss-laguerre monomial moments",
        "∫ z^(α+d) e^(-z) dz = Γ(α+d+1), exact for d <= 2m-1",
        "quadrature",
        || {
            let mut w = Worst::new();
            for &alpha in &[-0.5, 0.0, 1.83, 4.0, 12.7] {
                for &m in &[1usize, 3, 10, 40, 80] {
                    let r = gauss_rule(RuleKind::Laguerre { alpha }, m)?;
                    for d in 0..(2 * m).min(40) {
                        let exact = ln_gamma(alpha + d as f64 + 1.0);
                        let got = r.integrate(|z| z.powi(d as i32)).ln();
                        w.add((got - exact).abs(), || format!("α={alpha} m={m} d={d}"));
                    }
                }
            }
            w.done()
        },
    );
    rec.check(
        s,
        None,
        "gauss-jacobi monomial moments",
        "∫ (1-ξ)^(α+d) (1+ξ)^β dξ = 2^(α+β+d+1) B(α+d+1, β+1)",
        "quadrature",
        || {
            let mut w = Worst::new();
            for &(alpha, beta) in &[(0.0, 0.0), (0.5, 0.5), (1.0, 2.0), (-0.3, 1.7), (0.7, 0.3)] {
                for &m in &[1usize, 2, 7, 30, 80] {
                    let r = gauss_rule(RuleKind::Jacobi { alpha, beta }, m)?;
                    for d in 0..(2 * m).min(30) {
                        let a1 = alpha + d as f64 + 1.0;
                        let ln_exact = (a1 + beta) * std::f64::consts::LN_2 + ln_gamma(a1) + ln_gamma(beta + 1.0)
                            - ln_gamma(a1 + beta + 1.0);
                        let got = r.integrate(|x| (1.0 - x).powi(d as i32));
                        w.add((got / ln_exact.exp() - 1.0).abs(), || format!("α={alpha} β={beta} m={m} d={d}"));
                    }
                }
            }
            w.done()
        },
    );
    rec.check(
        s,
        None,
        "gauss rule nodes and weights",
        "nodes increasing and interior, weights positive",
        "formula",
        || {
            let mut bad = 0usize;
            let kinds = [
                RuleKind::Laguerre { alpha: 0.0 },
                RuleKind::Laguerre { alpha: 9.5 },
                RuleKind::Jacobi { alpha: 0.5, beta: 1.5 },
                RuleKind::Jacobi { alpha: -0.4, beta: 0.0 },
            ];
            for kind in kinds {
                for m in [1usize, 5, 40, 80] {
                    let r = gauss_rule(kind, m)?;
                    let lo = if matches!(kind, RuleKind::Laguerre { .. }) { 0.0 } else { -1.0 };
                    let hi = if lo == 0.0 { f64::INFINITY } else { 1.0 };
                    bad += r.nodes.windows(2).filter(|w| w[0] >= w[1]).count();
                    bad += r.nodes.iter().filter(|&&x| !(x > lo && x < hi)).count();
                    bad += r.weights.iter().filter(|&&x| !(x > 0.0)).count();
                }
            }
            Ok((bad as f64, None))
        },
    );
}

fn grid(cfg: &SuiteConfig, p: &ModelParams, n: usize) -> Result<Arc<QuadGrid>> {
    QuadGrid::new(p, n, cfg.quadrature.radial, cfg.quadrature.angular)
}

fn labels(cfg: &SuiteConfig) -> Vec<Labels> {
    let t = cfg.truncation;
    (0..=t.nmax_sector).flat_map(|n| (0..=t.nmax_radial).map(move |nn| Labels::new(nn, n))).collect()
}

fn model_suite(rec: &mut Recorder, p: &ModelParams) {
    let (s, cfg, pp) = (Suite::Model, rec.cfg, Some(*p));
    rec.check(
        s,
        pp,
        "energies and weights",
        "E = 2ω[2N + (2n+a+b)k + 1], E - E_00 = 4ω(N + nk), τ + q = nk",
        "formula",
        || {
            let mut w = Worst::new();
            let e00 = 2.0 * p.omega * ((p.a + p.b) * p.k + 1.0);
            w.add(scaled_err(energy(p, Labels::new(0, 0)), e00), || "E_00".into());
            for l in labels(cfg) {
                let want = 4.0 * p.omega * (l.radial as f64 + l.angular as f64 * p.k);
                w.add(scaled_err(susy_energy(p, l), want), || format!("N={} n={}", l.radial, l.angular));
                let wt = weights_of(p, l.angular);
                w.add(scaled_err(wt.tau + wt.q, l.angular as f64 * p.k), || format!("weights n={}", l.angular));
            }
            w.done()
        },
    );
    rec.check(
        s,
        pp,
        "wavefunction gram matrix",
        "⟨Ψ_(N,n), Ψ_(N',n')⟩ = δ_NN' δ_nn'",
        "orthonormality",
        || {
            let states = labels(cfg);
            let mut w = Worst::new();
            for base in 0..=cfg.truncation.nmax_sector {
                let g = grid(cfg, p, base)?;
                let fields = states
                    .iter()
                    .filter(|l| l.angular >= base)
                    .map(|l| {
                        norm_constant(p, *l)?;
                        Ok((*l, g.sample(|r, phi| eval_wavefunction(p, *l, r, phi).unwrap_or(f64::NAN))))
                    })
                    .collect::<Result<Vec<_>>>()?;
                for (i, (li, fi)) in fields.iter().enumerate() {
                    for (lj, fj) in &fields[i..] {
                        if li.angular.min(lj.angular) != base {
                            continue;
                        }
                        let want = if li == lj { 1.0 } else { 0.0 };
                        let d = (inner_product(fi, fj)? - want).abs();
                        w.add(d, || format!("{li:?} {lj:?}"));
                    }
                }
            }
            w.done()
        },
    );
    rec.check(
        s,
        pp,
        "eigenvalue equation",
        "H_k Ψ_(N,n) = 2ω[2N + (2n+a+b)k + 1] Ψ_(N,n)",
        "eigenvalue",
        || {
            let mut w = Worst::new();
            for n in 0..=cfg.truncation.nmax_sector {
                let g = grid(cfg, p, n)?;
                for big_n in 0..=cfg.truncation.nmax_radial {
                    let st = zero_fermion_state(p, big_n, n);
                    let e = energy(p, Labels::new(big_n, n));
                    let h = sample_with(p, &st, &g, |ctx, j| ctx.hamiltonian_bosonic(j));
                    let f = sample_state(p, &st, &g);
                    let d = h.max_abs_diff(&f.scaled(e))? / f.max_abs();
                    w.add(d, || format!("N={big_n} n={n}"));
                }
            }
            w.done()
        },
    );
    rec.check(
        s,
        pp,
        "ground state sign and normalization phase",
        "Ψ_00 > 0, sign N_(N,n) = (-1)^N",
        "formula",
        || {
            let g = grid(cfg, p, 0)?;
            let f = g.sample(|r, phi| eval_wavefunction(p, Labels::new(0, 0), r, phi).unwrap_or(f64::NAN));
            let mut bad = f.values.iter().filter(|&&v| !(v > 0.0)).count();
            for l in labels(cfg) {
                let c = norm_constant(p, l)?;
                let want = if l.radial % 2 == 0 { 1.0 } else { -1.0 };
                if c.signum() != want {
                    bad += 1;
                }
            }
            Ok((bad as f64, None))
        },
    );
}

/// Assembled matrices of one parameter set, shared by the algebra and
/// irreducible-representation suites.
struct Fixture {
    mats: GeneratorMatrices,
    reference: Vec<DMatrix<f64>>,
}

impl Fixture {
    fn build(cfg: &SuiteConfig, p: &ModelParams) -> Result<Fixture> {
        let t = cfg.truncation;
        let q = cfg.quadrature;
        let basis = super_basis(p, t.nmax_radial, t.nmax_sector);
        let reference = closed_form_matrices(p, &basis, t.nmax_radial);
        let opts =
            MatrixOptions { radial_order: q.radial, angular_order: q.angular, cross_order: q.cross, cross_sector: true };
        let mats = generator_matrices(p, &basis, t.nmax_radial, &opts, Some(&reference))?;
        Ok(Fixture { mats, reference })
    }
}

fn fixture(fx: &Result<Fixture>) -> Result<&Fixture> {
    fx.as_ref().map_err(|e| crate::Error::Usage(format!("matrix assembly failed: {e}")))
}

/// Max-abs entry of `m` over rows and the flagged columns.
fn masked_amax(m: &DMatrix<f64>, cols: &[bool]) -> f64 {
    (0..m.ncols()).filter(|&j| cols[j]).map(|j| m.column(j).amax()).fold(0.0, f64::max)
}

fn algebra_suite(rec: &mut Recorder, p: &ModelParams, fx: &Result<Fixture>) {
    let (s, cfg, pp) = (Suite::Algebra, rec.cfg, Some(*p));
    let om = p.omega;
    rec.check(s, pp, "super-basis gram matrix", "orthonormal basis of every sector", "orthonormality", || {
        let m = &fixture(fx)?.mats;
        Ok(((&m.gram - DMatrix::<f64>::identity(m.dim(), m.dim())).amax(), None))
    });
    rec.check(
        s,
        pp,
        "structure constants",
        "[K0, K±] = ±K±, [K+, K-] = -2K0, {V±, W∓} = K0 ∓ Y and the remaining relations",
        "algebra",
        || {
            let m = &fixture(fx)?.mats;
            let rep = check_structure_constants(&m.mats[..8], &m.interior(1));
            Ok((rep.max_residual, rep.worst().map(|w| w.relation.clone())))
        },
    );
    rec.check(s, pp, "hermiticity", "K0† = K0, K±† = K∓, Y† = Y, V±† = W∓", "hermiticity", || {
        Ok((hermiticity_residual(&fixture(fx)?.mats.mats[..8]), None))
    });
    rec.check(s, pp, "sector blocks", "generators commute with the angular integral of motion", "algebra", || {
        let m = &fixture(fx)?.mats;
        let mut w = Worst::new();
        for (op, mat) in m.mats.iter().enumerate() {
            for (i, bi) in m.basis.iter().enumerate() {
                for (j, bj) in m.basis.iter().enumerate() {
                    if bi.sector != bj.sector {
                        w.add(mat[(i, j)].abs(), || format!("operator {op} sectors {}, {}", bi.sector, bj.sector));
                    }
                }
            }
        }
        w.done()
    });
    rec.check(
        s,
        pp,
        "super-hamiltonian spectrum",
        "ℋ^s Ψ_(N,n)|0⟩ = 4ω(N + nk) Ψ_(N,n)|0⟩",
        "spectrum",
        || {
            let mut w = Worst::new();
            for n in 0..=cfg.truncation.nmax_sector {
                let g = grid(cfg, p, n)?;
                for big_n in 0..=cfg.truncation.nmax_radial {
                    let st = zero_fermion_state(p, big_n, n);
                    let e = susy_energy(p, Labels::new(big_n, n));
                    let h = hamiltonian_super(p, &st, &g, HamiltonianForm::BosonicPlusFermionic);
                    let f = sample_state(p, &st, &g);
                    w.add(h.max_abs_diff(&f.scaled(e))?, || format!("N={big_n} n={n}"));
                }
            }
            w.done()
        },
    );
    rec.check(
        s,
        pp,
        "super-hamiltonian matrix",
        "H_k + 4ω(Γ + Y) = 4ω(K0 + Y)",
        "algebra",
        || {
            let m = &fixture(fx)?.mats;
            let hw = (m.get(GeneratorId::K0) + m.get(GeneratorId::Y)) * (4.0 * om);
            Ok((masked_amax(&(m.hamiltonian() - hw), &m.interior(1)), None))
        },
    );
    rec.check(
        s,
        pp,
        "K± ladder coefficients",
        "K+ |N⟩ = [(N+1)(2τ+N)]^(1/2) |N+1⟩, K- |N⟩ = [N(2τ+N-1)]^(1/2) |N-1⟩",
        "ladder",
        || {
            let m = &fixture(fx)?.mats;
            let index: HashMap<(usize, Family, usize), usize> =
                m.basis.iter().enumerate().map(|(i, b)| ((b.sector, b.family, b.radial), i)).collect();
            let interior = m.interior(1);
            let (kp, km) = (m.get(GeneratorId::KPlus), m.get(GeneratorId::KMinus));
            let mut w = Worst::new();
            for (j, b) in m.basis.iter().enumerate() {
                if !interior[j] {
                    continue;
                }
                let tau = b.k0 - b.radial as f64;
                let at = || format!("n={} {:?} N={}", b.sector, b.family, b.radial);
                if let Some(&i) = index.get(&(b.sector, b.family, b.radial + 1)) {
                    let want = k_ladder_coeff(Dir::Plus, tau, b.radial);
                    w.add((kp[(i, j)] - want).abs() / want, at);
                }
                if b.radial > 0 {
                    let i = index[&(b.sector, b.family, b.radial - 1)];
                    let want = k_ladder_coeff(Dir::Minus, tau, b.radial);
                    w.add((km[(i, j)] - want).abs() / want, at);
                }
            }
            w.done()
        },
    );
    rec.check(
        s,
        pp,
        "V± actions on zero-fermion states",
        "V± Ψ_(N,n)|0⟩ as finite sums of shifted Laguerre-Jacobi states",
        "pointwise",
        || {
            let mut w = Worst::new();
            for n in 0..=cfg.truncation.nmax_sector {
                let g = grid(cfg, p, n)?;
                for big_n in 0..=cfg.truncation.nmax_radial {
                    let st = zero_fermion_state(p, big_n, n);
                    for (id, dir) in [(GeneratorId::VPlus, Dir::Plus), (GeneratorId::VMinus, Dir::Minus)] {
                        let got = apply_generator(id, &st, p, &g);
                        let want = sample_state(p, &v_action(dir, p, big_n, n), &g);
                        w.add(got.max_abs_diff(&want)?, || format!("{} N={big_n} n={n}", id.name()));
                    }
                }
            }
            w.done()
        },
    );
    rec.check(
        s,
        pp,
        "generator fields against closed-form expansions",
        "G B_j = Σ_i R_ij B_i pointwise for the closed-form action R",
        "pointwise",
        || {
            let m = &fixture(fx)?.mats;
            let res = m.reference_residual.as_ref().expect("assembled with a reference");
            let (i, v) = res.iter().enumerate().fold((0, 0.0f64), |acc, (i, &v)| if v > acc.1 { (i, v) } else { acc });
            Ok((v, Some(GeneratorId::ALL[i].name().to_string())))
        },
    );
    rec.check(
        s,
        pp,
        "ground state annihilated by Q and Q†",
        "Q Ψ_00|0⟩ = Q† Ψ_00|0⟩ = 0",
        "susy",
        || {
            let g = grid(cfg, p, 0)?;
            let (q, qd) = supercharges(p, &zero_fermion_state(p, 0, 0), &g);
            Ok((q.norm().max(qd.norm()), None))
        },
    );
    rec.check(s, pp, "supercharge anticommutator", "{Q, Q†} = ℋ^s with Q = 2√ω W+, Q† = 2√ω V-", "algebra", || {
        let m = &fixture(fx)?.mats;
        let (wp, vm) = (m.get(GeneratorId::WPlus), m.get(GeneratorId::VMinus));
        let anti = (wp * vm + vm * wp) * (4.0 * om);
        Ok((masked_amax(&(anti - m.hamiltonian()), &m.interior(1)), None))
    });
    let angles: Vec<f64> =
        (0..cfg.riccati_angles).map(|j| (j as f64 + 0.5) / cfg.riccati_angles as f64 * p.phi_max()).collect();
    rec.check(
        s,
        pp,
        "riccati equation",
        "-F'' + F'² + C² = k²[a(a-1) sec² kφ + b(b-1) csc² kφ]",
        "riccati",
        || {
            let mut w = Worst::new();
            for &phi in &angles {
                w.add(riccati_residual(p, phi), || format!("φ={phi}"));
            }
            w.done()
        },
    );
    rec.check(
        s,
        pp,
        "riccati perturbed control (inverse residual)",
        "the Riccati equation fails once F uses a+0.01, b-0.01",
        "riccati_control",
        || {
            let worst = angles.iter().map(|&phi| riccati_residual_with(p, p.a + 0.01, p.b - 0.01, phi)).fold(0.0, f64::max);
            Ok((1.0 / worst, Some(format!("perturbed residual {worst:.3e}"))))
        },
    );
}

fn oscillator_checks(rec: &mut Recorder) {
    let s = Suite::Algebra;
    let cutoff = rec.cfg.oscillator_cutoff;
    let osc = oscillator_realization(1, cutoff);
    let anchor = "K0 = ½(a†a + ½), K± = ½a†², ½a², Y = ½(b†b - ½), V± = a†b†/√2, ab†/√2, W± = a†b/√2, ab/√2";
    rec.check(s, None, "oscillator realization relations", anchor, "oscillator", || {
        let o = osc.as_ref().map_err(|e| crate::Error::Usage(e.to_string()))?;
        let rep = check_structure_constants(&o.mats, &o.interior);
        Ok((rep.max_residual, rep.worst().map(|w| w.relation.clone())))
    });
    rec.check(s, None, "oscillator hermiticity and supercharges", "V±† = W∓, {Q, Q†} = 4ω(K0 + Y)", "oscillator", || {
        let o = osc.as_ref().map_err(|e| crate::Error::Usage(e.to_string()))?;
        let (q, qd) = o.supercharges(1.0);
        let anti = &q * &qd + &qd * &q - o.hamiltonian(1.0);
        let cols: Vec<bool> = o.interior.clone();
        Ok((hermiticity_residual(&o.mats).max(masked_amax(&anti, &cols)), None))
    });
}

fn irreps_suite(rec: &mut Recorder, p: &ModelParams, fx: &Result<Fixture>) {
    let (s, cfg, pp) = (Suite::Irreps, rec.cfg, Some(*p));
    let t = cfg.truncation;
    rec.check(
        s,
        pp,
        "one-fermion overlap",
        "⟨V+Ψ_(N-1), V-Ψ_N⟩ (normalized) = [N(N+(2n+a+b)k) / ((N+(n+a+b)k)(N+nk))]^(1/2)",
        "overlap",
        || {
            let mut w = Worst::new();
            for n in 0..=t.nmax_sector {
                let g = grid(cfg, p, n)?;
                for big_n in 1..=t.nmax_radial {
                    let up = sample_state(p, &one_fermion_state(Dir::Plus, p, big_n - 1, n), &g);
                    let down = sample_state(p, &one_fermion_state(Dir::Minus, p, big_n, n), &g);
                    w.add((up.dot(&down)? - overlap(p, big_n, n)?).abs(), || format!("N={big_n} n={n}"));
                }
            }
            w.done()
        },
    );
    rec.check(
        s,
        pp,
        "one-fermion states coincide at n=0",
        "overlap = 1 at n = 0, V+Ψ_(N-1) and V-Ψ_N are the same unit state",
        "overlap",
        || {
            let g = grid(cfg, p, 0)?;
            let mut w = Worst::new();
            for big_n in 1..=t.nmax_radial {
                let up = sample_state(p, &one_fermion_state(Dir::Plus, p, big_n - 1, 0), &g);
                let down = sample_state(p, &one_fermion_state(Dir::Minus, p, big_n, 0), &g);
                w.add((overlap(p, big_n, 0)? - 1.0).abs(), || format!("formula N={big_n}"));
                w.add(up.max_abs_diff(&down)?, || format!("fields N={big_n}"));
            }
            w.done()
        },
    );
    rec.check(
        s,
        pp,
        "two-fermion state vanishes at n=0",
        "|±, τ+N, q+1⟩ = 0 for n = 0",
        "overlap",
        || {
            let g = grid(cfg, p, 0)?;
            let mut w = Worst::new();
            for big_n in 0..=t.nmax_radial {
                let f = apply_generator(GeneratorId::VPlus, &v_action(Dir::Minus, p, big_n, 0), p, &g);
                w.add(f.norm(), || format!("N={big_n}"));
            }
            w.done()
        },
    );
    let casimirs = |fx: &Result<Fixture>| -> Result<(DMatrix<f64>, DMatrix<f64>)> {
        casimir_matrices(&fixture(fx)?.mats.mats[..8])
    };
    let casimir_check = |only_zero: bool| -> Outcome {
        let m = &fixture(fx)?.mats;
        let (c2, c3) = casimirs(fx)?;
        let interior = m.interior(2);
        let mut w = Worst::new();
        for (j, b) in m.basis.iter().enumerate() {
            if !interior[j] || (only_zero && b.sector != 0) {
                continue;
            }
            let (e2, e3) = casimir_eigenvalues(p, b.sector);
            for (c, e, name) in [(&c2, e2, "C2"), (&c3, e3, "C3")] {
                let mut col = c.column(j).clone_owned();
                col[j] -= e;
                w.add(col.amax(), || format!("{name} n={} {:?} N={}", b.sector, b.family, b.radial));
            }
        }
        w.done()
    };
    rec.check(
        s,
        pp,
        "casimir eigenvalues",
        "C2 = n(n+a+b)k², C3 = -½(a+b)n(n+a+b)k³ on sector n",
        "casimir",
        || casimir_check(false),
    );
    rec.check(s, pp, "casimirs vanish on n=0", "C2 = C3 = 0 on the atypical sector", "casimir", || casimir_check(true));
    rec.check(s, pp, "casimirs commute with generators", "[C, G] = 0 for every generator G", "casimir", || {
        let m = &fixture(fx)?.mats;
        let (c2, c3) = casimirs(fx)?;
        let interior = m.interior(3);
        let mut w = Worst::new();
        for g in GeneratorId::ALL {
            let gm = m.get(g);
            for (c, name) in [(&c2, "C2"), (&c3, "C3")] {
                let comm = c * gm - gm * c;
                w.add(masked_amax(&comm, &interior), || format!("[{name}, {}]", g.name()));
            }
        }
        w.done()
    });
    rec.check(
        s,
        pp,
        "closed-form action against quadrature",
        "matrix elements of all generators on the super-basis",
        "algebra",
        || {
            let f = fixture(fx)?;
            let interior = f.mats.interior(1);
            let mut w = Worst::new();
            for g in GeneratorId::ALL {
                let d = masked_amax(&(f.mats.get(g) - &f.reference[g.index()]), &interior);
                w.add(d, || g.name().to_string());
            }
            w.done()
        },
    );
    rec.check(
        s,
        pp,
        "irrep lowest weights",
        "blocks (τ, q), (τ∓½, q+½), (τ, q+1); two blocks at n = 0",
        "algebra",
        || {
            let m = &fixture(fx)?.mats;
            let mut w = Worst::new();
            for n in 0..=t.nmax_sector {
                let label = classify(p, n);
                let lows: Vec<(f64, f64)> =
                    m.basis.iter().filter(|b| b.sector == n && b.radial == 0).map(|b| (b.k0, b.y)).collect();
                if lows.len() != label.blocks.len() {
                    w.add(f64::INFINITY, || format!("n={n}: {} families", lows.len()));
                    continue;
                }
                let k0 = m.get(GeneratorId::K0);
                let y = m.get(GeneratorId::Y);
                for (j, b) in m.basis.iter().enumerate().filter(|(_, b)| b.sector == n && b.radial == 0) {
                    let d = label
                        .blocks
                        .iter()
                        .map(|&(tau, q)| (k0[(j, j)] - tau).abs().max((y[(j, j)] - q).abs()))
                        .fold(f64::INFINITY, f64::min);
                    w.add(d, || format!("n={n} {:?}", b.family));
                }
            }
            w.done()
        },
    );
}

fn special_cases_suite(rec: &mut Recorder) {
    let s = Suite::SpecialCases;
    let cfg = rec.cfg;
    let mut covered = [false; 3];
    for p in &cfg.params {
        let (case, result): (&str, Result<CaseReport>) = match p.k {
            1.0 => ("k=1 quadrant", verify_sw(p, cfg.sample_points, cfg.seed)),
            2.0 => ("k=2 sector", verify_bc2(p, cfg.sample_points, cfg.seed)),
            3.0 => ("k=3 three particles", verify_cmw(p, cfg.sample_points, cfg.seed)),
            _ => continue,
        };
        covered[p.k as usize - 1] = true;
        let pp = Some(*p);
        let rep = match result {
            Ok(r) => r,
            Err(e) => {
                rec.check(s, pp, &format!("{case}: construction"), "cartesian superpotential", "special_cases", || Err(e));
                continue;
            }
        };
        rec.check(
            s,
            pp,
            &format!("{case}: ℋ^s cartesian vs polar"),
            "ℋ^s = {Q, Q†} with W = -Σ c_t ln|ℓ_t·x|",
            "special_cases",
            || Ok((rep.hamiltonian, Some(format!("{} points, {} spinors", rep.points, rep.spinors)))),
        );
        rec.check(
            s,
            pp,
            &format!("{case}: Q cartesian vs 2√ω W+"),
            "Q = Σ_i b_i(-∂_i + ωx_i + ∂_i W) coincides with 2√ω W+",
            "special_cases",
            || Ok((rep.supercharge, None)),
        );
        for (name, v) in &rep.extra {
            rec.check(s, pp, &format!("{case}: {name}"), extra_anchor(name), "special_cases", || Ok((*v, None)));
        }
    }
    for (i, c) in covered.iter().enumerate() {
        if !c {
            rec.check(s, None, &format!("k={} case", i + 1), "needs a parameter set with this k", "special_cases", || {
                Err(crate::Error::Usage(format!("no parameter set with k = {}", i + 1)))
            });
        }
    }
}

fn extra_anchor(name: &str) -> &'static str {
    match name {
        "fermion-free block" => "ℋ^s restricted to |0⟩ equals H_k - 2ω[(a+b)k + 1]",
        "superpotential" => "cartesian and polar superpotentials differ by a constant",
        "relative vs polar hamiltonian" | "relative vs polar supercharge" => {
            "ℋ^s_rel and Q_rel in relative coordinates coincide with the polar operators"
        }
        "split hamiltonian" | "split supercharge" => "ℋ^s_CMW = ℋ^s_rel + ℋ^s_cm, Q_CMW = Q_rel + Q_cm",
        "mode transform anticommutators" => "rotated fermion modes obey the canonical anticommutators",
        "trigonometric resummation" => "Σ_j sec²(φ - 2πj/3) = 9 sec² 3φ and likewise for csc²",
        "centre-of-mass ground state" => "ℋ^s_cm annihilates the centre-of-mass gaussian",
        _ => "cartesian construction",
    }
}
