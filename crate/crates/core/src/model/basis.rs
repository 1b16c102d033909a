//! Normalized radial and angular basis functions with their first two
//! derivatives.

use crate::specfun::{jacobi_deriv_raw, jacobi_raw, laguerre_deriv_raw, laguerre_raw, ln_factorial, ln_gamma};

/// `ln` of the factor making `r^β L_j^{(β)}(ωr²) e^{-ωr²/2}` unit-normed
/// with respect to `r dr`.
pub fn radial_ln_norm(beta: f64, j: usize, omega: f64) -> f64 {
    0.5 * (std::f64::consts::LN_2 + (beta + 1.0) * omega.ln() + ln_factorial(j) - ln_gamma(j as f64 + beta + 1.0))
}

/// `ln` of the factor making `cos^a kφ sin^b kφ P_m^{(a-½,b-½)}(-cos 2kφ)`
/// unit-normed on `(0, π/(2k))`.
pub fn angular_ln_norm(a: f64, b: f64, m: usize, k: f64) -> f64 {
    let mf = m as f64;
    0.5 * ((2.0 * k).ln() + ln_factorial(m) + (2.0 * mf + a + b).ln() + ln_gamma(a + b + mf)
        - ln_gamma(a + mf + 0.5)
        - ln_gamma(b + mf + 0.5))
}

/// Normalized `r^β L_j^{(β)}(ωr²) e^{-ωr²/2}` and its first two
/// `r`-derivatives.
pub fn radial_basis(beta: f64, j: usize, omega: f64, r: f64) -> [f64; 3] {
    let z = omega * r * r;
    let env = (radial_ln_norm(beta, j, omega) + beta * r.ln() - 0.5 * z).exp();
    let lam = beta / r - omega * r;
    let dlam = -beta / (r * r) - omega;
    let l0 = laguerre_raw(j, beta, z);
    let l1 = laguerre_deriv_raw(j, beta, z, 1);
    let l2 = laguerre_deriv_raw(j, beta, z, 2);
    let lr = l1 * 2.0 * omega * r;
    let lrr = l2 * 4.0 * omega * omega * r * r + l1 * 2.0 * omega;
    [
        env * l0,
        env * (lam * l0 + lr),
        env * ((lam * lam + dlam) * l0 + 2.0 * lam * lr + lrr),
    ]
}

/// Normalized `cos^a kφ sin^b kφ P_m^{(a-½,b-½)}(-cos 2kφ)` and its first
/// two `φ`-derivatives.
pub fn angular_basis(a: f64, b: f64, m: usize, k: f64, phi: f64) -> [f64; 3] {
    let kp = k * phi;
    let (s, c) = kp.sin_cos();
    let env = (angular_ln_norm(a, b, m, k) + a * c.ln() + b * s.ln()).exp();
    let lam = k * (-a * s / c + b * c / s);
    let dlam = -k * k * (a / (c * c) + b / (s * s));
    let (s2, c2) = (2.0 * kp).sin_cos();
    let xi = -c2;
    let dxi = 2.0 * k * s2;
    let ddxi = 4.0 * k * k * c2;
    let (al, be) = (a - 0.5, b - 0.5);
    let p0 = jacobi_raw(m, al, be, xi);
    let p1 = jacobi_deriv_raw(m, al, be, xi, 1);
    let p2 = jacobi_deriv_raw(m, al, be, xi, 2);
    let pp = p1 * dxi;
    let ppp = p2 * dxi * dxi + p1 * ddxi;
    [
        env * p0,
        env * (lam * p0 + pp),
        env * ((lam * lam + dlam) * p0 + 2.0 * lam * pp + ppp),
    ]
}
