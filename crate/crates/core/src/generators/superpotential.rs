use crate::error::Result;
use crate::model::ModelParams;

/// `C = -k(a+b)`.
pub fn radial_constant(p: &ModelParams) -> f64 {
    -p.k * (p.a + p.b)
}

/// `W(r, φ) = C ln r - a ln cos kφ - b ln sin kφ`.
pub fn superpotential(p: &ModelParams, r: f64, phi: f64) -> Result<f64> {
    p.check_angle(phi)?;
    if !(r > 0.0) {
        return crate::error::domain(format!("radius must be positive, got {r}"));
    }
    let kp = p.k * phi;
    Ok(radial_constant(p) * r.ln() - p.a * kp.cos().ln() - p.b * kp.sin().ln())
}

/// `(F', F'')` of the angular part `F = -a ln cos kφ - b ln sin kφ`.
pub fn angular_derivatives(k: f64, a: f64, b: f64, phi: f64) -> (f64, f64) {
    let (s, c) = (k * phi).sin_cos();
    let d1 = k * (a * s / c - b * c / s);
    let d2 = k * k * (a / (c * c) + b / (s * s));
    (d1, d2)
}

/// `k²[a(a-1) sec² kφ + b(b-1) csc² kφ]`.
pub fn angular_potential(p: &ModelParams, phi: f64) -> f64 {
    let (s, c) = (p.k * phi).sin_cos();
    p.k * p.k * (p.a * (p.a - 1.0) / (c * c) + p.b * (p.b - 1.0) / (s * s))
}

/// `|-F'' + F'² + C² - k²[a(a-1) sec² kφ + b(b-1) csc² kφ]|`.
pub fn riccati_residual(p: &ModelParams, phi: f64) -> f64 {
    riccati_residual_with(p, p.a, p.b, phi)
}

/// As [`riccati_residual`] but with `F` built from couplings `(a_f, b_f)`
/// while `C` and the right-hand side keep those of `p`.
pub fn riccati_residual_with(p: &ModelParams, a_f: f64, b_f: f64, phi: f64) -> f64 {
    let (d1, d2) = angular_derivatives(p.k, a_f, b_f, phi);
    let c = radial_constant(p);
    (-d2 + d1 * d1 + c * c - angular_potential(p, phi)).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn superpotential_values() {
        let p = ModelParams::new(1.0, 1.0, 1.0, 1.0).unwrap();
        assert!((superpotential(&p, 1.0, PI / 4.0).unwrap() - 2f64.ln()).abs() < 1e-15);
        assert!(superpotential(&p, 1.0, 1e-12).unwrap() > 25.0);
        assert!(superpotential(&p, 1.0, 0.0).is_err());
        // r ∂_r W = C
        let q = ModelParams::new(2.5, 0.8, 1.3, 1.0).unwrap();
        let (r, h) = (1.3, 1e-6);
        let d = (superpotential(&q, r + h, 0.2).unwrap() - superpotential(&q, r - h, 0.2).unwrap()) / (2.0 * h);
        assert!((r * d - radial_constant(&q)).abs() < 1e-8);
    }

    #[test]
    fn riccati_holds_and_control_fails() {
        let p = ModelParams::new(2.0, 1.5, 2.5, 1.0).unwrap();
        assert!(riccati_residual(&p, PI / 8.0) < 1e-10);
        let q = ModelParams::new(2.5, 0.8, 1.3, 1.0).unwrap();
        assert!(riccati_residual(&q, 0.3) < 1e-10);
        assert!(riccati_residual_with(&q, q.a + 0.01, q.b, 0.3) > 1e-3);
    }

    #[test]
    fn angular_derivatives_match_finite_differences() {
        let (k, a, b, phi, h) = (1.7, 1.2, 0.9, 0.5, 1e-5);
        let f = |x: f64| -a * (k * x).cos().ln() - b * (k * x).sin().ln();
        let (d1, d2) = angular_derivatives(k, a, b, phi);
        assert!((d1 - (f(phi + h) - f(phi - h)) / (2.0 * h)).abs() < 1e-8);
        assert!((d2 - (f(phi + h) - 2.0 * f(phi) + f(phi - h)) / (h * h)).abs() < 1e-4);
    }
}
