//! Generalized Laguerre and Jacobi polynomials by forward three-term recurrence,
//! together with their derivative identities.

use crate::error::{domain, Result};

fn check_laguerre(alpha: f64, z: f64) -> Result<()> {
    if !(alpha > -1.0) {
        return domain(format!("Laguerre parameter must exceed -1, got {alpha}"));
    }
    if !(z >= 0.0) || !z.is_finite() {
        return domain(format!("Laguerre argument must be finite and >= 0, got {z}"));
    }
    Ok(())
}

fn check_jacobi(alpha: f64, beta: f64, xi: f64) -> Result<()> {
    if !(alpha > -1.0) || !(beta > -1.0) {
        return domain(format!("Jacobi parameters must exceed -1, got ({alpha}, {beta})"));
    }
    if !(xi.abs() <= 1.0) {
        return domain(format!("Jacobi argument must lie in [-1, 1], got {xi}"));
    }
    Ok(())
}

/// Generalized Laguerre polynomial `L_n^{(alpha)}(z)`.
pub fn laguerre(n: usize, alpha: f64, z: f64) -> Result<f64> {
    check_laguerre(alpha, z)?;
    Ok(laguerre_raw(n, alpha, z))
}

/// `d/dz L_n^{(alpha)}(z) = -L_{n-1}^{(alpha+1)}(z)`.
pub fn laguerre_deriv(n: usize, alpha: f64, z: f64) -> Result<f64> {
    check_laguerre(alpha, z)?;
    Ok(laguerre_deriv_raw(n, alpha, z, 1))
}

/// Jacobi polynomial `P_n^{(alpha, beta)}(xi)`.
pub fn jacobi(n: usize, alpha: f64, beta: f64, xi: f64) -> Result<f64> {
    check_jacobi(alpha, beta, xi)?;
    Ok(jacobi_raw(n, alpha, beta, xi))
}

/// `d/dxi P_n^{(alpha,beta)}(xi) = (n+alpha+beta+1)/2 · P_{n-1}^{(alpha+1,beta+1)}(xi)`.
pub fn jacobi_deriv(n: usize, alpha: f64, beta: f64, xi: f64) -> Result<f64> {
    check_jacobi(alpha, beta, xi)?;
    Ok(jacobi_deriv_raw(n, alpha, beta, xi, 1))
}

pub(crate) fn laguerre_raw(n: usize, alpha: f64, z: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + alpha - z;
    for j in 1..n {
        let jf = j as f64;
        let next = ((2.0 * jf + 1.0 + alpha - z) * cur - (jf + alpha) * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// `order`-th derivative: `(-1)^order L_{n-order}^{(alpha+order)}`.
pub(crate) fn laguerre_deriv_raw(n: usize, alpha: f64, z: f64, order: usize) -> f64 {
    if order > n {
        return 0.0;
    }
    let v = laguerre_raw(n - order, alpha + order as f64, z);
    if order % 2 == 1 {
        -v
    } else {
        v
    }
}

pub(crate) fn jacobi_raw(n: usize, alpha: f64, beta: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let ab = alpha + beta;
    let mut prev = 1.0;
    let mut cur = 0.5 * ((ab + 2.0) * x + alpha - beta);
    for j in 2..=n {
        let jf = j as f64;
        let c = 2.0 * jf + ab;
        let a1 = 2.0 * jf * (jf + ab) * (c - 2.0);
        let a2 = (c - 1.0) * (c * (c - 2.0) * x + alpha * alpha - beta * beta);
        let a3 = 2.0 * (jf + alpha - 1.0) * (jf + beta - 1.0) * c;
        let next = (a2 * cur - a3 * prev) / a1;
        prev = cur;
        cur = next;
    }
    cur
}

/// `order`-th derivative of `P_n^{(alpha,beta)}`:
/// `Γ(n+α+β+1+order) / (2^order Γ(n+α+β+1)) · P_{n-order}^{(α+order, β+order)}`.
pub(crate) fn jacobi_deriv_raw(n: usize, alpha: f64, beta: f64, x: f64, order: usize) -> f64 {
    if order > n {
        return 0.0;
    }
    let s = n as f64 + alpha + beta + 1.0;
    let mut factor = 1.0;
    for j in 0..order {
        factor *= 0.5 * (s + j as f64);
    }
    factor * jacobi_raw(n - order, alpha + order as f64, beta + order as f64, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::series::{jacobi_series, laguerre_series};

    #[test]
    fn laguerre_examples() {
        assert_eq!(laguerre(0, 2.0, 0.7).unwrap(), 1.0);
        assert!((laguerre(1, 2.0, 0.5).unwrap() - 2.5).abs() < 1e-15);
        // L_3^{(3/2)}(2) = C(4.5,3) - 2 C(4.5,2) + (4/2) C(4.5,1) - 8/6
        let exact = 39.375 / 6.0 - 2.0 * 7.875 + 2.0 * 4.5 - 8.0 / 6.0;
        assert!((laguerre(3, 1.5, 2.0).unwrap() - exact).abs() < 1e-14);
        assert!((laguerre(3, 1.5, 2.0).unwrap() - laguerre_series(3, 1.5, 2.0)).abs() < 1e-14);
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi(0, 0.5, 0.5, 0.3).unwrap(), 1.0);
        assert!(jacobi(1, 0.5, 0.5, 0.0).unwrap().abs() < 1e-16);
        let series = jacobi_series(2, 1.5, 0.5, -0.4);
        assert!((jacobi(2, 1.5, 0.5, -0.4).unwrap() - series).abs() < 1e-14);
        // 4.375·0.09 - 8.75·0.21 + 1.875·0.49
        assert!((series - (-0.525)).abs() < 1e-14);
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(laguerre_deriv(0, 3.0, 1.2).unwrap(), 0.0);
        assert!((jacobi_deriv(1, 0.5, 0.5, 0.9).unwrap() - 1.5).abs() < 1e-15);
        let h = 1e-6;
        let fd = (laguerre(2, 1.0, 0.8 + h).unwrap() - laguerre(2, 1.0, 0.8 - h).unwrap()) / (2.0 * h);
        assert!((laguerre_deriv(2, 1.0, 0.8).unwrap() - fd).abs() < 1e-8);
    }

    #[test]
    fn recurrence_matches_series() {
        let params = [-0.4, -0.1, 0.0, 0.5, 1.3, 2.5, 4.0, 7.5, 10.0];
        for n in 0..=12 {
            for &alpha in &params {
                for &z in &[0.0, 0.1, 0.9, 2.0, 5.5, 11.0, 20.0] {
                    let r = laguerre(n, alpha, z).unwrap();
                    let s = laguerre_series(n, alpha, z);
                    let scale = s.abs().max(1.0);
                    assert!((r - s).abs() <= 1e-10 * scale, "L n={n} a={alpha} z={z}: {r} vs {s}");
                }
                for &beta in &params {
                    for &x in &[-1.0, -0.85, -0.3, 0.0, 0.41, 0.77, 1.0] {
                        let r = jacobi(n, alpha, beta, x).unwrap();
                        let s = jacobi_series(n, alpha, beta, x);
                        let scale = s.abs().max(1.0);
                        assert!((r - s).abs() <= 1e-10 * scale, "P n={n} ({alpha},{beta}) x={x}");
                    }
                }
            }
        }
    }

    #[test]
    fn derivative_identities_match_finite_differences() {
        let h = 1e-6;
        for n in 0..=8 {
            for &alpha in &[-0.4, 0.5, 2.0, 6.0] {
                for &z in &[0.3, 1.7, 4.0] {
                    let fd = (laguerre_raw(n, alpha, z + h) - laguerre_raw(n, alpha, z - h)) / (2.0 * h);
                    let d = laguerre_deriv(n, alpha, z).unwrap();
                    assert!((d - fd).abs() < 1e-6 * d.abs().max(1.0), "n={n} a={alpha} z={z}");
                    let fd2 = (laguerre_deriv_raw(n, alpha, z + h, 1) - laguerre_deriv_raw(n, alpha, z - h, 1))
                        / (2.0 * h);
                    assert!((laguerre_deriv_raw(n, alpha, z, 2) - fd2).abs() < 1e-6 * fd2.abs().max(1.0));
                }
                for &beta in &[-0.3, 1.0, 3.5] {
                    for &x in &[-0.9, -0.2, 0.55] {
                        let fd = (jacobi_raw(n, alpha, beta, x + h) - jacobi_raw(n, alpha, beta, x - h)) / (2.0 * h);
                        let d = jacobi_deriv(n, alpha, beta, x).unwrap();
                        assert!((d - fd).abs() < 1e-6 * d.abs().max(1.0), "n={n} ({alpha},{beta}) x={x}");
                        let fd2 = (jacobi_deriv_raw(n, alpha, beta, x + h, 1)
                            - jacobi_deriv_raw(n, alpha, beta, x - h, 1))
                            / (2.0 * h);
                        let d2 = jacobi_deriv_raw(n, alpha, beta, x, 2);
                        assert!((d2 - fd2).abs() < 1e-6 * d2.abs().max(1.0));
                    }
                }
            }
        }
    }

    #[test]
    fn domain_errors() {
        assert!(laguerre(2, -1.0, 0.5).is_err());
        assert!(laguerre(2, 0.5, -0.1).is_err());
        assert!(jacobi(2, 0.5, -1.5, 0.1).is_err());
        assert!(jacobi(2, 0.5, 0.5, 1.01).is_err());
        assert!(jacobi_deriv(2, 0.5, 0.5, -1.2).is_err());
    }

    proptest::proptest! {
        #[test]
        fn recurrences_match_series_anywhere(
            n in 0usize..=12,
            alpha in -0.4f64..10.0,
            beta in -0.4f64..10.0,
            z in 0.0f64..20.0,
            x in -1.0f64..=1.0,
        ) {
            let s = laguerre_series(n, alpha, z);
            proptest::prop_assert!((laguerre(n, alpha, z).unwrap() - s).abs() <= 1e-10 * s.abs().max(1.0));
            let s = jacobi_series(n, alpha, beta, x);
            proptest::prop_assert!((jacobi(n, alpha, beta, x).unwrap() - s).abs() <= 1e-10 * s.abs().max(1.0));
        }

        #[test]
        fn laguerre_derivative_is_shifted_polynomial(n in 1usize..=10, alpha in -0.4f64..6.0, z in 0.0f64..10.0) {
            let d = laguerre_deriv(n, alpha, z).unwrap();
            proptest::prop_assert_eq!(d, -laguerre(n - 1, alpha + 1.0, z).unwrap());
        }
    }
}
