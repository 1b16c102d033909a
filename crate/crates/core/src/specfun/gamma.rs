use crate::error::{domain, Result};

/// Natural logarithm of the gamma function for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!("log_gamma requires a finite x > 0, got {x}"));
    }
    Ok(libm::lgamma(x))
}

/// `ln Γ(x)` without the domain check. Callers guarantee `x > 0`.
pub(crate) fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    libm::lgamma(x)
}

/// `ln(n!)` for a non-negative integer.
pub(crate) fn ln_factorial(n: usize) -> f64 {
    ln_gamma(n as f64 + 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ln_factorial_exact(n: u64) -> f64 {
        (1..=n).map(|k| k as f64).product::<f64>().ln()
    }

    #[test]
    fn known_values() {
        assert_eq!(log_gamma(1.0).unwrap(), 0.0);
        assert!((log_gamma(2.0).unwrap()).abs() < 1e-16);
        let half = log_gamma(0.5).unwrap();
        assert!((half - std::f64::consts::PI.sqrt().ln()).abs() < 1e-15);
        assert!((half - 0.5723649429247001).abs() < 1e-15);
        let eleven = log_gamma(11.0).unwrap();
        assert!((eleven - ln_factorial_exact(10)).abs() / eleven < 1e-15);
        assert!((eleven - 15.104412573075516).abs() < 1e-12);
    }

    #[test]
    fn integer_arguments_match_factorials() {
        for n in 1..=150u64 {
            let exact = ln_factorial_exact(n - 1);
            let got = log_gamma(n as f64).unwrap();
            if exact != 0.0 {
                assert!(((got - exact) / exact).abs() < 1e-13, "n={n}");
            } else {
                assert!(got.abs() < 1e-15);
            }
        }
    }

    #[test]
    fn duplication_formula() {
        // ln Γ(2x) = (2x-1) ln 2 - ½ ln π + ln Γ(x) + ln Γ(x+½)
        let mut x = 0.5;
        while x < 150.0 {
            let lhs = log_gamma(2.0 * x).unwrap();
            let rhs = (2.0 * x - 1.0) * std::f64::consts::LN_2 - 0.5 * std::f64::consts::PI.ln()
                + log_gamma(x).unwrap()
                + log_gamma(x + 0.5).unwrap();
            assert!((lhs - rhs).abs() <= 1e-13 * lhs.abs().max(1.0), "x={x}");
            x += 0.37;
        }
    }

    #[test]
    fn rejects_non_positive() {
        assert!(log_gamma(0.0).is_err());
        assert!(log_gamma(-2.5).is_err());
        assert!(log_gamma(f64::NAN).is_err());
    }
}
