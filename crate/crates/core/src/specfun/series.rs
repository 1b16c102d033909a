//! Explicit finite-sum forms of the Laguerre and Jacobi polynomials,
//! summed in double-double arithmetic. Slow; used only as an independent
//! oracle for the recurrences.

/// Double-double arithmetic so the alternating series oracle does not
/// lose digits to cancellation.
#[derive(Clone, Copy)]
struct Dd(f64, f64);

impl Dd {
    fn from(x: f64) -> Self {
        Dd(x, 0.0)
    }
    fn two_sum(a: f64, b: f64) -> (f64, f64) {
        let s = a + b;
        let bb = s - a;
        (s, (a - (s - bb)) + (b - bb))
    }
    fn add(self, o: Dd) -> Dd {
        let (s, e) = Self::two_sum(self.0, o.0);
        let e = e + self.1 + o.1;
        let (hi, lo) = Self::two_sum(s, e);
        Dd(hi, lo)
    }
    fn neg(self) -> Dd {
        Dd(-self.0, -self.1)
    }
    fn mul(self, o: Dd) -> Dd {
        let p = self.0 * o.0;
        let e = self.0.mul_add(o.0, -p) + (self.0 * o.1 + self.1 * o.0);
        let (hi, lo) = Self::two_sum(p, e);
        Dd(hi, lo)
    }
    fn div(self, o: Dd) -> Dd {
        let q = self.0 / o.0;
        let r = self.add(o.mul(Dd::from(q)).neg());
        let q2 = r.0 / o.0;
        let (hi, lo) = Self::two_sum(q, q2);
        Dd(hi, lo)
    }
    fn powi(self, n: usize) -> Dd {
        (0..n).fold(Dd::from(1.0), |acc, _| acc.mul(self))
    }
}

/// Binomial coefficient `C(x, j)` for real `x` and integer `j`.
fn binom(x: f64, j: usize) -> Dd {
    (0..j).fold(Dd::from(1.0), |acc, i| {
        acc.mul(Dd::from(x).add(Dd::from(-(i as f64)))).div(Dd::from(i as f64 + 1.0))
    })
}

pub fn laguerre_series(n: usize, alpha: f64, z: f64) -> f64 {
    let mut fact = Dd::from(1.0);
    let mut sum = Dd::from(0.0);
    for j in 0..=n {
        if j > 0 {
            fact = fact.mul(Dd::from(j as f64));
        }
        let term = binom(n as f64 + alpha, n - j).mul(Dd::from(z).powi(j)).div(fact);
        sum = sum.add(if j % 2 == 0 { term } else { term.neg() });
    }
    sum.0
}

pub fn jacobi_series(n: usize, alpha: f64, beta: f64, x: f64) -> f64 {
    let xm = Dd::from(x).add(Dd::from(-1.0)).mul(Dd::from(0.5));
    let xp = Dd::from(x).add(Dd::from(1.0)).mul(Dd::from(0.5));
    (0..=n)
        .map(|s| {
            binom(n as f64 + alpha, n - s)
                .mul(binom(n as f64 + beta, s))
                .mul(xm.powi(s))
                .mul(xp.powi(n - s))
        })
        .fold(Dd::from(0.0), |acc, t| acc.add(t))
        .0
}
