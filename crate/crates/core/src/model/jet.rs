use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Value and partial derivatives up to second order of a scalar function
/// of `(r, φ)` at a single point.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Jet {
    pub v: f64,
    pub r: f64,
    pub p: f64,
    pub rr: f64,
    pub rp: f64,
    pub pp: f64,
}

impl Jet {
    pub const ZERO: Jet = Jet { v: 0.0, r: 0.0, p: 0.0, rr: 0.0, rp: 0.0, pp: 0.0 };

    /// Jet of a function of `r` alone, from `(f, f', f'')`.
    pub fn radial(f: f64, d1: f64, d2: f64) -> Self {
        Jet { v: f, r: d1, rr: d2, ..Jet::ZERO }
    }

    /// Jet of a function of `φ` alone, from `(g, g', g'')`.
    pub fn angular(g: f64, d1: f64, d2: f64) -> Self {
        Jet { v: g, p: d1, pp: d2, ..Jet::ZERO }
    }

    /// Product of a function of `r` and a function of `φ`.
    pub fn separable(radial: [f64; 3], angular: [f64; 3]) -> Self {
        let [f, f1, f2] = radial;
        let [g, g1, g2] = angular;
        Jet { v: f * g, r: f1 * g, p: f * g1, rr: f2 * g, rp: f1 * g1, pp: f * g2 }
    }

    pub fn scale(self, c: f64) -> Self {
        Jet { v: c * self.v, r: c * self.r, p: c * self.p, rr: c * self.rr, rp: c * self.rp, pp: c * self.pp }
    }

    /// The jet of `ψ(λ r, φ)` given the jet of `ψ` at `(λ r, φ)`.
    pub fn dilated(self, lambda: f64) -> Self {
        Jet {
            v: self.v,
            r: lambda * self.r,
            p: self.p,
            rr: lambda * lambda * self.rr,
            rp: lambda * self.rp,
            pp: self.pp,
        }
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        Jet {
            v: self.v + o.v,
            r: self.r + o.r,
            p: self.p + o.p,
            rr: self.rr + o.rr,
            rp: self.rp + o.rp,
            pp: self.pp + o.pp,
        }
    }
}

impl AddAssign for Jet {
    fn add_assign(&mut self, o: Jet) {
        *self = *self + o;
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, o: Jet) -> Jet {
        self + (-o)
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(-1.0)
    }
}

/// Leibniz rule.
impl Mul for Jet {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        Jet {
            v: self.v * o.v,
            r: self.r * o.v + self.v * o.r,
            p: self.p * o.v + self.v * o.p,
            rr: self.rr * o.v + 2.0 * self.r * o.r + self.v * o.rr,
            rp: self.rp * o.v + self.r * o.p + self.p * o.r + self.v * o.rp,
            pp: self.pp * o.v + 2.0 * self.p * o.p + self.v * o.pp,
        }
    }
}

/// Four-component jet in the fixed fermion basis `{|00⟩, |10⟩, |01⟩, |11⟩}`.
pub type SpinorJet = [Jet; 4];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_rule_matches_closed_form() {
        // f = r² sin φ, g = e^r cos φ
        let (r, p) = (0.7_f64, 0.3_f64);
        let f = Jet::separable([r * r, 2.0 * r, 2.0], [p.sin(), p.cos(), -p.sin()]);
        let g = Jet::separable([r.exp(), r.exp(), r.exp()], [p.cos(), -p.sin(), -p.cos()]);
        let h = f * g;
        // h = r² e^r · ½ sin 2φ
        let rad = [r * r * r.exp(), (2.0 * r + r * r) * r.exp(), (2.0 + 4.0 * r + r * r) * r.exp()];
        let ang = [0.5 * (2.0 * p).sin(), (2.0 * p).cos(), -2.0 * (2.0 * p).sin()];
        let want = Jet::separable(rad, ang);
        for (a, b) in [(h.v, want.v), (h.r, want.r), (h.p, want.p), (h.rr, want.rr), (h.rp, want.rp), (h.pp, want.pp)] {
            assert!((a - b).abs() < 1e-14);
        }
    }
}
