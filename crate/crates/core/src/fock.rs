//! Two fermion modes in the ordered basis `{|00⟩, |10⟩, |01⟩, |11⟩}` with
//! `|10⟩ = b†_x|0⟩`, `|01⟩ = b†_y|0⟩` and `|11⟩ = b†_x b†_y|0⟩`.
//!
//! With that ordering `b†_y|10⟩ = -|11⟩`.

use nalgebra::{DMatrix, Matrix2, Matrix4};
use serde::{Deserialize, Serialize};

pub type FermionOp = Matrix4<f64>;

/// Occupation numbers of the x and y modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Occupation {
    pub nx: u8,
    pub ny: u8,
}

impl Occupation {
    pub const VACUUM: Occupation = Occupation { nx: 0, ny: 0 };
    pub const X: Occupation = Occupation { nx: 1, ny: 0 };
    pub const Y: Occupation = Occupation { nx: 0, ny: 1 };
    pub const XY: Occupation = Occupation { nx: 1, ny: 1 };

    pub fn index(self) -> usize {
        self.nx as usize + 2 * self.ny as usize
    }

    pub fn from_index(i: usize) -> Self {
        Occupation { nx: (i & 1) as u8, ny: ((i >> 1) & 1) as u8 }
    }

    pub fn count(self) -> u8 {
        self.nx + self.ny
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FermionMatrices {
    pub bx: FermionOp,
    pub bx_dag: FermionOp,
    pub by: FermionOp,
    pub by_dag: FermionOp,
}

impl FermionMatrices {
    /// `b†_x b_x + b†_y b_y`.
    pub fn number(&self) -> FermionOp {
        self.bx_dag * self.bx + self.by_dag * self.by
    }

    /// Creation operators as a pair `(x, y)`.
    pub fn creators(&self) -> [FermionOp; 2] {
        [self.bx_dag, self.by_dag]
    }

    pub fn annihilators(&self) -> [FermionOp; 2] {
        [self.bx, self.by]
    }
}

pub fn fermion_matrices() -> FermionMatrices {
    let mut bx_dag = FermionOp::zeros();
    let mut by_dag = FermionOp::zeros();
    // b†_x: |00⟩ → |10⟩, |01⟩ → |11⟩
    bx_dag[(1, 0)] = 1.0;
    bx_dag[(3, 2)] = 1.0;
    // b†_y: |00⟩ → |01⟩, |10⟩ → -|11⟩
    by_dag[(2, 0)] = 1.0;
    by_dag[(3, 1)] = -1.0;
    FermionMatrices { bx: bx_dag.transpose(), bx_dag, by: by_dag.transpose(), by_dag }
}

/// Mode rotation `[[cos φ, sin φ], [-sin φ, cos φ]]` taking `(b_x, b_y)`
/// to the barred modes.
pub fn rotate_to_barred(phi: f64) -> Matrix2<f64> {
    let (s, c) = phi.sin_cos();
    Matrix2::new(c, s, -s, c)
}

/// Barred operators: linear combinations of the unbarred ones with the
/// coefficients of `rotation`.
pub fn barred_matrices(rotation: &Matrix2<f64>) -> FermionMatrices {
    let f = fermion_matrices();
    let mix = |x: &FermionOp, y: &FermionOp, row: usize| x * rotation[(row, 0)] + y * rotation[(row, 1)];
    FermionMatrices {
        bx: mix(&f.bx, &f.by, 0),
        bx_dag: mix(&f.bx_dag, &f.by_dag, 0),
        by: mix(&f.bx, &f.by, 1),
        by_dag: mix(&f.bx_dag, &f.by_dag, 1),
    }
}

/// Unbarred components of the barred occupation state `occ` at angle `φ`:
/// `b̄†_x|0⟩ = cos φ|10⟩ + sin φ|01⟩`, `b̄†_y|0⟩ = -sin φ|10⟩ + cos φ|01⟩`,
/// `b̄†_x b̄†_y|0⟩ = |11⟩`.
pub fn barred_state(occ: Occupation, phi: f64) -> [f64; 4] {
    let (s, c) = phi.sin_cos();
    match (occ.nx, occ.ny) {
        (0, 0) => [1.0, 0.0, 0.0, 0.0],
        (1, 0) => [0.0, c, s, 0.0],
        (0, 1) => [0.0, -s, c, 0.0],
        _ => [0.0, 0.0, 0.0, 1.0],
    }
}

/// Creation operators of `modes` fermion modes on the `2^modes`-dim Fock
/// space, basis index `Σ n_i 2^i`, with the Jordan–Wigner sign taken over
/// lower modes. For two modes this reproduces [`fermion_matrices`].
pub fn multimode_creators(modes: usize) -> Vec<DMatrix<f64>> {
    let dim = 1usize << modes;
    (0..modes)
        .map(|i| {
            let bit = 1usize << i;
            let mut m = DMatrix::zeros(dim, dim);
            for col in (0..dim).filter(|c| c & bit == 0) {
                let sign = if (col & (bit - 1)).count_ones() % 2 == 0 { 1.0 } else { -1.0 };
                m[(col | bit, col)] = sign;
            }
            m
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn anti(a: &FermionOp, b: &FermionOp) -> FermionOp {
        a * b + b * a
    }

    fn check_car(f: &FermionMatrices, tol: f64) {
        let ann = f.annihilators();
        let cre = f.creators();
        for i in 0..2 {
            for j in 0..2 {
                let want = if i == j { FermionOp::identity() } else { FermionOp::zeros() };
                assert!((anti(&ann[i], &cre[j]) - want).amax() <= tol);
                assert!(anti(&ann[i], &ann[j]).amax() <= tol);
                assert!(anti(&cre[i], &cre[j]).amax() <= tol);
            }
        }
    }

    #[test]
    fn canonical_anticommutators_hold_exactly() {
        let f = fermion_matrices();
        check_car(&f, 0.0);
        assert_eq!(f.bx * f.bx, FermionOp::zeros());
        assert_eq!(f.by * f.by, FermionOp::zeros());
    }

    #[test]
    fn basis_ordering_and_sign() {
        let f = fermion_matrices();
        let vac = nalgebra::Vector4::new(1.0, 0.0, 0.0, 0.0);
        let both = f.bx_dag * (f.by_dag * vac);
        assert_eq!(both, nalgebra::Vector4::new(0.0, 0.0, 0.0, 1.0));
        let x = f.bx_dag * vac;
        assert_eq!(f.by_dag * x, nalgebra::Vector4::new(0.0, 0.0, 0.0, -1.0));
        for i in 0..4 {
            assert_eq!(Occupation::from_index(i).index(), i);
        }
    }

    #[test]
    fn rotation_properties() {
        assert_eq!(rotate_to_barred(0.0), Matrix2::identity());
        let f = fermion_matrices();
        for phi in [0.3, 1.1, -2.0, 4.0] {
            let b = barred_matrices(&rotate_to_barred(phi));
            check_car(&b, 1e-15);
            assert!((b.number() - f.number()).amax() < 1e-15);
            let vac = nalgebra::Vector4::new(1.0, 0.0, 0.0, 0.0);
            for occ in [Occupation::X, Occupation::Y] {
                let op = if occ == Occupation::X { b.bx_dag } else { b.by_dag };
                let v = op * vac;
                let want = barred_state(occ, phi);
                assert!((0..4).all(|i| (v[i] - want[i]).abs() < 1e-15));
            }
            let v = b.bx_dag * (b.by_dag * vac);
            assert!((v[3] - 1.0).abs() < 1e-15 && v[0].abs() + v[1].abs() + v[2].abs() < 1e-15);
        }
    }

    #[test]
    fn rotations_compose() {
        for (p1, p2) in [(0.3, 0.5), (1.2, -0.7), (2.9, 2.9)] {
            let twice = barred_matrices(&(rotate_to_barred(p1) * rotate_to_barred(p2)));
            let once = barred_matrices(&rotate_to_barred(p1 + p2));
            for (u, v) in [(twice.bx, once.bx), (twice.by_dag, once.by_dag), (twice.by, once.by)] {
                assert!((u - v).amax() < 1e-14);
            }
        }
    }

    #[test]
    fn multimode_matches_two_mode_convention() {
        let f = fermion_matrices();
        let c = multimode_creators(2);
        assert_eq!(c[0], DMatrix::from_column_slice(4, 4, f.bx_dag.as_slice()));
        assert_eq!(c[1], DMatrix::from_column_slice(4, 4, f.by_dag.as_slice()));
        let c3 = multimode_creators(3);
        for i in 0..3 {
            for j in 0..3 {
                let a = c3[i].transpose();
                let anti = &a * &c3[j] + &c3[j] * &a;
                let want = if i == j { DMatrix::identity(8, 8) } else { DMatrix::zeros(8, 8) };
                assert_eq!(anti, want);
                let cc = &c3[i] * &c3[j] + &c3[j] * &c3[i];
                assert_eq!(cc, DMatrix::zeros(8, 8));
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn multimode_creators_obey_car(modes in 1usize..=4, i in 0usize..4, j in 0usize..4) {
            let (i, j) = (i % modes, j % modes);
            let c = multimode_creators(modes);
            let dim = 1 << modes;
            let a = c[i].transpose();
            let anti = &a * &c[j] + &c[j] * &a;
            let want = if i == j { DMatrix::identity(dim, dim) } else { DMatrix::zeros(dim, dim) };
            proptest::prop_assert_eq!(anti, want);
        }
    }
}
