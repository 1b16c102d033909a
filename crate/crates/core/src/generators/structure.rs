//! Superalgebra relations and their check on generator matrices.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::{GeneratorId, Parity};
use GeneratorId::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RelationKind {
    Commutator,
    Anticommutator,
}

/// `[left, right]_± = Σ c · G` with `None` standing for the identity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Relation {
    pub kind: RelationKind,
    pub left: GeneratorId,
    pub right: GeneratorId,
    pub rhs: Vec<(f64, Option<GeneratorId>)>,
}

impl Relation {
    pub fn name(&self) -> String {
        let (o, c) = match self.kind {
            RelationKind::Commutator => ("[", "]"),
            RelationKind::Anticommutator => ("{", "}"),
        };
        format!("{o}{},{}{c}", self.left.name(), self.right.name())
    }
}

/// Nonvanishing brackets, one ordering each.
fn listed() -> Vec<(GeneratorId, GeneratorId, Vec<(f64, Option<GeneratorId>)>)> {
    vec![
        (K0, KPlus, vec![(1.0, Some(KPlus))]),
        (K0, KMinus, vec![(-1.0, Some(KMinus))]),
        (KPlus, KMinus, vec![(-2.0, Some(K0))]),
        (K0, VPlus, vec![(0.5, Some(VPlus))]),
        (K0, VMinus, vec![(-0.5, Some(VMinus))]),
        (K0, WPlus, vec![(0.5, Some(WPlus))]),
        (K0, WMinus, vec![(-0.5, Some(WMinus))]),
        (KPlus, VMinus, vec![(-1.0, Some(VPlus))]),
        (KMinus, VPlus, vec![(1.0, Some(VMinus))]),
        (KPlus, WMinus, vec![(-1.0, Some(WPlus))]),
        (KMinus, WPlus, vec![(1.0, Some(WMinus))]),
        (Y, VPlus, vec![(0.5, Some(VPlus))]),
        (Y, VMinus, vec![(0.5, Some(VMinus))]),
        (Y, WPlus, vec![(-0.5, Some(WPlus))]),
        (Y, WMinus, vec![(-0.5, Some(WMinus))]),
        (VPlus, WPlus, vec![(1.0, Some(KPlus))]),
        (VMinus, WMinus, vec![(1.0, Some(KMinus))]),
        (VPlus, WMinus, vec![(1.0, Some(K0)), (-1.0, Some(Y))]),
        (VMinus, WPlus, vec![(1.0, Some(K0)), (1.0, Some(Y))]),
    ]
}

/// Every bracket between two generators (32 unordered pairs, an odd
/// generator paired with itself included), with vanishing right-hand sides
/// for the unlisted ones.
pub fn relations() -> Vec<Relation> {
    let table = listed();
    let mut out = Vec::new();
    for (i, &l) in GeneratorId::ALL.iter().enumerate() {
        for &r in &GeneratorId::ALL[i..] {
            let both_odd = l.parity() == Parity::Odd && r.parity() == Parity::Odd;
            if l == r && !both_odd {
                continue;
            }
            let kind = if both_odd { RelationKind::Anticommutator } else { RelationKind::Commutator };
            let rhs = table
                .iter()
                .find_map(|(a, b, rhs)| {
                    if (*a, *b) == (l, r) {
                        Some(rhs.clone())
                    } else if (*a, *b) == (r, l) {
                        let sign = if kind == RelationKind::Commutator { -1.0 } else { 1.0 };
                        Some(rhs.iter().map(|(c, g)| (sign * c, *g)).collect())
                    } else {
                        None
                    }
                })
                .unwrap_or_default();
            out.push(Relation { kind, left: l, right: r, rhs });
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelationResidual {
    pub relation: String,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StructureReport {
    pub relations: Vec<RelationResidual>,
    pub max_residual: f64,
}

impl StructureReport {
    pub fn worst(&self) -> Option<&RelationResidual> {
        self.relations.iter().max_by(|a, b| a.residual.total_cmp(&b.residual))
    }
}

/// Max-abs residual of every relation over columns with `interior[j]`,
/// all rows. `mats` is indexed by [`GeneratorId::index`].
pub fn check_structure_constants(mats: &[DMatrix<f64>], interior: &[bool]) -> StructureReport {
    let cols: Vec<usize> = (0..interior.len()).filter(|&j| interior[j]).collect();
    let mut out = Vec::new();
    let mut max_residual = 0.0f64;
    for rel in relations() {
        let (a, b) = (&mats[rel.left.index()], &mats[rel.right.index()]);
        let mut lhs = a * b;
        match rel.kind {
            RelationKind::Commutator => lhs -= b * a,
            RelationKind::Anticommutator => lhs += b * a,
        }
        for (c, g) in &rel.rhs {
            match g {
                Some(g) => lhs -= &mats[g.index()] * *c,
                None => {
                    for i in 0..lhs.nrows() {
                        lhs[(i, i)] -= c;
                    }
                }
            }
        }
        let residual = cols.iter().map(|&j| lhs.column(j).amax()).fold(0.0, f64::max);
        max_residual = max_residual.max(residual);
        out.push(RelationResidual { relation: rel.name(), residual });
    }
    StructureReport { relations: out, max_residual }
}

/// Largest of `|M(G) - M(G†)ᵀ|` over all generators and entries.
pub fn hermiticity_residual(mats: &[DMatrix<f64>]) -> f64 {
    GeneratorId::ALL
        .iter()
        .map(|g| (&mats[g.index()] - mats[g.adjoint().index()].transpose()).abs().max())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_table_shape() {
        let rels = relations();
        assert_eq!(rels.len(), 6 + 16 + 10);
        let vw = rels.iter().find(|r| r.left == VMinus && r.right == WPlus).unwrap();
        assert_eq!(vw.kind, RelationKind::Anticommutator);
        assert_eq!(vw.rhs.len(), 2);
        let vv = rels.iter().find(|r| r.left == VPlus && r.right == VPlus).unwrap();
        assert!(vv.rhs.is_empty());
        // reversed ordering picks up the commutator sign
        let kk = rels.iter().find(|r| r.left == KPlus && r.right == KMinus).unwrap();
        assert_eq!(kk.rhs, vec![(-2.0, Some(K0))]);
        let yk = rels.iter().find(|r| r.left == KMinus && r.right == VPlus).unwrap();
        assert_eq!(yk.rhs, vec![(1.0, Some(VMinus))]);
    }
}
