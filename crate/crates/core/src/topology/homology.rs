//! Reduced integer homology of finite simplicial sets via normalized chains.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize, Serializer};

use super::snf::{invariant_factors, SparseMatrix};
use super::sset::FiniteSSet;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyResult {
    /// Reduced Betti numbers `b̃₀, b̃₁, …` up to the top dimension.
    pub betti: Vec<usize>,
    /// Torsion coefficients (invariant factors > 1) per degree.
    #[serde(serialize_with = "torsion_as_strings", deserialize_with = "torsion_from_strings")]
    pub torsion: Vec<Vec<BigInt>>,
    /// The empty simplicial set has `H̃₋₁ = ℤ`.
    pub empty: bool,
}

fn torsion_as_strings<S: Serializer>(t: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let strings: Vec<Vec<String>> = t
        .iter()
        .map(|d| d.iter().map(ToString::to_string).collect())
        .collect();
    strings.serialize(s)
}

fn torsion_from_strings<'de, D: serde::Deserializer<'de>>(
    d: D,
) -> std::result::Result<Vec<Vec<BigInt>>, D::Error> {
    let strings: Vec<Vec<String>> = Vec::deserialize(d)?;
    strings
        .into_iter()
        .map(|level| {
            level
                .into_iter()
                .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
                .collect()
        })
        .collect()
}

impl HomologyResult {
    pub fn betti(&self, d: usize) -> usize {
        self.betti.get(d).copied().unwrap_or(0)
    }

    pub fn torsion_free(&self) -> bool {
        self.torsion.iter().all(Vec::is_empty)
    }

    /// All reduced homology vanishes (and the space is nonempty).
    pub fn is_acyclic(&self) -> bool {
        !self.empty && self.torsion_free() && self.betti.iter().all(|&b| b == 0)
    }

    /// Reduced homology of a wedge of `count` spheres of dimension `d`.
    pub fn is_wedge_of_spheres(&self, d: usize, count: usize) -> bool {
        !self.empty
            && self.torsion_free()
            && (0..self.betti.len().max(d + 1)).all(|k| self.betti(k) == if k == d { count } else { 0 })
    }

    pub fn reduced_euler(&self) -> i64 {
        let base: i64 = self
            .betti
            .iter()
            .enumerate()
            .map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        if self.empty {
            base - 1
        } else {
            base
        }
    }
}

impl std::fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.empty {
            return write!(f, "empty (H̃₋₁ = ℤ)");
        }
        let parts: Vec<String> = self
            .betti
            .iter()
            .enumerate()
            .map(|(d, b)| {
                if self.torsion[d].is_empty() {
                    format!("b̃{d}={b}")
                } else {
                    let t: Vec<String> = self.torsion[d].iter().map(ToString::to_string).collect();
                    format!("b̃{d}={b} torsion [{}]", t.join(","))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Boundary `∂_d : C_d → C_{d-1}` on normalized chains (rows index
/// `(d-1)`-simplices).
pub fn boundary_matrix(x: &FiniteSSet, d: usize) -> SparseMatrix {
    let mut m = SparseMatrix::new(x.count(d - 1), x.count(d));
    let mut acc: std::collections::BTreeMap<usize, i64> = std::collections::BTreeMap::new();
    for col in 0..x.count(d) {
        acc.clear();
        for (i, f) in x.faces(d, col).iter().enumerate() {
            if f.is_degenerate() {
                continue;
            }
            let sign = if i % 2 == 0 { 1 } else { -1 };
            *acc.entry(f.target).or_insert(0) += sign;
        }
        for (&row, &v) in &acc {
            m.push(row, col, v);
        }
    }
    m
}

/// Reduced integer homology. Fails when the complex has simplices above
/// `max_dim`.
pub fn homology(x: &FiniteSSet, max_dim: Option<usize>) -> Result<HomologyResult> {
    let Some(top) = x.dim() else {
        return Ok(HomologyResult {
            betti: Vec::new(),
            torsion: Vec::new(),
            empty: true,
        });
    };
    if let Some(limit) = max_dim {
        if top > limit {
            return Err(Error::BudgetExceeded {
                what: format!("complex of dimension {top}"),
                limit,
            });
        }
    }
    // factors[d] = invariant factors of ∂_d, with ∂_0 the augmentation
    let mut factors: Vec<Vec<BigInt>> = Vec::with_capacity(top + 2);
    factors.push(if x.count(0) > 0 { vec![BigInt::one()] } else { Vec::new() });
    for d in 1..=top {
        factors.push(invariant_factors(&boundary_matrix(x, d)));
    }
    factors.push(Vec::new());
    let mut betti = Vec::with_capacity(top + 1);
    let mut torsion = Vec::with_capacity(top + 1);
    for d in 0..=top {
        let cycles = x.count(d) - factors[d].len();
        betti.push(cycles - factors[d + 1].len());
        torsion.push(
            factors[d + 1]
                .iter()
                .filter(|f| !f.is_one())
                .cloned()
                .collect(),
        );
    }
    let result = HomologyResult {
        betti,
        torsion,
        empty: false,
    };
    if result.reduced_euler() != x.euler_characteristic() - 1 {
        return Err(Error::Internal(format!(
            "Euler characteristic mismatch: {} vs {}",
            result.reduced_euler(),
            x.euler_characteristic() - 1
        )));
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::sset::Face;

    fn circle() -> FiniteSSet {
        // one vertex, one edge with both faces at the vertex
        FiniteSSet::from_faces(vec![
            vec![Vec::new()],
            vec![vec![Face::nondegenerate(0), Face::nondegenerate(0)]],
        ])
        .unwrap()
    }

    #[test]
    fn point_is_acyclic() {
        let h = homology(&FiniteSSet::point(), None).unwrap();
        assert!(h.is_acyclic());
    }

    #[test]
    fn minimal_circle() {
        let h = homology(&circle(), None).unwrap();
        assert!(h.is_wedge_of_spheres(1, 1));
    }

    #[test]
    fn empty_set() {
        let h = homology(&FiniteSSet::default(), None).unwrap();
        assert!(h.empty && !h.is_acyclic());
        assert_eq!(h.reduced_euler(), -1);
    }

    #[test]
    fn projective_plane_has_torsion() {
        // RP²: one vertex, one loop e, one triangle with faces (e, s₀v, e)
        let rp2 = FiniteSSet::from_faces(vec![
            vec![Vec::new()],
            vec![vec![Face::nondegenerate(0), Face::nondegenerate(0)]],
            vec![vec![
                Face::nondegenerate(0),
                Face {
                    target: 0,
                    degeneracies: vec![0],
                },
                Face::nondegenerate(0),
            ]],
        ])
        .unwrap();
        let h = homology(&rp2, None).unwrap();
        assert_eq!(h.betti, vec![0, 0, 0]);
        assert_eq!(h.torsion[1], vec![BigInt::from(2)]);
    }

    #[test]
    fn dimension_limit() {
        assert!(matches!(
            homology(&circle(), Some(0)),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let h = homology(&circle(), None).unwrap();
        let s = serde_json::to_string(&h).unwrap();
        let back: HomologyResult = serde_json::from_str(&s).unwrap();
        assert_eq!(back, h);
    }
}
