//! Finite simplicial sets stored by their nondegenerate simplices.

use std::collections::{BTreeSet, HashMap};
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};

/// A possibly degenerate simplex `s_{j₁} s_{j₂} ⋯ s_{j_r} y` with `y`
/// nondegenerate and `j₁ > j₂ > ⋯ > j_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Face {
    pub target: usize,
    pub degeneracies: Vec<usize>,
}

impl Face {
    pub fn nondegenerate(target: usize) -> Self {
        Face {
            target,
            degeneracies: Vec::new(),
        }
    }

    pub fn is_degenerate(&self) -> bool {
        !self.degeneracies.is_empty()
    }
}

/// Rewrites a degeneracy word into decreasing normal form using
/// `s_i s_j = s_{j+1} s_i` for `i ≤ j`.
pub fn normalize_degeneracies(mut word: Vec<usize>) -> Vec<usize> {
    loop {
        let Some(k) = (0..word.len().saturating_sub(1)).find(|&k| word[k] <= word[k + 1]) else {
            return word;
        };
        let (i, j) = (word[k], word[k + 1]);
        word[k] = j + 1;
        word[k + 1] = i;
    }
}

/// Finite simplicial set: `faces[d][x]` lists `d_0 x, …, d_d x` for the
/// `x`-th nondegenerate `d`-simplex (empty in dimension 0).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteSSet {
    faces: Vec<Vec<Vec<Face>>>,
}

/// How a model exposes its simplicial structure.
pub trait SimplicialBuilder {
    type Simplex: Clone + Eq + Hash + Ord;

    fn dim(&self, x: &Self::Simplex) -> usize;

    fn face(&self, x: &Self::Simplex, i: usize) -> Self::Simplex;

    /// `Some((j, y))` with `x = s_j y` when `x` is degenerate.
    fn split_degeneracy(&self, x: &Self::Simplex) -> Option<(usize, Self::Simplex)>;
}

impl FiniteSSet {
    /// Builds from explicit face data, validating targets and arities.
    pub fn from_faces(faces: Vec<Vec<Vec<Face>>>) -> Result<Self> {
        for (d, level) in faces.iter().enumerate() {
            for (x, fs) in level.iter().enumerate() {
                let expected = if d == 0 { 0 } else { d + 1 };
                if fs.len() != expected {
                    return Err(Error::InvalidInput(format!(
                        "simplex {x} in dimension {d} has {} faces",
                        fs.len()
                    )));
                }
                for f in fs {
                    let td = (d - 1)
                        .checked_sub(f.degeneracies.len())
                        .ok_or_else(|| Error::InvalidInput("degeneracy word too long".into()))?;
                    if f.target >= faces[td].len() {
                        return Err(Error::IndexOutOfRange {
                            index: f.target,
                            bound: faces[td].len(),
                        });
                    }
                    if normalize_degeneracies(f.degeneracies.clone()) != f.degeneracies {
                        return Err(Error::InvalidInput("degeneracy word not normalized".into()));
                    }
                }
            }
        }
        let mut out = FiniteSSet { faces };
        while out.faces.last().map_or(false, Vec::is_empty) {
            out.faces.pop();
        }
        Ok(out)
    }

    /// Closes `generators` under faces and records the face data. Returns the
    /// simplicial set together with the nondegenerate simplices by dimension,
    /// sorted.
    pub fn from_generators<B: SimplicialBuilder>(
        builder: &B,
        generators: impl IntoIterator<Item = B::Simplex>,
        caps: &Caps,
    ) -> Result<(Self, Vec<Vec<B::Simplex>>)> {
        let core = |x: B::Simplex| -> (B::Simplex, Vec<usize>) {
            let mut x = x;
            let mut word = Vec::new();
            while let Some((j, y)) = builder.split_degeneracy(&x) {
                word.push(j);
                x = y;
            }
            (x, normalize_degeneracies(word))
        };
        let mut levels: Vec<BTreeSet<B::Simplex>> = Vec::new();
        let mut pending: Vec<B::Simplex> = Vec::new();
        let mut total = 0usize;
        let mut add = |x: B::Simplex,
                       levels: &mut Vec<BTreeSet<B::Simplex>>,
                       pending: &mut Vec<B::Simplex>|
         -> Result<()> {
            let d = builder.dim(&x);
            if levels.len() <= d {
                levels.resize_with(d + 1, BTreeSet::new);
            }
            if levels[d].insert(x.clone()) {
                total += 1;
                caps.check_simplices(total)?;
                pending.push(x);
            }
            Ok(())
        };
        for g in generators {
            add(core(g).0, &mut levels, &mut pending)?;
        }
        while let Some(x) = pending.pop() {
            let d = builder.dim(&x);
            if d == 0 {
                continue;
            }
            for i in 0..=d {
                add(core(builder.face(&x, i)).0, &mut levels, &mut pending)?;
            }
        }
        let sorted: Vec<Vec<B::Simplex>> = levels
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        let index: Vec<HashMap<&B::Simplex, usize>> = sorted
            .iter()
            .map(|l| l.iter().enumerate().map(|(k, x)| (x, k)).collect())
            .collect();
        let mut faces = Vec::with_capacity(sorted.len());
        for (d, level) in sorted.iter().enumerate() {
            let mut rows = Vec::with_capacity(level.len());
            for x in level {
                let mut fs = Vec::new();
                if d > 0 {
                    for i in 0..=d {
                        let (y, word) = core(builder.face(x, i));
                        let td = builder.dim(&y);
                        fs.push(Face {
                            target: index[td][&y],
                            degeneracies: word,
                        });
                    }
                }
                rows.push(fs);
            }
            faces.push(rows);
        }
        Ok((FiniteSSet::from_faces(faces)?, sorted))
    }

    /// Top dimension, or `None` for the empty simplicial set.
    pub fn dim(&self) -> Option<usize> {
        self.faces.len().checked_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Number of nondegenerate simplices in each dimension.
    pub fn counts(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn count(&self, d: usize) -> usize {
        self.faces.get(d).map_or(0, Vec::len)
    }

    pub fn total(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    pub fn faces(&self, d: usize, x: usize) -> &[Face] {
        &self.faces[d][x]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .enumerate()
            .map(|(d, l)| if d % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) })
            .sum()
    }

    /// `d_i` of a possibly degenerate simplex of dimension `dim`.
    pub fn face_of(&self, dim: usize, x: &Face, i: usize) -> Face {
        let mut prefix: Vec<usize> = Vec::new();
        let mut i = i;
        for (k, &j) in x.degeneracies.iter().enumerate() {
            if i == j || i == j + 1 {
                prefix.extend_from_slice(&x.degeneracies[k + 1..]);
                return Face {
                    target: x.target,
                    degeneracies: normalize_degeneracies(prefix),
                };
            } else if i < j {
                prefix.push(j - 1);
            } else {
                prefix.push(j);
                i -= 1;
            }
        }
        let core_dim = dim - x.degeneracies.len();
        let f = &self.faces[core_dim][x.target][i];
        prefix.extend_from_slice(&f.degeneracies);
        Face {
            target: f.target,
            degeneracies: normalize_degeneracies(prefix),
        }
    }

    /// Checks `d_i d_j = d_{j-1} d_i` for `i < j` on every nondegenerate
    /// simplex.
    pub fn check_identities(&self) -> Result<()> {
        for d in 2..self.faces.len() {
            for x in 0..self.faces[d].len() {
                let top = Face::nondegenerate(x);
                for j in 1..=d {
                    for i in 0..j {
                        let lhs = self.face_of(d - 1, &self.face_of(d, &top, j), i);
                        let rhs = self.face_of(d - 1, &self.face_of(d, &top, i), j - 1);
                        if lhs != rhs {
                            return Err(Error::Internal(format!(
                                "d_{i} d_{j} ≠ d_{} d_{i} on simplex {x} of dimension {d}",
                                j - 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Nerve-style simplicial set of a single point.
    pub fn point() -> Self {
        FiniteSSet {
            faces: vec![vec![Vec::new()]],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Sequences over a finite alphabet, as in the nerve of a chaotic
    /// category.
    struct Words;

    impl SimplicialBuilder for Words {
        type Simplex = Vec<u8>;
        fn dim(&self, x: &Vec<u8>) -> usize {
            x.len() - 1
        }
        fn face(&self, x: &Vec<u8>, i: usize) -> Vec<u8> {
            let mut y = x.clone();
            y.remove(i);
            y
        }
        fn split_degeneracy(&self, x: &Vec<u8>) -> Option<(usize, Vec<u8>)> {
            let j = (0..x.len().saturating_sub(1)).find(|&j| x[j] == x[j + 1])?;
            Some((j, self.face(x, j + 1)))
        }
    }

    #[test]
    fn normal_form_of_words() {
        assert_eq!(normalize_degeneracies(vec![0, 0]), vec![1, 0]);
        assert_eq!(normalize_degeneracies(vec![2, 1]), vec![2, 1]);
        assert_eq!(normalize_degeneracies(vec![0, 1]), vec![2, 0]);
    }

    #[test]
    fn generated_closure() {
        let (x, simplices) =
            FiniteSSet::from_generators(&Words, [vec![0, 1, 0]], &Caps::default()).unwrap();
        assert_eq!(simplices[0], vec![vec![0], vec![1]]);
        assert_eq!(simplices[1], vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(x.counts(), vec![2, 2, 1]);
        // d_1 (0,1,0) = (0,0) = s_0 (0)
        assert_eq!(
            x.faces(2, 0)[1],
            Face {
                target: 0,
                degeneracies: vec![0]
            }
        );
        x.check_identities().unwrap();
    }

    #[test]
    fn budget_is_enforced() {
        let caps = Caps {
            max_simplices: 2,
            ..Caps::default()
        };
        assert!(matches!(
            FiniteSSet::from_generators(&Words, [vec![0, 1, 0]], &caps),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn rejects_bad_faces() {
        let bad = vec![vec![Vec::new()], vec![vec![Face::nondegenerate(0), Face::nondegenerate(3)]]];
        assert!(FiniteSSet::from_faces(bad).is_err());
    }
}
