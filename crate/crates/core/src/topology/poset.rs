use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::sset::{Face, FiniteSSet};
use crate::caps::Caps;
use crate::error::{invalid, Error, Result};

/// Finite partial order on a list of named elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PosetWire", into = "PosetWire")]
pub struct FinitePoset {
    ids: Vec<String>,
    le: Vec<Vec<bool>>,
}

impl FinitePoset {
    /// Validates that `le` is reflexive, antisymmetric and transitive.
    pub fn new(ids: Vec<String>, le: Vec<Vec<bool>>) -> Result<Self> {
        let n = ids.len();
        if le.len() != n || le.iter().any(|r| r.len() != n) {
            return Err(invalid("relation matrix has the wrong shape"));
        }
        for i in 0..n {
            if !le[i][i] {
                return Err(invalid(format!("relation not reflexive at `{}`", ids[i])));
            }
            for j in 0..n {
                if i != j && le[i][j] && le[j][i] {
                    return Err(invalid(format!(
                        "`{}` and `{}` are mutually below each other",
                        ids[i], ids[j]
                    )));
                }
                if le[i][j] {
                    for k in 0..n {
                        if le[j][k] && !le[i][k] {
                            return Err(invalid("relation not transitive"));
                        }
                    }
                }
            }
        }
        Ok(FinitePoset { ids, le })
    }

    /// Poset on `elements` ordered by `leq`, which must be a partial order.
    pub fn from_leq<T>(
        elements: &[T],
        mut id: impl FnMut(&T) -> String,
        mut leq: impl FnMut(&T, &T) -> bool,
    ) -> Result<Self> {
        let ids = elements.iter().map(&mut id).collect();
        let le = elements
            .iter()
            .map(|x| elements.iter().map(|y| leq(x, y)).collect())
            .collect();
        Self::new(ids, le)
    }

    /// Poset generated by the reflexive-transitive closure of `relations`.
    pub fn from_relations(ids: Vec<String>, relations: &[(usize, usize)]) -> Result<Self> {
        let n = ids.len();
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in relations {
            if i >= n || j >= n {
                return Err(Error::IndexOutOfRange {
                    index: i.max(j),
                    bound: n,
                });
            }
            le[i][j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if le[i][k] {
                    for j in 0..n {
                        if le[k][j] {
                            le[i][j] = true;
                        }
                    }
                }
            }
        }
        Self::new(ids, le)
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.le[i][j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.le[i][j]
    }

    /// Covering pairs `(i, j)`: `i < j` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) && !(0..n).any(|k| self.lt(i, k) && self.lt(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| !(0..self.len()).any(|j| self.lt(j, i)))
            .collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| !(0..self.len()).any(|j| self.lt(i, j)))
            .collect()
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq(i, j)))
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq(j, i)))
    }

    /// A global minimum or maximum makes the order complex a cone.
    pub fn is_cone(&self) -> bool {
        self.minimum().is_some() || self.maximum().is_some()
    }

    pub fn is_antichain(&self) -> bool {
        (0..self.len()).all(|i| (0..self.len()).all(|j| i == j || !self.leq(i, j)))
    }

    /// Induced order on the listed elements, in the given order.
    pub fn subposet(&self, keep: &[usize]) -> Result<Self> {
        if let Some(&bad) = keep.iter().find(|&&k| k >= self.len()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                bound: self.len(),
            });
        }
        Ok(FinitePoset {
            ids: keep.iter().map(|&k| self.ids[k].clone()).collect(),
            le: keep
                .iter()
                .map(|&i| keep.iter().map(|&j| self.le[i][j]).collect())
                .collect(),
        })
    }

    /// `↓q = {p : p ≤ q}`.
    pub fn down_set(&self, q: usize) -> Vec<usize> {
        (0..self.len()).filter(|&p| self.leq(p, q)).collect()
    }

    /// Nerve: nondegenerate `k`-simplices are strict chains `p₀ < ⋯ < p_k`.
    pub fn order_complex(&self, caps: &Caps) -> Result<FiniteSSet> {
        Ok(self.chains(caps)?.0)
    }

    /// Order complex together with the chains indexing each dimension.
    pub fn chains(&self, caps: &Caps) -> Result<(FiniteSSet, Vec<Vec<Vec<usize>>>)> {
        let n = self.len();
        let mut levels: Vec<Vec<Vec<usize>>> = Vec::new();
        let mut total = 0usize;
        let mut stack: Vec<Vec<usize>> = (0..n).rev().map(|i| vec![i]).collect();
        let above: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).filter(|&j| self.lt(i, j)).collect())
            .collect();
        while let Some(chain) = stack.pop() {
            total += 1;
            caps.check_simplices(total)?;
            let d = chain.len() - 1;
            if levels.len() <= d {
                levels.resize_with(d + 1, Vec::new);
            }
            let last = *chain.last().unwrap();
            for &next in above[last].iter().rev() {
                let mut longer = chain.clone();
                longer.push(next);
                stack.push(longer);
            }
            levels[d].push(chain);
        }
        for level in &mut levels {
            level.sort();
        }
        let index: Vec<HashMap<&[usize], usize>> = levels
            .iter()
            .map(|l| l.iter().enumerate().map(|(k, c)| (c.as_slice(), k)).collect())
            .collect();
        let mut faces = Vec::with_capacity(levels.len());
        for (d, level) in levels.iter().enumerate() {
            let rows = level
                .iter()
                .map(|chain| {
                    if d == 0 {
                        return Vec::new();
                    }
                    (0..=d)
                        .map(|i| {
                            let mut f = chain.clone();
                            f.remove(i);
                            Face::nondegenerate(index[d - 1][f.as_slice()])
                        })
                        .collect()
                })
                .collect();
            faces.push(rows);
        }
        Ok((FiniteSSet::from_faces(faces)?, levels))
    }
}

/// `f/q = {p ∈ P : f(p) ≤ q}` for a monotone `f : P → Q` given as an index
/// map. Returns the comma poset and the indices of its elements in `P`.
pub fn comma_poset(
    p: &FinitePoset,
    q: &FinitePoset,
    f: &[usize],
    target: usize,
) -> Result<(FinitePoset, Vec<usize>)> {
    if f.len() != p.len() {
        return Err(Error::DimensionMismatch(f.len(), p.len()));
    }
    if target >= q.len() {
        return Err(Error::IndexOutOfRange {
            index: target,
            bound: q.len(),
        });
    }
    if let Some(&bad) = f.iter().find(|&&v| v >= q.len()) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            bound: q.len(),
        });
    }
    for i in 0..p.len() {
        for j in 0..p.len() {
            if p.leq(i, j) && !q.leq(f[i], f[j]) {
                return Err(invalid(format!(
                    "map is not monotone at `{}` ≤ `{}`",
                    p.ids[i], p.ids[j]
                )));
            }
        }
    }
    let keep: Vec<usize> = (0..p.len()).filter(|&i| q.leq(f[i], target)).collect();
    Ok((p.subposet(&keep)?, keep))
}

#[derive(Serialize, Deserialize)]
struct PosetWire {
    elements: Vec<String>,
    /// Strict relations `i < j` by index.
    less: Vec<(usize, usize)>,
}

impl TryFrom<PosetWire> for FinitePoset {
    type Error = Error;

    fn try_from(w: PosetWire) -> Result<Self> {
        FinitePoset::from_relations(w.elements, &w.less)
    }
}

impl From<FinitePoset> for PosetWire {
    fn from(p: FinitePoset) -> Self {
        let mut less = Vec::new();
        for i in 0..p.len() {
            for j in 0..p.len() {
                if p.lt(i, j) {
                    less.push((i, j));
                }
            }
        }
        PosetWire {
            elements: p.ids,
            less,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::homology::homology;

    fn chain(k: usize) -> FinitePoset {
        let items: Vec<usize> = (0..k).collect();
        FinitePoset::from_leq(&items, |i| i.to_string(), |a, b| a <= b).unwrap()
    }

    #[test]
    fn chain_complex_of_a_chain() {
        let x = chain(3).order_complex(&Caps::default()).unwrap();
        assert_eq!(x.counts(), vec![3, 3, 1]);
        x.check_identities().unwrap();
        assert!(homology(&x, None).unwrap().is_acyclic());
    }

    #[test]
    fn antichain_is_two_points() {
        let p = FinitePoset::from_relations(vec!["x".into(), "y".into()], &[]).unwrap();
        let x = p.order_complex(&Caps::default()).unwrap();
        assert_eq!(x.counts(), vec![2]);
        let h = homology(&x, None).unwrap();
        assert_eq!(h.betti, vec![1]);
        assert!(!p.is_cone());
    }

    #[test]
    fn cones_and_empties() {
        assert!(chain(4).is_cone());
        let empty = FinitePoset::new(Vec::new(), Vec::new()).unwrap();
        assert!(!empty.is_cone());
        assert!(empty.order_complex(&Caps::default()).unwrap().is_empty());
    }

    #[test]
    fn rejects_non_orders() {
        let ids = vec!["x".to_string(), "y".to_string()];
        assert!(FinitePoset::new(ids.clone(), vec![vec![true, true], vec![true, true]]).is_err());
        assert!(FinitePoset::new(ids, vec![vec![false, false], vec![false, true]]).is_err());
    }

    #[test]
    fn comma_of_identity() {
        let p = chain(4);
        let id: Vec<usize> = (0..4).collect();
        let (top, keep) = comma_poset(&p, &p, &id, 3).unwrap();
        assert_eq!(top.len(), 4);
        assert_eq!(keep, id);
        let (low, _) = comma_poset(&p, &p, &id, 1).unwrap();
        assert_eq!(low.len(), 2);
        assert!(comma_poset(&p, &p, &id, 9).is_err());
        let reversed: Vec<usize> = (0..4).rev().collect();
        assert!(comma_poset(&p, &p, &reversed, 0).is_err());
    }

    #[test]
    fn covers_of_square() {
        // bottom < left, right < top
        let ids = ["b", "l", "r", "t"].map(String::from).to_vec();
        let p = FinitePoset::from_relations(ids, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(p.covers(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(p.minimum(), Some(0));
        let json = serde_json::to_string(&p).unwrap();
        let back: FinitePoset = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
