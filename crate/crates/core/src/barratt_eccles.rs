//! Simplices of the Barratt–Eccles operad: chains `L₀ → L₁ → … → L_k` of
//! linear orders on a vertex set, filtered by how often pairs switch.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{invalid, precondition, Error, Result};
use crate::graphs::{Variant, WeightedTournament};
use crate::topology::sset::{FiniteSSet, SimplicialBuilder};
use crate::vertex;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "BEWire", into = "BEWire")]
pub struct BESimplex {
    orders: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct BEWire {
    orders: Vec<Vec<String>>,
}

impl TryFrom<BEWire> for BESimplex {
    type Error = Error;
    fn try_from(w: BEWire) -> Result<Self> {
        BESimplex::new(w.orders)
    }
}

impl From<BESimplex> for BEWire {
    fn from(x: BESimplex) -> Self {
        BEWire { orders: x.orders }
    }
}

impl BESimplex {
    pub fn new<S: Into<String>>(orders: impl IntoIterator<Item = impl IntoIterator<Item = S>>) -> Result<Self> {
        let orders: Vec<Vec<String>> = orders
            .into_iter()
            .map(|o| o.into_iter().map(Into::into).collect())
            .collect();
        let Some(first) = orders.first() else {
            return Err(invalid("a simplex needs at least one order"));
        };
        let set = vertex::vertex_set(first.iter())?;
        for o in &orders {
            let mut sorted = o.clone();
            sorted.sort();
            if sorted != set || o.len() != set.len() {
                return Err(invalid("every order must list the same vertices exactly once"));
            }
        }
        Ok(BESimplex { orders })
    }

    /// Parses rows like `"abc,bac"` with single-character vertices.
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(
            s.split(',')
                .map(|row| row.trim().chars().map(String::from).collect::<Vec<_>>()),
        )
    }

    /// The constant 0-simplex on one order.
    pub fn vertex<S: Into<String>>(order: impl IntoIterator<Item = S>) -> Result<Self> {
        Self::new([order])
    }

    pub fn orders(&self) -> &[Vec<String>] {
        &self.orders
    }

    pub fn dim(&self) -> usize {
        self.orders.len() - 1
    }

    pub fn vertices(&self) -> Vec<String> {
        let mut v = self.orders[0].clone();
        v.sort();
        v
    }

    fn before(order: &[String], a: &str, b: &str) -> bool {
        order.iter().position(|x| x == a) < order.iter().position(|x| x == b)
    }

    /// One plus the number of steps that switch `a` and `b`.
    pub fn weight(&self, a: &str, b: &str) -> Result<u32> {
        if a == b {
            return Err(invalid("weight needs two distinct vertices"));
        }
        let vs = self.vertices();
        vertex::index_of(&vs, a)?;
        vertex::index_of(&vs, b)?;
        let rel: Vec<bool> = self.orders.iter().map(|o| Self::before(o, a, b)).collect();
        Ok(1 + rel.windows(2).filter(|w| w[0] != w[1]).count() as u32)
    }

    pub fn max_weight(&self) -> u32 {
        let vs = self.vertices();
        let mut best = 1;
        for (i, a) in vs.iter().enumerate() {
            for b in &vs[i + 1..] {
                best = best.max(self.weight(a, b).unwrap());
            }
        }
        best
    }

    pub fn in_gamma_n(&self, n: u32) -> bool {
        self.max_weight() <= n
    }

    pub fn face(&self, i: usize) -> Result<Self> {
        if self.dim() == 0 || i > self.dim() {
            return Err(Error::IndexOutOfRange { index: i, bound: self.dim() + 1 });
        }
        let mut orders = self.orders.clone();
        orders.remove(i);
        Ok(BESimplex { orders })
    }

    pub fn degeneracy(&self, j: usize) -> Result<Self> {
        if j > self.dim() {
            return Err(Error::IndexOutOfRange { index: j, bound: self.dim() + 1 });
        }
        let mut orders = self.orders.clone();
        orders.insert(j, orders[j].clone());
        Ok(BESimplex { orders })
    }

    pub fn is_degenerate(&self) -> bool {
        self.orders.windows(2).any(|w| w[0] == w[1])
    }

    /// Substitutes the orders of `y` for `a`, row by row.
    pub fn compose(&self, a: &str, y: &Self) -> Result<Self> {
        if self.dim() != y.dim() {
            return Err(Error::DimensionMismatch(self.dim(), y.dim()));
        }
        vertex::substitute(&self.vertices(), a, &y.vertices())?;
        let orders = self
            .orders
            .iter()
            .zip(&y.orders)
            .map(|(l, m)| {
                l.iter()
                    .flat_map(|v| if v == a { m.clone() } else { vec![v.clone()] })
                    .collect()
            })
            .collect();
        Ok(BESimplex { orders })
    }

    pub fn relabel(&self, map: &BTreeMap<String, String>) -> Result<Self> {
        Self::new(self.orders.iter().map(|o| {
            o.iter()
                .map(|v| map.get(v).cloned().unwrap_or_else(|| v.clone()))
                .collect::<Vec<_>>()
        }))
    }

    /// Edges follow `L₀`; weights are the switch counts.
    pub fn gamma(&self, max_weight: u32) -> Result<WeightedTournament> {
        let w = self.max_weight();
        if w > max_weight {
            return Err(Error::WeightMismatch(w, max_weight));
        }
        let order = &self.orders[0];
        WeightedTournament::from_order(order, max_weight, |p, q| {
            self.weight(&order[p], &order[q]).unwrap()
        })
    }

    /// Prepends the underlying order of `g`.
    pub fn sigma(&self, g: &WeightedTournament) -> Result<Self> {
        if g.variant() != Variant::Acyclic && !g.is_acyclic() {
            return Err(precondition("σ needs an acyclic graph"));
        }
        let below = self.gamma(g.max_weight()).and_then(|h| h.leq(g)).unwrap_or(false);
        if !below {
            return Err(precondition("γ(x) ≤ g fails"));
        }
        let mut orders = vec![g.underlying_order()?];
        orders.extend(self.orders.iter().cloned());
        let out = BESimplex { orders };
        if !out.gamma(g.max_weight())?.leq(g)? {
            return Err(Error::Internal("γ(σ(x)) ≰ g".into()));
        }
        Ok(out)
    }

    /// Removes the first order: the retraction that σ is a section of.
    pub fn drop_first(&self) -> Result<Self> {
        self.face(0)
    }
}

impl std::fmt::Display for BESimplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sep = if self.orders[0].iter().all(|l| l.chars().count() == 1) { "" } else { " " };
        let rows: Vec<String> = self.orders.iter().map(|o| o.join(sep)).collect();
        write!(f, "{}", rows.join(","))
    }
}

/// Simplicial structure on nerves of `Lin(A)`.
pub struct Nerve;

impl SimplicialBuilder for Nerve {
    type Simplex = BESimplex;

    fn dim(&self, x: &BESimplex) -> usize {
        x.dim()
    }

    fn face(&self, x: &BESimplex, i: usize) -> BESimplex {
        x.face(i).expect("face index in range")
    }

    fn split_degeneracy(&self, x: &BESimplex) -> Option<(usize, BESimplex)> {
        let j = x.orders.windows(2).position(|w| w[0] == w[1])?;
        Some((j, x.face(j + 1).expect("in range")))
    }
}

/// Nondegenerate simplices of `Γₙ(A)`, or of `Γ_g` when `g` is given, as a
/// finite simplicial set.
pub fn enumerate_gamma<S: AsRef<str>>(
    vertices: &[S],
    n: u32,
    g: Option<&WeightedTournament>,
    caps: &Caps,
) -> Result<(FiniteSSet, Vec<Vec<BESimplex>>)> {
    let vs = vertex::vertex_set(vertices.iter().map(AsRef::as_ref))?;
    caps.check_vertices(vs.len())?;
    caps.check_weight(n)?;
    if let Some(g) = g {
        if g.vertices() != vs.as_slice() {
            return Err(Error::VertexMismatch {
                left: vs.clone(),
                right: g.vertices().to_vec(),
            });
        }
        if !g.is_acyclic() {
            return Err(precondition("Γ_g needs an acyclic graph"));
        }
    }
    let k = vs.len();
    let perms: Vec<Vec<usize>> = vertex::permutations(&(0..k).collect::<Vec<_>>())
        .into_iter()
        .map(|p| {
            // position of each vertex
            let mut pos = vec![0; k];
            for (i, &v) in p.iter().enumerate() {
                pos[v] = i;
            }
            pos
        })
        .collect();
    // budget for pair (a, b), a < b, given whether L₀ puts a first
    let budget = |a: usize, b: usize, a_first: bool| -> u32 {
        match g {
            None => n,
            Some(g) => {
                let w = g.weight_at(a, b);
                if g.points(a, b) == a_first {
                    w
                } else {
                    w - 1
                }
            }
        }
    };
    let mut generators = Vec::new();
    let mut total = 0usize;
    let mut chain: Vec<usize> = Vec::new();
    let mut weights = vec![vec![1u32; k]; k];
    fn dfs(
        perms: &[Vec<usize>],
        k: usize,
        chain: &mut Vec<usize>,
        weights: &mut Vec<Vec<u32>>,
        budget: &dyn Fn(usize, usize, bool) -> u32,
        out: &mut Vec<Vec<usize>>,
        total: &mut usize,
        caps: &Caps,
    ) -> Result<()> {
        out.push(chain.clone());
        *total += 1;
        caps.check_simplices(*total)?;
        let last = *chain.last().unwrap();
        let first = &perms[chain[0]];
        for next in 0..perms.len() {
            if next == last {
                continue;
            }
            let mut ok = true;
            let mut bumped = Vec::new();
            for a in 0..k {
                for b in a + 1..k {
                    let was = perms[last][a] < perms[last][b];
                    let now = perms[next][a] < perms[next][b];
                    if was != now {
                        if weights[a][b] + 1 > budget(a, b, first[a] < first[b]) {
                            ok = false;
                        }
                        bumped.push((a, b));
                    }
                }
            }
            if !ok {
                continue;
            }
            for &(a, b) in &bumped {
                weights[a][b] += 1;
            }
            chain.push(next);
            let r = dfs(perms, k, chain, weights, budget, out, total, caps);
            chain.pop();
            for &(a, b) in &bumped {
                weights[a][b] -= 1;
            }
            r?;
        }
        Ok(())
    }
    let mut chains = Vec::new();
    for start in 0..perms.len() {
        let ok = (0..k).all(|a| (a + 1..k).all(|b| budget(a, b, perms[start][a] < perms[start][b]) >= 1));
        if !ok {
            continue;
        }
        chain.push(start);
        dfs(&perms, k, &mut chain, &mut weights, &budget, &mut chains, &mut total, caps)?;
        chain.pop();
    }
    for c in chains {
        let orders: Vec<Vec<String>> = c
            .iter()
            .map(|&p| {
                let mut o = vec![String::new(); k];
                for (v, &i) in perms[p].iter().enumerate() {
                    o[i] = vs[v].clone();
                }
                o
            })
            .collect();
        generators.push(BESimplex { orders });
    }
    FiniteSSet::from_generators(&Nerve, generators, caps)
}
