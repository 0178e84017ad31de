//! Weighted tournaments: the complete graphs operad, its extension by graphs
//! without uniform-weight cycles, proper graphs, and the explicit
//! constructions (cycle reduction, fiber extensions) used to analyse their
//! down-sets.
//!
//! A tournament on a sorted vertex list stores one [`Edge`] per unordered
//! pair `i < j`, recording whether the edge points from the smaller to the
//! larger label and its weight in `1..=max_weight`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{invalid, precondition, Error, Result};
use crate::vertex::{self, index_of};

/// Which poset a tournament is taken to live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Directions form a linear order.
    Acyclic,
    /// No directed cycle of constant weight.
    Extended,
}

/// Edge between the `i`-th and `j`-th vertex (`i < j`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    /// `true` when the edge points from vertex `i` to vertex `j`.
    pub forward: bool,
    pub weight: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "GraphWire", into = "GraphWire")]
pub struct WeightedTournament {
    vertices: Vec<String>,
    max_weight: u32,
    edges: Vec<Edge>,
    variant: Variant,
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl WeightedTournament {
    /// Builds a tournament from a list of directed edges `(from, to, weight)`.
    /// Every unordered pair must appear exactly once.
    pub fn new<I, S>(
        vertices: I,
        edges: &[(&str, &str, u32)],
        max_weight: u32,
        variant: Variant,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vertices = vertex::vertex_set(vertices)?;
        let n = vertices.len();
        let mut slots: Vec<Option<Edge>> = vec![None; pair_count(n)];
        for &(from, to, w) in edges {
            let i = index_of(&vertices, from)?;
            let j = index_of(&vertices, to)?;
            if i == j {
                return Err(invalid(format!("self-loop at `{from}`")));
            }
            let (lo, hi, forward) = if i < j { (i, j, true) } else { (j, i, false) };
            let slot = &mut slots[pair_index(n, lo, hi)];
            if slot.is_some() {
                return Err(invalid(format!("pair {{{from}, {to}}} given twice")));
            }
            *slot = Some(Edge { forward, weight: w });
        }
        let edges = slots
            .into_iter()
            .enumerate()
            .map(|(k, e)| e.ok_or_else(|| invalid(format!("pair #{k} has no edge"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_parts(vertices, edges, max_weight, variant)
    }

    /// Tournament whose direction follows `order` and whose weight on the
    /// pair `(order[p], order[q])`, `p < q`, is `weight(p, q)`.
    pub fn from_order<F>(order: &[String], max_weight: u32, mut weight: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> u32,
    {
        let mut triples = Vec::new();
        for p in 0..order.len() {
            for q in p + 1..order.len() {
                triples.push((order[p].as_str(), order[q].as_str(), weight(p, q)));
            }
        }
        Self::new(order.iter().cloned(), &triples, max_weight, Variant::Acyclic)
    }

    pub(crate) fn from_parts(
        vertices: Vec<String>,
        edges: Vec<Edge>,
        max_weight: u32,
        variant: Variant,
    ) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if max_weight == 0 {
            return Err(invalid("max weight must be at least 1"));
        }
        if edges.len() != pair_count(vertices.len()) {
            return Err(invalid("edge count does not match vertex count"));
        }
        if let Some(e) = edges.iter().find(|e| e.weight == 0 || e.weight > max_weight) {
            return Err(invalid(format!(
                "weight {} outside 1..={max_weight}",
                e.weight
            )));
        }
        let g = WeightedTournament {
            vertices,
            max_weight,
            edges,
            variant,
        };
        match variant {
            Variant::Acyclic if !g.is_acyclic() => Err(invalid("graph has a directed cycle")),
            Variant::Extended if g.has_uniform_cycle() => {
                Err(invalid("graph has a cycle of uniform weight"))
            }
            _ => Ok(g),
        }
    }

    /// The edgeless graph on one vertex: the operad unit.
    pub fn unit(label: impl Into<String>, max_weight: u32, variant: Variant) -> Result<Self> {
        Self::from_parts(vec![label.into()], Vec::new(), max_weight, variant)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    fn edge_at(&self, i: usize, j: usize) -> Edge {
        if i < j {
            self.edges[pair_index(self.len(), i, j)]
        } else {
            let e = self.edges[pair_index(self.len(), j, i)];
            Edge {
                forward: !e.forward,
                weight: e.weight,
            }
        }
    }

    /// `true` when the edge between vertex indices `i` and `j` points `i → j`.
    pub(crate) fn points(&self, i: usize, j: usize) -> bool {
        self.edge_at(i, j).forward
    }

    pub(crate) fn weight_at(&self, i: usize, j: usize) -> u32 {
        self.edge_at(i, j).weight
    }

    /// Weight of the edge between `a` and `b`.
    pub fn weight(&self, a: &str, b: &str) -> Result<u32> {
        let (i, j) = self.pair(a, b)?;
        Ok(self.weight_at(i, j))
    }

    /// `true` when the edge between `a` and `b` is directed `a → b`.
    pub fn directed(&self, a: &str, b: &str) -> Result<bool> {
        let (i, j) = self.pair(a, b)?;
        Ok(self.points(i, j))
    }

    fn pair(&self, a: &str, b: &str) -> Result<(usize, usize)> {
        let i = index_of(&self.vertices, a)?;
        let j = index_of(&self.vertices, b)?;
        if i == j {
            return Err(invalid(format!("`{a}` has no edge to itself")));
        }
        Ok((i, j))
    }

    /// Directed edges `(from, to, weight)` sorted by `(from, to)`.
    pub fn directed_edges(&self) -> Vec<(String, String, u32)> {
        let n = self.len();
        let mut out = Vec::with_capacity(self.edges.len());
        for i in 0..n {
            for j in 0..n {
                if i != j && self.points(i, j) {
                    out.push((
                        self.vertices[i].clone(),
                        self.vertices[j].clone(),
                        self.weight_at(i, j),
                    ));
                }
            }
        }
        out
    }

    fn successors(&self, i: usize, weight: Option<u32>) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&j| {
            j != i && self.points(i, j) && weight.map_or(true, |w| self.weight_at(i, j) == w)
        })
    }

    fn has_cycle_in(&self, weight: Option<u32>) -> bool {
        // Kahn's algorithm on the selected edge class
        let n = self.len();
        let mut indegree = vec![0usize; n];
        for i in 0..n {
            for j in self.successors(i, weight) {
                indegree[j] += 1;
            }
        }
        let mut stack: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        let mut seen = 0;
        while let Some(i) = stack.pop() {
            seen += 1;
            for j in self.successors(i, weight) {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    stack.push(j);
                }
            }
        }
        seen < n
    }

    pub fn is_acyclic(&self) -> bool {
        !self.has_cycle_in(None)
    }

    pub fn has_uniform_cycle(&self) -> bool {
        (1..=self.max_weight).any(|w| self.has_cycle_in(Some(w)))
    }

    /// Vertex indices in the linear order defined by an acyclic tournament.
    pub(crate) fn order_indices(&self) -> Result<Vec<usize>> {
        if !self.is_acyclic() {
            return Err(precondition("underlying order needs an acyclic graph"));
        }
        // in a transitive tournament the position equals the in-degree
        let n = self.len();
        let mut order = vec![0usize; n];
        for i in 0..n {
            let indeg = (0..n).filter(|&j| j != i && self.points(j, i)).count();
            order[indeg] = i;
        }
        Ok(order)
    }

    /// The linear order `b₁ → … → b_p` of an acyclic tournament.
    pub fn underlying_order(&self) -> Result<Vec<String>> {
        Ok(self
            .order_indices()?
            .into_iter()
            .map(|i| self.vertices[i].clone())
            .collect())
    }

    fn check_comparable(&self, other: &Self) -> Result<()> {
        if self.vertices != other.vertices {
            return Err(Error::VertexMismatch {
                left: self.vertices.clone(),
                right: other.vertices.clone(),
            });
        }
        if self.max_weight != other.max_weight {
            return Err(Error::WeightMismatch(self.max_weight, other.max_weight));
        }
        Ok(())
    }

    /// `self ≤ other`: every edge keeps its direction with no larger weight,
    /// or is reversed with a strictly smaller weight.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check_comparable(other)?;
        Ok(self.leq_unchecked(other))
    }

    pub(crate) fn leq_unchecked(&self, other: &Self) -> bool {
        self.edges.iter().zip(&other.edges).all(|(e, f)| {
            if e.forward == f.forward {
                e.weight <= f.weight
            } else {
                e.weight < f.weight
            }
        })
    }

    /// Operadic composition `self ∘_at inner`: the vertex `at` is replaced by
    /// the graph `inner`.
    pub fn compose(&self, at: &str, inner: &Self) -> Result<Self> {
        if self.max_weight != inner.max_weight {
            return Err(Error::WeightMismatch(self.max_weight, inner.max_weight));
        }
        let vertices = vertex::substitute(&self.vertices, at, &inner.vertices)?;
        let ai = index_of(&self.vertices, at)?;
        // source of each new vertex: Left(index in self) or Right(index in inner)
        let origin: Vec<(bool, usize)> = vertices
            .iter()
            .map(|v| match inner.vertices.binary_search(v) {
                Ok(k) => (false, k),
                Err(_) => (true, index_of(&self.vertices, v).expect("outer vertex")),
            })
            .collect();
        let n = vertices.len();
        let mut edges = Vec::with_capacity(pair_count(n));
        for i in 0..n {
            for j in i + 1..n {
                let e = match (origin[i], origin[j]) {
                    ((true, x), (true, y)) => self.edge_at(x, y),
                    ((false, x), (false, y)) => inner.edge_at(x, y),
                    ((true, x), (false, _)) => self.edge_at(x, ai),
                    ((false, _), (true, y)) => self.edge_at(ai, y),
                };
                edges.push(e);
            }
        }
        let variant = if self.variant == inner.variant {
            self.variant
        } else {
            Variant::Extended
        };
        Self::from_parts(vertices, edges, self.max_weight, variant)
    }

    /// Induced sub-tournament on `subset`.
    pub fn restrict<S: AsRef<str>>(&self, subset: &[S]) -> Result<Self> {
        let subset = vertex::vertex_set(subset.iter().map(|s| s.as_ref().to_string()))?;
        let idx = subset
            .iter()
            .map(|v| index_of(&self.vertices, v))
            .collect::<Result<Vec<_>>>()?;
        let mut edges = Vec::with_capacity(pair_count(idx.len()));
        for p in 0..idx.len() {
            for q in p + 1..idx.len() {
                edges.push(self.edge_at(idx[p], idx[q]));
            }
        }
        Self::from_parts(subset, edges, self.max_weight, self.variant)
    }

    /// Action of a bijection on vertex labels (`map` must be injective on
    /// the vertex set; missing labels are kept).
    pub fn relabel(&self, map: &BTreeMap<String, String>) -> Result<Self> {
        let rename = |v: &String| map.get(v).cloned().unwrap_or_else(|| v.clone());
        let triples: Vec<(String, String, u32)> = self
            .directed_edges()
            .into_iter()
            .map(|(a, b, w)| (rename(&a), rename(&b), w))
            .collect();
        let borrowed: Vec<(&str, &str, u32)> = triples
            .iter()
            .map(|(a, b, w)| (a.as_str(), b.as_str(), *w))
            .collect();
        Self::new(
            self.vertices.iter().map(rename),
            &borrowed,
            self.max_weight,
            self.variant,
        )
    }

    /// The inclusion `𝒢ₙ ⊆ 𝒢ₘ` for `m ≥` every weight in use.
    pub fn with_max_weight(&self, m: u32) -> Result<Self> {
        Self::from_parts(self.vertices.clone(), self.edges.clone(), m, self.variant)
    }

    /// Re-tags the graph, checking the new variant's invariant.
    pub fn with_variant(&self, variant: Variant) -> Result<Self> {
        Self::from_parts(self.vertices.clone(), self.edges.clone(), self.max_weight, variant)
    }

    /// All tournaments on `vertices` with weights in `1..=n` satisfying the
    /// variant's invariant, sorted by edge data.
    pub fn enumerate<S: AsRef<str>>(
        vertices: &[S],
        n: u32,
        variant: Variant,
        caps: &Caps,
    ) -> Result<Vec<Self>> {
        let vertices = vertex::vertex_set(vertices.iter().map(|s| s.as_ref().to_string()))?;
        caps.check_vertices(vertices.len())?;
        caps.check_weight(n)?;
        if n == 0 {
            return Err(invalid("max weight must be at least 1"));
        }
        let k = vertices.len();
        let pairs = pair_count(k);
        let mut out = Vec::new();
        match variant {
            Variant::Acyclic => {
                let idx: Vec<usize> = (0..k).collect();
                for order in vertex::permutations(&idx) {
                    let mut position = vec![0usize; k];
                    for (p, &v) in order.iter().enumerate() {
                        position[v] = p;
                    }
                    let directions: Vec<bool> = (0..k)
                        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                        .map(|(i, j)| position[i] < position[j])
                        .collect();
                    push_weightings(&vertices, &directions, n, variant, &mut out);
                }
            }
            Variant::Extended => {
                for mask in 0u64..(1u64 << pairs) {
                    let directions: Vec<bool> = (0..pairs).map(|p| mask >> p & 1 == 1).collect();
                    push_weightings(&vertices, &directions, n, variant, &mut out);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Triple form of the proper-graph criterion: for every path
    /// `a → b → c`, the weight of `a → c` is the smaller of the two.
    pub fn is_proper(&self) -> Result<bool> {
        if !self.is_acyclic() {
            return Err(precondition("properness is defined for acyclic graphs"));
        }
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                if a == b || !self.points(a, b) {
                    continue;
                }
                for c in 0..n {
                    if c == a || c == b || !self.points(b, c) {
                        continue;
                    }
                    let expected = self.weight_at(a, b).min(self.weight_at(b, c));
                    if self.weight_at(a, c) != expected {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Cycle-measure vector of a directed cycle given by vertex indices.
    pub(crate) fn measure_of(&self, cycle: &[usize]) -> CycleMeasure {
        let mut counts = vec![0u32; self.max_weight as usize];
        for k in 0..cycle.len() {
            let w = self.weight_at(cycle[k], cycle[(k + 1) % cycle.len()]);
            counts[(self.max_weight - w) as usize] += 1;
        }
        CycleMeasure { counts }
    }

    /// All simple directed cycles, each rotated to start at its least vertex.
    pub(crate) fn simple_cycles(&self) -> Vec<Vec<usize>> {
        fn extend(
            g: &WeightedTournament,
            start: usize,
            path: &mut Vec<usize>,
            on_path: &mut [bool],
            out: &mut Vec<Vec<usize>>,
        ) {
            let last = *path.last().unwrap();
            for next in g.successors(last, None).collect::<Vec<_>>() {
                if next == start && path.len() >= 3 {
                    out.push(path.clone());
                } else if next > start && !on_path[next] {
                    on_path[next] = true;
                    path.push(next);
                    extend(g, start, path, on_path, out);
                    path.pop();
                    on_path[next] = false;
                }
            }
        }
        let mut out = Vec::new();
        let mut on_path = vec![false; self.len()];
        for start in 0..self.len() {
            let mut path = vec![start];
            on_path[start] = true;
            extend(self, start, &mut path, &mut on_path, &mut out);
            on_path[start] = false;
        }
        out
    }

    /// The cycle-reduction family `{g_U}` of an extended graph that is not
    /// acyclic: pick the minimal cycle `c` under [`CycleMeasure`] (ties go to
    /// the lexicographically least vertex sequence) and, for every nonempty
    /// set `U` of its edges of weight > 1, reverse those edges and lower
    /// their weight by one.
    pub fn reduce_cycle_family(&self) -> Result<CycleReduction> {
        if self.is_acyclic() {
            return Err(precondition("graph is acyclic; nothing to reduce"));
        }
        if self.has_uniform_cycle() {
            return Err(precondition("graph has a uniform cycle"));
        }
        let cycle = self
            .simple_cycles()
            .into_iter()
            .min_by(|x, y| {
                self.measure_of(x)
                    .cmp(&self.measure_of(y))
                    .then_with(|| {
                        let lx: Vec<&String> = x.iter().map(|&i| &self.vertices[i]).collect();
                        let ly: Vec<&String> = y.iter().map(|&i| &self.vertices[i]).collect();
                        lx.cmp(&ly)
                    })
            })
            .ok_or_else(|| Error::Internal("non-acyclic graph without a cycle".into()))?;
        let k = cycle.len();
        let eligible: Vec<usize> = (1..=k)
            .filter(|&i| self.weight_at(cycle[i - 1], cycle[i % k]) > 1)
            .collect();
        if eligible.is_empty() {
            return Err(Error::Internal(
                "minimal cycle has no edge of weight > 1".into(),
            ));
        }
        let mut family = Vec::new();
        for mask in 1u32..(1 << eligible.len()) {
            let subset: Vec<usize> = eligible
                .iter()
                .enumerate()
                .filter(|(bit, _)| mask >> bit & 1 == 1)
                .map(|(_, &i)| i)
                .collect();
            let mut edges = self.edges.clone();
            for &i in &subset {
                let (from, to) = (cycle[i - 1], cycle[i % k]);
                let (lo, hi) = (from.min(to), from.max(to));
                let e = &mut edges[pair_index(self.len(), lo, hi)];
                e.forward = !e.forward;
                e.weight -= 1;
            }
            let reduced = Self::from_parts(
                self.vertices.clone(),
                edges,
                self.max_weight,
                Variant::Extended,
            )
            .map_err(|e| Error::Internal(format!("g_U for U = {subset:?} is invalid: {e}")))?;
            family.push((subset, reduced));
        }
        Ok(CycleReduction {
            cycle: cycle.iter().map(|&i| self.vertices[i].clone()).collect(),
            measure: self.measure_of(&cycle),
            family,
        })
    }

    /// Graphviz rendering with weight labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  \"{v}\";");
        }
        for (a, b, w) in self.directed_edges() {
            let _ = writeln!(out, "  \"{a}\" -> \"{b}\" [label=\"{w}\"];");
        }
        out.push_str("}\n");
        out
    }
}

fn push_weightings(
    vertices: &[String],
    directions: &[bool],
    n: u32,
    variant: Variant,
    out: &mut Vec<WeightedTournament>,
) {
    let pairs = directions.len();
    let total = (n as u64).pow(pairs as u32);
    for code in 0..total {
        let mut c = code;
        let edges: Vec<Edge> = directions
            .iter()
            .map(|&forward| {
                let w = (c % n as u64) as u32 + 1;
                c /= n as u64;
                Edge { forward, weight: w }
            })
            .collect();
        if let Ok(g) = WeightedTournament::from_parts(vertices.to_vec(), edges, n, variant) {
            out.push(g);
        }
    }
}

/// `(μₙ(c), …, μ₁(c))`: how many edges of each weight a cycle uses,
/// compared lexicographically from the top weight down.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CycleMeasure {
    pub counts: Vec<u32>,
}

impl CycleMeasure {
    pub fn len(&self) -> u32 {
        self.counts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone)]
pub struct CycleReduction {
    /// The chosen minimal cycle `a₀ → a₁ → … → a_{k-1} → a₀`.
    pub cycle: Vec<String>,
    pub measure: CycleMeasure,
    /// `(U, g_U)` with `U ⊆ {1..k}` indexing the edges `a_{i-1} → a_i`.
    pub family: Vec<(Vec<usize>, WeightedTournament)>,
}

impl CycleReduction {
    pub fn graphs(&self) -> impl Iterator<Item = &WeightedTournament> {
        self.family.iter().map(|(_, g)| g)
    }

    pub fn get(&self, subset: &[usize]) -> Option<&WeightedTournament> {
        self.family
            .iter()
            .find(|(u, _)| u.as_slice() == subset)
            .map(|(_, g)| g)
    }
}

/// The named graphs on `B ∪ {a}` lying over an acyclic `g` on `B`.
#[derive(Debug, Clone)]
pub struct FiberExtensions {
    /// The underlying order `b₁ → … → b_p` of `g`.
    pub order: Vec<String>,
    /// `g_i` for `i = 0..=p`: `a` placed right after `b_i`, every edge at
    /// `a` weighted `n`.
    pub positions: Vec<WeightedTournament>,
    /// `h⁻_i[k]` at `[i][k-1]`, for `i < p` and `1 ≤ k ≤ n`.
    pub lower: Vec<Vec<WeightedTournament>>,
    /// `h⁺_i[k]` at `[i][k-1]`.
    pub upper: Vec<Vec<WeightedTournament>>,
}

impl FiberExtensions {
    pub fn build(g: &WeightedTournament, new_vertex: &str, n: u32) -> Result<Self> {
        if n != g.max_weight() {
            return Err(Error::WeightMismatch(n, g.max_weight()));
        }
        let order = g.underlying_order()?;
        if order.iter().any(|v| v == new_vertex) {
            return Err(Error::VertexClash(new_vertex.to_string()));
        }
        let p = order.len();
        let positions = (0..=p)
            .map(|i| extension(g, &order, new_vertex, i, n, None))
            .collect::<Result<Vec<_>>>()?;
        let mut lower = Vec::with_capacity(p);
        let mut upper = Vec::with_capacity(p);
        for i in 0..p {
            let mut lo = Vec::with_capacity(n as usize);
            let mut up = Vec::with_capacity(n as usize);
            for k in 1..=n {
                lo.push(extension(g, &order, new_vertex, i, n, Some((i, k)))?);
                up.push(extension(g, &order, new_vertex, i + 1, n, Some((i, k)))?);
            }
            lower.push(lo);
            upper.push(up);
        }
        Ok(FiberExtensions {
            order,
            positions,
            lower,
            upper,
        })
    }

    pub fn p(&self) -> usize {
        self.order.len()
    }

    pub fn position(&self, i: usize) -> Result<&WeightedTournament> {
        self.positions.get(i).ok_or(Error::IndexOutOfRange {
            index: i,
            bound: self.positions.len(),
        })
    }

    /// `h⁻_i[k]`; `k = 0` is the empty down-set and returns `None`.
    pub fn lower(&self, i: usize, k: u32) -> Result<Option<&WeightedTournament>> {
        Self::lookup(&self.lower, i, k)
    }

    /// `h⁺_i[k]`; `k = 0` is the empty down-set and returns `None`.
    pub fn upper(&self, i: usize, k: u32) -> Result<Option<&WeightedTournament>> {
        Self::lookup(&self.upper, i, k)
    }

    fn lookup(
        table: &[Vec<WeightedTournament>],
        i: usize,
        k: u32,
    ) -> Result<Option<&WeightedTournament>> {
        let row = table.get(i).ok_or(Error::IndexOutOfRange {
            index: i,
            bound: table.len(),
        })?;
        if k == 0 {
            return Ok(None);
        }
        row.get(k as usize - 1)
            .map(Some)
            .ok_or(Error::IndexOutOfRange {
                index: k as usize,
                bound: row.len(),
            })
    }
}

/// `a` inserted after `b_position`; `relabel = Some((i, k))` lowers the edge
/// between `a` and `b_{i+1}` to weight `k`.
fn extension(
    g: &WeightedTournament,
    order: &[String],
    new_vertex: &str,
    position: usize,
    n: u32,
    relabel: Option<(usize, u32)>,
) -> Result<WeightedTournament> {
    let mut extended: Vec<String> = order[..position].to_vec();
    extended.push(new_vertex.to_string());
    extended.extend_from_slice(&order[position..]);
    let target = relabel.map(|(i, k)| (order[i].as_str(), k));
    let weights = |p: usize, q: usize| -> u32 {
        let (x, y) = (&extended[p], &extended[q]);
        if x == new_vertex || y == new_vertex {
            let other = if x == new_vertex { y } else { x };
            match target {
                Some((b, k)) if b == other => k,
                _ => n,
            }
        } else {
            g.weight(x, y).expect("vertex of g")
        }
    };
    WeightedTournament::from_order(&extended, n, weights)
}

#[derive(Serialize, Deserialize)]
struct EdgeWire {
    from: String,
    to: String,
    w: u32,
}

#[derive(Serialize, Deserialize)]
struct GraphWire {
    vertices: Vec<String>,
    edges: Vec<EdgeWire>,
    #[serde(rename = "maxWeight")]
    max_weight: u32,
    variant: Variant,
}

impl TryFrom<GraphWire> for WeightedTournament {
    type Error = Error;

    fn try_from(wire: GraphWire) -> Result<Self> {
        let edges: Vec<(&str, &str, u32)> = wire
            .edges
            .iter()
            .map(|e| (e.from.as_str(), e.to.as_str(), e.w))
            .collect();
        WeightedTournament::new(wire.vertices, &edges, wire.max_weight, wire.variant)
    }
}

impl From<WeightedTournament> for GraphWire {
    fn from(g: WeightedTournament) -> Self {
        GraphWire {
            edges: g
                .directed_edges()
                .into_iter()
                .map(|(from, to, w)| EdgeWire { from, to, w })
                .collect(),
            vertices: g.vertices,
            max_weight: g.max_weight,
            variant: g.variant,
        }
    }
}

impl std::fmt::Display for WeightedTournament {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .directed_edges()
            .into_iter()
            .map(|(a, b, w)| format!("{a}→{b}({w})"))
            .collect();
        if parts.is_empty() {
            write!(f, "[{}]", self.vertices.join(","))
        } else {
            write!(f, "{}", parts.join(", "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(edges: &[(&str, &str, u32)], n: u32, variant: Variant) -> WeightedTournament {
        let mut vs: Vec<&str> = edges.iter().flat_map(|e| [e.0, e.1]).collect();
        vs.sort();
        vs.dedup();
        WeightedTournament::new(vs, edges, n, variant).unwrap()
    }

    #[test]
    fn acyclicity() {
        let single = WeightedTournament::unit("a", 2, Variant::Acyclic).unwrap();
        assert!(single.is_acyclic());
        let cyc = g(
            &[("a", "b", 1), ("b", "c", 2), ("c", "a", 1)],
            2,
            Variant::Extended,
        );
        assert!(!cyc.is_acyclic());
        let counter = g(
            &[("a", "b", 2), ("b", "c", 1), ("a", "c", 2)],
            2,
            Variant::Acyclic,
        );
        assert!(counter.is_acyclic());
    }

    #[test]
    fn uniform_cycles() {
        let mixed = g(
            &[("b", "a", 2), ("c", "b", 2), ("a", "c", 1)],
            2,
            Variant::Extended,
        );
        assert!(!mixed.has_uniform_cycle());
        assert!(WeightedTournament::new(
            ["a", "b", "c"],
            &[("a", "b", 1), ("b", "c", 1), ("c", "a", 1)],
            1,
            Variant::Extended
        )
        .is_err());
    }

    #[test]
    fn leq_examples() {
        let ab1 = g(&[("a", "b", 1)], 2, Variant::Acyclic);
        let ab2 = g(&[("a", "b", 2)], 2, Variant::Acyclic);
        let ba2 = g(&[("b", "a", 2)], 2, Variant::Acyclic);
        assert!(ab1.leq(&ab2).unwrap());
        assert!(!ab2.leq(&ba2).unwrap());
        assert!(ab1.leq(&ba2).unwrap());
        let other = ab1.with_max_weight(3).unwrap();
        assert_eq!(ab1.leq(&other), Err(Error::WeightMismatch(2, 3)));
    }

    #[test]
    fn composition_figure() {
        let left = g(&[("a1", "a2", 1)], 2, Variant::Acyclic);
        let right = g(&[("b1", "b2", 2)], 2, Variant::Acyclic);
        let composite = left.compose("a2", &right).unwrap();
        let expected = g(
            &[("a1", "b1", 1), ("a1", "b2", 1), ("b1", "b2", 2)],
            2,
            Variant::Acyclic,
        );
        assert_eq!(composite, expected);
        assert_eq!(
            composite.restrict(&["b1", "b2"]).unwrap(),
            right
        );
        assert!(matches!(
            left.compose("a1", &left),
            Err(Error::VertexClash(_))
        ));
        assert!(matches!(
            left.compose("zz", &right),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn unit_law() {
        let x = g(&[("a", "b", 2), ("b", "c", 1), ("a", "c", 1)], 2, Variant::Acyclic);
        let unit = WeightedTournament::unit("z", 2, Variant::Acyclic).unwrap();
        let renamed = x.compose("b", &unit).unwrap();
        let map = BTreeMap::from([("b".to_string(), "z".to_string())]);
        assert_eq!(renamed, x.relabel(&map).unwrap());
        let left_unit = unit.compose("z", &x).unwrap();
        assert_eq!(left_unit, x);
    }

    #[test]
    fn restrict_singleton_and_empty() {
        let x = g(&[("a", "b", 2)], 2, Variant::Acyclic);
        let r = x.restrict(&["a"]).unwrap();
        assert!(r.directed_edges().is_empty());
        assert_eq!(
            x.restrict::<&str>(&[]),
            Err(Error::EmptyVertexSet)
        );
    }

    #[test]
    fn enumeration_counts() {
        let caps = Caps::default();
        for n in 1..=4 {
            let two = WeightedTournament::enumerate(&["a", "b"], n, Variant::Acyclic, &caps);
            assert_eq!(two.unwrap().len(), 2 * n as usize);
        }
        let abc = ["a", "b", "c"];
        assert_eq!(
            WeightedTournament::enumerate(&abc, 2, Variant::Acyclic, &caps).unwrap().len(),
            48
        );
        assert_eq!(
            WeightedTournament::enumerate(&abc, 2, Variant::Extended, &caps).unwrap().len(),
            60
        );
        assert!(matches!(
            WeightedTournament::enumerate(&["a", "b", "c", "d", "e", "f"], 1, Variant::Acyclic, &caps),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn proper_examples() {
        let bad = g(&[("a", "b", 1), ("b", "c", 2), ("a", "c", 2)], 2, Variant::Acyclic);
        assert!(!bad.is_proper().unwrap());
        let good = g(&[("a", "b", 1), ("b", "c", 2), ("a", "c", 1)], 2, Variant::Acyclic);
        assert!(good.is_proper().unwrap());
        let cyc = g(&[("b", "a", 2), ("c", "b", 2), ("a", "c", 1)], 2, Variant::Extended);
        assert!(cyc.is_proper().is_err());
    }

    #[test]
    fn cycle_reduction_example() {
        let x = g(&[("b", "a", 2), ("c", "b", 2), ("a", "c", 1)], 2, Variant::Extended);
        let red = x.reduce_cycle_family().unwrap();
        assert_eq!(red.cycle, vec!["a", "c", "b"]);
        assert_eq!(red.measure.counts, vec![2, 1]);
        assert_eq!(red.family.len(), 3);
        for h in red.graphs() {
            assert!(!h.has_uniform_cycle());
            assert!(h.leq(&x).unwrap() && h != &x);
        }
        let both = red.get(&[2, 3]).unwrap();
        assert_eq!(
            both,
            &g(&[("a", "b", 1), ("b", "c", 1), ("a", "c", 1)], 2, Variant::Extended)
        );
        let acyclic = g(&[("a", "b", 1)], 2, Variant::Acyclic);
        assert!(matches!(
            acyclic.reduce_cycle_family(),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn fiber_extension_instances() {
        let base = WeightedTournament::unit("b1", 2, Variant::Acyclic).unwrap();
        let fx = FiberExtensions::build(&base, "a", 2).unwrap();
        assert_eq!(fx.positions[0], g(&[("a", "b1", 2)], 2, Variant::Acyclic));
        assert_eq!(fx.positions[1], g(&[("b1", "a", 2)], 2, Variant::Acyclic));
        assert_eq!(
            fx.lower(0, 1).unwrap().unwrap(),
            &g(&[("a", "b1", 1)], 2, Variant::Acyclic)
        );
        assert_eq!(
            fx.upper(0, 1).unwrap().unwrap(),
            &g(&[("b1", "a", 1)], 2, Variant::Acyclic)
        );
        assert!(fx.position(2).is_err());
        assert!(FiberExtensions::build(&base, "b1", 2).is_err());
    }

    #[test]
    fn json_shape() {
        let x = g(&[("b", "a", 1)], 2, Variant::Acyclic);
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(
            json,
            r#"{"vertices":["a","b"],"edges":[{"from":"b","to":"a","w":1}],"maxWeight":2,"variant":"acyclic"}"#
        );
        let back: WeightedTournament = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
        let bad = r#"{"vertices":["a","b"],"edges":[],"maxWeight":2,"variant":"acyclic"}"#;
        assert!(serde_json::from_str::<WeightedTournament>(bad).is_err());
    }

    #[test]
    fn dot_export() {
        let x = g(&[("a", "b", 2)], 2, Variant::Acyclic);
        assert!(x.to_dot().contains("\"a\" -> \"b\" [label=\"2\"];"));
    }
}
