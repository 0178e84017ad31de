//! Lattice paths: strings over a vertex set cut into `n + 1` blocks.
//!
//! `"ab|a|bb"` is the path with letters `a b a b b` and bars `[2, 3]`. Each
//! letter `a` gives a simplicial direction (its occurrences), and the blocks
//! carry a cosimplicial structure.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::configurations::{int, Rational};
use crate::error::{invalid, precondition, Error, Result};
use crate::graphs::{Variant, WeightedTournament};
use crate::topology::sset::{FiniteSSet, SimplicialBuilder};
use crate::vertex;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PathWire", into = "PathWire")]
pub struct LatticePath {
    letters: Vec<String>,
    bars: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PathWire {
    letters: Vec<String>,
    bars: Vec<usize>,
}

impl TryFrom<PathWire> for LatticePath {
    type Error = Error;
    fn try_from(w: PathWire) -> Result<Self> {
        LatticePath::new(w.letters, w.bars)
    }
}

impl From<LatticePath> for PathWire {
    fn from(p: LatticePath) -> Self {
        PathWire {
            letters: p.letters,
            bars: p.bars,
        }
    }
}

impl LatticePath {
    pub fn new<S: Into<String>>(letters: impl IntoIterator<Item = S>, bars: Vec<usize>) -> Result<Self> {
        let letters: Vec<String> = letters.into_iter().map(Into::into).collect();
        if letters.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        for l in &letters {
            vertex::check_label(l)?;
        }
        if bars.windows(2).any(|w| w[0] > w[1]) {
            return Err(invalid("bars must be weakly increasing"));
        }
        if bars.last().map_or(false, |&b| b > letters.len()) {
            return Err(invalid("bar beyond the end of the path"));
        }
        Ok(LatticePath { letters, bars })
    }

    /// Parses single-character letters with `|` for bars (`‖` counts twice).
    pub fn parse(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut bars = Vec::new();
        for ch in s.chars().filter(|c| !c.is_whitespace()) {
            match ch {
                '|' => bars.push(letters.len()),
                '‖' => bars.extend([letters.len(), letters.len()]),
                c => letters.push(c.to_string()),
            }
        }
        Self::new(letters, bars)
    }

    /// Builds from `(letter, block)` cells listed in order.
    fn from_cells(cells: &[(String, usize)], n: usize) -> Result<Self> {
        let bars = (1..=n)
            .map(|b| cells.iter().filter(|(_, k)| *k < b).count())
            .collect();
        Self::new(cells.iter().map(|(l, _)| l.clone()), bars)
    }

    fn cells(&self) -> Vec<(String, usize)> {
        self.letters
            .iter()
            .enumerate()
            .map(|(p, l)| (l.clone(), self.block_of(p)))
            .collect()
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn bars(&self) -> &[usize] {
        &self.bars
    }

    /// Cosimplicial degree: the path has `n + 1` blocks.
    pub fn n(&self) -> usize {
        self.bars.len()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn vertices(&self) -> Vec<String> {
        let set: BTreeSet<&String> = self.letters.iter().collect();
        set.into_iter().cloned().collect()
    }

    pub fn block_of(&self, position: usize) -> usize {
        self.bars.iter().filter(|&&b| b <= position).count()
    }

    pub fn blocks(&self) -> Vec<Vec<String>> {
        let mut out = vec![Vec::new(); self.n() + 1];
        for (l, b) in self.cells() {
            out[b].push(l);
        }
        out
    }

    pub fn occurrences(&self, a: &str) -> Vec<usize> {
        (0..self.len()).filter(|&p| self.letters[p] == a).collect()
    }

    pub fn fiber_size(&self, a: &str) -> usize {
        self.letters.iter().filter(|l| *l == a).count()
    }

    fn check_vertex(&self, a: &str) -> Result<()> {
        if self.letters.iter().any(|l| l == a) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(a.to_string()))
        }
    }

    /// Deletes letters outside `u`.
    pub fn restrict<S: AsRef<str>>(&self, u: &[S]) -> Result<Self> {
        let keep: BTreeSet<&str> = u.iter().map(AsRef::as_ref).collect();
        if keep.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        for v in &keep {
            self.check_vertex(v)?;
        }
        let cells: Vec<(String, usize)> = self
            .cells()
            .into_iter()
            .filter(|(l, _)| keep.contains(l.as_str()))
            .collect();
        Self::from_cells(&cells, self.n())
    }

    /// Number of switches between `a` and `b` in the string restricted to
    /// `{a, b}`.
    pub fn weight(&self, a: &str, b: &str) -> Result<u32> {
        if a == b {
            return Err(invalid("weight needs two distinct vertices"));
        }
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        let restricted: Vec<&String> = self.letters.iter().filter(|l| *l == a || *l == b).collect();
        Ok(restricted.windows(2).filter(|w| w[0] != w[1]).count() as u32)
    }

    /// Largest pairwise weight (1 for a single vertex).
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

    /// Simplicial operator in direction `a`: `rho` lists, for each new copy
    /// of `a`, the old occurrence it sits at. Must be weakly increasing.
    pub fn face_op(&self, a: &str, rho: &[usize]) -> Result<Self> {
        self.check_vertex(a)?;
        let m = self.fiber_size(a);
        if rho.is_empty() {
            return Err(invalid("a simplicial operator needs a nonempty source"));
        }
        if rho.windows(2).any(|w| w[0] > w[1]) || rho.iter().any(|&r| r >= m) {
            return Err(invalid(format!("not a monotone map into [{}]", m - 1)));
        }
        let mut cells = Vec::new();
        let mut seen = 0;
        for (l, b) in self.cells() {
            if l == a {
                let copies = rho.iter().filter(|&&r| r == seen).count();
                cells.extend(std::iter::repeat((l, b)).take(copies));
                seen += 1;
            } else {
                cells.push((l, b));
            }
        }
        Self::from_cells(&cells, self.n())
    }

    /// `d_i` in direction `a`.
    pub fn face(&self, a: &str, i: usize) -> Result<Self> {
        let m = self.fiber_size(a);
        if m < 2 || i >= m {
            return Err(Error::IndexOutOfRange { index: i, bound: m.saturating_sub(1).max(1) });
        }
        let rho: Vec<usize> = (0..m).filter(|&k| k != i).collect();
        self.face_op(a, &rho)
    }

    /// `s_j` in direction `a`.
    pub fn degeneracy(&self, a: &str, j: usize) -> Result<Self> {
        let m = self.fiber_size(a);
        if j >= m {
            return Err(Error::IndexOutOfRange { index: j, bound: m });
        }
        let mut rho: Vec<usize> = (0..m).collect();
        rho.insert(j, j);
        self.face_op(a, &rho)
    }

    /// Two adjacent copies of `a` in the same block.
    pub fn is_degenerate_in(&self, a: &str) -> bool {
        (1..self.len()).any(|p| {
            self.letters[p] == a && self.letters[p - 1] == a && self.block_of(p) == self.block_of(p - 1)
        })
    }

    /// Nondegenerate in every simplicial direction.
    pub fn is_nondegenerate(&self) -> bool {
        (1..self.len())
            .all(|p| self.letters[p] != self.letters[p - 1] || self.block_of(p) != self.block_of(p - 1))
    }

    /// Cosimplicial operator `θ : [n] → [n']`, given by the images of the
    /// blocks.
    pub fn cosimplicial(&self, theta: &[usize], new_n: usize) -> Result<Self> {
        if theta.len() != self.n() + 1 {
            return Err(Error::DimensionMismatch(theta.len(), self.n() + 1));
        }
        if theta.windows(2).any(|w| w[0] > w[1]) || theta.iter().any(|&t| t > new_n) {
            return Err(invalid(format!("not a monotone map into [{new_n}]")));
        }
        let cells: Vec<(String, usize)> = self.cells().into_iter().map(|(l, b)| (l, theta[b])).collect();
        Self::from_cells(&cells, new_n)
    }

    /// `δ^i`: inserts an empty block at position `i`.
    pub fn coface(&self, i: usize) -> Result<Self> {
        let n = self.n();
        if i > n + 1 {
            return Err(Error::IndexOutOfRange { index: i, bound: n + 2 });
        }
        let theta: Vec<usize> = (0..=n).map(|b| if b < i { b } else { b + 1 }).collect();
        self.cosimplicial(&theta, n + 1)
    }

    /// `σ^j`: merges blocks `j` and `j + 1`.
    pub fn codegeneracy(&self, j: usize) -> Result<Self> {
        let n = self.n();
        if n == 0 || j >= n {
            return Err(Error::IndexOutOfRange { index: j, bound: n });
        }
        let theta: Vec<usize> = (0..=n).map(|b| if b <= j { b } else { b - 1 }).collect();
        self.cosimplicial(&theta, n - 1)
    }

    /// Replaces the `i`-th occurrence of `a` by the letters of the `i`-th
    /// block of `y`.
    pub fn substitute(&self, a: &str, y: &Self) -> Result<Self> {
        self.check_vertex(a)?;
        vertex::substitute(&self.vertices(), a, &y.vertices())?;
        let blocks = y.blocks();
        if blocks.len() != self.fiber_size(a) {
            return Err(Error::DimensionMismatch(blocks.len(), self.fiber_size(a)));
        }
        let mut cells = Vec::new();
        let mut seen = 0;
        for (l, b) in self.cells() {
            if l == a {
                cells.extend(blocks[seen].iter().map(|m| (m.clone(), b)));
                seen += 1;
            } else {
                cells.push((l, b));
            }
        }
        Self::from_cells(&cells, self.n())
    }

    /// γ: edges follow first occurrences and carry the pairwise weights.
    pub fn gamma(&self, max_weight: u32) -> Result<WeightedTournament> {
        let vs = self.vertices();
        let first: BTreeMap<&String, usize> = vs
            .iter()
            .map(|v| (v, self.letters.iter().position(|l| l == v).unwrap()))
            .collect();
        let mut triples = Vec::new();
        for (i, a) in vs.iter().enumerate() {
            for b in &vs[i + 1..] {
                let w = self.weight(a, b)?;
                if w > max_weight {
                    return Err(Error::WeightMismatch(w, max_weight));
                }
                if first[a] < first[b] {
                    triples.push((a.as_str(), b.as_str(), w));
                } else {
                    triples.push((b.as_str(), a.as_str(), w));
                }
            }
        }
        WeightedTournament::new(vs.iter().cloned(), &triples, max_weight, Variant::Acyclic)
    }

    /// Section σ on `ℒ_g(A;0)`: prepend the least vertex of `g`.
    pub fn sigma(&self, g: &WeightedTournament) -> Result<Self> {
        if self.n() != 0 {
            return Err(precondition("σ is defined on paths without bars"));
        }
        let below = self
            .gamma(g.max_weight())
            .and_then(|h| h.leq(g))
            .unwrap_or(false);
        if !below {
            return Err(precondition("γ(x) ≤ g fails"));
        }
        let first = g.underlying_order()?.remove(0);
        let mut letters = vec![first];
        letters.extend(self.letters.iter().cloned());
        let out = Self::new(letters, Vec::new())?;
        if !out.gamma(g.max_weight())?.leq(g)? {
            return Err(Error::Internal("γ(σ(x)) ≰ g".into()));
        }
        Ok(out)
    }

    pub fn relabel(&self, map: &BTreeMap<String, String>) -> Result<Self> {
        Self::new(
            self.letters
                .iter()
                .map(|l| map.get(l).cloned().unwrap_or_else(|| l.clone())),
            self.bars.clone(),
        )
    }

    /// All paths of length `len` over `vertices` using every vertex, with
    /// `n` bars.
    pub fn enumerate_strings(vertices: &[String], len: usize, n: usize) -> Vec<Self> {
        let k = vertices.len();
        let mut out = Vec::new();
        if k == 0 || len < k {
            return out;
        }
        let total = (k as u64).pow(len as u32);
        let bar_sets = weak_increasing(n, len);
        for code in 0..total {
            let mut c = code;
            let letters: Vec<String> = (0..len)
                .map(|_| {
                    let v = vertices[(c % k as u64) as usize].clone();
                    c /= k as u64;
                    v
                })
                .collect();
            let used: BTreeSet<&String> = letters.iter().collect();
            if used.len() != k {
                continue;
            }
            for bars in &bar_sets {
                out.push(LatticePath {
                    letters: letters.clone(),
                    bars: bars.clone(),
                });
            }
        }
        out.sort();
        out
    }
}

/// Weakly increasing sequences of length `n` in `0..=max`.
fn weak_increasing(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for tail in weak_increasing(n - 1, max) {
        let start = tail.last().copied().unwrap_or(0);
        for b in start..=max {
            let mut v = tail.clone();
            v.push(b);
            out.push(v);
        }
    }
    out
}

impl std::fmt::Display for LatticePath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sep = if self.letters.iter().all(|l| l.chars().count() == 1) { "" } else { " " };
        let blocks: Vec<String> = self.blocks().iter().map(|b| b.join(sep)).collect();
        write!(f, "{}", blocks.join("|"))
    }
}

/// Point of the realization: a path together with barycentric coordinates
/// on each fiber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationPoint {
    pub path: LatticePath,
    pub coords: Vec<Rational>,
}

impl RealizationPoint {
    /// Sum of the coordinates in each block.
    pub fn block_sums(&self) -> Vec<Rational> {
        let mut s = vec![Rational::zero(); self.path.n() + 1];
        for (p, t) in self.coords.iter().enumerate() {
            s[self.path.block_of(p)] += t;
        }
        s
    }
}

/// Drops zero coordinates and merges repeated letters inside a block,
/// giving the unique nondegenerate representative.
pub fn normalize_point(path: &LatticePath, coords: &[Rational]) -> Result<RealizationPoint> {
    if coords.len() != path.len() {
        return Err(Error::DimensionMismatch(coords.len(), path.len()));
    }
    if coords.iter().any(|t| t < &Rational::zero()) {
        return Err(invalid("coordinates must be nonnegative"));
    }
    for v in path.vertices() {
        let sum: Rational = path
            .occurrences(&v)
            .into_iter()
            .map(|p| coords[p].clone())
            .sum();
        if sum.is_zero() {
            return Err(invalid(format!("fiber of `{v}` has zero mass")));
        }
        if !sum.is_one() {
            return Err(invalid(format!("fiber of `{v}` sums to {sum}, not 1")));
        }
    }
    let mut cells: Vec<(String, usize)> = Vec::new();
    let mut values: Vec<Rational> = Vec::new();
    for ((l, b), t) in path.cells().into_iter().zip(coords) {
        if t.is_zero() {
            continue;
        }
        match cells.last() {
            Some((pl, pb)) if *pl == l && *pb == b => *values.last_mut().unwrap() += t,
            _ => {
                cells.push((l, b));
                values.push(t.clone());
            }
        }
    }
    Ok(RealizationPoint {
        path: LatticePath::from_cells(&cells, path.n())?,
        coords: values,
    })
}

/// Forgets the bars and records the block sums.
pub fn project_point(p: &RealizationPoint) -> Result<(RealizationPoint, Vec<Rational>)> {
    let sums = p.block_sums();
    let flat = LatticePath::new(p.path.letters.clone(), Vec::new())?;
    Ok((normalize_point(&flat, &p.coords)?, sums))
}

/// Cuts a point without bars at the cumulative sums of `s`, which must be
/// nonnegative with total `|A|`.
pub fn split_point(p: &RealizationPoint, s: &[Rational]) -> Result<RealizationPoint> {
    if p.path.n() != 0 {
        return Err(precondition("split takes a point without bars"));
    }
    if s.is_empty() {
        return Err(invalid("need at least one block"));
    }
    let size = int(p.path.vertices().len() as i64);
    if s.iter().any(|x| x < &Rational::zero()) || s.iter().cloned().sum::<Rational>() != size {
        return Err(invalid("block sizes must be nonnegative and sum to |A|"));
    }
    let mut cuts = Vec::with_capacity(s.len());
    let mut acc = Rational::zero();
    for x in s {
        acc += x;
        cuts.push(acc.clone());
    }
    let mut cells = Vec::new();
    let mut values = Vec::new();
    let mut lo = Rational::zero();
    for (l, t) in p.path.letters.iter().zip(&p.coords) {
        let hi = &lo + t;
        let mut block_lo = Rational::zero();
        for (b, block_hi) in cuts.iter().enumerate() {
            let start = if lo > block_lo { lo.clone() } else { block_lo.clone() };
            let end = if &hi < block_hi { hi.clone() } else { block_hi.clone() };
            if start < end {
                cells.push((l.clone(), b));
                values.push(end - start);
            }
            block_lo = block_hi.clone();
        }
        lo = hi;
    }
    let path = LatticePath::from_cells(&cells, s.len() - 1)?;
    normalize_point(&path, &values)
}

/// Random normal point: a random path of length `len` over `vertices` with
/// `n` bars and random positive coordinates on the grid `1/den`.
pub fn random_point<R: Rng>(
    rng: &mut R,
    vertices: &[String],
    len: usize,
    n: usize,
    den: i64,
) -> Result<RealizationPoint> {
    if len < vertices.len() {
        return Err(invalid("path too short to use every vertex"));
    }
    let mut letters: Vec<String> = vertices.to_vec();
    while letters.len() < len {
        letters.push(vertices[rng.gen_range(0..vertices.len())].clone());
    }
    for i in (1..letters.len()).rev() {
        letters.swap(i, rng.gen_range(0..=i));
    }
    let mut bars: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=len)).collect();
    bars.sort();
    let path = LatticePath::new(letters, bars)?;
    let raw: Vec<i64> = (0..len).map(|_| rng.gen_range(1..=den)).collect();
    let mut coords = vec![Rational::zero(); len];
    for v in path.vertices() {
        let occ = path.occurrences(&v);
        let total: i64 = occ.iter().map(|&p| raw[p]).sum();
        for p in occ {
            coords[p] = crate::configurations::rational(raw[p], total);
        }
    }
    normalize_point(&path, &coords)
}

/// Pairwise switch budget once the direction of the pair is known: `γ(x) ≤ g`
/// when `g` is given, otherwise weight at most `n`.
#[derive(Clone, Copy)]
enum Bound<'a> {
    Below(&'a WeightedTournament),
    Weight(u32),
}

impl Bound<'_> {
    fn budget(&self, first: usize, second: usize) -> u32 {
        match self {
            Bound::Weight(n) => *n,
            Bound::Below(g) => {
                let w = g.weight_at(first, second);
                if g.points(first, second) {
                    w
                } else {
                    w - 1
                }
            }
        }
    }
}

/// Depth-first search over strings with `γ ≤ g`, tracking pairwise switches.
struct Search<'a> {
    bound: Bound<'a>,
    vertices: &'a [String],
    k: usize,
    counts: Vec<usize>,
    first_seen: Vec<Option<usize>>,
    last: Vec<Vec<Option<usize>>>,
    switches: Vec<Vec<u32>>,
    word: Vec<usize>,
    max_len: usize,
}

impl<'a> Search<'a> {
    fn new(bound: Bound<'a>, vertices: &'a [String], max_len: usize) -> Self {
        let k = vertices.len();
        Search {
            bound,
            vertices,
            k,
            counts: vec![0; k],
            first_seen: vec![None; k],
            last: vec![vec![None; k]; k],
            switches: vec![vec![0; k]; k],
            word: Vec::new(),
            max_len,
        }
    }

    /// Appends `c` if the pairwise budgets allow it.
    fn push(&mut self, c: usize) -> bool {
        let order = self.word.len();
        for d in 0..self.k {
            if d == c || self.first_seen[d].is_none() {
                continue;
            }
            let extra = u32::from(self.last[c][d] == Some(d));
            let total = self.switches[c][d] + extra;
            let (x, y) = match self.first_seen[c] {
                Some(fc) if fc < self.first_seen[d].unwrap() => (c, d),
                _ => (d, c),
            };
            if total > self.bound.budget(x, y) {
                return false;
            }
        }
        for d in 0..self.k {
            if d == c {
                continue;
            }
            if self.first_seen[d].is_some() && self.last[c][d] == Some(d) {
                self.switches[c][d] += 1;
                self.switches[d][c] += 1;
            }
            self.last[c][d] = Some(c);
            self.last[d][c] = Some(c);
        }
        if self.first_seen[c].is_none() {
            self.first_seen[c] = Some(order);
        }
        self.counts[c] += 1;
        self.word.push(c);
        true
    }

    fn pop(&mut self) {
        // rebuild from scratch; words are short
        let mut word = std::mem::take(&mut self.word);
        word.pop();
        *self = Search::new(self.bound, self.vertices, self.max_len);
        for c in word {
            self.push(c);
        }
    }

    fn path(&self) -> LatticePath {
        LatticePath {
            letters: self.word.iter().map(|&i| self.vertices[i].clone()).collect(),
            bars: Vec::new(),
        }
    }

    /// Visits every admissible word; `accept` decides whether to record it
    /// and `extend` whether to continue past it.
    fn run(
        &mut self,
        caps_len: usize,
        allowed: &dyn Fn(&Search, usize) -> bool,
        visit: &mut dyn FnMut(&Search) -> Result<()>,
    ) -> Result<()> {
        visit(self)?;
        if self.word.len() >= self.max_len {
            return Ok(());
        }
        for c in 0..self.k {
            if !allowed(self, c) {
                continue;
            }
            if self.push(c) {
                if self.word.len() > caps_len {
                    return Err(Error::BudgetExceeded {
                        what: "lattice path length".into(),
                        limit: caps_len,
                    });
                }
                self.run(caps_len, allowed, visit)?;
                self.pop();
            }
        }
        Ok(())
    }
}

fn nondegenerate(bound: Bound, vertices: &[String], caps: &Caps) -> Result<Vec<LatticePath>> {
    caps.check_vertices(vertices.len())?;
    let mut out = Vec::new();
    let mut search = Search::new(bound, vertices, usize::MAX);
    let allowed = |s: &Search, c: usize| s.word.last() != Some(&c);
    search.run(caps.max_path_len, &allowed, &mut |s| {
        if s.counts.iter().all(|&n| n > 0) {
            out.push(s.path());
        }
        Ok(())
    })?;
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    Ok(out)
}

/// Nondegenerate paths in `ℒ(A;0)` with `γ(x) ≤ g`, sorted by length then
/// lexicographically.
pub fn enumerate_l_g(g: &WeightedTournament, caps: &Caps) -> Result<Vec<LatticePath>> {
    if !g.is_acyclic() {
        return Err(precondition("γ lands in acyclic graphs"));
    }
    nondegenerate(Bound::Below(g), g.vertices(), caps)
}

/// Nondegenerate paths in `ℒ(A;0)` whose pairwise weights are at most `n`.
pub fn enumerate_l_n<S: AsRef<str>>(vertices: &[S], n: u32, caps: &Caps) -> Result<Vec<LatticePath>> {
    let vs = vertex::vertex_set(vertices.iter().map(AsRef::as_ref))?;
    caps.check_weight(n)?;
    nondegenerate(Bound::Weight(n), &vs, caps)
}

/// Diagonal simplicial structure on paths without bars whose fibers all
/// have the same size.
pub struct Diagonal;

impl Diagonal {
    /// Occurrence positions of each letter, when all fibers agree in size.
    fn fibers(x: &LatticePath) -> Vec<Vec<usize>> {
        x.vertices().iter().map(|v| x.occurrences(v)).collect()
    }

    pub fn is_simplex(x: &LatticePath) -> bool {
        let f = Self::fibers(x);
        f.windows(2).all(|w| w[0].len() == w[1].len())
    }
}

impl SimplicialBuilder for Diagonal {
    type Simplex = LatticePath;

    fn dim(&self, x: &LatticePath) -> usize {
        x.fiber_size(&x.letters[0]) - 1
    }

    fn face(&self, x: &LatticePath, i: usize) -> LatticePath {
        let drop: BTreeSet<usize> = Self::fibers(x).iter().map(|occ| occ[i]).collect();
        let cells: Vec<(String, usize)> = x
            .cells()
            .into_iter()
            .enumerate()
            .filter(|(p, _)| !drop.contains(p))
            .map(|(_, c)| c)
            .collect();
        LatticePath::from_cells(&cells, x.n()).expect("faces keep every letter")
    }

    fn split_degeneracy(&self, x: &LatticePath) -> Option<(usize, LatticePath)> {
        let fibers = Self::fibers(x);
        let p = fibers[0].len() - 1;
        let j = (0..p).find(|&j| {
            fibers
                .iter()
                .all(|occ| occ[j + 1] == occ[j] + 1 && x.block_of(occ[j]) == x.block_of(occ[j + 1]))
        })?;
        Some((j, self.face(x, j + 1)))
    }
}

/// The diagonal of `ℒ_g(A;0)` as a finite simplicial set, with its
/// nondegenerate simplices by dimension.
pub fn diagonal_l_g(g: &WeightedTournament, caps: &Caps) -> Result<(FiniteSSet, Vec<Vec<LatticePath>>)> {
    let nondegenerate = enumerate_l_g(g, caps)?;
    let k = g.len();
    // a diagonal p-simplex comes from a nondegenerate multisimplex of total
    // degree at least p
    let top = nondegenerate.iter().map(|x| x.len() - k).max().unwrap_or(0);
    let mut generators = Vec::new();
    for p in 0..=top {
        if (p + 1) * k > caps.max_path_len {
            return Err(Error::BudgetExceeded {
                what: format!("diagonal simplices of dimension {p}"),
                limit: caps.max_path_len,
            });
        }
        let mut search = Search::new(Bound::Below(g), g.vertices(), (p + 1) * k);
        let allowed = |s: &Search, c: usize| s.counts[c] <= p;
        let mut found = Vec::new();
        search.run(caps.max_path_len, &allowed, &mut |s| {
            if s.word.len() == (p + 1) * k {
                let x = s.path();
                if Diagonal.split_degeneracy(&x).is_none() {
                    found.push(x);
                }
            }
            Ok(())
        })?;
        generators.extend(found);
    }
    FiniteSSet::from_generators(&Diagonal, generators, caps)
}
