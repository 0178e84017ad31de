//! Point and cube configurations with exact rational coordinates, and the
//! maps ψ (points to acyclic graphs) and φ (cubes to extended graphs).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{invalid, precondition, Error, Result};
use crate::graphs::{Variant, WeightedTournament};
use crate::trees::{LabelledPlanarTree, Tree};
use crate::vertex;

pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.ends_with("/0") {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    s.parse::<Rational>()
        .map_err(|_| Error::Parse(format!("bad rational `{s}`")))
}

pub(crate) mod rational_vec {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = v.iter().map(ToString::to_string).collect();
        strings.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rational>, D::Error> {
        let strings: Vec<String> = Vec::deserialize(d)?;
        strings
            .iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

fn rationals_from_wire<'de, D: serde::Deserializer<'de>>(
    d: D,
) -> std::result::Result<BTreeMap<String, Vec<Rational>>, D::Error> {
    let raw: BTreeMap<String, Vec<String>> = BTreeMap::deserialize(d)?;
    raw.into_iter()
        .map(|(k, v)| {
            let parsed = v
                .iter()
                .map(|s| parse_rational(s))
                .collect::<Result<Vec<_>>>()
                .map_err(serde::de::Error::custom)?;
            Ok((k, parsed))
        })
        .collect()
}

fn rationals_to_wire<S: serde::Serializer>(
    m: &BTreeMap<String, Vec<Rational>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let raw: BTreeMap<&String, Vec<String>> = m
        .iter()
        .map(|(k, v)| (k, v.iter().map(ToString::to_string).collect()))
        .collect();
    raw.serialize(s)
}

/// Injective map from a vertex set to ℚⁿ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PointWire", into = "PointWire")]
pub struct PointConfiguration {
    dim: usize,
    points: BTreeMap<String, Vec<Rational>>,
}

#[derive(Serialize, Deserialize)]
struct PointWire {
    dim: usize,
    #[serde(serialize_with = "rationals_to_wire", deserialize_with = "rationals_from_wire")]
    points: BTreeMap<String, Vec<Rational>>,
}

impl TryFrom<PointWire> for PointConfiguration {
    type Error = Error;
    fn try_from(w: PointWire) -> Result<Self> {
        PointConfiguration::new(w.dim, w.points)
    }
}

impl From<PointConfiguration> for PointWire {
    fn from(p: PointConfiguration) -> Self {
        PointWire {
            dim: p.dim,
            points: p.points,
        }
    }
}

impl PointConfiguration {
    pub fn new(dim: usize, points: BTreeMap<String, Vec<Rational>>) -> Result<Self> {
        if dim == 0 {
            return Err(invalid("dimension must be at least 1"));
        }
        if points.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        for (v, x) in &points {
            vertex::check_label(v)?;
            if x.len() != dim {
                return Err(Error::DimensionMismatch(x.len(), dim));
            }
        }
        let labels: Vec<&String> = points.keys().collect();
        for (i, a) in labels.iter().enumerate() {
            for b in &labels[i + 1..] {
                if points[*a] == points[*b] {
                    return Err(invalid(format!("`{a}` and `{b}` sit at the same point")));
                }
            }
        }
        Ok(PointConfiguration { dim, points })
    }

    /// Integer coordinates, for tests and examples.
    pub fn from_ints<S: Into<String>>(dim: usize, points: impl IntoIterator<Item = (S, Vec<i64>)>) -> Result<Self> {
        Self::new(
            dim,
            points
                .into_iter()
                .map(|(k, v)| (k.into(), v.into_iter().map(int).collect()))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> Vec<String> {
        self.points.keys().cloned().collect()
    }

    pub fn point(&self, v: &str) -> Result<&[Rational]> {
        self.points
            .get(v)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))
    }

    pub fn points(&self) -> &BTreeMap<String, Vec<Rational>> {
        &self.points
    }

    pub fn relabel(&self, map: &BTreeMap<String, String>) -> Result<Self> {
        Self::new(
            self.dim,
            self.points
                .iter()
                .map(|(k, v)| (map.get(k).cloned().unwrap_or_else(|| k.clone()), v.clone()))
                .collect(),
        )
    }

    /// Applies `x ↦ s·x + t` to every point.
    pub fn affine(&self, scale: &Rational, shift: &[Rational]) -> Result<Self> {
        if scale <= &Rational::zero() {
            return Err(invalid("scale must be positive"));
        }
        if shift.len() != self.dim {
            return Err(Error::DimensionMismatch(shift.len(), self.dim));
        }
        Self::new(
            self.dim,
            self.points
                .iter()
                .map(|(k, x)| {
                    (
                        k.clone(),
                        x.iter().zip(shift).map(|(xi, ti)| scale * xi + ti).collect(),
                    )
                })
                .collect(),
        )
    }

    /// ψ: the edge between `a` and `b` has the weight of the first coordinate
    /// where they differ and points towards the larger value there.
    pub fn psi(&self) -> Result<WeightedTournament> {
        let labels = self.vertices();
        let mut triples = Vec::new();
        for (i, a) in labels.iter().enumerate() {
            for b in &labels[i + 1..] {
                let (xa, xb) = (&self.points[a], &self.points[b]);
                let k = (0..self.dim).find(|&k| xa[k] != xb[k]).expect("injective");
                let w = k as u32 + 1;
                if xa[k] < xb[k] {
                    triples.push((a.as_str(), b.as_str(), w));
                } else {
                    triples.push((b.as_str(), a.as_str(), w));
                }
            }
        }
        WeightedTournament::new(labels.iter().cloned(), &triples, self.dim as u32, Variant::Acyclic)
    }

    /// `y⁽ᵗ⁾`: coordinate `k` (1-based axis) of every point moved to
    /// `(1−t)·y + t·x`.
    pub fn blend_axis(&self, target: &Self, axis: usize, t: &Rational) -> Result<Self> {
        if self.dim != target.dim {
            return Err(Error::DimensionMismatch(self.dim, target.dim));
        }
        if self.vertices() != target.vertices() {
            return Err(Error::VertexMismatch {
                left: self.vertices(),
                right: target.vertices(),
            });
        }
        if axis == 0 || axis > self.dim {
            return Err(Error::IndexOutOfRange {
                index: axis,
                bound: self.dim + 1,
            });
        }
        let one_minus = Rational::one() - t;
        Self::new(
            self.dim,
            self.points
                .iter()
                .map(|(k, y)| {
                    let mut z = y.clone();
                    z[axis - 1] = &one_minus * &y[axis - 1] + t * &target.points[k][axis - 1];
                    (k.clone(), z)
                })
                .collect(),
        )
    }
}

/// Axis-aligned box `[v₁,w₁] × ⋯ × [vₙ,wₙ]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cube {
    #[serde(with = "rational_vec")]
    pub v: Vec<Rational>,
    #[serde(with = "rational_vec")]
    pub w: Vec<Rational>,
}

impl Cube {
    pub fn new(v: Vec<Rational>, w: Vec<Rational>) -> Result<Self> {
        if v.len() != w.len() {
            return Err(Error::DimensionMismatch(v.len(), w.len()));
        }
        if v.iter().zip(&w).any(|(a, b)| a >= b) {
            return Err(invalid("cube needs v < w in every coordinate"));
        }
        Ok(Cube { v, w })
    }

    /// Box from `(numerator pairs, common denominator)`.
    pub fn from_fractions(sides: &[(i64, i64)], den: i64) -> Result<Self> {
        Cube::new(
            sides.iter().map(|&(a, _)| rational(a, den)).collect(),
            sides.iter().map(|&(_, b)| rational(b, den)).collect(),
        )
    }

    pub fn unit(dim: usize) -> Self {
        Cube {
            v: vec![Rational::zero(); dim],
            w: vec![Rational::one(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.v.len()
    }

    pub fn center(&self) -> Vec<Rational> {
        self.v
            .iter()
            .zip(&self.w)
            .map(|(a, b)| (a + b) / int(2))
            .collect()
    }

    /// `self` lies weakly below `other` along `axis` (0-based).
    pub fn below(&self, other: &Cube, axis: usize) -> bool {
        self.w[axis] <= other.v[axis]
    }

    /// First 0-based axis along which the two boxes are separated.
    pub fn separation(&self, other: &Cube) -> Option<usize> {
        (0..self.dim()).find(|&k| self.below(other, k) || other.below(self, k))
    }

    fn contains(&self, other: &Cube) -> bool {
        (0..self.dim()).all(|k| self.v[k] <= other.v[k] && other.w[k] <= self.w[k])
    }

    /// Image of `inner ⊆ [0,1]ⁿ` under the affine map `[0,1]ⁿ → self`.
    pub fn embed(&self, inner: &Cube) -> Cube {
        let map = |x: &Rational, k: usize| &self.v[k] + (&self.w[k] - &self.v[k]) * x;
        Cube {
            v: inner.v.iter().enumerate().map(|(k, x)| map(x, k)).collect(),
            w: inner.w.iter().enumerate().map(|(k, x)| map(x, k)).collect(),
        }
    }
}

/// Boxes with pairwise disjoint interiors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CubeWire", into = "CubeWire")]
pub struct CubeConfiguration {
    dim: usize,
    cubes: BTreeMap<String, Cube>,
}

#[derive(Serialize, Deserialize)]
struct CubeWire {
    dim: usize,
    cubes: BTreeMap<String, Cube>,
}

impl TryFrom<CubeWire> for CubeConfiguration {
    type Error = Error;
    fn try_from(w: CubeWire) -> Result<Self> {
        for c in w.cubes.values() {
            Cube::new(c.v.clone(), c.w.clone())?;
        }
        CubeConfiguration::new(w.dim, w.cubes)
    }
}

impl From<CubeConfiguration> for CubeWire {
    fn from(c: CubeConfiguration) -> Self {
        CubeWire {
            dim: c.dim,
            cubes: c.cubes,
        }
    }
}

impl CubeConfiguration {
    pub fn new(dim: usize, cubes: BTreeMap<String, Cube>) -> Result<Self> {
        if dim == 0 {
            return Err(invalid("dimension must be at least 1"));
        }
        if cubes.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        for (v, c) in &cubes {
            vertex::check_label(v)?;
            if c.dim() != dim {
                return Err(Error::DimensionMismatch(c.dim(), dim));
            }
        }
        let labels: Vec<&String> = cubes.keys().collect();
        for (i, a) in labels.iter().enumerate() {
            for b in &labels[i + 1..] {
                if cubes[*a].separation(&cubes[*b]).is_none() {
                    return Err(invalid(format!("cubes `{a}` and `{b}` overlap")));
                }
            }
        }
        Ok(CubeConfiguration { dim, cubes })
    }

    /// Boxes with sides `[num_lo/den, num_hi/den]`.
    pub fn from_fractions<S: Into<String>>(
        dim: usize,
        den: i64,
        cubes: impl IntoIterator<Item = (S, Vec<(i64, i64)>)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (k, sides) in cubes {
            map.insert(k.into(), Cube::from_fractions(&sides, den)?);
        }
        Self::new(dim, map)
    }

    pub fn single(label: impl Into<String>, dim: usize) -> Result<Self> {
        Self::new(dim, BTreeMap::from([(label.into(), Cube::unit(dim))]))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> Vec<String> {
        self.cubes.keys().cloned().collect()
    }

    pub fn cubes(&self) -> &BTreeMap<String, Cube> {
        &self.cubes
    }

    pub fn cube(&self, v: &str) -> Result<&Cube> {
        self.cubes
            .get(v)
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))
    }

    pub fn relabel(&self, map: &BTreeMap<String, String>) -> Result<Self> {
        Self::new(
            self.dim,
            self.cubes
                .iter()
                .map(|(k, c)| (map.get(k).cloned().unwrap_or_else(|| k.clone()), c.clone()))
                .collect(),
        )
    }

    fn inside_unit(&self) -> bool {
        let unit = Cube::unit(self.dim);
        self.cubes.values().all(|c| unit.contains(c))
    }

    /// φ: weight of the first axis along which two boxes are separated,
    /// pointing towards the box lying above.
    pub fn phi(&self) -> Result<WeightedTournament> {
        let labels = self.vertices();
        let mut triples = Vec::new();
        for (i, a) in labels.iter().enumerate() {
            for b in &labels[i + 1..] {
                let (ca, cb) = (&self.cubes[a], &self.cubes[b]);
                let k = ca
                    .separation(cb)
                    .ok_or_else(|| invalid(format!("cubes `{a}` and `{b}` overlap")))?;
                let w = k as u32 + 1;
                if ca.below(cb, k) {
                    triples.push((a.as_str(), b.as_str(), w));
                } else {
                    triples.push((b.as_str(), a.as_str(), w));
                }
            }
        }
        WeightedTournament::new(labels.iter().cloned(), &triples, self.dim as u32, Variant::Extended)
    }

    /// Little-cubes composition: `inner`, which must lie in `[0,1]ⁿ`, is
    /// rescaled into the box of `at`.
    pub fn compose(&self, at: &str, inner: &Self) -> Result<Self> {
        if self.dim != inner.dim {
            return Err(Error::DimensionMismatch(self.dim, inner.dim));
        }
        if !inner.inside_unit() {
            return Err(precondition("inner configuration must lie in the unit cube"));
        }
        vertex::substitute(&self.vertices(), at, &inner.vertices())?;
        let host = &self.cubes[at];
        let mut cubes: BTreeMap<String, Cube> = self
            .cubes
            .iter()
            .filter(|(k, _)| *k != at)
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        for (k, c) in &inner.cubes {
            cubes.insert(k.clone(), host.embed(c));
        }
        Self::new(self.dim, cubes)
    }

    pub fn centers(&self) -> Result<PointConfiguration> {
        PointConfiguration::new(
            self.dim,
            self.cubes.iter().map(|(k, c)| (k.clone(), c.center())).collect(),
        )
    }

    /// Whether the boxes split along hyperplanes in the shape of `t`.
    pub fn in_g_of_tree(&self, t: &LabelledPlanarTree) -> Result<bool> {
        self.check_leaves(t)?;
        Ok(self.fits(t.root()))
    }

    fn check_leaves(&self, t: &LabelledPlanarTree) -> Result<()> {
        if t.vertices() != self.vertices() {
            return Err(Error::VertexMismatch {
                left: t.vertices(),
                right: self.vertices(),
            });
        }
        Ok(())
    }

    fn fits(&self, t: &Tree) -> bool {
        let Tree::Node { label, children } = t else {
            return true;
        };
        let axis = *label as usize - 1;
        if axis >= self.dim {
            return false;
        }
        let groups: Vec<Vec<String>> = children.iter().map(Tree::leaves).collect();
        for pair in groups.windows(2) {
            let top = pair[0].iter().map(|v| &self.cubes[v].w[axis]).max();
            let bottom = pair[1].iter().map(|v| &self.cubes[v].v[axis]).min();
            match (top, bottom) {
                (Some(t), Some(b)) if t <= b => {}
                (Some(_), Some(_)) => return false,
                _ => {}
            }
        }
        children.iter().all(|c| self.fits(c))
    }

    /// `c ∈ F(T)`: `c ∈ G(T′)` for some canonical `T′ ≤ T`.
    pub fn in_f_of_tree(&self, t: &LabelledPlanarTree, caps: &Caps) -> Result<bool> {
        self.check_leaves(t)?;
        let t = t.canonicalize();
        for s in LabelledPlanarTree::enumerate(&self.vertices(), t.max_label(), caps)? {
            if s.leq(&t)? && self.fits(s.root()) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// The least canonical tree `T` (labels up to `dim`) with `c ∈ F(T)`.
    pub fn phi_m(&self, caps: &Caps) -> Result<LabelledPlanarTree> {
        let labels = self.vertices();
        if labels.len() == 1 {
            return LabelledPlanarTree::leaf(labels[0].clone(), self.dim as u32);
        }
        let candidates: Vec<LabelledPlanarTree> =
            LabelledPlanarTree::enumerate(&labels, self.dim as u32, caps)?
                .into_iter()
                .filter(|t| self.fits(t.root()))
                .collect();
        if candidates.is_empty() {
            return Err(precondition("configuration is not decomposable"));
        }
        let mut minimal = Vec::new();
        for t in &candidates {
            let mut is_min = true;
            for s in &candidates {
                if s != t && s.leq(t)? {
                    is_min = false;
                    break;
                }
            }
            if is_min {
                minimal.push(t);
            }
        }
        match minimal.as_slice() {
            [only] => Ok((*only).clone()),
            many => Err(Error::Internal(format!(
                "{} minimal trees for a decomposable configuration",
                many.len()
            ))),
        }
    }

    /// Uniformly random boxes on the grid `{0, 1/den, …, 1}`, resampled
    /// until the interiors are disjoint.
    pub fn random<R: Rng>(rng: &mut R, labels: &[String], dim: usize, den: i64) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        'retry: loop {
            let mut cubes: BTreeMap<String, Cube> = BTreeMap::new();
            for v in labels {
                let mut side = Vec::with_capacity(dim);
                for _ in 0..dim {
                    let a = rng.gen_range(0..den);
                    let b = rng.gen_range(a + 1..=den);
                    side.push((a, b));
                }
                let c = Cube::from_fractions(&side, den)?;
                if cubes.values().any(|o| o.separation(&c).is_none()) {
                    continue 'retry;
                }
                cubes.insert(v.clone(), c);
            }
            return Self::new(dim, cubes);
        }
    }
}

/// Boxes obtained by cutting `[0,1]ⁿ` into equal slabs along the axis of
/// each vertex label, following `t`.
pub fn tree_witness(t: &LabelledPlanarTree, dim: usize) -> Result<CubeConfiguration> {
    if (t.max_label() as usize) > dim {
        return Err(Error::DimensionMismatch(t.max_label() as usize, dim));
    }
    fn place(t: &Tree, cube: Cube, out: &mut BTreeMap<String, Cube>) {
        match t {
            Tree::Leaf { leaf } => {
                out.insert(leaf.clone(), cube);
            }
            Tree::Node { label, children } => {
                let axis = *label as usize - 1;
                let k = children.len() as i64;
                for (j, c) in children.iter().enumerate() {
                    let mut piece = cube.clone();
                    let span = &cube.w[axis] - &cube.v[axis];
                    piece.v[axis] = &cube.v[axis] + &span * rational(j as i64, k);
                    piece.w[axis] = &cube.v[axis] + &span * rational(j as i64 + 1, k);
                    place(c, piece, out);
                }
            }
        }
    }
    let mut cubes = BTreeMap::new();
    place(t.root(), Cube::unit(dim), &mut cubes);
    CubeConfiguration::new(dim, cubes)
}

/// Witness: walk the underlying order, stepping one unit along
/// the axis given by each consecutive weight.
pub fn proper_witness(g: &WeightedTournament) -> Result<PointConfiguration> {
    if !g.is_proper()? {
        return Err(precondition("graph is not proper"));
    }
    let order = g.underlying_order()?;
    let dim = g.max_weight() as usize;
    let mut current = vec![Rational::zero(); dim];
    let mut points = BTreeMap::new();
    points.insert(order[0].clone(), current.clone());
    for pair in order.windows(2) {
        let w = g.weight(&pair[0], &pair[1])? as usize;
        current[w - 1] += Rational::one();
        points.insert(pair[1].clone(), current.clone());
    }
    PointConfiguration::new(dim, points)
}

/// Exhaustive search over coordinate level patterns: `true` iff some
/// configuration in `ℚⁿ` has ψ equal to `g`.
pub fn psi_fiber_nonempty(g: &WeightedTournament, n: u32, caps: &Caps) -> Result<bool> {
    if !g.is_acyclic() {
        return Err(precondition("ψ only produces acyclic graphs"));
    }
    if g.max_weight() > n {
        return Err(Error::WeightMismatch(g.max_weight(), n));
    }
    let k = g.len();
    if k > caps.pattern_vertices || n > caps.pattern_weight {
        return Err(Error::BudgetExceeded {
            what: format!("pattern search on {k} vertices in dimension {n}"),
            limit: caps.pattern_vertices,
        });
    }
    let target = g.with_max_weight(n)?;
    let labels = g.vertices().to_vec();
    let slots = k * n as usize;
    let total = (k as u64).pow(slots as u32);
    for code in 0..total {
        let mut c = code;
        let mut points: BTreeMap<String, Vec<Rational>> = BTreeMap::new();
        for v in &labels {
            let mut x = Vec::with_capacity(n as usize);
            for _ in 0..n {
                x.push(int((c % k as u64) as i64));
                c /= k as u64;
            }
            points.insert(v.clone(), x);
        }
        let Ok(config) = PointConfiguration::new(n as usize, points) else {
            continue;
        };
        if config.psi()? == target {
            return Ok(true);
        }
    }
    Ok(false)
}
