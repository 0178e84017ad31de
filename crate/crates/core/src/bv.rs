//! Boardman–Vogt resolution of the graph operads, and the stratum map from
//! configurations of points on trees.
//!
//! An element of `W(𝒢ₙ)(A)` is a non-planar tree with leaves `A` whose inner
//! vertices carry graphs on their inputs. An input is named by its leaf, or
//! by the cluster id `{a,b,…}` of the leaves above it.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::configurations::{rational_vec, PointConfiguration, Rational};
use crate::error::{invalid, Error, Result};
use crate::graphs::{Variant, WeightedTournament};
use crate::vertex;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WTree {
    Leaf {
        leaf: String,
    },
    Vertex {
        label: WeightedTournament,
        children: Vec<WTree>,
    },
}

fn cluster_id(leaves: &[String]) -> String {
    format!("{{{}}}", leaves.join(","))
}

impl WTree {
    pub fn leaf(v: impl Into<String>) -> Self {
        WTree::Leaf { leaf: v.into() }
    }

    pub fn vertex(label: WeightedTournament, children: Vec<WTree>) -> Self {
        WTree::Vertex { label, children }
    }

    /// Sorted leaves above this node.
    pub fn leaves(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out.sort();
        out
    }

    fn collect(&self, out: &mut Vec<String>) {
        match self {
            WTree::Leaf { leaf } => out.push(leaf.clone()),
            WTree::Vertex { children, .. } => children.iter().for_each(|c| c.collect(out)),
        }
    }

    /// The name of this node as an input of its parent.
    pub fn id(&self) -> String {
        match self {
            WTree::Leaf { leaf } => leaf.clone(),
            WTree::Vertex { .. } => cluster_id(&self.leaves()),
        }
    }

    fn inner_count(&self) -> usize {
        match self {
            WTree::Leaf { .. } => 0,
            WTree::Vertex { children, .. } => 1 + children.iter().map(WTree::inner_count).sum::<usize>(),
        }
    }

    /// Removes unary vertices and sorts children by id.
    fn normalize(self) -> Self {
        match self {
            WTree::Leaf { .. } => self,
            WTree::Vertex { label, children } => {
                let mut children: Vec<WTree> = children.into_iter().map(WTree::normalize).collect();
                if children.len() == 1 {
                    return children.pop().unwrap();
                }
                children.sort_by_key(WTree::id);
                WTree::Vertex { label, children }
            }
        }
    }

    fn validate(&self, n: u32, variant: Variant) -> Result<()> {
        if let WTree::Vertex { label, children } = self {
            let ids: Vec<String> = children.iter().map(WTree::id).collect();
            let sorted = vertex::vertex_set(ids.iter().cloned())?;
            if label.vertices() != sorted.as_slice() {
                return Err(Error::VertexMismatch {
                    left: label.vertices().to_vec(),
                    right: sorted,
                });
            }
            if label.max_weight() != n || label.variant() != variant {
                return Err(invalid("all labels must come from the same operad"));
            }
            for c in children {
                c.validate(n, variant)?;
            }
        }
        Ok(())
    }

    /// Inner vertices keyed by their leaf sets.
    fn clusters<'a>(&'a self, out: &mut BTreeMap<Vec<String>, &'a WTree>) {
        if let WTree::Vertex { children, .. } = self {
            out.insert(self.leaves(), self);
            children.iter().for_each(|c| c.clusters(out));
        }
    }

    /// Composite of the labels from this node up to the leaves or to the
    /// nodes whose leaf sets lie in `stops`.
    fn composite(&self, stops: &BTreeSet<Vec<String>>) -> Result<Option<WeightedTournament>> {
        let WTree::Vertex { label, children } = self else {
            return Ok(None);
        };
        let mut out = label.clone();
        for c in children {
            if stops.contains(&c.leaves()) {
                continue;
            }
            if let Some(inner) = c.composite(stops)? {
                out = out.compose(&c.id(), &inner)?;
            }
        }
        Ok(Some(out))
    }

    fn graft(&self, a: &str, y: &WTree) -> (WTree, bool) {
        match self {
            WTree::Leaf { leaf } if leaf == a => (y.clone(), true),
            WTree::Leaf { .. } => (self.clone(), false),
            WTree::Vertex { label, children } => {
                let mut label = label.clone();
                let mut changed = false;
                let mut new_children = Vec::with_capacity(children.len());
                for c in children {
                    let (nc, hit) = c.graft(a, y);
                    if hit {
                        let map = BTreeMap::from([(c.id(), nc.id())]);
                        label = label.relabel(&map).expect("ids stay distinct");
                        changed = true;
                    }
                    new_children.push(nc);
                }
                (WTree::Vertex { label, children: new_children }, changed)
            }
        }
    }

    fn relabel_leaves(&self, map: &BTreeMap<String, String>) -> Result<WTree> {
        match self {
            WTree::Leaf { leaf } => Ok(WTree::leaf(map.get(leaf).cloned().unwrap_or_else(|| leaf.clone()))),
            WTree::Vertex { label, children } => {
                let new_children: Vec<WTree> = children
                    .iter()
                    .map(|c| c.relabel_leaves(map))
                    .collect::<Result<_>>()?;
                let ids: BTreeMap<String, String> = children
                    .iter()
                    .zip(&new_children)
                    .map(|(c, n)| (c.id(), n.id()))
                    .collect();
                Ok(WTree::vertex(label.relabel(&ids)?, new_children))
            }
        }
    }
}

/// A labelled tree in `W(𝒢ₙ)(A)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WWire", into = "WWire")]
pub struct WElement {
    root: WTree,
    max_weight: u32,
    variant: Variant,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct WWire {
    tree: WTree,
    max_weight: u32,
    variant: Variant,
}

impl TryFrom<WWire> for WElement {
    type Error = Error;
    fn try_from(w: WWire) -> Result<Self> {
        WElement::new(w.tree, w.max_weight, w.variant)
    }
}

impl From<WElement> for WWire {
    fn from(x: WElement) -> Self {
        WWire {
            tree: x.root,
            max_weight: x.max_weight,
            variant: x.variant,
        }
    }
}

impl WElement {
    pub fn new(root: WTree, max_weight: u32, variant: Variant) -> Result<Self> {
        let leaves = root.leaves();
        for l in &leaves {
            vertex::check_leaf(l)?;
        }
        vertex::vertex_set(leaves.iter().cloned())?;
        let root = root.normalize();
        root.validate(max_weight, variant)?;
        Ok(WElement { root, max_weight, variant })
    }

    pub fn root(&self) -> &WTree {
        &self.root
    }

    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn leaves(&self) -> Vec<String> {
        self.root.leaves()
    }

    pub fn inner_vertices(&self) -> usize {
        self.root.inner_count()
    }

    /// Leaf sets of the inner vertices.
    pub fn clusters(&self) -> BTreeSet<Vec<String>> {
        let mut m = BTreeMap::new();
        self.root.clusters(&mut m);
        m.into_keys().collect()
    }

    fn check_operad(&self, other: &Self) -> Result<()> {
        if self.max_weight != other.max_weight || self.variant != other.variant {
            return Err(invalid("elements of different operads"));
        }
        Ok(())
    }

    /// ι: the corolla labelled by `g`.
    pub fn iota(g: &WeightedTournament) -> Result<Self> {
        let leaves = g.vertices().iter().map(WTree::leaf).collect();
        Self::new(WTree::vertex(g.clone(), leaves), g.max_weight(), g.variant())
    }

    /// π: composes all labels.
    pub fn pi(&self) -> Result<WeightedTournament> {
        match self.root.composite(&BTreeSet::new())? {
            Some(g) => Ok(g),
            None => WeightedTournament::unit(self.root.id(), self.max_weight, self.variant),
        }
    }

    /// `x ≤ y`: `x`'s tree is a contraction of `y`'s and each label of `x`
    /// is below the composite of the labels of `y` it replaces.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check_operad(other)?;
        if self.leaves() != other.leaves() {
            return Err(Error::VertexMismatch {
                left: self.leaves(),
                right: other.leaves(),
            });
        }
        let mine = {
            let mut m = BTreeMap::new();
            self.root.clusters(&mut m);
            m
        };
        let theirs = {
            let mut m = BTreeMap::new();
            other.root.clusters(&mut m);
            m
        };
        if !mine.keys().all(|c| theirs.contains_key(c)) {
            return Ok(false);
        }
        let stops: BTreeSet<Vec<String>> = mine.keys().cloned().collect();
        for (cluster, node) in &mine {
            let WTree::Vertex { label, .. } = node else { unreachable!() };
            let composite = theirs[cluster].composite(&stops)?.expect("inner vertex");
            if !label.leq(&composite)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Contracts the edge below the inner vertex with leaf set `cluster`.
    pub fn contract(&self, cluster: &[String]) -> Result<Self> {
        fn go(t: &WTree, cluster: &[String]) -> Result<(WTree, bool)> {
            let WTree::Vertex { label, children } = t else {
                return Ok((t.clone(), false));
            };
            let mut label = label.clone();
            let mut out = Vec::new();
            let mut hit = false;
            for c in children {
                if let (WTree::Vertex { label: inner, children: grand }, true) = (c, c.leaves() == cluster) {
                    label = label.compose(&c.id(), inner)?;
                    out.extend(grand.iter().cloned());
                    hit = true;
                } else {
                    let (nc, h) = go(c, cluster)?;
                    hit |= h;
                    out.push(nc);
                }
            }
            Ok((WTree::vertex(label, out), hit))
        }
        let (root, hit) = go(&self.root, cluster)?;
        if !hit {
            return Err(invalid(format!("no inner edge below {}", cluster_id(cluster))));
        }
        Self::new(root, self.max_weight, self.variant)
    }

    /// Grafts `y` onto the leaf `a`.
    pub fn compose(&self, a: &str, y: &Self) -> Result<Self> {
        self.check_operad(y)?;
        vertex::substitute(&self.leaves(), a, &y.leaves())?;
        let (root, _) = self.root.graft(a, &y.root);
        Self::new(root, self.max_weight, self.variant)
    }

    pub fn relabel(&self, map: &BTreeMap<String, String>) -> Result<Self> {
        Self::new(self.root.relabel_leaves(map)?, self.max_weight, self.variant)
    }

    /// All elements with leaves `vertices` and at most `max_inner` inner
    /// vertices, sorted.
    pub fn enumerate<S: AsRef<str>>(
        vertices: &[S],
        n: u32,
        variant: Variant,
        max_inner: usize,
        caps: &Caps,
    ) -> Result<Vec<Self>> {
        let vs = vertex::vertex_set(vertices.iter().map(AsRef::as_ref))?;
        for v in &vs {
            vertex::check_leaf(v)?;
        }
        caps.check_vertices(vs.len())?;
        caps.check_weight(n)?;
        let mut out = Vec::new();
        for shape in shapes(&vs, max_inner.max(1)) {
            for root in labellings(&shape, n, variant, caps)? {
                out.push(WElement { root, max_weight: n, variant });
                caps.check_simplices(out.len())?;
            }
        }
        out.sort();
        Ok(out)
    }
}

impl std::fmt::Display for WTree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WTree::Leaf { leaf } => write!(f, "{leaf}"),
            WTree::Vertex { label, children } => {
                write!(f, "[{label}](")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl std::fmt::Display for WElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.root.fmt(f)
    }
}

#[derive(Debug, Clone)]
enum Shape {
    Leaf(String),
    Node(Vec<Shape>),
}

impl Shape {
    fn inner(&self) -> usize {
        match self {
            Shape::Leaf(_) => 0,
            Shape::Node(c) => 1 + c.iter().map(Shape::inner).sum::<usize>(),
        }
    }
}

/// Set partitions of `items`.
fn partitions(items: &[String]) -> Vec<Vec<Vec<String>>> {
    let Some((first, rest)) = items.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for p in partitions(rest) {
        for i in 0..p.len() {
            let mut q = p.clone();
            q[i].insert(0, first.clone());
            out.push(q);
        }
        let mut q = p;
        q.insert(0, vec![first.clone()]);
        out.push(q);
    }
    out
}

/// Trees without unary vertices on `leaves` with at most `budget` inner
/// vertices.
fn shapes(leaves: &[String], budget: usize) -> Vec<Shape> {
    if leaves.len() == 1 {
        return vec![Shape::Leaf(leaves[0].clone())];
    }
    if budget == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for blocks in partitions(leaves) {
        if blocks.len() < 2 {
            continue;
        }
        let mut partial: Vec<Vec<Shape>> = vec![Vec::new()];
        for block in &blocks {
            let options = shapes(block, budget - 1);
            let mut next = Vec::new();
            for p in &partial {
                for o in &options {
                    let mut q = p.clone();
                    q.push(o.clone());
                    if 1 + q.iter().map(Shape::inner).sum::<usize>() <= budget {
                        next.push(q);
                    }
                }
            }
            partial = next;
        }
        out.extend(partial.into_iter().map(Shape::Node));
    }
    out
}

fn labellings(shape: &Shape, n: u32, variant: Variant, caps: &Caps) -> Result<Vec<WTree>> {
    match shape {
        Shape::Leaf(v) => Ok(vec![WTree::leaf(v.clone())]),
        Shape::Node(children) => {
            let mut partial: Vec<Vec<WTree>> = vec![Vec::new()];
            for c in children {
                let options = labellings(c, n, variant, caps)?;
                partial = partial
                    .into_iter()
                    .flat_map(|p| {
                        options.iter().map(move |o| {
                            let mut q = p.clone();
                            q.push(o.clone());
                            q
                        })
                    })
                    .collect();
            }
            let mut out = Vec::new();
            for kids in partial {
                let ids: Vec<String> = kids.iter().map(WTree::id).collect();
                for g in WeightedTournament::enumerate(&ids, n, variant, caps)? {
                    out.push(WTree::vertex(g, kids.clone()).normalize());
                }
            }
            Ok(out)
        }
    }
}

/// A tree whose inner vertices place their inputs as points of `ℝⁿ`: a
/// point of the stratum `∏_v NConf(in(v))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FmTree {
    Leaf {
        leaf: String,
    },
    Vertex {
        children: Vec<FmInput>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FmInput {
    #[serde(with = "rational_vec")]
    pub point: Vec<Rational>,
    pub tree: FmTree,
}

impl FmTree {
    pub fn leaf(v: impl Into<String>) -> Self {
        FmTree::Leaf { leaf: v.into() }
    }

    pub fn vertex(children: Vec<(Vec<Rational>, FmTree)>) -> Self {
        FmTree::Vertex {
            children: children
                .into_iter()
                .map(|(point, tree)| FmInput { point, tree })
                .collect(),
        }
    }

    pub fn leaves(&self) -> Vec<String> {
        match self {
            FmTree::Leaf { leaf } => vec![leaf.clone()],
            FmTree::Vertex { children } => {
                let mut out: Vec<String> = children.iter().flat_map(|c| c.tree.leaves()).collect();
                out.sort();
                out
            }
        }
    }

    fn id(&self) -> String {
        match self {
            FmTree::Leaf { leaf } => leaf.clone(),
            FmTree::Vertex { .. } => cluster_id(&self.leaves()),
        }
    }

    /// Grafts `other` onto the leaf `a`.
    pub fn graft(&self, a: &str, other: &FmTree) -> FmTree {
        match self {
            FmTree::Leaf { leaf } if leaf == a => other.clone(),
            FmTree::Leaf { .. } => self.clone(),
            FmTree::Vertex { children } => FmTree::Vertex {
                children: children
                    .iter()
                    .map(|c| FmInput {
                        point: c.point.clone(),
                        tree: c.tree.graft(a, other),
                    })
                    .collect(),
            },
        }
    }

    /// The configuration at the root, on the ids of its inputs.
    pub fn root_configuration(&self) -> Result<Option<PointConfiguration>> {
        let FmTree::Vertex { children } = self else {
            return Ok(None);
        };
        let dim = children.first().map_or(0, |c| c.point.len());
        let points: BTreeMap<String, Vec<Rational>> =
            children.iter().map(|c| (c.tree.id(), c.point.clone())).collect();
        if points.len() != children.len() {
            return Err(Error::DuplicateVertex(self.id()));
        }
        PointConfiguration::new(dim, points).map(Some)
    }
}

/// ψ applied at every inner vertex.
pub fn fm_psi_stratum(t: &FmTree) -> Result<WElement> {
    fn go(t: &FmTree, dim: &mut Option<usize>) -> Result<WTree> {
        match t {
            FmTree::Leaf { leaf } => Ok(WTree::leaf(leaf.clone())),
            FmTree::Vertex { children } => {
                if children.len() < 2 {
                    return Err(invalid("the stratum has no unary vertices"));
                }
                let config = t.root_configuration()?.expect("inner vertex");
                match dim {
                    Some(d) if *d != config.dim() => return Err(Error::DimensionMismatch(*d, config.dim())),
                    _ => *dim = Some(config.dim()),
                }
                let kids = children.iter().map(|c| go(&c.tree, dim)).collect::<Result<_>>()?;
                Ok(WTree::vertex(config.psi()?, kids))
            }
        }
    }
    let mut dim = None;
    let root = go(t, &mut dim)?;
    let n = match dim {
        Some(d) => d as u32,
        None => return Err(invalid("a leaf has no configuration to map")),
    };
    WElement::new(root, n, Variant::Acyclic)
}
