//! Labelled planar trees: the iterated-monoidal operad ℳₙ.
//!
//! Inner vertices carry labels in `1..=n`; leaves carry distinct vertex
//! labels. Trees are identified modulo stump removal, unary-vertex removal
//! and contraction of edges between equally labelled vertices; the
//! representative with none of these left is the canonical form.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{invalid, precondition, Error, Result};
use crate::graphs::{Variant, WeightedTournament};
use crate::vertex;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Tree {
    Leaf {
        leaf: String,
    },
    Node {
        label: u32,
        children: Vec<Tree>,
    },
}

impl Tree {
    pub fn leaf(v: impl Into<String>) -> Tree {
        Tree::Leaf { leaf: v.into() }
    }

    pub fn node(label: u32, children: Vec<Tree>) -> Tree {
        Tree::Node { label, children }
    }

    /// Corolla `label(v₁, …, v_k)` over leaves.
    pub fn corolla<S: Into<String>>(label: u32, leaves: impl IntoIterator<Item = S>) -> Tree {
        Tree::node(label, leaves.into_iter().map(Tree::leaf).collect())
    }

    /// Leaves in planar order.
    pub fn leaves(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<String>) {
        match self {
            Tree::Leaf { leaf } => out.push(leaf.clone()),
            Tree::Node { children, .. } => children.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    fn max_label(&self) -> u32 {
        match self {
            Tree::Leaf { .. } => 0,
            Tree::Node { label, children } => children
                .iter()
                .map(Tree::max_label)
                .fold(*label, u32::max),
        }
    }

    fn min_label(&self) -> u32 {
        match self {
            Tree::Leaf { .. } => u32::MAX,
            Tree::Node { label, children } => children
                .iter()
                .map(Tree::min_label)
                .fold(*label, u32::min),
        }
    }

    fn is_stump(&self) -> bool {
        matches!(self, Tree::Node { children, .. } if children.is_empty())
    }

    /// One bottom-up pass of the rewrite rules reaches the normal form.
    fn canonical(&self) -> Tree {
        match self {
            Tree::Leaf { .. } => self.clone(),
            Tree::Node { label, children } => {
                let mut flat = Vec::new();
                for child in children.iter().map(Tree::canonical) {
                    match child {
                        c if c.is_stump() => {}
                        Tree::Node {
                            label: l,
                            children: grand,
                        } if l == *label => flat.extend(grand),
                        c => flat.push(c),
                    }
                }
                match flat.len() {
                    0 => Tree::node(1, Vec::new()),
                    1 => flat.pop().unwrap(),
                    _ => Tree::node(*label, flat),
                }
            }
        }
    }

    fn is_canonical_below(&self, parent: Option<u32>) -> bool {
        match self {
            Tree::Leaf { .. } => true,
            Tree::Node { label, children } => {
                if children.is_empty() {
                    return parent.is_none() && *label == 1;
                }
                children.len() >= 2
                    && parent != Some(*label)
                    && children
                        .iter()
                        .all(|c| !c.is_stump() && c.is_canonical_below(Some(*label)))
            }
        }
    }

    fn graft(&self, at: &str, inner: &Tree) -> Tree {
        match self {
            Tree::Leaf { leaf } if leaf == at => inner.clone(),
            Tree::Leaf { .. } => self.clone(),
            Tree::Node { label, children } => Tree::node(
                *label,
                children.iter().map(|c| c.graft(at, inner)).collect(),
            ),
        }
    }

    fn rename(&self, map: &BTreeMap<String, String>) -> Tree {
        match self {
            Tree::Leaf { leaf } => Tree::leaf(map.get(leaf).cloned().unwrap_or_else(|| leaf.clone())),
            Tree::Node { label, children } => {
                Tree::node(*label, children.iter().map(|c| c.rename(map)).collect())
            }
        }
    }

    /// For every leaf, the `(label, child index)` steps from the root.
    fn paths(&self) -> BTreeMap<String, Vec<(u32, usize)>> {
        fn walk(t: &Tree, prefix: &mut Vec<(u32, usize)>, out: &mut BTreeMap<String, Vec<(u32, usize)>>) {
            match t {
                Tree::Leaf { leaf } => {
                    out.insert(leaf.clone(), prefix.clone());
                }
                Tree::Node { label, children } => {
                    for (k, c) in children.iter().enumerate() {
                        prefix.push((*label, k));
                        walk(c, prefix, out);
                        prefix.pop();
                    }
                }
            }
        }
        let mut out = BTreeMap::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    fn render(&self, out: &mut String) {
        match self {
            Tree::Leaf { leaf } => out.push_str(leaf),
            Tree::Node { label, children } => {
                out.push_str(&label.to_string());
                out.push('(');
                for (k, c) in children.iter().enumerate() {
                    if k > 0 {
                        out.push(',');
                    }
                    c.render(out);
                }
                out.push(')');
            }
        }
    }
}

/// Element of ℳₙ(A): a labelled planar tree with labels bounded by `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelledPlanarTree {
    root: Tree,
    max_label: u32,
}

/// Pairwise data of a tree: for leaves `a, b`, the label where their paths
/// split and whether `a` comes first in planar order.
#[derive(Debug, Clone)]
pub struct JoinTable {
    pub vertices: Vec<String>,
    join: BTreeMap<(String, String), (u32, bool)>,
}

impl JoinTable {
    /// `(join label, a precedes b)`.
    pub fn get(&self, a: &str, b: &str) -> Option<(u32, bool)> {
        if a < b {
            self.join.get(&(a.to_string(), b.to_string())).copied()
        } else {
            self.join
                .get(&(b.to_string(), a.to_string()))
                .map(|&(l, first)| (l, !first))
        }
    }
}

impl LabelledPlanarTree {
    /// Validates labels and leaves; no canonicalization is applied.
    pub fn new(root: Tree, max_label: u32) -> Result<Self> {
        if max_label == 0 {
            return Err(invalid("max label must be at least 1"));
        }
        let leaves = root.leaves();
        for v in &leaves {
            vertex::check_label(v)?;
        }
        let distinct: BTreeSet<&String> = leaves.iter().collect();
        if distinct.len() != leaves.len() {
            let dup = leaves
                .iter()
                .find(|v| leaves.iter().filter(|w| w == v).count() > 1)
                .unwrap();
            return Err(Error::DuplicateVertex(dup.clone()));
        }
        if root.max_label() > max_label || root.min_label() == 0 {
            return Err(invalid(format!("tree labels must lie in 1..={max_label}")));
        }
        Ok(LabelledPlanarTree { root, max_label })
    }

    /// Validates and canonicalizes.
    pub fn canonical(root: Tree, max_label: u32) -> Result<Self> {
        Ok(Self::new(root, max_label)?.canonicalize())
    }

    pub fn leaf(v: impl Into<String>, max_label: u32) -> Result<Self> {
        Self::new(Tree::leaf(v), max_label)
    }

    pub fn root(&self) -> &Tree {
        &self.root
    }

    pub fn max_label(&self) -> u32 {
        self.max_label
    }

    /// Leaf labels, sorted.
    pub fn vertices(&self) -> Vec<String> {
        let mut v = self.root.leaves();
        v.sort();
        v
    }

    pub fn planar_leaves(&self) -> Vec<String> {
        self.root.leaves()
    }

    pub fn canonicalize(&self) -> Self {
        LabelledPlanarTree {
            root: self.root.canonical(),
            max_label: self.max_label,
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.root.is_canonical_below(None)
    }

    pub fn with_max_label(&self, n: u32) -> Result<Self> {
        Self::new(self.root.clone(), n)
    }

    pub fn relabel(&self, map: &BTreeMap<String, String>) -> Result<Self> {
        Self::new(self.root.rename(map), self.max_label)
    }

    pub fn joins(&self) -> JoinTable {
        let paths = self.root.paths();
        let vertices: Vec<String> = paths.keys().cloned().collect();
        let mut join = BTreeMap::new();
        for (i, a) in vertices.iter().enumerate() {
            for b in &vertices[i + 1..] {
                let (pa, pb) = (&paths[a], &paths[b]);
                let k = (0..pa.len().min(pb.len()))
                    .find(|&k| pa[k] != pb[k])
                    .expect("distinct leaves split somewhere");
                join.insert((a.clone(), b.clone()), (pa[k].0, pa[k].1 < pb[k].1));
            }
        }
        JoinTable { vertices, join }
    }

    /// `self ≤ other`: every pair's join label does not grow, and strictly
    /// drops when the planar order of the pair changes.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check_comparable(other)?;
        let (x, y) = (self.joins(), other.joins());
        for (i, a) in x.vertices.iter().enumerate() {
            for b in &x.vertices[i + 1..] {
                let (lx, fx) = x.get(a, b).unwrap();
                let (ly, fy) = y.get(a, b).unwrap();
                let ok = if fx == fy { lx <= ly } else { lx < ly };
                if !ok {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn check_comparable(&self, other: &Self) -> Result<()> {
        let (a, b) = (self.vertices(), other.vertices());
        if a.is_empty() || b.is_empty() {
            return Err(precondition("trees without leaves are not compared"));
        }
        if a != b {
            return Err(Error::VertexMismatch { left: a, right: b });
        }
        if self.max_label != other.max_label {
            return Err(Error::WeightMismatch(self.max_label, other.max_label));
        }
        Ok(())
    }

    /// Grafts `inner` onto the leaf `at` and canonicalizes.
    pub fn compose(&self, at: &str, inner: &Self) -> Result<Self> {
        if self.max_label != inner.max_label {
            return Err(Error::WeightMismatch(self.max_label, inner.max_label));
        }
        vertex::substitute(&self.vertices(), at, &inner.vertices())?;
        Ok(LabelledPlanarTree {
            root: self.root.graft(at, &inner.root),
            max_label: self.max_label,
        }
        .canonicalize())
    }

    /// μ: edges point along planar order and carry the join label.
    pub fn mu(&self) -> Result<WeightedTournament> {
        let t = self.joins();
        if t.vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut triples = Vec::new();
        for (i, a) in t.vertices.iter().enumerate() {
            for b in &t.vertices[i + 1..] {
                let (l, a_first) = t.get(a, b).unwrap();
                if a_first {
                    triples.push((a.as_str(), b.as_str(), l));
                } else {
                    triples.push((b.as_str(), a.as_str(), l));
                }
            }
        }
        WeightedTournament::new(t.vertices.iter().cloned(), &triples, self.max_label, Variant::Acyclic)
    }

    /// All canonical trees on `vertices` with labels in `1..=n`, sorted.
    pub fn enumerate<S: AsRef<str>>(vertices: &[S], n: u32, caps: &Caps) -> Result<Vec<Self>> {
        let vertices = vertex::vertex_set(vertices.iter().map(|s| s.as_ref().to_string()))?;
        caps.check_vertices(vertices.len())?;
        caps.check_weight(n)?;
        if n == 0 {
            return Err(invalid("max label must be at least 1"));
        }
        let mut memo = BTreeMap::new();
        let mut out: Vec<Self> = trees_on(&vertices, n, None, &mut memo)
            .into_iter()
            .map(|root| LabelledPlanarTree { root, max_label: n })
            .collect();
        out.sort();
        Ok(out)
    }

    /// Inverse of μ on decomposable graphs.
    pub fn from_decomposable(g: &WeightedTournament) -> Result<Option<Self>> {
        let order = g.underlying_order()?;
        Ok(split_tree(g, &order)?.map(|root| {
            LabelledPlanarTree {
                root,
                max_label: g.max_weight(),
            }
            .canonicalize()
        }))
    }
}

/// Canonical trees on `set` whose root is not a node labelled `forbid`.
fn trees_on(
    set: &[String],
    n: u32,
    forbid: Option<u32>,
    memo: &mut BTreeMap<(Vec<String>, Option<u32>), Vec<Tree>>,
) -> Vec<Tree> {
    if set.len() == 1 {
        return vec![Tree::leaf(set[0].clone())];
    }
    let key = (set.to_vec(), forbid);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let mut out = Vec::new();
    for label in (1..=n).filter(|&l| Some(l) != forbid) {
        for blocks in ordered_partitions(set) {
            if blocks.len() < 2 {
                continue;
            }
            let options: Vec<Vec<Tree>> = blocks
                .iter()
                .map(|b| trees_on(b, n, Some(label), memo))
                .collect();
            for children in product(&options) {
                out.push(Tree::node(label, children));
            }
        }
    }
    memo.insert(key, out.clone());
    out
}

/// Ordered set partitions of `set` into nonempty blocks.
fn ordered_partitions(set: &[String]) -> Vec<Vec<Vec<String>>> {
    if set.is_empty() {
        return vec![Vec::new()];
    }
    let k = set.len();
    let mut out = Vec::new();
    // choose the first block as a nonempty subset, recurse on the rest
    for mask in 1u32..(1 << k) {
        let first: Vec<String> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| set[i].clone()).collect();
        let rest: Vec<String> = (0..k).filter(|i| mask >> i & 1 == 0).map(|i| set[i].clone()).collect();
        for mut tail in ordered_partitions(&rest) {
            tail.insert(0, first.clone());
            out.push(tail);
        }
    }
    out
}

fn product(options: &[Vec<Tree>]) -> Vec<Vec<Tree>> {
    let mut acc: Vec<Vec<Tree>> = vec![Vec::new()];
    for opts in options {
        let mut next = Vec::with_capacity(acc.len() * opts.len());
        for prefix in &acc {
            for o in opts {
                let mut v = prefix.clone();
                v.push(o.clone());
                next.push(v);
            }
        }
        acc = next;
    }
    acc
}

/// Recursive cut form: `order` splits at some `i` with every crossing edge
/// carrying the same weight, and both halves split again.
fn split_tree(g: &WeightedTournament, order: &[String]) -> Result<Option<Tree>> {
    if order.len() == 1 {
        return Ok(Some(Tree::leaf(order[0].clone())));
    }
    for i in 1..order.len() {
        let w = g.weight(&order[i - 1], &order[i])?;
        let mut uniform = true;
        'cross: for p in &order[..i] {
            for q in &order[i..] {
                if g.weight(p, q)? != w {
                    uniform = false;
                    break 'cross;
                }
            }
        }
        if !uniform {
            continue;
        }
        if let (Some(l), Some(r)) = (split_tree(g, &order[..i])?, split_tree(g, &order[i..])?) {
            return Ok(Some(Tree::node(w, vec![l, r])));
        }
    }
    Ok(None)
}

/// Whether `g` is μ of some tree, by the recursive cut form.
pub fn is_decomposable_graph(g: &WeightedTournament) -> Result<bool> {
    Ok(LabelledPlanarTree::from_decomposable(g)?.is_some())
}

impl Serialize for LabelledPlanarTree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.root.serialize(s)
    }
}

impl LabelledPlanarTree {
    /// Parses the node JSON; the label bound defaults to the largest label
    /// present.
    pub fn from_json(s: &str, max_label: Option<u32>) -> Result<Self> {
        let root: Tree = serde_json::from_str(s)?;
        let n = max_label.unwrap_or_else(|| root.max_label().max(1));
        Self::new(root, n)
    }
}

impl std::fmt::Display for LabelledPlanarTree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut s = String::new();
        self.root.render(&mut s);
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(root: Tree, n: u32) -> LabelledPlanarTree {
        LabelledPlanarTree::new(root, n).unwrap()
    }

    fn square() -> LabelledPlanarTree {
        t(
            Tree::node(1, vec![Tree::corolla(2, ["a", "b"]), Tree::corolla(2, ["c", "d"])]),
            2,
        )
    }

    #[test]
    fn canonical_forms() {
        let unary = t(Tree::node(2, vec![Tree::leaf("a")]), 2).canonicalize();
        assert_eq!(unary.root(), &Tree::leaf("a"));
        let nested = t(
            Tree::node(1, vec![Tree::corolla(1, ["a", "b"]), Tree::leaf("c")]),
            2,
        );
        assert_eq!(nested.canonicalize().root(), &Tree::corolla(1, ["a", "b", "c"]));
        let stump = t(Tree::node(3, Vec::new()), 3).canonicalize();
        assert_eq!(stump.root(), &Tree::node(1, Vec::new()));
        let with_stump = t(
            Tree::node(2, vec![Tree::leaf("a"), Tree::node(1, Vec::new()), Tree::leaf("b")]),
            2,
        );
        assert_eq!(with_stump.canonicalize().root(), &Tree::corolla(2, ["a", "b"]));
        assert!(square().is_canonical());
        assert!(!nested.is_canonical());
    }

    #[test]
    fn order_figure() {
        let upper = t(
            Tree::node(2, vec![Tree::corolla(1, ["a", "c"]), Tree::corolla(1, ["b", "d"])]),
            2,
        );
        assert!(square().leq(&upper).unwrap());
        assert!(square().leq(&square()).unwrap());
        let ab = t(Tree::corolla(2, ["a", "b"]), 2);
        let ba = t(Tree::corolla(2, ["b", "a"]), 2);
        assert!(!ab.leq(&ba).unwrap() && !ba.leq(&ab).unwrap());
    }

    #[test]
    fn mu_figure() {
        let g = square().mu().unwrap();
        let expected = WeightedTournament::new(
            ["a", "b", "c", "d"],
            &[
                ("a", "b", 2),
                ("c", "d", 2),
                ("a", "c", 1),
                ("a", "d", 1),
                ("b", "c", 1),
                ("b", "d", 1),
            ],
            2,
            Variant::Acyclic,
        )
        .unwrap();
        assert_eq!(g, expected);
        assert_eq!(
            LabelledPlanarTree::from_decomposable(&g).unwrap().unwrap(),
            square()
        );
        let single = LabelledPlanarTree::leaf("a", 2).unwrap().mu().unwrap();
        assert!(single.directed_edges().is_empty());
    }

    #[test]
    fn grafting() {
        let outer = t(Tree::corolla(1, ["x", "y"]), 2);
        let inner = t(Tree::corolla(2, ["b", "c"]), 2);
        let nested = outer.compose("y", &inner).unwrap();
        assert_eq!(
            nested.root(),
            &Tree::node(1, vec![Tree::leaf("x"), Tree::corolla(2, ["b", "c"])])
        );
        let flat = outer.compose("y", &t(Tree::corolla(1, ["b", "c"]), 2)).unwrap();
        assert_eq!(flat.root(), &Tree::corolla(1, ["x", "b", "c"]));
        let unit = LabelledPlanarTree::leaf("z", 2).unwrap();
        let map = BTreeMap::from([("y".to_string(), "z".to_string())]);
        assert_eq!(outer.compose("y", &unit).unwrap(), outer.relabel(&map).unwrap());
        assert!(matches!(outer.compose("y", &outer), Err(Error::VertexClash(_))));
    }

    #[test]
    fn enumeration_counts() {
        let caps = Caps::default();
        assert_eq!(LabelledPlanarTree::enumerate(&["a"], 3, &caps).unwrap().len(), 1);
        for n in 1..=3 {
            assert_eq!(
                LabelledPlanarTree::enumerate(&["a", "b"], n, &caps).unwrap().len(),
                2 * n as usize
            );
        }
        for (k, fact) in [(1, 1), (2, 2), (3, 6), (4, 24)] {
            let vs = vertex::default_labels(k);
            assert_eq!(LabelledPlanarTree::enumerate(&vs, 1, &caps).unwrap().len(), fact);
        }
        for tree in LabelledPlanarTree::enumerate(&["a", "b", "c"], 2, &caps).unwrap() {
            assert!(tree.is_canonical());
        }
    }

    #[test]
    fn decomposability_examples() {
        let g = |e: &[(&str, &str, u32)]| {
            WeightedTournament::new(["a", "b", "c"], e, 2, Variant::Acyclic).unwrap()
        };
        assert!(is_decomposable_graph(&g(&[("a", "b", 1), ("b", "c", 2), ("a", "c", 2)])).unwrap());
        assert!(is_decomposable_graph(&g(&[("a", "b", 2), ("b", "c", 1), ("a", "c", 1)])).unwrap());
        assert!(!is_decomposable_graph(&g(&[("a", "b", 1), ("b", "c", 1), ("a", "c", 2)])).unwrap());
    }

    #[test]
    fn json_shape() {
        let json = serde_json::to_string(&square()).unwrap();
        assert_eq!(
            json,
            r#"{"label":1,"children":[{"label":2,"children":[{"leaf":"a"},{"leaf":"b"}]},{"label":2,"children":[{"leaf":"c"},{"leaf":"d"}]}]}"#
        );
        assert_eq!(LabelledPlanarTree::from_json(&json, None).unwrap(), square());
        assert!(LabelledPlanarTree::from_json(r#"{"label":1,"children":[{"leaf":"a"},{"leaf":"a"}]}"#, None).is_err());
    }
}
