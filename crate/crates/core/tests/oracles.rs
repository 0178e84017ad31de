//! Brute-force oracles checked against the library's fast paths.

use std::collections::{BTreeMap, BTreeSet};

use en_models::bv::{WElement, WTree};
use en_models::configurations::psi_fiber_nonempty;
use en_models::lattice_paths::{diagonal_l_g, enumerate_l_g, LatticePath};
use en_models::suites::oracle;
use en_models::topology::{homology, smith_normal_form, FinitePoset};
use en_models::trees::{is_decomposable_graph, LabelledPlanarTree};
use en_models::{Caps, Variant, WeightedTournament};
use num_bigint::BigInt;

fn labels(k: usize) -> Vec<String> {
    (0..k).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

#[test]
fn graph_enumeration_matches_brute_force() {
    let caps = Caps::default();
    for k in 1..=3 {
        for n in 1..=3 {
            for variant in [Variant::Acyclic, Variant::Extended] {
                let fast: BTreeSet<_> = WeightedTournament::enumerate(&labels(k), n, variant, &caps).unwrap().into_iter().collect();
                let slow: BTreeSet<_> = oracle::graphs(k, n, variant).into_iter().collect();
                assert_eq!(fast, slow, "k={k} n={n} {variant:?}");
            }
        }
    }
}

/// Every directed path `v₀ → … → v_k` has `w(v₀, v_k)` equal to its least
/// edge weight.
fn proper_by_paths(g: &WeightedTournament) -> bool {
    fn walk(g: &WeightedTournament, path: &mut Vec<String>, least: u32) -> bool {
        let last = path.last().unwrap().clone();
        for next in g.vertices().to_vec() {
            if path.contains(&next) || !g.directed(&last, &next).unwrap() {
                continue;
            }
            let least = least.min(g.weight(&last, &next).unwrap());
            if g.weight(&path[0], &next).unwrap() != least || !g.directed(&path[0], &next).unwrap() {
                return false;
            }
            path.push(next);
            let ok = walk(g, path, least);
            path.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    g.vertices().iter().all(|v| walk(g, &mut vec![v.clone()], u32::MAX))
}

#[test]
fn proper_criterion_matches_path_form() {
    let caps = Caps::default();
    for n in [2, 3] {
        for k in 2..=4 {
            for g in WeightedTournament::enumerate(&labels(k), n, Variant::Acyclic, &caps).unwrap() {
                assert_eq!(g.is_proper().unwrap(), proper_by_paths(&g), "{g}");
            }
        }
    }
}

#[test]
fn proper_criterion_matches_pattern_search() {
    let caps = Caps::default();
    for g in WeightedTournament::enumerate(&labels(3), 2, Variant::Acyclic, &caps).unwrap() {
        assert_eq!(g.is_proper().unwrap(), psi_fiber_nonempty(&g, 2, &caps).unwrap(), "{g}");
    }
}

#[test]
fn tree_images_match_cut_form() {
    // the decomposability test against the images of all enumerated trees
    let caps = Caps::default();
    for n in 1..=2 {
        for k in 1..=3 {
            let images: BTreeSet<_> = LabelledPlanarTree::enumerate(&labels(k), n, &caps)
                .unwrap()
                .iter()
                .map(|t| t.mu().unwrap())
                .collect();
            for g in WeightedTournament::enumerate(&labels(k), n, Variant::Acyclic, &caps).unwrap() {
                assert_eq!(is_decomposable_graph(&g).unwrap(), images.contains(&g), "{g}");
            }
        }
    }
}

fn inner_clusters(t: &WTree, out: &mut Vec<Vec<String>>) {
    if let WTree::Vertex { children, .. } = t {
        out.push(t.leaves());
        children.iter().for_each(|c| inner_clusters(c, out));
    }
}

fn labels_by_cluster(t: &WTree, out: &mut BTreeMap<Vec<String>, WeightedTournament>) {
    if let WTree::Vertex { label, children } = t {
        out.insert(t.leaves(), label.clone());
        children.iter().for_each(|c| labels_by_cluster(c, out));
    }
}

/// `x ≤ y` by trying every set of inner edges of `y` to contract.
fn w_leq_brute(x: &WElement, y: &WElement) -> bool {
    let mut edges = Vec::new();
    inner_clusters(y.root(), &mut edges);
    let root = y.root().leaves();
    edges.retain(|c| *c != root);
    let mut mine = BTreeMap::new();
    labels_by_cluster(x.root(), &mut mine);
    for mask in 0u32..1 << edges.len() {
        let mut z = y.clone();
        for (i, c) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                z = z.contract(c).unwrap();
            }
        }
        let mut theirs = BTreeMap::new();
        labels_by_cluster(z.root(), &mut theirs);
        if mine.keys().eq(theirs.keys()) && mine.iter().all(|(c, g)| g.leq(&theirs[c]).unwrap()) {
            return true;
        }
    }
    false
}

#[test]
fn w_order_matches_contraction_search() {
    let caps = Caps::default();
    let elements = WElement::enumerate(&labels(3), 2, Variant::Acyclic, 2, &caps).unwrap();
    for x in &elements {
        for y in &elements {
            assert_eq!(x.leq(y).unwrap(), w_leq_brute(x, y), "{x} vs {y}");
        }
    }
}

/// Reduced Betti numbers of the normalized total complex of the
/// multisimplicial set of nondegenerate paths below `g`.
fn total_complex_betti(g: &WeightedTournament) -> Vec<usize> {
    let paths = enumerate_l_g(g, &Caps::default()).unwrap();
    let vs = g.vertices().to_vec();
    let degree = |x: &LatticePath| vs.iter().map(|v| x.fiber_size(v) - 1).sum::<usize>();
    let top = paths.iter().map(degree).max().unwrap();
    let mut basis: Vec<BTreeMap<LatticePath, usize>> = vec![BTreeMap::new(); top + 1];
    for x in &paths {
        let d = degree(x);
        let next = basis[d].len();
        basis[d].insert(x.clone(), next);
    }
    let boundary = |x: &LatticePath| -> BTreeMap<usize, i64> {
        let mut out = BTreeMap::new();
        let mut offset = 0;
        for v in &vs {
            let k = x.fiber_size(v);
            if k > 1 {
                for i in 0..k {
                    let y = x.face(v, i).unwrap();
                    if y.is_nondegenerate() {
                        let sign = if (offset + i) % 2 == 0 { 1 } else { -1 };
                        *out.entry(basis[degree(x) - 1][&y]).or_insert(0) += sign;
                    }
                }
            }
            offset += k - 1;
        }
        out
    };
    let mut ranks = vec![1];
    for d in 1..=top {
        let mut m = vec![vec![BigInt::from(0); basis[d].len()]; basis[d - 1].len()];
        for (x, &j) in &basis[d] {
            for (i, v) in boundary(x) {
                m[i][j] += v;
            }
            if d >= 2 {
                // ∂∂ = 0
                let mut twice = BTreeMap::new();
                for (i, v) in boundary(x) {
                    let y = basis[d - 1].iter().find(|(_, &k)| k == i).unwrap().0;
                    for (l, u) in boundary(y) {
                        *twice.entry(l).or_insert(0) += u * v;
                    }
                }
                assert!(twice.values().all(|&c| c == 0), "∂∂ ≠ 0 at {x}");
            }
        }
        ranks.push(smith_normal_form(&m).len());
    }
    ranks.push(0);
    (0..=top).map(|d| basis[d].len() - ranks[d] - ranks[d + 1]).collect()
}

#[test]
fn diagonal_matches_total_complex() {
    let caps = Caps::default();
    let mut graphs = WeightedTournament::enumerate(&labels(2), 2, Variant::Acyclic, &caps).unwrap();
    graphs.extend(WeightedTournament::enumerate(&labels(3), 2, Variant::Acyclic, &caps).unwrap());
    for g in &graphs {
        let (diagonal, _) = diagonal_l_g(g, &caps).unwrap();
        let h = homology(&diagonal, None).unwrap();
        let total = total_complex_betti(g);
        let trim = |b: &[usize]| b.iter().rposition(|&x| x != 0).map_or(vec![], |i| b[..=i].to_vec());
        assert_eq!(trim(&h.betti), trim(&total), "{g}");
        assert!(h.torsion_free());
    }
}

#[test]
fn sparse_homology_matches_dense() {
    let caps = Caps::default();
    for n in 1..=3 {
        let graphs = WeightedTournament::enumerate(&labels(2), n, Variant::Acyclic, &caps).unwrap();
        let p = FinitePoset::from_leq(&graphs, ToString::to_string, |x, y| x.leq(y).unwrap()).unwrap();
        let complex = p.order_complex(&caps).unwrap();
        assert_eq!(homology(&complex, None).unwrap().betti, oracle::betti(&complex));
    }
    let graphs = WeightedTournament::enumerate(&labels(3), 2, Variant::Acyclic, &caps).unwrap();
    for g in graphs.iter().take(12) {
        let below: Vec<_> = graphs.iter().filter(|h| h.leq(g).unwrap()).cloned().collect();
        let p = FinitePoset::from_leq(&below, ToString::to_string, |x, y| x.leq(y).unwrap()).unwrap();
        let complex = p.order_complex(&caps).unwrap();
        assert_eq!(homology(&complex, None).unwrap().betti, oracle::betti(&complex));
    }
}

#[test]
fn frozen_counts_match_oracles() {
    assert_eq!(oracle::graphs(2, 3, Variant::Acyclic).len(), 6);
    assert_eq!(oracle::graphs(3, 2, Variant::Extended).len(), 60);
    assert_eq!((1..=4).map(|k| oracle::tree_count(k, 1).unwrap()).collect::<Vec<_>>(), [1, 2, 6, 24]);
}
