use std::collections::BTreeMap;
use std::sync::OnceLock;

use en_models::barratt_eccles::BESimplex;
use en_models::configurations::{proper_witness, rational, CubeConfiguration, PointConfiguration, Rational};
use en_models::lattice_paths::{normalize_point, project_point, random_point, split_point, LatticePath};
use en_models::topology::{homology, FinitePoset};
use en_models::trees::{LabelledPlanarTree, Tree};
use en_models::{Caps, Variant, WeightedTournament};
use proptest::prelude::*;
use proptest::sample::select;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn graphs(vs: &[&str], n: u32, variant: Variant) -> Vec<WeightedTournament> {
    WeightedTournament::enumerate(vs, n, variant, &Caps::default()).unwrap()
}

fn three_vertex() -> &'static [WeightedTournament] {
    static CELL: OnceLock<Vec<WeightedTournament>> = OnceLock::new();
    CELL.get_or_init(|| graphs(&["a", "b", "c"], 3, Variant::Extended))
}

fn pair(vs: [&str; 2], n: u32) -> Vec<WeightedTournament> {
    graphs(&vs, n, Variant::Acyclic)
}

fn swap(a: &str, b: &str) -> BTreeMap<String, String> {
    BTreeMap::from([(a.to_string(), b.to_string()), (b.to_string(), a.to_string())])
}

fn points(seed: u64, labels: &[&str], dim: usize) -> PointConfiguration {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let pts: Vec<(&str, Vec<i64>)> = labels.iter().map(|l| (*l, (0..dim).map(|_| rng.gen_range(-3..=3)).collect())).collect();
        if let Ok(x) = PointConfiguration::from_ints(dim, pts) {
            return x;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph_order_is_partial(x in select(three_vertex()), y in select(three_vertex()), z in select(three_vertex())) {
        prop_assert!(x.leq(&x).unwrap());
        if x.leq(&y).unwrap() && y.leq(&x).unwrap() {
            prop_assert_eq!(&x, &y);
        }
        if x.leq(&y).unwrap() && y.leq(&z).unwrap() {
            prop_assert!(x.leq(&z).unwrap());
        }
    }

    #[test]
    fn composition_is_associative(
        f in select(pair(["x", "y"], 3)),
        g in select(pair(["a", "b"], 3)),
        h in select(pair(["c", "d"], 3)),
    ) {
        let left = f.compose("x", &g).unwrap().compose("b", &h).unwrap();
        let right = f.compose("x", &g.compose("b", &h).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        let one = f.compose("x", &g).unwrap().compose("y", &h).unwrap();
        let other = f.compose("y", &h).unwrap().compose("x", &g).unwrap();
        prop_assert_eq!(one, other);
        prop_assert!(left.is_acyclic());
    }

    #[test]
    fn composition_is_monotone(
        f1 in select(pair(["x", "y"], 2)), f2 in select(pair(["x", "y"], 2)),
        g1 in select(pair(["a", "b"], 2)), g2 in select(pair(["a", "b"], 2)),
    ) {
        prop_assume!(f1.leq(&f2).unwrap() && g1.leq(&g2).unwrap());
        prop_assert!(f1.compose("x", &g1).unwrap().leq(&f2.compose("x", &g2).unwrap()).unwrap());
    }

    #[test]
    fn composition_is_equivariant(f in select(pair(["x", "y"], 3)), g in select(pair(["a", "b"], 3))) {
        let relabelled = f.relabel(&swap("x", "y")).unwrap().compose("y", &g).unwrap();
        prop_assert_eq!(relabelled, f.compose("x", &g).unwrap().relabel(&swap("x", "y")).unwrap());
        let inner = f.compose("x", &g.relabel(&swap("a", "b")).unwrap()).unwrap();
        prop_assert_eq!(inner, f.compose("x", &g).unwrap().relabel(&swap("a", "b")).unwrap());
    }

    #[test]
    fn psi_is_acyclic_and_affine_invariant(seed in any::<u64>(), num in 1i64..6, den in 1i64..6, dx in -5i64..5, dy in -5i64..5) {
        let x = points(seed, &["a", "b", "c", "d"], 2);
        let g = x.psi().unwrap();
        prop_assert!(g.is_acyclic());
        let moved = x.affine(&rational(num, den), &[rational(dx, 3), rational(dy, 2)]).unwrap();
        prop_assert_eq!(moved.psi().unwrap(), g.clone());
        prop_assert_eq!(x.relabel(&swap("a", "d")).unwrap().psi().unwrap(), g.relabel(&swap("a", "d")).unwrap());
    }

    #[test]
    fn phi_is_lax_and_above_centers(seed in any::<u64>(), dim in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let outer: Vec<String> = ["p", "q", "r"].map(String::from).to_vec();
        let inner: Vec<String> = ["s", "t"].map(String::from).to_vec();
        let c = CubeConfiguration::random(&mut rng, &outer, dim, 4).unwrap();
        let d = CubeConfiguration::random(&mut rng, &inner, dim, 4).unwrap();
        let composite = c.compose("q", &d).unwrap();
        let phi = composite.phi().unwrap();
        prop_assert!(!phi.has_uniform_cycle());
        prop_assert!(phi.leq(&c.phi().unwrap().compose("q", &d.phi().unwrap()).unwrap()).unwrap());
        let centers = composite.centers().unwrap().psi().unwrap().with_variant(Variant::Extended).unwrap();
        prop_assert!(centers.leq(&phi).unwrap());
    }

    #[test]
    fn retraction_stays_below(gi in 0usize..48, seed in any::<u64>(), k in 1usize..=2) {
        static PROPER: OnceLock<Vec<WeightedTournament>> = OnceLock::new();
        let proper = PROPER.get_or_init(|| {
            graphs(&["a", "b", "c"], 2, Variant::Acyclic).into_iter().filter(|g| g.is_proper().unwrap()).collect()
        });
        let g = &proper[gi % proper.len()];
        let x = proper_witness(g).unwrap();
        // a point of Z_k: agrees with x above axis k
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let y = loop {
            let pts: BTreeMap<String, Vec<Rational>> = x
                .points()
                .iter()
                .map(|(v, p)| {
                    let q = (0..2).map(|i| if i + 1 > k { p[i].clone() } else { rational(rng.gen_range(-4..=4), 2) }).collect();
                    (v.clone(), q)
                })
                .collect();
            if let Ok(y) = PointConfiguration::new(2, pts) {
                if y.psi().unwrap().leq(g).unwrap() {
                    break y;
                }
            }
        };
        for t in [rational(0, 1), rational(1, 3), rational(1, 2), rational(1, 1)] {
            let blended = y.blend_axis(&x, k, &t).unwrap();
            prop_assert!(blended.psi().unwrap().leq(g).unwrap(), "t = {}", t);
        }
    }

    #[test]
    fn be_gamma_is_strict_and_equivariant(seed in any::<u64>(), dim in 0usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut simplex = |vs: &[&str]| {
            let rows: Vec<Vec<&str>> = (0..=dim).map(|_| { let mut o = vs.to_vec(); o.shuffle(&mut rng); o }).collect();
            BESimplex::new(rows).unwrap()
        };
        let x = simplex(&["p", "q", "r"]);
        let y = simplex(&["s", "t"]);
        let n = 4;
        prop_assert_eq!(x.compose("q", &y).unwrap().gamma(n).unwrap(), x.gamma(n).unwrap().compose("q", &y.gamma(n).unwrap()).unwrap());
        prop_assert_eq!(x.relabel(&swap("p", "r")).unwrap().gamma(n).unwrap(), x.gamma(n).unwrap().relabel(&swap("p", "r")).unwrap());
        for i in 0..=dim {
            if dim > 0 {
                let face = x.face(i).unwrap();
                prop_assert!(face.gamma(n).unwrap().leq(&x.gamma(n).unwrap()).unwrap());
            }
            prop_assert_eq!(x.degeneracy(i).unwrap().gamma(n).unwrap(), x.gamma(n).unwrap());
        }
    }

    #[test]
    fn lattice_path_gamma_is_lax(xs in select(LatticePath::enumerate_strings(&["p".into(), "a".into(), "q".into()], 4, 1)), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let blocks = xs.fiber_size("a") - 1;
        let len = rng.gen_range(2..=4);
        let ys = LatticePath::enumerate_strings(&["c".into(), "d".into()], len, blocks);
        prop_assume!(!ys.is_empty());
        let y = &ys[rng.gen_range(0..ys.len())];
        let n = 6;
        let composed = xs.substitute("a", y).unwrap();
        prop_assert!(composed.gamma(n).unwrap().leq(&xs.gamma(n).unwrap().compose("a", &y.gamma(n).unwrap()).unwrap()).unwrap());
    }

    #[test]
    fn split_and_project_are_inverse(seed in any::<u64>(), len in 2usize..7, bars in 0usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let vs: Vec<String> = ["a", "b", "c"].map(String::from).to_vec();
        let p = random_point(&mut rng, &vs[..2], len, bars, 7).unwrap();
        let (flat, sums) = project_point(&p).unwrap();
        prop_assert_eq!(split_point(&flat, &sums).unwrap(), p.clone());
        prop_assert_eq!(normalize_point(&p.path, &p.coords).unwrap(), p);
    }

    #[test]
    fn tree_rewrites_are_confluent(ti in 0usize..36, seed in any::<u64>()) {
        static TREES: OnceLock<Vec<LabelledPlanarTree>> = OnceLock::new();
        let trees = TREES.get_or_init(|| LabelledPlanarTree::enumerate(&["a", "b", "c"], 2, &Caps::default()).unwrap());
        let t = &trees[ti % trees.len()];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let expanded = expand(t.root(), &mut rng, 3);
        let raw = LabelledPlanarTree::new(expanded, 2).unwrap();
        prop_assert_eq!(raw.canonicalize(), t.clone());
        prop_assert_eq!(raw.canonicalize().canonicalize(), raw.canonicalize());
        prop_assert_eq!(raw.mu().unwrap(), t.mu().unwrap());
    }

    #[test]
    fn homology_ignores_enumeration_order(gi in 0usize..48, seed in any::<u64>()) {
        static G: OnceLock<Vec<WeightedTournament>> = OnceLock::new();
        let all = G.get_or_init(|| graphs(&["a", "b", "c"], 2, Variant::Acyclic));
        let g = &all[gi];
        let mut below: Vec<WeightedTournament> = all.iter().filter(|h| h.leq(g).unwrap()).cloned().collect();
        let caps = Caps::default();
        let p = FinitePoset::from_leq(&below, ToString::to_string, |x, y| x.leq(y).unwrap()).unwrap();
        let complex = p.order_complex(&caps).unwrap();
        let h = homology(&complex, None).unwrap();
        below.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let q = FinitePoset::from_leq(&below, ToString::to_string, |x, y| x.leq(y).unwrap()).unwrap();
        let shuffled = homology(&q.order_complex(&caps).unwrap(), None).unwrap();
        prop_assert_eq!(&h, &shuffled);
        // a down-set has a top element
        prop_assert!(p.is_cone() && h.is_acyclic());
        let counts = complex.counts();
        let euler: i64 = counts.iter().enumerate().map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) }).sum();
        prop_assert_eq!(h.reduced_euler(), euler - 1);
    }

    #[test]
    fn json_round_trips(gi in select(three_vertex()), seed in any::<u64>()) {
        let text = serde_json::to_string(&gi).unwrap();
        prop_assert_eq!(serde_json::from_str::<WeightedTournament>(&text).unwrap(), gi);
        let x = points(seed, &["a", "b"], 3);
        prop_assert_eq!(serde_json::from_str::<PointConfiguration>(&serde_json::to_string(&x).unwrap()).unwrap(), x);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = CubeConfiguration::random(&mut rng, &["u".to_string(), "v".to_string()], 2, 5).unwrap();
        prop_assert_eq!(serde_json::from_str::<CubeConfiguration>(&serde_json::to_string(&c).unwrap()).unwrap(), c);
    }
}

/// Undoes canonical form at random: wraps subtrees in unary vertices and
/// nests runs of children under a vertex with the parent's label.
fn expand(t: &Tree, rng: &mut ChaCha8Rng, depth: usize) -> Tree {
    let t = match t {
        Tree::Leaf { .. } => t.clone(),
        Tree::Node { label, children } => {
            let mut kids: Vec<Tree> = children.iter().map(|c| expand(c, rng, depth.saturating_sub(1))).collect();
            if kids.len() >= 3 && rng.gen_bool(0.5) {
                let start = rng.gen_range(0..kids.len() - 1);
                let end = rng.gen_range(start + 2..=kids.len());
                let run: Vec<Tree> = kids.drain(start..end).collect();
                kids.insert(start, Tree::node(*label, run));
            }
            Tree::node(*label, kids)
        }
    };
    if depth > 0 && rng.gen_bool(0.3) {
        Tree::node(rng.gen_range(1..=2), vec![t])
    } else {
        t
    }
}
