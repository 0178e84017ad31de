//! Planar trees with labelled levels, their order and the map μ to graphs.

use en_models::trees::{is_decomposable_graph, LabelledPlanarTree, Tree};
use en_models::{fixtures, Caps, Variant, WeightedTournament};

fn main() -> en_models::Result<()> {
    let caps = Caps::default();
    let (t, _) = fixtures::mu_square()?;
    println!("t = {t}");
    println!("μ(t) = {}", t.mu()?);

    let s = LabelledPlanarTree::new(Tree::corolla(1, ["a", "b", "c", "d"]), 2)?;
    println!("{s} ≤ {t}: {}", s.leq(&t)?);

    let u = LabelledPlanarTree::new(Tree::corolla(2, ["x", "y"]), 2)?;
    println!("t ∘_a u = {}", t.compose("a", &u)?);

    for k in 1..=3 {
        let vs: Vec<String> = (0..k).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        let trees = LabelledPlanarTree::enumerate(&vs, 2, &caps)?;
        let graphs = WeightedTournament::enumerate(&vs, 2, Variant::Acyclic, &caps)?;
        let decomposable = graphs.iter().filter(|g| is_decomposable_graph(g).unwrap_or(false)).count();
        println!("|A| = {k}: {} trees, {decomposable} decomposable of {} graphs", trees.len(), graphs.len());
    }

    let (c, _) = fixtures::phi_figure()?;
    println!("φ_M(four squares) = {}", c.phi_m(&caps)?);
    Ok(())
}
