//! Lattice paths: weights, simplicial operators, substitution, the point-level
//! splitting and the diagonal of ℒ_g.

use en_models::lattice_paths::{diagonal_l_g, enumerate_l_g, project_point, random_point, split_point, LatticePath};
use en_models::topology::homology;
use en_models::{Caps, Variant, WeightedTournament};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> en_models::Result<()> {
    let caps = Caps::default();
    let x = LatticePath::parse("ab|ba|b")?;
    println!("x = {x}: n = {}, weight(a,b) = {}", x.n(), x.weight("a", "b")?);
    println!("face a,0: {}   degeneracy b,0: {}", x.face("a", 0)?, x.degeneracy("b", 0)?);
    println!("coface 1: {}   codegeneracy 0: {}", x.coface(1)?, x.codegeneracy(0)?);
    let y = LatticePath::parse("cd|dc")?;
    println!("x ∘_a y = {}", x.substitute("a", &y)?);
    println!("γ(x) = {}", x.gamma(x.max_weight())?);

    let g = WeightedTournament::new(["a", "b"], &[("a", "b", 2)], 2, Variant::Acyclic)?;
    let paths: Vec<String> = enumerate_l_g(&g, &caps)?.iter().map(ToString::to_string).collect();
    println!("ℒ_g for g = {g}: {paths:?}");
    let (diagonal, _) = diagonal_l_g(&g, &caps)?;
    println!("diagonal: counts {:?}, {}", diagonal.counts(), homology(&diagonal, None)?);

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let p = random_point(&mut rng, &["a".to_string(), "b".to_string()], 4, 2, 5)?;
    let (flat, sums) = project_point(&p)?;
    println!("point on {}: block sums {:?}", p.path, sums.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("projected to {}, split back equal: {}", flat.path, split_point(&flat, &sums)? == p);
    Ok(())
}
