//! Point and cube configurations and the maps ψ and φ into graphs.

use en_models::configurations::{rational, CubeConfiguration, PointConfiguration};
use en_models::fixtures;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> en_models::Result<()> {
    let x = PointConfiguration::from_ints(2, [("a", vec![0, 0]), ("b", vec![0, 1]), ("c", vec![1, -1])])?;
    println!("ψ(x) = {}", x.psi()?);
    let moved = x.affine(&rational(3, 2), &[rational(1, 1), rational(-2, 3)])?;
    println!("ψ after an affine map = {}", moved.psi()?);

    let (c, _) = fixtures::phi_figure()?;
    println!("φ(four squares) = {}", c.phi()?);
    let (c, _) = fixtures::phi_cycle()?;
    let g = c.phi()?;
    println!("φ(three rectangles) = {g}  acyclic: {}", g.is_acyclic());

    let lax = fixtures::strict_laxity()?;
    let composite = lax.outer.compose(&lax.at, &lax.inner)?;
    println!("φ(c ∘ d)     = {}", composite.phi()?);
    println!("φ(c) ∘ φ(d)  = {}", lax.outer.phi()?.compose(&lax.at, &lax.inner.phi()?)?);

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let labels = vec!["p".to_string(), "q".to_string(), "r".to_string()];
    let random = CubeConfiguration::random(&mut rng, &labels, 2, 4)?;
    println!("random: {}", serde_json::to_string(&random)?);
    println!("  φ = {}, ψ(centers) = {}", random.phi()?, random.centers()?.psi()?);
    Ok(())
}
