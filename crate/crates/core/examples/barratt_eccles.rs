//! Simplices of the Barratt-Eccles operad, their weights and the filtration Γ_n.

use en_models::barratt_eccles::{enumerate_gamma, BESimplex};
use en_models::topology::homology;
use en_models::{Caps, Variant, WeightedTournament};

fn main() -> en_models::Result<()> {
    let caps = Caps::default();
    let x = BESimplex::parse("ab,ab,ba,ab")?;
    println!("x = {x}, dim {}, weight(a,b) = {}", x.dim(), x.weight("a", "b")?);
    println!("γ(x) = {}", x.gamma(3)?);
    println!("d_2 x = {}", x.face(2)?);

    for n in 1..=3 {
        let (complex, _) = enumerate_gamma(&["a", "b"], n, None, &caps)?;
        println!("Γ_{n}(a,b): counts {:?}, {}", complex.counts(), homology(&complex, None)?);
    }

    let g = WeightedTournament::new(["a", "b", "c"], &[("a", "b", 2), ("b", "c", 1), ("a", "c", 1)], 2, Variant::Acyclic)?;
    let (complex, simplices) = enumerate_gamma(&["a", "b", "c"], 2, Some(&g), &caps)?;
    println!("Γ_g for g = {g}: counts {:?}, {}", complex.counts(), homology(&complex, None)?);
    let s = &simplices[0][0];
    println!("σ({s}) = {}", s.sigma(&g)?);
    Ok(())
}
