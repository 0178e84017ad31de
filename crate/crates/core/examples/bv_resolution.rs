//! Trees of graphs W(𝒢_n), the retraction π and inclusion ι, and strata of
//! Fulton-MacPherson trees.

use en_models::bv::{fm_psi_stratum, FmTree, WElement};
use en_models::configurations::rational;
use en_models::{Caps, Variant, WeightedTournament};

fn main() -> en_models::Result<()> {
    let caps = Caps::default();
    let elements = WElement::enumerate(&["a", "b", "c"], 2, Variant::Acyclic, 2, &caps)?;
    println!("{} elements with at most two inner vertices", elements.len());
    let x = elements.iter().find(|x| x.inner_vertices() == 2).expect("a two-level tree");
    let g = x.pi()?;
    println!("x = {x}\nπ(x) = {g}\nι(π(x)) ≤ x: {}", WElement::iota(&g)?.leq(x)?);

    let g = WeightedTournament::new(["a", "b"], &[("a", "b", 1)], 2, Variant::Acyclic)?;
    println!("π(ι(g)) = g: {}", WElement::iota(&g)?.pi()? == g);

    let p = |x: i64, y: i64| vec![rational(x, 1), rational(y, 1)];
    let inner = FmTree::vertex(vec![(p(0, 0), FmTree::leaf("a")), (p(0, 1), FmTree::leaf("b"))]);
    let outer = FmTree::vertex(vec![(p(0, 0), FmTree::leaf("x")), (p(1, 0), FmTree::leaf("c"))]);
    let grafted = outer.graft("x", &inner);
    println!("stratum of grafted tree: {}", fm_psi_stratum(&grafted)?);
    println!("composite of strata:     {}", fm_psi_stratum(&outer)?.compose("x", &fm_psi_stratum(&inner)?)?);
    Ok(())
}
