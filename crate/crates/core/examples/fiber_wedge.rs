//! The fiber of the restriction map over a graph on two vertices, with the
//! extensions g_i and h_i^±[k] and the homology of the fiber.

use en_models::graphs::FiberExtensions;
use en_models::topology::{homology, FinitePoset};
use en_models::{Caps, Variant, WeightedTournament};

fn main() -> en_models::Result<()> {
    let caps = Caps::default();
    let n = 2;
    let g = WeightedTournament::new(["b", "c"], &[("b", "c", 1)], n, Variant::Acyclic)?;
    let ext = FiberExtensions::build(&g, "a", n)?;
    for i in 0..=ext.p() {
        println!("g_{i} = {}", ext.position(i)?);
    }
    for i in 0..ext.p() {
        for k in 1..=n {
            let show = |h: Option<&WeightedTournament>| h.map_or("∅".to_string(), ToString::to_string);
            println!("h-_{i}[{k}] = {}   h+_{i}[{k}] = {}", show(ext.lower(i, k)?), show(ext.upper(i, k)?));
        }
    }

    let all = WeightedTournament::enumerate(&["a", "b", "c"], n, Variant::Acyclic, &caps)?;
    let mut fiber = Vec::new();
    for h in all {
        if h.restrict(&["b", "c"])?.leq(&g)? {
            fiber.push(h);
        }
    }
    let poset = FinitePoset::from_leq(&fiber, ToString::to_string, |x, y| x.leq(y).unwrap_or(false))?;
    println!("|ρ/g| = {}", poset.len());
    println!("{}", homology(&poset.order_complex(&caps)?, None)?);
    Ok(())
}
