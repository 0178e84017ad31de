//! Reducing a non-uniform cycle of an extended graph to the family g_U.

use en_models::{Variant, WeightedTournament};

fn main() -> en_models::Result<()> {
    let g = WeightedTournament::new(
        ["a", "b", "c"],
        &[("a", "b", 2), ("b", "c", 2), ("c", "a", 1)],
        2,
        Variant::Extended,
    )?;
    let reduction = g.reduce_cycle_family()?;
    println!("g = {g}");
    println!("cycle {:?}, measure {:?}", reduction.cycle, reduction.measure);
    for (subset, h) in &reduction.family {
        println!("  U = {subset:?}: {h}  (below g: {}, acyclic: {})", h.leq(&g)?, h.is_acyclic());
    }
    Ok(())
}
