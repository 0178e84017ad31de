//! Proper graphs: those realized by ψ of some point configuration.

use en_models::configurations::{proper_witness, psi_fiber_nonempty};
use en_models::{Caps, Variant, WeightedTournament};

fn main() -> en_models::Result<()> {
    let caps = Caps::default();
    let all = WeightedTournament::enumerate(&["a", "b", "c"], 2, Variant::Acyclic, &caps)?;
    let mut proper = 0;
    let mut improper = Vec::new();
    for g in &all {
        let criterion = g.is_proper()?;
        assert_eq!(criterion, psi_fiber_nonempty(g, 2, &caps)?);
        if criterion {
            proper += 1;
            let x = proper_witness(g)?;
            assert_eq!(x.psi()?, *g);
        } else {
            improper.push(g);
        }
    }
    println!("{proper} of {} graphs in 𝒢₂(3) are proper", all.len());
    for g in improper.iter().take(3) {
        println!("  not proper: {g}");
    }
    let g = &all[0];
    println!("witness for {g}: {}", serde_json::to_string(&proper_witness(g)?)?);
    Ok(())
}
