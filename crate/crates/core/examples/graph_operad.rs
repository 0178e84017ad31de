//! Weighted tournaments: building, ordering, composing and counting.

use en_models::{Caps, Variant, WeightedTournament};

fn main() -> en_models::Result<()> {
    let g = WeightedTournament::new(["x", "y"], &[("x", "y", 2)], 2, Variant::Acyclic)?;
    let h = WeightedTournament::new(["a", "b"], &[("b", "a", 1)], 2, Variant::Acyclic)?;
    let gh = g.compose("x", &h)?;
    println!("g = {g}");
    println!("h = {h}");
    println!("g ∘_x h = {gh}");
    println!("order: {:?}", gh.underlying_order()?);

    let lower = WeightedTournament::new(["x", "y"], &[("y", "x", 1)], 2, Variant::Acyclic)?;
    println!("{lower} ≤ {g}: {}", lower.leq(&g)?);

    let caps = Caps::default();
    for k in 1..=4 {
        let vs: Vec<String> = (0..k).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        let acyclic = WeightedTournament::enumerate(&vs, 2, Variant::Acyclic, &caps)?.len();
        let extended = WeightedTournament::enumerate(&vs, 2, Variant::Extended, &caps)?.len();
        println!("|A| = {k}: {acyclic} acyclic, {extended} extended");
    }
    println!("{}", gh.to_dot());
    Ok(())
}
