//! Integer homology of order complexes of finite posets.

use en_models::topology::{homology, FinitePoset};
use en_models::Caps;

fn main() -> en_models::Result<()> {
    let caps = Caps::default();
    let ids = |k: usize| (0..k).map(|i| i.to_string()).collect::<Vec<_>>();

    // two minima below two maxima: a circle
    let circle = FinitePoset::from_relations(ids(4), &[(0, 2), (0, 3), (1, 2), (1, 3)])?;
    println!("circle: {}", homology(&circle.order_complex(&caps)?, None)?);

    // three such layers: a 2-sphere
    let sphere = FinitePoset::from_relations(
        ids(6),
        &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (2, 5), (3, 4), (3, 5)],
    )?;
    println!("2-sphere: {}", homology(&sphere.order_complex(&caps)?, None)?);

    let cone = FinitePoset::from_relations(ids(3), &[(0, 2), (1, 2)])?;
    println!("cone ({}): {}", cone.is_cone(), homology(&cone.order_complex(&caps)?, None)?);
    let points = FinitePoset::from_relations(ids(3), &[])?;
    println!("three points: {}", homology(&points.order_complex(&caps)?, None)?);
    Ok(())
}
