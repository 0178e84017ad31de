//! Small worked examples with known answers, shared by the verification
//! suites, the examples and the tests.

use crate::barratt_eccles::BESimplex;
use crate::configurations::CubeConfiguration;
use crate::error::Result;
use crate::graphs::{Variant, WeightedTournament};
use crate::trees::{LabelledPlanarTree, Tree};

fn graph(vertices: &[&str], edges: &[(&str, &str, u32)], n: u32, variant: Variant) -> Result<WeightedTournament> {
    WeightedTournament::new(vertices.iter().copied(), edges, n, variant)
}

/// Four squares `a, b` over `c, d`, with their φ-graph.
pub fn phi_figure() -> Result<(CubeConfiguration, WeightedTournament)> {
    let c = CubeConfiguration::from_fractions(
        2,
        2,
        [
            ("a", vec![(-2, 2), (-2, 3)]),
            ("b", vec![(-2, 2), (3, 6)]),
            ("c", vec![(2, 6), (-2, 1)]),
            ("d", vec![(2, 6), (1, 6)]),
        ],
    )?;
    let g = graph(
        &["a", "b", "c", "d"],
        &[("a", "b", 2), ("c", "d", 2), ("a", "c", 1), ("a", "d", 1), ("b", "c", 1), ("b", "d", 1)],
        2,
        Variant::Extended,
    )?;
    Ok((c, g))
}

/// Three rectangles whose φ-graph is a cycle: `b →² a`, `c →² b`,
/// `a →¹ c`.
pub fn phi_cycle() -> Result<(CubeConfiguration, WeightedTournament)> {
    let c = CubeConfiguration::from_fractions(
        2,
        1,
        [("a", vec![(0, 1), (2, 3)]), ("b", vec![(0, 3), (1, 2)]), ("c", vec![(2, 3), (0, 1)])],
    )?;
    let g = graph(&["a", "b", "c"], &[("b", "a", 2), ("c", "b", 2), ("a", "c", 1)], 2, Variant::Extended)?;
    Ok((c, g))
}

/// A composition `c ∘_a d` where φ is strictly lax, with
/// `φ(c ∘_a d)` and `φ(c) ∘_a φ(d)`.
pub struct LaxPair {
    pub outer: CubeConfiguration,
    pub at: String,
    pub inner: CubeConfiguration,
    pub composite: WeightedTournament,
    pub composed: WeightedTournament,
}

pub fn strict_laxity() -> Result<LaxPair> {
    let outer = CubeConfiguration::from_fractions(2, 2, [("a", vec![(0, 2), (1, 2)]), ("b", vec![(1, 2), (0, 1)])])?;
    let inner = CubeConfiguration::from_fractions(2, 2, [("x", vec![(0, 1), (0, 2)]), ("y", vec![(1, 2), (0, 2)])])?;
    let composite = graph(&["b", "x", "y"], &[("x", "y", 1), ("x", "b", 1), ("b", "y", 2)], 2, Variant::Extended)?;
    let composed = graph(&["b", "x", "y"], &[("x", "y", 1), ("b", "x", 2), ("b", "y", 2)], 2, Variant::Extended)?;
    Ok(LaxPair {
        outer,
        at: "a".into(),
        inner,
        composite,
        composed,
    })
}

/// The tree `1(2(a,b), 2(c,d))` and its image under μ.
pub fn mu_square() -> Result<(LabelledPlanarTree, WeightedTournament)> {
    let t = LabelledPlanarTree::new(
        Tree::node(1, vec![Tree::corolla(2, ["a", "b"]), Tree::corolla(2, ["c", "d"])]),
        2,
    )?;
    let g = graph(
        &["a", "b", "c", "d"],
        &[("a", "b", 2), ("c", "d", 2), ("a", "c", 1), ("a", "d", 1), ("b", "c", 1), ("b", "d", 1)],
        2,
        Variant::Acyclic,
    )?;
    Ok((t, g))
}

/// Orders `ab, ab, ba, ab`: the pair switches twice, so its weight is 3.
pub fn be_weight_example() -> Result<(BESimplex, WeightedTournament)> {
    let x = BESimplex::parse("ab,ab,ba,ab")?;
    let g = graph(&["a", "b"], &[("a", "b", 3)], 3, Variant::Acyclic)?;
    Ok((x, g))
}

/// `g = a →¹ b →² c` with `a →² c` and a six-element poset of proper graphs
/// claimed to be the slice below it, top row first, covers as
/// `(lower, upper)`. `elements[1]` reverses `b →² c` at equal weight, so it
/// is not below `g`.
pub struct ProperSlice {
    pub g: WeightedTournament,
    pub elements: Vec<WeightedTournament>,
    pub covers: Vec<(usize, usize)>,
}

pub fn proper_slice_below() -> Result<ProperSlice> {
    let v = ["a", "b", "c"];
    let acyclic = |e: &[(&str, &str, u32)]| graph(&v, e, 2, Variant::Acyclic);
    let g = acyclic(&[("a", "b", 1), ("b", "c", 2), ("a", "c", 2)])?;
    let elements = vec![
        acyclic(&[("a", "b", 1), ("b", "c", 2), ("a", "c", 1)])?,
        acyclic(&[("a", "c", 1), ("c", "b", 2), ("a", "b", 1)])?,
        acyclic(&[("a", "c", 2), ("c", "b", 1), ("a", "b", 1)])?,
        acyclic(&[("a", "b", 1), ("b", "c", 1), ("a", "c", 1)])?,
        acyclic(&[("a", "c", 1), ("c", "b", 1), ("a", "b", 1)])?,
        acyclic(&[("c", "a", 1), ("a", "b", 1), ("c", "b", 1)])?,
    ];
    let covers = vec![(3, 0), (3, 1), (4, 1), (4, 0), (4, 2), (5, 2)];
    Ok(ProperSlice { g, elements, covers })
}

/// `g′ = a →² b →¹ c` with `a →² c`; exactly two incomparable proper
/// graphs lie above it.
pub fn proper_slice_above() -> Result<(WeightedTournament, Vec<WeightedTournament>)> {
    let v = ["a", "b", "c"];
    let acyclic = |e: &[(&str, &str, u32)]| graph(&v, e, 2, Variant::Acyclic);
    let g = acyclic(&[("a", "b", 2), ("b", "c", 1), ("a", "c", 2)])?;
    let above = vec![
        acyclic(&[("a", "b", 2), ("b", "c", 2), ("a", "c", 2)])?,
        acyclic(&[("a", "c", 2), ("c", "b", 2), ("a", "b", 2)])?,
    ];
    Ok((g, above))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        let (c, g) = phi_figure().unwrap();
        assert_eq!(c.phi().unwrap(), g);
        let (c, g) = phi_cycle().unwrap();
        assert_eq!(c.phi().unwrap(), g);
        let lax = strict_laxity().unwrap();
        assert_eq!(lax.outer.compose(&lax.at, &lax.inner).unwrap().phi().unwrap(), lax.composite);
        let (t, g) = mu_square().unwrap();
        assert_eq!(t.mu().unwrap(), g);
        let (x, g) = be_weight_example().unwrap();
        assert_eq!(x.gamma(3).unwrap(), g);
        let slice = proper_slice_below().unwrap();
        assert!(slice.elements.iter().all(|h| h.is_proper().unwrap()));
        let below: Vec<bool> = slice.elements.iter().map(|h| h.leq(&slice.g).unwrap()).collect();
        assert_eq!(below, [true, false, true, true, true, true]);
        for &(lo, hi) in &slice.covers {
            assert!(slice.elements[lo].leq(&slice.elements[hi]).unwrap());
        }
        let (g, above) = proper_slice_above().unwrap();
        assert!(above.iter().all(|h| g.leq(h).unwrap() && h.is_proper().unwrap()));
    }
}
