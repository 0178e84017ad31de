//! Finite posets, simplicial sets and integer homology.

pub mod homology;
pub mod poset;
pub mod snf;
pub mod sset;

pub use homology::{homology, HomologyResult};
pub use poset::{comma_poset, FinitePoset};
pub use snf::{smith_normal_form, SparseMatrix};
pub use sset::{Face, FiniteSSet, SimplicialBuilder};
