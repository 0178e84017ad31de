pub mod barratt_eccles;
pub mod bv;
pub mod caps;
pub mod configurations;
pub mod error;
pub mod fixtures;
pub mod graphs;
pub mod lattice_paths;
pub mod suites;
pub mod topology;
pub mod trees;
pub mod vertex;

pub use caps::Caps;
pub use error::{Error, Result};
pub use graphs::{Variant, WeightedTournament};
