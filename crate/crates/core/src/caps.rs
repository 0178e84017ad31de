//! Enumeration budgets. Every exhaustive search in the crate checks one of
//! these limits up front and fails with [`Error::BudgetExceeded`] instead of
//! running unbounded.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest vertex set accepted by graph and tree enumeration.
    pub max_vertices: usize,
    /// Largest weight (or label) bound accepted by enumeration.
    pub max_weight: u32,
    /// Vertex bound for the coordinate-pattern oracle.
    pub pattern_vertices: usize,
    /// Weight bound for the coordinate-pattern oracle.
    pub pattern_weight: u32,
    /// Total simplex budget for a finite simplicial set.
    pub max_simplices: usize,
    /// Longest lattice path string produced by enumeration.
    pub max_path_len: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_vertices: 5,
            max_weight: 4,
            pattern_vertices: 4,
            pattern_weight: 2,
            max_simplices: 200_000,
            max_path_len: 24,
        }
    }
}

impl Caps {
    pub fn check_vertices(&self, k: usize) -> Result<()> {
        if k > self.max_vertices {
            return Err(Error::BudgetExceeded {
                what: format!("vertex set of size {k}"),
                limit: self.max_vertices,
            });
        }
        Ok(())
    }

    pub fn check_weight(&self, n: u32) -> Result<()> {
        if n > self.max_weight {
            return Err(Error::BudgetExceeded {
                what: format!("weight bound {n}"),
                limit: self.max_weight as usize,
            });
        }
        Ok(())
    }

    pub fn check_simplices(&self, count: usize) -> Result<()> {
        if count > self.max_simplices {
            return Err(Error::BudgetExceeded {
                what: format!("{count} simplices"),
                limit: self.max_simplices,
            });
        }
        Ok(())
    }

    /// Parses `k=v,k=v` overrides as accepted by the command line.
    pub fn with_overrides(mut self, overrides: &str) -> Result<Caps> {
        for part in overrides.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{part}`")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad cap value in `{part}`")))?;
            match key.trim() {
                "vertices" | "max_vertices" => self.max_vertices = value,
                "weight" | "max_weight" | "n" => self.max_weight = value as u32,
                "pattern_vertices" => self.pattern_vertices = value,
                "pattern_weight" => self.pattern_weight = value as u32,
                "simplices" | "max_simplices" => self.max_simplices = value,
                "path_len" | "max_path_len" => self.max_path_len = value,
                other => return Err(Error::Parse(format!("unknown cap `{other}`"))),
            }
        }
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_parse() {
        let caps = Caps::default().with_overrides("vertices=6, n=3").unwrap();
        assert_eq!(caps.max_vertices, 6);
        assert_eq!(caps.max_weight, 3);
        assert!(Caps::default().with_overrides("bogus=1").is_err());
        assert!(Caps::default().check_vertices(6).is_err());
    }
}
