//! Homomorphisms between oriented graphs: search, cores, isomorphism and
//! oriented colouring.

mod bounds;
mod core;
mod iso;
mod oriented;
mod search;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::OrientedGraph;

pub use bounds::{check_hom_implies_chi_bound, ChiBoundReport};
pub use self::core::{core_of, homomorphically_equivalent, Core};
pub use iso::{are_isomorphic, find_isomorphism};
pub use oriented::{
    brute_force_oriented_colourable, oriented_chromatic_number, tournaments_up_to_iso,
    OrientedColouring, MAX_TOURNAMENT_ORDER,
};
pub use search::{find_homomorphism, find_homomorphism_with, hom_to_transitive_tournament, SearchStats};

/// A vertex map `V(G) -> V(H)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomMap {
    pub map: Vec<usize>,
}

impl HomMap {
    pub fn new(map: Vec<usize>) -> Self {
        HomMap { map }
    }

    pub fn image(&self, v: usize) -> usize {
        self.map[v]
    }

    /// Checks totality, range and arc preservation.
    pub fn validate(&self, g: &OrientedGraph, h: &OrientedGraph) -> Result<()> {
        if self.map.len() != g.n() {
            return Err(Error::input(format!(
                "map covers {} vertices, source has {}",
                self.map.len(),
                g.n()
            )));
        }
        if let Some(&bad) = self.map.iter().find(|&&x| x >= h.n()) {
            return Err(Error::input(format!("image {bad} outside target 0..{}", h.n())));
        }
        for (u, v) in g.arcs() {
            if !h.has_arc(self.map[u], self.map[v]) {
                return Err(Error::input(format!(
                    "arc ({u},{v}) maps to non-arc ({},{})",
                    self.map[u], self.map[v]
                )));
            }
        }
        Ok(())
    }

    pub fn is_homomorphism(&self, g: &OrientedGraph, h: &OrientedGraph) -> bool {
        self.validate(g, h).is_ok()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &HomMap) -> HomMap {
        HomMap::new(self.map.iter().map(|&x| other.map[x]).collect())
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("map json")
    }
}

/// Outcome of a complete search: a witness, or proof by exhaustion that none exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomResult {
    pub witness: Option<HomMap>,
    pub stats: SearchStats,
}

impl HomResult {
    pub fn exists(&self) -> bool {
        self.witness.is_some()
    }
}
