//! k-dipath colourings: validity, chromatic numbers and colouring matrices.

mod brute;
mod exact;
mod matrix;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{dipath_conflict_graph, directed_girth, power_graph, Distance, OrientedGraph, SimpleGraph};

pub use brute::{
    brute_force_chi_kdipath, brute_force_colourable, for_each_kdipath_colouring, BRUTE_FORCE_MAX_N,
};
pub use exact::{chi_kdipath, colour_graph, colourable_graph, kdipath_colourable, greedy_clique, Mode};
pub use matrix::{colouring_matrix, consistent_column_patterns, ColouringMatrix};

/// A total map from vertex ids to colours `1..=t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ColouringJson", into = "ColouringJson")]
pub struct Colouring {
    t: usize,
    colours: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct ColouringJson {
    t: usize,
    colours: Vec<usize>,
}

impl TryFrom<ColouringJson> for Colouring {
    type Error = Error;
    fn try_from(j: ColouringJson) -> Result<Self> {
        Colouring::new(j.t, j.colours)
    }
}

impl From<Colouring> for ColouringJson {
    fn from(c: Colouring) -> Self {
        ColouringJson {
            t: c.t,
            colours: c.colours,
        }
    }
}

impl Colouring {
    pub fn new(t: usize, colours: Vec<usize>) -> Result<Self> {
        if let Some((v, &c)) = colours.iter().enumerate().find(|(_, &c)| c == 0 || c > t) {
            return Err(Error::input(format!(
                "vertex {v} has colour {c}, outside 1..={t}"
            )));
        }
        Ok(Colouring { t, colours })
    }

    /// Builds from 0-based colour indices, as produced by the solvers.
    pub(crate) fn from_zero_based(t: usize, colours: &[usize]) -> Self {
        Colouring {
            t,
            colours: colours.iter().map(|c| c + 1).collect(),
        }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    pub fn colour(&self, v: usize) -> usize {
        self.colours[v]
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    /// Colours renumbered by first appearance in vertex-id order; `t` becomes the
    /// number of colours actually used.
    pub fn normalized(&self) -> Colouring {
        let mut map = vec![0usize; self.t + 1];
        let mut next = 0;
        let colours = self
            .colours
            .iter()
            .map(|&c| {
                if map[c] == 0 {
                    next += 1;
                    map[c] = next;
                }
                map[c]
            })
            .collect();
        Colouring {
            t: next.max(1),
            colours,
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("colouring json")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    fn check_total(&self, g: &OrientedGraph) -> Result<()> {
        if self.colours.len() != g.n() {
            return Err(Error::input(format!(
                "colouring covers {} vertices, graph has {}",
                self.colours.len(),
                g.n()
            )));
        }
        Ok(())
    }
}

/// Whether `c` is a proper colouring of `conflicts`.
pub fn is_proper(conflicts: &SimpleGraph, colours: &[usize]) -> bool {
    conflicts.edges().all(|(u, v)| colours[u] != colours[v])
}

/// The k-dipath conflict graph: `G^k` when the girth is at least `k + 1`,
/// otherwise the explicit path enumeration.
pub fn conflict_graph(g: &OrientedGraph, k: usize) -> SimpleGraph {
    if directed_girth(g) > Distance::Finite(k) {
        power_graph(g, k)
    } else {
        dipath_conflict_graph(g, k)
    }
}

/// Whether `c` is a k-dipath colouring of `g`.
pub fn is_kdipath_colouring(g: &OrientedGraph, k: usize, c: &Colouring) -> Result<bool> {
    check_k(k)?;
    c.check_total(g)?;
    Ok(is_proper(&conflict_graph(g, k), c.colours()))
}

/// Validity checked against explicitly enumerated directed paths of length `<= k`.
pub fn is_kdipath_colouring_by_paths(g: &OrientedGraph, k: usize, c: &Colouring) -> Result<bool> {
    check_k(k)?;
    c.check_total(g)?;
    Ok(is_proper(&dipath_conflict_graph(g, k), c.colours()))
}

pub(crate) fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::input("k must be positive"))
    } else {
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exact,
    UpperBound,
}

/// A chromatic number with a witness colouring using exactly `chi` colours.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticResult {
    pub chi: usize,
    pub witness: Colouring,
    pub method: Method,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{directed_cycle, transitive_tournament};

    fn col(t: usize, c: &[usize]) -> Colouring {
        Colouring::new(t, c.to_vec()).unwrap()
    }

    #[test]
    fn validity_examples() {
        let t3 = transitive_tournament(3);
        assert!(is_kdipath_colouring(&t3, 3, &col(3, &[1, 2, 3])).unwrap());
        assert!(!is_kdipath_colouring(&t3, 2, &col(2, &[1, 2, 1])).unwrap());
        let c4 = directed_cycle(4);
        assert!(!is_kdipath_colouring(&c4, 3, &col(3, &[1, 2, 3, 2])).unwrap());
        assert!(!is_kdipath_colouring_by_paths(&c4, 3, &col(3, &[1, 2, 3, 2])).unwrap());
    }

    #[test]
    fn rejects_bad_colourings() {
        assert!(matches!(Colouring::new(2, vec![1, 3]), Err(Error::Input(_))));
        assert!(matches!(Colouring::new(2, vec![0]), Err(Error::Input(_))));
        let partial = col(2, &[1, 2]);
        assert!(matches!(
            is_kdipath_colouring(&transitive_tournament(3), 2, &partial),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn normalization_and_json() {
        let c = col(5, &[4, 4, 2, 5]).normalized();
        assert_eq!(c.colours(), &[1, 1, 2, 3]);
        assert_eq!(c.t(), 3);
        let s = c.to_json_string();
        assert_eq!(s, r#"{"t":3,"colours":[1,1,2,3]}"#);
        assert_eq!(Colouring::from_json_str(&s).unwrap(), c);
        assert!(Colouring::from_json_str(r#"{"t":2,"colours":[3]}"#).is_err());
    }
}
