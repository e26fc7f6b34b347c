use super::search::find_homomorphism_with;
use super::HomMap;
use crate::colouring::{chi_kdipath, is_kdipath_colouring, Colouring, Mode};
use crate::error::{Error, Result};
use crate::graph::{directed_girth, Distance, OrientedGraph};

/// Both chromatic numbers around a homomorphism `g -> h`, plus the colouring of `g`
/// pulled back through the map.
#[derive(Clone, Debug)]
pub struct ChiBoundReport {
    pub chi_g: usize,
    pub chi_h: usize,
    pub hom: HomMap,
    /// `c'(v) = c(phi(v))` for an optimal colouring `c` of `h`.
    pub composed: Colouring,
    pub composed_valid: bool,
}

impl ChiBoundReport {
    pub fn holds(&self) -> bool {
        self.chi_g <= self.chi_h && self.composed_valid
    }
}

/// If `h` has directed girth at least `k + 1` and `g -> h`, then
/// `chi_k(g) <= chi_k(h)`; computes both sides and the pulled-back colouring.
pub fn check_hom_implies_chi_bound(
    g: &OrientedGraph,
    h: &OrientedGraph,
    k: usize,
    budget: u64,
) -> Result<ChiBoundReport> {
    let girth = directed_girth(h);
    if girth <= Distance::Finite(k) {
        return Err(Error::precondition(format!(
            "target girth {girth} is below k + 1 = {}",
            k + 1
        )));
    }
    let hom = find_homomorphism_with(g, h, budget)?
        .witness
        .ok_or_else(|| Error::precondition("no homomorphism from source to target"))?;
    let on_h = chi_kdipath(h, k, Mode::Exact, budget)?;
    let on_g = chi_kdipath(g, k, Mode::Exact, budget)?;
    let composed = Colouring::new(
        on_h.chi,
        (0..g.n()).map(|v| on_h.witness.colour(hom.image(v))).collect(),
    )?;
    let composed_valid = is_kdipath_colouring(g, k, &composed)?;
    Ok(ChiBoundReport {
        chi_g: on_g.chi,
        chi_h: on_h.chi,
        hom,
        composed,
        composed_valid,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{directed_cycle, directed_path, transitive_tournament};
    use crate::DEFAULT_NODE_BUDGET as B;

    #[test]
    fn path_into_tournament() {
        let r = check_hom_implies_chi_bound(&directed_path(3), &transitive_tournament(3), 2, B).unwrap();
        assert_eq!((r.chi_g, r.chi_h), (3, 3));
        assert!(r.holds());
        let same = check_hom_implies_chi_bound(&directed_cycle(5), &directed_cycle(5), 2, B).unwrap();
        assert_eq!(same.chi_g, same.chi_h);
    }

    #[test]
    fn preconditions() {
        let c3 = directed_cycle(3);
        assert!(matches!(
            check_hom_implies_chi_bound(&c3, &c3, 3, B),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            check_hom_implies_chi_bound(&c3, &transitive_tournament(3), 2, B),
            Err(Error::Precondition(_))
        ));
    }
}
