//! Backtracking homomorphism search maintaining arc consistency.

use super::{HomMap, HomResult};
use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;
use crate::graph::metrics::path_levels;
use crate::DEFAULT_NODE_BUDGET;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Value assignments tried.
    pub nodes: u64,
    /// Branches closed by an emptied domain.
    pub prunes: u64,
}

struct Search<'a> {
    g: &'a OrientedGraph,
    h: &'a OrientedGraph,
    order: Vec<usize>,
    budget: u64,
    stats: SearchStats,
}

impl Search<'_> {
    /// Arc consistency from the vertices in `queue`. Every arc `u -> v` of `g` needs
    /// `D(v) ⊆ N+(D(u))` and `D(u) ⊆ N-(D(v))`. Returns false on a wipeout.
    fn propagate(&self, domains: &mut [BitSet], mut queue: Vec<usize>) -> bool {
        let mut queued = vec![false; self.g.n()];
        for &x in &queue {
            queued[x] = true;
        }
        let mut support = BitSet::new(self.h.n());
        while let Some(x) = queue.pop() {
            queued[x] = false;
            for forward in [true, false] {
                let nbrs = if forward {
                    self.g.out_neighbours(x)
                } else {
                    self.g.in_neighbours(x)
                };
                if nbrs.is_empty() {
                    continue;
                }
                support.clear();
                for a in domains[x].iter() {
                    support.union_with(if forward {
                        self.h.out_row(a)
                    } else {
                        self.h.in_row(a)
                    });
                }
                for &y in nbrs {
                    let before = domains[y].count();
                    domains[y].intersect_with(&support);
                    let after = domains[y].count();
                    if after == 0 {
                        return false;
                    }
                    if after < before && !queued[y] {
                        queued[y] = true;
                        queue.push(y);
                    }
                }
            }
        }
        true
    }

    fn solve(&mut self, domains: Vec<BitSet>) -> std::result::Result<Option<Vec<BitSet>>, ()> {
        let Some(&var) = self.order.iter().find(|&&v| domains[v].count() > 1) else {
            return Ok(Some(domains));
        };
        let values: Vec<usize> = domains[var].iter().collect();
        for a in values {
            self.stats.nodes += 1;
            if self.stats.nodes > self.budget {
                return Err(());
            }
            let mut next = domains.clone();
            next[var].clear();
            next[var].insert(a);
            if !self.propagate(&mut next, vec![var]) {
                self.stats.prunes += 1;
                continue;
            }
            if let Some(sol) = self.solve(next)? {
                return Ok(Some(sol));
            }
        }
        Ok(None)
    }
}

/// [`find_homomorphism_with`] under the default node budget.
pub fn find_homomorphism(g: &OrientedGraph, h: &OrientedGraph) -> Result<HomResult> {
    find_homomorphism_with(g, h, DEFAULT_NODE_BUDGET)
}

/// Complete search for a homomorphism `g -> h`.
///
/// Domains start as all target vertices (restricted to vertices with out- or
/// in-arcs where needed) and are kept arc consistent. Variables are branched on in
/// a fixed order: highest degree first, ties by lower id; values ascend.
pub fn find_homomorphism_with(g: &OrientedGraph, h: &OrientedGraph, budget: u64) -> Result<HomResult> {
    let stats = SearchStats::default();
    if g.n() == 0 {
        return Ok(HomResult {
            witness: Some(HomMap::new(Vec::new())),
            stats,
        });
    }
    if h.n() == 0 {
        return Ok(HomResult { witness: None, stats });
    }
    let has_out: Vec<usize> = (0..h.n()).filter(|&a| h.out_degree(a) > 0).collect();
    let has_in: Vec<usize> = (0..h.n()).filter(|&a| h.in_degree(a) > 0).collect();
    let mut domains = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let mut d = BitSet::full(h.n());
        if g.out_degree(v) > 0 {
            let mut m = BitSet::new(h.n());
            has_out.iter().for_each(|&a| m.insert(a));
            d.intersect_with(&m);
        }
        if g.in_degree(v) > 0 {
            let mut m = BitSet::new(h.n());
            has_in.iter().for_each(|&a| m.insert(a));
            d.intersect_with(&m);
        }
        domains.push(d);
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut search = Search {
        g,
        h,
        order,
        budget,
        stats,
    };
    if domains.iter().any(BitSet::is_empty)
        || !search.propagate(&mut domains, (0..g.n()).collect())
    {
        search.stats.prunes += 1;
        return Ok(HomResult {
            witness: None,
            stats: search.stats,
        });
    }
    match search.solve(domains) {
        Ok(Some(sol)) => {
            let map = HomMap::new(sol.iter().map(|d| d.first().unwrap()).collect());
            map.validate(g, h)?;
            Ok(HomResult {
                witness: Some(map),
                stats: search.stats,
            })
        }
        Ok(None) => Ok(HomResult {
            witness: None,
            stats: search.stats,
        }),
        Err(()) => Err(Error::Budget {
            budget,
            detail: format!(
                "homomorphism search stopped after {} nodes, {} prunes",
                search.stats.nodes, search.stats.prunes
            ),
        }),
    }
}

/// Polynomial decision of `g -> T_t`: `g` must be acyclic with no directed path on
/// `t + 1` vertices. The witness sends each vertex to (vertices on a longest path
/// ending there) - 1.
pub fn hom_to_transitive_tournament(g: &OrientedGraph, t: usize) -> HomResult {
    let witness = path_levels(g).and_then(|levels| {
        levels
            .iter()
            .all(|&l| l <= t)
            .then(|| HomMap::new(levels.iter().map(|l| l - 1).collect()))
    });
    HomResult {
        witness,
        stats: SearchStats::default(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_oriented_graphs, directed_cycle, directed_path, transitive_tournament};

    fn exists(g: &OrientedGraph, h: &OrientedGraph) -> bool {
        find_homomorphism(g, h).unwrap().exists()
    }

    /// Tries every map `V(g) -> V(h)`.
    fn brute_exists(g: &OrientedGraph, h: &OrientedGraph) -> bool {
        let n = g.n();
        if n == 0 {
            return true;
        }
        if h.n() == 0 {
            return false;
        }
        let mut map = vec![0; n];
        loop {
            if g.arcs().all(|(u, v)| h.has_arc(map[u], map[v])) {
                return true;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return false;
                }
                map[i] += 1;
                if map[i] < h.n() {
                    break;
                }
                map[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn examples() {
        for t in 1..6 {
            assert!(!exists(&directed_cycle(3), &transitive_tournament(t)));
        }
        assert!(exists(&directed_path(3), &transitive_tournament(3)));
        assert!(!exists(&directed_path(4), &transitive_tournament(3)));
        assert!(exists(&directed_cycle(6), &directed_cycle(3)));
        assert!(!exists(&directed_cycle(4), &directed_cycle(3)));
    }

    #[test]
    fn agrees_with_brute_force_up_to_four_vertices() {
        let small: Vec<OrientedGraph> = (1..=3).flat_map(all_oriented_graphs).collect();
        let sources: Vec<OrientedGraph> = (1..=4).flat_map(all_oriented_graphs).collect();
        // all sources on <= 4 vertices against all targets on <= 3, plus 4-vertex targets
        // for a slice of sources
        for g in &sources {
            for h in &small {
                let r = find_homomorphism(g, h).unwrap();
                assert_eq!(r.exists(), brute_exists(g, h), "{g} -> {h}");
                if let Some(m) = &r.witness {
                    assert!(m.is_homomorphism(g, h));
                }
            }
        }
        let four: Vec<OrientedGraph> = all_oriented_graphs(4).collect();
        for (i, g) in sources.iter().enumerate().step_by(7) {
            for h in four.iter().skip(i % 5).step_by(11) {
                assert_eq!(exists(g, h), brute_exists(g, h), "{g} -> {h}");
            }
        }
    }

    #[test]
    fn transitive_tournament_decision() {
        let t4 = transitive_tournament(4);
        assert!(hom_to_transitive_tournament(&t4, 4).exists());
        assert!(!hom_to_transitive_tournament(&t4, 3).exists());
        assert!(!hom_to_transitive_tournament(&directed_path(5), 4).exists());
        assert!(!hom_to_transitive_tournament(&directed_cycle(3), 10).exists());
        let w = hom_to_transitive_tournament(&directed_path(3), 5).witness.unwrap();
        assert!(w.is_homomorphism(&directed_path(3), &transitive_tournament(5)));
    }

    #[test]
    fn budget_is_enforced() {
        // C_7 into C_5 has no homomorphism; one node cannot prove that
        let r = find_homomorphism_with(&directed_cycle(7), &directed_cycle(5), 1);
        assert!(matches!(r, Err(Error::Budget { .. })));
    }
}
