//! DSATUR branch and bound over the k-dipath conflict graph.

use super::{check_k, conflict_graph, ChromaticResult, Colouring, Method};
use crate::error::{Error, Result};
use crate::graph::{OrientedGraph, SimpleGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Greedy,
}

/// Greedy clique: from each start vertex, add candidates in descending degree order.
/// Returns the largest clique found.
pub fn greedy_clique(g: &SimpleGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut best = Vec::new();
    for &start in &order {
        if g.degree(start) < best.len() {
            break;
        }
        let mut clique = vec![start];
        for &v in &order {
            if v != start && clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

struct Dsatur<'a> {
    g: &'a SimpleGraph,
    colour: Vec<usize>,
    // neighbour_colours[v][c]: coloured neighbours of v using colour c
    neighbour_colours: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    coloured: usize,
    nodes: u64,
    budget: u64,
    best: usize,
    best_colouring: Option<Vec<usize>>,
    stop_at: usize,
}

const NONE: usize = usize::MAX;

impl<'a> Dsatur<'a> {
    fn new(g: &'a SimpleGraph, max_colours: usize, budget: u64) -> Self {
        Dsatur {
            g,
            colour: vec![NONE; g.n()],
            neighbour_colours: vec![vec![0; max_colours + 1]; g.n()],
            saturation: vec![0; g.n()],
            coloured: 0,
            nodes: 0,
            budget,
            best: max_colours + 1,
            best_colouring: None,
            stop_at: 0,
        }
    }

    fn pick(&self) -> usize {
        let mut best = NONE;
        let mut key = (0, 0);
        for v in 0..self.g.n() {
            if self.colour[v] != NONE {
                continue;
            }
            let k = (self.saturation[v], self.g.degree(v));
            if best == NONE || k > key {
                best = v;
                key = k;
            }
        }
        best
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colour[v] = c;
        self.coloured += 1;
        for &u in self.g.neighbours(v) {
            let slot = &mut self.neighbour_colours[u][c];
            if *slot == 0 {
                self.saturation[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colour[v];
        self.colour[v] = NONE;
        self.coloured -= 1;
        for &u in self.g.neighbours(v) {
            let slot = &mut self.neighbour_colours[u][c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    /// Returns `Err` when the node budget is exhausted. `used` colours are `0..used`.
    fn search(&mut self, used: usize) -> std::result::Result<(), ()> {
        if self.best <= self.stop_at {
            return Ok(());
        }
        if self.coloured == self.g.n() {
            self.best = used;
            self.best_colouring = Some(self.colour.clone());
            return Ok(());
        }
        let v = self.pick();
        let limit = (used + 1).min(self.best - 1);
        for c in 0..limit {
            if self.neighbour_colours[v][c] != 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(());
            }
            self.assign(v, c);
            let r = self.search(used.max(c + 1));
            self.unassign(v);
            r?;
            if self.best <= self.stop_at {
                break;
            }
        }
        Ok(())
    }
}

/// DSATUR without backtracking: an upper bound.
fn dsatur_greedy(g: &SimpleGraph) -> Vec<usize> {
    let mut s = Dsatur::new(g, g.n().max(1), u64::MAX);
    let mut used = 0;
    while s.coloured < g.n() {
        let v = s.pick();
        let c = (0..).find(|&c| c >= used || s.neighbour_colours[v][c] == 0).unwrap();
        s.assign(v, c);
        used = used.max(c + 1);
    }
    s.colour
}

fn count_colours(colours: &[usize]) -> usize {
    colours.iter().copied().max().map_or(0, |m| m + 1)
}

/// Exact chromatic number of a simple graph with a 0-based witness.
pub fn colour_graph(g: &SimpleGraph, budget: u64) -> Result<(usize, Vec<usize>)> {
    if g.n() == 0 {
        return Ok((0, Vec::new()));
    }
    let greedy = dsatur_greedy(g);
    let upper = count_colours(&greedy);
    let lower = greedy_clique(g).len();
    if lower == upper {
        return Ok((upper, greedy));
    }
    let mut s = Dsatur::new(g, upper, budget);
    s.best = upper;
    s.best_colouring = Some(greedy);
    s.stop_at = lower;
    match s.search(0) {
        Ok(()) => Ok((s.best, s.best_colouring.unwrap())),
        Err(()) => Err(Error::Budget {
            budget,
            detail: format!("best bounds found: {} <= chi <= {}", lower, s.best),
        }),
    }
}

/// A proper colouring with at most `t` colours, if one exists.
pub fn colourable_graph(g: &SimpleGraph, t: usize, budget: u64) -> Result<Option<Vec<usize>>> {
    if g.n() == 0 {
        return Ok(Some(Vec::new()));
    }
    let greedy = dsatur_greedy(g);
    if count_colours(&greedy) <= t {
        return Ok(Some(greedy));
    }
    if greedy_clique(g).len() > t {
        return Ok(None);
    }
    let mut s = Dsatur::new(g, t, budget);
    s.stop_at = t;
    match s.search(0) {
        Ok(()) => Ok(s.best_colouring),
        Err(()) => Err(Error::Budget {
            budget,
            detail: format!("undecided whether {t} colours suffice"),
        }),
    }
}

/// k-dipath chromatic number of `g`.
///
/// Exact mode runs DSATUR branch and bound on the conflict graph, bounded below by a
/// greedy clique; greedy mode returns the DSATUR upper bound. The witness is
/// normalized by first appearance.
pub fn chi_kdipath(g: &OrientedGraph, k: usize, mode: Mode, budget: u64) -> Result<ChromaticResult> {
    check_k(k)?;
    let conflicts = conflict_graph(g, k);
    let (chi, colours, method) = match mode {
        Mode::Exact => {
            let (chi, colours) = colour_graph(&conflicts, budget)?;
            (chi, colours, Method::Exact)
        }
        Mode::Greedy => {
            let colours = dsatur_greedy(&conflicts);
            (count_colours(&colours), colours, Method::UpperBound)
        }
    };
    let chi = chi.max(1);
    let witness = Colouring::from_zero_based(chi, &colours).normalized();
    Ok(ChromaticResult {
        chi,
        witness: Colouring::new(chi, witness.colours().to_vec())?,
        method,
    })
}

/// Decides whether `g` has a k-dipath `t`-colouring, returning one if so.
pub fn kdipath_colourable(g: &OrientedGraph, k: usize, t: usize, budget: u64) -> Result<Option<Colouring>> {
    check_k(k)?;
    let conflicts = conflict_graph(g, k);
    Ok(colourable_graph(&conflicts, t, budget)?
        .map(|c| Colouring::from_zero_based(t.max(1), &c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::is_kdipath_colouring;
    use crate::graph::{directed_cycle, directed_path, transitive_tournament};
    use crate::DEFAULT_NODE_BUDGET;

    fn exact(g: &OrientedGraph, k: usize) -> usize {
        chi_kdipath(g, k, Mode::Exact, DEFAULT_NODE_BUDGET).unwrap().chi
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(exact(&transitive_tournament(4), 4), 4);
        assert_eq!(exact(&directed_path(4), 4), 4);
        assert_eq!(exact(&directed_path(4), 1), 2);
        assert_eq!(exact(&directed_cycle(3), 2), 3);
        // C5 with k = 1 is an odd cycle.
        assert_eq!(exact(&directed_cycle(5), 1), 3);
    }

    #[test]
    fn witness_is_valid_and_normalized() {
        let g = directed_cycle(7);
        let r = chi_kdipath(&g, 2, Mode::Exact, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(r.method, Method::Exact);
        assert_eq!(r.witness.t(), r.chi);
        assert_eq!(r.witness.colour(0), 1);
        assert!(is_kdipath_colouring(&g, 2, &r.witness).unwrap());
        let greedy = chi_kdipath(&g, 2, Mode::Greedy, DEFAULT_NODE_BUDGET).unwrap();
        assert!(greedy.chi >= r.chi);
        assert_eq!(greedy.method, Method::UpperBound);
    }

    fn grotzsch() -> SimpleGraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i + 5, (i + 1) % 5));
            edges.push((i + 5, (i + 4) % 5));
            edges.push((i + 5, 10));
        }
        SimpleGraph::new(11, edges).unwrap()
    }

    #[test]
    fn triangle_free_chromatic_four() {
        let g = grotzsch();
        assert_eq!(greedy_clique(&g).len(), 2);
        assert_eq!(colour_graph(&g, DEFAULT_NODE_BUDGET).unwrap().0, 4);
        assert_eq!(colourable_graph(&g, 3, DEFAULT_NODE_BUDGET).unwrap(), None);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        match colour_graph(&grotzsch(), 1) {
            Err(Error::Budget { budget: 1, detail }) => assert!(detail.contains("<= chi <=")),
            other => panic!("expected budget error, got {other:?}"),
        }
    }
}
