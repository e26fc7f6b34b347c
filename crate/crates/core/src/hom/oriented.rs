//! Oriented colourings as homomorphisms into tournaments.
//!
//! Any oriented target on `t` vertices can be completed to a tournament without
//! losing a homomorphism into it, so it suffices to try one tournament per
//! isomorphism class.

use std::sync::{Arc, Mutex, OnceLock};

use super::search::find_homomorphism_with;
use super::HomMap;
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;

pub const MAX_TOURNAMENT_ORDER: usize = 7;

#[derive(Clone, Debug)]
pub struct OrientedColouring {
    pub t: usize,
    pub tournament: OrientedGraph,
    pub map: HomMap,
}

fn refinement_key(g: &OrientedGraph, v: usize) -> (usize, usize) {
    let nbr_scores = g.out_neighbours(v).iter().map(|&u| g.out_degree(u)).sum();
    (g.out_degree(v), nbr_scores)
}

/// Minimum arc code over relabellings that list vertices by refinement key.
fn canonical_tournament(g: &OrientedGraph) -> u64 {
    let t = g.n();
    let mut verts: Vec<usize> = (0..t).collect();
    verts.sort_by_key(|&v| refinement_key(g, v));
    let keys: Vec<_> = verts.iter().map(|&v| refinement_key(g, v)).collect();

    fn go(
        pos: usize,
        g: &OrientedGraph,
        verts: &[usize],
        keys: &[(usize, usize)],
        perm: &mut Vec<usize>,
        used: &mut [bool],
        best: &mut u64,
    ) {
        let t = verts.len();
        if pos == t {
            let mut code = 0u64;
            let mut b = 0;
            for i in 0..t {
                for j in i + 1..t {
                    if g.has_arc(perm[i], perm[j]) {
                        code |= 1 << b;
                    }
                    b += 1;
                }
            }
            *best = (*best).min(code);
            return;
        }
        for (i, &v) in verts.iter().enumerate() {
            if !used[i] && keys[i] == keys[pos] {
                used[i] = true;
                perm.push(v);
                go(pos + 1, g, verts, keys, perm, used, best);
                perm.pop();
                used[i] = false;
            }
        }
    }
    let mut best = u64::MAX;
    go(0, g, &verts, &keys, &mut Vec::new(), &mut vec![false; t], &mut best);
    best
}

fn from_code(t: usize, code: u64) -> OrientedGraph {
    let mut arcs = Vec::new();
    let mut b = 0;
    for i in 0..t {
        for j in i + 1..t {
            if code >> b & 1 == 1 {
                arcs.push((i, j));
            } else {
                arcs.push((j, i));
            }
            b += 1;
        }
    }
    OrientedGraph::new(t, arcs).expect("tournament")
}

static CACHE: OnceLock<Mutex<Vec<Arc<Vec<OrientedGraph>>>>> = OnceLock::new();

/// One tournament per isomorphism class on `t` vertices, in ascending canonical code.
/// Built by extending the classes on `t - 1` vertices with a new vertex in every way.
pub fn tournaments_up_to_iso(t: usize) -> Result<Arc<Vec<OrientedGraph>>> {
    if t > MAX_TOURNAMENT_ORDER {
        return Err(Error::Resource(format!(
            "tournament classes are enumerated up to order {MAX_TOURNAMENT_ORDER}, asked for {t}"
        )));
    }
    let cache = CACHE.get_or_init(|| Mutex::new(vec![Arc::new(vec![OrientedGraph::empty(0)])]));
    let mut levels = cache.lock().expect("tournament cache");
    while levels.len() <= t {
        let prev = levels.last().unwrap().clone();
        let m = levels.len() - 1;
        let mut codes = std::collections::BTreeSet::new();
        for base in prev.iter() {
            for mask in 0u32..1 << m {
                let mut arcs: Vec<(usize, usize)> = base.arcs().collect();
                for i in 0..m {
                    if mask >> i & 1 == 1 {
                        arcs.push((m, i));
                    } else {
                        arcs.push((i, m));
                    }
                }
                let g = OrientedGraph::new(m + 1, arcs).expect("extended tournament");
                codes.insert(canonical_tournament(&g));
            }
        }
        let next: Vec<OrientedGraph> = codes.into_iter().map(|c| from_code(m + 1, c)).collect();
        levels.push(Arc::new(next));
    }
    Ok(levels[t].clone())
}

/// Least `t <= max_t` admitting an oriented `t`-colouring, with the tournament and
/// map that witness it; `None` if more than `max_t` colours are needed.
pub fn oriented_chromatic_number(
    g: &OrientedGraph,
    max_t: usize,
    budget: u64,
) -> Result<Option<OrientedColouring>> {
    if max_t > MAX_TOURNAMENT_ORDER {
        return Err(Error::input(format!(
            "max_t must be at most {MAX_TOURNAMENT_ORDER}, got {max_t}"
        )));
    }
    for t in 1..=max_t {
        for tour in tournaments_up_to_iso(t)?.iter() {
            if let Some(map) = find_homomorphism_with(g, tour, budget)?.witness {
                return Ok(Some(OrientedColouring {
                    t,
                    tournament: tour.clone(),
                    map,
                }));
            }
        }
    }
    Ok(None)
}

/// Exhaustive oracle: some `c: V -> {0..t-1}` puts every arc between distinct
/// colours and never orients a colour pair both ways.
pub fn brute_force_oriented_colourable(g: &OrientedGraph, t: usize) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    if t == 0 {
        return false;
    }
    let arcs: Vec<(usize, usize)> = g.arcs().collect();
    let mut c = vec![0usize; n];
    loop {
        let mut rel = vec![false; t * t];
        let ok = arcs.iter().all(|&(u, v)| {
            let (a, b) = (c[u], c[v]);
            if a == b || rel[b * t + a] {
                return false;
            }
            rel[a * t + b] = true;
            true
        });
        if ok {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            c[i] += 1;
            if c[i] < t {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_oriented_graphs, directed_cycle, directed_path, transitive_tournament};
    use crate::hom::find_homomorphism;
    use crate::DEFAULT_NODE_BUDGET as B;

    #[test]
    fn class_counts() {
        // non-isomorphic tournaments: 1, 1, 2, 4, 12, 56, 456
        let counts: Vec<usize> = (1..=7).map(|t| tournaments_up_to_iso(t).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 12, 56, 456]);
    }

    #[test]
    fn examples() {
        let chi = |g: &OrientedGraph| oriented_chromatic_number(g, 7, B).unwrap().unwrap().t;
        assert_eq!(chi(&directed_path(4)), 3);
        for t in 1..=6 {
            assert_eq!(chi(&transitive_tournament(t)), t);
        }
        assert_eq!(chi(&directed_cycle(5)), 5);
        assert!(oriented_chromatic_number(&directed_cycle(5), 4, B).unwrap().is_none());
    }

    #[test]
    fn witness_is_a_homomorphism() {
        let g = directed_cycle(7);
        let oc = oriented_chromatic_number(&g, 7, B).unwrap().unwrap();
        assert!(oc.map.is_homomorphism(&g, &oc.tournament));
    }

    /// Oriented targets on <= 3 vertices extend to tournaments: a hom into any
    /// oriented graph on t vertices exists iff one into some t-tournament does.
    #[test]
    fn tournament_targets_suffice() {
        for t in 1..=3 {
            let targets: Vec<OrientedGraph> = all_oriented_graphs(t).collect();
            let tours = tournaments_up_to_iso(t).unwrap();
            for n in 1..=4 {
                for g in all_oriented_graphs(n).step_by(3) {
                    let any_target = targets
                        .iter()
                        .any(|h| find_homomorphism(&g, h).unwrap().exists());
                    let any_tour = tours.iter().any(|h| find_homomorphism(&g, h).unwrap().exists());
                    assert_eq!(any_target, any_tour, "{g}");
                    assert_eq!(any_tour, brute_force_oriented_colourable(&g, t), "{g}");
                }
            }
        }
    }
}
