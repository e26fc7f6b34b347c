use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{shortest_cycle, OrientedGraph};

/// `0 -> 1 -> .. -> n-1`.
pub fn directed_path(n: usize) -> OrientedGraph {
    OrientedGraph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is oriented")
}

/// `0 -> 1 -> .. -> n-1 -> 0`.
///
/// # Panics
/// If `n < 3`; shorter cycles are loops or digons.
pub fn directed_cycle(n: usize) -> OrientedGraph {
    assert!(n >= 3, "a directed cycle in an oriented graph has length >= 3");
    OrientedGraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is oriented")
}

/// `T_t` with arcs `i -> j` for all `i < j`.
pub fn transitive_tournament(t: usize) -> OrientedGraph {
    let arcs: Vec<_> = (0..t)
        .flat_map(|i| (i + 1..t).map(move |j| (i, j)))
        .collect();
    OrientedGraph::new(t, arcs).expect("transitive tournament is oriented")
}

/// Each pair becomes an arc with probability `p`, direction by a fair coin.
/// Deterministic in `seed`.
pub fn random_oriented(n: usize, p: f64, seed: u64) -> OrientedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = p.clamp(0.0, 1.0);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                if rng.gen_bool(0.5) {
                    arcs.push((u, v));
                } else {
                    arcs.push((v, u));
                }
            }
        }
    }
    OrientedGraph::new(n, arcs).expect("random orientation is oriented")
}

/// Random acyclic orientation: arcs follow a random vertex permutation.
pub fn random_acyclic(n: usize, p: f64, seed: u64) -> OrientedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = p.clamp(0.0, 1.0);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                arcs.push((perm[i], perm[j]));
            }
        }
    }
    OrientedGraph::new(n, arcs).expect("acyclic orientation is oriented")
}

/// A [`random_oriented`] sample repaired until its directed girth is at least
/// `girth_lower_bound`: while a shorter cycle exists, its closing arc is deleted.
/// Each repair removes an arc, so this always terminates.
pub fn random_with_min_girth(n: usize, p: f64, girth_lower_bound: usize, seed: u64) -> OrientedGraph {
    let mut g = random_oriented(n, p, seed);
    while let Some(cycle) = shortest_cycle(&g) {
        if cycle.len() >= girth_lower_bound {
            break;
        }
        let last = *cycle.last().unwrap();
        let drop = (last, cycle[0]);
        let arcs: Vec<_> = g.arcs().filter(|&a| a != drop).collect();
        g = OrientedGraph::new(n, arcs).expect("arc deletion keeps orientation");
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{directed_girth, Distance};

    #[test]
    fn fixed_generators() {
        let t3 = transitive_tournament(3);
        assert_eq!(t3.arcs().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(directed_girth(&directed_cycle(3)), Distance::Finite(3));
        assert_eq!(directed_path(1).arc_count(), 0);
    }

    #[test]
    fn random_is_deterministic() {
        assert_eq!(random_oriented(8, 0.3, 1), random_oriented(8, 0.3, 1));
        assert_eq!(random_acyclic(8, 0.5, 3), random_acyclic(8, 0.5, 3));
    }

    #[test]
    fn min_girth_is_enforced() {
        for seed in 0..50 {
            let g = random_with_min_girth(9, 0.6, 5, seed);
            assert!(directed_girth(&g) >= Distance::Finite(5));
        }
    }
}
