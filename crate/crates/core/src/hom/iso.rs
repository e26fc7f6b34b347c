//! Isomorphism by degree refinement plus backtracking. Adequate for the small
//! graphs that cores and tournaments give rise to.

use crate::graph::OrientedGraph;

fn signature(g: &OrientedGraph, v: usize) -> (usize, usize, Vec<(usize, usize)>) {
    let mut nbr: Vec<(usize, usize)> = g
        .out_neighbours(v)
        .iter()
        .chain(g.in_neighbours(v))
        .map(|&u| (g.out_degree(u), g.in_degree(u)))
        .collect();
    nbr.sort_unstable();
    (g.out_degree(v), g.in_degree(v), nbr)
}

/// An isomorphism `g -> h` as a vertex map, if one exists.
pub fn find_isomorphism(g: &OrientedGraph, h: &OrientedGraph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.arc_count() != h.arc_count() {
        return None;
    }
    let sg: Vec<_> = (0..g.n()).map(|v| signature(g, v)).collect();
    let sh: Vec<_> = (0..h.n()).map(|v| signature(h, v)).collect();
    let mut a = sg.clone();
    let mut b = sh.clone();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }
    let candidates: Vec<Vec<usize>> = (0..g.n())
        .map(|v| (0..h.n()).filter(|&w| sg[v] == sh[w]).collect())
        .collect();
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (candidates[v].len(), std::cmp::Reverse(g.degree(v)), v));

    fn go(
        i: usize,
        order: &[usize],
        g: &OrientedGraph,
        h: &OrientedGraph,
        candidates: &[Vec<usize>],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for &w in &candidates[v] {
            if used[w] {
                continue;
            }
            let consistent = order[..i].iter().all(|&u| {
                g.has_arc(u, v) == h.has_arc(map[u], w) && g.has_arc(v, u) == h.has_arc(w, map[u])
            });
            if !consistent {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if go(i + 1, order, g, h, candidates, map, used) {
                return true;
            }
            used[w] = false;
        }
        false
    }

    let mut map = vec![usize::MAX; g.n()];
    let mut used = vec![false; h.n()];
    go(0, &order, g, h, &candidates, &mut map, &mut used).then_some(map)
}

pub fn are_isomorphic(g: &OrientedGraph, h: &OrientedGraph) -> bool {
    find_isomorphism(g, h).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_oriented_graphs, canonical_oriented_code, transitive_tournament};

    #[test]
    fn agrees_with_canonical_codes() {
        let graphs: Vec<_> = all_oriented_graphs(4).step_by(5).collect();
        for a in &graphs {
            for b in graphs.iter().step_by(3) {
                let same = canonical_oriented_code(a) == canonical_oriented_code(b);
                let iso = find_isomorphism(a, b);
                assert_eq!(iso.is_some(), same, "{a} vs {b}");
                if let Some(m) = iso {
                    for (u, v) in a.arcs() {
                        assert!(b.has_arc(m[u], m[v]));
                    }
                }
            }
        }
    }

    #[test]
    fn relabelled_tournament() {
        let t = transitive_tournament(5);
        let perm = [3, 0, 4, 1, 2];
        let h = OrientedGraph::new(5, t.arcs().map(|(u, v)| (perm[u], perm[v]))).unwrap();
        assert!(are_isomorphic(&t, &h));
    }
}
