//! Exhaustive enumeration of small oriented and simple graphs.

use std::collections::BTreeSet;

use super::{OrientedGraph, SimpleGraph};

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Every labelled oriented graph on `n` vertices: each unordered pair is absent,
/// forward or backward, `3^(n choose 2)` graphs in total.
pub fn all_oriented_graphs(n: usize) -> impl Iterator<Item = OrientedGraph> {
    let ps = pairs(n);
    let total = 3u64.pow(ps.len() as u32);
    (0..total).map(move |code| oriented_from_code(n, &ps, code))
}

fn oriented_from_code(n: usize, ps: &[(usize, usize)], mut code: u64) -> OrientedGraph {
    let mut arcs = Vec::new();
    for &(i, j) in ps {
        match code % 3 {
            1 => arcs.push((i, j)),
            2 => arcs.push((j, i)),
            _ => {}
        }
        code /= 3;
    }
    OrientedGraph::new(n, arcs).expect("one direction per pair")
}

fn oriented_code_under(g: &OrientedGraph, ps: &[(usize, usize)], perm: &[usize]) -> u64 {
    // perm maps new position -> old vertex
    let mut code = 0u64;
    for &(i, j) in ps.iter().rev() {
        let (a, b) = (perm[i], perm[j]);
        let digit = if g.has_arc(a, b) {
            1
        } else if g.has_arc(b, a) {
            2
        } else {
            0
        };
        code = code * 3 + digit;
    }
    code
}

/// Isomorphism-invariant code: the minimum pair encoding over all relabellings.
/// Practical for `n <= 7`.
pub fn canonical_oriented_code(g: &OrientedGraph) -> u64 {
    let ps = pairs(g.n());
    permutations(g.n())
        .iter()
        .map(|p| oriented_code_under(g, &ps, p))
        .min()
        .unwrap_or(0)
}

/// One representative per isomorphism class of oriented graphs on `n` vertices.
pub fn oriented_graphs_up_to_iso(n: usize) -> Vec<OrientedGraph> {
    let ps = pairs(n);
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    for g in all_oriented_graphs(n) {
        let code = perms
            .iter()
            .map(|p| oriented_code_under(&g, &ps, p))
            .min()
            .unwrap_or(0);
        seen.insert(code);
    }
    seen.into_iter()
        .map(|code| oriented_from_code(n, &ps, code))
        .collect()
}

/// Every labelled simple graph on `n` vertices.
pub fn all_simple_graphs(n: usize) -> impl Iterator<Item = SimpleGraph> {
    let ps = pairs(n);
    let total = 1u64 << ps.len();
    (0..total).map(move |mask| simple_from_mask(n, &ps, mask))
}

fn simple_from_mask(n: usize, ps: &[(usize, usize)], mask: u64) -> SimpleGraph {
    let edges = ps
        .iter()
        .enumerate()
        .filter(|(b, _)| mask >> b & 1 == 1)
        .map(|(_, &e)| e);
    SimpleGraph::new(n, edges.collect::<Vec<_>>()).expect("pairs are simple edges")
}

fn simple_mask_under(g: &SimpleGraph, ps: &[(usize, usize)], perm: &[usize]) -> u64 {
    ps.iter()
        .enumerate()
        .filter(|(_, &(i, j))| g.has_edge(perm[i], perm[j]))
        .fold(0, |m, (b, _)| m | 1 << b)
}

pub fn canonical_simple_code(g: &SimpleGraph) -> u64 {
    let ps = pairs(g.n());
    permutations(g.n())
        .iter()
        .map(|p| simple_mask_under(g, &ps, p))
        .min()
        .unwrap_or(0)
}

/// One representative per isomorphism class of simple graphs on `n` vertices.
pub fn simple_graphs_up_to_iso(n: usize) -> Vec<SimpleGraph> {
    let ps = pairs(n);
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    for g in all_simple_graphs(n) {
        let code = perms
            .iter()
            .map(|p| simple_mask_under(&g, &ps, p))
            .min()
            .unwrap_or(0);
        seen.insert(code);
    }
    seen.into_iter()
        .map(|m| simple_from_mask(n, &ps, m))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labelled_counts() {
        assert_eq!(all_oriented_graphs(3).count(), 27);
        assert_eq!(all_simple_graphs(4).count(), 64);
    }

    #[test]
    fn isomorphism_class_counts() {
        // Known sequences: oriented graphs 1, 2, 7, 42, 582; simple graphs 1, 2, 4, 11, 34.
        let oriented: Vec<usize> = (1..=5).map(|n| oriented_graphs_up_to_iso(n).len()).collect();
        assert_eq!(oriented, vec![1, 2, 7, 42, 582]);
        let simple: Vec<usize> = (1..=5).map(|n| simple_graphs_up_to_iso(n).len()).collect();
        assert_eq!(simple, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn canonical_code_is_relabelling_invariant() {
        let a = OrientedGraph::new(4, [(0, 1), (1, 2), (3, 2)]).unwrap();
        let b = OrientedGraph::new(4, [(3, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(canonical_oriented_code(&a), canonical_oriented_code(&b));
        let c = OrientedGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_ne!(canonical_oriented_code(&a), canonical_oriented_code(&c));
    }
}
