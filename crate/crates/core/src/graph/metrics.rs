use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use super::{Distance, OrientedGraph, SimpleGraph};
use crate::error::{Error, Result};

/// BFS distances from `src` along arcs. Neighbours are visited in ascending id order.
pub fn distances_from(g: &OrientedGraph, src: usize) -> Vec<Distance> {
    bfs(g, src, usize::MAX)
        .into_iter()
        .map(Distance::from)
        .collect()
}

fn bfs(g: &OrientedGraph, src: usize, max_depth: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        if d == max_depth {
            continue;
        }
        for &v in g.out_neighbours(u) {
            if dist[v].is_none() {
                dist[v] = Some(d + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

pub fn distance(g: &OrientedGraph, x: usize, y: usize) -> Result<Distance> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    Ok(bfs(g, x, usize::MAX)[y].into())
}

/// `min(distance(x, y), distance(y, x))`; zero when `x == y`.
pub fn weak_distance(g: &OrientedGraph, x: usize, y: usize) -> Result<Distance> {
    Ok(distance(g, x, y)?.min(distance(g, y, x)?))
}

/// Maximum weak distance over distinct pairs; 0 for graphs with fewer than two vertices.
pub fn weak_diameter(g: &OrientedGraph) -> Distance {
    let all: Vec<Vec<Option<usize>>> = (0..g.n()).map(|v| bfs(g, v, usize::MAX)).collect();
    let mut best = Distance::Finite(0);
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            let d = Distance::from(all[x][y]).min(Distance::from(all[y][x]));
            best = best.max(d);
        }
    }
    best
}

/// A shortest directed cycle as a vertex sequence `v0, .., v_{l-1}` (closing arc implied),
/// or `None` when the graph is acyclic. Ties go to the smallest starting vertex.
pub fn shortest_cycle(g: &OrientedGraph) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    for v in 0..g.n() {
        let limit = best.as_ref().map_or(usize::MAX, |c| c.len());
        // BFS from v; the cycle through v closes over an in-neighbour of v.
        let mut parent = vec![usize::MAX; g.n()];
        let mut dist = vec![usize::MAX; g.n()];
        dist[v] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            if dist[u] + 1 >= limit {
                break;
            }
            for &w in g.out_neighbours(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        let closing = g
            .in_neighbours(v)
            .iter()
            .copied()
            .filter(|&u| dist[u] != usize::MAX)
            .min_by_key(|&u| (dist[u], u));
        if let Some(u) = closing {
            if dist[u] + 1 < limit {
                let mut cycle = vec![u];
                let mut cur = u;
                while cur != v {
                    cur = parent[cur];
                    cycle.push(cur);
                }
                cycle.reverse();
                best = Some(cycle);
            }
        }
    }
    best
}

/// Length of the shortest directed cycle, `Infinite` if acyclic.
pub fn directed_girth(g: &OrientedGraph) -> Distance {
    shortest_cycle(g).map(|c| c.len()).into()
}

/// `G^k`: `{u, v}` is an edge iff `0 < weak_distance(u, v) <= k`.
pub fn power_graph(g: &OrientedGraph, k: usize) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..g.n() {
        for (v, d) in bfs(g, u, k).into_iter().enumerate() {
            if v != u && d.is_some() {
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    SimpleGraph::new(g.n(), edges).expect("power graph edges are in range")
}

/// Pairs joined by a directed path of length at most `k`, found by enumerating
/// simple paths explicitly. This is the literal k-dipath conflict relation and
/// makes no use of girth.
pub fn dipath_conflict_graph(g: &OrientedGraph, k: usize) -> SimpleGraph {
    fn walk(
        g: &OrientedGraph,
        start: usize,
        cur: usize,
        len: usize,
        k: usize,
        on_path: &mut [bool],
        edges: &mut Vec<(usize, usize)>,
    ) {
        if len == k {
            return;
        }
        for &w in g.out_neighbours(cur) {
            if on_path[w] {
                continue;
            }
            edges.push((start.min(w), start.max(w)));
            on_path[w] = true;
            walk(g, start, w, len + 1, k, on_path, edges);
            on_path[w] = false;
        }
    }
    let mut edges = Vec::new();
    let mut on_path = vec![false; g.n()];
    for s in 0..g.n() {
        on_path[s] = true;
        walk(g, s, s, 0, k, &mut on_path, &mut edges);
        on_path[s] = false;
    }
    SimpleGraph::new(g.n(), edges).expect("conflict edges are in range")
}

/// Kahn's algorithm, smallest available id first. `None` if there is a directed cycle.
pub fn topological_order(g: &OrientedGraph) -> Option<Vec<usize>> {
    let mut indeg: Vec<usize> = (0..g.n()).map(|v| g.in_degree(v)).collect();
    let mut ready: BinaryHeap<Reverse<usize>> = (0..g.n())
        .filter(|&v| indeg[v] == 0)
        .map(Reverse)
        .collect();
    let mut order = Vec::with_capacity(g.n());
    while let Some(Reverse(u)) = ready.pop() {
        order.push(u);
        for &v in g.out_neighbours(u) {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                ready.push(Reverse(v));
            }
        }
    }
    (order.len() == g.n()).then_some(order)
}

/// For every vertex, the number of vertices on a longest directed path ending there.
/// `None` if the graph has a directed cycle.
pub(crate) fn path_levels(g: &OrientedGraph) -> Option<Vec<usize>> {
    let order = topological_order(g)?;
    let mut level = vec![1usize; g.n()];
    for &u in &order {
        for &v in g.out_neighbours(u) {
            level[v] = level[v].max(level[u] + 1);
        }
    }
    Some(level)
}

/// Vertices on a longest directed path; `Infinite` when a directed cycle exists.
/// The empty graph has value 0.
pub fn longest_directed_path_vertices(g: &OrientedGraph) -> Distance {
    match path_levels(g) {
        Some(levels) => Distance::Finite(levels.into_iter().max().unwrap_or(0)),
        None => Distance::Infinite,
    }
}

/// Whether `g`, of directed girth at least `k + 1`, has weak diameter at most `k`.
pub fn is_kdipath_clique(g: &OrientedGraph, k: usize) -> Result<bool> {
    if k < 2 {
        return Err(Error::input(format!("k-dipath clique test needs k >= 2, got {k}")));
    }
    if let Some(cycle) = shortest_cycle(g) {
        if cycle.len() <= k {
            return Err(Error::precondition(format!(
                "directed girth must be at least {}; found cycle {:?}",
                k + 1,
                cycle
            )));
        }
    }
    Ok(weak_diameter(g) <= Distance::Finite(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{directed_cycle, directed_path, transitive_tournament};

    #[test]
    fn distances_on_paths_and_cycles() {
        let p = directed_path(3);
        assert_eq!(distance(&p, 0, 2).unwrap(), Distance::Finite(2));
        assert_eq!(distance(&p, 2, 0).unwrap(), Distance::Infinite);
        assert_eq!(distance(&p, 1, 1).unwrap(), Distance::Finite(0));
        let c = directed_cycle(3);
        assert_eq!(distance(&c, 0, 2).unwrap(), Distance::Finite(2));
        assert_eq!(weak_distance(&c, 0, 2).unwrap(), Distance::Finite(1));
        assert_eq!(weak_distance(&p, 0, 2).unwrap(), Distance::Finite(2));
        assert!(matches!(distance(&p, 0, 3), Err(Error::Input(_))));
    }

    #[test]
    fn weak_diameters() {
        assert_eq!(weak_diameter(&directed_cycle(3)), Distance::Finite(1));
        assert_eq!(weak_diameter(&directed_path(3)), Distance::Finite(2));
        let two_arcs = OrientedGraph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(weak_diameter(&two_arcs), Distance::Infinite);
        assert_eq!(weak_diameter(&OrientedGraph::empty(1)), Distance::Finite(0));
        let isolated = OrientedGraph::empty(2);
        assert_eq!(weak_distance(&isolated, 0, 1).unwrap(), Distance::Infinite);
    }

    #[test]
    fn girth_examples() {
        assert_eq!(directed_girth(&directed_cycle(3)), Distance::Finite(3));
        assert_eq!(directed_girth(&transitive_tournament(4)), Distance::Infinite);
        // 5-cycle plus chord 0->2 does not shorten anything; chord 3->1 closes 1->2->3->1.
        let mut arcs: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        arcs.push((3, 1));
        let g = OrientedGraph::new(5, arcs).unwrap();
        assert_eq!(directed_girth(&g), Distance::Finite(3));
        assert_eq!(shortest_cycle(&g).unwrap(), vec![1, 2, 3]);
    }

    #[test]
    fn power_graph_examples() {
        let p = directed_path(4);
        let sq = power_graph(&p, 2);
        let edges: Vec<_> = sq.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(power_graph(&p, 1), p.underlying());
        assert!(power_graph(&directed_cycle(3), 2).is_complete());
    }

    #[test]
    fn longest_paths() {
        assert_eq!(
            longest_directed_path_vertices(&transitive_tournament(5)),
            Distance::Finite(5)
        );
        assert_eq!(
            longest_directed_path_vertices(&OrientedGraph::empty(1)),
            Distance::Finite(1)
        );
        assert_eq!(
            longest_directed_path_vertices(&directed_cycle(3)),
            Distance::Infinite
        );
    }

    #[test]
    fn kdipath_cliques() {
        assert!(is_kdipath_clique(&directed_cycle(3), 2).unwrap());
        assert!(is_kdipath_clique(&directed_path(3), 2).unwrap());
        let two_arcs = OrientedGraph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!is_kdipath_clique(&two_arcs, 2).unwrap());
        match is_kdipath_clique(&directed_cycle(3), 3) {
            Err(Error::Precondition(msg)) => assert!(msg.contains("[0, 1, 2]")),
            other => panic!("expected precondition error, got {other:?}"),
        }
    }
}
