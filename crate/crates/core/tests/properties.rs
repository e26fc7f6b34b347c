use std::collections::HashMap;

use proptest::prelude::*;

use dipath::colouring::{
    brute_force_colourable, chi_kdipath, colouring_matrix, is_kdipath_colouring,
    is_kdipath_colouring_by_paths, Mode,
};
use dipath::graph::{
    directed_girth, power_graph, random_oriented, random_with_min_girth, weak_distance, Distance,
};
use dipath::hom::{check_hom_implies_chi_bound, core_of, find_homomorphism, homomorphically_equivalent};
use dipath::targets::{build_matrix_target, MatrixTargetOptions};
use dipath::{Colouring, OrientedGraph, DEFAULT_NODE_BUDGET as B};

fn graph() -> impl Strategy<Value = OrientedGraph> {
    (1usize..=8, 0.0f64..1.0, any::<u64>()).prop_map(|(n, p, s)| random_oriented(n, p, s))
}

fn graph_with_girth(girth: usize) -> impl Strategy<Value = OrientedGraph> {
    (1usize..=7, 0.0f64..0.8, any::<u64>()).prop_map(move |(n, p, s)| random_with_min_girth(n, p, girth, s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn shortest_walk_and_path_checkers_agree(g in graph(), k in 1usize..=5, t in 1usize..=4, seed in any::<u64>()) {
        let mut s = seed;
        let colours = (0..g.n()).map(|_| {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            1 + (s >> 33) as usize % t
        }).collect();
        let c = Colouring::new(t, colours).unwrap();
        prop_assert_eq!(is_kdipath_colouring(&g, k, &c).unwrap(), is_kdipath_colouring_by_paths(&g, k, &c).unwrap());
    }

    #[test]
    fn weak_distance_is_symmetric(g in graph()) {
        for x in 0..g.n() {
            for y in 0..g.n() {
                prop_assert_eq!(weak_distance(&g, x, y).unwrap(), weak_distance(&g, y, x).unwrap());
            }
        }
    }

    #[test]
    fn power_graphs_grow_with_k(g in graph(), k in 1usize..=5) {
        let small = power_graph(&g, k);
        let big = power_graph(&g, k + 1);
        for (u, v) in small.edges() {
            prop_assert!(big.has_edge(u, v));
        }
        prop_assert_eq!(power_graph(&g, 1).edge_count(), g.arc_count());
    }

    #[test]
    fn json_round_trip(g in graph()) {
        prop_assert_eq!(OrientedGraph::from_json_str(&g.to_json_string()).unwrap(), g);
    }

    #[test]
    fn exact_witness_is_valid_and_tight(g in graph(), k in 1usize..=4) {
        let r = chi_kdipath(&g, k, Mode::Exact, B).unwrap();
        prop_assert!(is_kdipath_colouring_by_paths(&g, k, &r.witness).unwrap());
        if r.chi > 1 {
            prop_assert!(!brute_force_colourable(&g, k, r.chi - 1).unwrap());
        }
        let greedy = chi_kdipath(&g, k, Mode::Greedy, B).unwrap();
        prop_assert!(greedy.chi >= r.chi);
        prop_assert!(is_kdipath_colouring(&g, k, &greedy.witness).unwrap());
    }

    #[test]
    fn hom_witnesses_are_homomorphisms(g in graph(), h in graph()) {
        if let Some(phi) = find_homomorphism(&g, &h).unwrap().witness {
            prop_assert!(phi.is_homomorphism(&g, &h));
        }
    }

    #[test]
    fn cores_are_equivalent_and_minimal(g in graph()) {
        let c = core_of(&g, B).unwrap();
        prop_assert!(c.graph.n() <= g.n());
        prop_assert!(homomorphically_equivalent(&g, &c.graph, B).unwrap());
        prop_assert_eq!(core_of(&c.graph, B).unwrap().graph.n(), c.graph.n());
    }

    #[test]
    fn hom_into_large_girth_bounds_chi(g in graph(), h in graph_with_girth(4)) {
        prop_assume!(directed_girth(&h) > Distance::Finite(3));
        if find_homomorphism(&g, &h).unwrap().exists() {
            let r = check_hom_implies_chi_bound(&g, &h, 3, B).unwrap();
            prop_assert!(r.holds());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Mapping each vertex to its colouring matrix is a homomorphism into the target.
    #[test]
    fn colouring_matrices_give_a_homomorphism(g in graph_with_girth(4), k in 2usize..=3) {
        let t = 3;
        let Some(c) = dipath::colouring::kdipath_colourable(&g, k, t, B).unwrap() else {
            return Ok(());
        };
        let target = build_matrix_target(k, t, MatrixTargetOptions::default()).unwrap();
        let index: HashMap<_, _> = target.matrices().unwrap().iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let map: Vec<usize> = (0..g.n())
            .map(|x| index[&colouring_matrix(&g, k, &c, x).unwrap()])
            .collect();
        for (u, v) in g.arcs() {
            prop_assert!(target.graph.has_arc(map[u], map[v]));
        }
        for x in 0..g.n() {
            prop_assert_eq!(target.matrices().unwrap()[map[x]].diagonal(), c.colour(x));
        }
    }
}
