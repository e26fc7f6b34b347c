//! Distances, girth and k-dipath cliques on a few small graphs.

use dipath::graph::{
    directed_cycle, directed_girth, is_kdipath_clique, longest_directed_path_vertices,
    power_graph, random_with_min_girth, shortest_cycle, transitive_tournament, weak_diameter,
    weak_distance,
};
use dipath::OrientedGraph;

fn main() -> dipath::Result<()> {
    let c5 = directed_cycle(5);
    println!("C5: girth {}, weak diameter {}", directed_girth(&c5), weak_diameter(&c5));
    println!("C5: weak distance 0-3 = {}", weak_distance(&c5, 0, 3)?);

    let t4 = transitive_tournament(4);
    println!(
        "T4: girth {}, longest path {} vertices, 2-dipath clique {}",
        directed_girth(&t4),
        longest_directed_path_vertices(&t4),
        is_kdipath_clique(&t4, 2)?
    );

    let chorded = OrientedGraph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (3, 1)])?;
    println!("C5 plus chord 3->1: shortest cycle {:?}", shortest_cycle(&chorded));
    if let Err(e) = is_kdipath_clique(&chorded, 3) {
        println!("clique test refused: {e}");
    }

    let g = random_with_min_girth(10, 0.4, 4, 7);
    for k in 1..=3 {
        println!("random girth >= 4 graph: G^{k} has {} edges", power_graph(&g, k).edge_count());
    }
    Ok(())
}
