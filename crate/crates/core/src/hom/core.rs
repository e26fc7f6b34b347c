use super::search::find_homomorphism_with;
use crate::error::Result;
use crate::graph::OrientedGraph;

/// The core of a graph, with the original ids of the vertices it keeps.
#[derive(Clone, Debug)]
pub struct Core {
    pub graph: OrientedGraph,
    /// `vertices[i]` is the original id of core vertex `i`, ascending.
    pub vertices: Vec<usize>,
}

/// Whether homomorphisms exist in both directions.
pub fn homomorphically_equivalent(g: &OrientedGraph, h: &OrientedGraph, budget: u64) -> Result<bool> {
    Ok(find_homomorphism_with(g, h, budget)?.exists() && find_homomorphism_with(h, g, budget)?.exists())
}

/// Shrinks `g` to its core.
///
/// A graph is not a core exactly when some endomorphism misses a vertex, i.e. when
/// it maps to itself minus one vertex. Each step looks for such a map and replaces
/// the current graph by the induced subgraph on the map's image; when no vertex can
/// be dropped the current induced subgraph is the core.
pub fn core_of(g: &OrientedGraph, budget: u64) -> Result<Core> {
    let mut vertices: Vec<usize> = (0..g.n()).collect();
    let mut current = g.induced(&vertices);
    'shrink: loop {
        for drop in 0..current.n() {
            let keep: Vec<usize> = (0..current.n()).filter(|&v| v != drop).collect();
            let sub = current.induced(&keep);
            if let Some(phi) = find_homomorphism_with(&current, &sub, budget)?.witness {
                let mut image: Vec<usize> = phi.map.iter().map(|&i| vertices[keep[i]]).collect();
                image.sort_unstable();
                image.dedup();
                vertices = image;
                current = g.induced(&vertices);
                continue 'shrink;
            }
        }
        break;
    }
    Ok(Core {
        graph: current,
        vertices,
    })
}
