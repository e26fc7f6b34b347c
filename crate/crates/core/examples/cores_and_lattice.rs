//! Cores of the matrix targets and homomorphisms between them.

use dipath::graph::{directed_cycle, transitive_tournament};
use dipath::hom::{are_isomorphic, core_of, find_homomorphism};
use dipath::targets::{build_matrix_target, MatrixTargetOptions};
use dipath::DEFAULT_NODE_BUDGET;

fn main() -> dipath::Result<()> {
    let target = |k, t| build_matrix_target(k, t, MatrixTargetOptions::default());
    for (k, t) in [(3, 2), (3, 3)] {
        let g = target(k, t)?;
        let core = core_of(&g.graph, DEFAULT_NODE_BUDGET)?;
        println!(
            "core of G({k},{t}): {} of {} vertices, transitive tournament: {}",
            core.graph.n(),
            g.n(),
            are_isomorphic(&core.graph, &transitive_tournament(t))
        );
    }

    let g24 = target(2, 4)?;
    let g34 = target(3, 4)?;
    println!("G(3,4) -> G(2,4): {}", find_homomorphism(&g34.graph, &g24.graph)?.exists());
    println!("G(2,4) -> G(3,4): {}", find_homomorphism(&g24.graph, &g34.graph)?.exists());
    let c3 = directed_cycle(3);
    println!("C3 -> G(2,4): {}", find_homomorphism(&c3, &g24.graph)?.exists());
    println!("C3 -> G(3,4): {}", find_homomorphism(&c3, &g34.graph)?.exists());
    Ok(())
}
