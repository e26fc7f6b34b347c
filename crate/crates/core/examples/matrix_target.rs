//! Colouring matrices and the universal target graphs built from them.

use dipath::colouring::{colouring_matrix, kdipath_colourable};
use dipath::graph::{directed_girth, directed_path};
use dipath::targets::{build_matrix_target, diagonal_colouring, matrix_target_size, MatrixTargetOptions};
use dipath::DEFAULT_NODE_BUDGET;

fn main() -> dipath::Result<()> {
    let g = directed_path(5);
    let c = kdipath_colourable(&g, 3, 4, DEFAULT_NODE_BUDGET)?.expect("P5 is 3-dipath 4-colourable");
    println!("colouring of P5: {:?}", c.colours());
    println!("matrix of the middle vertex:\n{}", colouring_matrix(&g, 3, &c, 2)?);

    for (k, t) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
        let target = build_matrix_target(k, t, MatrixTargetOptions::default())?;
        let realizable = build_matrix_target(
            k,
            t,
            MatrixTargetOptions {
                realizable_only: true,
                ..Default::default()
            },
        )?;
        println!(
            "G({k},{t}): {} vertices (formula {}), {} realizable, {} arcs, girth {}, diagonal colours {}",
            target.n(),
            matrix_target_size(k, t)?,
            realizable.n(),
            target.graph.arc_count(),
            directed_girth(&target.graph),
            diagonal_colouring(&target)?.t()
        );
    }
    Ok(())
}
