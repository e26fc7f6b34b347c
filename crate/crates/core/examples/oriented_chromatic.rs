//! Oriented chromatic numbers by search over tournaments, and the tuple target.

use dipath::colouring::{chi_kdipath, Mode};
use dipath::graph::{directed_cycle, directed_path, random_oriented};
use dipath::hom::{find_homomorphism, oriented_chromatic_number, tournaments_up_to_iso};
use dipath::targets::{build_order5_tournament, build_sherk_target};
use dipath::DEFAULT_NODE_BUDGET as B;

fn main() -> dipath::Result<()> {
    for t in 1..=7 {
        println!("tournaments on {t} vertices: {}", tournaments_up_to_iso(t)?.len());
    }
    for (name, g) in [("P4", directed_path(4)), ("C5", directed_cycle(5)), ("C6", directed_cycle(6))] {
        let oc = oriented_chromatic_number(&g, 7, B)?.expect("at most 7");
        println!("chi_o({name}) = {} via {:?}", oc.t, oc.map.map);
    }

    let s3 = build_sherk_target(3)?;
    let into_t5 = find_homomorphism(&s3.graph, &build_order5_tournament())?;
    println!("tuple target on {} vertices maps to the order-5 tournament: {}", s3.n(), into_t5.exists());

    let g = random_oriented(8, 0.25, 5);
    let chi2 = chi_kdipath(&g, 2, Mode::Exact, B)?.chi;
    let chio = oriented_chromatic_number(&g, 7, B)?.map(|c| c.t);
    println!("random n=8: chi_2 = {chi2}, chi_o = {chio:?}");
    Ok(())
}
