//! The two reductions from graph colouring, run on tiny inputs.

use dipath::colouring::{for_each_kdipath_colouring, kdipath_colourable};
use dipath::reductions::{build_g_prime, build_h_kt, check_vout_vin_forcing, forcing_properties_f};
use dipath::{SimpleGraph, DEFAULT_NODE_BUDGET as B};

fn main() -> dipath::Result<()> {
    let c5 = SimpleGraph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])?;
    for (name, g) in [("C5", c5), ("K5", SimpleGraph::complete(5))] {
        let h = build_h_kt(&g, 3, 4)?;
        let c = kdipath_colourable(&h.instance, 3, 4, B)?;
        println!(
            "{name}: 4-colourable {}, H(3,4) on {} vertices 3-dipath 4-colourable {}",
            g.is_colourable(4),
            h.instance.n(),
            c.is_some()
        );
    }

    let k2 = build_h_kt(&SimpleGraph::complete(2), 3, 4)?;
    let mut forced = true;
    let n = for_each_kdipath_colouring(&k2.instance, 3, 4, |c| {
        forced &= check_vout_vin_forcing(&k2, c).unwrap_or(false);
    })?;
    println!("H(3,4) of K2: {n} colourings, v_out and v_in always agree: {forced}");

    for t in [3, 4] {
        println!("F gadget at t = {t}: {:?}", forcing_properties_f(t)?);
    }
    let gp = build_g_prime(&SimpleGraph::complete(2), 3)?;
    println!(
        "G' of K2: {} vertices, 3-dipath 3-colourable {}",
        gp.instance.n(),
        kdipath_colourable(&gp.instance, 3, 3, B)?.is_some()
    );
    Ok(())
}
