//! A graph of large girth has a k-dipath t-colouring exactly when it maps to G(k,t).

use dipath::colouring::brute_force_colourable;
use dipath::graph::random_with_min_girth;
use dipath::hom::find_homomorphism;
use dipath::targets::{build_matrix_target, EdgeRule, MatrixTargetOptions};

fn main() -> dipath::Result<()> {
    let (k, t) = (3, 3);
    let target = build_matrix_target(k, t, MatrixTargetOptions::default())?;
    let strict = build_matrix_target(
        k,
        t,
        MatrixTargetOptions {
            rule: EdgeRule::StrictText,
            ..Default::default()
        },
    )?;
    let (mut agree, mut strict_agree) = (0, 0);
    for seed in 0..100 {
        let g = random_with_min_girth(7, 0.35, k + 1, seed);
        let colourable = brute_force_colourable(&g, k, t)?;
        let hom = find_homomorphism(&g, &target.graph)?;
        if let Some(phi) = &hom.witness {
            let ms = target.matrices().unwrap();
            let colours: Vec<usize> = (0..g.n()).map(|v| ms[phi.image(v)].diagonal()).collect();
            if seed == 0 {
                println!("seed 0: colours read off the image diagonals {colours:?}");
            }
        }
        agree += (hom.exists() == colourable) as usize;
        strict_agree += (find_homomorphism(&g, &strict.graph)?.exists() == colourable) as usize;
    }
    println!("corrected edge rule agrees on {agree}/100, literal rule on {strict_agree}/100");
    Ok(())
}
