//! Exact and greedy k-dipath chromatic numbers, checked against brute force.

use dipath::colouring::{brute_force_chi_kdipath, chi_kdipath, is_kdipath_colouring_by_paths, Mode};
use dipath::graph::{directed_cycle, directed_path, random_oriented, transitive_tournament};
use dipath::DEFAULT_NODE_BUDGET;

fn main() -> dipath::Result<()> {
    let cases = [
        ("T4", transitive_tournament(4), 4),
        ("P4", directed_path(4), 4),
        ("P4", directed_path(4), 1),
        ("C5", directed_cycle(5), 2),
        ("C7", directed_cycle(7), 3),
    ];
    for (name, g, k) in cases {
        let r = chi_kdipath(&g, k, Mode::Exact, DEFAULT_NODE_BUDGET)?;
        println!("{name}, k = {k}: chi = {} witness {:?}", r.chi, r.witness.colours());
    }

    let g = random_oriented(9, 0.35, 42);
    for k in 1..=4 {
        let exact = chi_kdipath(&g, k, Mode::Exact, DEFAULT_NODE_BUDGET)?;
        let greedy = chi_kdipath(&g, k, Mode::Greedy, DEFAULT_NODE_BUDGET)?;
        assert!(is_kdipath_colouring_by_paths(&g, k, &exact.witness)?);
        println!(
            "random n=9, k = {k}: exact {}, greedy {}, brute force {}",
            exact.chi,
            greedy.chi,
            brute_force_chi_kdipath(&g, k)?
        );
    }
    Ok(())
}
