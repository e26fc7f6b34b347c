//! Exhaustive oracles. These deliberately avoid the DSATUR machinery: pairs in
//! conflict come from explicit directed-path enumeration and every assignment in
//! `{1..t}^n` is tried.

use super::{check_k, Colouring};
use crate::error::{Error, Result};
use crate::graph::{dipath_conflict_graph, OrientedGraph};

pub const BRUTE_FORCE_MAX_N: usize = 10;

/// Whether some assignment in `{1..t}^n` is a k-dipath colouring.
pub fn brute_force_colourable(g: &OrientedGraph, k: usize, t: usize) -> Result<bool> {
    check_k(k)?;
    if g.n() > BRUTE_FORCE_MAX_N {
        return Err(Error::Resource(format!(
            "brute force limited to {BRUTE_FORCE_MAX_N} vertices, got {}",
            g.n()
        )));
    }
    let n = g.n();
    if n == 0 {
        return Ok(true);
    }
    if t == 0 {
        return Ok(false);
    }
    let pairs: Vec<(usize, usize)> = dipath_conflict_graph(g, k).edges().collect();
    let mut assignment = vec![0usize; n];
    loop {
        if pairs.iter().all(|&(u, v)| assignment[u] != assignment[v]) {
            return Ok(true);
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == n {
                return Ok(false);
            }
            assignment[i] += 1;
            if assignment[i] < t {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

/// Ground-truth k-dipath chromatic number by exhaustive search, `t` ascending.
pub fn brute_force_chi_kdipath(g: &OrientedGraph, k: usize) -> Result<usize> {
    for t in 1..=g.n().max(1) {
        if brute_force_colourable(g, k, t)? {
            return Ok(t);
        }
    }
    unreachable!("n distinct colours always form a k-dipath colouring")
}

/// Calls `visit` on every k-dipath `t`-colouring of `g` (colours `1..=t`), in
/// lexicographic order of the colour vector. Returns the number visited.
pub fn for_each_kdipath_colouring(
    g: &OrientedGraph,
    k: usize,
    t: usize,
    mut visit: impl FnMut(&Colouring),
) -> Result<u64> {
    check_k(k)?;
    let conflicts = dipath_conflict_graph(g, k);
    let n = g.n();
    let mut colours = vec![0usize; n];
    let mut count = 0u64;
    fn go(
        v: usize,
        t: usize,
        conflicts: &crate::graph::SimpleGraph,
        colours: &mut Vec<usize>,
        count: &mut u64,
        visit: &mut dyn FnMut(&Colouring),
    ) {
        if v == colours.len() {
            *count += 1;
            visit(&Colouring::new(t, colours.clone()).expect("colours in range"));
            return;
        }
        for c in 1..=t {
            if conflicts
                .neighbours(v)
                .iter()
                .any(|&u| u < v && colours[u] == c)
            {
                continue;
            }
            colours[v] = c;
            go(v + 1, t, conflicts, colours, count, visit);
        }
        colours[v] = 0;
    }
    go(0, t, &conflicts, &mut colours, &mut count, &mut visit);
    Ok(count)
}
