use super::{TargetGraph, VertexMeaning};
use crate::colouring::{colouring_matrix, consistent_column_patterns, Colouring, ColouringMatrix};
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;

pub const DEFAULT_MAX_TARGET_VERTICES: u64 = 20_000;

/// Which reading of the propagation conditions defines the arcs of `G_{k,t}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EdgeRule {
    /// A colour at in-distance `i` of the tail sits at in-distance `i + 1` of the head;
    /// a colour at out-distance `i` of the head sits at out-distance `i + 1` of the tail.
    #[default]
    Corrected,
    /// The formal conditions as printed: `a(-i) => b(-(i-1))` and `b(i) => b(i+1)`.
    StrictText,
}

#[derive(Clone, Copy, Debug)]
pub struct MatrixTargetOptions {
    pub rule: EdgeRule,
    /// Keep only matrices realized by some coloured graph of large girth.
    pub realizable_only: bool,
    pub max_vertices: u64,
}

impl Default for MatrixTargetOptions {
    fn default() -> Self {
        MatrixTargetOptions {
            rule: EdgeRule::Corrected,
            realizable_only: false,
            max_vertices: DEFAULT_MAX_TARGET_VERTICES,
        }
    }
}

/// Number of consistent `(k, t)` matrices: `t * P^(t-1)` where `P` counts the
/// admissible non-diagonal columns.
pub fn matrix_target_size(k: usize, t: usize) -> Result<u64> {
    if k < 2 || t == 0 {
        return Err(Error::input(format!("matrix targets need k >= 2 and t >= 1, got ({k},{t})")));
    }
    let p = consistent_column_patterns(k).len() as u64;
    (t as u64)
        .checked_mul(p.checked_pow(t as u32 - 1).unwrap_or(u64::MAX))
        .ok_or_else(|| Error::Resource("matrix count overflows".into()))
}

/// All consistent colouring matrices: diagonal column ascending, then the other
/// columns' patterns in lexicographic order (column 1 most significant).
pub fn enumerate_matrices(k: usize, t: usize, max_vertices: u64) -> Result<Vec<ColouringMatrix>> {
    let count = matrix_target_size(k, t)?;
    if count > max_vertices {
        return Err(Error::Resource(format!(
            "({k},{t}) has {count} consistent matrices, budget is {max_vertices}"
        )));
    }
    let patterns = consistent_column_patterns(k);
    let diag = 1u32 << (k - 1);
    let mut out = Vec::with_capacity(count as usize);
    for m in 0..t {
        let mut idx = vec![0usize; t - 1];
        loop {
            let mut cols = Vec::with_capacity(t);
            let mut it = idx.iter();
            for j in 0..t {
                if j == m {
                    cols.push(diag);
                } else {
                    cols.push(patterns[*it.next().unwrap()]);
                }
            }
            out.push(ColouringMatrix::from_columns(k, cols)?);
            // odometer, last free column fastest
            let mut i = t - 1;
            loop {
                if i == 0 {
                    break;
                }
                idx[i - 1] += 1;
                if idx[i - 1] < patterns.len() {
                    break;
                }
                idx[i - 1] = 0;
                i -= 1;
            }
            if i == 0 {
                break;
            }
        }
    }
    Ok(out)
}

/// Arc predicate of `G_{k,t}` under the default rule.
pub fn matrix_edge(a: &ColouringMatrix, b: &ColouringMatrix) -> Result<bool> {
    matrix_edge_with(EdgeRule::Corrected, a, b)
}

pub fn matrix_edge_with(rule: EdgeRule, a: &ColouringMatrix, b: &ColouringMatrix) -> Result<bool> {
    if a.k() != b.k() || a.t() != b.t() {
        return Err(Error::input(format!(
            "matrix parameters differ: ({},{}) vs ({},{})",
            a.k(),
            a.t(),
            b.k(),
            b.t()
        )));
    }
    Ok(edge_unchecked(rule, a, b))
}

fn edge_unchecked(rule: EdgeRule, a: &ColouringMatrix, b: &ColouringMatrix) -> bool {
    let (m1, m2) = (a.diagonal(), b.diagonal());
    if !a.get(1, m2) || !b.get(-1, m1) {
        return false;
    }
    let k = a.k() as i32;
    for j in 1..=a.t() {
        for i in 1..=k - 2 {
            let ok = match rule {
                EdgeRule::Corrected => {
                    (!a.get(-i, j) || b.get(-(i + 1), j)) && (!b.get(i, j) || a.get(i + 1, j))
                }
                EdgeRule::StrictText => {
                    (!a.get(-i, j) || b.get(-(i - 1), j)) && (!b.get(i, j) || b.get(i + 1, j))
                }
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Builds a witness for `m`: a coloured in-tree and out-tree around vertex 0 whose
/// colouring matrix at vertex 0 is exactly `m`. `None` if no coloured graph of
/// directed girth at least `k + 1` realizes `m`.
///
/// A 1 at `(-d, j)` needs a path of `d` arcs into the centre whose vertex at
/// distance `e` has a colour from row `-e`, all colours on it distinct and different
/// from `j`; symmetrically for out-paths. Trees give exactly the rows requested and
/// every realization contains such paths, so this decides realizability.
pub fn realizable_witness(m: &ColouringMatrix) -> Option<(OrientedGraph, Colouring, usize)> {
    let k = m.k() as i32;
    let t = m.t();
    let row = |r: i32| -> Vec<usize> { (1..=t).filter(|&j| m.get(r, j)).collect() };
    let mut colours = vec![m.diagonal()];
    let mut arcs = Vec::new();
    for sign in [-1i32, 1] {
        for d in 1..k {
            for j in row(sign * d) {
                // distinct representatives for depths 1..d-1
                let mut chosen = Vec::new();
                if !pick_chain(&row, sign, d - 1, j, &mut chosen) {
                    return None;
                }
                // chosen[e-1] is the colour at depth e
                let base = colours.len();
                colours.extend(chosen.iter().copied());
                colours.push(j);
                let mut prev = 0usize;
                for depth in 1..=d as usize {
                    let v = base + depth - 1;
                    if sign < 0 {
                        arcs.push((v, prev));
                    } else {
                        arcs.push((prev, v));
                    }
                    prev = v;
                }
            }
        }
    }
    let g = OrientedGraph::new(colours.len(), arcs).ok()?;
    let c = Colouring::new(t, colours).ok()?;
    match colouring_matrix(&g, m.k(), &c, 0) {
        Ok(realized) if realized == *m => Some((g, c, 0)),
        _ => None,
    }
}

fn pick_chain(
    row: &dyn Fn(i32) -> Vec<usize>,
    sign: i32,
    depth: i32,
    end_colour: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    let e = chosen.len() as i32 + 1;
    if e > depth {
        return true;
    }
    for c in row(sign * e) {
        if c == end_colour || chosen.contains(&c) {
            continue;
        }
        chosen.push(c);
        if pick_chain(row, sign, depth, end_colour, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// `G_{k,t}` over the enumerated matrices; arcs exactly where the edge rule holds.
pub fn build_matrix_target(k: usize, t: usize, opts: MatrixTargetOptions) -> Result<TargetGraph> {
    let mut matrices = enumerate_matrices(k, t, opts.max_vertices)?;
    if opts.realizable_only {
        matrices.retain(|m| realizable_witness(m).is_some());
    }
    let mut arcs = Vec::new();
    for (ia, a) in matrices.iter().enumerate() {
        let m1 = a.diagonal();
        for (ib, b) in matrices.iter().enumerate() {
            // cheap filter on conditions 1 and 2 before the full predicate
            if b.diagonal() == m1 || !a.get(1, b.diagonal()) || !b.get(-1, m1) {
                continue;
            }
            if edge_unchecked(opts.rule, a, b) {
                arcs.push((ia, ib));
            }
        }
    }
    let graph = OrientedGraph::new(matrices.len(), arcs)?;
    Ok(TargetGraph {
        graph,
        meaning: VertexMeaning::Matrix(matrices),
        k,
        t,
    })
}

/// Colours each matrix vertex by its diagonal column.
pub fn diagonal_colouring(target: &TargetGraph) -> Result<Colouring> {
    let ms = target
        .matrices()
        .ok_or_else(|| Error::input("diagonal colouring needs a matrix target"))?;
    Colouring::new(target.t, ms.iter().map(ColouringMatrix::diagonal).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{directed_girth, Distance};

    /// Independent count: filter all `2^((2k-1) t)` zero-one matrices through the
    /// constructor.
    fn filtered_count(k: usize, t: usize) -> usize {
        let rows = 2 * k - 1;
        let total = 1u64 << (rows * t);
        (0..total)
            .filter(|&bits| {
                let cols = (0..t)
                    .map(|j| ((bits >> (j * rows)) & ((1 << rows) - 1)) as u32)
                    .collect();
                ColouringMatrix::from_columns(k, cols).is_ok()
            })
            .count()
    }

    #[test]
    fn enumeration_matches_exhaustive_filter() {
        assert_eq!(filtered_count(2, 2), 6);
        assert_eq!(filtered_count(2, 3), 27);
        assert_eq!(filtered_count(3, 2), 16);
        for (k, t) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)] {
            let ms = enumerate_matrices(k, t, 1 << 20).unwrap();
            assert_eq!(ms.len(), filtered_count(k, t), "({k},{t})");
            assert_eq!(ms.len() as u64, matrix_target_size(k, t).unwrap());
        }
        assert_eq!(enumerate_matrices(2, 1, 10).unwrap().len(), 1);
    }

    #[test]
    fn enumeration_order_and_budget() {
        let ms = enumerate_matrices(2, 2, 100).unwrap();
        let diags: Vec<usize> = ms.iter().map(|m| m.diagonal()).collect();
        assert_eq!(diags, vec![1, 1, 1, 2, 2, 2]);
        assert!(matches!(enumerate_matrices(3, 4, 100), Err(Error::Resource(_))));
    }

    #[test]
    fn edge_examples() {
        let a = ColouringMatrix::new(2, 2, [(0, 1), (1, 2)]).unwrap();
        let b = ColouringMatrix::new(2, 2, [(0, 2), (-1, 1)]).unwrap();
        assert!(matrix_edge(&a, &b).unwrap());
        assert!(!matrix_edge(&a, &a).unwrap());
        let a0 = ColouringMatrix::new(2, 2, [(0, 1)]).unwrap();
        assert!(!matrix_edge(&a0, &b).unwrap());
        let other = ColouringMatrix::new(3, 2, [(0, 1)]).unwrap();
        assert!(matches!(matrix_edge(&a, &other), Err(Error::Input(_))));
    }

    #[test]
    fn small_targets() {
        let g22 = build_matrix_target(2, 2, Default::default()).unwrap();
        assert_eq!(g22.n(), 6);
        assert!(directed_girth(&g22.graph) >= Distance::Finite(3));
        let g33 = build_matrix_target(3, 3, Default::default()).unwrap();
        assert_eq!(g33.n(), 192);
        assert!(directed_girth(&g33.graph) >= Distance::Finite(4));
    }

    #[test]
    fn realizability_gap() {
        // in-distance 2 without anything at in-distance 1 cannot occur
        let m = ColouringMatrix::new(3, 2, [(0, 1), (-2, 2)]).unwrap();
        assert!(realizable_witness(&m).is_none());
        let printed =
            ColouringMatrix::new(3, 4, [(-2, 2), (-1, 1), (-1, 2), (0, 3), (1, 4)]).unwrap();
        let (g, c, x) = realizable_witness(&printed).unwrap();
        assert_eq!(colouring_matrix(&g, 3, &c, x).unwrap(), printed);
        let full = enumerate_matrices(3, 3, 1000).unwrap().len();
        let real = build_matrix_target(
            3,
            3,
            MatrixTargetOptions {
                realizable_only: true,
                ..Default::default()
            },
        )
        .unwrap()
        .n();
        assert!(real < full);
    }
}
