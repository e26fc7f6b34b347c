//! Colouring matrices: which colours sit at each in/out path length around a vertex.
//!
//! Rows run over `-(k-1)..=(k-1)`, columns over colours `1..=t`. A column is stored
//! as a bit mask with row `r` at bit `r + k - 1`.

use std::fmt;

use super::{is_kdipath_colouring, Colouring};
use crate::error::{Error, Result};
use crate::graph::{directed_girth, Distance, OrientedGraph};

/// Longest `k` for which `2k - 1` rows fit in a column mask.
pub const MAX_K: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColouringMatrix {
    k: usize,
    cols: Vec<u32>,
}

#[inline]
fn bit(k: usize, row: i32) -> u32 {
    1 << (row + k as i32 - 1)
}

/// Checks one column against the window conditions. `diagonal` says whether this is
/// the column of the vertex's own colour.
fn column_ok(k: usize, mask: u32, diagonal: bool) -> bool {
    let ki = k as i32;
    let has = |row: i32| mask & bit(k, row) != 0;
    if diagonal {
        return mask == bit(k, 0);
    }
    if has(0) {
        return false;
    }
    for p in 1..ki {
        // a colour at in-distance p cannot recur at out-distance <= k - p
        if has(-p) && (1..=(ki - p).min(ki - 1)).any(has) {
            return false;
        }
        if has(p) && (1..=(ki - p).min(ki - 1)).any(|l| has(-l)) {
            return false;
        }
    }
    true
}

/// All masks a non-diagonal column may take, ascending.
pub fn consistent_column_patterns(k: usize) -> Vec<u32> {
    assert!((2..=MAX_K).contains(&k), "k out of range");
    let rows = 2 * k - 1;
    (0u32..1 << rows)
        .filter(|&m| column_ok(k, m, false))
        .collect()
}

impl ColouringMatrix {
    /// Builds from column masks, enforcing the consistency conditions.
    pub fn from_columns(k: usize, cols: Vec<u32>) -> Result<Self> {
        if !(2..=MAX_K).contains(&k) {
            return Err(Error::input(format!("matrix k must be in 2..={MAX_K}, got {k}")));
        }
        if cols.is_empty() {
            return Err(Error::input("matrix needs at least one column"));
        }
        let rows = 2 * k - 1;
        if let Some(j) = cols.iter().position(|&c| c >> rows != 0) {
            return Err(Error::input(format!("column {} has bits outside the row range", j + 1)));
        }
        let diag: Vec<usize> = cols
            .iter()
            .enumerate()
            .filter(|(_, &c)| c & bit(k, 0) != 0)
            .map(|(j, _)| j)
            .collect();
        if diag.len() != 1 {
            return Err(Error::input(format!(
                "row 0 must hold exactly one 1, found {}",
                diag.len()
            )));
        }
        for (j, &c) in cols.iter().enumerate() {
            if !column_ok(k, c, j == diag[0]) {
                return Err(Error::input(format!(
                    "column {} violates the distance window conditions",
                    j + 1
                )));
            }
        }
        Ok(ColouringMatrix { k, cols })
    }

    /// Builds from the positions `(row, colour)` of the 1 entries.
    pub fn new(k: usize, t: usize, ones: impl IntoIterator<Item = (i32, usize)>) -> Result<Self> {
        let mut cols = vec![0u32; t];
        let ki = k as i32;
        for (row, col) in ones {
            if row.abs() >= ki || col == 0 || col > t {
                return Err(Error::input(format!("entry ({row},{col}) outside the matrix")));
            }
            cols[col - 1] |= bit(k, row);
        }
        Self::from_columns(k, cols)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn t(&self) -> usize {
        self.cols.len()
    }

    pub fn rows(&self) -> std::ops::RangeInclusive<i32> {
        let r = self.k as i32 - 1;
        -r..=r
    }

    /// Entry at `row` and 1-based colour `col`.
    #[inline]
    pub fn get(&self, row: i32, col: usize) -> bool {
        self.cols[col - 1] & bit(self.k, row) != 0
    }

    pub fn column(&self, col: usize) -> u32 {
        self.cols[col - 1]
    }

    pub fn columns(&self) -> &[u32] {
        &self.cols
    }

    /// The colour of the vertex itself.
    pub fn diagonal(&self) -> usize {
        self.cols
            .iter()
            .position(|&c| c & bit(self.k, 0) != 0)
            .expect("validated matrix has a diagonal")
            + 1
    }

    /// The same matrix with an all-zero column appended (colour `t + 1` unused).
    pub fn extended(&self) -> ColouringMatrix {
        let mut cols = self.cols.clone();
        cols.push(0);
        ColouringMatrix { k: self.k, cols }
    }

    /// Table layout: a header of colours, then one line per row index.
    pub fn to_table(&self) -> String {
        let w = self.t().to_string().len();
        let rw = (self.k as i32 - 1).to_string().len() + 1;
        let mut s = format!("{:>rw$} |", "");
        for j in 1..=self.t() {
            s.push_str(&format!(" {j:>w$}"));
        }
        s.push('\n');
        s.push_str(&"-".repeat(rw + 1));
        s.push('+');
        s.push_str(&"-".repeat(self.t() * (w + 1)));
        s.push('\n');
        for r in self.rows() {
            s.push_str(&format!("{r:>rw$} |"));
            for j in 1..=self.t() {
                s.push_str(&format!(" {:>w$}", u8::from(self.get(r, j))));
            }
            s.push('\n');
        }
        s
    }

    /// Parses [`to_table`](Self::to_table) output. Separator lines are optional.
    pub fn parse_table(text: &str) -> Result<Self> {
        let mut header: Option<usize> = None;
        let mut rows: Vec<(i32, Vec<bool>)> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || !line.contains('|') {
                continue;
            }
            let (left, right) = line.split_once('|').unwrap();
            let left = left.trim();
            if left.is_empty() {
                header = Some(right.split_whitespace().count());
                continue;
            }
            let row: i32 = left
                .parse()
                .map_err(|_| Error::input(format!("bad row index {left:?}")))?;
            let vals = right
                .split_whitespace()
                .map(|v| match v {
                    "0" => Ok(false),
                    "1" => Ok(true),
                    _ => Err(Error::input(format!("matrix entries must be 0 or 1, got {v:?}"))),
                })
                .collect::<Result<Vec<bool>>>()?;
            rows.push((row, vals));
        }
        if rows.len() % 2 == 0 {
            return Err(Error::input("a colouring matrix has an odd number of rows"));
        }
        let k = rows.len().div_ceil(2);
        let t = header.unwrap_or_else(|| rows[0].1.len());
        let mut ones = Vec::new();
        for (i, (row, vals)) in rows.iter().enumerate() {
            if *row != i as i32 - (k as i32 - 1) {
                return Err(Error::input(format!("rows out of order at {row}")));
            }
            if vals.len() != t {
                return Err(Error::input(format!("row {row} has {} entries, expected {t}", vals.len())));
            }
            ones.extend(vals.iter().enumerate().filter(|(_, &b)| b).map(|(j, _)| (*row, j + 1)));
        }
        Self::new(k, t, ones)
    }
}

impl fmt::Display for ColouringMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_table())
    }
}

/// Endpoints reachable from `x` by simple directed paths of each length `1..max_len`
/// (`forward`), or reaching `x` (`!forward`). Result index = path length.
fn path_endpoints(g: &OrientedGraph, x: usize, max_len: usize, forward: bool) -> Vec<Vec<usize>> {
    fn go(
        g: &OrientedGraph,
        cur: usize,
        len: usize,
        max_len: usize,
        forward: bool,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        if len == max_len {
            return;
        }
        let next = if forward {
            g.out_neighbours(cur)
        } else {
            g.in_neighbours(cur)
        };
        for &w in next {
            if on_path[w] {
                continue;
            }
            out[len + 1].push(w);
            on_path[w] = true;
            go(g, w, len + 1, max_len, forward, on_path, out);
            on_path[w] = false;
        }
    }
    let mut out = vec![Vec::new(); max_len + 1];
    let mut on_path = vec![false; g.n()];
    on_path[x] = true;
    go(g, x, 0, max_len, forward, &mut on_path, &mut out);
    out
}

/// The k-dipath colouring matrix of `x` with respect to `c`.
///
/// Requires `c` to be a valid k-dipath colouring and `g` to have directed girth at
/// least `k + 1`; the result is re-validated by the matrix constructor.
pub fn colouring_matrix(g: &OrientedGraph, k: usize, c: &Colouring, x: usize) -> Result<ColouringMatrix> {
    g.check_vertex(x)?;
    if k < 2 {
        return Err(Error::input(format!("colouring matrices need k >= 2, got {k}")));
    }
    if !is_kdipath_colouring(g, k, c)? {
        return Err(Error::input("not a k-dipath colouring"));
    }
    let girth = directed_girth(g);
    if girth <= Distance::Finite(k) {
        return Err(Error::precondition(format!(
            "directed girth {girth} is below k + 1 = {}",
            k + 1
        )));
    }
    let mut ones = vec![(0, c.colour(x))];
    for (len, ends) in path_endpoints(g, x, k - 1, true).iter().enumerate().skip(1) {
        ones.extend(ends.iter().map(|&y| (len as i32, c.colour(y))));
    }
    for (len, ends) in path_endpoints(g, x, k - 1, false).iter().enumerate().skip(1) {
        ones.extend(ends.iter().map(|&y| (-(len as i32), c.colour(y))));
    }
    ColouringMatrix::new(k, c.t(), ones)
}

#[cfg(test)]
mod tests {
    use super::*;

    const PRINTED: &str = concat!(
        "   | 1 2 3 4\n",
        "---+--------\n-2 | 0 1 0 0\n-1 | 1 1 0 0\n 0 | 0 0 1 0\n 1 | 0 0 0 1\n 2 | 0 0 0 0\n"
    );

    #[test]
    fn printed_example_matrix_is_consistent() {
        let m = ColouringMatrix::new(3, 4, [(-2, 2), (-1, 1), (-1, 2), (0, 3), (1, 4)]).unwrap();
        assert_eq!(m.diagonal(), 3);
        assert_eq!(m.to_table(), PRINTED);
        assert_eq!(ColouringMatrix::parse_table(PRINTED).unwrap(), m);
    }

    #[test]
    fn constructor_rejects_inconsistent_matrices() {
        // two 1s in row 0
        assert!(ColouringMatrix::new(2, 2, [(0, 1), (0, 2)]).is_err());
        // diagonal column with another 1
        assert!(ColouringMatrix::new(2, 2, [(0, 1), (1, 1)]).is_err());
        // colour at in-distance 1 and out-distance 1
        assert!(ColouringMatrix::new(2, 2, [(0, 1), (-1, 2), (1, 2)]).is_err());
        // k = 3: in-distance 2 forbids out-distance 1 but allows out-distance 2
        assert!(ColouringMatrix::new(3, 2, [(0, 1), (-2, 2), (1, 2)]).is_err());
        assert!(ColouringMatrix::new(3, 2, [(0, 1), (-2, 2), (2, 2)]).is_ok());
        // in-distance 1 forbids out-distance 2 at k = 3
        assert!(ColouringMatrix::new(3, 2, [(0, 1), (-1, 2), (2, 2)]).is_err());
    }

    #[test]
    fn pattern_counts() {
        // k = 2: rows (-1, 1) may be 00, 10, 01
        assert_eq!(consistent_column_patterns(2).len(), 3);
        assert_eq!(consistent_column_patterns(3).len(), 8);
    }

    #[test]
    fn matrices_of_small_colourings() {
        let single = OrientedGraph::empty(1);
        let c = Colouring::new(4, vec![2]).unwrap();
        let m = colouring_matrix(&single, 3, &c, 0).unwrap();
        assert_eq!(m, ColouringMatrix::new(3, 4, [(0, 2)]).unwrap());

        let arc = OrientedGraph::new(2, [(0, 1)]).unwrap();
        let c = Colouring::new(2, vec![1, 2]).unwrap();
        let m = colouring_matrix(&arc, 2, &c, 0).unwrap();
        assert_eq!(m, ColouringMatrix::new(2, 2, [(0, 1), (1, 2)]).unwrap());
    }

    #[test]
    fn matrix_preconditions() {
        let c3 = crate::graph::directed_cycle(3);
        let c = Colouring::new(3, vec![1, 2, 3]).unwrap();
        assert!(matches!(colouring_matrix(&c3, 3, &c, 0), Err(Error::Precondition(_))));
        let arc = OrientedGraph::new(2, [(0, 1)]).unwrap();
        let bad = Colouring::new(1, vec![1, 1]).unwrap();
        assert!(matches!(colouring_matrix(&arc, 2, &bad, 0), Err(Error::Input(_))));
    }
}
