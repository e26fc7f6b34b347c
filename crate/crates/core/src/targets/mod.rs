//! Universal homomorphism targets.
//!
//! - [`build_matrix_target`]: `G_{k,t}`, whose vertices are colouring matrices; an
//!   oriented graph of directed girth at least `k + 1` maps to it iff it has a
//!   k-dipath t-colouring.
//! - [`build_sherk_target`]: the tuple target for 2-dipath t-colouring.
//! - [`build_order5_tournament`]: a directed 3-cycle with a universal source and sink.

mod matrix_target;
mod sherk;

use serde::Serialize;

use crate::colouring::ColouringMatrix;
use crate::graph::OrientedGraph;

pub use matrix_target::{
    build_matrix_target, diagonal_colouring, enumerate_matrices, matrix_edge, matrix_edge_with,
    matrix_target_size, realizable_witness, EdgeRule, MatrixTargetOptions,
    DEFAULT_MAX_TARGET_VERTICES,
};
pub use sherk::{build_order5_tournament, build_sherk_target, SherkTuple};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexMeaning {
    Matrix(Vec<ColouringMatrix>),
    Sherk(Vec<SherkTuple>),
}

/// A target graph plus what each of its vertices stands for.
#[derive(Clone, Debug)]
pub struct TargetGraph {
    pub graph: OrientedGraph,
    pub meaning: VertexMeaning,
    /// `k` for matrix targets; the tuple target is the `k = 2` model.
    pub k: usize,
    pub t: usize,
}

#[derive(Serialize)]
struct MeaningEntry {
    id: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrix: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tuple: Option<String>,
}

#[derive(Serialize)]
struct MeaningFile {
    kind: &'static str,
    k: usize,
    t: usize,
    vertices: Vec<MeaningEntry>,
}

impl TargetGraph {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn matrices(&self) -> Option<&[ColouringMatrix]> {
        match &self.meaning {
            VertexMeaning::Matrix(m) => Some(m),
            VertexMeaning::Sherk(_) => None,
        }
    }

    /// Side file mapping vertex ids to matrices (table text) or tuples.
    pub fn meaning_json(&self) -> String {
        let (kind, vertices) = match &self.meaning {
            VertexMeaning::Matrix(ms) => (
                "matrix",
                ms.iter()
                    .enumerate()
                    .map(|(id, m)| MeaningEntry {
                        id,
                        matrix: Some(m.to_table()),
                        tuple: None,
                    })
                    .collect(),
            ),
            VertexMeaning::Sherk(ts) => (
                "sherk",
                ts.iter()
                    .enumerate()
                    .map(|(id, s)| MeaningEntry {
                        id,
                        matrix: None,
                        tuple: Some(s.to_string()),
                    })
                    .collect(),
            ),
        };
        serde_json::to_string_pretty(&MeaningFile {
            kind,
            k: self.k,
            t: self.t,
            vertices,
        })
        .expect("meaning json")
    }
}
