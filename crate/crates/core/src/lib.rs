//! k-dipath colouring of oriented graphs.
//!
//! A k-dipath t-colouring assigns t colours to the vertices of an oriented
//! graph so that any two vertices joined by a directed path of length at most
//! k receive different colours. This crate provides:
//!
//! - [`graph`]: the oriented graph type, metric primitives (distance, weak
//!   distance, directed girth, the power graph `G^k`) and generators,
//! - [`colouring`]: validity checks, exact and greedy k-dipath chromatic
//!   numbers, brute-force oracles and colouring matrices,
//! - [`targets`]: the matrix targets `G_{k,t}`, the 2-dipath tuple targets and
//!   the small tournaments used for oriented colouring bounds,
//! - [`hom`]: homomorphism search, cores, isomorphism and oriented chromatic
//!   numbers,
//! - [`reductions`]: hardness gadgets from simple graphs,
//! - [`verify`]: executable structural checks shared by the CLI and the test suite.

pub mod bits;
pub mod colouring;
pub mod error;
pub mod graph;
pub mod hom;
pub mod reductions;
pub mod targets;
pub mod verify;

pub use colouring::{ChromaticResult, Colouring, ColouringMatrix, Method};
pub use error::{Error, Result};
pub use graph::{Distance, OrientedGraph, SimpleGraph};
pub use hom::{HomMap, HomResult};

/// Default node budget for exhaustive searches.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;
