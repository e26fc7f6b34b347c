use std::fmt;

use super::{TargetGraph, VertexMeaning};
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;

/// Largest `t` accepted by [`build_sherk_target`] (`t * 2^(t-1)` vertices).
pub const MAX_SHERK_T: usize = 12;

/// `(u0; u1, .., ut)`: position `u0` holds the placeholder, the others a bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SherkTuple {
    t: usize,
    u0: usize,
    // bit i-1 holds u_i; bit u0-1 is always clear
    bits: u32,
}

impl SherkTuple {
    pub fn new(t: usize, u0: usize, bits: &[Option<bool>]) -> Result<Self> {
        if u0 == 0 || u0 > t || bits.len() != t {
            return Err(Error::input("tuple needs 1 <= u0 <= t and t positions"));
        }
        let mut mask = 0;
        for (i, b) in bits.iter().enumerate() {
            match (i + 1 == u0, b) {
                (true, None) => {}
                (false, Some(true)) => mask |= 1 << i,
                (false, Some(false)) => {}
                _ => return Err(Error::input(format!("placeholder must sit exactly at position {u0}"))),
            }
        }
        Ok(SherkTuple { t, u0, bits: mask })
    }

    pub fn u0(&self) -> usize {
        self.u0
    }

    /// `u_i` for `i != u0`; `None` at the placeholder.
    pub fn entry(&self, i: usize) -> Option<bool> {
        (i != self.u0).then(|| self.bits >> (i - 1) & 1 == 1)
    }

    /// Arc `self -> x` iff `self_{x0} = 1` and `x_{self0} = 0`.
    pub fn arc_to(&self, x: &SherkTuple) -> bool {
        self.entry(x.u0) == Some(true) && x.entry(self.u0) == Some(false)
    }
}

impl fmt::Display for SherkTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.u0)?;
        for i in 1..=self.t {
            let sep = if i == 1 { " " } else { "," };
            match self.entry(i) {
                None => write!(f, "{sep}.")?,
                Some(b) => write!(f, "{sep}{}", u8::from(b))?,
            }
        }
        write!(f, ")")
    }
}

/// The 2-dipath target on all `t * 2^(t-1)` tuples, `u0` ascending then bits ascending.
pub fn build_sherk_target(t: usize) -> Result<TargetGraph> {
    if t == 0 || t > MAX_SHERK_T {
        return Err(Error::Resource(format!(
            "tuple target supports 1 <= t <= {MAX_SHERK_T}, got {t}"
        )));
    }
    let mut tuples = Vec::new();
    for u0 in 1..=t {
        let free: Vec<usize> = (0..t).filter(|&i| i + 1 != u0).collect();
        for m in 0u32..1 << free.len() {
            let bits = free
                .iter()
                .enumerate()
                .filter(|(b, _)| m >> b & 1 == 1)
                .fold(0, |acc, (_, &i)| acc | 1 << i);
            tuples.push(SherkTuple { t, u0, bits });
        }
    }
    let mut arcs = Vec::new();
    for (a, u) in tuples.iter().enumerate() {
        for (b, x) in tuples.iter().enumerate() {
            if u.arc_to(x) {
                arcs.push((a, b));
            }
        }
    }
    let graph = OrientedGraph::new(tuples.len(), arcs)?;
    Ok(TargetGraph {
        graph,
        meaning: VertexMeaning::Sherk(tuples),
        k: 2,
        t,
    })
}

/// Vertex 0 beats everyone, `1 -> 2 -> 3 -> 1`, and everyone beats vertex 4.
pub fn build_order5_tournament() -> OrientedGraph {
    let mut arcs = vec![(1, 2), (2, 3), (3, 1)];
    arcs.extend((1..5).map(|v| (0, v)));
    arcs.extend((1..4).map(|v| (v, 4)));
    OrientedGraph::new(5, arcs).expect("order-5 tournament")
}
