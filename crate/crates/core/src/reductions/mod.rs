//! Gadget reductions from graph t-colouring to k-dipath t-colouring.
//!
//! - [`build_h_kt`] handles `t > k >= 3` and yields an acyclic instance.
//! - [`build_g_prime`] handles `t = k >= 3` by replacing each edge with the cycle gadget
//!   from [`build_f_gadget`].
//!
//! Every output carries a [`GadgetCertificate`] naming the role and origin of each
//! vertex and arc.

use serde::Serialize;

use crate::colouring::{for_each_kdipath_colouring, is_kdipath_colouring_by_paths, Colouring};
use crate::error::{Error, Result};
use crate::graph::{GraphJson, OrientedGraph, SimpleGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GadgetKind {
    #[serde(rename = "H_kt")]
    HKt,
    #[serde(rename = "F_replacement")]
    FReplacement,
}

/// Where a gadget vertex or arc comes from in the source graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Vertex(usize),
    Edge([usize; 2]),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexRole {
    pub v: usize,
    pub role: String,
    pub source: Option<Source>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArcRole {
    pub arc: [usize; 2],
    pub role: &'static str,
    pub source: Option<Source>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub k: usize,
    pub t: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GadgetCertificate {
    pub kind: GadgetKind,
    pub params: Params,
    /// One entry per instance vertex, indexed by vertex id.
    pub roles: Vec<VertexRole>,
    pub arcs: Vec<ArcRole>,
}

impl GadgetCertificate {
    /// Vertices with the given role and source, ascending.
    pub fn find(&self, role: &str, source: Source) -> Vec<usize> {
        self.roles
            .iter()
            .filter(|r| r.role == role && r.source == Some(source))
            .map(|r| r.v)
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct ReductionOutput {
    pub instance: OrientedGraph,
    pub certificate: GadgetCertificate,
}

#[derive(Serialize)]
struct OutputJson<'a> {
    #[serde(flatten)]
    graph: GraphJson,
    certificate: &'a GadgetCertificate,
}

impl ReductionOutput {
    /// Standard graph JSON with an extra `"certificate"` object.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&OutputJson {
            graph: self.instance.to_json(),
            certificate: &self.certificate,
        })
        .expect("reduction json")
    }
}

struct Builder {
    roles: Vec<VertexRole>,
    arcs: Vec<ArcRole>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            roles: Vec::new(),
            arcs: Vec::new(),
        }
    }

    fn vertex(&mut self, role: impl Into<String>, source: Option<Source>) -> usize {
        let v = self.roles.len();
        self.roles.push(VertexRole {
            v,
            role: role.into(),
            source,
        });
        v
    }

    fn arc(&mut self, u: usize, v: usize, role: &'static str, source: Option<Source>) {
        self.arcs.push(ArcRole {
            arc: [u, v],
            role,
            source,
        });
    }

    fn finish(self, kind: GadgetKind, k: usize, t: usize) -> ReductionOutput {
        let instance = OrientedGraph::new(self.roles.len(), self.arcs.iter().map(|a| (a.arc[0], a.arc[1])))
            .expect("gadget is oriented");
        ReductionOutput {
            instance,
            certificate: GadgetCertificate {
                kind,
                params: Params { k, t },
                roles: self.roles,
                arcs: self.arcs,
            },
        }
    }
}

/// Orients every edge from its smaller to its larger endpoint.
pub fn acyclic_orientation(g: &SimpleGraph) -> OrientedGraph {
    OrientedGraph::new(g.n(), g.edges().collect::<Vec<_>>()).expect("id order orientation")
}

/// The acyclic gadget for `t > k >= 3`: `g` is t-colourable iff the output has a
/// k-dipath t-colouring.
///
/// Each source vertex `v` gets a block of `t + 1` consecutive ids: `v_in`, `v_out`,
/// the transitive tournament `s_v = T_0, ..., T_{t-k} = t_v`, then `v'_1..v'_{k-2}`.
/// Arcs: the tournament, the path `t_v -> v'_1 -> ... -> v'_{k-2} -> v_in`,
/// `v_out -> s_v`, and `u_out -> v_in` for each edge `u < v`.
pub fn build_h_kt(g: &SimpleGraph, k: usize, t: usize) -> Result<ReductionOutput> {
    if k < 3 || t <= k {
        return Err(Error::input(format!("H_kt needs t > k >= 3, got k = {k}, t = {t}")));
    }
    let mut b = Builder::new();
    let block = t + 1;
    let tour = t - k + 1;
    for v in 0..g.n() {
        let src = Some(Source::Vertex(v));
        let vin = b.vertex("v_in", src);
        let vout = b.vertex("v_out", src);
        let ts: Vec<usize> = (0..tour)
            .map(|i| {
                let role = match i {
                    0 => "s_v",
                    i if i == tour - 1 => "t_v",
                    _ => "tournament",
                };
                b.vertex(role, src)
            })
            .collect();
        let chain: Vec<usize> = (1..=k - 2).map(|i| b.vertex(format!("v'_{i}"), src)).collect();
        for i in 0..tour {
            for j in i + 1..tour {
                b.arc(ts[i], ts[j], "tournament", src);
            }
        }
        let mut prev = ts[tour - 1];
        for &c in chain.iter().chain(std::iter::once(&vin)) {
            b.arc(prev, c, "chain", src);
            prev = c;
        }
        b.arc(vout, ts[0], "out_to_source", src);
    }
    for (u, v) in g.edges() {
        b.arc(u * block + 1, v * block, "edge", Some(Source::Edge([u, v])));
    }
    Ok(b.finish(GadgetKind::HKt, k, t))
}

/// Acyclic, every `v_out` a source and every `v_in` a sink.
pub fn h_kt_postconditions(out: &ReductionOutput) -> bool {
    let g = &out.instance;
    crate::graph::directed_girth(g).is_infinite()
        && out.certificate.roles.iter().all(|r| match r.role.as_str() {
            "v_out" => g.in_degree(r.v) == 0,
            "v_in" => g.out_degree(r.v) == 0,
            _ => true,
        })
}

/// For every source vertex, the two t-vertex k-dipath cliques of its block:
/// tournament + chain + `v_in`, and `v_out` + tournament + chain.
pub fn h_kt_cliques(out: &ReductionOutput) -> Result<Vec<[Vec<usize>; 2]>> {
    if out.certificate.kind != GadgetKind::HKt {
        return Err(Error::input("not an H_kt gadget"));
    }
    let mut sources: Vec<usize> = out
        .certificate
        .roles
        .iter()
        .filter_map(|r| match r.source {
            Some(Source::Vertex(v)) => Some(v),
            _ => None,
        })
        .collect();
    sources.dedup();
    Ok(sources
        .into_iter()
        .map(|v| {
            let inner: Vec<usize> = out
                .certificate
                .roles
                .iter()
                .filter(|r| r.source == Some(Source::Vertex(v)) && !r.role.starts_with("v_"))
                .map(|r| r.v)
                .collect();
            let mut a = inner.clone();
            a.extend(out.certificate.find("v_in", Source::Vertex(v)));
            let mut b = inner;
            b.extend(out.certificate.find("v_out", Source::Vertex(v)));
            a.sort_unstable();
            b.sort_unstable();
            [a, b]
        })
        .collect())
}

/// Whether `c(v_out) = c(v_in)` for every source vertex. `c` must be a valid
/// k-dipath colouring of the gadget.
pub fn check_vout_vin_forcing(out: &ReductionOutput, c: &Colouring) -> Result<bool> {
    if out.certificate.kind != GadgetKind::HKt {
        return Err(Error::input("not an H_kt gadget"));
    }
    if c.len() != out.instance.n() {
        return Err(Error::input(format!(
            "colouring has {} entries, gadget has {} vertices",
            c.len(),
            out.instance.n()
        )));
    }
    if !is_kdipath_colouring_by_paths(&out.instance, out.certificate.params.k, c)? {
        return Err(Error::input("not a valid k-dipath colouring of the gadget"));
    }
    let roles = &out.certificate.roles;
    Ok(roles.iter().filter(|r| r.role == "v_in").all(|r| {
        let vout = out.certificate.find("v_out", r.source.expect("v_in has a source"));
        vout.iter().all(|&w| c.colour(w) == c.colour(r.v))
    }))
}

fn check_f_params(t: usize) -> Result<()> {
    if t < 3 {
        return Err(Error::input(format!("F gadget needs t = k >= 3, got t = {t}")));
    }
    Ok(())
}

/// The directed t-cycle `v_0 -> ... -> v_{t-1} -> v_0` plus paths `x_0 -> x_1 -> v_1`
/// and `y_0 -> y_1 -> v_2`. Ids: `v_i = i`, then `x_0, x_1, y_0, y_1`.
pub fn build_f_gadget(t: usize) -> Result<ReductionOutput> {
    check_f_params(t)?;
    let mut b = Builder::new();
    for i in 0..t {
        b.vertex(format!("v_{i}"), None);
    }
    let [x0, x1, y0, y1] = ["x_0", "x_1", "y_0", "y_1"].map(|r| b.vertex(r, None));
    for i in 0..t {
        b.arc(i, (i + 1) % t, "cycle", None);
    }
    b.arc(x0, x1, "x_path", None);
    b.arc(x1, 1, "x_path", None);
    b.arc(y0, y1, "y_path", None);
    b.arc(y1, 2, "y_path", None);
    Ok(b.finish(GadgetKind::FReplacement, t, t))
}

/// Replaces each edge `x < y` of `g` by a copy of the F gadget with `x_0 = x` and
/// `y_0 = y`. Original vertices keep their ids; each edge, in sorted order, then adds
/// `v_0..v_{t-1}, x_1, y_1`.
pub fn build_g_prime(g: &SimpleGraph, t: usize) -> Result<ReductionOutput> {
    check_f_params(t)?;
    let mut b = Builder::new();
    for v in 0..g.n() {
        b.vertex("original", Some(Source::Vertex(v)));
    }
    for (x, y) in g.edges() {
        let src = Some(Source::Edge([x, y]));
        let cyc: Vec<usize> = (0..t).map(|i| b.vertex(format!("v_{i}"), src)).collect();
        let x1 = b.vertex("x_1", src);
        let y1 = b.vertex("y_1", src);
        for i in 0..t {
            b.arc(cyc[i], cyc[(i + 1) % t], "cycle", src);
        }
        b.arc(x, x1, "x_path", src);
        b.arc(x1, cyc[1], "x_path", src);
        b.arc(y, y1, "y_path", src);
        b.arc(y1, cyc[2], "y_path", src);
    }
    Ok(b.finish(GadgetKind::FReplacement, t, t))
}

/// Outcome of enumerating every t-dipath t-colouring of the F gadget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FForcingReport {
    pub t: usize,
    pub colourings: u64,
    /// `c(x_0) = c(v_0)` and `c(y_0) = c(v_1)` in every colouring.
    pub a_same_colours: bool,
    /// `c(x_0) != c(y_0)` in every colouring.
    pub b_distinct_ends: bool,
    /// Every ordered pair of distinct colours occurs on `(x_0, y_0)`.
    pub c_all_pairs_extend: bool,
    /// Ordered pairs `(c(x_0), c(y_0))` with no extension.
    pub missing_pairs: Vec<(usize, usize)>,
}

impl FForcingReport {
    pub fn holds(&self) -> bool {
        self.a_same_colours && self.b_distinct_ends && self.c_all_pairs_extend
    }
}

pub fn forcing_properties_f(t: usize) -> Result<FForcingReport> {
    let f = build_f_gadget(t)?;
    let (x0, y0) = (t, t + 2);
    let mut a = true;
    let mut b = true;
    let mut seen = vec![false; (t + 1) * (t + 1)];
    let colourings = for_each_kdipath_colouring(&f.instance, t, t, |c| {
        a &= c.colour(x0) == c.colour(0) && c.colour(y0) == c.colour(1);
        b &= c.colour(x0) != c.colour(y0);
        seen[c.colour(x0) * (t + 1) + c.colour(y0)] = true;
    })?;
    let missing_pairs: Vec<(usize, usize)> = (1..=t)
        .flat_map(|p| (1..=t).map(move |q| (p, q)))
        .filter(|&(p, q)| p != q && !seen[p * (t + 1) + q])
        .collect();
    Ok(FForcingReport {
        t,
        colourings,
        a_same_colours: a,
        b_distinct_ends: b,
        c_all_pairs_extend: missing_pairs.is_empty(),
        missing_pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::{brute_force_chi_kdipath, chi_kdipath, Mode};
    use crate::graph::{directed_girth, is_kdipath_clique, transitive_tournament, Distance};
    use crate::DEFAULT_NODE_BUDGET as B;

    fn path3() -> SimpleGraph {
        SimpleGraph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn orientation() {
        assert_eq!(acyclic_orientation(&SimpleGraph::complete(3)), transitive_tournament(3));
        assert_eq!(acyclic_orientation(&SimpleGraph::new(3, []).unwrap()).arc_count(), 0);
        let p: Vec<_> = acyclic_orientation(&path3()).arcs().collect();
        assert_eq!(p, vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn h_kt_shape() {
        let single = build_h_kt(&SimpleGraph::new(1, []).unwrap(), 3, 4).unwrap();
        assert_eq!(single.instance.n(), 5);
        assert_eq!(brute_force_chi_kdipath(&single.instance, 3).unwrap(), 4);
        assert!(h_kt_postconditions(&single));
        let k5 = build_h_kt(&SimpleGraph::complete(5), 3, 4).unwrap();
        assert_eq!(k5.instance.n(), 25);
        assert!(h_kt_postconditions(&k5));
        assert!(chi_kdipath(&k5.instance, 3, Mode::Exact, B).unwrap().chi > 4);
        let cert = &k5.certificate;
        assert_eq!(cert.roles.len(), 25);
        assert_eq!(cert.arcs.len(), k5.instance.arc_count());
        assert_eq!(cert.find("v_out", Source::Vertex(2)), vec![11]);
        assert!(matches!(build_h_kt(&path3(), 3, 3), Err(Error::Input(_))));
        assert!(matches!(build_h_kt(&path3(), 2, 4), Err(Error::Input(_))));
    }

    #[test]
    fn h_kt_cliques_have_small_weak_diameter() {
        for (k, t) in [(3, 4), (3, 5), (4, 6)] {
            let out = build_h_kt(&path3(), k, t).unwrap();
            for [a, b] in h_kt_cliques(&out).unwrap() {
                assert_eq!(a.len(), t);
                assert_eq!(b.len(), t);
                assert!(is_kdipath_clique(&out.instance.induced(&a), k).unwrap());
                assert!(is_kdipath_clique(&out.instance.induced(&b), k).unwrap());
            }
        }
    }

    #[test]
    fn forcing_on_small_gadgets() {
        for g in [SimpleGraph::new(1, []).unwrap(), SimpleGraph::complete(2)] {
            let out = build_h_kt(&g, 3, 4).unwrap();
            let mut all = true;
            let count = for_each_kdipath_colouring(&out.instance, 3, 4, |c| {
                all &= check_vout_vin_forcing(&out, c).unwrap();
            })
            .unwrap();
            assert!(count > 0);
            assert!(all);
        }
        let out = build_h_kt(&SimpleGraph::new(1, []).unwrap(), 3, 4).unwrap();
        // v_in = 0 and v_out = 1 differ, and the tournament repeats a colour
        let bad = Colouring::new(4, vec![1, 2, 3, 3, 4]).unwrap();
        assert!(matches!(check_vout_vin_forcing(&out, &bad), Err(Error::Input(_))));
    }

    #[test]
    fn f_gadget_shape() {
        for t in [3, 4] {
            let f = build_f_gadget(t).unwrap();
            assert_eq!(f.instance.n(), t + 4);
            assert_eq!(f.instance.arc_count(), t + 4);
            assert_eq!(directed_girth(&f.instance), Distance::Finite(t));
        }
        assert!(build_f_gadget(2).is_err());
    }

    #[test]
    fn g_prime_shape() {
        assert_eq!(build_g_prime(&SimpleGraph::complete(2), 3).unwrap().instance.n(), 7);
        let p = build_g_prime(&path3(), 3).unwrap();
        assert_eq!(p.instance.n(), 13);
        for v in 0..3 {
            assert_eq!(p.instance.in_degree(v), 0);
        }
        assert_eq!(directed_girth(&p.instance), Distance::Finite(3));
        let json: serde_json::Value = serde_json::from_str(&p.to_json_string()).unwrap();
        assert_eq!(json["certificate"]["kind"], "F_replacement");
        assert_eq!(json["certificate"]["roles"][3]["source"]["edge"][1], 1);
    }

    #[test]
    fn f_gadget_admits_no_colouring() {
        // x_1 reaches every cycle vertex within t arcs, and the cycle uses all t colours
        for t in [3, 4] {
            let r = forcing_properties_f(t).unwrap();
            assert_eq!(r.colourings, 0);
            assert!(r.a_same_colours && r.b_distinct_ends);
            assert!(!r.c_all_pairs_extend);
            assert_eq!(r.missing_pairs.len(), t * (t - 1));
        }
    }
}
