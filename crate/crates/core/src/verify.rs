//! Machine checks of the structural results, each against an independent oracle.
//!
//! [`run_suite`] runs a named group of checks and returns one [`Outcome`] per
//! criterion in a fixed order. All randomness derives from [`VerifyConfig::seed`].

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::colouring::{
    brute_force_chi_kdipath, brute_force_colourable, chi_kdipath, for_each_kdipath_colouring,
    is_kdipath_colouring, is_kdipath_colouring_by_paths, kdipath_colourable, Mode,
};
use crate::error::{Error, Result};
use crate::graph::{
    all_oriented_graphs, directed_cycle, directed_girth, is_kdipath_clique,
    longest_directed_path_vertices, oriented_graphs_up_to_iso, random_acyclic, random_oriented,
    random_with_min_girth, simple_graphs_up_to_iso, transitive_tournament, Distance, OrientedGraph,
    SimpleGraph,
};
use crate::hom::{
    are_isomorphic, core_of, find_homomorphism_with, hom_to_transitive_tournament,
    oriented_chromatic_number,
};
use crate::reductions::{
    build_g_prime, build_h_kt, check_vout_vin_forcing, forcing_properties_f, h_kt_cliques,
    h_kt_postconditions,
};
use crate::targets::{
    build_matrix_target, build_order5_tournament, build_sherk_target, diagonal_colouring,
    EdgeRule, MatrixTargetOptions, TargetGraph,
};

/// Largest order for exhaustive enumeration of oriented graphs up to isomorphism.
pub const MAX_EXHAUSTIVE_ORIENTED_N: usize = 5;
/// Largest order for exhaustive enumeration of simple graphs up to isomorphism.
pub const MAX_EXHAUSTIVE_SIMPLE_N: usize = 6;

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// Upper bound on the order of exhaustively enumerated source graphs.
    pub max_n: usize,
    pub seed: u64,
    pub budget: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 5,
            seed: 0,
            budget: crate::DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Girth,
    HomModel,
    Core,
    Reductions,
    Bounds,
    All,
}

impl Suite {
    pub fn criteria(self) -> &'static [u8] {
        match self {
            Suite::Girth => &[1, 2, 11],
            Suite::HomModel => &[3, 4, 6],
            Suite::Core => &[5],
            Suite::Reductions => &[9, 10],
            Suite::Bounds => &[7, 8],
            Suite::All => &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11],
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "girth" => Suite::Girth,
            "hom-model" => Suite::HomModel,
            "core" => Suite::Core,
            "reductions" => Suite::Reductions,
            "bounds" => Suite::Bounds,
            "all" => Suite::All,
            _ => return Err(Error::input(format!("unknown suite {s:?}"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} [{:>2}] {}: {}", self.id, self.name, self.detail)
    }
}

pub fn criterion_name(id: u8) -> &'static str {
    match id {
        1 => "exact solver matches brute force",
        2 => "matrix targets have large girth",
        3 => "diagonal colouring and chi of matrix targets",
        4 => "colourable iff maps to the matrix target",
        5 => "core of matrix target is transitive tournament",
        6 => "target lattice",
        7 => "tuple target maps to order-5 tournament",
        8 => "oriented chromatic number sandwich",
        9 => "H_kt reduction",
        10 => "F gadget reduction",
        11 => "acyclic characterization",
        _ => "unknown",
    }
}

/// Runs one criterion. Errors inside a check are reported as failures.
pub fn run_criterion(id: u8, cfg: &VerifyConfig) -> Outcome {
    let result = match id {
        1 => solver_vs_brute_force(cfg),
        2 => target_girth(cfg),
        3 => target_chromatic_number(cfg),
        4 => hom_model(cfg),
        5 => target_core(cfg),
        6 => target_lattice(cfg),
        7 => tuple_target_into_order5(cfg),
        8 => oriented_sandwich(cfg),
        9 => h_kt_reduction(cfg),
        10 => f_gadget_reduction(cfg),
        11 => acyclic_characterization(cfg),
        _ => Err(Error::input(format!("no criterion {id}"))),
    };
    let (passed, detail) = match result {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    Outcome {
        id,
        name: criterion_name(id),
        passed,
        detail,
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Vec<Outcome> {
    suite.criteria().iter().map(|&id| run_criterion(id, cfg)).collect()
}

type Check = Result<(bool, String)>;

fn rng_for(cfg: &VerifyConfig, criterion: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ criterion)
}

fn target(k: usize, t: usize) -> Result<TargetGraph> {
    build_matrix_target(k, t, MatrixTargetOptions::default())
}

fn exhaustive_oriented(max_n: usize) -> impl Iterator<Item = OrientedGraph> {
    let top = max_n.min(MAX_EXHAUSTIVE_ORIENTED_N);
    (1..=top.min(4))
        .flat_map(all_oriented_graphs)
        .chain((top >= 5).then(|| oriented_graphs_up_to_iso(5)).into_iter().flatten())
}

fn exhaustive_simple(max_n: usize) -> Vec<SimpleGraph> {
    (1..=max_n.min(MAX_EXHAUSTIVE_SIMPLE_N))
        .flat_map(simple_graphs_up_to_iso)
        .collect()
}

/// Exact chi against the exhaustive oracle: every oriented graph on at most 4
/// vertices, one per isomorphism class on 5, and 200 random graphs on at most 8.
pub fn solver_vs_brute_force(cfg: &VerifyConfig) -> Check {
    let mut rng = rng_for(cfg, 1);
    let random: Vec<OrientedGraph> = (0..200)
        .map(|_| random_oriented(rng.gen_range(1..=8), rng.gen_range(0.15..0.85), rng.gen()))
        .collect();
    let mut checked = 0;
    for g in exhaustive_oriented(cfg.max_n).chain(random) {
        for k in [2, 3, 4] {
            let exact = chi_kdipath(&g, k, Mode::Exact, cfg.budget)?;
            let oracle = brute_force_chi_kdipath(&g, k)?;
            if exact.chi != oracle || !is_kdipath_colouring_by_paths(&g, k, &exact.witness)? {
                return Ok((false, format!("k = {k}: exact {} vs oracle {oracle} on {g}", exact.chi)));
            }
            checked += 1;
        }
    }
    Ok((true, format!("{checked} (graph, k) pairs agree")))
}

const GIRTH_PARAMS: [(usize, usize); 6] = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4)];

pub fn target_girth(_cfg: &VerifyConfig) -> Check {
    let mut parts = Vec::new();
    for (k, t) in GIRTH_PARAMS {
        let g = target(k, t)?;
        let girth = directed_girth(&g.graph);
        parts.push(format!("G({k},{t}): n = {}, girth = {girth}", g.n()));
        if girth <= Distance::Finite(k) {
            return Ok((false, parts.join("; ")));
        }
    }
    Ok((true, parts.join("; ")))
}

pub fn target_chromatic_number(cfg: &VerifyConfig) -> Check {
    let mut parts = Vec::new();
    for (k, t) in [(2, 2), (2, 3), (3, 3)] {
        let g = target(k, t)?;
        let valid = is_kdipath_colouring(&g.graph, k, &diagonal_colouring(&g)?)?;
        let chi = chi_kdipath(&g.graph, k, Mode::Exact, cfg.budget)?.chi;
        parts.push(format!("G({k},{t}): diagonal valid = {valid}, chi = {chi}"));
        if !valid || chi != t {
            return Ok((false, parts.join("; ")));
        }
    }
    Ok((true, parts.join("; ")))
}

const HOM_MODEL_PARAMS: [(usize, usize); 4] = [(2, 2), (2, 3), (3, 3), (3, 4)];

/// 500 random graphs of girth at least `k + 1` per parameter pair: brute-force
/// colourability against homomorphism existence, under both edge rules.
pub fn hom_model(cfg: &VerifyConfig) -> Check {
    let mut rng = rng_for(cfg, 4);
    let mut parts = Vec::new();
    let mut ok = true;
    for (k, t) in HOM_MODEL_PARAMS {
        let corrected = target(k, t)?;
        let strict = build_matrix_target(
            k,
            t,
            MatrixTargetOptions {
                rule: EdgeRule::StrictText,
                ..Default::default()
            },
        )?;
        let (mut bad, mut strict_bad, mut yes) = (0, 0, 0);
        for _ in 0..500 {
            let g = random_with_min_girth(
                rng.gen_range(1..=7),
                rng.gen_range(0.1..0.7),
                k + 1,
                rng.gen(),
            );
            let colourable = brute_force_colourable(&g, k, t)?;
            yes += colourable as usize;
            let hom = find_homomorphism_with(&g, &corrected.graph, cfg.budget)?;
            if let Some(phi) = &hom.witness {
                if !phi.is_homomorphism(&g, &corrected.graph) {
                    bad += 1;
                    continue;
                }
            }
            bad += (hom.exists() != colourable) as usize;
            strict_bad += (find_homomorphism_with(&g, &strict.graph, cfg.budget)?.exists() != colourable) as usize;
        }
        ok &= bad == 0;
        parts.push(format!(
            "({k},{t}): {yes}/500 colourable, {bad} discrepancies, strict rule {strict_bad}"
        ));
    }
    Ok((ok, parts.join("; ")))
}

pub fn target_core(cfg: &VerifyConfig) -> Check {
    let mut parts = Vec::new();
    let mut ok = true;
    for (k, t) in [(3, 2), (3, 3)] {
        let g = target(k, t)?;
        let core = core_of(&g.graph, cfg.budget)?;
        let iso = are_isomorphic(&core.graph, &transitive_tournament(t));
        ok &= iso;
        parts.push(format!("G({k},{t}): core has {} vertices, is T_{t} = {iso}", core.graph.n()));
    }
    Ok((ok, parts.join("; ")))
}

pub fn target_lattice(cfg: &VerifyConfig) -> Check {
    let exists = |g: &OrientedGraph, h: &OrientedGraph| {
        find_homomorphism_with(g, h, cfg.budget).map(|r| r.witness.filter(|p| p.is_homomorphism(g, h)).is_some())
    };
    let g22 = target(2, 2)?;
    let g23 = target(2, 3)?;
    let g24 = target(2, 4)?;
    let g34 = target(3, 4)?;
    let mut parts = Vec::new();
    let a = exists(&g22.graph, &g23.graph)?;
    parts.push(format!("G(2,2) -> G(2,3): {a}"));
    let b = !exists(&transitive_tournament(3), &g22.graph)?;
    parts.push(format!("T_3 -/-> G(2,2): {b}"));
    let c = match (exists(&g34.graph, &g24.graph), exists(&g24.graph, &g34.graph)) {
        (Ok(down), Ok(up)) => {
            parts.push(format!("G(3,4) -> G(2,4): {down}; G(2,4) -/-> G(3,4): {}", !up));
            down && !up
        }
        (Err(Error::Budget { .. }), _) | (_, Err(Error::Budget { .. })) => {
            let c3 = directed_cycle(3);
            let into24 = exists(&c3, &g24.graph)?;
            let into34 = exists(&c3, &g34.graph)?;
            parts.push(format!(
                "budget exceeded, C_3 -> G(2,4): {into24}; C_3 -/-> G(3,4): {}",
                !into34
            ));
            into24 && !into34
        }
        (Err(e), _) | (_, Err(e)) => return Err(e),
    };
    Ok((a && b && c, parts.join("; ")))
}

pub fn tuple_target_into_order5(cfg: &VerifyConfig) -> Check {
    let s3 = build_sherk_target(3)?;
    let h = build_order5_tournament();
    let r = find_homomorphism_with(&s3.graph, &h, cfg.budget)?;
    let ok = r.witness.as_ref().is_some_and(|p| p.is_homomorphism(&s3.graph, &h));
    Ok((ok, format!("{}-vertex tuple target -> order-5 tournament: {ok}", s3.n())))
}

/// 100 random graphs on at most 8 vertices with `chi_2 <= 3`:
/// `chi_2 <= chi_o <= 2^chi_2 - 1`.
pub fn oriented_sandwich(cfg: &VerifyConfig) -> Check {
    let mut rng = rng_for(cfg, 8);
    let (mut found, mut attempts, mut max_chi_o) = (0, 0, 0);
    while found < 100 {
        attempts += 1;
        if attempts > 100_000 {
            return Ok((false, format!("only {found} samples with chi_2 <= 3")));
        }
        let g = random_oriented(rng.gen_range(4..=8), rng.gen_range(0.15..0.6), rng.gen());
        let chi2 = chi_kdipath(&g, 2, Mode::Exact, cfg.budget)?.chi;
        if chi2 > 3 {
            continue;
        }
        found += 1;
        let Some(oc) = oriented_chromatic_number(&g, 7, cfg.budget)? else {
            return Ok((false, format!("chi_o > 7 with chi_2 = {chi2} on {g}")));
        };
        max_chi_o = max_chi_o.max(oc.t);
        if oc.t < chi2 || oc.t > (1 << chi2) - 1 || !oc.map.is_homomorphism(&g, &oc.tournament) {
            return Ok((false, format!("chi_2 = {chi2}, chi_o = {} on {g}", oc.t)));
        }
    }
    Ok((true, format!("100 graphs in {attempts} draws, max chi_o = {max_chi_o}")))
}

/// `g` is 4-colourable iff `H_{3,4}(g)` has a 3-dipath 4-colouring, over all simple
/// graphs up to isomorphism; `c(v_out) = c(v_in)` in every colouring of the gadgets
/// of graphs on at most 2 vertices.
pub fn h_kt_reduction(cfg: &VerifyConfig) -> Check {
    let (k, t) = (3, 4);
    let graphs = exhaustive_simple(cfg.max_n);
    let mut mismatches = 0;
    for g in &graphs {
        let out = build_h_kt(g, k, t)?;
        if !h_kt_postconditions(&out) {
            return Ok((false, format!("postconditions fail for {} vertices", g.n())));
        }
        for [a, b] in h_kt_cliques(&out)? {
            if !is_kdipath_clique(&out.instance.induced(&a), k)? || !is_kdipath_clique(&out.instance.induced(&b), k)? {
                return Ok((false, "per-vertex clique with large weak diameter".into()));
            }
        }
        if chi_kdipath(&out.instance, k, Mode::Exact, cfg.budget)?.chi < t {
            return Ok((false, "gadget chi below t".into()));
        }
        let gadget = kdipath_colourable(&out.instance, k, t, cfg.budget)?;
        if let Some(c) = &gadget {
            if !is_kdipath_colouring_by_paths(&out.instance, k, c)? {
                return Ok((false, "invalid gadget witness".into()));
            }
        }
        mismatches += (g.is_colourable(t) != gadget.is_some()) as usize;
    }
    let (mut colourings, mut forced) = (0u64, true);
    for g in exhaustive_simple(2) {
        let out = build_h_kt(&g, k, t)?;
        let mut err = None;
        colourings += for_each_kdipath_colouring(&out.instance, k, t, |c| match check_vout_vin_forcing(&out, c) {
            Ok(f) => forced &= f,
            Err(e) => err = Some(e),
        })?;
        if let Some(e) = err {
            return Err(e);
        }
    }
    let ok = mismatches == 0 && forced && colourings > 0;
    Ok((
        ok,
        format!(
            "{} source graphs, {mismatches} mismatches; forcing holds in all {colourings} colourings of small gadgets: {forced}",
            graphs.len()
        ),
    ))
}

/// Forcing properties of F at `t = k = 3, 4`, then
/// `g` 3-colourable iff `G'(g)` has a 3-dipath 3-colouring.
pub fn f_gadget_reduction(cfg: &VerifyConfig) -> Check {
    let mut parts = Vec::new();
    let mut ok = true;
    for t in [3, 4] {
        let r = forcing_properties_f(t)?;
        ok &= r.holds();
        parts.push(format!(
            "F(t={t}): {} colourings, (a) {} (b) {} (c) {} ({} of {} pairs extend)",
            r.colourings,
            r.a_same_colours,
            r.b_distinct_ends,
            r.c_all_pairs_extend,
            t * (t - 1) - r.missing_pairs.len(),
            t * (t - 1)
        ));
    }
    let graphs = exhaustive_simple(cfg.max_n);
    let mut mismatches = 0;
    let mut first = None;
    for g in &graphs {
        let out = build_g_prime(g, 3)?;
        let gadget = kdipath_colourable(&out.instance, 3, 3, cfg.budget)?.is_some();
        if g.is_colourable(3) != gadget {
            mismatches += 1;
            first.get_or_insert_with(|| format!("{} vertices, {} edges", g.n(), g.edge_count()));
        }
    }
    ok &= mismatches == 0;
    parts.push(format!("G' equivalence: {mismatches} of {} graphs disagree", graphs.len()));
    if let Some(f) = first {
        parts.push(format!("first: {f}"));
    }
    Ok((ok, parts.join("; ")))
}

/// 200 random acyclic graphs: with `L` vertices on a longest path, `chi_k = L` for
/// `k >= L`, and the level map decides `g -> T_t` exactly as the general search.
pub fn acyclic_characterization(cfg: &VerifyConfig) -> Check {
    let mut rng = rng_for(cfg, 11);
    for _ in 0..200 {
        let n = rng.gen_range(1..=8);
        let g = random_acyclic(n, rng.gen_range(0.1..0.8), rng.gen());
        let l = longest_directed_path_vertices(&g)
            .finite()
            .ok_or_else(|| Error::precondition("random_acyclic produced a cycle"))?;
        for k in [l.max(1), l + 1] {
            let chi = chi_kdipath(&g, k, Mode::Exact, cfg.budget)?.chi;
            if chi != l {
                return Ok((false, format!("k = {k}: chi = {chi}, longest path {l} on {g}")));
            }
        }
        for t in 1..=n {
            let fast = hom_to_transitive_tournament(&g, t);
            let tt = transitive_tournament(t);
            let general = find_homomorphism_with(&g, &tt, cfg.budget)?.exists();
            let sound = fast.witness.as_ref().is_none_or(|p| p.is_homomorphism(&g, &tt));
            if fast.exists() != general || !sound || fast.exists() != (l <= t) {
                return Ok((false, format!("T_{t} decision disagrees on {g}")));
            }
        }
    }
    Ok((true, "200 graphs: chi matches longest path, T_t decisions agree".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for (s, n) in [(Suite::Girth, "girth"), (Suite::HomModel, "hom-model"), (Suite::All, "all")] {
            assert_eq!(n.parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
        assert_eq!(Suite::All.criteria().len(), 11);
    }

    #[test]
    fn quick_criteria_pass() {
        let cfg = VerifyConfig::default();
        for id in [2, 5, 7] {
            let o = run_criterion(id, &cfg);
            assert!(o.passed, "{o}");
        }
    }
}
