use rayon::prelude::*;

use super::catalog::{derive_exception_catalog, ExceptionCatalog};
use super::oracle::{brute_force_eds, brute_force_gamma, brute_force_gamma_sets, MAX_ORACLE_ORDER};
use super::{ClaimId, ClaimParams, ClaimReport, Failure};
use crate::canon::are_isomorphic;
use crate::domination::{
    bondage_number, domination_number, enumerate_min_dominating_sets, gamma_critical_vertices,
    is_vc_graph, unique_min_dominating_set, vertex_deletion_gammas,
};
use crate::eds::{count_eds, enumerate_eds, has_eds, is_efficient_dominating_set};
use crate::enumerate::{connected_graphs_of_order, graphs_in_range};
use crate::error::{Error, Result};
use crate::families::{circulant, complete, complete_minus_perfect_matching, cycle, extr1_spec, extr2_spec};
use crate::graph::Graph;
use crate::hypo::{check_ed_structure, check_minusone, check_ud_bounds, is_hypo_ed, is_hypo_ud};
use crate::io::write_graph6;
use crate::vertex_set::VertexSet;
use crate::CirculantSpec;

const DEFAULT_STREAM_ORDER: usize = 7;

enum Outcome {
    Skip,
    Pass,
    Fail(String),
}

impl Outcome {
    fn check(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(detail())
        }
    }
}

/// A graph with a label naming where it came from and, for families, its
/// construction parameters.
struct Instance {
    label: String,
    graph: Graph,
    tag: (usize, usize),
}

impl Instance {
    fn new(label: impl Into<String>, graph: Graph) -> Self {
        Instance {
            label: label.into(),
            graph,
            tag: (0, 0),
        }
    }
}

struct Tally {
    claim: ClaimId,
    range: Vec<String>,
    scanned: u64,
    passes: u64,
    failures: Vec<Failure>,
}

impl Tally {
    fn new(claim: ClaimId) -> Self {
        Tally {
            claim,
            range: Vec::new(),
            scanned: 0,
            passes: 0,
            failures: Vec::new(),
        }
    }

    fn run<F>(&mut self, range: String, items: &[Instance], check: F)
    where
        F: Fn(&Instance) -> Outcome + Sync,
    {
        self.range.push(range);
        let outcomes: Vec<Outcome> = items.par_iter().map(&check).collect();
        for (item, outcome) in items.iter().zip(outcomes) {
            self.scanned += 1;
            match outcome {
                Outcome::Skip => {}
                Outcome::Pass => self.passes += 1,
                Outcome::Fail(detail) => self.failures.push(Failure {
                    g6: write_graph6(&item.graph),
                    detail: if item.label.is_empty() {
                        detail
                    } else {
                        format!("{}: {detail}", item.label)
                    },
                }),
            }
        }
    }

    fn run_graphs<F>(&mut self, stream: &Stream, check: F)
    where
        F: Fn(&Graph) -> Outcome + Sync,
    {
        self.run(stream.range.clone(), &stream.items, |i| check(&i.graph));
    }

    fn finish(self) -> ClaimReport {
        ClaimReport {
            claim: self.claim.as_str().to_string(),
            range: self.range.join("; "),
            scanned: self.scanned,
            instances_checked: self.passes + self.failures.len() as u64,
            passes: self.passes,
            failures: self.failures,
        }
    }
}

struct Stream {
    range: String,
    items: Vec<Instance>,
}

fn stream(params: &ClaimParams) -> Result<Stream> {
    if let Some(graphs) = &params.stream {
        return Ok(Stream {
            range: format!("input stream of {} graphs", graphs.len()),
            items: graphs.iter().map(|g| Instance::new("", g.clone())).collect(),
        });
    }
    let max_n = params.max_n.unwrap_or(DEFAULT_STREAM_ORDER);
    if max_n > params.guards.max_stream_order {
        return Err(Error::RangeGuard(format!(
            "stream order {max_n} exceeds {}",
            params.guards.max_stream_order
        )));
    }
    Ok(Stream {
        range: format!("all graphs of order 1..={max_n}"),
        items: graphs_in_range(1, max_n, false)?
            .into_iter()
            .map(|g| Instance::new("", g))
            .collect(),
    })
}

fn family_order(params: &ClaimParams, default: usize) -> Result<usize> {
    let n = params.max_n.unwrap_or(default);
    if n > params.guards.max_family_order {
        return Err(Error::RangeGuard(format!(
            "family order {n} exceeds {}",
            params.guards.max_family_order
        )));
    }
    Ok(n)
}

fn family_k(params: &ClaimParams, default: usize) -> Result<usize> {
    let k = params.k_max.unwrap_or(default);
    if k > params.guards.max_k {
        return Err(Error::RangeGuard(format!("k = {k} exceeds {}", params.guards.max_k)));
    }
    Ok(k)
}

fn iso(g: &Graph, h: &Graph) -> bool {
    are_isomorphic(g, h).unwrap_or(false)
}

/// Checks one claim over its range. Failures are collected, never raised;
/// errors are reserved for unknown parameters and exceeded guards.
pub fn verify_claim(id: ClaimId, params: &ClaimParams) -> Result<ClaimReport> {
    let mut t = Tally::new(id);
    match id {
        ClaimId::Oracle => oracle(&mut t, params)?,
        ClaimId::Effs1 => effs1(&mut t, params)?,
        ClaimId::Minus => minus(&mut t, params)?,
        ClaimId::Vc1 => vc1(&mut t, params)?,
        ClaimId::Ore => ore(&mut t, params)?,
        ClaimId::TwoFifths => two_fifths(&mut t, params)?,
        ClaimId::Circu => circu(&mut t, params)?,
        ClaimId::B1 => b1(&mut t, params)?,
        ClaimId::Udvc => ud_entries(&mut t, params, &["UDVC"])?,
        ClaimId::Claim1 => claim1(&mut t, params)?,
        ClaimId::Minedge => minedge(&mut t, params)?,
        ClaimId::Min2v => ud_entries(&mut t, params, &["MIN2V_I", "MIN2V_II"])?,
        ClaimId::Vcbound => vcbound(&mut t, params)?,
        ClaimId::Obud => obud(&mut t, params)?,
        ClaimId::Maxud => maxud(&mut t, params)?,
        ClaimId::Bondud => bondud(&mut t, params)?,
        ClaimId::Obed => ed_entries(&mut t, params, &["OBED"])?,
        ClaimId::Minusone => minusone(&mut t, params)?,
        ClaimId::Cycles => cycles(&mut t, params)?,
        ClaimId::Extr2 => extr2(&mut t, params)?,
        ClaimId::Extr1 => extr1(&mut t, params)?,
        ClaimId::Ed1 => ed1(&mut t, params)?,
        ClaimId::VcedUd => vced_ud(&mut t, params)?,
        ClaimId::Delta => ed_entries(&mut t, params, &["DELTA", "REG"])?,
        ClaimId::Regiff => regiff(&mut t, params)?,
        ClaimId::Extremall => extremall(&mut t, params)?,
    }
    Ok(t.finish())
}

/// Every registered claim in registry order.
pub fn verify_all(params: &ClaimParams) -> Result<Vec<ClaimReport>> {
    ClaimId::ALL.iter().map(|&id| verify_claim(id, params)).collect()
}

fn oracle(t: &mut Tally, params: &ClaimParams) -> Result<()> {
    let s = stream(params)?;
    t.run_graphs(&s, |g| {
        if !g.is_connected() || g.order() > MAX_ORACLE_ORDER {
            return Outcome::Skip;
        }
        let gamma = domination_number(g);
        let brute = brute_force_gamma(g).expect("order checked");
        if gamma != brute {
            return Outcome::Fail(format!("branch and bound gamma = {gamma}, oracle = {brute}"));
        }
        let sets: Vec<Vec<usize>> = enumerate_min_dominating_sets(g, usize::MAX)
            .sets
            .iter()
            .map(VertexSet::to_vec)
            .collect();
        let expected = brute_force_gamma_sets(g).expect("order checked");
        Outcome::check(sets == expected, || {
            format!("{} gamma-sets enumerated, oracle lists {}", sets.len(), expected.len())
        })
    });
    Ok(())
}

fn effs1(t: &mut Tally, params: &ClaimParams) -> Result<()> {
    let s = stream(params)?;
    t.run_graphs(&s, |g| {
        if g.order() > MAX_ORACLE_ORDER {
            return Outcome::Skip;
        }
        let found = enumerate_eds(g, usize::MAX);
        let sets: Vec<Vec<usize>> = found.sets.iter().map(VertexSet::to_vec).collect();
        let expected = brute_force_eds(g).expect("order checked");
        if sets != expected {
            return Outcome::Fail(format!("exact cover {sets:?}, subset scan {expected:?}"));
        }
        let gamma = domination_number(g);
        Outcome::check(sets.iter().all(|d| d.len() == gamma), || {
            format!("EDS sizes differ from gamma = {gamma}: {sets:?}")
        })
    });
    Ok(())
}

/// Maps a vertex of `G` other than `removed` to its label in `G - removed`.
fn shifted(u: usize, removed: usize) -> usize {
    if u > removed {
        u - 1
    } else {
        u
    }
}

fn minus(t: &mut Tally, params: &ClaimParams) -> Result<()> {
    let s = stream(params)?;
    t.run_graphs(&s, |g| {
        let gamma = domination_number(g);
        let profile = vertex_deletion_gammas(g);
        let sets = enumerate_min_dominating_sets(g, usize::MAX).sets;
        for (v, &gv) in profile.iter().enumerate() {
            if gv + 1 < gamma {
                return Outcome::Fail(format!("gamma(G-{v}) = {gv} < gamma - 1 = {}", gamma - 1));
            }
            if gv < gamma {
                let h = g.delete_vertex(v).expect("vertex in range");
                let closed: Vec<usize> = g
                    .closed_neighborhood(v)
                    .iter()
                    .filter(|&u| u != v)
                    .map(|u| shifted(u, v))
                    .collect();
                let bad = enumerate_min_dominating_sets(&h, usize::MAX)
                    .sets
                    .into_iter()
                    .find(|d| closed.iter().any(|&u| d.contains(u)));
                if let Some(d) = bad {
                    return Outcome::Fail(format!("gamma-set {d} of G-{v} meets N[{v}]"));
                }
            }
            if gv > gamma {
                if let Some(d) = sets.iter().find(|d| !d.contains(v)) {
                    return Outcome::Fail(format!(
                        "gamma(G-{v}) = {gv} > {gamma} but gamma-set {d} avoids {v}"
                    ));
                }
            }
        }
        Outcome::Pass
    });
    Ok(())
}

fn vc1(t: &mut Tally, params: &ClaimParams) -> Result<()> {
    let s = stream(params)?;
    t.run_graphs(&s, |g| {
        if !is_vc_graph(g) {
            return Outcome::Skip;
        }
        let n = g.order();
        let gamma = domination_number(g);
        let bound = (g.max_degree() + 1) * (gamma - 1) + 1;
        if n > bound {
            return Outcome::Fail(format!("n = {n} > (Delta+1)(gamma-1)+1 = {bound}"));
        }
        if n == bound && !g.is_regular() {
            return Outcome::Fail(format!("n = {bound} with equality but not regular"));
        }
        let nontrivial = g.is_connected() && n >= 2;
        Outcome::check(!nontrivial || (g.is_2_edge_connected() && g.min_degree() >= 2), || {
            "connected nontrivial vc-graph with a bridge or a vertex of degree < 2".into()
        })
    });
    Ok(())
}

/// Whether `g` is `H∘K₁` for a connected graph `H`.
fn is_connected_corona(g: &Graph) -> bool {
    let n = g.order();
    if !g.is_connected() || n % 2 == 1 || n == 0 {
        return false;
    }
    if n == 2 {
        return true;
    }
    let leaves = VertexSet::from_vertices(n, (0..n).filter(|&v| g.degree(v) == 1));
    leaves.len() == n / 2
        && (0..n)
            .filter(|&v| !leaves.contains(v))
            .all(|v| g.neighbors(v).intersection_len(&leaves) == 1)
}

fn ore(t: &mut Tally, params: &ClaimParams) -> Result<()> {
    let s = stream(params)?;
    let c4 = cycle(4);
    t.run_graphs(&s, |g| {
        if g.order() == 0 || g.min_degree() == 0 {
            return Outcome::Skip;
        }
        let n = g.order();
        let gamma = domination_number(g);
        if 2 * gamma > n {
            return Outcome::Fail(format!("gamma = {gamma} > n/2"));
        }
        let structured = g.components().iter().all(|c| {
            let h = g.induced_subgraph(c);
            is_connected_corona(&h) || iso(&h, &c4)
        });
        Outcome::check((2 * gamma == n) == structured, || {
            format!("2 gamma = n is {}, components C4 or coronas is {structured}", 2 * gamma == n)
        })
    });
    Ok(())
}

fn catalog_cached() -> Result<ExceptionCatalog> {
    use std::sync::OnceLock;
    static CATALOG: OnceLock<ExceptionCatalog> = OnceLock::new();
    if let Some(c) = CATALOG.get() {
        return Ok(c.clone());
    }
    let c = derive_exception_catalog()?;
    Ok(CATALOG.get_or_init(|| c).clone())
}

fn two_fifths(t: &mut Tally, params: &ClaimParams) -> Result<()> {
    let catalog = catalog_cached()?;
    let members: Vec<Instance> = catalog
        .graphs
        .iter()
        .enumerate()
        .map(|(i, g)| Instance::new(format!("catalog member {i}"), g.clone()))
        .collect();
    let size = catalog.len();
    let mut items = members;
    items.push(Instance::new("catalog", Graph::empty(0)));
    t.run(
        "derived exception catalog".into(),
        &items,
        |i| {
            if i.label == "catalog" {
                let has = |h: &Graph| catalog.contains(h);
                let distinct = (0..size).all(|a| {
                    (a + 1..size).all(|b| !iso(&catalog.graphs[a], &catalog.graphs[b]))
                });
                return Outcome::check(size == 7 && has(&cycle(4)) && has(&cycle(7)) && distinct, || {
                    format!("catalog has {size} members, contains C4 and C7 and is duplicate-free: {}, {}, {distinct}",
                        has(&cycle(4)), has(&cycle(7)))
                });
            }
            let g = &i.graph;
            Outcome::check(
                g.is_connected() && g.min_degree() >= 2 && 5 * domination_number(g) > 2 * g.order(),
                || "member fails the caption inequalities".into(),
            )
        },
    );
    let s = stream(params)?;
    t.run_graphs(&s, |g| {
        if !g.is_connected() || g.min_degree() < 2 || catalog.contains(g) {
            return Outcome::Skip;
        }
        let gamma = domination_number(g);
        Outcome::check(5 * gamma <= 2 * g.order(), || format!("gamma = {gamma} > 2n/5"))
    });
    Ok(())
}

fn consecutive_circulants(max_n: usize, min_n: usize, k_max: Option<usize>) -> Vec<(usize, usize, Graph)> {
    let mut out = Vec::new();
    for n in min_n..=max_n {
        for k in 1..n / 2 {
            if k_max.is_some_and(|m| k > m) {
                break;
            }
            let spec = CirculantSpec::consecutive(n, k).expect("k < n/2");
            out.push((n, k, circulant(&spec)));
        }
    }
    out
}

fn circu(t: &mut Tally, params: &ClaimParams) -> Result<()> {
    let max_n = family_order(params, 30)?;
    let items: Vec<Instance> = consecutive_circulants(max_n, 3, params.k_max)
        .into_iter()
        .map(|(n, k, g)| Instance::new(format!("C({n},1..{k})"), g))
        .collect();
    t.run(
        format!("C(n, {{1..k}}) for 3 <= n <= {max_n}, 1 <= k < floor(n/2)"),
        &items,
        |i| {
            let g = &i.graph;
            let n = g.order();
            let k = g.degree(0) / 2;
            let gamma = domination_number(g);
            let expected = n.div_ceil(2 * k + 1);
            if gamma != expected || !g.is_regular() {
                return Outcome::Fail(format!("gamma = {gamma}, ceil(n/(2k+1)) = {expected}"));
            }
            let vc = is_vc_graph(g);
            Outcome::check(vc == ((n - 1) % (2 * k + 1) == 0), || {
                format!("vc = {vc}, (2k+1) | (n-1) = {}", (n - 1) % (2 * k + 1) == 0)
            })
        },
    );
    Ok(())
}

fn b1(t: &mut Tally, params: &ClaimParams) -> Result<()> {
    let s = stream(params)?;
    t.run_graphs(&s, |g| {
        if g.size() == 0 || unique_min_dominating_set(g).is_none() {
            return Outcome::Skip;
        }
        let b = bondage_number(g, Some(1)).expect("graph has edges");
        Outcome::check(b == Some(1), || format!("unique gamma-set but b > 1 ({b:?})"))
    });
    Ok(())
}

/// Runs named entries of the hypo-UD bound report over the stream's
/// hypo-UD graphs.
fn ud_entries(t: &mut Tally, params: &ClaimParams, entries: &[&str]) -> Result<()> {
    let s = stream(params)?;
    t.run_graphs(&s, |g| ud_outcome(g, entries));
    Ok(())
}

fn ud_outcome(g: &Graph, entries: &[&str]) -> Outcome {
    if g.order() < 3 && !entries.contains(&"UDVC") || !is_hypo_ud(g) {
        return Outcome::Skip;
    }
    let report = check_ud_bounds(g).expect("graph is hypo-UD");
    bound_outcome(&report, entries)
}

fn bound_outcome(report: &crate::hypo::BoundReport, entries: &[&str]) -> Outcome {
    for name in entries {
        if let Some(e) = report.entry(name) {
            if !e.pass {
                return Outcome::Fail(format!("{}: {}", e.claim, e.detail));
            }
        }
    }
    Outcome::Pass
}

fn ed_entries(t: &mut Tally, params: &ClaimParams, entries: &[&str]) -> Result<()> {
    let s = stream(params)?;
    t.run_graphs(&s, |g| {
        if !is_hypo_ed(g) {
            return Outcome::Skip;
        }
        if entries.contains(&"DELTA") && gamma_critical_vertices(g).is_empty() {
            return Outcome::Skip;
        }
        bound_outcome(&check_ed_structure(g).expect("graph is hypo-ED"), entries)
    });
    Ok(())
}

fn claim1(t: &mut Tally, params: &ClaimParams) -> Result<()> {
    let max_h = params.max_n.unwrap_or(6);
    if max_h > params.guards.max_stream_order {
        return Err(Error::RangeGuard(format!("base order {max_h} exceeds {}", params.guards.max_stream_order)));
    }
    let mut items = Vec::new();
    for n in 2..=max_h {
        items.extend(
            connected_graphs_of_order(n)?
                .into_iter()
                .map(|h| Instance::new(format!("corona of {}", write_graph6(&h)), h.corona())),
        );
    }
    t.run(format!("H o K1 for connected H of order 2..={max_h}"), &items, |i| {
        let g = &i.graph;
        let n = g.order() / 2;
        let leaves = VertexSet::from_vertices(2 * n, n..2 * n);
        let critical = gamma_critical_vertices(g);
        if critical != leaves {
            return Outcome::Fail(format!("V-(G) = {critical}, leaves = {leaves}"));
        }
        Outcome::check(!is_hypo_ud(g), || "corona is hypo-UD".into())
    });
    Ok(())
}

fn minedge(t: &mut Tally, params: &ClaimParams) -> Result<()> {
    let s = stream(params)?;
    t.run_graphs(&s, |g| ud_outcome(g, &["MINEDGE"]));
    let max_n = family_order(params, 13)?.max(13);
    let items: Vec<Instance> = (3..=max_n).map(|n| Instance::new(format!("C{n}"), cycle(n))).collect();
    t.run(format!("cycles C3..C{max_n}"), &items, |i| {
        let n = i.graph.order();
        let ud = is_hypo_ud(&i.graph);
        Outcome::check(ud == (n % 3 == 1), || format!("hypo-UD = {ud}"))
    });
    Ok(())
}

fn vcbound(t: &mut Tally, params: &ClaimParams) -> Result<()> {
    let catalog = catalog_cached()?;
    let s = stream(params)?;
    t.run_graphs(&s, |g| {
        let n = g.order();
        if n < 4 || !g.is_connected() || !is_vc_graph(g) {
            return Outcome::Skip;
        }
        let gamma = domination_number(g);
        let upper = 2 * n / 5 + 1;
        if gamma > upper {
            return Outcome::Fail(format!("gamma = {gamma} > floor(2n/5)+1 = {upper}"));
        }
        let member = catalog.contains(g);
        Outcome::check((gamma == upper) == member, || {
            format!("equality = {}, catalog member = {member}", gamma == upper)
        })
    });
    let members: Vec<Instance> = catalog
        .graphs
        .iter()
        .map(|g| Instance::new("catalog member", g.clone()))
        .collect();
    t.run("catalog members".into(), &members, |i| {
        let g = &i.graph;
        let vc = is_vc_graph(g);
        let gamma = domination_number(g);
        Outcome::check(vc && gamma == 2 * g.order() / 5 + 1, || {
            format!("vc = {vc}, gamma = {gamma}")
        })
    });
    Ok(())
}

fn obud(t: &mut Tally, params: &ClaimParams) -> Result<()> {
    let s = stream(params)?;
    t.run_graphs(&s, |g| {
        if !is_hypo_ud(g) {
            return Outcome::Skip;
        }
        let report = check_ud_bounds(g).expect("graph is hypo-UD");
        bound_outcome(&report, &["OBUD_RANGE", "OBUD_I", "OBUD_II", "OBUD_III"])
    });
    let mut items = vec![
        Instance::new("K2", complete(2)),
        Instance::new("C4", cycle(4)),
        Instance::new("C7", cycle(7)),
    ];
    for n in (4..=16).step_by(2) {
        items.push(Instance::new(
            format!("K{n} minus a perfect matching"),
            complete_minus_perfect_matching(n).expect("even order"),
        ));
    }
    t.run("K2, C4, C7 and K_n minus a perfect matching for even 4 <= n <= 16".into(), &items, |i| {
        let g = &i.graph;
        let n = g.order();
        let gamma = domination_number(g);
        let ud = is_hypo_ud(g);
        let expected = match i.label.as_str() {
            "K2" => 1,
            "C4" | "C7" => 2 * n / 5 + 1,
            _ => 2,
        };
        Outcome::check(ud && gamma == expected, || format!("hypo-UD = {ud}, gamma = {gamma}"))
    });
    Ok(())
}

/// `K₂` meets `n ≤ (Δ+1)(γ−1)+1` only with `2 ≤ 1`, so the bound is checked
/// from order 3 on, where every hypo-UD graph is a vc-graph.
fn maxud(t: &mut Tally, params: &ClaimParams) -> Result<()> {
    let s = stream(params)?;
    t.run_graphs(&s, |g| ud_outcome(g, &["MAXUD"]));
    Ok(())
}

fn bondud(t: &mut Tally, params: &ClaimParams) -> Result<()> {
    let s = stream(params)?;
    t.run_graphs(&s, |g| {
        if !is_hypo_ud(g) {
            return Outcome::Skip;
        }
        bound_outcome(&check_ud_bounds(g).expect("graph is hypo-UD"), &["BONDUD"])
    });
    let items: Vec<Instance> = [4, 7, 10, 13]
        .iter()
        .map(|&n| Instance::new(format!("C{n}"), cycle(n)))
        .collect();
    t.run("C4, C7, C10, C13 (b = delta + 1)".into(), &items, |i| {
        let b = bondage_number(&i.graph, None).expect("cycle has edges");
        Outcome::check(b == Some(3), || format!("b = {b:?}, expected 3"))
    });
    Ok(())
}

fn minusone(t: &mut Tally, params: &ClaimParams) -> Result<()> {
    let s = stream(params)?;
    t.run_graphs(&s, |g| {
        if has_eds(g) {
            return Outcome::Skip;
        }
        let r = check_minusone(g).expect("graph has no EDS");
        Outcome::check(r.bound_holds && r.clause_a && r.clause_b && r.converse, || {
            format!(
                "n = {}, gamma(Delta+1)-1 = {}, clauses a/b/converse = {}/{}/{} {}",
                r.n, r.bound, r.clause_a, r.clause_b, r.converse, r.detail
            )
        })
    });
    Ok(())
}

fn cycles(t: &mut Tally, params: &ClaimParams) -> Result<()> {
    let max_n = family_order(params, 14)?;
    let items: Vec<Instance> = (3..=max_n).map(|n| Instance::new(format!("C{n}"), cycle(n))).collect();
    t.run(format!("cycles C3..C{max_n}"), &items, |i| {
        let g = &i.graph;
        let n = g.order();
        let ed = is_hypo_ed(g);
        let ud = is_hypo_ud(g);
        if ed != (n >= 4 && n % 3 != 0) || ud != (n % 3 == 1) {
            return Outcome::Fail(format!("hypo-ED = {ed}, hypo-UD = {ud}"));
        }
        let gamma = domination_number(g);
        Outcome::check(n % 3 != 2 || n == gamma * 3 - 1, || {
            format!("n = {n}, gamma(Delta+1)-1 = {}", gamma * 3 - 1)
        })
    });
    Ok(())
}

/// Checks that `d` (in `G` labels) is an EDS of `G - y`, with `y ∉ d`.
fn eds_after_deleting(g: &Graph, d: &VertexSet, y: usize) -> bool {
    !d.contains(y)
        && is_efficient_dominating_set(&g.delete_vertex(y).expect("vertex in range"), &d.without_vertex(y))
}

fn extremal_common(g: &Graph, gamma_expected: usize) -> Option<String> {
    let gamma = domination_number(g);
    let n = g.order();
    if gamma != gamma_expected {
        return Some(format!("gamma = {gamma}, expected {gamma_expected}"));
    }
    if !is_hypo_ed(g) {
        return Some("not hypo-ED".into());
    }
    (n + 1 != gamma * (g.max_degree() + 1)).then(|| format!("n = {n} != gamma(Delta+1)-1"))
}

fn extr1_sets(k: usize, t: usize, r: usize) -> (VertexSet, usize) {
    let w = 2 * k + 1;
    let n = t * w - 1;
    let at = |x: isize| x.rem_euclid(n as isize) as usize;
    let r = r as isize;
    let w = w as isize;
    let mut members = Vec::new();
    let common;
    if t % 2 == 1 {
        for l in 0..=(t as isize - 1) / 2 {
            members.push(at(r + l * w));
            members.push(at(r - l * w));
        }
        let a1 = r + (t as isize - 1) * w / 2;
        common = at(a1 + k as isize);
    } else {
        for s in 0..=(t as isize - 2) / 2 {
            members.push(at(r + s * w));
            members.push(at(r - s * w));
        }
        members.push(at(r + t as isize * w / 2 - 1));
        let b1 = r + (t as isize - 2) * w / 2;
        common = at(b1 + k as isize);
    }
    (VertexSet::from_vertices(n, members), common)
}

fn extr1(t: &mut Tally, params: &ClaimParams) -> Result<()> {
    let max_n = family_order(params, 29)?;
    let k_max = family_k(params, 3)?;
    let mut items = Vec::new();
    for k in 1..=k_max {
        for tt in 2.. {
            let n = tt * (2 * k + 1) - 1;
            if n > max_n {
                break;
            }
            let spec = extr1_spec(k, tt)?;
            let mut item = Instance::new(format!("k={k} t={tt}"), circulant(&spec));
            item.tag = (k, tt);
            items.push(item);
        }
    }
    t.run(
        format!("C(t(2k+1)-1, {{1..k}}) for k <= {k_max}, t >= 2, n <= {max_n}"),
        &items,
        |i| {
            let (k, tt) = i.tag;
            let g = &i.graph;
            for r in 0..g.order() {
                let (d, y) = extr1_sets(k, tt, r);
                if d.len() != tt || !crate::domination::is_dominating(g, &d) {
                    return Outcome::Fail(format!("r = {r}: {d} is not a gamma-set"));
                }
                if !eds_after_deleting(g, &d, y) {
                    return Outcome::Fail(format!("r = {r}: {d} is not an EDS of G - {}", y));
                }
            }
            match extremal_common(g, tt) {
                Some(detail) => Outcome::Fail(detail),
                None => Outcome::Pass,
            }
        },
    );
    Ok(())
}

fn extr2(t: &mut Tally, params: &ClaimParams) -> Result<()> {
    let max_n = family_order(params, 29)?;
    let k_max = family_k(params, 3)?;
    let instances: Vec<Instance> = (1..=k_max)
        .filter(|k| 8 * k + 5 <= max_n)
        .map(|k| Instance::new(format!("k={k}"), circulant(&extr2_spec(k).expect("valid k"))))
        .collect();
    t.run(
        format!("C(8k+5, {{1..k}} u {{3k+2..4k+2}}) for k <= {k_max}, n <= {max_n}"),
        &instances,
        |i| {
            let g = &i.graph;
            let n = g.order();
            let k = (n - 5) / 8;
            if !g.is_regular() || g.degree(0) != 4 * k + 2 {
                return Outcome::Fail(format!("not {}-regular", 4 * k + 2));
            }
            for r in 0..n {
                let d = VertexSet::from_vertices(n, [r, (r + 2 * k + 1) % n]);
                let y = (r + 5 * k + 3) % n;
                let common = g.closed_neighborhood(r).intersection(&g.closed_neighborhood((r + 2 * k + 1) % n));
                if common != VertexSet::from_vertices(n, [y]) || !eds_after_deleting(g, &d, y) {
                    return Outcome::Fail(format!("r = {r}: {d} is not an EDS of G - {}", y));
                }
            }
            match extremal_common(g, 2) {
                Some(detail) => Outcome::Fail(detail),
                None => Outcome::Pass,
            }
        },
    );
    Ok(())
}

/// `K₁` is excluded: every `K₁ − v` has an EDS yet `K₁` has one too.
fn ed1(t: &mut Tally, params: &ClaimParams) -> Result<()> {
    let s = stream(params)?;
    t.run_graphs(&s, |g| {
        if g.order() < 2 || !g.is_connected() || !is_vc_graph(g) {
            return Outcome::Skip;
        }
        let ed = is_hypo_ed(g);
        let all = (0..g.order()).all(|v| has_eds(&g.delete_vertex(v).expect("vertex in range")));
        Outcome::check(ed == all, || format!("hypo-ED = {ed}, every G-v has an EDS = {all}"))
    });
    Ok(())
}

/// Circulant and cycle instances used by the extremal-family claims.
fn family_instances(params: &ClaimParams) -> Result<Vec<Instance>> {
    let k_max = family_k(params, 3)?;
    let mut items = Vec::new();
    for k in 1..=k_max {
        for tt in 2.. {
            if tt * (2 * k + 1) - 1 > 29 {
                break;
            }
            items.push(Instance::new(format!("extr1 k={k} t={tt}"), circulant(&extr1_spec(k, tt)?)));
        }
        if 8 * k + 5 <= 29 {
            items.push(Instance::new(format!("extr2 k={k}"), circulant(&extr2_spec(k)?)));
        }
    }
    for (n, k, g) in consecutive_circulants(25, 4, Some(k_max)) {
        items.push(Instance::new(format!("C({n},1..{k})"), g));
    }
    for n in 3..=14 {
        items.push(Instance::new(format!("C{n}"), cycle(n)));
    }
    Ok(items)
}

fn vced_ud_outcome(g: &Graph) -> Outcome {
    if !is_vc_graph(g) || !is_hypo_ed(g) {
        return Outcome::Skip;
    }
    let counts: Vec<u64> = (0..g.order())
        .map(|v| count_eds(&g.delete_vertex(v).expect("vertex in range"), None))
        .collect();
    if counts.iter().any(|&c| c != 1) {
        return Outcome::Fail(format!("EDS counts of G-v: {counts:?}"));
    }
    Outcome::check(!g.is_regular() || is_hypo_ud(g), || "regular but not hypo-UD".into())
}

fn vced_ud(t: &mut Tally, params: &ClaimParams) -> Result<()> {
    let items = family_instances(params)?;
    t.run("extremal circulant families and cycles".into(), &items, |i| vced_ud_outcome(&i.graph));
    let s = stream(params)?;
    t.run_graphs(&s, vced_ud_outcome);
    Ok(())
}

fn regiff_outcome(g: &Graph) -> Outcome {
    let n = g.order();
    if n < 4 || !g.is_connected() || !is_vc_graph(g) {
        return Outcome::Skip;
    }
    let gamma = domination_number(g);
    if n != (g.max_degree() + 1) * (gamma - 1) + 1 {
        return Outcome::Skip;
    }
    let (ed, ud, reg) = (is_hypo_ed(g), is_hypo_ud(g), g.is_regular());
    Outcome::check(ed && ud && reg, || format!("hypo-ED = {ed}, hypo-UD = {ud}, regular = {reg}"))
}

fn regiff(t: &mut Tally, params: &ClaimParams) -> Result<()> {
    let items = family_instances(params)?;
    t.run("extremal circulant families and cycles".into(), &items, |i| regiff_outcome(&i.graph));
    let s = stream(params)?;
    t.run_graphs(&s, regiff_outcome);
    Ok(())
}

fn extremall(t: &mut Tally, params: &ClaimParams) -> Result<()> {
    let max_n = family_order(params, 25)?;
    let k_max = family_k(params, 3)?;
    let items: Vec<Instance> = consecutive_circulants(max_n, 4, Some(k_max))
        .into_iter()
        .map(|(n, k, g)| Instance::new(format!("C({n},1..{k})"), g))
        .collect();
    t.run(
        format!("C(n, {{1..k}}) for k <= {k_max}, 4 <= n <= {max_n}, k < floor(n/2)"),
        &items,
        |i| {
            let g = &i.graph;
            let n = g.order();
            let k = g.degree(0) / 2;
            let divides = (n - 1) % (2 * k + 1) == 0;
            let ud = is_hypo_ud(g);
            if ud != divides {
                return Outcome::Fail(format!("hypo-UD = {ud}, (2k+1) | (n-1) = {divides}"));
            }
            if !divides {
                return Outcome::Pass;
            }
            let gamma = domination_number(g);
            let ed = is_hypo_ed(g);
            Outcome::check(ed && n == (g.max_degree() + 1) * (gamma - 1) + 1, || {
                format!("hypo-ED = {ed}, gamma = {gamma}")
            })
        },
    );
    Ok(())
}
