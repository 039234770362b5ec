//! Exact domination number, γ-set enumeration, criticality and bondage.
//!
//! The solver is a branch and bound over undominated vertices. At each node
//! it picks the undominated vertex with the fewest admissible dominators and
//! branches on those dominators, forbidding each one in the later sibling
//! branches so that every dominating set is reached along exactly one path.
//! The lower bound is `⌈|undominated| / max coverage⌉`, where the maximum is
//! taken over admissible vertices (never larger than `Δ + 1`).

use std::collections::BinaryHeap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Default number of γ-sets kept when listing; the count is always exact.
pub const DEFAULT_GAMMA_SET_CAP: usize = 1_000_000;

enum Goal {
    Minimize {
        best: usize,
        best_set: Vec<usize>,
    },
    Enumerate {
        target: usize,
        count: u64,
        limit: Option<u64>,
        keep: usize,
        kept: BinaryHeap<VertexSet>,
    },
}

struct Search<'a> {
    n: usize,
    closed: &'a [VertexSet],
    goal: Goal,
    stop: bool,
}

impl Search<'_> {
    fn max_size(&self) -> usize {
        match &self.goal {
            Goal::Minimize { best, .. } => best.saturating_sub(1),
            Goal::Enumerate { target, .. } => *target,
        }
    }

    fn record(&mut self, chosen: &[usize]) {
        match &mut self.goal {
            Goal::Minimize { best, best_set } => {
                if chosen.len() < *best {
                    *best = chosen.len();
                    *best_set = chosen.to_vec();
                }
            }
            Goal::Enumerate {
                count,
                limit,
                keep,
                kept,
                ..
            } => {
                *count += 1;
                if *keep > 0 {
                    kept.push(VertexSet::from_vertices(self.n, chosen.iter().copied()));
                    if kept.len() > *keep {
                        kept.pop();
                    }
                }
                if limit.is_some_and(|l| *count >= l) {
                    self.stop = true;
                }
            }
        }
    }

    fn node(&mut self, undominated: &VertexSet, forbidden: &VertexSet, chosen: &mut Vec<usize>) {
        if undominated.is_empty() {
            self.record(chosen);
            return;
        }
        let max_size = self.max_size();
        if chosen.len() >= max_size {
            return;
        }
        let remaining = max_size - chosen.len();

        let mut coverage = vec![0usize; self.n];
        let mut max_cov = 0;
        for u in 0..self.n {
            if !forbidden.contains(u) {
                let c = self.closed[u].intersection_len(undominated);
                coverage[u] = c;
                max_cov = max_cov.max(c);
            }
        }
        if max_cov == 0 || undominated.len() > remaining * max_cov {
            return;
        }

        let mut pivot = None;
        let mut fewest = usize::MAX;
        for v in undominated {
            let options = self.closed[v].len() - self.closed[v].intersection_len(forbidden);
            if options < fewest {
                fewest = options;
                pivot = Some(v);
                if options <= 1 {
                    break;
                }
            }
        }
        if fewest == 0 {
            return;
        }
        let pivot = pivot.expect("undominated set is non-empty");
        let mut candidates: Vec<usize> = self.closed[pivot].difference(forbidden).to_vec();
        candidates.sort_by_key(|&u| (std::cmp::Reverse(coverage[u]), u));

        let mut forbidden = forbidden.clone();
        for u in candidates {
            chosen.push(u);
            let next = undominated.difference(&self.closed[u]);
            self.node(&next, &forbidden, chosen);
            chosen.pop();
            if self.stop {
                return;
            }
            forbidden.insert(u);
        }
    }
}

fn greedy_dominating_set(closed: &[VertexSet], n: usize) -> Vec<usize> {
    let mut undominated = VertexSet::full(n);
    let mut chosen = Vec::new();
    while !undominated.is_empty() {
        let u = (0..n)
            .max_by_key(|&u| (closed[u].intersection_len(&undominated), std::cmp::Reverse(u)))
            .expect("non-empty graph");
        undominated.difference_with(&closed[u]);
        chosen.push(u);
    }
    chosen
}

/// A minimum dominating set (not necessarily the lexicographically first).
pub fn minimum_dominating_set(g: &Graph) -> VertexSet {
    let n = g.order();
    if n == 0 {
        return VertexSet::empty(0);
    }
    let closed = g.closed_neighborhoods();
    let greedy = greedy_dominating_set(&closed, n);
    let mut search = Search {
        n,
        closed: &closed,
        goal: Goal::Minimize {
            best: greedy.len(),
            best_set: greedy,
        },
        stop: false,
    };
    search.node(&VertexSet::full(n), &VertexSet::empty(n), &mut Vec::new());
    match search.goal {
        Goal::Minimize { best_set, .. } => VertexSet::from_vertices(n, best_set),
        Goal::Enumerate { .. } => unreachable!(),
    }
}

/// γ(G). The order-zero graph has domination number 0.
pub fn domination_number(g: &Graph) -> usize {
    minimum_dominating_set(g).len()
}

/// The γ-sets of a graph: exact count plus the lexicographically first
/// `cap` sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaSets {
    pub gamma: usize,
    pub count: u64,
    pub sets: Vec<VertexSet>,
}

impl GammaSets {
    pub fn truncated(&self) -> bool {
        (self.sets.len() as u64) < self.count
    }
}

fn run_enumeration(g: &Graph, gamma: usize, limit: Option<u64>, keep: usize) -> (u64, Vec<VertexSet>) {
    let n = g.order();
    if n == 0 {
        let sets = if keep > 0 { vec![VertexSet::empty(0)] } else { Vec::new() };
        return (1, sets);
    }
    let closed = g.closed_neighborhoods();
    let mut search = Search {
        n,
        closed: &closed,
        goal: Goal::Enumerate {
            target: gamma,
            count: 0,
            limit,
            keep,
            kept: BinaryHeap::new(),
        },
        stop: false,
    };
    search.node(&VertexSet::full(n), &VertexSet::empty(n), &mut Vec::new());
    match search.goal {
        Goal::Enumerate { count, kept, .. } => (count, kept.into_sorted_vec()),
        Goal::Minimize { .. } => unreachable!(),
    }
}

/// All γ-sets in lexicographic order of their sorted vertex lists,
/// truncated at `cap`; `count` is exact regardless of the cap.
pub fn enumerate_min_dominating_sets(g: &Graph, cap: usize) -> GammaSets {
    let gamma = domination_number(g);
    let (count, sets) = run_enumeration(g, gamma, None, cap);
    GammaSets { gamma, count, sets }
}

/// Number of γ-sets, stopping early once `limit` is reached.
pub fn count_min_dominating_sets(g: &Graph, limit: Option<u64>) -> u64 {
    let gamma = domination_number(g);
    run_enumeration(g, gamma, limit, 0).0
}

pub(crate) fn count_with_gamma(g: &Graph, gamma: usize, limit: Option<u64>) -> u64 {
    run_enumeration(g, gamma, limit, 0).0
}

/// The γ-set when it is unique.
pub fn unique_min_dominating_set(g: &Graph) -> Option<VertexSet> {
    let gamma = domination_number(g);
    let (count, mut sets) = run_enumeration(g, gamma, Some(2), 1);
    (count == 1).then(|| sets.remove(0))
}

pub fn is_dominating(g: &Graph, set: &VertexSet) -> bool {
    g.closed_neighborhood_of_set(set).len() == g.order()
}

/// `γ(G − v)` for every vertex, in vertex order.
pub fn vertex_deletion_gammas(g: &Graph) -> Vec<usize> {
    (0..g.order())
        .map(|v| domination_number(&g.delete_vertex(v).expect("vertex in range")))
        .collect()
}

/// `V⁻(G)`: vertices whose deletion lowers the domination number.
pub fn gamma_critical_vertices(g: &Graph) -> VertexSet {
    let gamma = domination_number(g);
    critical_from_profile(g.order(), gamma, &vertex_deletion_gammas(g))
}

fn critical_from_profile(n: usize, gamma: usize, profile: &[usize]) -> VertexSet {
    VertexSet::from_vertices(n, (0..n).filter(|&v| profile[v] < gamma))
}

/// Every vertex is γ-critical.
pub fn is_vc_graph(g: &Graph) -> bool {
    let gamma = domination_number(g);
    (0..g.order()).all(|v| domination_number(&g.delete_vertex(v).expect("vertex in range")) < gamma)
}

/// Smallest number of edges whose removal raises γ, searched up to `cap`
/// edges (`None` = no cap). Returns `Ok(None)` when no removal of at most
/// `cap` edges raises γ.
///
/// Removing edges never lowers γ, so `γ(G − F) > γ(G)` exactly when no
/// γ-set of `G` still dominates `G − F`. A γ-set `D` stops dominating when
/// for some `w ∉ D` every edge between `w` and `D` is removed; the search
/// branches over those edge groups for the first surviving γ-set.
pub fn bondage_number(g: &Graph, cap: Option<usize>) -> Result<Option<usize>> {
    let edges = g.edges();
    let m = edges.len();
    if m == 0 {
        return Err(Error::Edgeless);
    }
    let n = g.order();
    let index = |u: usize, v: usize| -> usize {
        edges
            .binary_search(&(u.min(v), u.max(v)))
            .expect("edge is present")
    };
    let gamma_sets = enumerate_min_dominating_sets(g, usize::MAX).sets;
    let kills: Vec<Vec<VertexSet>> = gamma_sets
        .iter()
        .map(|d| {
            let mut options: Vec<VertexSet> = (0..n)
                .filter(|&w| !d.contains(w))
                .map(|w| {
                    VertexSet::from_vertices(
                        m,
                        g.neighbors(w).intersection(d).iter().map(|x| index(w, x)),
                    )
                })
                .collect();
            options.sort_by_key(VertexSet::len);
            options.dedup();
            options
        })
        .collect();

    struct Bondage<'a> {
        kills: &'a [Vec<VertexSet>],
        best: usize,
    }
    impl Bondage<'_> {
        fn node(&mut self, removed: &VertexSet) {
            let size = removed.len();
            let survivor = self
                .kills
                .iter()
                .find(|options| !options.iter().any(|o| o.is_subset(removed)));
            let Some(options) = survivor else {
                self.best = self.best.min(size);
                return;
            };
            let mut ranked: Vec<(usize, &VertexSet)> = options
                .iter()
                .map(|o| (o.len() - o.intersection_len(removed), o))
                .collect();
            ranked.sort_by_key(|(extra, _)| *extra);
            for (extra, option) in ranked {
                if size + extra >= self.best {
                    break;
                }
                self.node(&removed.union(option));
            }
        }
    }

    let limit = cap.map_or(m, |c| c.min(m));
    let mut search = Bondage {
        kills: &kills,
        best: limit + 1,
    };
    search.node(&VertexSet::empty(m));
    Ok((search.best <= limit).then_some(search.best))
}

/// Every 2-vertex deletion lowers γ.
pub fn is_bicritical(g: &Graph) -> Result<bool> {
    let n = g.order();
    if n < 3 {
        return Err(Error::TooFewVertices { needed: 3, n });
    }
    let gamma = domination_number(g);
    for x in 0..n {
        for y in x + 1..n {
            let pair = VertexSet::from_vertices(n, [x, y]);
            if domination_number(&g.delete_vertices(&pair)) >= gamma {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every single non-edge addition lowers γ. Complete graphs have no
/// non-edges and are rejected.
pub fn is_gamma_ea_critical(g: &Graph) -> Result<bool> {
    if g.is_complete() {
        return Err(Error::CompleteGraph);
    }
    let gamma = domination_number(g);
    let n = g.order();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && domination_number(&g.add_edge(u, v)?) >= gamma {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BondageMode {
    Skip,
    /// Search up to a fixed number of edges.
    Cap(usize),
    /// Search up to `δ(G) + 2` edges.
    MinDegreePlusTwo,
    Unbounded,
}

#[derive(Debug, Clone, Copy)]
pub struct ReportOptions {
    /// Number of γ-sets to list; `0` omits the listing.
    pub gamma_set_cap: usize,
    pub bondage: BondageMode,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            gamma_set_cap: DEFAULT_GAMMA_SET_CAP,
            bondage: BondageMode::MinDegreePlusTwo,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationReport {
    pub gamma: usize,
    pub gamma_set_count: u64,
    pub gamma_sets: Option<Vec<VertexSet>>,
    pub unique: bool,
    pub critical_vertices: VertexSet,
    pub is_vc: bool,
    /// Absent when skipped, when the graph is edgeless, or when no removal
    /// within the cap raises γ.
    pub bondage: Option<usize>,
}

pub fn analyze(g: &Graph, options: &ReportOptions) -> DominationReport {
    let gamma = domination_number(g);
    let (count, sets) = run_enumeration(g, gamma, None, options.gamma_set_cap);
    let critical = critical_from_profile(g.order(), gamma, &vertex_deletion_gammas(g));
    let is_vc = critical.len() == g.order();
    let cap = match options.bondage {
        BondageMode::Skip => None,
        BondageMode::Cap(k) => Some(Some(k)),
        BondageMode::MinDegreePlusTwo => Some(Some(g.min_degree() + 2)),
        BondageMode::Unbounded => Some(None),
    };
    let bondage = match cap {
        Some(cap) if g.size() > 0 => bondage_number(g, cap).expect("graph has edges"),
        _ => None,
    };
    DominationReport {
        gamma,
        gamma_set_count: count,
        gamma_sets: (options.gamma_set_cap > 0).then_some(sets),
        unique: count == 1,
        critical_vertices: critical,
        is_vc,
        bondage,
    }
}
