use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::domination::{
    bondage_number, count_min_dominating_sets, domination_number, is_bicritical, is_gamma_ea_critical,
};
use crate::eds::has_eds;
use crate::enumerate::{graphs_in_range, trees_of_order, unicyclic_graphs_of_order, MAX_SPARSE_ORDER};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypo::{is_hypo_ed, is_hypo_ud};
use crate::io::write_graph6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProblemId {
    /// Hypo-UD graphs with a cut vertex.
    CutVertex,
    /// Bicritical hypo-UD graphs.
    Bicrit,
    /// Self-complementary hypo-ED or hypo-UD graphs.
    SelfComp,
    /// Hypo-ED trees and unicyclic graphs.
    EdTrees,
    /// Hypo-ED graphs with γ = 2.
    EdGamma2,
    /// Hypo-ED graphs whose complement has an EDS.
    CompEds,
    /// Hypo-UD graphs whose complement has a unique γ-set.
    CompUd,
    /// Orders and domination numbers realised by hypo graphs.
    Pairs,
    /// Edge-count extremes per class, order and domination number.
    EdgeCount,
    /// Hypo-UD graphs with `b(G) < δ(G) + 1`.
    BondEq,
    /// Hypo-ED or hypo-UD graphs that are γ-EA-critical.
    EaCrit,
}

impl ProblemId {
    pub const ALL: &'static [ProblemId] = &[
        ProblemId::CutVertex,
        ProblemId::Bicrit,
        ProblemId::SelfComp,
        ProblemId::EdTrees,
        ProblemId::EdGamma2,
        ProblemId::CompEds,
        ProblemId::CompUd,
        ProblemId::Pairs,
        ProblemId::EdgeCount,
        ProblemId::BondEq,
        ProblemId::EaCrit,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ProblemId::CutVertex => "CUTVERTEX",
            ProblemId::Bicrit => "BICRIT",
            ProblemId::SelfComp => "SELFCOMP",
            ProblemId::EdTrees => "ED_TREES",
            ProblemId::EdGamma2 => "ED_GAMMA2",
            ProblemId::CompEds => "COMP_EDS",
            ProblemId::CompUd => "COMP_UD",
            ProblemId::Pairs => "PAIRS",
            ProblemId::EdgeCount => "EDGECOUNT",
            ProblemId::BondEq => "BOND_EQ",
            ProblemId::EaCrit => "EA_CRIT",
        }
    }
}

impl FromStr for ProblemId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.to_ascii_uppercase();
        ProblemId::ALL
            .iter()
            .copied()
            .find(|p| p.as_str() == upper)
            .ok_or_else(|| Error::UnknownProblem(s.to_string()))
    }
}

impl fmt::Display for ProblemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest order of the built-in stream; defaults to 7 (12 for ED_TREES).
    pub max_n: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub g6: String,
    pub detail: String,
}

/// Counts of hypo graphs per class, order and domination number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub class: &'static str,
    pub n: usize,
    pub gamma: usize,
    pub count: u64,
    pub min_edges: usize,
    pub max_edges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub problem: String,
    pub range: String,
    pub n_checked: u64,
    pub matches: Vec<Witness>,
    pub table: Vec<TableRow>,
}

struct Facts {
    m: usize,
    gamma: usize,
    ed: bool,
    ud: bool,
}

fn facts(g: &Graph) -> Facts {
    Facts {
        m: g.size(),
        gamma: domination_number(g),
        ed: is_hypo_ed(g),
        ud: is_hypo_ud(g),
    }
}

fn classes(f: &Facts) -> String {
    match (f.ed, f.ud) {
        (true, true) => "hypo-ED, hypo-UD",
        (true, false) => "hypo-ED",
        (false, true) => "hypo-UD",
        (false, false) => "",
    }
    .to_string()
}

fn unique_gamma_set(g: &Graph) -> bool {
    count_min_dominating_sets(g, Some(2)) == 1
}

/// Detail line for a match, or `None` when `g` does not match.
fn evaluate(problem: ProblemId, g: &Graph) -> Option<String> {
    let n = g.order();
    match problem {
        ProblemId::CutVertex => (g.has_cut_vertex() && is_hypo_ud(g)).then(|| {
            format!("n={n} m={} cut vertices {}", g.size(), g.cut_vertices())
        }),
        ProblemId::Bicrit => (n >= 3 && is_hypo_ud(g) && is_bicritical(g).unwrap_or(false))
            .then(|| format!("n={n} gamma={}", domination_number(g))),
        ProblemId::SelfComp => {
            if !g.is_self_complementary().unwrap_or(false) {
                return None;
            }
            let f = facts(g);
            (f.ed || f.ud).then(|| format!("n={n} m={} gamma={} {}", f.m, f.gamma, classes(&f)))
        }
        ProblemId::EdTrees => {
            let kind = if g.is_tree() {
                "tree"
            } else if g.is_unicyclic() {
                "unicyclic"
            } else {
                return None;
            };
            is_hypo_ed(g).then(|| format!("{kind} n={n} gamma={}", domination_number(g)))
        }
        ProblemId::EdGamma2 => (domination_number(g) == 2 && is_hypo_ed(g))
            .then(|| format!("n={n} m={} delta={} Delta={}", g.size(), g.min_degree(), g.max_degree())),
        ProblemId::CompEds => (is_hypo_ed(g) && has_eds(&g.complement())).then(|| {
            let hc = is_hypo_ed(&g.complement());
            format!("n={n} gamma={} complement hypo-ED={hc}", domination_number(g))
        }),
        ProblemId::CompUd => (is_hypo_ud(g) && unique_gamma_set(&g.complement())).then(|| {
            format!("n={n} gamma={} complement gamma={}", domination_number(g), domination_number(&g.complement()))
        }),
        ProblemId::BondEq => {
            if !is_hypo_ud(g) {
                return None;
            }
            let target = g.min_degree() + 1;
            match bondage_number(g, Some(target - 1)) {
                Ok(Some(b)) => Some(format!("n={n} b={b} delta+1={target}")),
                _ => None,
            }
        }
        ProblemId::EaCrit => {
            if g.is_complete() || !is_gamma_ea_critical(g).unwrap_or(false) {
                return None;
            }
            let f = facts(g);
            (f.ed || f.ud).then(|| format!("n={n} m={} gamma={} {}", f.m, f.gamma, classes(&f)))
        }
        ProblemId::Pairs | ProblemId::EdgeCount => None,
    }
}

fn default_stream(problem: ProblemId, limits: &SearchLimits) -> Result<(String, Vec<Graph>)> {
    if problem == ProblemId::EdTrees {
        let max_n = limits.max_n.unwrap_or(12);
        if max_n > MAX_SPARSE_ORDER {
            return Err(Error::RangeGuard(format!("order {max_n} exceeds {MAX_SPARSE_ORDER}")));
        }
        let mut graphs = Vec::new();
        for n in 1..=max_n {
            graphs.extend(trees_of_order(n)?);
            if n >= 3 {
                graphs.extend(unicyclic_graphs_of_order(n)?);
            }
        }
        return Ok((format!("trees and unicyclic graphs of order 1..={max_n}"), graphs));
    }
    let max_n = limits.max_n.unwrap_or(7);
    if max_n > crate::enumerate::MAX_ENUMERATION_ORDER {
        return Err(Error::RangeGuard(format!(
            "order {max_n} exceeds {}",
            crate::enumerate::MAX_ENUMERATION_ORDER
        )));
    }
    Ok((format!("all graphs of order 1..={max_n}"), graphs_in_range(1, max_n, false)?))
}

/// Runs one open-problem search over `stream`, or over the built-in
/// exhaustive stream when `stream` is `None`. Matches are listed in stream
/// order; PAIRS and EDGECOUNT aggregate into `table` instead.
pub fn search_open_problems(
    problem: ProblemId,
    stream: Option<&[Graph]>,
    limits: &SearchLimits,
) -> Result<SearchReport> {
    let owned;
    let (range, graphs): (String, &[Graph]) = match stream {
        Some(s) => (format!("input stream of {} graphs", s.len()), s),
        None => {
            owned = default_stream(problem, limits)?;
            (owned.0.clone(), &owned.1)
        }
    };
    let mut report = SearchReport {
        problem: problem.as_str().to_string(),
        range,
        n_checked: graphs.len() as u64,
        matches: Vec::new(),
        table: Vec::new(),
    };
    if matches!(problem, ProblemId::Pairs | ProblemId::EdgeCount) {
        let all: Vec<(usize, Facts)> = graphs.par_iter().map(|g| (g.order(), facts(g))).collect();
        let mut rows: BTreeMap<(&'static str, usize, usize), TableRow> = BTreeMap::new();
        let mut first: BTreeMap<(&'static str, usize, usize), usize> = BTreeMap::new();
        for (idx, (n, f)) in all.iter().enumerate() {
            for (class, member) in [("hypo-ED", f.ed), ("hypo-UD", f.ud)] {
                if !member {
                    continue;
                }
                let key = (class, *n, f.gamma);
                first.entry(key).or_insert(idx);
                let row = rows.entry(key).or_insert(TableRow {
                    class,
                    n: *n,
                    gamma: f.gamma,
                    count: 0,
                    min_edges: usize::MAX,
                    max_edges: 0,
                });
                row.count += 1;
                row.min_edges = row.min_edges.min(f.m);
                row.max_edges = row.max_edges.max(f.m);
            }
        }
        if problem == ProblemId::Pairs {
            for (&(class, n, gamma), &idx) in &first {
                report.matches.push(Witness {
                    g6: write_graph6(&graphs[idx]),
                    detail: format!("{class} n={n} gamma={gamma}"),
                });
            }
        }
        report.table = rows.into_values().collect();
        return Ok(report);
    }
    let found: Vec<Option<String>> = graphs.par_iter().map(|g| evaluate(problem, g)).collect();
    for (g, detail) in graphs.iter().zip(found) {
        if let Some(detail) = detail {
            report.matches.push(Witness {
                g6: write_graph6(g),
                detail,
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::families::{bull, cycle};
    use crate::io::parse_graph6;

    #[test]
    fn selfcomp_at_order_five() {
        let stream = crate::enumerate::graphs_of_order(5).unwrap();
        let r = search_open_problems(ProblemId::SelfComp, Some(&stream), &SearchLimits::default()).unwrap();
        assert_eq!(r.matches.len(), 2);
        let found: Vec<Graph> = r.matches.iter().map(|w| parse_graph6(&w.g6).unwrap()).collect();
        assert!(found.iter().any(|g| are_isomorphic(g, &cycle(5)).unwrap()));
        assert!(found.iter().any(|g| are_isomorphic(g, &bull()).unwrap()));
    }

    #[test]
    fn pairs_table_is_consistent() {
        let limits = SearchLimits { max_n: Some(6) };
        let r = search_open_problems(ProblemId::Pairs, None, &limits).unwrap();
        assert!(r.table.iter().any(|row| row.class == "hypo-UD" && row.n == 2 && row.gamma == 1));
        assert!(r.table.iter().any(|row| row.class == "hypo-ED" && row.n == 4 && row.gamma == 2));
        assert_eq!(r.matches.len(), r.table.len());
        assert!(r.table.iter().all(|row| row.min_edges <= row.max_edges));
    }

    #[test]
    fn problem_ids_round_trip() {
        for &p in ProblemId::ALL {
            assert_eq!(p.as_str().parse::<ProblemId>().unwrap(), p);
        }
        assert!("nope".parse::<ProblemId>().is_err());
    }
}
