//! Efficient dominating sets (perfect codes) as exact covers of the vertex set
//! by closed neighbourhoods.
//!
//! The backtracking picks the uncovered vertex with the fewest admissible
//! covering neighbourhoods, where `N[u]` is admissible only while it is
//! disjoint from everything covered so far. Each exact cover is reached once.

use std::collections::BinaryHeap;

use serde::Serialize;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdsResult {
    pub exists: bool,
    /// Lexicographically first sets, up to the requested cap.
    pub sets: Vec<VertexSet>,
    /// Exact number of efficient dominating sets.
    pub count: u64,
}

struct Cover<'a> {
    n: usize,
    closed: &'a [VertexSet],
    count: u64,
    limit: Option<u64>,
    keep: usize,
    kept: BinaryHeap<VertexSet>,
}

impl Cover<'_> {
    fn node(&mut self, covered: &VertexSet, chosen: &mut Vec<usize>) -> bool {
        if covered.len() == self.n {
            self.count += 1;
            if self.keep > 0 {
                self.kept.push(VertexSet::from_vertices(self.n, chosen.iter().copied()));
                if self.kept.len() > self.keep {
                    self.kept.pop();
                }
            }
            return self.limit.is_some_and(|l| self.count >= l);
        }
        let mut pivot = usize::MAX;
        let mut pivot_options = usize::MAX;
        for v in covered.complement().iter() {
            let options = self.closed[v]
                .iter()
                .filter(|&u| self.closed[u].is_disjoint(covered))
                .count();
            if options < pivot_options {
                pivot = v;
                pivot_options = options;
                if options <= 1 {
                    break;
                }
            }
        }
        if pivot_options == 0 {
            return false;
        }
        let candidates: Vec<usize> = self.closed[pivot]
            .iter()
            .filter(|&u| self.closed[u].is_disjoint(covered))
            .collect();
        for u in candidates {
            chosen.push(u);
            let stop = self.node(&covered.union(&self.closed[u]), chosen);
            chosen.pop();
            if stop {
                return true;
            }
        }
        false
    }
}

fn run(g: &Graph, limit: Option<u64>, keep: usize) -> (u64, Vec<VertexSet>) {
    let n = g.order();
    let closed = g.closed_neighborhoods();
    let mut cover = Cover {
        n,
        closed: &closed,
        count: 0,
        limit,
        keep,
        kept: BinaryHeap::new(),
    };
    cover.node(&VertexSet::empty(n), &mut Vec::new());
    (cover.count, cover.kept.into_sorted_vec())
}

/// Some efficient dominating set, if one exists. For the order-zero graph
/// this is the empty set.
pub fn find_eds(g: &Graph) -> Option<VertexSet> {
    let (_, mut sets) = run(g, Some(1), 1);
    sets.pop()
}

pub fn has_eds(g: &Graph) -> bool {
    run(g, Some(1), 0).0 > 0
}

/// Number of efficient dominating sets, stopping once `limit` is reached.
pub fn count_eds(g: &Graph, limit: Option<u64>) -> u64 {
    run(g, limit, 0).0
}

/// All efficient dominating sets in lexicographic order, truncated at `cap`;
/// `count` is exact.
pub fn enumerate_eds(g: &Graph, cap: usize) -> EdsResult {
    let (count, sets) = run(g, None, cap);
    EdsResult {
        exists: count > 0,
        sets,
        count,
    }
}

/// Closed neighbourhoods of `set` partition the vertex set.
pub fn is_efficient_dominating_set(g: &Graph, set: &VertexSet) -> bool {
    let mut covered = VertexSet::empty(g.order());
    for v in set {
        let nb = g.closed_neighborhood(v);
        if !nb.is_disjoint(&covered) {
            return false;
        }
        covered.union_with(&nb);
    }
    covered.len() == g.order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{bull, complete, cycle, path};

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn find_examples() {
        assert_eq!(find_eds(&path(3)), Some(set(3, &[1])));
        assert_eq!(find_eds(&cycle(4)), None);
        assert_eq!(find_eds(&complete(3).corona()), Some(set(6, &[3, 4, 5])));
        assert_eq!(find_eds(&Graph::empty(0)), Some(VertexSet::empty(0)));
    }

    #[test]
    fn enumerate_examples() {
        let p6 = enumerate_eds(&path(6), 10);
        assert_eq!(p6.sets, vec![set(6, &[1, 4])]);
        // oracle scan over 2-subsets of C₆: {0,3}, {1,4}, {2,5}
        let c6 = enumerate_eds(&cycle(6), 10);
        assert_eq!(c6.count, 3);
        assert_eq!(c6.sets, vec![set(6, &[0, 3]), set(6, &[1, 4]), set(6, &[2, 5])]);
        let k2 = enumerate_eds(&complete(2), 10);
        assert_eq!(k2.sets, vec![set(2, &[0]), set(2, &[1])]);
        let capped = enumerate_eds(&cycle(6), 1);
        assert_eq!((capped.count, capped.sets.len()), (3, 1));
    }

    #[test]
    fn existence_examples() {
        assert!(!has_eds(&cycle(5)));
        assert!(!has_eds(&bull()));
        assert_eq!(find_eds(&path(4)), Some(set(4, &[0, 3])));
        assert!(has_eds(&Graph::empty(3)));
        assert_eq!(find_eds(&Graph::empty(3)), Some(set(3, &[0, 1, 2])));
    }

    #[test]
    fn partition_check() {
        assert!(is_efficient_dominating_set(&path(4), &set(4, &[0, 3])));
        assert!(!is_efficient_dominating_set(&path(4), &set(4, &[1, 2])));
        assert!(!is_efficient_dominating_set(&path(4), &set(4, &[0])));
    }
}
