//! Canonical labelling by colour refinement plus individualisation.
//!
//! The search tree branches on the first smallest non-singleton cell of the
//! equitable partition. Two vertices of a branching cell that are twins
//! (`N(u) − w = N(w) − u`) lead to isomorphic subtrees, so only one vertex
//! per twin class is tried; this keeps complete graphs, empty graphs and
//! complete multipartite graphs linear instead of factorial. Leaves are
//! compared by their relabelled adjacency rows and the largest wins.
//!
//! Supported for graphs of order at most 64.

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_CANON_ORDER: usize = 64;

type Cells = SmallVec<[u64; 16]>;
type Rows = SmallVec<[u64; 16]>;

#[inline]
fn bits(mut w: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if w == 0 {
            None
        } else {
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(b)
        }
    })
}

/// Splits every cell by neighbour counts into every other cell until the
/// ordered partition is equitable. Fragments are ordered by ascending count.
fn refine(rows: &[u64], cells: &mut Cells) {
    loop {
        let mut changed = false;
        let mut si = 0;
        while si < cells.len() {
            let splitter = cells[si];
            let mut ci = 0;
            while ci < cells.len() {
                let cell = cells[ci];
                if cell & (cell - 1) == 0 {
                    ci += 1;
                    continue;
                }
                let mut seen: u128 = 0;
                for v in bits(cell) {
                    seen |= 1u128 << (rows[v] & splitter).count_ones();
                }
                if seen & (seen - 1) == 0 {
                    ci += 1;
                    continue;
                }
                let mut fragments: SmallVec<[u64; 8]> = SmallVec::new();
                let mut counts = seen;
                while counts != 0 {
                    let c = counts.trailing_zeros();
                    counts &= counts - 1;
                    let mut frag = 0u64;
                    for v in bits(cell) {
                        if (rows[v] & splitter).count_ones() == c {
                            frag |= 1 << v;
                        }
                    }
                    fragments.push(frag);
                }
                let k = fragments.len();
                cells.remove(ci);
                for (offset, f) in fragments.into_iter().enumerate() {
                    cells.insert(ci + offset, f);
                }
                ci += k;
                changed = true;
            }
            si += 1;
        }
        if !changed {
            return;
        }
    }
}

struct Search<'a> {
    rows: &'a [u64],
    best: Option<(Rows, SmallVec<[u8; 16]>)>,
}

impl Search<'_> {
    fn leaf(&mut self, cells: &Cells) {
        let n = self.rows.len();
        let order: SmallVec<[u8; 16]> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
        let mut pos = [0u8; MAX_CANON_ORDER];
        for (i, &v) in order.iter().enumerate() {
            pos[v as usize] = i as u8;
        }
        let mut cert: Rows = SmallVec::with_capacity(n);
        for &v in &order {
            let mut row = 0u64;
            for w in bits(self.rows[v as usize]) {
                row |= 1 << pos[w];
            }
            cert.push(row);
        }
        match &self.best {
            Some((best, _)) if cert <= *best => {}
            _ => self.best = Some((cert, order)),
        }
    }

    fn descend(&mut self, mut cells: Cells) {
        refine(self.rows, &mut cells);
        if cells.len() == self.rows.len() {
            self.leaf(&cells);
            return;
        }
        let (target, cell) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, &c)| (i, c))
            .expect("non-discrete partition has a non-singleton cell");
        let mut tried = 0u64;
        for v in bits(cell) {
            let twin = bits(tried).any(|w| {
                self.rows[v] & !(1u64 << w) == self.rows[w] & !(1u64 << v)
            });
            if twin {
                continue;
            }
            let mut next = cells.clone();
            next[target] = cell & !(1u64 << v);
            next.insert(target, 1u64 << v);
            self.descend(next);
            tried |= 1 << v;
        }
    }
}

/// Canonical order and certificate rows for single-word adjacency rows.
fn canonical_rows(rows: &[u64]) -> (Rows, SmallVec<[u8; 16]>) {
    let n = rows.len();
    if n == 0 {
        return (Rows::new(), SmallVec::new());
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut search = Search { rows, best: None };
    let mut cells = Cells::new();
    cells.push(all);
    search.descend(cells);
    search.best.expect("search visits at least one leaf")
}

/// Packs the strict upper triangle of canonical rows (order ≤ 16).
pub(crate) fn canonical_key(rows: &[u64]) -> u128 {
    let n = rows.len();
    debug_assert!(n <= 16);
    let (cert, _) = canonical_rows(rows);
    let mut key = 0u128;
    for (i, &row) in cert.iter().enumerate() {
        let width = n - 1 - i;
        key = (key << width) | (row >> (i + 1)) as u128;
    }
    key
}

/// Inverse of [`canonical_key`] for a known order.
pub(crate) fn rows_from_key(n: usize, mut key: u128) -> Vec<u64> {
    let mut rows = vec![0u64; n];
    for i in (0..n).rev() {
        let width = n - 1 - i;
        let upper = (key & ((1u128 << width) - 1)) as u64;
        key >>= width;
        for j in bits(upper) {
            let j = j + i + 1;
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
        }
    }
    rows
}

fn check_order(g: &Graph) -> Result<()> {
    if g.order() > MAX_CANON_ORDER {
        Err(Error::OrderTooLarge {
            what: "canonical labelling",
            n: g.order(),
            limit: MAX_CANON_ORDER,
        })
    } else {
        Ok(())
    }
}

/// `labelling[i]` is the original vertex placed at canonical position `i`.
pub fn canonical_labelling(g: &Graph) -> Result<Vec<usize>> {
    check_order(g)?;
    let (_, order) = canonical_rows(&g.word_rows());
    Ok(order.into_iter().map(usize::from).collect())
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    check_order(g)?;
    let (cert, _) = canonical_rows(&g.word_rows());
    Ok(Graph::from_word_rows(&cert))
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    let mut dg: Vec<_> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<_> = (0..h.order()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

impl Graph {
    /// Whether `g ≅ complement(g)`, by canonical-form comparison.
    pub fn is_self_complementary(&self) -> Result<bool> {
        let n = self.order();
        if 4 * self.size() != n * n.saturating_sub(1) {
            return Ok(false);
        }
        are_isomorphic(self, &self.complement())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{bull, complete, cycle, path, star};

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let edges: Vec<_> = g.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(g.order(), &edges).unwrap()
    }

    #[test]
    fn relabelled_graphs_share_a_form() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        let h = relabel(&g, &[5, 3, 1, 0, 2, 4]);
        assert_ne!(g, h);
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        assert!(are_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn labelling_maps_to_form() {
        let g = path(5);
        let lab = canonical_labelling(&g).unwrap();
        let mut pos = vec![0; 5];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        assert_eq!(relabel(&g, &pos), canonical_form(&g).unwrap());
    }

    #[test]
    fn distinguishes_non_isomorphic_graphs() {
        assert!(!are_isomorphic(&cycle(6), &cycle(3).disjoint_union(&cycle(3))).unwrap());
        assert!(!are_isomorphic(&path(4), &star(3)).unwrap());
    }

    #[test]
    fn symmetric_graphs_finish_quickly() {
        let k = complete(40);
        assert_eq!(canonical_form(&k).unwrap(), k);
        let e = Graph::empty(40);
        assert_eq!(canonical_form(&e).unwrap(), e);
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        let h = relabel(&petersen, &[3, 7, 1, 9, 0, 2, 8, 4, 6, 5]);
        assert!(are_isomorphic(&petersen, &h).unwrap());
    }

    #[test]
    fn self_complementary_examples() {
        assert!(cycle(5).is_self_complementary().unwrap());
        assert!(bull().is_self_complementary().unwrap());
        assert!(path(4).is_self_complementary().unwrap());
        assert!(Graph::empty(1).is_self_complementary().unwrap());
        assert!(!cycle(6).is_self_complementary().unwrap());
        assert!(!star(4).is_self_complementary().unwrap());
    }

    #[test]
    fn key_round_trip() {
        let g = cycle(7).add_edge(0, 3).unwrap();
        let key = canonical_key(&g.word_rows());
        let rows = rows_from_key(7, key);
        assert_eq!(Graph::from_word_rows(&rows), canonical_form(&g).unwrap());
    }

    #[test]
    fn order_limit() {
        assert!(canonical_form(&cycle(65)).is_err());
    }
}
