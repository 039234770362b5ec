//! Immutable simple undirected graphs and the graph operations used
//! throughout the toolkit.

use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as one open-neighbourhood bit row per vertex. Rows are
/// symmetric and loop-free; every constructor enforces this and there is no
/// way to mutate a graph in place. Operations such as [`Graph::delete_vertex`]
/// return new graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph of order `n`.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating symmetry and loops.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        for (v, row) in adj.iter().enumerate() {
            if row.universe() != n {
                return Err(Error::InvalidParameter(format!(
                    "row {v} has universe {} instead of {n}",
                    row.universe()
                )));
            }
            if row.contains(v) {
                return Err(Error::Loop(v));
            }
            if let Some(u) = row.iter().find(|&u| !adj[u].contains(v)) {
                return Err(Error::InvalidParameter(format!(
                    "asymmetric adjacency between {v} and {u}"
                )));
            }
        }
        Ok(Graph { n, adj })
    }

    /// Trusted constructor for rows that are already symmetric and loop-free.
    pub(crate) fn from_rows_unchecked(adj: Vec<VertexSet>) -> Self {
        debug_assert!(Graph::from_adjacency(adj.clone()).is_ok());
        Graph { n: adj.len(), adj }
    }

    /// Builds a graph whose rows are single `u64` words (`n <= 64`).
    pub(crate) fn from_word_rows(rows: &[u64]) -> Self {
        let n = rows.len();
        Graph::from_rows_unchecked(rows.iter().map(|&w| VertexSet::from_word(n, w)).collect())
    }

    /// Single-word adjacency rows. Only valid for `n <= 64`.
    pub(crate) fn word_rows(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        self.adj
            .iter()
            .map(|row| if self.n == 0 { 0 } else { row.word(0) })
            .collect()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges as `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    /// `N[v] = N(v) ∪ {v}`. Panics when `v` is out of range.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn closed_neighborhoods(&self) -> Vec<VertexSet> {
        (0..self.n).map(|v| self.closed_neighborhood(v)).collect()
    }

    /// `N[A]`, the union of the closed neighbourhoods of `set`.
    pub fn closed_neighborhood_of_set(&self, set: &VertexSet) -> VertexSet {
        let mut out = set.clone();
        for v in set {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// Minimum degree; `0` for the order-zero graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Maximum degree; `0` for the order-zero graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    pub fn is_complete(&self) -> bool {
        self.size() * 2 == self.n * self.n.saturating_sub(1)
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n);
        let adj = (0..self.n)
            .map(|v| {
                let mut row = full.difference(&self.adj[v]);
                row.remove(v);
                row
            })
            .collect();
        Graph::from_rows_unchecked(adj)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + self.n, v + self.n)));
        Graph::from_edges(n, &edges).expect("shifted edges are in range")
    }

    /// `self ∨ other`: disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut edges = self.disjoint_union(other).edges();
        for u in 0..self.n {
            for v in 0..other.n {
                edges.push((u, self.n + v));
            }
        }
        Graph::from_edges(self.n + other.n, &edges).expect("join edges are in range")
    }

    /// The corona `self ∘ K₁`. The leaf attached to vertex `i` is `n + i`.
    pub fn corona(&self) -> Graph {
        let mut edges = self.edges();
        edges.extend((0..self.n).map(|i| (i, self.n + i)));
        Graph::from_edges(2 * self.n, &edges).expect("corona edges are in range")
    }

    /// Identifies vertex `u` of `self` with vertex `v` of `other`.
    ///
    /// Vertices of `self` keep their labels (the merged vertex is `u`); the
    /// remaining vertices of `other` follow in their original relative order.
    pub fn coalescence(&self, u: usize, other: &Graph, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        other.check_vertex(v)?;
        let relabel = |w: usize| -> usize {
            match w.cmp(&v) {
                std::cmp::Ordering::Equal => u,
                std::cmp::Ordering::Less => self.n + w,
                std::cmp::Ordering::Greater => self.n + w - 1,
            }
        };
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(a, b)| (relabel(a), relabel(b))));
        Graph::from_edges(self.n + other.n - 1, &edges)
    }

    /// `G − v`. The remaining vertices are relabelled `0..n-1` preserving
    /// their relative order, so vertex `w > v` becomes `w - 1`.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let adj = (0..self.n)
            .filter(|&w| w != v)
            .map(|w| self.adj[w].without_vertex(v))
            .collect();
        Ok(Graph::from_rows_unchecked(adj))
    }

    /// The subgraph induced by `keep`, relabelled in increasing order.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Graph {
        let kept: Vec<usize> = keep.iter().filter(|&v| v < self.n).collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let k = kept.len();
        let adj = kept
            .iter()
            .map(|&v| {
                VertexSet::from_vertices(
                    k,
                    self.adj[v].iter().filter(|&w| index[w] != usize::MAX).map(|w| index[w]),
                )
            })
            .collect();
        Graph::from_rows_unchecked(adj)
    }

    /// `G − S` for a vertex set `S`, with order-preserving relabelling.
    pub fn delete_vertices(&self, remove: &VertexSet) -> Graph {
        self.induced_subgraph(&VertexSet::full(self.n).difference(remove))
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::EdgeMissing(u, v));
        }
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        Ok(g)
    }

    /// Removes every listed edge; each must be present.
    pub fn delete_edges(&self, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if !g.has_edge(u, v) {
                return Err(Error::EdgeMissing(u, v));
            }
            g.adj[u].remove(v);
            g.adj[v].remove(u);
        }
        Ok(g)
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::EdgeExists(u, v));
        }
        let mut g = self.clone();
        g.adj[u].insert(v);
        g.adj[v].insert(u);
        Ok(g)
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(self.n);
            comp.insert(start);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let mut next = VertexSet::empty(self.n);
                for v in &frontier {
                    next.union_with(&self.adj[v]);
                }
                next.difference_with(&comp);
                comp.union_with(&next);
                frontier = next;
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    /// The order-zero graph is not considered connected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// Bridges as `(u, v)` with `u < v`, sorted.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        let mut out = self.low_link().bridges;
        out.sort_unstable();
        out
    }

    pub fn cut_vertices(&self) -> VertexSet {
        self.low_link().cut_vertices
    }

    /// Connected, at least two vertices, and no bridge.
    pub fn is_2_edge_connected(&self) -> bool {
        self.n >= 2 && self.is_connected() && self.low_link().bridges.is_empty()
    }

    pub fn has_cut_vertex(&self) -> bool {
        !self.low_link().cut_vertices.is_empty()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.size() + 1 == self.n
    }

    pub fn is_unicyclic(&self) -> bool {
        self.is_connected() && self.size() == self.n
    }

    fn low_link(&self) -> LowLink {
        let mut state = LowLink {
            disc: vec![usize::MAX; self.n],
            low: vec![0; self.n],
            time: 0,
            bridges: Vec::new(),
            cut_vertices: VertexSet::empty(self.n),
        };
        for root in 0..self.n {
            if state.disc[root] == usize::MAX {
                state.visit(self, root, usize::MAX);
            }
        }
        state
    }
}

struct LowLink {
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    bridges: Vec<(usize, usize)>,
    cut_vertices: VertexSet,
}

impl LowLink {
    fn visit(&mut self, g: &Graph, v: usize, parent: usize) {
        self.disc[v] = self.time;
        self.low[v] = self.time;
        self.time += 1;
        let mut children = 0;
        for w in g.neighbors(v) {
            if self.disc[w] == usize::MAX {
                children += 1;
                self.visit(g, w, v);
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] > self.disc[v] {
                    self.bridges.push((v.min(w), v.max(w)));
                }
                if parent != usize::MAX && self.low[w] >= self.disc[v] {
                    self.cut_vertices.insert(v);
                }
            } else if w != parent {
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
        if parent == usize::MAX && children > 1 {
            self.cut_vertices.insert(v);
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path};

    #[test]
    fn from_edges_collapses_duplicates() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.size(), 2);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::from_edges(2, &[(1, 1)]), Err(Error::Loop(1)));
    }

    #[test]
    fn small_constructions() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(k2, complete(2));
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4, cycle(4));
        let k1 = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.size(), 0);
    }

    #[test]
    fn closed_neighborhood_of_c4() {
        assert_eq!(cycle(4).closed_neighborhood(0).to_vec(), vec![0, 1, 3]);
    }

    #[test]
    fn complement_of_k4_minus_matching_is_two_k2() {
        let g = crate::families::complete_minus_perfect_matching(4).unwrap();
        let c = g.complement();
        assert_eq!(c.edges(), vec![(0, 1), (2, 3)]);
        assert_eq!(c.components().len(), 2);
    }

    #[test]
    fn corona_labels_leaves_after_originals() {
        let g = complete(3).corona();
        assert_eq!(g.order(), 6);
        for i in 0..3 {
            assert!(g.has_edge(i, 3 + i));
            assert_eq!(g.degree(3 + i), 1);
        }
        assert_eq!(g.size(), 6);
    }

    #[test]
    fn coalescence_of_two_squares() {
        let c4 = cycle(4);
        let g = c4.coalescence(0, &c4, 0).unwrap();
        assert_eq!(g.order(), 7);
        assert_eq!(g.size(), 8);
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.cut_vertices().to_vec(), vec![0]);
        assert!(g.is_2_edge_connected());
        assert!(g.bridges().is_empty());
    }

    #[test]
    fn coalescence_relabels_second_graph() {
        let p2 = path(2);
        let p3 = path(3);
        // identify vertex 1 of P2 with the middle of P3
        let g = p2.coalescence(1, &p3, 1).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (1, 3)]);
    }

    #[test]
    fn delete_vertex_relabels() {
        let g = path(4).delete_vertex(1).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edges(), vec![(1, 2)]);
        assert!(cycle(3).delete_vertex(3).is_err());
    }

    #[test]
    fn edge_edits_check_existence() {
        let c4 = cycle(4);
        assert_eq!(c4.delete_edge(0, 2), Err(Error::EdgeMissing(0, 2)));
        assert_eq!(c4.add_edge(0, 1), Err(Error::EdgeExists(0, 1)));
        assert!(c4.add_edge(0, 2).unwrap().has_edge(2, 0));
        assert_eq!(c4.delete_edge(0, 1).unwrap().size(), 3);
    }

    #[test]
    fn structural_predicates() {
        assert!(cycle(7).is_2_edge_connected());
        assert!(!path(3).is_2_edge_connected());
        assert!(!complete(2).is_2_edge_connected());
        assert!(path(5).is_tree());
        assert!(!path(5).is_unicyclic());
        assert!(cycle(5).is_unicyclic());
        assert!(path(3).has_cut_vertex());
        assert!(!cycle(6).has_cut_vertex());
        assert!(!Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(!Graph::empty(2).is_connected());
        assert_eq!(path(4).bridges(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn join_of_k1_and_empty_is_star() {
        let star = Graph::empty(1).join(&Graph::empty(3));
        assert_eq!(star.degree(0), 3);
        assert_eq!(star.size(), 3);
    }

    #[test]
    fn multiword_graph_operations() {
        let g = cycle(100);
        assert_eq!(g.size(), 100);
        assert!(g.has_edge(99, 0));
        assert!(g.has_edge(63, 64));
        let h = g.delete_vertex(64).unwrap();
        assert!(!h.has_edge(63, 64));
        assert!(h.has_edge(64, 65));
        assert!(h.is_tree());
        assert_eq!(g.complement().size(), 100 * 99 / 2 - 100);
    }
}
