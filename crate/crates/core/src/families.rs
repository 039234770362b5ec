//! Named graph families: paths, cycles, complete graphs, circulants and the
//! extremal circulant constructions used by the verification harness.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Connection data for a circulant graph `C(n, S)`.
///
/// `S = {s₁ < … < s_k}` with `0 < s₁` and `s_k < (n + 1) / 2`, i.e. `2·s_k ≤ n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CirculantSpec {
    n: usize,
    connections: Vec<usize>,
}

impl CirculantSpec {
    pub fn new(n: usize, connections: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidCirculant("order must be positive".into()));
        }
        if connections.first() == Some(&0) {
            return Err(Error::InvalidCirculant("connections must be positive".into()));
        }
        if connections.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidCirculant(format!(
                "connections {connections:?} are not strictly increasing"
            )));
        }
        if let Some(&last) = connections.last() {
            if 2 * last > n {
                return Err(Error::InvalidCirculant(format!(
                    "connection {last} is not below (n+1)/2 for n = {n}"
                )));
            }
        }
        Ok(CirculantSpec { n, connections })
    }

    /// `C(n, {1, …, k})`.
    pub fn consecutive(n: usize, k: usize) -> Result<Self> {
        Self::new(n, (1..=k).collect())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn connections(&self) -> &[usize] {
        &self.connections
    }

    /// Common degree of every vertex.
    pub fn degree(&self) -> usize {
        let k = self.connections.len();
        match self.connections.last() {
            Some(&last) if 2 * last == self.n => 2 * k - 1,
            _ => 2 * k,
        }
    }
}

pub fn circulant(spec: &CirculantSpec) -> Graph {
    let n = spec.n;
    let mut edges = Vec::with_capacity(n * spec.connections.len());
    for i in 0..n {
        for &s in &spec.connections {
            edges.push((i, (i + s) % n));
        }
    }
    Graph::from_edges(n, &edges).expect("circulant edges are valid")
}

/// `P_n` with edges `i ~ i+1`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("path edges are valid")
}

/// `C_n` with edges `i ~ i+1 (mod n)`. Panics for `n < 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).expect("cycle edges are valid")
}

pub fn complete(n: usize) -> Graph {
    Graph::empty(n).complement()
}

/// `K_{1,k}` with centre `0`.
pub fn star(k: usize) -> Graph {
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    Graph::from_edges(k + 1, &edges).expect("star edges are valid")
}

/// `K_n` minus the perfect matching `{2i, 2i+1}`; `n` must be even.
pub fn complete_minus_perfect_matching(n: usize) -> Result<Graph> {
    if n % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "K_n minus a perfect matching needs even n, got {n}"
        )));
    }
    let matching: Vec<_> = (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect();
    complete(n).delete_edges(&matching)
}

/// `C(t(2k+1) − 1, {1, …, k})` for `k ≥ 1`, `t ≥ 2`.
pub fn extr1_spec(k: usize, t: usize) -> Result<CirculantSpec> {
    if k == 0 || t < 2 {
        return Err(Error::InvalidParameter(format!(
            "extr1 needs k >= 1 and t >= 2, got k = {k}, t = {t}"
        )));
    }
    CirculantSpec::consecutive(t * (2 * k + 1) - 1, k)
}

/// `C(8k+5, {1, …, k} ∪ {3k+2, …, 4k+2})` for `k ≥ 1`.
pub fn extr2_spec(k: usize) -> Result<CirculantSpec> {
    if k == 0 {
        return Err(Error::InvalidParameter("extr2 needs k >= 1".into()));
    }
    let mut s: Vec<usize> = (1..=k).collect();
    s.extend(3 * k + 2..=4 * k + 2);
    CirculantSpec::new(8 * k + 5, s)
}

/// The bull: a triangle `0,1,2` with pendant vertices on `0` and `1`.
pub fn bull() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]).expect("bull edges are valid")
}
