//! Brute-force reference computations, deliberately sharing no code with the
//! branch-and-bound and exact-cover solvers.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ORACLE_ORDER: usize = 16;

fn closed_masks(g: &Graph) -> Result<Vec<u32>> {
    let n = g.order();
    if n > MAX_ORACLE_ORDER {
        return Err(Error::OrderTooLarge {
            what: "brute-force oracle",
            n,
            limit: MAX_ORACLE_ORDER,
        });
    }
    Ok((0..n)
        .map(|v| {
            let mut m = 1u32 << v;
            for u in 0..n {
                if g.has_edge(v, u) {
                    m |= 1 << u;
                }
            }
            m
        })
        .collect())
}

/// Next subset with the same popcount (Gosper's hack).
fn next_combination(x: u32) -> u32 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u32> {
    let limit = 1u64 << n;
    let start: u64 = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut current = Some(start);
    std::iter::from_fn(move || {
        let x = current?;
        if x >= limit {
            return None;
        }
        current = if x == 0 { None } else { Some(next_combination(x as u32) as u64) };
        Some(x as u32)
    })
}

fn cover(masks: &[u32], subset: u32) -> u32 {
    let mut covered = 0;
    let mut s = subset;
    while s != 0 {
        covered |= masks[s.trailing_zeros() as usize];
        s &= s - 1;
    }
    covered
}

/// γ(G) by scanning vertex subsets in increasing cardinality.
pub fn brute_force_gamma(g: &Graph) -> Result<usize> {
    let masks = closed_masks(g)?;
    let n = masks.len();
    let all = if n == 0 { 0 } else { (1u32 << n) - 1 };
    for k in 0..=n {
        if subsets_of_size(n, k).any(|s| cover(&masks, s) == all) {
            return Ok(k);
        }
    }
    unreachable!("the full vertex set dominates")
}

/// All minimum dominating sets as sorted vertex lists, in lexicographic order.
pub fn brute_force_gamma_sets(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let masks = closed_masks(g)?;
    let n = masks.len();
    let all = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let gamma = brute_force_gamma(g)?;
    let mut out: Vec<Vec<usize>> = subsets_of_size(n, gamma)
        .filter(|&s| cover(&masks, s) == all)
        .map(|s| (0..n).filter(|&v| s >> v & 1 == 1).collect())
        .collect();
    out.sort();
    Ok(out)
}

/// All efficient dominating sets, found by checking every vertex subset.
pub fn brute_force_eds(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let masks = closed_masks(g)?;
    let n = masks.len();
    let all = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let mut out = Vec::new();
    for s in 0..=all {
        let mut covered = 0u32;
        let mut total = 0;
        let mut rest = s;
        while rest != 0 {
            let m = masks[rest.trailing_zeros() as usize];
            covered |= m;
            total += m.count_ones();
            rest &= rest - 1;
        }
        if covered == all && total as usize == n {
            out.push((0..n).filter(|&v| s >> v & 1 == 1).collect());
        }
        if s == all {
            break;
        }
    }
    out.sort();
    Ok(out)
}

/// Bondage number by trying every edge subset in increasing cardinality,
/// with γ from [`brute_force_gamma`].
pub fn brute_force_bondage(g: &Graph) -> Result<Option<usize>> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::Edgeless);
    }
    let m = edges.len();
    if m > 20 {
        return Err(Error::OrderTooLarge {
            what: "brute-force bondage (edges)",
            n: m,
            limit: 20,
        });
    }
    let gamma = brute_force_gamma(g)?;
    for k in 1..=m {
        for s in subsets_of_size(m, k) {
            let removed: Vec<_> = (0..m).filter(|&i| s >> i & 1 == 1).map(|i| edges[i]).collect();
            if brute_force_gamma(&g.delete_edges(&removed)?)? > gamma {
                return Ok(Some(k));
            }
        }
    }
    Ok(None)
}
