//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! Order `n` graphs are produced by attaching a new vertex with every possible
//! neighbourhood to each order `n − 1` representative and deduplicating by
//! canonical key. Levels are cached for the lifetime of the process and the
//! output order (ascending canonical key) is deterministic.

use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;

use crate::canon::{canonical_key, rows_from_key};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the built-in enumerator will produce (274 668 graphs).
pub const MAX_ENUMERATION_ORDER: usize = 9;

fn cache() -> &'static Mutex<Vec<std::sync::Arc<Vec<u128>>>> {
    static LEVELS: OnceLock<Mutex<Vec<std::sync::Arc<Vec<u128>>>>> = OnceLock::new();
    LEVELS.get_or_init(|| Mutex::new(vec![std::sync::Arc::new(vec![0u128])]))
}

fn extend(parent_order: usize, parents: &[u128]) -> Vec<u128> {
    let n = parent_order + 1;
    let mut keys: Vec<u128> = parents
        .par_iter()
        .flat_map_iter(|&key| {
            let base = rows_from_key(parent_order, key);
            (0u64..1 << parent_order).map(move |mask| {
                let mut rows = Vec::with_capacity(n);
                rows.extend(
                    base.iter()
                        .enumerate()
                        .map(|(v, &r)| r | ((mask >> v & 1) << parent_order)),
                );
                rows.push(mask);
                canonical_key(&rows)
            })
        })
        .collect();
    keys.par_sort_unstable();
    keys.dedup();
    keys
}

fn level(n: usize) -> Result<std::sync::Arc<Vec<u128>>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::OrderTooLarge {
            what: "built-in graph enumeration",
            n,
            limit: MAX_ENUMERATION_ORDER,
        });
    }
    let mut levels = cache().lock().expect("enumeration cache poisoned");
    while levels.len() <= n {
        let order = levels.len() - 1;
        let next = extend(order, &levels[order]);
        levels.push(std::sync::Arc::new(next));
    }
    Ok(levels[n].clone())
}

/// Every graph of order `n`, one per isomorphism class, in canonical form.
pub fn graphs_of_order(n: usize) -> Result<Vec<Graph>> {
    let keys = level(n)?;
    Ok(keys
        .par_iter()
        .map(|&k| Graph::from_word_rows(&rows_from_key(n, k)))
        .collect())
}

pub fn connected_graphs_of_order(n: usize) -> Result<Vec<Graph>> {
    Ok(graphs_of_order(n)?
        .into_par_iter()
        .filter(Graph::is_connected)
        .collect())
}

/// All graphs with `min_n ≤ order ≤ max_n`, grouped by ascending order.
pub fn graphs_in_range(min_n: usize, max_n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in min_n..=max_n {
        if connected_only {
            out.extend(connected_graphs_of_order(n)?);
        } else {
            out.extend(graphs_of_order(n)?);
        }
    }
    Ok(out)
}

/// Largest order for [`trees_of_order`] and [`unicyclic_graphs_of_order`].
pub const MAX_SPARSE_ORDER: usize = 16;

fn sparse_guard(what: &'static str, n: usize) -> Result<()> {
    if n > MAX_SPARSE_ORDER {
        return Err(Error::OrderTooLarge {
            what,
            n,
            limit: MAX_SPARSE_ORDER,
        });
    }
    Ok(())
}

fn sorted_graphs(n: usize, mut keys: Vec<u128>) -> Vec<Graph> {
    keys.par_sort_unstable();
    keys.dedup();
    keys.par_iter()
        .map(|&k| Graph::from_word_rows(&rows_from_key(n, k)))
        .collect()
}

/// Trees of order `n`, grown by attaching one leaf at a time.
pub fn trees_of_order(n: usize) -> Result<Vec<Graph>> {
    sparse_guard("tree enumeration", n)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut keys = vec![0u128];
    for order in 1..n {
        let next: Vec<u128> = keys
            .par_iter()
            .flat_map_iter(|&key| {
                let base = rows_from_key(order, key);
                (0..order).map(move |v| {
                    let mut rows = base.clone();
                    rows[v] |= 1 << order;
                    rows.push(1 << v);
                    canonical_key(&rows)
                })
            })
            .collect();
        keys = next;
        keys.par_sort_unstable();
        keys.dedup();
    }
    Ok(sorted_graphs(n, keys))
}

/// Connected graphs of order `n` with exactly one cycle: a tree plus one edge.
pub fn unicyclic_graphs_of_order(n: usize) -> Result<Vec<Graph>> {
    sparse_guard("unicyclic enumeration", n)?;
    let trees = trees_of_order(n)?;
    let keys: Vec<u128> = trees
        .par_iter()
        .flat_map_iter(|t| {
            let rows = t.word_rows();
            (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v))).filter_map(move |(u, v)| {
                if rows[u] >> v & 1 == 1 {
                    return None;
                }
                let mut r = rows.clone();
                r[u] |= 1 << v;
                r[v] |= 1 << u;
                Some(canonical_key(&r))
            })
        })
        .collect();
    Ok(sorted_graphs(n, keys))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Sloane A000088 and A001349.
    const ALL: [usize; 8] = [1, 1, 2, 4, 11, 34, 156, 1044];
    const CONNECTED: [usize; 8] = [0, 1, 1, 2, 6, 21, 112, 853];

    #[test]
    fn counts_match_known_sequences() {
        for n in 0..ALL.len() {
            assert_eq!(graphs_of_order(n).unwrap().len(), ALL[n], "n = {n}");
            assert_eq!(connected_graphs_of_order(n).unwrap().len(), CONNECTED[n], "n = {n}");
        }
    }

    #[test]
    fn trees_up_to_seven() {
        // A000055
        let counts: Vec<_> = (1..=12).map(|n| trees_of_order(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]);
        for t in trees_of_order(9).unwrap() {
            assert!(t.is_tree());
        }
        assert_eq!(trees_of_order(8).unwrap(), graphs_of_order(8).unwrap().into_iter().filter(Graph::is_tree).collect::<Vec<_>>());
    }

    #[test]
    fn unicyclic_counts() {
        // A001429
        let counts: Vec<_> = (3..=10).map(|n| unicyclic_graphs_of_order(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 13, 33, 89, 240, 657]);
        assert!(unicyclic_graphs_of_order(9).unwrap().iter().all(Graph::is_unicyclic));
    }

    #[test]
    fn order_guard() {
        assert!(graphs_of_order(MAX_ENUMERATION_ORDER + 1).is_err());
    }
}
