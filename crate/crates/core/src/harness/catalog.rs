use serde::Serialize;

use crate::canon::canonical_form;
use crate::domination::domination_number;
use crate::enumerate::connected_graphs_of_order;
use crate::error::Result;
use crate::graph::Graph;
use crate::io::write_graph6;

/// Connected graphs with minimum degree at least 2 whose domination number
/// exceeds `2n/5`, one canonical representative per isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExceptionCatalog {
    #[serde(serialize_with = "as_graph6")]
    pub graphs: Vec<Graph>,
}

fn as_graph6<S: serde::Serializer>(graphs: &[Graph], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(graphs.iter().map(write_graph6))
}

/// Largest order scanned when deriving the catalog.
pub const CATALOG_MAX_ORDER: usize = 7;

pub fn violates_two_fifths(g: &Graph) -> bool {
    g.is_connected() && g.min_degree() >= 2 && 5 * domination_number(g) > 2 * g.order()
}

/// Scans every connected graph of order 3 to 7.
pub fn derive_exception_catalog() -> Result<ExceptionCatalog> {
    let mut graphs = Vec::new();
    for n in 3..=CATALOG_MAX_ORDER {
        graphs.extend(connected_graphs_of_order(n)?.into_iter().filter(violates_two_fifths));
    }
    Ok(ExceptionCatalog { graphs })
}

impl ExceptionCatalog {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    /// Whether `g` is isomorphic to a catalog member.
    pub fn contains(&self, g: &Graph) -> bool {
        if g.order() > CATALOG_MAX_ORDER {
            return false;
        }
        let form = canonical_form(g).expect("order within canonical limit");
        self.graphs.iter().any(|h| *h == form)
    }
}
