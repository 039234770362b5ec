//! Machine checks of the structural results on hypo-ED and hypo-UD graphs,
//! the brute-force oracle, the exceptional-graph catalog and open-problem
//! searches over graph streams.
//!
//! Every claim is evaluated exhaustively over its range and never aborts on a
//! failure: failures accumulate in the [`ClaimReport`] with the offending graph
//! in graph6. Stream items are processed in parallel and reported in input
//! order, so reports are byte-identical across runs and thread counts.

mod catalog;
mod claims;
pub mod oracle;
mod search;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use catalog::{derive_exception_catalog, violates_two_fifths, ExceptionCatalog, CATALOG_MAX_ORDER};
pub use claims::{verify_all, verify_claim};
pub use oracle::brute_force_gamma;
pub use search::{search_open_problems, ProblemId, SearchLimits, SearchReport, TableRow, Witness};

use crate::error::Error;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub g6: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub claim: String,
    pub range: String,
    /// Graphs examined, including those outside the claim's hypothesis.
    pub scanned: u64,
    /// Instances satisfying the hypothesis; `passes + failures.len()`.
    #[serde(rename = "n_checked")]
    pub instances_checked: u64,
    pub passes: u64,
    pub failures: Vec<Failure>,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

macro_rules! claim_ids {
    ($($variant:ident => $name:literal),* $(,)?) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum ClaimId { $($variant),* }

        impl ClaimId {
            pub const ALL: &'static [ClaimId] = &[$(ClaimId::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self { $(ClaimId::$variant => $name),* }
            }
        }

        impl FromStr for ClaimId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self, Error> {
                match s.to_ascii_uppercase().as_str() {
                    $($name => Ok(ClaimId::$variant),)*
                    _ => Err(Error::UnknownClaim(s.to_string())),
                }
            }
        }
    };
}

claim_ids! {
    Oracle => "ORACLE",
    Effs1 => "EFFS1",
    Minus => "MINUS",
    Vc1 => "VC1",
    Ore => "ORE",
    TwoFifths => "TWO_FIFTHS",
    Circu => "CIRCU",
    B1 => "B1",
    Udvc => "UDVC",
    Claim1 => "CLAIM1",
    Minedge => "MINEDGE",
    Min2v => "MIN2V",
    Vcbound => "VCBOUND",
    Obud => "OBUD",
    Maxud => "MAXUD",
    Bondud => "BONDUD",
    Obed => "OBED",
    Minusone => "MINUSONE",
    Cycles => "CYCLES",
    Extr2 => "EXTR2",
    Extr1 => "EXTR1",
    Ed1 => "ED1",
    VcedUd => "VCED_UD",
    Delta => "DELTA",
    Regiff => "REGIFF",
    Extremall => "EXTREMALL",
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Upper limits on claim ranges. Defaults keep `verify all` at default
/// parameters within a few minutes on one core.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    /// Largest order for the built-in exhaustive stream.
    pub max_stream_order: usize,
    /// Largest order for parameterised family instances.
    pub max_family_order: usize,
    pub max_k: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_stream_order: crate::enumerate::MAX_ENUMERATION_ORDER,
            max_family_order: 64,
            max_k: 8,
        }
    }
}

/// Parameters for [`verify_claim`]. `None` fields use the claim's default.
#[derive(Debug, Clone, Default)]
pub struct ClaimParams {
    /// Largest order: stream order for stream claims, instance order for
    /// family claims.
    pub max_n: Option<usize>,
    /// Largest connection parameter `k` for circulant families.
    pub k_max: Option<usize>,
    /// Graphs to check instead of the built-in exhaustive stream.
    pub stream: Option<Vec<Graph>>,
    pub guards: Guards,
}

impl ClaimParams {
    pub fn with_max_n(max_n: usize) -> Self {
        ClaimParams {
            max_n: Some(max_n),
            ..Default::default()
        }
    }

    pub fn with_stream(stream: Vec<Graph>) -> Self {
        ClaimParams {
            stream: Some(stream),
            ..Default::default()
        }
    }
}
