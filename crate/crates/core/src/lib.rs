//! Exact domination toolkit for finite simple graphs.
//!
//! The crate computes domination numbers, enumerates minimum dominating sets
//! and efficient dominating sets, finds bondage numbers and criticality
//! structure, and decides the hypo-efficient-domination (hypo-ED) and
//! hypo-unique-domination (hypo-UD) classes. The [`harness`] module checks
//! the known structural results about those classes exhaustively over small
//! graphs and searches graph streams for open-problem witnesses.

pub mod canon;
pub mod domination;
pub mod eds;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod harness;
pub mod hypo;
pub mod io;
pub mod vertex_set;

pub use error::{Error, Result};
pub use families::CirculantSpec;
pub use graph::Graph;
pub use vertex_set::VertexSet;
