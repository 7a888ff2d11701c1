//! Exact fractional combinatorics: rational linear programs, LP
//! complementation, hypergraph parameters, matroid toughness and the graph
//! applications built on them.

mod error;
mod limits;

pub mod cli;
pub mod graphapps;
pub mod hypergraph;
pub mod lpcomp;
pub mod matroid;
pub mod ratlp;

pub use error::{Error, Result};
pub use limits::{Limits, DEFAULT_MAX_ENUM};
