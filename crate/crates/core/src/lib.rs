#![forbid(unsafe_code)]

//! Topological types of pants decompositions as at-most-cubic multigraphs.
//!
//! The crate models a pants decomposition of a surface S_{g,n} by its
//! decomposition graph (vertices = pairs of pants, edges = shared curves),
//! implements the elementary-move rewrite calculus on these graphs, and
//! computes exact distances from any topological type to the set of types
//! containing a non-trivial separating curve. On top of that sit the
//! enumeration of all types for a signature, closed-form distance bounds,
//! cut-set metrics, an explicit construction of high-girth 3-regular graphs
//! whose connected cut-sets are large, and parsers for LCF notation and the
//! small cage graphs.
//!
//! Data-parallel inner loops (enumeration expansion, frontier search, cut-set
//! scanning) run on rayon when the default `parallel` feature is enabled and
//! fall back to sequential iteration without it; results are identical either
//! way.

pub mod canon;
pub mod construct;
pub mod error;
mod exec;
#[cfg(test)]
pub(crate) mod fixtures;
pub mod io;
pub mod lcf;
pub mod metrics;
pub mod moves;
pub mod multigraph;
pub mod pants;
pub mod search;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm, CANON_CAP};
pub use error::{Error, Result};
pub use exec::run_with_threads;
pub use multigraph::MultiGraph;
pub use pants::{BoundarySite, EdgeClassification, PantsGraph, SeparatingKind};
