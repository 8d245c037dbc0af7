//! Toolkit for mixed cages: graphs with both undirected edges and directed
//! arcs, regular in undirected degree and out-degree, with a prescribed girth.
//!
//! The crate provides the mixed graph type and its girth machinery
//! ([`graph`]), canonical forms for isomorph rejection ([`canon`]), lower
//! bounds on the order of mixed cages ([`bounds`]), a catalog of record
//! constructions ([`constructions`]), exhaustive search engines for
//! establishing minimality ([`search`]), and text formats plus a CLI
//! ([`io`]).

pub mod bounds;
pub mod canon;
pub mod constructions;
pub mod graph;
pub mod io;
pub mod search;

pub use canon::CanonicalForm;
pub use graph::{DegreeProfile, Element, GraphError, MixedGraph};
