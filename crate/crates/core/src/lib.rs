//! Degree of the h-polynomial and regularity of edge ideals of small graphs.
//!
//! The crate computes, for a simple graph `G` on at most 64 vertices, the
//! reduced Hilbert series of `R/I(G)` from the independent-set counts,
//! closed forms for paths and cycles, the subset machinery for bipartite
//! graphs, and the regularity via simplicial homology of independence
//! complexes. The [`verify`] module sweeps these against each other over
//! graph corpora.

pub mod bipartite;
pub mod cameron_walker;
pub mod corpus;
pub mod error;
pub mod families;
pub mod formats;
pub mod graph;
pub mod hilbert;
pub mod homology;
pub mod independence;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Bipartition, Graph, VertexSet};
pub use hilbert::{summarize, HilbertSummary};
pub use independence::{f_vector, FVector};
pub use poly::IntPolynomial;
