//! Biclique edge-coverings of complete graphs.
//!
//! A covering of `K_n` is a list of bicliques whose edges together contain
//! every pair of distinct vertices. This crate builds such coverings
//! (binary codes, balanced `K_{x,x}` doublings, block partitions), checks
//! them with two independent verifiers, evaluates the closed-form lower and
//! upper bounds on the number of component-bounded bicliques needed, and
//! computes exact minima for small `n` by branch and bound.

pub mod bounds;
pub mod certificate;
pub mod constructions;
mod error;
pub mod io;
pub mod log2;
pub mod model;
pub mod search;
pub mod verify;

pub use bounds::{
    bounds_report, lower_bound_edges, lower_bound_size, lower_bound_size_stated,
    upper_bound_formula, BoundsReport,
};
pub use certificate::{size_sum_certificate, CertificateReport, LogThreshold};
pub use constructions::{
    balanced_cover, bitstring_cover, cross_cover, partition_cover, restrict_covering, Bitstring,
    GroupPartition,
};
pub use error::CoverError;
pub use io::{read_covering, write_covering, ParseError};
pub use model::{validate_covering, Biclique, Covering, Side, VertexSet, Violation};
pub use search::{enumerate_candidates, min_cover, SearchConfig, SearchResult};
pub use verify::{is_complete_direct, is_complete_matrix, Coverage, RowMatrix, Symbol};
