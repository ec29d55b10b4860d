//! Enumerate, sieve and solve candidate fusion bialgebras with exchange relations.
//!
//! The stages mirror a dimension-by-dimension classification: admissible
//! indicator functions are enumerated as bitstrings over Frobenius classes,
//! filtered by the forest condition on their fusion graphs, reduced to orbit
//! representatives, sieved by positivity and product criteria, and finally
//! solved for quantum dimensions.

pub mod catalog;
pub mod classes;
pub mod equations;
pub mod graphs;
pub mod indicator;
pub mod linalg;
pub mod pipeline;
pub mod sieve;
pub mod signature;
pub mod symmetry;

pub use catalog::{Catalog, CatalogEntry};
pub use classes::{build_partition, frobenius_orbit, ClassPartition, Triple};
pub use indicator::{expand, Aif, IndicatorTensor};
pub use signature::{enumerate_signatures, DualSignature};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum FubiError {
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("triple {0:?} contains index 0; its pattern is forced")]
    ZeroIndex(Triple),
    #[error("index out of range in {0:?}")]
    OutOfRange(Triple),
    #[error("aif has {got} bits, partition has {want} classes")]
    LengthMismatch { got: usize, want: usize },
    #[error("automorphism does not preserve the class partition")]
    ActionMismatch,
    #[error("pattern is not constant on class {0}")]
    NotClassConstant(usize),
    #[error("fusion graph Γ_{0} is not a forest")]
    NotForest(usize),
    #[error("edge ({i},{j}) is absent from Γ_{k}")]
    EdgeAbsent { k: usize, i: usize, j: usize },
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("catalog has no entries of dimension {0}; classify that dimension first")]
    MissingCatalog(usize),
    #[error("catalog: {0}")]
    Catalog(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("{classes} classes exceed the enumeration limit of {limit} bits")]
    TooLarge { classes: usize, limit: usize },
    #[error("unknown format {0:?}")]
    UnknownFormat(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
