//! Exact metric and local metric dimension of small graphs, generalized
//! hierarchical products and their dimension bounds, and landmark-based
//! delivery codes.

pub mod bounds;
pub mod cli;
pub mod delivery;
pub mod dimension;
pub mod distance;
pub mod error;
pub mod gallery;
pub mod graph;
pub mod io;
pub mod iso;
pub mod products;

pub use dimension::{
    find_dimension, local_dimension, metric_dimension, u_local_dimension, DimensionKind, DimensionResult,
    SearchOptions, Strategy,
};
pub use distance::{all_pairs_distances, u_distance, DistanceMatrix};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSubset, Weight};
pub use products::{hierarchical_product, ProductGraph, ProductSpec};
