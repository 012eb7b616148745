//! Well-coveredness of small graphs and their Cartesian products.

pub mod bitset;
pub mod certificates;
pub mod graph;
pub mod graphio;
pub mod harness;
pub mod independence;
pub mod named;

pub use bitset::{VertexSet, MAX_ORDER};
pub use graph::{build_graph, cartesian_product, prism, GirthValue, Graph, GraphError, ProductLabeling};
