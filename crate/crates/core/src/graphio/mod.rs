//! Text formats and small-order graph generation.

mod canon;
mod edgelist;
mod enumerate;
mod graph6;

use thiserror::Error;

use crate::graph::GraphError;

pub use canon::{canonical_form, CanonicalForm, MAX_CANON_ORDER};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use enumerate::{enumerate_connected_graphs, enumerate_graphs, EnumFilter, MAX_GENERATOR_ORDER};
pub use graph6::{parse_graph6, read_graph6_stream, write_graph6, MAX_GRAPH6_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphIoError {
    #[error("BadHeader: {0}")]
    BadHeader(String),
    #[error("TruncatedPayload: expected {expected} payload characters, found {found}")]
    TruncatedPayload { expected: usize, found: usize },
    #[error("TrailingGarbage: {0} unexpected characters after the payload")]
    TrailingGarbage(usize),
    #[error("NonCanonicalPadding: padding bits of the final payload character must be zero")]
    NonCanonicalPadding,
    #[error("InvalidCharacter: byte {byte:#04x} at position {position} is outside the graph6 alphabet")]
    InvalidCharacter { byte: u8, position: usize },
    #[error("OrderTooLarge: order {0} exceeds the single-byte graph6 header limit of {MAX_GRAPH6_ORDER}")]
    OrderTooLarge(usize),
    #[error("MalformedLine: line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("OrderTooLargeForGenerator: order {0} exceeds the built-in generator limit of {MAX_GENERATOR_ORDER}; supply larger graphs as a graph6 stream")]
    OrderTooLargeForGenerator(usize),
    #[error("InvalidFilter: {0}")]
    InvalidFilter(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
