//! Combinatorial Coxeter polyhedra: parsing, vertex types, count vectors and
//! the Euler-type identities they satisfy.

mod counts;
mod lemma;
mod scheme;

pub use counts::{count_vector, is_admissible_triple, CountVector};
pub use lemma::{check_lemma2, IdentityCheck, Lemma2Report, Relation};
pub use scheme::{parse_polyhedron, to_coxeter_matrix, vertex_type, Edge, PolyhedronScheme, VertexType};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyhedronError {
    #[error("malformed polyhedron document: {0}")]
    Malformed(String),
    #[error("{context}: unknown facet {name:?}")]
    UnknownFacet { name: String, context: String },
    #[error("facet {0:?} declared twice")]
    DuplicateFacet(String),
    #[error("edge {{{0}, {1}}} listed twice")]
    DuplicateEdge(String, String),
    #[error("edge joins facet {0:?} to itself")]
    SelfEdge(String),
    #[error("edge {{{a}, {b}}} has order {m}; orders start at 2")]
    InvalidOrder { a: String, b: String, m: u32 },
    #[error("vertex {index} has {len} facets; only 3 or 4 are allowed")]
    VertexArity { index: usize, len: usize },
    #[error("vertex {index} lists facet {name:?} more than once")]
    RepeatedFacet { index: usize, name: String },
    #[error("vertex {index}: consecutive facets {a:?} and {b:?} do not share an edge")]
    NonEdgePair { index: usize, a: String, b: String },
    #[error("edge {{{a}, {b}}} lies in {count} vertices, expected 2")]
    EdgeEndpoints { a: String, b: String, count: usize },
    #[error("vertex {index} with edge orders {orders:?} is not a Coxeter polyhedron vertex")]
    NotCoxeterVertex { index: usize, orders: Vec<u32> },
    #[error("invalid count vector: {0}")]
    InvalidCounts(String),
}
