//! Exact algebra for the normal-form blocks of the nonlinear Schrödinger
//! equation: colored marked graphs on `Z^m ⋊ Z/2`, their polynomial
//! matrices and characteristic polynomials, irreducibility and separation
//! certificates, and the geometric graph of a set of tangential sites.

pub mod certify;
pub mod charpoly;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod group;
pub mod matrix;
pub mod poly;
pub mod union_find;

pub use error::{Error, Result};
pub use graph::{GraphEdge, MarkedGraph};
pub use group::{adjacency, enumerate_edges, Color, Edge, GElem};
pub use matrix::{NormalForm, PolyMatrix};
