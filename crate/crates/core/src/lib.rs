//! Encoding graphs generated by k-NLC-trees into sparse structures.
//!
//! The pipeline factorizes an NLC-tree recursively, encodes each factor into a
//! relational structure whose Gaifman graph has bounded treewidth, and decodes
//! adjacency of the original graph back from that structure alone.

pub mod decode;
pub mod encode;
pub mod error;
pub mod factorize;
pub mod gen;
pub mod graph;
pub mod nlc;
pub mod pipeline;
pub mod semigroup;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
