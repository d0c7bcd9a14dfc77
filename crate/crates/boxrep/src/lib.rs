//! Axis-parallel box representations of graphs.
//!
//! The boxicity of a graph is the least k for which it is the intersection
//! graph of k-dimensional axis-parallel boxes, equivalently the least number
//! of interval graphs whose edge intersection it is. This crate builds such
//! representations constructively for fully subdivided graphs and line
//! graphs of multigraphs, verifies arbitrary representations, works with the
//! simply 3-suitable permutation families driving the constructions, and
//! carries an exact brute-force boxicity solver for small graphs that the
//! constructions are checked against.

pub mod construct;
pub mod error;
pub mod gen;
pub mod graph;
pub mod interval;
pub mod oracle;
pub mod suitable;
pub mod textio;

pub use error::{Error, Result};
pub use graph::{Coloring, Graph, Multigraph, VertexPartition};
pub use interval::{BoxRep, IntervalRep, VerifyReport};
pub use suitable::{Permutation, PermutationFamily};
