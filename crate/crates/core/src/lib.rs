//! Cover ideals of t-connected ideals of graphs.
//!
//! For a graph `G` and `t >= 2`, `I_t(G)` is generated by the products of
//! `t` vertices inducing a connected subgraph, and `J_t(G)` is its Alexander
//! dual (the cover ideal). This crate builds both exactly, compares symbolic
//! and ordinary powers of `J_t(G)`, decides the König and packing properties
//! by minor enumeration, and evaluates the associated covering and packing
//! integer programs.

pub mod algebra;
pub mod classify;
pub mod cli;
pub mod clutter;
pub mod duality;
mod error;
pub mod graph;
pub mod lpdual;
pub mod packing;
pub mod tconn;

pub use algebra::{Monomial, MonomialIdeal};
pub use error::{Error, Result};
pub use graph::{Graph, Shape, VertexSet};

/// Largest supported number of vertices (and of polynomial variables).
pub const MAX_VARS: usize = 64;
