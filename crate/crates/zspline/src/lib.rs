//! Exact arithmetic for integer splines on edge-labeled graphs.
//!
//! An edge-labeled graph attaches a positive integer to every edge. A
//! *spline* on such a graph assigns an integer to every vertex so that the
//! two endpoint values of each edge are congruent modulo the edge label.
//! Splines are closed under addition and integer scaling, so they form a
//! module over the integers.
//!
//! The crate provides:
//!
//! * [`arith`]: gcd/lcm folds and a chinese-remainder solver that handles
//!   non-coprime moduli, over arbitrary-precision integers;
//! * [`graph`]: the graph model plus constructors for cycles, stars,
//!   wheels, complete graphs, and general edge lists;
//! * [`spline`]: vertex labelings and the edge-congruence test;
//! * [`cycle`]: the triangular flow-up basis on cycles, with exact
//!   decomposition, recombination, and edge contraction/addition;
//! * [`families`]: star center solving and spline extension over wheels
//!   and complete graphs;
//! * [`oracle`]: bounded brute-force enumeration used to cross-check the
//!   constructive routines;
//! * [`json`]: the document formats consumed and emitted by the CLI.

pub mod arith;
pub mod cycle;
pub mod error;
pub mod families;
pub mod graph;
pub mod json;
pub mod oracle;
pub mod spline;

pub use error::Error;
