//! A laboratory for exact minimum dominating sets on small graphs.
//!
//! The crate bundles, on top of one immutable bitset graph type:
//!
//! * exact domination solvers (plain, partial/targeted, independent, edge
//!   domination, enumeration of all optima, critical vertices),
//! * induced-subgraph recognition and hereditary class checks,
//! * the polynomial special-case solvers for `(claw,H)`-free inputs and a
//!   dispatcher that picks one,
//! * a complexity classifier deciding NP-complete / polynomial / open for
//!   `(claw,H)`-free minimum domination,
//! * hardness-reduction builders (vertex gadgets, corner wiring) together
//!   with machine verification of every gadget property and of the
//!   `gamma(G') = gamma(G) + offset` equivalences they claim,
//! * brute-force reference oracles, kept deliberately independent of the
//!   search code so each side can check the other.
//!
//! Everything here is `no_std` + `alloc`; parsing and emitting the text
//! formats works on in-memory strings. File and process concerns live in
//! the companion CLI crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bitset;
pub mod bruteforce;
pub mod canon;
pub mod catalog;
pub mod dichotomy;
pub mod graph;
pub mod poly;
pub mod recognition;
pub mod reduction;
pub mod solver;

pub use bitset::BitSet;
pub use graph::{Graph, GraphBuilder, GraphError};
