//! Exact interior and exterior polynomials of connected bipartite graphs.
//!
//! A bipartite graph `G = (V ∪ E, ε)` induces a pair of abstract dual
//! hypergraphs. Taking the class `E` as hyperedges, a *hypertree* is a
//! vector `f` on `E` realised by a spanning tree `τ` with
//! `deg_τ(e) = f(e) + 1`. Internal and external (in)activity of hypertrees
//! under a total order of `E` give the interior polynomial `I_G(x)` and the
//! exterior polynomial `X_G(y)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: the bipartite/hypergraph data model, `μ`, nullity, duals.
//! * [`hypertree`]: hypertree membership (two independent deciders),
//!   enumeration, tightness and the exterior greedy hypertree.
//! * [`activity`]: edge orders and activity profiles.
//! * [`poly`]: exact polynomials, the two invariants, and a Tutte oracle.
//! * [`families`]: generators and closed forms for named graph families.
//! * [`transforms`]: deletions, contractions, joins and the balanced
//!   decomposition.
//! * [`verify`]: executable theorem checks over a deterministic corpus.

#![forbid(unsafe_code)]
#![allow(clippy::needless_range_loop)]

pub mod activity;
mod dsu;
pub mod error;
pub mod families;
pub mod graph;
pub mod hypertree;
pub mod limits;
pub mod poly;
pub mod transforms;
pub mod verify;

pub use activity::{ActivityProfile, EdgeOrder};
pub use error::{Error, Result};
pub use graph::{BipGraph, EdgeSubset, Hypergraph, Side, Vertex};
pub use hypertree::{Hypertree, HypertreeSet, SpanningTree};
pub use poly::{IntPoly, IntPoly2};
