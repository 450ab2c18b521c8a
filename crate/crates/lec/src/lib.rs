//! Loose edge-connection of simple connected graphs.
//!
//! An edge-coloured graph is *loose edge-connected* if every pair of distinct
//! vertices is joined by a path that is a single edge, a bi-chromatic path of
//! length two, or a path of length at least three carrying at least three
//! distinct colours. The least number of colours admitting such a colouring is
//! the loose edge-connection number `lec(G)`.
//!
//! The crate provides:
//!
//! * [`graph`]: immutable simple graphs, edge-list and graph6 I/O, elementary
//!   queries (diameter, degrees, edge weights, basic family recognition);
//! * [`decompose`]: blocks, cut vertices, the cut-edge graph `C(G)` and exact
//!   circumference;
//! * [`classify`]: recognition of the 2-connected classes with circumference
//!   3, 4, 5 and of the leaf-decorated types (t,R), (t,Q), (t,P);
//! * [`colouring`]: every constructive colouring used by the solver;
//! * [`verify`]: the loose-connectivity verifier (ground truth for colourings);
//! * [`oracle`]: exhaustive minimum-colour search on small instances;
//! * [`solver`]: the theorem dispatcher computing `lec(G)` exactly wherever
//!   the theory determines it, with certified bounds elsewhere.

pub mod circumference;
pub mod classify;
pub mod colouring;
pub mod decompose;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod iso;
pub mod oracle;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
