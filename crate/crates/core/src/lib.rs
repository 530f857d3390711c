//! Distance-2 coloring of embedded planar graphs.
//!
//! The crate has three layers:
//!
//! * [`plane_graph`] and [`corpus`] — rotation-system plane graphs, face
//!   tracing, embedding-preserving edits, generators, and file formats;
//! * [`square_coloring`] — distance-2 colorings, a greedy colorer, and an
//!   exact branch-and-bound oracle for small graphs;
//! * [`configurations`], [`reductions`], [`discharging`] — detection of the
//!   reducible local structures, the constructive `3*max_degree + 4`
//!   coloring built on them, and an exact-rational charge audit that checks
//!   why at least one such structure must occur in every plane graph.

pub mod configurations;
pub mod corpus;
pub mod discharging;
mod error;
pub mod plane_graph;
pub mod reductions;
pub mod square_coloring;

pub use error::{Error, Result};
pub use plane_graph::{Face, PlaneGraph};
