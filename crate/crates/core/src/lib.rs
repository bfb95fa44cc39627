//! Census engine for tropically planar graphs.
//!
//! A graph is tropically planar when it is the skeleton of some regular
//! unimodular triangulation of a convex lattice polygon. This crate
//! enumerates maximal lattice polygons per genus, enumerates their regular
//! unimodular triangulations with an exact-rational regularity check,
//! extracts skeleton multigraphs with canonical certificates, implements
//! the known obstruction criteria and bridge surgeries, and builds the
//! parallelogram-tiling family behind the exponential lower bound.

pub mod graph;
pub mod lattice;

pub use graph::{Certificate, Multigraph};
pub use lattice::{pt, Interior, Point, Polygon};
