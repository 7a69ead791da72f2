//! Degree-based graph indices, lower bounds on the general Zagreb index,
//! and an exhaustive small-graph verification engine.

pub mod bounds;
pub mod graph;
pub mod indices;
pub mod scalar;
pub mod verify;
