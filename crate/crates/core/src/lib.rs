//! Poincaré and Cheeger bounds on the second eigenvalue of simple random
//! walk on a connected graph, computed from explicit canonical-path
//! routings.

pub mod bounds;
pub mod constructions;
pub mod graph;
pub mod optimizer;
pub mod routing;
pub mod report;
pub mod spectral;
pub mod verify;
pub mod cli;
