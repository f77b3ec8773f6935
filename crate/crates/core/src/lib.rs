//! Cage-based construction and classification of LDPC trapping sets.
//!
//! The crate is organized bottom-up: plain graphs and girth computation,
//! finite-field tables, the cage registry, Tanner graphs and the trapping-set
//! classifier, witness constructions, and the bound tables.

pub mod bounds;
pub mod cages;
pub mod constructions;
pub mod gf;
pub mod graph;
pub mod tanner;

pub use bounds::{
    best_upper, class_exists, eq1_lower, eq2_lne, etsl_improved_lower, parity_correct, table,
    Bound, Table, TableRow,
};
pub use cages::{moore_bound, Availability, CageError, CageRegistry, ValidationReport};
pub use constructions::{construct_best, ConstructError, Witness};
pub use graph::{Girth, Graph, GraphError, SubdividedGraph};
pub use tanner::{to_tanner, Category, Classification, TannerError, TannerGraph};
