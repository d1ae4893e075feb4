//! Green–Lazarsfeld `N_p` classification and exact graded Betti numbers for
//! toric edge ideals of bipartite graphs.
//!
//! The [`classifier`] decides the level combinatorially and returns a
//! certificate; [`betti`] computes Betti numbers from fibers and simplicial
//! homology so the two can be compared. [`polyomino`] handles convex
//! polyomino ideals through their lattice-point graphs.

pub mod betti;
pub mod catalog;
pub mod census;
pub mod classifier;
pub mod cli;
pub mod field;
pub mod graph;
pub mod io;
pub mod polyomino;
pub mod report;

pub use betti::{betti_graded, betti_table, BettiOptions, BettiTable};
pub use classifier::{classify_np, find_n2_obstruction, Level, NpVerdict};
pub use field::FieldSpec;
pub use graph::BipartiteGraph;
pub use polyomino::{classify_polyomino, parse_polyomino, poly_to_graph, Polyomino};
