//! Twin-aware vertex-identifying colorings.
//!
//! Two vertices `u`, `v` of a graph are *twins* when their closed
//! neighborhoods coincide, `N[u] = N[v]`; no coloring can tell them apart. This
//! crate works with the identification notions that quantify only over
//! non-twin pairs:
//!
//! * identifying colorings (every non-twin pair has distinct neighborhood color sets),
//! * rlid-colorings (only adjacent non-twin pairs),
//! * lid-colorings (proper rlid-colorings),
//! * twin-aware identifying codes and weighted, set-valued identifying colorings.
//!
//! It provides the twin quotient, checkers with exhaustive violation lists,
//! exact solvers with witnesses, generators for split-graph extremal families,
//! and tooling that checks how the optima of a graph and its twin quotient
//! relate.

pub mod bounds;
pub mod cli;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod formats;
pub mod graph;
pub mod search;
pub mod twins;

pub use coloring::{
    check_coloring, is_identifying, is_identifying_code, is_lid, is_rlid, is_valid_coloring,
    is_weighted_identifying, signature, CheckMode, CheckReport, Coloring, SetColoring, Signature,
    Variant, Violation, ViolationKind,
};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use search::{
    chi, lower_bound, min_identifying_code, weighted_optimum, Problem, Proof, SolveReport,
    SolverConfig, Witness,
};
pub use twins::{add_twins, is_twin_free, quotient, QuotientResult, TwinPartition};
