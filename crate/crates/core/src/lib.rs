//! Exact 2-rainbow domination and Roman domination on small graphs.
//!
//! The crate computes both parameters exactly, converts between the two
//! kinds of dominating function, builds the 3-SAT gadget whose gap between
//! the parameters encodes satisfiability, recognises the forbidden induced
//! subgraph characterisations, audits minimum functions of graphs where the
//! upper bound `γ_R = 3/2 γ_r2` is tight, and scans small-graph catalogues
//! to check all of it exhaustively.

pub mod catalog;
pub mod constructions;
pub mod domination;
pub mod graph;
pub mod hereditary;
pub mod reduction;
pub mod structure;
pub mod transfer;

pub use domination::{
    all_min_2rdf, gamma_r2, gamma_r2_product_check, gamma_roman, is_2rainbow_dominating, is_roman_dominating, ColorSet,
    DominationError, RainbowAssignment, RomanAssignment, SolveResult,
};
pub use graph::{canonical_form, make_named, parse_edge_list, CanonicalForm, Graph, GraphError, VertexSet};
