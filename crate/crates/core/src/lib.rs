//! Acyclic edge colorings of planar graphs with at most Δ+5 colors.
//!
//! An edge coloring is *acyclic* when it is proper and every cycle carries at
//! least three colors, equivalently when any two color classes induce a
//! forest. This crate provides:
//!
//! - a simple immutable graph type with the degree predicates and reductions
//!   the coloring machinery needs ([`graph`]),
//! - combinatorial planar embeddings via rotation systems ([`embed`]),
//! - edge colorings, validity checks and alternating-path primitives
//!   ([`coloring`]),
//! - detectors for the eight groups of unavoidable local structures in planar
//!   graphs ([`config`]),
//! - an exact-rational discharging engine over the stripped plane graph
//!   ([`discharge`]),
//! - a brute-force oracle for the acyclic chromatic index ([`oracle`]),
//! - a constructive Δ+5 colorer driven by configuration reductions
//!   ([`colorer`]),
//! - deterministic planar test-graph generators ([`corpus`]),
//! - text formats for graphs, rotations and colorings ([`fmt`]).

pub mod colorer;
pub mod coloring;
pub mod config;
pub mod corpus;
pub mod discharge;
pub mod embed;
pub mod error;
pub mod fmt;
pub mod graph;
pub mod oracle;

pub use error::{Error, Result};
pub use graph::{EdgeId, Graph};
