//! Exact invariants and bounded branch-set clique minors for small graphs.
//!
//! The crate computes `ω`, `χ` and the Hadwiger-type numbers `had`, `had_2`,
//! `had_2^+` and `had_m` exactly, recognises the hereditary classes defined by
//! small forbidden induced subgraphs, and builds complete-minor models with
//! at least `χ(G)` branch sets for {co-claw, co-gem}-free graphs (all branch
//! sets of size at most 2) and {fork, antifork}-free graphs (at most one
//! larger branch set). Every result carries a witness that can be re-checked
//! independently.

pub mod bits;
pub mod certificate;
pub mod cli;
pub mod constructors;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod models;
pub mod patterns;
pub mod recognition;

pub use error::{Error, Result};
pub use graph::{ComposeMode, Graph, Multigraph, VertexSet};
pub use models::{verify_model, MinorModel, ModelClass, ModelReport};
pub use patterns::{ClassName, Evidence, PatternName};
