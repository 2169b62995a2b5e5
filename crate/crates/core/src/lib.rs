//! Micropublication graphs: claim-evidence-argument networks extracted from
//! scientific publications.
//!
//! A micropublication packages one principal claim together with the
//! representations deployed to support (or challenge) it: statements
//! paraphrasing the literature, data, methods and materials, bibliographic
//! references, semantic qualifiers, and attributions. Support is structured
//! as a directed acyclic graph whose greatest element is the claim.
//!
//! The crate is organized by concern:
//!
//! - [`model`] — domain types, the construction API, and per-micropublication
//!   validation.
//! - [`inference`] — transitive supports closure, challenge inference by
//!   undercutting, and the support/challenge graph views.
//! - [`network`] — corpus-level merging, reference resolution, claim
//!   lineages, evidence-grounding levels, similarity groups, and
//!   citation-distortion auditing.
//! - [`serialization`] — the canonical MPJSON interchange format, Turtle and
//!   TriG (nanopublication) emission, and Graphviz DOT rendering.
//! - [`anchoring`] — stand-off contextualization of representations in
//!   source documents via quote and position selectors.
//! - [`fixtures`] — a worked example corpus used by the test suite and
//!   shipped with the CLI.

pub mod anchoring;
pub mod fixtures;
pub mod ident;
pub mod inference;
pub mod model;
pub mod network;
pub mod serialization;

pub use ident::Id;
pub use model::{
    Agent, AgentKind, Attribution, Corpus, MediaDescriptor, Micropublication, ModelError,
    RelationEdge, RelationPredicate, Representation, RepresentationKind, ValidationReport,
};
pub use network::{GroundingLevel, Lineage, Network, NetworkError, SimilarityGroup};
