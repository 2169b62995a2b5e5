//! Interchange formats.
//!
//! - MPJSON ([`emit_canonical`] / [`parse_canonical`]): the canonical,
//!   byte-stable JSON form. UTF-8, sorted keys, LF line endings, one
//!   trailing newline.
//! - Turtle ([`emit_turtle`]): RDF triples over the micropublication
//!   vocabulary, with support graphs materialized.
//! - TriG nanopublications ([`export_nanopub`] / [`import_nanopub`]): a
//!   lossy four-graph projection of one micropublication, with an explicit
//!   manifest of dropped element ids.
//! - Graphviz DOT ([`emit_dot`]): cluster-per-micropublication figures.

mod canonical;
mod dot;
mod nanopub;
mod trig;
mod turtle;
mod vocab;

pub use canonical::{emit_canonical, parse_canonical};
pub use dot::{emit_dot, DotOptions};
pub use nanopub::{export_nanopub, import_nanopub, NanopubStyle};
pub use trig::{parse_trig, Dataset, Triple};
pub use turtle::emit_turtle;
pub use vocab::{VocabularyMap, NP_NAMESPACE, OA_NAMESPACE};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::ident::Id;
use crate::model::{Corpus, Micropublication, ValidationReport};
use crate::network::{Network, NetworkError, ResolutionEntry};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SerializationError {
    #[error("input does not validate: {id}")]
    InvalidInput { id: Id },
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("unsupported document version: {0}")]
    Version(String),
    #[error("term not in the vocabulary: {0}")]
    UnknownTerm(String),
    #[error("micropublication {0} has no exportable claim")]
    NoClaim(Id),
    #[error("nanopublication is missing its {0} graph")]
    MissingGraph(String),
    #[error("assertion graph contains no claim statement")]
    MissingAssertion,
}

/// A corpus of micropublications plus reference resolutions: the unit of
/// interchange that MPJSON carries.
///
/// Agent registries are not part of the interchange form; a corpus rebuilt
/// from a document starts with an empty registry.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Document {
    micropublications: BTreeMap<Id, Micropublication>,
    resolutions: BTreeMap<Id, ResolutionEntry>,
}

impl Document {
    pub fn from_corpus(corpus: &Corpus) -> Self {
        Document {
            micropublications: corpus
                .micropublications()
                .map(|mp| (mp.id().clone(), mp.clone()))
                .collect(),
            resolutions: BTreeMap::new(),
        }
    }

    pub fn from_network(net: &Network) -> Self {
        Document {
            micropublications: net
                .micropublications()
                .map(|mp| (mp.id().clone(), mp.clone()))
                .collect(),
            resolutions: net
                .resolutions()
                .map(|r| (r.reference.clone(), r.clone()))
                .collect(),
        }
    }

    pub fn from_micropublication(mp: Micropublication) -> Self {
        let mut micropublications = BTreeMap::new();
        micropublications.insert(mp.id().clone(), mp);
        Document { micropublications, resolutions: BTreeMap::new() }
    }

    pub fn micropublications(&self) -> impl Iterator<Item = &Micropublication> {
        self.micropublications.values()
    }

    pub fn resolutions(&self) -> impl Iterator<Item = &ResolutionEntry> {
        self.resolutions.values()
    }

    pub fn is_empty(&self) -> bool {
        self.micropublications.is_empty()
    }

    pub(crate) fn insert_micropublication(
        &mut self,
        mp: Micropublication,
    ) -> Result<(), SerializationError> {
        if self.micropublications.contains_key(mp.id()) {
            return Err(SerializationError::Schema(format!(
                "duplicate micropublication id {}",
                mp.id()
            )));
        }
        self.micropublications.insert(mp.id().clone(), mp);
        Ok(())
    }

    pub(crate) fn insert_resolution(
        &mut self,
        entry: ResolutionEntry,
    ) -> Result<(), SerializationError> {
        if self.resolutions.contains_key(&entry.reference) {
            return Err(SerializationError::Schema(format!(
                "duplicate resolution for reference {}",
                entry.reference
            )));
        }
        self.resolutions.insert(entry.reference.clone(), entry);
        Ok(())
    }

    /// Folds another document into this one. Micropublication ids and
    /// resolved references must not collide.
    pub fn absorb(&mut self, other: Document) -> Result<(), SerializationError> {
        for mp in other.micropublications.into_values() {
            self.insert_micropublication(mp)?;
        }
        for entry in other.resolutions.into_values() {
            self.insert_resolution(entry)?;
        }
        Ok(())
    }

    /// The corpus view, with an empty agent registry.
    pub fn to_corpus(&self) -> Corpus {
        let mut corpus = Corpus::new();
        for mp in self.micropublications.values() {
            corpus.insert(mp.clone()).expect("document ids are unique");
        }
        corpus
    }

    /// Merges the document into a network and applies its resolutions.
    pub fn to_network(&self) -> Result<Network, NetworkError> {
        let mut net = Network::merge(&self.to_corpus())?;
        for entry in self.resolutions.values() {
            net.resolve_reference(entry.clone())?;
        }
        Ok(net)
    }

    /// Validation run over every member, as re-checked on load.
    pub fn validation_reports(&self) -> BTreeMap<Id, ValidationReport> {
        self.micropublications
            .iter()
            .map(|(id, mp)| (id.clone(), mp.validate()))
            .collect()
    }
}
