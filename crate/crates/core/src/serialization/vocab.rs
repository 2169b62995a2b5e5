//! The RDF vocabulary table.
//!
//! Every term the emitters may produce is registered here; emission rejects
//! anything else. The micropublication namespace defaults to
//! `http://purl.org/mp#` and can be overridden (the CLI honors
//! `MP_VOCAB_BASE`). Selector terms use Open-Annotation-style names under
//! the `oa:` namespace.

use std::collections::BTreeSet;

use crate::serialization::SerializationError;

pub const DEFAULT_NAMESPACE: &str = "http://purl.org/mp#";
pub const DEFAULT_INSTANCE_BASE: &str = "urn:mp:";
pub const OA_NAMESPACE: &str = "http://www.w3.org/ns/oa#";
pub const NP_NAMESPACE: &str = "http://www.nanopub.org/nschema#";

/// Model classes.
const MP_CLASSES: &[&str] = &[
    "Micropublication",
    "Representation",
    "Sentence",
    "Statement",
    "Claim",
    "Qualifier",
    "Reference",
    "SemanticQualifier",
    "Data",
    "Method",
    "Procedure",
    "Material",
    "Attribution",
    "Agent",
    "Person",
    "Organization",
    "ArticleText",
];

/// Model predicates.
const MP_PREDICATES: &[&str] = &[
    "supports",
    "challenges",
    "directlyChallenges",
    "arguedBy",
    "asserts",
    "quotes",
    "elementOf",
    "qualifiedBy",
    "hasSupportGraphElement",
    "hasChallengeGraphElement",
    "supportedByData",
    "supportedByMethod",
    "attributionOfAgent",
];

/// Artifact terms: literals and links the model needs but the predicate
/// list above does not name.
const MP_EXTENSIONS: &[&str] = &["hasAttribution", "text", "role", "date"];

/// Open-Annotation-style selector terms.
const OA_TERMS: &[&str] = &[
    "hasTarget",
    "hasSource",
    "hasSelector",
    "TextQuoteSelector",
    "TextPositionSelector",
    "exact",
    "prefix",
    "suffix",
    "start",
    "end",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VocabularyMap {
    namespace: String,
    instance_base: String,
    mp_terms: BTreeSet<String>,
    oa_terms: BTreeSet<String>,
}

impl Default for VocabularyMap {
    fn default() -> Self {
        VocabularyMap::new()
    }
}

impl VocabularyMap {
    pub fn new() -> Self {
        VocabularyMap::with_namespace(DEFAULT_NAMESPACE)
    }

    pub fn with_namespace(namespace: impl Into<String>) -> Self {
        VocabularyMap {
            namespace: namespace.into(),
            instance_base: DEFAULT_INSTANCE_BASE.to_owned(),
            mp_terms: MP_CLASSES
                .iter()
                .chain(MP_PREDICATES)
                .chain(MP_EXTENSIONS)
                .map(|s| (*s).to_owned())
                .collect(),
            oa_terms: OA_TERMS.iter().map(|s| (*s).to_owned()).collect(),
        }
    }

    /// A vocabulary restricted to an explicit term set, for callers that
    /// need to prove the reject path.
    pub fn with_terms(terms: impl IntoIterator<Item = String>) -> Self {
        VocabularyMap {
            namespace: DEFAULT_NAMESPACE.to_owned(),
            instance_base: DEFAULT_INSTANCE_BASE.to_owned(),
            mp_terms: terms.into_iter().collect(),
            oa_terms: OA_TERMS.iter().map(|s| (*s).to_owned()).collect(),
        }
    }

    pub fn namespace(&self) -> &str {
        &self.namespace
    }

    pub fn instance_base(&self) -> &str {
        &self.instance_base
    }

    pub fn contains(&self, term: &str) -> bool {
        self.mp_terms.contains(term) || self.oa_terms.contains(term)
    }

    /// The prefixed name for a model term, rejecting anything not in the
    /// table.
    pub fn mp_term(&self, term: &str) -> Result<String, SerializationError> {
        if self.mp_terms.contains(term) {
            Ok(format!("mp:{term}"))
        } else {
            Err(SerializationError::UnknownTerm(term.to_owned()))
        }
    }

    /// The prefixed name for a selector term.
    pub fn oa_term(&self, term: &str) -> Result<String, SerializationError> {
        if self.oa_terms.contains(term) {
            Ok(format!("oa:{term}"))
        } else {
            Err(SerializationError::UnknownTerm(term.to_owned()))
        }
    }

    /// Canonicalizes predicate aliases accepted on input:
    /// `attributionForAgent` reads as `attributionOfAgent`.
    pub fn canonical_predicate<'a>(&self, term: &'a str) -> &'a str {
        if term == "attributionForAgent" {
            "attributionOfAgent"
        } else {
            term
        }
    }

    /// An instance IRI under the configured base; characters outside the
    /// unreserved set are percent-encoded so arbitrary ids stay valid.
    pub fn instance_iri(&self, id: &str) -> String {
        let mut iri = String::with_capacity(self.instance_base.len() + id.len());
        iri.push_str(&self.instance_base);
        for byte in id.bytes() {
            match byte {
                b'A'..=b'Z' | b'a'..=b'z' | b'0'..=b'9' | b'-' | b'.' | b'_' | b'~' | b':'
                | b'/' => iri.push(byte as char),
                other => iri.push_str(&format!("%{other:02X}")),
            }
        }
        iri
    }
}
