//! Domain types and the construction API for micropublications.
//!
//! A [`Micropublication`] is a container of [`Representation`]s. It either
//! *asserts* an element (the element is originally instantiated here) or
//! *quotes* it (the element was instantiated by another micropublication and
//! is referred to by id). Exactly one asserted-or-quoted Statement is the
//! principal claim, and every edge in the container is stamped with the
//! container's id so responsibility stays localized when containers are
//! merged into a [`crate::network::Network`].

mod validation;

pub use validation::{Finding, ValidationCode, ValidationReport};

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::anchoring::AnnotationTarget;
use crate::ident::Id;

/// Errors raised by the construction API.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("duplicate id: {0}")]
    DuplicateId(Id),
    #[error("element {0} already present")]
    DuplicateElement(Id),
    #[error("element {0} cannot be both asserted and quoted")]
    AssertQuoteConflict(Id),
    #[error("edge endpoint {0} is not an element of this micropublication")]
    EndpointNotElement(Id),
    #[error("self edge on {0}")]
    SelfEdge(Id),
    #[error("qualifiedBy must run from a Reference or SemanticQualifier to a Statement ({from} -> {to})")]
    InvalidQualifierEdge { from: Id, to: Id },
    #[error("{0} is not a Statement")]
    NotAStatement(Id),
    #[error("{0} is not an element of this micropublication")]
    NotAnElement(Id),
    #[error("invalid representation {id}: {reason}")]
    InvalidRepresentation { id: Id, reason: String },
    #[error("invalid agent {id}: {reason}")]
    InvalidAgent { id: Id, reason: String },
}

/// Someone (or something) to which statements and formalizations are
/// attributed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Agent {
    pub id: Id,
    pub name: String,
    pub kind: AgentKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum AgentKind {
    Person,
    Organization,
}

impl Agent {
    pub fn person(id: impl Into<Id>, name: impl Into<String>) -> Self {
        Agent { id: id.into(), name: name.into(), kind: AgentKind::Person }
    }

    pub fn organization(id: impl Into<Id>, name: impl Into<String>) -> Self {
        Agent { id: id.into(), name: name.into(), kind: AgentKind::Organization }
    }
}

/// Attribution of a statement or of a whole micropublication to an agent.
///
/// The minimal level of support for any statement is its attribution, so
/// attributions participate in support graphs through ordinary `Supports`
/// edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attribution {
    pub id: Id,
    pub agent_id: Id,
    /// Free-text role, e.g. `"author"` or `"curator"`. A single record may
    /// carry several roles (`"author, curator"`).
    pub role: String,
    /// Optional calendar date, stored as written.
    pub date: Option<String>,
}

impl Attribution {
    pub fn new(id: impl Into<Id>, agent_id: impl Into<Id>, role: impl Into<String>) -> Self {
        Attribution { id: id.into(), agent_id: agent_id.into(), role: role.into(), date: None }
    }

    pub fn with_date(mut self, date: impl Into<String>) -> Self {
        self.date = Some(date.into());
        self
    }
}

/// The kind of an argument element.
///
/// `Statement` specializes `Sentence` (its text must be present and
/// non-empty); `Procedure` and `Material` specialize `Method` and satisfy
/// every Method-position constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RepresentationKind {
    Sentence,
    Statement,
    Data,
    Method,
    Procedure,
    Material,
    Reference,
    SemanticQualifier,
    ArticleText,
    Attribution,
}

impl RepresentationKind {
    /// `Procedure` and `Material` count as methods wherever a method is
    /// expected.
    pub fn is_method(self) -> bool {
        matches!(self, RepresentationKind::Method | RepresentationKind::Procedure | RepresentationKind::Material)
    }

    pub fn name(self) -> &'static str {
        match self {
            RepresentationKind::Sentence => "Sentence",
            RepresentationKind::Statement => "Statement",
            RepresentationKind::Data => "Data",
            RepresentationKind::Method => "Method",
            RepresentationKind::Procedure => "Procedure",
            RepresentationKind::Material => "Material",
            RepresentationKind::Reference => "Reference",
            RepresentationKind::SemanticQualifier => "SemanticQualifier",
            RepresentationKind::ArticleText => "ArticleText",
            RepresentationKind::Attribution => "Attribution",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "Sentence" => RepresentationKind::Sentence,
            "Statement" => RepresentationKind::Statement,
            "Data" => RepresentationKind::Data,
            "Method" => RepresentationKind::Method,
            "Procedure" => RepresentationKind::Procedure,
            "Material" => RepresentationKind::Material,
            "Reference" => RepresentationKind::Reference,
            "SemanticQualifier" => RepresentationKind::SemanticQualifier,
            "ArticleText" => RepresentationKind::ArticleText,
            "Attribution" => RepresentationKind::Attribution,
            _ => return None,
        })
    }
}

/// Content descriptor for Data and Method elements whose substance is not
/// text: a media kind plus an opaque locator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MediaDescriptor {
    pub kind: String,
    pub locator: String,
}

/// A typed argument element: the node universe of the model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub id: Id,
    pub kind: RepresentationKind,
    /// Natural-language content for sentences and statements, the
    /// bibliographic string for references, a term URI or tag for semantic
    /// qualifiers.
    pub text: Option<String>,
    pub media: Option<MediaDescriptor>,
    /// Stand-off binding into the source document, if any.
    pub source: Option<AnnotationTarget>,
    /// The attribution record, for elements of kind `Attribution`.
    pub attribution: Option<Attribution>,
}

impl Representation {
    pub fn new(id: impl Into<Id>, kind: RepresentationKind) -> Self {
        Representation { id: id.into(), kind, text: None, media: None, source: None, attribution: None }
    }

    pub fn statement(id: impl Into<Id>, text: impl Into<String>) -> Self {
        Representation::new(id, RepresentationKind::Statement).with_text(text)
    }

    pub fn sentence(id: impl Into<Id>, text: impl Into<String>) -> Self {
        Representation::new(id, RepresentationKind::Sentence).with_text(text)
    }

    pub fn reference(id: impl Into<Id>, citation: impl Into<String>) -> Self {
        Representation::new(id, RepresentationKind::Reference).with_text(citation)
    }

    pub fn semantic_qualifier(id: impl Into<Id>, term: impl Into<String>) -> Self {
        Representation::new(id, RepresentationKind::SemanticQualifier).with_text(term)
    }

    pub fn data(id: impl Into<Id>, media: MediaDescriptor) -> Self {
        let mut r = Representation::new(id, RepresentationKind::Data);
        r.media = Some(media);
        r
    }

    /// An attribution element carrying its record, as admitted into the
    /// micropublication whose element it attributes.
    pub fn attribution(record: Attribution) -> Self {
        let mut r = Representation::new(record.id.clone(), RepresentationKind::Attribution);
        r.attribution = Some(record);
        r
    }

    pub fn with_text(mut self, text: impl Into<String>) -> Self {
        self.text = Some(text.into());
        self
    }

    pub fn with_source(mut self, source: AnnotationTarget) -> Self {
        self.source = Some(source);
        self
    }

    /// Checks the per-kind invariants: statements carry non-empty text, and
    /// a semantic qualifier written as a URI must be absolute.
    pub fn check(&self) -> Result<(), ModelError> {
        if self.id.is_empty() {
            return Err(ModelError::InvalidRepresentation {
                id: self.id.clone(),
                reason: "empty id".into(),
            });
        }
        if self.kind == RepresentationKind::Statement
            && self.text.as_deref().is_none_or(|t| t.trim().is_empty())
        {
            return Err(ModelError::InvalidRepresentation {
                id: self.id.clone(),
                reason: "a Statement must carry non-empty text".into(),
            });
        }
        if self.kind == RepresentationKind::SemanticQualifier {
            if let Some(text) = self.text.as_deref() {
                if looks_like_relative_uri(text) {
                    return Err(ModelError::InvalidRepresentation {
                        id: self.id.clone(),
                        reason: format!("qualifier URI must be absolute: {text}"),
                    });
                }
            }
        }
        Ok(())
    }
}

/// A qualifier tag is either a plain term or a URI; relative URI references
/// are rejected.
fn looks_like_relative_uri(text: &str) -> bool {
    text.starts_with('/')
        || text.starts_with("./")
        || text.starts_with("../")
        || text.starts_with('#')
        || text.starts_with('?')
        || text.starts_with("//")
}

/// The relation vocabulary between representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RelationPredicate {
    /// Transitive positive support; the greatest element of a
    /// micropublication's supports order is its claim.
    Supports,
    /// Direct attack on a representation. Indirect challenges are inferred,
    /// never stored.
    DirectlyChallenges,
    /// Annotation of a statement by a reference or semantic qualifier. Not
    /// part of the supports order.
    QualifiedBy,
}

impl RelationPredicate {
    pub fn name(self) -> &'static str {
        match self {
            RelationPredicate::Supports => "supports",
            RelationPredicate::DirectlyChallenges => "directlyChallenges",
            RelationPredicate::QualifiedBy => "qualifiedBy",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "supports" => RelationPredicate::Supports,
            "directlyChallenges" => RelationPredicate::DirectlyChallenges,
            "qualifiedBy" => RelationPredicate::QualifiedBy,
            _ => return None,
        })
    }
}

/// An edge between two representations, stamped with the micropublication
/// that asserts it.
///
/// For `QualifiedBy`, `from_id` is the Reference or SemanticQualifier and
/// `to_id` the Statement it annotates (serializations render the inverse
/// reading "statement qualifiedBy qualifier").
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RelationEdge {
    pub from_id: Id,
    pub to_id: Id,
    pub predicate: RelationPredicate,
    pub asserted_by: Id,
}

/// Marker recorded on micropublications that assert a similarity group: the
/// designated holotype and the full member set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupMarker {
    pub holotype_id: Id,
    pub member_ids: BTreeSet<Id>,
}

/// A container of representations arguing exactly one claim, carrying its
/// own attribution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Micropublication {
    id: Id,
    attribution: Attribution,
    claim: Option<Id>,
    asserted: BTreeMap<Id, Representation>,
    quoted: BTreeMap<Id, Option<Id>>,
    /// attribution element id -> id of the element it attributes
    attributes: BTreeMap<Id, Id>,
    edges: BTreeSet<RelationEdge>,
    group: Option<GroupMarker>,
}

impl Micropublication {
    /// An empty micropublication shell: no elements, no claim, not yet
    /// valid. Corpus-level id uniqueness is enforced by
    /// [`Corpus::new_micropublication`].
    pub fn new(id: impl Into<Id>, attribution: Attribution) -> Self {
        Micropublication {
            id: id.into(),
            attribution,
            claim: None,
            asserted: BTreeMap::new(),
            quoted: BTreeMap::new(),
            attributes: BTreeMap::new(),
            edges: BTreeSet::new(),
            group: None,
        }
    }

    pub fn id(&self) -> &Id {
        &self.id
    }

    /// The attribution of this formalization (not of its claim).
    pub fn attribution(&self) -> &Attribution {
        &self.attribution
    }

    pub fn claim(&self) -> Option<&Id> {
        self.claim.as_ref()
    }

    pub fn asserted(&self) -> impl Iterator<Item = &Representation> {
        self.asserted.values()
    }

    pub fn asserted_ids(&self) -> impl Iterator<Item = &Id> {
        self.asserted.keys()
    }

    /// Quoted element ids with their (possibly unresolved) origin
    /// micropublication.
    pub fn quoted(&self) -> impl Iterator<Item = (&Id, Option<&Id>)> {
        self.quoted.iter().map(|(id, origin)| (id, origin.as_ref()))
    }

    pub fn edges(&self) -> impl Iterator<Item = &RelationEdge> {
        self.edges.iter()
    }

    /// Pairs of (attribution element id, attributed element id).
    pub fn attribution_targets(&self) -> impl Iterator<Item = (&Id, &Id)> {
        self.attributes.iter()
    }

    pub fn group(&self) -> Option<&GroupMarker> {
        self.group.as_ref()
    }

    pub(crate) fn set_group(&mut self, marker: GroupMarker) {
        self.group = Some(marker);
    }

    pub fn representation(&self, id: &Id) -> Option<&Representation> {
        self.asserted.get(id)
    }

    /// True when `id` is asserted or quoted by this micropublication.
    pub fn is_element(&self, id: &Id) -> bool {
        self.asserted.contains_key(id) || self.quoted.contains_key(id)
    }

    pub fn element_ids(&self) -> impl Iterator<Item = &Id> {
        self.asserted.keys().chain(self.quoted.keys())
    }

    pub fn element_count(&self) -> usize {
        self.asserted.len() + self.quoted.len()
    }

    /// Originally instantiates `r` in this micropublication.
    pub fn assert_element(&mut self, r: Representation) -> Result<(), ModelError> {
        r.check()?;
        if self.quoted.contains_key(&r.id) {
            return Err(ModelError::AssertQuoteConflict(r.id));
        }
        if self.asserted.contains_key(&r.id) {
            return Err(ModelError::DuplicateElement(r.id));
        }
        self.asserted.insert(r.id.clone(), r);
        Ok(())
    }

    /// Refers to an element first instantiated by another micropublication.
    /// The origin may be left unresolved; resolution is checked at merge
    /// time.
    pub fn quote_element(&mut self, rid: impl Into<Id>, origin: Option<Id>) -> Result<(), ModelError> {
        let rid = rid.into();
        if self.asserted.contains_key(&rid) {
            return Err(ModelError::AssertQuoteConflict(rid));
        }
        self.quoted.insert(rid, origin);
        Ok(())
    }

    /// Records `attribution` as attributing `element`, admitting the
    /// attribution as an element of this micropublication.
    pub fn attribute(&mut self, element: &Id, attribution: Attribution) -> Result<(), ModelError> {
        if !self.is_element(element) {
            return Err(ModelError::NotAnElement(element.clone()));
        }
        let rep = Representation::attribution(attribution);
        let attr_id = rep.id.clone();
        self.assert_element(rep)?;
        self.attributes.insert(attr_id, element.clone());
        Ok(())
    }

    /// Re-registers an attribution-to-element mapping when rebuilding a
    /// micropublication from its serialized form. Both ids must already be
    /// elements.
    pub(crate) fn restore_attribute_mapping(
        &mut self,
        attribution: Id,
        element: Id,
    ) -> Result<(), ModelError> {
        match self.asserted.get(&attribution) {
            Some(rep) if rep.kind == RepresentationKind::Attribution => {}
            _ => return Err(ModelError::NotAnElement(attribution)),
        }
        if !self.is_element(&element) {
            return Err(ModelError::NotAnElement(element));
        }
        self.attributes.insert(attribution, element);
        Ok(())
    }

    /// Adds an edge between two elements of this micropublication, stamped
    /// `asserted_by` this id. Adding an edge that is already present is a
    /// no-op.
    pub fn add_edge(
        &mut self,
        from: impl Into<Id>,
        to: impl Into<Id>,
        predicate: RelationPredicate,
    ) -> Result<(), ModelError> {
        let from = from.into();
        let to = to.into();
        if from == to {
            return Err(ModelError::SelfEdge(from));
        }
        if !self.is_element(&from) {
            return Err(ModelError::EndpointNotElement(from));
        }
        if !self.is_element(&to) {
            return Err(ModelError::EndpointNotElement(to));
        }
        // Endpoint kinds are only checkable for elements asserted here;
        // quoted endpoints are taken on trust until merge.
        if predicate == RelationPredicate::QualifiedBy {
            let bad_source = self.asserted.get(&from).is_some_and(|r| {
                !matches!(
                    r.kind,
                    RepresentationKind::Reference | RepresentationKind::SemanticQualifier
                )
            });
            let bad_target = self
                .asserted
                .get(&to)
                .is_some_and(|r| r.kind != RepresentationKind::Statement);
            if bad_source || bad_target {
                return Err(ModelError::InvalidQualifierEdge { from, to });
            }
        }
        self.edges.insert(RelationEdge {
            from_id: from,
            to_id: to,
            predicate,
            asserted_by: self.id.clone(),
        });
        Ok(())
    }

    /// Designates the principal claim. The claim must be an element; when it
    /// is asserted here its kind must be Statement (quoted claims are
    /// checked at merge time). Returns the previous claim when one is
    /// replaced.
    pub fn set_claim(&mut self, statement_id: impl Into<Id>) -> Result<Option<Id>, ModelError> {
        let sid = statement_id.into();
        if let Some(rep) = self.asserted.get(&sid) {
            if rep.kind != RepresentationKind::Statement {
                return Err(ModelError::NotAStatement(sid));
            }
        } else if !self.quoted.contains_key(&sid) {
            return Err(ModelError::NotAnElement(sid));
        }
        Ok(self.claim.replace(sid))
    }

    /// Supports-only adjacency over this micropublication's own edges.
    pub(crate) fn supports_adjacency(&self) -> BTreeMap<&Id, Vec<&Id>> {
        let mut adj: BTreeMap<&Id, Vec<&Id>> = BTreeMap::new();
        for e in &self.edges {
            if e.predicate == RelationPredicate::Supports {
                adj.entry(&e.from_id).or_default().push(&e.to_id);
            }
        }
        adj
    }
}

/// A working set of micropublications with a registry of known agents.
///
/// The corpus enforces micropublication-id uniqueness at construction time
/// and supplies the input to [`crate::network::Network::merge`].
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Corpus {
    agents: BTreeMap<Id, Agent>,
    mps: BTreeMap<Id, Micropublication>,
}

impl Corpus {
    pub fn new() -> Self {
        Corpus::default()
    }

    pub fn register_agent(&mut self, agent: Agent) -> Result<(), ModelError> {
        if agent.id.is_empty() {
            return Err(ModelError::InvalidAgent { id: agent.id, reason: "empty id".into() });
        }
        if self.agents.contains_key(&agent.id) {
            return Err(ModelError::DuplicateId(agent.id));
        }
        self.agents.insert(agent.id.clone(), agent);
        Ok(())
    }

    /// Starts an empty micropublication under a corpus-unique id.
    pub fn new_micropublication(
        &mut self,
        id: impl Into<Id>,
        attribution: Attribution,
    ) -> Result<&mut Micropublication, ModelError> {
        let id = id.into();
        if self.mps.contains_key(&id) {
            return Err(ModelError::DuplicateId(id));
        }
        let mp = Micropublication::new(id.clone(), attribution);
        Ok(self.mps.entry(id).or_insert(mp))
    }

    pub fn insert(&mut self, mp: Micropublication) -> Result<(), ModelError> {
        if self.mps.contains_key(&mp.id) {
            return Err(ModelError::DuplicateId(mp.id));
        }
        self.mps.insert(mp.id.clone(), mp);
        Ok(())
    }

    pub fn get(&self, id: &str) -> Option<&Micropublication> {
        self.mps.get(id)
    }

    pub fn get_mut(&mut self, id: &str) -> Option<&mut Micropublication> {
        self.mps.get_mut(id)
    }

    pub fn micropublications(&self) -> impl Iterator<Item = &Micropublication> {
        self.mps.values()
    }

    pub fn len(&self) -> usize {
        self.mps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mps.is_empty()
    }

    pub fn agents(&self) -> impl Iterator<Item = &Agent> {
        self.agents.values()
    }

    pub fn agent(&self, id: &str) -> Option<&Agent> {
        self.agents.get(id)
    }

    pub fn has_agents(&self) -> bool {
        !self.agents.is_empty()
    }

    /// Validates every member micropublication.
    pub fn validate_all(&self) -> BTreeMap<Id, ValidationReport> {
        self.mps.iter().map(|(id, mp)| (id.clone(), mp.validate())).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn attribution(id: &str) -> Attribution {
        Attribution::new(id, "PSpilman", "author")
    }

    #[test]
    fn empty_shell_has_no_elements() {
        let mp = Micropublication::new("MP1", attribution("A_MP1"));
        assert_eq!(mp.element_count(), 0);
        assert!(mp.claim().is_none());
    }

    #[test]
    fn corpus_rejects_duplicate_mp_id() {
        let mut corpus = Corpus::new();
        corpus.new_micropublication("MP1", attribution("A_MP1")).unwrap();
        let err = corpus.new_micropublication("MP1", attribution("A_MP1b")).unwrap_err();
        assert_eq!(err, ModelError::DuplicateId(Id::from("MP1")));
    }

    #[test]
    fn author_and_curator_may_be_the_same_agent() {
        let mut corpus = Corpus::new();
        corpus.register_agent(Agent::person("PSpilman", "Patricia Spilman")).unwrap();
        let a = Attribution::new("A_MP7", "PSpilman", "author, curator");
        let mp = corpus.new_micropublication("MP7", a).unwrap();
        assert_eq!(mp.attribution().role, "author, curator");
    }

    #[test]
    fn assert_then_quote_conflicts() {
        let mut mp = Micropublication::new("MP1", attribution("A_MP1"));
        mp.assert_element(Representation::statement("C1", "Rapamycin is an inhibitor of the mTOR pathway"))
            .unwrap();
        assert_eq!(mp.element_count(), 1);
        let err = mp.quote_element("C1", None).unwrap_err();
        assert_eq!(err, ModelError::AssertQuoteConflict(Id::from("C1")));
    }

    #[test]
    fn quote_then_assert_conflicts() {
        let mut mp = Micropublication::new("MP6", attribution("A_MP6"));
        mp.quote_element("C3", Some(Id::from("MP3"))).unwrap();
        let err = mp.assert_element(Representation::statement("C3", "x")).unwrap_err();
        assert_eq!(err, ModelError::AssertQuoteConflict(Id::from("C3")));
    }

    #[test]
    fn quoting_with_unresolved_origin_is_accepted() {
        let mut mp = Micropublication::new("MP6", attribution("A_MP6"));
        mp.quote_element("C1.1", None).unwrap();
        assert!(mp.is_element(&Id::from("C1.1")));
    }

    #[test]
    fn data_elements_are_accepted() {
        let mut mp = Micropublication::new("MP2", attribution("A_MP2"));
        let media = MediaDescriptor { kind: "image".into(), locator: "fig1.png".into() };
        mp.assert_element(Representation::data("D1", media)).unwrap();
        assert_eq!(mp.representation(&Id::from("D1")).unwrap().kind, RepresentationKind::Data);
    }

    #[test]
    fn statements_require_text() {
        let mut mp = Micropublication::new("MP1", attribution("A_MP1"));
        let bare = Representation::new("C1", RepresentationKind::Statement);
        assert!(matches!(
            mp.assert_element(bare),
            Err(ModelError::InvalidRepresentation { .. })
        ));
    }

    #[test]
    fn relative_qualifier_uri_rejected() {
        let mut mp = Micropublication::new("MP1", attribution("A_MP1"));
        let q = Representation::semantic_qualifier("Q1", "../CHEBI_9168");
        assert!(matches!(mp.assert_element(q), Err(ModelError::InvalidRepresentation { .. })));
        // CURIE-style and plain tags are fine
        mp.assert_element(Representation::semantic_qualifier("Q2", "CHEBI:9168")).unwrap();
        mp.assert_element(Representation::semantic_qualifier("Q3", "hypothesis")).unwrap();
    }

    #[test]
    fn self_edge_rejected() {
        let mut mp = Micropublication::new("MP1", attribution("A_MP1"));
        mp.assert_element(Representation::statement("X", "x")).unwrap();
        assert_eq!(
            mp.add_edge("X", "X", RelationPredicate::Supports),
            Err(ModelError::SelfEdge(Id::from("X")))
        );
    }

    #[test]
    fn edges_require_elements() {
        let mut mp = Micropublication::new("MP1", attribution("A_MP1"));
        mp.assert_element(Representation::statement("C1", "c")).unwrap();
        assert_eq!(
            mp.add_edge("Ref5", "C1", RelationPredicate::Supports),
            Err(ModelError::EndpointNotElement(Id::from("Ref5")))
        );
    }

    #[test]
    fn set_claim_requires_statement_kind_for_asserted_elements() {
        let mut mp = Micropublication::new("MP2", attribution("A_MP2"));
        let media = MediaDescriptor { kind: "image".into(), locator: "fig1.png".into() };
        mp.assert_element(Representation::data("D1", media)).unwrap();
        assert_eq!(mp.set_claim("D1"), Err(ModelError::NotAStatement(Id::from("D1"))));
        assert_eq!(mp.set_claim("C9"), Err(ModelError::NotAnElement(Id::from("C9"))));
    }

    #[test]
    fn second_set_claim_wins_and_reports_replacement() {
        let mut mp = Micropublication::new("MP1", attribution("A_MP1"));
        mp.assert_element(Representation::statement("C1", "first")).unwrap();
        mp.assert_element(Representation::statement("C2", "second")).unwrap();
        assert_eq!(mp.set_claim("C1").unwrap(), None);
        assert_eq!(mp.set_claim("C2").unwrap(), Some(Id::from("C1")));
        assert_eq!(mp.claim(), Some(&Id::from("C2")));
    }

    #[test]
    fn attribute_admits_the_attribution_as_element() {
        let mut mp = Micropublication::new("MP1", attribution("A_MP1"));
        mp.assert_element(Representation::statement("C1", "c")).unwrap();
        mp.attribute(&Id::from("C1"), Attribution::new("A_C1", "PSpilman", "author")).unwrap();
        assert!(mp.is_element(&Id::from("A_C1")));
        mp.add_edge("A_C1", "C1", RelationPredicate::Supports).unwrap();
        assert_eq!(mp.edges().count(), 1);
    }

    #[test]
    fn qualifier_edges_check_endpoint_kinds() {
        let mut mp = Micropublication::new("MP1", attribution("A_MP1"));
        mp.assert_element(Representation::statement("C1", "c")).unwrap();
        mp.assert_element(Representation::semantic_qualifier("Q1", "CHEBI:9168")).unwrap();
        let media = MediaDescriptor { kind: "image".into(), locator: "d.png".into() };
        mp.assert_element(Representation::data("D1", media)).unwrap();
        mp.add_edge("Q1", "C1", RelationPredicate::QualifiedBy).unwrap();
        assert!(matches!(
            mp.add_edge("D1", "C1", RelationPredicate::QualifiedBy),
            Err(ModelError::InvalidQualifierEdge { .. })
        ));
        assert!(matches!(
            mp.add_edge("Q1", "D1", RelationPredicate::QualifiedBy),
            Err(ModelError::InvalidQualifierEdge { .. })
        ));
    }

    #[test]
    fn duplicate_edge_is_a_no_op() {
        let mut mp = Micropublication::new("MP1", attribution("A_MP1"));
        mp.assert_element(Representation::statement("C1", "c")).unwrap();
        mp.assert_element(Representation::reference("Ref5", "Harrison 2009")).unwrap();
        mp.add_edge("Ref5", "C1", RelationPredicate::Supports).unwrap();
        mp.add_edge("Ref5", "C1", RelationPredicate::Supports).unwrap();
        assert_eq!(mp.edges().count(), 1);
    }

    #[test]
    fn domain_values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Micropublication>();
        assert_send_sync::<Corpus>();
        assert_send_sync::<crate::network::Network>();
        assert_send_sync::<ValidationReport>();
    }
}
