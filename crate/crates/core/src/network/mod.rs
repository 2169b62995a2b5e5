//! Corpus-level merging and the queries that only make sense across
//! micropublication boundaries: reference resolution, claim lineages,
//! evidence-grounding classification, similarity groups and
//! citation-distortion auditing.

mod audit;

pub use audit::{ClaimAudit, DistortionReport, SimilarityGroup};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::ident::Id;
use crate::inference::{self, ClosedRelation, InferenceError};
use crate::model::{
    Corpus, Micropublication, RelationEdge, RelationPredicate, Representation, RepresentationKind,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NetworkError {
    #[error("micropublication {id} does not validate")]
    InvalidMicropublication { id: Id },
    #[error("representation {id} asserted with different content by {first} and {second}")]
    ConflictingRepresentation { id: Id, first: Id, second: Id },
    #[error("{0} is not a Reference")]
    NotAReference(Id),
    #[error("no such statement: {0}")]
    UnknownStatement(Id),
    #[error("no such claim: {0}")]
    UnknownClaim(Id),
    #[error("no such micropublication: {0}")]
    UnknownMicropublication(Id),
    #[error("holotype {0} is not a group member")]
    HolotypeNotMember(Id),
    #[error("group member {0} is not a Statement")]
    NonStatementMember(Id),
    #[error("a similarity group needs at least two members, got {0}")]
    GroupTooSmall(usize),
    #[error("duplicate id: {0}")]
    DuplicateId(Id),
    #[error("merged supports relation contains a cycle through {0}")]
    SupportCycle(Id),
}

impl From<InferenceError> for NetworkError {
    fn from(e: InferenceError) -> Self {
        match e {
            InferenceError::CycleDetected(id) => NetworkError::SupportCycle(id),
        }
    }
}

/// Non-fatal findings recorded while merging.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MergeWarning {
    /// A quoted id that no micropublication in the corpus asserts.
    DanglingQuote { mp: Id, element: Id },
    /// An attribution pointing at an agent missing from the corpus registry.
    UnresolvedAgent { attribution: Id, agent: Id },
}

impl fmt::Display for MergeWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MergeWarning::DanglingQuote { mp, element } => {
                write!(f, "DanglingQuote: {mp} quotes {element}, which nothing asserts")
            }
            MergeWarning::UnresolvedAgent { attribution, agent } => {
                write!(f, "UnresolvedAgent: {attribution} names unknown agent {agent}")
            }
        }
    }
}

/// A recorded upgrade of a document-level citation: the reference resolves
/// to a document and, optionally, to the statement inside it that carries
/// the cited meaning.
///
/// Resolution is data, not edge rewriting: the document-level citation stays
/// visible, and the statement-level upgrade surfaces as a derivable supports
/// pair in lineage and grounding queries, attributed to `resolved_by`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionEntry {
    pub reference: Id,
    pub document: Id,
    pub statement: Option<Id>,
    pub resolved_by: Option<Id>,
}

/// A merged multi-micropublication graph with resolved quotes and
/// cross-document edges. Queries are read-only; the network is safe to share
/// once built.
#[derive(Debug, Clone, PartialEq)]
pub struct Network {
    mps: BTreeMap<Id, Micropublication>,
    representations: BTreeMap<Id, Representation>,
    asserted_by: BTreeMap<Id, Id>,
    edges: BTreeSet<RelationEdge>,
    resolutions: BTreeMap<Id, ResolutionEntry>,
    warnings: Vec<MergeWarning>,
}

/// How deeply a claim is grounded in evidence, from bare attribution up to
/// data with reproducible methods.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum GroundingTier {
    AttributionOnly,
    ReferenceBacked,
    StatementBacked,
    DataBacked,
    MethodBacked,
}

impl GroundingTier {
    pub fn rank(self) -> u8 {
        match self {
            GroundingTier::AttributionOnly => 0,
            GroundingTier::ReferenceBacked => 1,
            GroundingTier::StatementBacked => 2,
            GroundingTier::DataBacked => 3,
            GroundingTier::MethodBacked => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GroundingTier::AttributionOnly => "AttributionOnly",
            GroundingTier::ReferenceBacked => "ReferenceBacked",
            GroundingTier::StatementBacked => "StatementBacked",
            GroundingTier::DataBacked => "DataBacked",
            GroundingTier::MethodBacked => "MethodBacked",
        }
    }
}

impl fmt::Display for GroundingTier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.name(), self.rank())
    }
}

/// A grounding classification with the path of ids that witnesses it. Every
/// consecutive pair of the witness lies in the closed supports relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundingLevel {
    pub level: GroundingTier,
    pub witness: Vec<Id>,
}

/// The statements feeding a claim across micropublication boundaries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lineage {
    pub root: Id,
    pub nodes: BTreeSet<Id>,
    /// (supporting statement, supported statement) pairs with no
    /// intermediate statement between them.
    pub edges: BTreeSet<(Id, Id)>,
    /// Longest chain of lineage edges ending at the root.
    pub depth: usize,
}

impl Network {
    /// Merges a corpus of individually valid micropublications into one
    /// graph, binding quoted ids to the micropublications that assert them.
    pub fn merge(corpus: &Corpus) -> Result<Network, NetworkError> {
        let mut net = Network {
            mps: BTreeMap::new(),
            representations: BTreeMap::new(),
            asserted_by: BTreeMap::new(),
            edges: BTreeSet::new(),
            resolutions: BTreeMap::new(),
            warnings: Vec::new(),
        };

        for mp in corpus.micropublications() {
            if !mp.validate().is_valid() {
                return Err(NetworkError::InvalidMicropublication { id: mp.id().clone() });
            }
            for rep in mp.asserted() {
                match net.representations.get(&rep.id) {
                    None => {
                        net.representations.insert(rep.id.clone(), rep.clone());
                        net.asserted_by.insert(rep.id.clone(), mp.id().clone());
                    }
                    Some(existing) if existing == rep => {
                        // Identical re-assertion is tolerated; the first
                        // asserter keeps responsibility.
                    }
                    Some(_) => {
                        return Err(NetworkError::ConflictingRepresentation {
                            id: rep.id.clone(),
                            first: net.asserted_by[&rep.id].clone(),
                            second: mp.id().clone(),
                        });
                    }
                }
            }
            net.edges.extend(mp.edges().cloned());
            net.mps.insert(mp.id().clone(), mp.clone());
        }

        // Quotes resolve against asserted representations; quoting a whole
        // micropublication by id is structurally allowed (layering).
        for mp in net.mps.values() {
            for (quoted, _origin) in mp.quoted() {
                if !net.representations.contains_key(quoted) && !net.mps.contains_key(quoted) {
                    net.warnings.push(MergeWarning::DanglingQuote {
                        mp: mp.id().clone(),
                        element: quoted.clone(),
                    });
                }
            }
        }

        // Agent resolution is only checkable when the corpus carries a
        // registry; canonical documents do not serialize one.
        if corpus.has_agents() {
            for mp in net.mps.values() {
                let mut records = vec![mp.attribution()];
                records.extend(mp.asserted().filter_map(|r| r.attribution.as_ref()));
                for record in records {
                    if corpus.agent(record.agent_id.as_str()).is_none() {
                        net.warnings.push(MergeWarning::UnresolvedAgent {
                            attribution: record.id.clone(),
                            agent: record.agent_id.clone(),
                        });
                    }
                }
            }
        }

        Ok(net)
    }

    pub fn micropublications(&self) -> impl Iterator<Item = &Micropublication> {
        self.mps.values()
    }

    pub fn micropublication(&self, id: &str) -> Option<&Micropublication> {
        self.mps.get(id)
    }

    pub fn representations(&self) -> impl Iterator<Item = &Representation> {
        self.representations.values()
    }

    pub fn representation(&self, id: &str) -> Option<&Representation> {
        self.representations.get(id)
    }

    /// The micropublication that asserted `id`, when any does.
    pub fn asserter_of(&self, id: &str) -> Option<&Id> {
        self.asserted_by.get(id)
    }

    pub fn edges(&self) -> impl Iterator<Item = &RelationEdge> {
        self.edges.iter()
    }

    pub fn resolutions(&self) -> impl Iterator<Item = &ResolutionEntry> {
        self.resolutions.values()
    }

    pub fn warnings(&self) -> &[MergeWarning] {
        &self.warnings
    }

    pub fn claim_ids(&self) -> BTreeSet<&Id> {
        self.mps.values().filter_map(|mp| mp.claim()).collect()
    }

    /// Records a reference resolution. The statement-level upgrade, when
    /// present, makes `statement supports X` derivable for every `X` the
    /// reference supports or qualifies.
    pub fn resolve_reference(&mut self, entry: ResolutionEntry) -> Result<(), NetworkError> {
        match self.representations.get(&entry.reference) {
            Some(rep) if rep.kind == RepresentationKind::Reference => {}
            _ => return Err(NetworkError::NotAReference(entry.reference)),
        }
        if let Some(stmt) = &entry.statement {
            match self.representations.get(stmt) {
                Some(rep) if rep.kind == RepresentationKind::Statement => {}
                _ => return Err(NetworkError::UnknownStatement(stmt.clone())),
            }
        }
        self.resolutions.insert(entry.reference.clone(), entry);
        Ok(())
    }

    /// Supports pairs derived from statement-level reference resolutions.
    fn derived_pairs(&self) -> Vec<(Id, Id)> {
        let mut pairs = Vec::new();
        for entry in self.resolutions.values() {
            let Some(stmt) = &entry.statement else { continue };
            for e in &self.edges {
                if e.from_id == entry.reference
                    && matches!(
                        e.predicate,
                        RelationPredicate::Supports | RelationPredicate::QualifiedBy
                    )
                    && &e.to_id != stmt
                {
                    pairs.push((stmt.clone(), e.to_id.clone()));
                }
            }
        }
        pairs
    }

    /// The closure of the whole network: all asserted edges plus
    /// resolution-derived supports pairs.
    pub fn closed_relation(&self) -> Result<ClosedRelation, NetworkError> {
        let edges: Vec<RelationEdge> = self.edges.iter().cloned().collect();
        Ok(ClosedRelation::build(&edges, &self.derived_pairs())?)
    }

    /// The support graph of one member micropublication under the network
    /// closure.
    pub fn support_graph(&self, mp_id: &str) -> Result<BTreeSet<Id>, NetworkError> {
        let mp = self
            .mps
            .get(mp_id)
            .ok_or_else(|| NetworkError::UnknownMicropublication(Id::from(mp_id)))?;
        Ok(inference::support_graph(mp, &self.closed_relation()?))
    }

    /// The challenge graph of one member micropublication under the network
    /// closure: everything whose direct or undercut-inferred challenges
    /// target the claim or its support graph.
    pub fn challenge_graph(&self, mp_id: &str) -> Result<BTreeSet<Id>, NetworkError> {
        let mp = self
            .mps
            .get(mp_id)
            .ok_or_else(|| NetworkError::UnknownMicropublication(Id::from(mp_id)))?;
        Ok(inference::challenge_graph(mp, &self.closed_relation()?))
    }

    /// Supports adjacency over asserted edges plus derived pairs.
    fn supports_adjacency(&self) -> BTreeMap<Id, Vec<Id>> {
        let mut adjacency: BTreeMap<Id, Vec<Id>> = BTreeMap::new();
        for e in &self.edges {
            if e.predicate == RelationPredicate::Supports {
                adjacency.entry(e.from_id.clone()).or_default().push(e.to_id.clone());
            }
        }
        for (from, to) in self.derived_pairs() {
            adjacency.entry(from).or_default().push(to);
        }
        adjacency
    }

    fn kind_of(&self, id: &Id) -> Option<RepresentationKind> {
        self.representations.get(id.as_str()).map(|r| r.kind)
    }

    /// All statements with a closed-supports path to `claim`, with the
    /// statement-to-statement edges between them.
    pub fn claim_lineage(&self, claim: &Id) -> Result<Lineage, NetworkError> {
        match self.kind_of(claim) {
            Some(RepresentationKind::Statement) => {}
            _ => return Err(NetworkError::UnknownClaim(claim.clone())),
        }
        let closed = self.closed_relation()?;

        let mut nodes: BTreeSet<Id> = BTreeSet::new();
        nodes.insert(claim.clone());
        for (from, to) in closed.closed_supports() {
            if to == claim && self.kind_of(from) == Some(RepresentationKind::Statement) {
                nodes.insert(from.clone());
            }
        }

        // Statement-to-statement skeleton: walk forward from each lineage
        // statement, passing through non-statement nodes and stopping at the
        // first statement reached.
        let adjacency = self.supports_adjacency();
        let mut edges: BTreeSet<(Id, Id)> = BTreeSet::new();
        for s in &nodes {
            let mut stack: Vec<Id> = adjacency.get(s).cloned().unwrap_or_default();
            let mut seen: BTreeSet<Id> = BTreeSet::new();
            while let Some(n) = stack.pop() {
                if !seen.insert(n.clone()) {
                    continue;
                }
                if self.kind_of(&n) == Some(RepresentationKind::Statement) {
                    if nodes.contains(&n) {
                        edges.insert((s.clone(), n.clone()));
                    }
                    continue;
                }
                stack.extend(adjacency.get(&n).cloned().unwrap_or_default());
            }
        }

        // Longest chain ending at the root; the skeleton inherits acyclicity
        // from the closed supports relation.
        let mut incoming: BTreeMap<&Id, Vec<&Id>> = BTreeMap::new();
        for (from, to) in &edges {
            incoming.entry(to).or_default().push(from);
        }
        fn longest<'a>(
            node: &'a Id,
            incoming: &BTreeMap<&'a Id, Vec<&'a Id>>,
            memo: &mut BTreeMap<&'a Id, usize>,
        ) -> usize {
            if let Some(d) = memo.get(node) {
                return *d;
            }
            let d = incoming
                .get(node)
                .map(|froms| froms.iter().map(|f| longest(f, incoming, memo) + 1).max().unwrap_or(0))
                .unwrap_or(0);
            memo.insert(node, d);
            d
        }
        let mut memo = BTreeMap::new();
        let depth = longest(claim, &incoming, &mut memo);

        Ok(Lineage { root: claim.clone(), nodes, edges, depth })
    }

    /// Classifies how deeply `claim` is grounded, with a witness path whose
    /// consecutive pairs lie in the closed supports relation.
    pub fn grounding_level(&self, claim: &Id) -> Result<GroundingLevel, NetworkError> {
        if !self.representations.contains_key(claim.as_str()) {
            return Err(NetworkError::UnknownClaim(claim.clone()));
        }
        let closed = self.closed_relation()?;
        let supporters: BTreeSet<&Id> = closed
            .closed_supports()
            .iter()
            .filter(|(_, to)| to == claim)
            .map(|(from, _)| from)
            .collect();

        // MethodBacked: a data supporter fed by a method, procedure or
        // material.
        let mut method_witness: Option<(Id, Id)> = None;
        for e in &self.edges {
            if e.predicate != RelationPredicate::Supports {
                continue;
            }
            if self.kind_of(&e.to_id) == Some(RepresentationKind::Data)
                && supporters.contains(&e.to_id)
                && self.kind_of(&e.from_id).is_some_and(|k| k.is_method())
            {
                let candidate = (e.from_id.clone(), e.to_id.clone());
                if method_witness.as_ref().is_none_or(|w| candidate < *w) {
                    method_witness = Some(candidate);
                }
            }
        }
        if let Some((method, data)) = method_witness {
            return Ok(GroundingLevel {
                level: GroundingTier::MethodBacked,
                witness: vec![method, data, claim.clone()],
            });
        }

        let first_of_kind = |pred: &dyn Fn(&Id) -> bool| -> Option<Id> {
            supporters.iter().find(|id| pred(id)).map(|id| (*id).clone())
        };

        if let Some(data) =
            first_of_kind(&|id| self.kind_of(id) == Some(RepresentationKind::Data))
        {
            return Ok(GroundingLevel {
                level: GroundingTier::DataBacked,
                witness: vec![data, claim.clone()],
            });
        }

        // A statement asserted by a different micropublication than the
        // claim's own: cross-publication backing, whether asserted directly
        // or derived from a reference resolution.
        let claim_home = self.asserted_by.get(claim.as_str());
        if let Some(external) = first_of_kind(&|id| {
            self.kind_of(id) == Some(RepresentationKind::Statement)
                && self.asserted_by.contains_key(id.as_str())
                && self.asserted_by.get(id.as_str()) != claim_home
        }) {
            return Ok(GroundingLevel {
                level: GroundingTier::StatementBacked,
                witness: vec![external, claim.clone()],
            });
        }

        if let Some(reference) =
            first_of_kind(&|id| self.kind_of(id) == Some(RepresentationKind::Reference))
        {
            return Ok(GroundingLevel {
                level: GroundingTier::ReferenceBacked,
                witness: vec![reference, claim.clone()],
            });
        }

        let witness = match first_of_kind(&|id| {
            self.kind_of(id) == Some(RepresentationKind::Attribution)
        }) {
            Some(attr) => vec![attr, claim.clone()],
            None => vec![claim.clone()],
        };
        Ok(GroundingLevel { level: GroundingTier::AttributionOnly, witness })
    }

    pub(crate) fn insert_micropublication(
        &mut self,
        mp: Micropublication,
    ) -> Result<(), NetworkError> {
        if self.mps.contains_key(mp.id()) {
            return Err(NetworkError::DuplicateId(mp.id().clone()));
        }
        for rep in mp.asserted() {
            if self.representations.contains_key(&rep.id) {
                return Err(NetworkError::DuplicateId(rep.id.clone()));
            }
        }
        for rep in mp.asserted() {
            self.representations.insert(rep.id.clone(), rep.clone());
            self.asserted_by.insert(rep.id.clone(), mp.id().clone());
        }
        self.edges.extend(mp.edges().cloned());
        self.mps.insert(mp.id().clone(), mp);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::Attribution;

    #[test]
    fn merging_a_singleton_is_the_identity() {
        let corpus = fixtures::corpus_of(&["MP1"]);
        let net = Network::merge(&corpus).unwrap();
        assert_eq!(net.micropublications().count(), 1);
        assert!(net.resolutions().next().is_none());
        assert!(net.warnings().is_empty());
    }

    #[test]
    fn merge_binds_cross_edges_to_their_asserter() {
        let net = Network::merge(&fixtures::claim_network_corpus()).unwrap();
        let cross: Vec<&RelationEdge> =
            net.edges().filter(|e| e.asserted_by == "MP6").collect();
        assert_eq!(cross.len(), 2);
        assert!(cross.iter().all(|e| e.predicate == RelationPredicate::Supports));
    }

    #[test]
    fn conflicting_assertions_are_rejected() {
        let mut corpus = Corpus::new();
        let a = Attribution::new("A_X", "agent", "author");
        let mp1 = corpus.new_micropublication("X1", a.clone()).unwrap();
        mp1.assert_element(Representation::statement("C", "one text")).unwrap();
        mp1.set_claim("C").unwrap();
        let mp2 = corpus
            .new_micropublication("X2", Attribution::new("A_Y", "agent", "author"))
            .unwrap();
        mp2.assert_element(Representation::statement("C", "a different text")).unwrap();
        mp2.set_claim("C").unwrap();
        assert!(matches!(
            Network::merge(&corpus),
            Err(NetworkError::ConflictingRepresentation { .. })
        ));
    }

    #[test]
    fn dangling_quote_warns() {
        let mut corpus = Corpus::new();
        let mp = corpus
            .new_micropublication("X1", Attribution::new("A_X", "agent", "author"))
            .unwrap();
        mp.assert_element(Representation::statement("C", "claim")).unwrap();
        mp.set_claim("C").unwrap();
        mp.quote_element("GHOST", None).unwrap();
        mp.add_edge("GHOST", "C", RelationPredicate::Supports).unwrap();
        let net = Network::merge(&corpus).unwrap();
        assert!(matches!(net.warnings()[0], MergeWarning::DanglingQuote { .. }));
    }

    #[test]
    fn resolve_reference_rejects_non_references() {
        let mut net = Network::merge(&fixtures::corpus_of(&["MP1"])).unwrap();
        let err = net
            .resolve_reference(ResolutionEntry {
                reference: Id::from("C1"),
                document: Id::from("doc:harrison-2009"),
                statement: None,
                resolved_by: None,
            })
            .unwrap_err();
        assert_eq!(err, NetworkError::NotAReference(Id::from("C1")));
    }

    #[test]
    fn resolution_to_document_only_keeps_reference_grounding() {
        let mut net = Network::merge(&fixtures::corpus_of(&["MP1"])).unwrap();
        let before = net.grounding_level(&Id::from("C1")).unwrap();
        net.resolve_reference(ResolutionEntry {
            reference: Id::from("Ref5"),
            document: Id::from("doc:harrison-2009"),
            statement: None,
            resolved_by: None,
        })
        .unwrap();
        let after = net.grounding_level(&Id::from("C1")).unwrap();
        assert_eq!(before.level, GroundingTier::ReferenceBacked);
        assert_eq!(after.level, GroundingTier::ReferenceBacked);
    }

    #[test]
    fn statement_level_resolution_extends_the_lineage() {
        // MP3 cites Ref5 in support of S1; MP4 asserts C1.1. Without MP6's
        // bridging edges the lineage of C3 stops at S1/S2/S3 until the
        // reference is resolved to C1.1.
        let corpus = fixtures::corpus_of(&["MP3", "MP4"]);
        let mut net = Network::merge(&corpus).unwrap();
        let before = net.claim_lineage(&Id::from("C3")).unwrap();
        assert!(!before.nodes.contains(&Id::from("C1.1")));
        net.resolve_reference(ResolutionEntry {
            reference: Id::from("Ref5"),
            document: Id::from("doc:harrison-2009"),
            statement: Some(Id::from("C1.1")),
            resolved_by: Some(Id::from("MP6")),
        })
        .unwrap();
        let after = net.claim_lineage(&Id::from("C3")).unwrap();
        assert!(after.nodes.contains(&Id::from("C1.1")));
        assert!(after.edges.contains(&(Id::from("C1.1"), Id::from("S1"))));
    }

    #[test]
    fn lineage_of_an_isolated_claim_is_itself() {
        let mut corpus = Corpus::new();
        let mp = corpus
            .new_micropublication("X1", Attribution::new("A_X", "agent", "author"))
            .unwrap();
        mp.assert_element(Representation::statement("C", "claim")).unwrap();
        mp.set_claim("C").unwrap();
        let net = Network::merge(&corpus).unwrap();
        let lineage = net.claim_lineage(&Id::from("C")).unwrap();
        assert_eq!(lineage.nodes.len(), 1);
        assert_eq!(lineage.depth, 0);
        assert!(lineage.edges.is_empty());
    }

    #[test]
    fn unknown_claim_is_an_error() {
        let net = Network::merge(&fixtures::corpus_of(&["MP1"])).unwrap();
        assert_eq!(
            net.claim_lineage(&Id::from("NOPE")).unwrap_err(),
            NetworkError::UnknownClaim(Id::from("NOPE"))
        );
        assert_eq!(
            net.grounding_level(&Id::from("NOPE")).unwrap_err(),
            NetworkError::UnknownClaim(Id::from("NOPE"))
        );
    }

    #[test]
    fn attribution_only_claim_grounds_at_zero() {
        let mut corpus = Corpus::new();
        let mp = corpus
            .new_micropublication("X1", Attribution::new("A_X", "agent", "author"))
            .unwrap();
        mp.assert_element(Representation::statement("C", "claim")).unwrap();
        mp.set_claim("C").unwrap();
        mp.attribute(&Id::from("C"), Attribution::new("A_C", "agent", "author")).unwrap();
        mp.add_edge("A_C", "C", RelationPredicate::Supports).unwrap();
        let net = Network::merge(&corpus).unwrap();
        let g = net.grounding_level(&Id::from("C")).unwrap();
        assert_eq!(g.level, GroundingTier::AttributionOnly);
        assert_eq!(g.witness, vec![Id::from("A_C"), Id::from("C")]);
    }

    #[test]
    fn witness_pairs_lie_in_the_closed_relation() {
        let net = Network::merge(&fixtures::claim_network_corpus()).unwrap();
        let closed = net.closed_relation().unwrap();
        for claim in ["C3", "C1.1", "C2.1"] {
            let g = net.grounding_level(&Id::from(claim)).unwrap();
            for pair in g.witness.windows(2) {
                assert!(
                    closed.supports(&pair[0], &pair[1]),
                    "witness hop {:?} not in closure for {claim}",
                    pair
                );
            }
        }
    }
}
