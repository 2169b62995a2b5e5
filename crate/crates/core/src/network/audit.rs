//! Similarity groups, similog queries, and citation-distortion auditing.
//!
//! Statements asserted to share a meaning form a similarity group with one
//! designated exemplar, the holotype. Group membership is itself an
//! assertion, so a group is registered as a micropublication: it quotes the
//! members, argues the holotype, and supports the holotype with every other
//! member.
//!
//! The distortion audit inspects each claim's lineage for the patterns that
//! make citation chains untrustworthy: deep lineages that never reach data,
//! heavy self-citation, and similog pairs where a qualifier was silently
//! dropped.

use std::collections::{BTreeMap, BTreeSet};

use crate::ident::Id;
use crate::model::{
    Attribution, GroupMarker, Micropublication, RelationPredicate, RepresentationKind,
};
use crate::network::{GroundingLevel, GroundingTier, Network, NetworkError};

/// A registered similarity group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimilarityGroup {
    /// The micropublication asserting the group.
    pub group_mp: Id,
    pub holotype_id: Id,
    pub member_ids: BTreeSet<Id>,
    pub attribution: Attribution,
}

/// Audit row for one claim.
#[derive(Debug, Clone, PartialEq)]
pub struct ClaimAudit {
    pub claim: Id,
    pub grounding: GroundingLevel,
    pub lineage_depth: usize,
    /// Fraction of lineage edges whose endpoint attributions share an
    /// agent. Edges with an unattributed endpoint count toward neither side
    /// of the ratio.
    pub self_citation_ratio: f64,
    /// Similog pairs (richer, poorer) where the poorer statement carries
    /// strictly fewer qualifiers.
    pub qualifier_loss: Vec<(Id, Id)>,
    pub flagged: bool,
}

/// Per-claim distortion audit over a merged network.
#[derive(Debug, Clone, PartialEq)]
pub struct DistortionReport {
    pub depth_threshold: usize,
    pub claims: Vec<ClaimAudit>,
}

impl DistortionReport {
    pub fn flagged(&self) -> impl Iterator<Item = &ClaimAudit> {
        self.claims.iter().filter(|c| c.flagged)
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimAudit> {
        self.claims.iter().find(|c| c.claim.as_str() == id)
    }
}

impl Network {
    /// Asserts a similarity group: a new micropublication `group_id` that
    /// quotes every member, claims the holotype, and supports the holotype
    /// with each other member. The group is registered in the network and
    /// returned together with its micropublication.
    pub fn create_similarity_group(
        &mut self,
        group_id: impl Into<Id>,
        member_ids: impl IntoIterator<Item = Id>,
        holotype_id: impl Into<Id>,
        attribution: Attribution,
    ) -> Result<(SimilarityGroup, Micropublication), NetworkError> {
        let group_id = group_id.into();
        let holotype = holotype_id.into();
        let members: BTreeSet<Id> = member_ids.into_iter().collect();

        if members.len() < 2 {
            return Err(NetworkError::GroupTooSmall(members.len()));
        }
        if !members.contains(&holotype) {
            return Err(NetworkError::HolotypeNotMember(holotype));
        }
        for m in &members {
            match self.representation(m.as_str()) {
                None => return Err(NetworkError::UnknownStatement(m.clone())),
                Some(rep) if rep.kind != RepresentationKind::Statement => {
                    return Err(NetworkError::NonStatementMember(m.clone()))
                }
                Some(_) => {}
            }
        }

        let mut mp = Micropublication::new(group_id.clone(), attribution.clone());
        for m in &members {
            let origin = self.asserter_of(m.as_str()).cloned();
            mp.quote_element(m.clone(), origin).expect("fresh quote");
        }
        mp.set_claim(holotype.clone()).expect("holotype is quoted");
        for m in &members {
            if m != &holotype {
                mp.add_edge(m.clone(), holotype.clone(), RelationPredicate::Supports)
                    .expect("members are elements");
            }
        }
        mp.set_group(GroupMarker { holotype_id: holotype.clone(), member_ids: members.clone() });

        debug_assert!(mp.validate().is_valid());
        self.insert_micropublication(mp.clone())?;

        let group = SimilarityGroup {
            group_mp: group_id,
            holotype_id: holotype,
            member_ids: members,
            attribution,
        };
        Ok((group, mp))
    }

    /// All registered similarity groups, derived from group markers.
    pub fn similarity_groups(&self) -> Vec<SimilarityGroup> {
        self.micropublications()
            .filter_map(|mp| {
                mp.group().map(|marker| SimilarityGroup {
                    group_mp: mp.id().clone(),
                    holotype_id: marker.holotype_id.clone(),
                    member_ids: marker.member_ids.clone(),
                    attribution: mp.attribution().clone(),
                })
            })
            .collect()
    }

    /// The union of members over every group containing `statement_id`;
    /// empty when the statement is ungrouped.
    pub fn similogs_of(&self, statement_id: &Id) -> BTreeSet<Id> {
        let mut similogs = BTreeSet::new();
        for group in self.similarity_groups() {
            if group.member_ids.contains(statement_id) {
                similogs.extend(group.member_ids);
            }
        }
        similogs
    }

    /// Agents attributed to `statement` through attribution elements that
    /// support it.
    fn statement_agents(&self, statement: &Id) -> BTreeSet<Id> {
        let mut agents = BTreeSet::new();
        for e in self.edges() {
            if e.predicate != RelationPredicate::Supports || &e.to_id != statement {
                continue;
            }
            if let Some(rep) = self.representation(e.from_id.as_str()) {
                if rep.kind == RepresentationKind::Attribution {
                    if let Some(record) = &rep.attribution {
                        agents.insert(record.agent_id.clone());
                    }
                }
            }
        }
        agents
    }

    /// Number of qualifiedBy edges targeting `statement`.
    fn qualifier_count(&self, statement: &Id) -> usize {
        self.edges()
            .filter(|e| e.predicate == RelationPredicate::QualifiedBy && &e.to_id == statement)
            .count()
    }

    /// Audits every claim in the network. A claim is flagged when its
    /// lineage is at least `depth_threshold` deep without reaching data, or
    /// when a qualifier was lost between similogs.
    pub fn distortion_report(
        &self,
        depth_threshold: usize,
    ) -> Result<DistortionReport, NetworkError> {
        // Qualifier-loss pairs are structural: for every similog pair, the
        // member with strictly fewer qualifiers is the suspect copy.
        let mut loss_pairs: BTreeSet<(Id, Id)> = BTreeSet::new();
        for group in self.similarity_groups() {
            for richer in &group.member_ids {
                for poorer in &group.member_ids {
                    if richer != poorer
                        && self.qualifier_count(poorer) < self.qualifier_count(richer)
                    {
                        loss_pairs.insert((richer.clone(), poorer.clone()));
                    }
                }
            }
        }

        let mut rows = Vec::new();
        for claim in self.claim_ids() {
            let grounding = self.grounding_level(claim)?;
            let lineage = self.claim_lineage(claim)?;

            let mut agent_cache: BTreeMap<&Id, BTreeSet<Id>> = BTreeMap::new();
            let mut shared = 0usize;
            let mut comparable = 0usize;
            for (from, to) in &lineage.edges {
                let from_agents =
                    agent_cache.entry(from).or_insert_with(|| self.statement_agents(from)).clone();
                let to_agents =
                    agent_cache.entry(to).or_insert_with(|| self.statement_agents(to));
                if from_agents.is_empty() || to_agents.is_empty() {
                    continue;
                }
                comparable += 1;
                if from_agents.intersection(to_agents).next().is_some() {
                    shared += 1;
                }
            }
            let self_citation_ratio =
                if comparable == 0 { 0.0 } else { shared as f64 / comparable as f64 };

            let qualifier_loss: Vec<(Id, Id)> = loss_pairs
                .iter()
                .filter(|(richer, poorer)| richer == claim || poorer == claim)
                .cloned()
                .collect();

            let flagged = (lineage.depth >= depth_threshold
                && grounding.level.rank() < GroundingTier::DataBacked.rank())
                || !qualifier_loss.is_empty();

            rows.push(ClaimAudit {
                claim: claim.clone(),
                grounding,
                lineage_depth: lineage.depth,
                self_citation_ratio,
                qualifier_loss,
                flagged,
            });
        }
        Ok(DistortionReport { depth_threshold, claims: rows })
    }
}
