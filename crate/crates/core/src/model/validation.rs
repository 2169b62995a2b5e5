//! Per-micropublication validation.
//!
//! A micropublication is valid when its supports relation, restricted to its
//! own elements, is a strict partial order whose greatest element is the
//! claim. Quoted elements are boundary nodes: their onward support structure
//! lives in the micropublication that asserted them, so reachability through
//! a quoted element is deferred to merge time rather than reported as an
//! error here.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::ident::Id;
use crate::model::{Micropublication, RelationPredicate, RepresentationKind};

/// Machine-readable finding codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ValidationCode {
    MissingClaim,
    ClaimNotStatement,
    EndpointNotElement,
    SupportCycle,
    UnreachableSupport,
    AssertQuoteOverlap,
    OrphanElement,
    MissingAttributionSupport,
}

impl ValidationCode {
    pub fn name(self) -> &'static str {
        match self {
            ValidationCode::MissingClaim => "MissingClaim",
            ValidationCode::ClaimNotStatement => "ClaimNotStatement",
            ValidationCode::EndpointNotElement => "EndpointNotElement",
            ValidationCode::SupportCycle => "SupportCycle",
            ValidationCode::UnreachableSupport => "UnreachableSupport",
            ValidationCode::AssertQuoteOverlap => "AssertQuoteOverlap",
            ValidationCode::OrphanElement => "OrphanElement",
            ValidationCode::MissingAttributionSupport => "MissingAttributionSupport",
        }
    }
}

/// One error or warning with the ids it concerns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub code: ValidationCode,
    pub message: String,
    pub subjects: Vec<Id>,
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code.name(), self.message)?;
        if !self.subjects.is_empty() {
            let ids: Vec<&str> = self.subjects.iter().map(|s| s.as_str()).collect();
            write!(f, " [{}]", ids.join(", "))?;
        }
        Ok(())
    }
}

/// Outcome of validating one micropublication. Empty `errors` means valid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub errors: Vec<Finding>,
    pub warnings: Vec<Finding>,
    /// True when the claim is supported by an attribution edge, the
    /// simplest shape a micropublication can take.
    pub minimal_form: bool,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.errors.is_empty()
    }
}

impl Micropublication {
    /// Runs every structural check and collects the findings. Pure: the
    /// report depends only on the micropublication's current value.
    pub fn validate(&self) -> ValidationReport {
        let mut errors = Vec::new();
        let mut warnings = Vec::new();

        let quoted: BTreeSet<&Id> = self.quoted().map(|(id, _)| id).collect();
        let asserted: BTreeSet<&Id> = self.asserted_ids().collect();

        // V5: an id may not be both asserted and quoted. Construction
        // forbids it; re-check in case a value was built by deserialization.
        for id in asserted.intersection(&quoted) {
            errors.push(Finding {
                code: ValidationCode::AssertQuoteOverlap,
                message: "element both asserted and quoted".into(),
                subjects: vec![(*id).clone()],
            });
        }

        // V1: exactly one claim, of Statement kind when asserted here.
        let claim = match self.claim() {
            None => {
                errors.push(Finding {
                    code: ValidationCode::MissingClaim,
                    message: "micropublication argues no claim".into(),
                    subjects: vec![self.id().clone()],
                });
                None
            }
            Some(cid) => {
                if let Some(rep) = self.representation(cid) {
                    if rep.kind != RepresentationKind::Statement {
                        errors.push(Finding {
                            code: ValidationCode::ClaimNotStatement,
                            message: format!("claim has kind {}", rep.kind.name()),
                            subjects: vec![cid.clone()],
                        });
                    }
                } else if !quoted.contains(cid) {
                    errors.push(Finding {
                        code: ValidationCode::MissingClaim,
                        message: "claim is not an element".into(),
                        subjects: vec![cid.clone()],
                    });
                }
                Some(cid)
            }
        };

        // V2: every edge endpoint is an element.
        for e in self.edges() {
            for end in [&e.from_id, &e.to_id] {
                if !self.is_element(end) {
                    errors.push(Finding {
                        code: ValidationCode::EndpointNotElement,
                        message: "edge endpoint is not an element".into(),
                        subjects: vec![end.clone()],
                    });
                }
            }
        }

        // V3: supports edges are acyclic.
        let adjacency = self.supports_adjacency();
        if let Some(cycle) = find_cycle(&adjacency) {
            errors.push(Finding {
                code: ValidationCode::SupportCycle,
                message: "supports edges form a cycle".into(),
                subjects: cycle,
            });
        } else if let Some(claim) = claim {
            // V4 (greatest-element condition): every asserted node incident
            // to a supports edge must reach the claim along supports paths.
            // A path ending at a quoted element defers the rest of the
            // proof to merge time.
            let mut incident: BTreeSet<&Id> = BTreeSet::new();
            for e in self.edges() {
                if e.predicate == RelationPredicate::Supports {
                    incident.insert(&e.from_id);
                    incident.insert(&e.to_id);
                }
            }
            for node in incident {
                if quoted.contains(node) || node == claim {
                    continue;
                }
                let reach = reachable_from(node, &adjacency);
                let ok = reach.contains(claim) || reach.iter().any(|r| quoted.contains(r));
                if !ok {
                    errors.push(Finding {
                        code: ValidationCode::UnreachableSupport,
                        message: "support participant has no supports path to the claim".into(),
                        subjects: vec![node.clone()],
                    });
                }
            }
        }

        // V6: minimal form = the claim is supported by an attribution edge.
        let minimal_form = match claim {
            Some(claim) => self.edges().any(|e| {
                e.predicate == RelationPredicate::Supports
                    && &e.to_id == claim
                    && self
                        .representation(&e.from_id)
                        .is_some_and(|r| r.kind == RepresentationKind::Attribution)
            }),
            None => false,
        };
        if let Some(claim) = claim {
            if !minimal_form {
                warnings.push(Finding {
                    code: ValidationCode::MissingAttributionSupport,
                    message: "claim has no supporting attribution edge".into(),
                    subjects: vec![claim.clone()],
                });
            }
        }

        // V7: elements that neither participate in an edge nor serve as the
        // claim are flagged, not rejected.
        let mut participating: BTreeSet<&Id> = BTreeSet::new();
        for e in self.edges() {
            participating.insert(&e.from_id);
            participating.insert(&e.to_id);
        }
        if let Some(claim) = claim {
            participating.insert(claim);
        }
        for id in self.element_ids() {
            if !participating.contains(id) {
                warnings.push(Finding {
                    code: ValidationCode::OrphanElement,
                    message: "element participates in no edge".into(),
                    subjects: vec![id.clone()],
                });
            }
        }

        ValidationReport { errors, warnings, minimal_form }
    }
}

/// All nodes reachable from `start` (inclusive) over `adjacency`.
fn reachable_from<'a>(start: &'a Id, adjacency: &BTreeMap<&'a Id, Vec<&'a Id>>) -> BTreeSet<&'a Id> {
    let mut seen: BTreeSet<&Id> = BTreeSet::new();
    let mut stack = vec![start];
    while let Some(n) = stack.pop() {
        if seen.insert(n) {
            if let Some(next) = adjacency.get(n) {
                stack.extend(next.iter().copied());
            }
        }
    }
    seen
}

/// Returns the nodes of some cycle, or None when acyclic.
fn find_cycle(adjacency: &BTreeMap<&Id, Vec<&Id>>) -> Option<Vec<Id>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        Open,
        Done,
    }
    let mut marks: BTreeMap<&Id, Mark> = BTreeMap::new();

    fn visit<'a>(
        node: &'a Id,
        adjacency: &BTreeMap<&'a Id, Vec<&'a Id>>,
        marks: &mut BTreeMap<&'a Id, Mark>,
        path: &mut Vec<&'a Id>,
    ) -> Option<Vec<Id>> {
        match marks.get(node) {
            Some(Mark::Done) => return None,
            Some(Mark::Open) => {
                let from = path.iter().position(|n| *n == node).unwrap_or(0);
                return Some(path[from..].iter().map(|n| (*n).clone()).collect());
            }
            None => {}
        }
        marks.insert(node, Mark::Open);
        path.push(node);
        if let Some(next) = adjacency.get(node) {
            for n in next {
                if let Some(cycle) = visit(n, adjacency, marks, path) {
                    return Some(cycle);
                }
            }
        }
        path.pop();
        marks.insert(node, Mark::Done);
        None
    }

    let nodes: Vec<&Id> = adjacency.keys().copied().collect();
    for node in nodes {
        let mut path = Vec::new();
        if let Some(cycle) = visit(node, adjacency, &mut marks, &mut path) {
            return Some(cycle);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Attribution, Representation};

    fn mp_with_claim() -> Micropublication {
        let mut mp = Micropublication::new("MP", Attribution::new("A_MP", "agent", "author"));
        mp.assert_element(Representation::statement("C", "the claim")).unwrap();
        mp.set_claim("C").unwrap();
        mp
    }

    #[test]
    fn missing_claim_is_an_error() {
        let mp = Micropublication::new("MP", Attribution::new("A_MP", "agent", "author"));
        let report = mp.validate();
        assert_eq!(report.errors.len(), 1);
        assert_eq!(report.errors[0].code, ValidationCode::MissingClaim);
        assert!(!report.minimal_form);
    }

    #[test]
    fn claim_with_no_edges_warns_and_is_not_minimal() {
        let report = mp_with_claim().validate();
        assert!(report.is_valid());
        assert!(!report.minimal_form);
        assert!(report
            .warnings
            .iter()
            .any(|w| w.code == ValidationCode::MissingAttributionSupport));
    }

    #[test]
    fn attribution_support_makes_minimal_form() {
        let mut mp = mp_with_claim();
        mp.attribute(&Id::from("C"), Attribution::new("A_C", "agent", "author")).unwrap();
        mp.add_edge("A_C", "C", RelationPredicate::Supports).unwrap();
        let report = mp.validate();
        assert!(report.is_valid());
        assert!(report.minimal_form);
    }

    #[test]
    fn support_cycle_is_an_error() {
        let mut mp = mp_with_claim();
        mp.assert_element(Representation::statement("a", "a")).unwrap();
        mp.assert_element(Representation::statement("b", "b")).unwrap();
        mp.add_edge("a", "b", RelationPredicate::Supports).unwrap();
        mp.add_edge("b", "a", RelationPredicate::Supports).unwrap();
        let report = mp.validate();
        assert!(report.errors.iter().any(|e| e.code == ValidationCode::SupportCycle));
    }

    #[test]
    fn support_participant_must_reach_claim() {
        let mut mp = mp_with_claim();
        mp.assert_element(Representation::statement("e", "e")).unwrap();
        mp.assert_element(Representation::statement("f", "f")).unwrap();
        mp.add_edge("e", "f", RelationPredicate::Supports).unwrap();
        let report = mp.validate();
        let unreachable: Vec<_> = report
            .errors
            .iter()
            .filter(|e| e.code == ValidationCode::UnreachableSupport)
            .collect();
        assert_eq!(unreachable.len(), 2, "both e and f fail the greatest-element check");
    }

    #[test]
    fn reachability_through_quoted_elements_is_deferred() {
        // Quotes a claim plus statements whose connection to it lives in the
        // origin micropublication; asserts only the bridging edge.
        let mut mp = Micropublication::new("MP6", Attribution::new("A_MP6", "agent", "curator"));
        mp.quote_element("C3", Some(Id::from("MP3"))).unwrap();
        mp.quote_element("S1", Some(Id::from("MP3"))).unwrap();
        mp.quote_element("C1.1", Some(Id::from("MP4"))).unwrap();
        mp.set_claim("C3").unwrap();
        mp.add_edge("C1.1", "S1", RelationPredicate::Supports).unwrap();
        let report = mp.validate();
        assert!(report.is_valid(), "unexpected errors: {:?}", report.errors);
    }

    #[test]
    fn challenge_only_nodes_are_exempt_from_reachability() {
        let mut mp = mp_with_claim();
        mp.attribute(&Id::from("C"), Attribution::new("A_C", "agent", "author")).unwrap();
        mp.add_edge("A_C", "C", RelationPredicate::Supports).unwrap();
        mp.quote_element("S3", Some(Id::from("MP3"))).unwrap();
        mp.add_edge("C", "S3", RelationPredicate::DirectlyChallenges).unwrap();
        let report = mp.validate();
        assert!(report.is_valid(), "unexpected errors: {:?}", report.errors);
    }

    #[test]
    fn orphan_elements_warn() {
        let mut mp = mp_with_claim();
        mp.assert_element(Representation::reference("Ref9", "dangling citation")).unwrap();
        let report = mp.validate();
        assert!(report.is_valid());
        assert!(report
            .warnings
            .iter()
            .any(|w| w.code == ValidationCode::OrphanElement && w.subjects == vec![Id::from("Ref9")]));
    }

    #[test]
    fn validate_is_pure() {
        let mut mp = mp_with_claim();
        mp.assert_element(Representation::reference("Ref5", "Harrison 2009")).unwrap();
        mp.add_edge("Ref5", "C", RelationPredicate::Supports).unwrap();
        assert_eq!(mp.validate(), mp.validate());
    }
}
