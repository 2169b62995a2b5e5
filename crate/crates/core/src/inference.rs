//! Transitive supports closure, challenge inference by undercutting, and the
//! support/challenge graph views instantiated by query.
//!
//! Supports is a transitive relation, so the closure of the base edges is
//! computed first; a representation then challenges everything supported by
//! whatever it directly challenges (undercutting). Challenges themselves are
//! not transitive and do not propagate through other challenges.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::ident::Id;
use crate::model::{Micropublication, RelationEdge, RelationPredicate};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InferenceError {
    #[error("supports relation contains a cycle through {0}")]
    CycleDetected(Id),
}

/// An inferred challenge: `from` challenges `to`, either directly
/// (`via = None`) or by undercutting the supporting representation `via`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Challenge {
    pub from: Id,
    pub to: Id,
    pub via: Option<Id>,
}

/// The closure of a set of relation edges: base edges, transitively closed
/// supports pairs, and undercut-inferred challenges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedRelation {
    base_edges: Vec<RelationEdge>,
    closed_supports: BTreeSet<(Id, Id)>,
    inferred_challenges: BTreeSet<Challenge>,
}

impl ClosedRelation {
    /// Closes `edges`, treating `extra_supports` as additional supports
    /// pairs (used for pairs derived from reference resolution, which are
    /// not asserted edges).
    pub fn build(
        edges: &[RelationEdge],
        extra_supports: &[(Id, Id)],
    ) -> Result<ClosedRelation, InferenceError> {
        let mut pairs: BTreeSet<(Id, Id)> = supports_pairs(edges);
        pairs.extend(extra_supports.iter().cloned());
        let closed_supports = close_pairs(&pairs)?;
        let inferred_challenges = undercut(edges, &closed_supports);
        Ok(ClosedRelation {
            base_edges: edges.to_vec(),
            closed_supports,
            inferred_challenges,
        })
    }

    pub fn from_edges(edges: &[RelationEdge]) -> Result<ClosedRelation, InferenceError> {
        ClosedRelation::build(edges, &[])
    }

    pub fn base_edges(&self) -> &[RelationEdge] {
        &self.base_edges
    }

    pub fn closed_supports(&self) -> &BTreeSet<(Id, Id)> {
        &self.closed_supports
    }

    pub fn inferred_challenges(&self) -> &BTreeSet<Challenge> {
        &self.inferred_challenges
    }

    pub fn supports(&self, from: &Id, to: &Id) -> bool {
        self.closed_supports.contains(&(from.clone(), to.clone()))
    }
}

/// The smallest transitively closed superset of the supports pairs in
/// `edges`. Fails when the supports subgraph is cyclic; the result is
/// irreflexive by construction.
pub fn supports_closure(edges: &[RelationEdge]) -> Result<BTreeSet<(Id, Id)>, InferenceError> {
    close_pairs(&supports_pairs(edges))
}

/// Direct challenges plus one undercut step: `(x, z, via = y)` whenever
/// `x directlyChallenges y` and `y` transitively supports `z`.
///
/// Reachability rather than the strict closure is used for the undercut
/// step, so a degenerate cyclic supports relation still yields a result
/// (validation reports the cycle upstream).
pub fn challenges_inferred(edges: &[RelationEdge]) -> BTreeSet<Challenge> {
    let reach = reachability(&supports_pairs(edges));
    undercut_with(edges, |y, z| reach.get(y).is_some_and(|set| set.contains(z)))
}

/// All elements of `mp` that transitively support its claim, plus the
/// attributions of those elements. The claim is excluded from its own
/// support graph.
pub fn support_graph(mp: &Micropublication, closed: &ClosedRelation) -> BTreeSet<Id> {
    let Some(claim) = mp.claim() else {
        return BTreeSet::new();
    };
    let mut graph: BTreeSet<Id> = BTreeSet::new();
    for id in mp.element_ids() {
        if id != claim && closed.supports(id, claim) {
            graph.insert(id.clone());
        }
    }
    // Attributions attached to support-graph members are themselves part of
    // the warrant, whether or not an explicit supports edge was drawn.
    let attributed: Vec<Id> = mp
        .attribution_targets()
        .filter(|(_, target)| graph.contains(*target) || *target == claim)
        .map(|(attr, _)| attr.clone())
        .collect();
    graph.extend(attributed.into_iter().filter(|a| a != claim));
    graph
}

/// Every representation whose direct or undercut-inferred challenges target
/// the claim of `mp` or a member of its support graph.
///
/// With a closure built from a merged network this includes challengers
/// asserted by other micropublications; with a single micropublication's
/// closure only its own elements can appear.
pub fn challenge_graph(mp: &Micropublication, closed: &ClosedRelation) -> BTreeSet<Id> {
    let Some(claim) = mp.claim() else {
        return BTreeSet::new();
    };
    let support = support_graph(mp, closed);
    closed
        .inferred_challenges()
        .iter()
        .filter(|c| &c.to == claim || support.contains(&c.to))
        .map(|c| c.from.clone())
        .collect()
}

fn supports_pairs(edges: &[RelationEdge]) -> BTreeSet<(Id, Id)> {
    edges
        .iter()
        .filter(|e| e.predicate == RelationPredicate::Supports)
        .map(|e| (e.from_id.clone(), e.to_id.clone()))
        .collect()
}

/// Forward reachability sets (excluding the node itself unless it lies on a
/// cycle).
fn reachability(pairs: &BTreeSet<(Id, Id)>) -> BTreeMap<Id, BTreeSet<Id>> {
    let mut adjacency: BTreeMap<&Id, Vec<&Id>> = BTreeMap::new();
    for (from, to) in pairs {
        adjacency.entry(from).or_default().push(to);
    }
    let mut result: BTreeMap<Id, BTreeSet<Id>> = BTreeMap::new();
    for start in adjacency.keys() {
        let mut seen: BTreeSet<&Id> = BTreeSet::new();
        let mut stack: Vec<&Id> = adjacency.get(*start).cloned().unwrap_or_default();
        while let Some(n) = stack.pop() {
            if seen.insert(n) {
                if let Some(next) = adjacency.get(n) {
                    stack.extend(next.iter().copied());
                }
            }
        }
        result.insert((*start).clone(), seen.into_iter().cloned().collect());
    }
    result
}

fn close_pairs(pairs: &BTreeSet<(Id, Id)>) -> Result<BTreeSet<(Id, Id)>, InferenceError> {
    let reach = reachability(pairs);
    let mut closed = BTreeSet::new();
    for (from, set) in &reach {
        if set.contains(from) {
            return Err(InferenceError::CycleDetected(from.clone()));
        }
        for to in set {
            closed.insert((from.clone(), to.clone()));
        }
    }
    Ok(closed)
}

fn undercut(edges: &[RelationEdge], closed_supports: &BTreeSet<(Id, Id)>) -> BTreeSet<Challenge> {
    undercut_with(edges, |y, z| closed_supports.contains(&(y.clone(), z.clone())))
}

fn undercut_with(
    edges: &[RelationEdge],
    supports: impl Fn(&Id, &Id) -> bool,
) -> BTreeSet<Challenge> {
    let mut supported_targets: BTreeSet<&Id> = BTreeSet::new();
    for e in edges {
        if e.predicate == RelationPredicate::Supports {
            supported_targets.insert(&e.to_id);
        }
    }
    let mut result = BTreeSet::new();
    for e in edges {
        if e.predicate != RelationPredicate::DirectlyChallenges {
            continue;
        }
        result.insert(Challenge { from: e.from_id.clone(), to: e.to_id.clone(), via: None });
        for target in &supported_targets {
            if supports(&e.to_id, target) {
                result.insert(Challenge {
                    from: e.from_id.clone(),
                    to: (*target).clone(),
                    via: Some(e.to_id.clone()),
                });
            }
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge(from: &str, to: &str, predicate: RelationPredicate) -> RelationEdge {
        RelationEdge {
            from_id: Id::from(from),
            to_id: Id::from(to),
            predicate,
            asserted_by: Id::from("MP"),
        }
    }

    fn supports(from: &str, to: &str) -> RelationEdge {
        edge(from, to, RelationPredicate::Supports)
    }

    fn pair(a: &str, b: &str) -> (Id, Id) {
        (Id::from(a), Id::from(b))
    }

    #[test]
    fn closure_adds_transitive_pairs() {
        let edges = vec![
            supports("A_C3", "C3"),
            supports("D1", "C3"),
            supports("M1", "D1"),
            supports("M2", "D1"),
        ];
        let closed = supports_closure(&edges).unwrap();
        let expected: BTreeSet<(Id, Id)> = [
            pair("A_C3", "C3"),
            pair("D1", "C3"),
            pair("M1", "D1"),
            pair("M2", "D1"),
            pair("M1", "C3"),
            pair("M2", "C3"),
        ]
        .into_iter()
        .collect();
        assert_eq!(closed, expected);
    }

    #[test]
    fn empty_edges_close_to_empty() {
        assert!(supports_closure(&[]).unwrap().is_empty());
    }

    #[test]
    fn cycle_is_detected() {
        let edges = vec![supports("a", "b"), supports("b", "a")];
        assert!(matches!(supports_closure(&edges), Err(InferenceError::CycleDetected(_))));
    }

    #[test]
    fn closure_is_idempotent() {
        let edges = vec![supports("x", "y"), supports("y", "z"), supports("w", "y")];
        let first = supports_closure(&edges).unwrap();
        let as_edges: Vec<RelationEdge> = first
            .iter()
            .map(|(f, t)| supports(f.as_str(), t.as_str()))
            .collect();
        assert_eq!(supports_closure(&as_edges).unwrap(), first);
    }

    #[test]
    fn undercut_follows_supports_closure() {
        // direct(X,Y), supports(Y,Z), supports(Z,W) => challenges(X,W) via Y
        let edges = vec![
            edge("X", "Y", RelationPredicate::DirectlyChallenges),
            supports("Y", "Z"),
            supports("Z", "W"),
        ];
        let inferred = challenges_inferred(&edges);
        assert!(inferred.contains(&Challenge {
            from: Id::from("X"),
            to: Id::from("Y"),
            via: None
        }));
        assert!(inferred.contains(&Challenge {
            from: Id::from("X"),
            to: Id::from("Z"),
            via: Some(Id::from("Y"))
        }));
        assert!(inferred.contains(&Challenge {
            from: Id::from("X"),
            to: Id::from("W"),
            via: Some(Id::from("Y"))
        }));
        assert_eq!(inferred.len(), 3);
    }

    #[test]
    fn challenge_of_a_supporter_undercuts_the_supported_claim() {
        let edges = vec![
            edge("C11", "S3", RelationPredicate::DirectlyChallenges),
            supports("S3", "C3"),
        ];
        let inferred = challenges_inferred(&edges);
        assert!(inferred.contains(&Challenge {
            from: Id::from("C11"),
            to: Id::from("C3"),
            via: Some(Id::from("S3"))
        }));
    }

    #[test]
    fn challenging_an_attribution_undercuts_what_it_supports() {
        // no special case: the generic undercut rule covers attributions
        let edges = vec![
            edge("X", "A_C1", RelationPredicate::DirectlyChallenges),
            supports("A_C1", "C1"),
        ];
        let inferred = challenges_inferred(&edges);
        assert!(inferred.contains(&Challenge {
            from: Id::from("X"),
            to: Id::from("C1"),
            via: Some(Id::from("A_C1"))
        }));
    }

    #[test]
    fn no_direct_challenges_means_no_inferred_challenges() {
        let edges = vec![supports("a", "b"), supports("b", "c")];
        assert!(challenges_inferred(&edges).is_empty());
    }

    #[test]
    fn claim_without_incoming_supports_has_an_empty_support_graph() {
        use crate::model::{Attribution, Micropublication, Representation};
        let mut mp = Micropublication::new("MP", Attribution::new("A_MP", "agent", "author"));
        mp.assert_element(Representation::statement("C", "claim")).unwrap();
        mp.set_claim("C").unwrap();
        let edges: Vec<RelationEdge> = mp.edges().cloned().collect();
        let closed = ClosedRelation::from_edges(&edges).unwrap();
        assert!(support_graph(&mp, &closed).is_empty());
        assert!(challenge_graph(&mp, &closed).is_empty());
    }

    #[test]
    fn qualifier_edges_stay_out_of_the_closure() {
        let edges = vec![supports("Ref5", "C1"), edge("Q1", "C1", RelationPredicate::QualifiedBy)];
        let closed = supports_closure(&edges).unwrap();
        assert!(closed.contains(&pair("Ref5", "C1")));
        assert!(!closed.contains(&pair("Q1", "C1")));
    }
}
