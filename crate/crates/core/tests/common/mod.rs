//! Brute-force oracles and randomized generators shared by the property and
//! acceptance suites. Everything here is independent of the library's own
//! closure/inference/serialization code paths: oracles work from first
//! principles (matrix squaring, exhaustive enumeration), generators use only
//! the public construction API.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use micropub::inference::Challenge;
use micropub::model::{
    Attribution, Corpus, MediaDescriptor, Micropublication, RelationEdge, RelationPredicate,
    Representation, RepresentationKind,
};
use micropub::Id;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Transitive closure of the supports pairs by repeated squaring of the
/// boolean adjacency relation.
pub fn closure_oracle(edges: &[RelationEdge]) -> BTreeSet<(Id, Id)> {
    let mut nodes: BTreeSet<Id> = BTreeSet::new();
    for e in edges {
        if e.predicate == RelationPredicate::Supports {
            nodes.insert(e.from_id.clone());
            nodes.insert(e.to_id.clone());
        }
    }
    let index: BTreeMap<&Id, usize> = nodes.iter().enumerate().map(|(i, n)| (n, i)).collect();
    let ordered: Vec<&Id> = nodes.iter().collect();
    let n = nodes.len();
    let mut matrix = vec![vec![false; n]; n];
    for e in edges {
        if e.predicate == RelationPredicate::Supports {
            matrix[index[&e.from_id]][index[&e.to_id]] = true;
        }
    }
    loop {
        let mut next = matrix.clone();
        for i in 0..n {
            for (k, row) in matrix.iter().enumerate() {
                if matrix[i][k] {
                    for j in 0..n {
                        next[i][j] |= row[j];
                    }
                }
            }
        }
        if next == matrix {
            break;
        }
        matrix = next;
    }
    let mut pairs = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if matrix[i][j] {
                pairs.insert((ordered[i].clone(), ordered[j].clone()));
            }
        }
    }
    pairs
}

/// Undercut inference by exhaustive enumeration: direct challenges plus
/// `(x, z, y)` for every direct challenge `(x, y)` and closed supports pair
/// `(y, z)`.
pub fn undercut_oracle(edges: &[RelationEdge]) -> BTreeSet<Challenge> {
    let closure = closure_oracle(edges);
    let mut result = BTreeSet::new();
    for e in edges {
        if e.predicate != RelationPredicate::DirectlyChallenges {
            continue;
        }
        result.insert(Challenge { from: e.from_id.clone(), to: e.to_id.clone(), via: None });
        for (y, z) in &closure {
            if y == &e.to_id {
                result.insert(Challenge {
                    from: e.from_id.clone(),
                    to: z.clone(),
                    via: Some(e.to_id.clone()),
                });
            }
        }
    }
    result
}

/// A random DAG over at most `max_nodes` nodes: supports edges only go from
/// lower to higher index, plus a few direct challenges in any direction.
pub fn random_dag(rng: &mut StdRng, max_nodes: usize) -> Vec<RelationEdge> {
    let n = rng.random_range(2..=max_nodes);
    let owner = Id::from("T");
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random_bool(0.25) {
                edges.push(RelationEdge {
                    from_id: Id::from(format!("N{i}")),
                    to_id: Id::from(format!("N{j}")),
                    predicate: RelationPredicate::Supports,
                    asserted_by: owner.clone(),
                });
            }
        }
    }
    for _ in 0..rng.random_range(0..4) {
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        if a != b {
            edges.push(RelationEdge {
                from_id: Id::from(format!("N{a}")),
                to_id: Id::from(format!("N{b}")),
                predicate: RelationPredicate::DirectlyChallenges,
                asserted_by: owner.clone(),
            });
        }
    }
    edges
}

/// A random valid micropublication: every added node supports something
/// that already reaches the claim, so the greatest-element condition holds
/// by construction.
pub fn random_valid_mp(rng: &mut StdRng, tag: usize, node_budget: usize) -> Micropublication {
    let mp_id = format!("T{tag}");
    let mut mp = Micropublication::new(
        mp_id.clone(),
        Attribution::new(format!("A_{mp_id}"), format!("agent{}", rng.random_range(0..5)), "author"),
    );
    let claim_id = format!("{mp_id}:C");
    mp.assert_element(Representation::statement(claim_id.clone(), format!("claim of {mp_id}")))
        .unwrap();
    mp.set_claim(claim_id.clone()).unwrap();

    let mut reachable: Vec<String> = vec![claim_id.clone()];
    let extra = rng.random_range(0..node_budget.max(1));
    for i in 0..extra {
        let id = format!("{mp_id}:N{i}");
        let target = reachable[rng.random_range(0..reachable.len())].clone();
        match rng.random_range(0..6) {
            0 => {
                mp.assert_element(Representation::statement(&*id, format!("statement {i}")))
                    .unwrap();
            }
            1 => {
                mp.assert_element(Representation::data(
                    &*id,
                    MediaDescriptor { kind: "image".into(), locator: format!("{id}.png") },
                ))
                .unwrap();
            }
            2 => {
                mp.assert_element(Representation::reference(&*id, format!("citation {i}")))
                    .unwrap();
            }
            3 => {
                mp.assert_element(
                    Representation::new(&*id, RepresentationKind::Method)
                        .with_text(format!("protocol {i}")),
                )
                .unwrap();
            }
            4 => {
                mp.assert_element(Representation::sentence(&*id, format!("aside {i}"))).unwrap();
            }
            _ => {
                // a qualifier annotates the claim instead of supporting it
                mp.assert_element(Representation::semantic_qualifier(&*id, format!("TAG:{i}")))
                    .unwrap();
                mp.add_edge(id.clone(), claim_id.clone(), RelationPredicate::QualifiedBy).unwrap();
                continue;
            }
        }
        mp.add_edge(id.clone(), target, RelationPredicate::Supports).unwrap();
        reachable.push(id.clone());
        // occasionally attribute the node
        if rng.random_bool(0.2) {
            let attr_id = format!("{mp_id}:A{i}");
            mp.attribute(
                &Id::from(id.as_str()),
                Attribution::new(attr_id.clone(), format!("agent{}", rng.random_range(0..5)), "author"),
            )
            .unwrap();
            mp.add_edge(attr_id, id, RelationPredicate::Supports).unwrap();
        }
    }
    if rng.random_bool(0.7) {
        let attr_id = format!("{mp_id}:AC");
        mp.attribute(
            &Id::from(claim_id.as_str()),
            Attribution::new(attr_id.clone(), format!("agent{}", rng.random_range(0..5)), "author"),
        )
        .unwrap();
        mp.add_edge(attr_id, claim_id, RelationPredicate::Supports).unwrap();
    }
    mp
}

/// A random valid corpus of up to roughly `max_nodes` representations, with
/// occasional cross-micropublication quotes and a similarity group marker.
pub fn random_corpus(rng: &mut StdRng, max_nodes: usize) -> Corpus {
    let mut corpus = Corpus::new();
    let mut claims: Vec<String> = Vec::new();
    let mut total = 0usize;
    let mut tag = 0usize;
    while total < max_nodes {
        let budget = (max_nodes - total).min(8);
        let mut mp = random_valid_mp(rng, tag, budget);
        // quote an earlier claim as extra support
        if !claims.is_empty() && rng.random_bool(0.4) {
            let quoted = claims[rng.random_range(0..claims.len())].clone();
            let own_claim = mp.claim().unwrap().clone();
            mp.quote_element(quoted.clone(), None).unwrap();
            mp.add_edge(quoted, own_claim, RelationPredicate::Supports).unwrap();
        }
        total += mp.element_count();
        claims.push(mp.claim().unwrap().to_string());
        corpus.insert(mp).unwrap();
        tag += 1;
    }
    // Occasionally assert a similarity group over the last two claims. The
    // holotype is the later claim, so the member-to-holotype edge points the
    // same way as every cross-quote edge and cannot close a cycle.
    if claims.len() >= 2 && rng.random_bool(0.5) {
        let mut net = micropub::network::Network::merge(&corpus).unwrap();
        let n = claims.len();
        let members: Vec<Id> =
            vec![Id::from(claims[n - 2].as_str()), Id::from(claims[n - 1].as_str())];
        let holotype = members[1].clone();
        if net
            .create_similarity_group(
                "TGROUP",
                members,
                holotype,
                Attribution::new("A_TGROUP", "agent0", "curator"),
            )
            .is_ok()
        {
            let group = net.micropublication("TGROUP").unwrap().clone();
            corpus.insert(group).unwrap();
        }
    }
    corpus
}

/// Exhaustive-path classification for the greatest-element check: a
/// supports participant passes when some supports path from it reaches the
/// claim or escapes into a quoted element.
pub fn reachability_oracle(mp: &Micropublication) -> BTreeSet<Id> {
    let claim = mp.claim().expect("oracle needs a claim");
    let quoted: BTreeSet<&Id> = mp.quoted().map(|(id, _)| id).collect();
    let mut adjacency: BTreeMap<&Id, Vec<&Id>> = BTreeMap::new();
    let mut participants: BTreeSet<&Id> = BTreeSet::new();
    for e in mp.edges() {
        if e.predicate == RelationPredicate::Supports {
            adjacency.entry(&e.from_id).or_default().push(&e.to_id);
            participants.insert(&e.from_id);
            participants.insert(&e.to_id);
        }
    }

    fn paths_reach(
        node: &Id,
        goal: &dyn Fn(&Id) -> bool,
        adjacency: &BTreeMap<&Id, Vec<&Id>>,
        seen: &mut Vec<Id>,
    ) -> bool {
        if goal(node) {
            return true;
        }
        if seen.contains(node) {
            return false;
        }
        seen.push(node.clone());
        let result = adjacency
            .get(node)
            .map(|next| next.iter().any(|n| paths_reach(n, goal, adjacency, seen)))
            .unwrap_or(false);
        seen.pop();
        result
    }

    let mut failing = BTreeSet::new();
    for node in participants {
        let goal = |n: &Id| n == claim || quoted.contains(n);
        let mut seen = Vec::new();
        if !paths_reach(node, &goal, &adjacency, &mut seen) {
            failing.insert(node.clone());
        }
    }
    failing
}

pub fn seeded(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}
