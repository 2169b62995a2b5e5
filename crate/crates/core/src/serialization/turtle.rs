//! Turtle emission over the micropublication vocabulary.
//!
//! One subject block per micropublication and per representation, sorted by
//! id, with a fixed predicate order inside each block, so emission is
//! deterministic. Support graphs are materialized from the inference module.
//! Edge provenance (`asserted_by`) is not representable in plain triples and
//! is carried by MPJSON instead.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::anchoring::Selector;
use crate::ident::Id;
use crate::model::RelationPredicate;
use crate::network::Network;
use crate::serialization::{SerializationError, VocabularyMap};

/// Emits the merged network as Turtle. Every term goes through `vocab`;
/// terms missing from the table abort the emission.
pub fn emit_turtle(net: &Network, vocab: &VocabularyMap) -> Result<String, SerializationError> {
    let mut out = String::new();
    let _ = writeln!(out, "@prefix mp: <{}> .", vocab.namespace());
    let _ = writeln!(out, "@prefix oa: <{}> .", super::vocab::OA_NAMESPACE);

    if net.micropublications().next().is_none() {
        return Ok(out);
    }

    let closed = net
        .closed_relation()
        .map_err(|e| SerializationError::Schema(format!("network closure failed: {e}")))?;

    // Deduplicated edge pairs grouped by predicate and source.
    let mut supports_of: BTreeMap<&Id, BTreeSet<&Id>> = BTreeMap::new();
    let mut challenges_of: BTreeMap<&Id, BTreeSet<&Id>> = BTreeMap::new();
    let mut qualifiers_of: BTreeMap<&Id, BTreeSet<&Id>> = BTreeMap::new();
    for e in net.edges() {
        match e.predicate {
            RelationPredicate::Supports => {
                supports_of.entry(&e.from_id).or_default().insert(&e.to_id);
            }
            RelationPredicate::DirectlyChallenges => {
                challenges_of.entry(&e.from_id).or_default().insert(&e.to_id);
            }
            // rendered from the statement side: statement qualifiedBy qualifier
            RelationPredicate::QualifiedBy => {
                qualifiers_of.entry(&e.to_id).or_default().insert(&e.from_id);
            }
        }
    }

    let claims: BTreeSet<&Id> = net.claim_ids();

    for mp in net.micropublications() {
        let subject = vocab.instance_iri(mp.id().as_str());
        let mut block = Block::new(&subject);
        block.push(
            "a".into(),
            vec![vocab.mp_term("Micropublication")?],
        );
        if let Some(claim) = mp.claim() {
            block.push(vocab.mp_term("arguedBy")?, vec![iri(vocab, claim)]);
        }
        let asserted: Vec<String> = mp.asserted_ids().map(|id| iri(vocab, id)).collect();
        if !asserted.is_empty() {
            block.push(vocab.mp_term("asserts")?, asserted);
        }
        let quoted: Vec<String> = mp.quoted().map(|(id, _)| iri(vocab, id)).collect();
        if !quoted.is_empty() {
            block.push(vocab.mp_term("quotes")?, quoted);
        }
        block.push(
            vocab.mp_term("hasAttribution")?,
            vec![iri(vocab, &mp.attribution().id)],
        );
        let support = crate::inference::support_graph(mp, &closed);
        if !support.is_empty() {
            block.push(
                vocab.mp_term("hasSupportGraphElement")?,
                support.iter().map(|id| iri(vocab, id)).collect(),
            );
        }
        let challenge = crate::inference::challenge_graph(mp, &closed);
        if !challenge.is_empty() {
            block.push(
                vocab.mp_term("hasChallengeGraphElement")?,
                challenge.iter().map(|id| iri(vocab, id)).collect(),
            );
        }
        block.write(&mut out);

        // The attribution of the formalization itself.
        write_attribution_record(
            &mut out,
            vocab,
            &mp.attribution().id,
            &mp.attribution().agent_id,
            &mp.attribution().role,
            mp.attribution().date.as_deref(),
        )?;
    }

    for rep in net.representations() {
        let subject = vocab.instance_iri(rep.id.as_str());
        let mut block = Block::new(&subject);
        let mut types = vec![vocab.mp_term(rep.kind.name())?];
        if claims.contains(&rep.id) {
            types.push(vocab.mp_term("Claim")?);
        }
        block.push("a".into(), types);
        if let Some(text) = &rep.text {
            block.push(vocab.mp_term("text")?, vec![literal(text)]);
        }
        if let Some(record) = &rep.attribution {
            block.push(vocab.mp_term("attributionOfAgent")?, vec![iri(vocab, &record.agent_id)]);
            if !record.role.is_empty() {
                block.push(vocab.mp_term("role")?, vec![literal(&record.role)]);
            }
            if let Some(date) = &record.date {
                block.push(vocab.mp_term("date")?, vec![literal(date)]);
            }
        }
        if let Some(targets) = supports_of.get(&rep.id) {
            block.push(
                vocab.mp_term("supports")?,
                targets.iter().map(|id| iri(vocab, id)).collect(),
            );
        }
        if let Some(targets) = challenges_of.get(&rep.id) {
            block.push(
                vocab.mp_term("directlyChallenges")?,
                targets.iter().map(|id| iri(vocab, id)).collect(),
            );
        }
        if let Some(qualifiers) = qualifiers_of.get(&rep.id) {
            block.push(
                vocab.mp_term("qualifiedBy")?,
                qualifiers.iter().map(|id| iri(vocab, id)).collect(),
            );
        }
        if let Some(source) = &rep.source {
            let mut target = format!(
                "[ {} {} ",
                vocab.oa_term("hasSource")?,
                iri(vocab, &source.document_id)
            );
            let mut selectors = Vec::new();
            for sel in &source.selectors {
                selectors.push(selector_node(vocab, sel)?);
            }
            let _ = write!(
                target,
                "; {} {} ]",
                vocab.oa_term("hasSelector")?,
                selectors.join(", ")
            );
            block.push(vocab.oa_term("hasTarget")?, vec![target]);
        }
        block.write(&mut out);
    }

    Ok(out)
}

fn selector_node(vocab: &VocabularyMap, sel: &Selector) -> Result<String, SerializationError> {
    Ok(match sel {
        Selector::TextQuote { exact, prefix, suffix } => {
            let mut node =
                format!("[ a {} ; {} {}", vocab.oa_term("TextQuoteSelector")?, vocab.oa_term("exact")?, literal(exact));
            if let Some(prefix) = prefix {
                let _ = write!(node, " ; {} {}", vocab.oa_term("prefix")?, literal(prefix));
            }
            if let Some(suffix) = suffix {
                let _ = write!(node, " ; {} {}", vocab.oa_term("suffix")?, literal(suffix));
            }
            node.push_str(" ]");
            node
        }
        Selector::TextPosition { start, end } => format!(
            "[ a {} ; {} {start} ; {} {end} ]",
            vocab.oa_term("TextPositionSelector")?,
            vocab.oa_term("start")?,
            vocab.oa_term("end")?
        ),
    })
}

fn write_attribution_record(
    out: &mut String,
    vocab: &VocabularyMap,
    id: &Id,
    agent: &Id,
    role: &str,
    date: Option<&str>,
) -> Result<(), SerializationError> {
    let subject = vocab.instance_iri(id.as_str());
    let mut block = Block::new(&subject);
    block.push("a".into(), vec![vocab.mp_term("Attribution")?]);
    block.push(vocab.mp_term("attributionOfAgent")?, vec![iri(vocab, agent)]);
    if !role.is_empty() {
        block.push(vocab.mp_term("role")?, vec![literal(role)]);
    }
    if let Some(date) = date {
        block.push(vocab.mp_term("date")?, vec![literal(date)]);
    }
    block.write(out);
    Ok(())
}

fn iri(vocab: &VocabularyMap, id: &Id) -> String {
    format!("<{}>", vocab.instance_iri(id.as_str()))
}

fn literal(text: &str) -> String {
    let mut escaped = String::with_capacity(text.len() + 2);
    escaped.push('"');
    for c in text.chars() {
        match c {
            '\\' => escaped.push_str("\\\\"),
            '"' => escaped.push_str("\\\""),
            '\n' => escaped.push_str("\\n"),
            '\r' => escaped.push_str("\\r"),
            '\t' => escaped.push_str("\\t"),
            other => escaped.push(other),
        }
    }
    escaped.push('"');
    escaped
}

/// One subject block with `;`-separated predicates and `,`-separated
/// objects.
struct Block {
    subject: String,
    predicates: Vec<(String, Vec<String>)>,
}

impl Block {
    fn new(subject: &str) -> Self {
        Block { subject: format!("<{subject}>"), predicates: Vec::new() }
    }

    fn push(&mut self, predicate: String, objects: Vec<String>) {
        if !objects.is_empty() {
            self.predicates.push((predicate, objects));
        }
    }

    fn write(self, out: &mut String) {
        if self.predicates.is_empty() {
            return;
        }
        let _ = writeln!(out);
        let _ = write!(out, "{}", self.subject);
        for (i, (predicate, objects)) in self.predicates.iter().enumerate() {
            if i == 0 {
                let _ = write!(out, " {} {}", predicate, objects.join(", "));
            } else {
                let _ = write!(out, " ;\n    {} {}", predicate, objects.join(", "));
            }
        }
        let _ = writeln!(out, " .");
    }
}
