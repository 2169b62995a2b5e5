//! Nanopublication export and import.
//!
//! A micropublication projects onto a four-graph TriG document: Head,
//! Assertion (the claim text plus its semantic qualifier tags), Provenance
//! (the claim's attribution) and PublicationInfo (the attribution of the
//! container itself). The projection is lossy by design: everything else in
//! the support graph is dropped, and the dropped element ids are listed in a
//! `# dropped:` manifest at the top of the document.
//!
//! The alternative style moves the qualifier tags out of the Assertion into
//! a graph named Support. Import accepts both, and accepts the
//! `attributionForAgent` alias for `attributionOfAgent`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::ident::Id;
use crate::model::{
    Attribution, Micropublication, RelationPredicate, Representation, RepresentationKind,
};
use crate::serialization::trig::{parse_trig, Term, Triple, RDF_TYPE};
use crate::serialization::vocab::NP_NAMESPACE;
use crate::serialization::{SerializationError, VocabularyMap};

/// Where the qualifier tags are placed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NanopubStyle {
    /// Tags inside the Assertion graph; publication info in its own graph.
    #[default]
    AssertionTags,
    /// Tags and publication info in a graph named Support.
    SupportGraph,
}

impl NanopubStyle {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "assertion-tags" => Some(NanopubStyle::AssertionTags),
            "support-graph" => Some(NanopubStyle::SupportGraph),
            _ => None,
        }
    }
}

/// Exports one valid micropublication as a four-graph nanopublication.
pub fn export_nanopub(
    mp: &Micropublication,
    vocab: &VocabularyMap,
    style: NanopubStyle,
) -> Result<String, SerializationError> {
    let claim_id = mp.claim().ok_or_else(|| SerializationError::NoClaim(mp.id().clone()))?;
    let claim = mp
        .representation(claim_id)
        .ok_or_else(|| SerializationError::NoClaim(mp.id().clone()))?;
    let claim_text =
        claim.text.as_deref().ok_or_else(|| SerializationError::NoClaim(mp.id().clone()))?;

    // Semantic qualifier tags attached to the claim.
    let mut qualifiers: Vec<&Representation> = mp
        .edges()
        .filter(|e| e.predicate == RelationPredicate::QualifiedBy && &e.to_id == claim_id)
        .filter_map(|e| mp.representation(&e.from_id))
        .filter(|r| r.kind == RepresentationKind::SemanticQualifier)
        .collect();
    qualifiers.sort_by(|a, b| a.id.cmp(&b.id));

    // Attributions supporting the claim feed the Provenance graph.
    let mut claim_attributions: Vec<&Representation> = mp
        .edges()
        .filter(|e| e.predicate == RelationPredicate::Supports && &e.to_id == claim_id)
        .filter_map(|e| mp.representation(&e.from_id))
        .filter(|r| r.kind == RepresentationKind::Attribution)
        .collect();
    claim_attributions.sort_by(|a, b| a.id.cmp(&b.id));

    let mut kept: BTreeSet<&Id> = BTreeSet::new();
    kept.insert(claim_id);
    kept.extend(qualifiers.iter().map(|r| &r.id));
    kept.extend(claim_attributions.iter().map(|r| &r.id));
    let dropped: Vec<&Id> = mp.element_ids().filter(|id| !kept.contains(*id)).collect();

    let base = vocab.instance_iri(mp.id().as_str());
    let np_node = format!("{base}.np");
    let graph = |name: &str| format!("{base}.{name}");
    let info_graph_name = match style {
        NanopubStyle::AssertionTags => "PublicationInfo",
        NanopubStyle::SupportGraph => "Support",
    };

    let mut out = String::new();
    let _ = writeln!(out, "@prefix np: <{NP_NAMESPACE}> .");
    let _ = writeln!(out, "@prefix mp: <{}> .", vocab.namespace());
    for id in &dropped {
        let _ = writeln!(out, "# dropped: {id}");
    }

    let _ = writeln!(out, "\n<{}> {{", graph("Head"));
    let _ = writeln!(out, "    <{np_node}> a np:Nanopublication ;");
    let _ = writeln!(out, "        np:hasAssertion <{}> ;", graph("Assertion"));
    let _ = writeln!(out, "        np:hasProvenance <{}> ;", graph("Provenance"));
    let _ = writeln!(out, "        np:hasPublicationInfo <{}> .", graph(info_graph_name));
    let _ = writeln!(out, "}}");

    let _ = writeln!(out, "\n<{}> {{", graph("Assertion"));
    let claim_iri = vocab.instance_iri(claim_id.as_str());
    let _ = write!(out, "    <{claim_iri}> a mp:Statement, mp:Claim ;");
    let _ = write!(out, "\n        mp:text {}", literal(claim_text));
    if style == NanopubStyle::AssertionTags && !qualifiers.is_empty() {
        let tags: Vec<String> =
            qualifiers.iter().map(|q| format!("<{}>", vocab.instance_iri(q.id.as_str()))).collect();
        let _ = write!(out, " ;\n        mp:qualifiedBy {}", tags.join(", "));
    }
    let _ = writeln!(out, " .");
    if style == NanopubStyle::AssertionTags {
        for q in &qualifiers {
            write_qualifier(&mut out, vocab, q);
        }
    }
    let _ = writeln!(out, "}}");

    let _ = writeln!(out, "\n<{}> {{", graph("Provenance"));
    for attr in &claim_attributions {
        let _ = writeln!(
            out,
            "    <{claim_iri}> mp:hasAttribution <{}> .",
            vocab.instance_iri(attr.id.as_str())
        );
        if let Some(record) = &attr.attribution {
            write_attribution(&mut out, vocab, record);
        } else {
            let _ = writeln!(
                out,
                "    <{}> a mp:Attribution .",
                vocab.instance_iri(attr.id.as_str())
            );
        }
    }
    let _ = writeln!(out, "}}");

    let _ = writeln!(out, "\n<{}> {{", graph(info_graph_name));
    if style == NanopubStyle::SupportGraph && !qualifiers.is_empty() {
        let tags: Vec<String> =
            qualifiers.iter().map(|q| format!("<{}>", vocab.instance_iri(q.id.as_str()))).collect();
        let _ = writeln!(out, "    <{claim_iri}> mp:qualifiedBy {} .", tags.join(", "));
        for q in &qualifiers {
            write_qualifier(&mut out, vocab, q);
        }
    }
    let _ = writeln!(
        out,
        "    <{np_node}> mp:hasAttribution <{}> .",
        vocab.instance_iri(mp.attribution().id.as_str())
    );
    write_attribution(&mut out, vocab, mp.attribution());
    let _ = writeln!(out, "}}");

    Ok(out)
}

fn write_qualifier(out: &mut String, vocab: &VocabularyMap, q: &Representation) {
    let iri = vocab.instance_iri(q.id.as_str());
    let _ = write!(out, "\n    <{iri}> a mp:SemanticQualifier");
    if let Some(text) = &q.text {
        let _ = write!(out, " ;\n        mp:text {}", literal(text));
    }
    let _ = writeln!(out, " .");
}

fn write_attribution(out: &mut String, vocab: &VocabularyMap, record: &Attribution) {
    let iri = vocab.instance_iri(record.id.as_str());
    let _ = write!(out, "\n    <{iri}> a mp:Attribution ;");
    let _ = write!(
        out,
        "\n        mp:attributionOfAgent <{}>",
        vocab.instance_iri(record.agent_id.as_str())
    );
    if !record.role.is_empty() {
        let _ = write!(out, " ;\n        mp:role {}", literal(&record.role));
    }
    if let Some(date) = &record.date {
        let _ = write!(out, " ;\n        mp:date {}", literal(date));
    }
    let _ = writeln!(out, " .");
}

/// Imports a four-graph nanopublication as a minimal-form micropublication:
/// claim text, qualifier tags, claim attribution, container attribution.
pub fn import_nanopub(
    text: &str,
    vocab: &VocabularyMap,
) -> Result<Micropublication, SerializationError> {
    let dataset = parse_trig(text)?;
    let head = dataset
        .graph_by_suffix(".Head")
        .ok_or_else(|| SerializationError::MissingGraph("Head".into()))?
        .1;
    let assertion = dataset
        .graph_by_suffix(".Assertion")
        .ok_or_else(|| SerializationError::MissingGraph("Assertion".into()))?
        .1;
    let provenance = dataset
        .graph_by_suffix(".Provenance")
        .ok_or_else(|| SerializationError::MissingGraph("Provenance".into()))?
        .1;
    let info = dataset
        .graph_by_suffix(".PublicationInfo")
        .or_else(|| dataset.graph_by_suffix(".Support"))
        .ok_or_else(|| SerializationError::MissingGraph("PublicationInfo".into()))?
        .1;

    // The nanopublication node names the micropublication.
    let np_type = format!("{NP_NAMESPACE}Nanopublication");
    let np_node = head
        .iter()
        .find(|t| t.predicate == Term::Iri(RDF_TYPE.into()) && t.object == Term::Iri(np_type.clone()))
        .and_then(|t| t.subject.as_iri())
        .ok_or_else(|| SerializationError::MissingGraph("Head".into()))?;
    let mp_id = local_id(vocab, np_node)
        .strip_suffix(".np")
        .map(str::to_owned)
        .ok_or_else(|| SerializationError::Schema(format!("cannot derive id from {np_node}")))?;

    // Claim: the statement with text in the Assertion graph.
    let text_pred = Term::Iri(format!("{}text", vocab.namespace()));
    let statement_type = Term::Iri(format!("{}Statement", vocab.namespace()));
    let claim_subject = assertion
        .iter()
        .find(|t| t.predicate == Term::Iri(RDF_TYPE.into()) && t.object == statement_type)
        .map(|t| t.subject.clone())
        .ok_or(SerializationError::MissingAssertion)?;
    let claim_text = assertion
        .iter()
        .find(|t| t.subject == claim_subject && t.predicate == text_pred)
        .and_then(|t| t.object.as_literal())
        .ok_or(SerializationError::MissingAssertion)?;
    let claim_iri =
        claim_subject.as_iri().ok_or(SerializationError::MissingAssertion)?.to_owned();
    let claim_id = local_id(vocab, &claim_iri);

    // Qualifier tags may live in the Assertion graph or the Support graph.
    let qualified_by = Term::Iri(format!("{}qualifiedBy", vocab.namespace()));
    let mut qualifier_ids: Vec<String> = Vec::new();
    let qualifier_text = |graphs: &[&Vec<Triple>], q_iri: &str| -> Option<String> {
        graphs.iter().flat_map(|g| g.iter()).find_map(|t| {
            (t.subject == Term::Iri(q_iri.to_owned()) && t.predicate == text_pred)
                .then(|| t.object.as_literal().map(str::to_owned))
                .flatten()
        })
    };
    let mut qualifiers: Vec<(String, Option<String>)> = Vec::new();
    for t in assertion.iter().chain(info.iter()) {
        if t.subject == claim_subject && t.predicate == qualified_by {
            if let Some(q_iri) = t.object.as_iri() {
                let id = local_id(vocab, q_iri);
                if !qualifier_ids.contains(&id) {
                    qualifier_ids.push(id.clone());
                    qualifiers.push((id, qualifier_text(&[assertion, info], q_iri)));
                }
            }
        }
    }

    let mp_attribution = read_attribution(vocab, info, np_node)
        .unwrap_or_else(|| Attribution::new(format!("A_{mp_id}"), "unknown", ""));

    let mut mp = Micropublication::new(mp_id, mp_attribution);
    mp.assert_element(Representation::statement(claim_id.clone(), claim_text))
        .map_err(|e| SerializationError::Schema(e.to_string()))?;
    mp.set_claim(claim_id.clone()).map_err(|e| SerializationError::Schema(e.to_string()))?;

    for (qid, qtext) in qualifiers {
        let mut rep = Representation::new(qid.clone(), RepresentationKind::SemanticQualifier);
        rep.text = qtext;
        mp.assert_element(rep).map_err(|e| SerializationError::Schema(e.to_string()))?;
        mp.add_edge(qid, claim_id.clone(), RelationPredicate::QualifiedBy)
            .map_err(|e| SerializationError::Schema(e.to_string()))?;
    }

    if let Some(claim_attr) = read_attribution(vocab, provenance, &claim_iri) {
        let attr_id = claim_attr.id.clone();
        mp.attribute(&Id::from(claim_id.as_str()), claim_attr)
            .map_err(|e| SerializationError::Schema(e.to_string()))?;
        mp.add_edge(attr_id, claim_id, RelationPredicate::Supports)
            .map_err(|e| SerializationError::Schema(e.to_string()))?;
    }

    Ok(mp)
}

/// Reads `<owner> mp:hasAttribution <A>` plus A's record from one graph.
/// Accepts the `attributionForAgent` alias.
fn read_attribution(
    vocab: &VocabularyMap,
    graph: &[Triple],
    owner_iri: &str,
) -> Option<Attribution> {
    let has_attribution = Term::Iri(format!("{}hasAttribution", vocab.namespace()));
    let attr_iri = graph
        .iter()
        .find(|t| t.subject == Term::Iri(owner_iri.to_owned()) && t.predicate == has_attribution)?
        .object
        .as_iri()?
        .to_owned();
    let of_agent = Term::Iri(format!("{}attributionOfAgent", vocab.namespace()));
    let for_agent = Term::Iri(format!("{}attributionForAgent", vocab.namespace()));
    let role_pred = Term::Iri(format!("{}role", vocab.namespace()));
    let date_pred = Term::Iri(format!("{}date", vocab.namespace()));

    let subject = Term::Iri(attr_iri.clone());
    let agent = graph
        .iter()
        .find(|t| t.subject == subject && (t.predicate == of_agent || t.predicate == for_agent))
        .and_then(|t| t.object.as_iri())
        .map(|iri| local_id(vocab, iri))?;
    let role = graph
        .iter()
        .find(|t| t.subject == subject && t.predicate == role_pred)
        .and_then(|t| t.object.as_literal())
        .unwrap_or("");
    let mut attribution = Attribution::new(local_id(vocab, &attr_iri), agent, role);
    attribution.date = graph
        .iter()
        .find(|t| t.subject == subject && t.predicate == date_pred)
        .and_then(|t| t.object.as_literal())
        .map(str::to_owned);
    Some(attribution)
}

/// Strips the instance base from an IRI, decoding percent escapes back into
/// UTF-8.
fn local_id(vocab: &VocabularyMap, iri: &str) -> String {
    let local = iri.strip_prefix(vocab.instance_base()).unwrap_or(iri);
    let mut out: Vec<u8> = Vec::with_capacity(local.len());
    let bytes = local.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'%' && i + 2 < bytes.len() {
            if let Ok(byte) = u8::from_str_radix(&local[i + 1..i + 3], 16) {
                out.push(byte);
                i += 3;
                continue;
            }
        }
        out.push(bytes[i]);
        i += 1;
    }
    String::from_utf8(out).unwrap_or_else(|_| local.to_owned())
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn vocab() -> VocabularyMap {
        VocabularyMap::new()
    }

    #[test]
    fn mp1_assertion_carries_claim_text_and_tags() {
        let text = export_nanopub(&fixtures::mp1(), &vocab(), NanopubStyle::default()).unwrap();
        assert!(text.contains("Rapamycin is an inhibitor of the mTOR pathway"));
        assert!(text.contains("CHEBI:9168"));
        assert!(text.contains("INO:0000736"));
        assert!(text.contains("np:hasAssertion"));
        // Ref5 is support structure beyond qualifiers, so it is dropped.
        assert!(text.contains("# dropped: Ref5"));
    }

    #[test]
    fn support_graph_style_moves_tags_out_of_the_assertion() {
        let text = export_nanopub(&fixtures::mp1(), &vocab(), NanopubStyle::SupportGraph).unwrap();
        assert!(text.contains(".Support> {"));
        let assertion = text.split(".Assertion> {").nth(1).unwrap();
        let assertion_block = assertion.split('}').next().unwrap();
        assert!(!assertion_block.contains("qualifiedBy"));
        let reimported = import_nanopub(&text, &vocab()).unwrap();
        assert!(reimported.is_element(&Id::from("Q1")));
    }

    #[test]
    fn mp3_drop_manifest_lists_the_evidence() {
        let text = export_nanopub(&fixtures::mp3(), &vocab(), NanopubStyle::default()).unwrap();
        for id in ["D1", "M1", "M2", "S1", "S2", "S3", "Ref5", "Ref9", "Ref10"] {
            assert!(text.contains(&format!("# dropped: {id}")), "missing {id} in manifest");
        }
        assert!(!text.contains("# dropped: A_C3"));
    }

    #[test]
    fn import_yields_a_minimal_form_micropublication() {
        let text = export_nanopub(&fixtures::mp1(), &vocab(), NanopubStyle::default()).unwrap();
        let mp = import_nanopub(&text, &vocab()).unwrap();
        assert_eq!(mp.id(), &Id::from("MP1"));
        let report = mp.validate();
        assert!(report.is_valid());
        assert!(report.minimal_form);
        let claim = mp.representation(&Id::from("C1")).unwrap();
        assert_eq!(claim.text.as_deref(), Some("Rapamycin is an inhibitor of the mTOR pathway"));
    }

    #[test]
    fn second_export_is_stable() {
        let first = export_nanopub(&fixtures::mp1(), &vocab(), NanopubStyle::default()).unwrap();
        let second =
            export_nanopub(&import_nanopub(&first, &vocab()).unwrap(), &vocab(), NanopubStyle::default())
                .unwrap();
        let third =
            export_nanopub(&import_nanopub(&second, &vocab()).unwrap(), &vocab(), NanopubStyle::default())
                .unwrap();
        assert_eq!(second, third);
        // the re-import keeps exactly the exportable content, so nothing is
        // dropped the second time around
        assert!(!second.contains("# dropped:"));
    }

    #[test]
    fn missing_provenance_graph_is_an_error() {
        let text = export_nanopub(&fixtures::mp1(), &vocab(), NanopubStyle::default()).unwrap();
        let broken = text.replace(".Provenance", ".Somewhere");
        assert_eq!(
            import_nanopub(&broken, &vocab()).unwrap_err(),
            SerializationError::MissingGraph("Provenance".into())
        );
    }

    #[test]
    fn quoted_claims_cannot_be_exported() {
        let err = export_nanopub(&fixtures::mp6(), &vocab(), NanopubStyle::default()).unwrap_err();
        assert_eq!(err, SerializationError::NoClaim(Id::from("MP6")));
    }

    #[test]
    fn non_ascii_ids_survive_the_round_trip() {
        use crate::model::{Attribution, Micropublication, Representation};
        let mut mp = Micropublication::new("MPβ", Attribution::new("A_MPβ", "agent", "author"));
        mp.assert_element(Representation::statement("Cβ", "ein Satz")).unwrap();
        mp.attribute(&Id::from("Cβ"), Attribution::new("A_Cβ", "agent", "author")).unwrap();
        mp.set_claim("Cβ").unwrap();
        mp.add_edge("A_Cβ", "Cβ", RelationPredicate::Supports).unwrap();
        let text = export_nanopub(&mp, &vocab(), NanopubStyle::default()).unwrap();
        let back = import_nanopub(&text, &vocab()).unwrap();
        assert_eq!(back.id(), &Id::from("MPβ"));
        assert!(back.is_element(&Id::from("Cβ")));
    }
}
