//! MPJSON, the canonical interchange form.
//!
//! One JSON object with five top-level fields: `version` (`"mp/1"`),
//! `micropublications`, `representations`, `edges` and `resolution`. Arrays
//! are sorted, object keys are sorted, output is pretty-printed with two
//! spaces, LF line endings and a single trailing newline, so equal inputs
//! emit byte-identical documents.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::anchoring::{AnnotationTarget, Selector};
use crate::ident::Id;
use crate::model::{
    Attribution, GroupMarker, MediaDescriptor, Micropublication, RelationEdge, RelationPredicate,
    Representation, RepresentationKind,
};
use crate::network::ResolutionEntry;
use crate::serialization::{Document, SerializationError};

pub const VERSION: &str = "mp/1";

/// Emits the canonical form. Every micropublication must validate with zero
/// errors.
pub fn emit_canonical(doc: &Document) -> Result<String, SerializationError> {
    for mp in doc.micropublications() {
        if !mp.validate().is_valid() {
            return Err(SerializationError::InvalidInput { id: mp.id().clone() });
        }
    }

    let mut representations: BTreeMap<&Id, &Representation> = BTreeMap::new();
    let mut edges: Vec<&RelationEdge> = Vec::new();
    for mp in doc.micropublications() {
        for rep in mp.asserted() {
            if let Some(existing) = representations.get(&rep.id) {
                if *existing != rep {
                    return Err(SerializationError::InvalidInput { id: rep.id.clone() });
                }
            }
            representations.insert(&rep.id, rep);
        }
        edges.extend(mp.edges());
    }
    edges.sort();
    edges.dedup();

    let value = json!({
        "version": VERSION,
        "micropublications": doc.micropublications().map(mp_value).collect::<Vec<_>>(),
        "representations": representations.values().map(|r| rep_value(r)).collect::<Vec<_>>(),
        "edges": edges.iter().map(|e| edge_value(e)).collect::<Vec<_>>(),
        "resolution": doc.resolutions().map(resolution_value).collect::<Vec<_>>(),
    });
    let mut text = serde_json::to_string_pretty(&value).expect("JSON encoding cannot fail");
    text.push('\n');
    Ok(text)
}

/// Parses a canonical document. Syntax errors carry their position; schema
/// errors name the offending construct; versions other than `mp/1` are
/// rejected.
pub fn parse_canonical(text: &str) -> Result<Document, SerializationError> {
    let value: Value = serde_json::from_str(text).map_err(|e| SerializationError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let root = as_object(&value, "document")?;
    check_fields(root, &["version", "micropublications", "representations", "edges", "resolution"], "document")?;

    let version = get_str(root, "version", "document")?;
    if version != VERSION {
        return Err(SerializationError::Version(version.to_owned()));
    }

    let mut reps: BTreeMap<Id, Representation> = BTreeMap::new();
    for entry in get_array(root, "representations", "document")? {
        let rep = parse_representation(entry)?;
        if reps.insert(rep.id.clone(), rep.clone()).is_some() {
            return Err(schema(format!("duplicate representation {}", rep.id)));
        }
    }

    let mut doc = Document::default();
    let mut used: BTreeMap<Id, ()> = BTreeMap::new();
    for entry in get_array(root, "micropublications", "document")? {
        let mp = parse_micropublication(entry, &reps, &mut used)?;
        doc.insert_micropublication(mp)?;
    }
    for id in reps.keys() {
        if !used.contains_key(id) {
            return Err(schema(format!("representation {id} is asserted by no micropublication")));
        }
    }

    for entry in get_array(root, "edges", "document")? {
        let obj = as_object(entry, "edge")?;
        check_fields(obj, &["from", "to", "predicate", "asserted_by"], "edge")?;
        let from = get_str(obj, "from", "edge")?;
        let to = get_str(obj, "to", "edge")?;
        let pred_name = get_str(obj, "predicate", "edge")?;
        let predicate = RelationPredicate::parse(pred_name)
            .ok_or_else(|| schema(format!("unknown predicate {pred_name:?}")))?;
        let owner = get_str(obj, "asserted_by", "edge")?;
        let mp = doc
            .micropublications
            .get_mut(owner)
            .ok_or_else(|| schema(format!("edge asserted by unknown micropublication {owner}")))?;
        mp.add_edge(from, to, predicate)
            .map_err(|e| schema(format!("edge {from} -> {to}: {e}")))?;
    }

    for entry in get_array(root, "resolution", "document")? {
        let obj = as_object(entry, "resolution entry")?;
        check_fields(obj, &["reference", "document", "statement", "resolved_by"], "resolution entry")?;
        doc.insert_resolution(ResolutionEntry {
            reference: Id::from(get_str(obj, "reference", "resolution entry")?),
            document: Id::from(get_str(obj, "document", "resolution entry")?),
            statement: get_opt_str(obj, "statement", "resolution entry")?.map(Id::from),
            resolved_by: get_opt_str(obj, "resolved_by", "resolution entry")?.map(Id::from),
        })?;
    }

    Ok(doc)
}

fn mp_value(mp: &Micropublication) -> Value {
    let mut obj = Map::new();
    obj.insert("id".into(), json!(mp.id().as_str()));
    obj.insert("attribution".into(), attribution_value(mp.attribution()));
    obj.insert(
        "claim".into(),
        json!(mp.claim().expect("emitted micropublications are valid").as_str()),
    );
    obj.insert(
        "asserted".into(),
        json!(mp.asserted_ids().map(Id::as_str).collect::<Vec<_>>()),
    );
    obj.insert(
        "quoted".into(),
        Value::Array(
            mp.quoted()
                .map(|(id, origin)| {
                    let mut q = Map::new();
                    q.insert("id".into(), json!(id.as_str()));
                    if let Some(origin) = origin {
                        q.insert("origin".into(), json!(origin.as_str()));
                    }
                    Value::Object(q)
                })
                .collect(),
        ),
    );
    obj.insert(
        "attributes".into(),
        Value::Array(
            mp.attribution_targets()
                .map(|(attr, element)| {
                    json!({"attribution": attr.as_str(), "element": element.as_str()})
                })
                .collect(),
        ),
    );
    if let Some(group) = mp.group() {
        obj.insert(
            "similarity_group".into(),
            json!({
                "holotype": group.holotype_id.as_str(),
                "members": group.member_ids.iter().map(Id::as_str).collect::<Vec<_>>(),
            }),
        );
    }
    Value::Object(obj)
}

fn attribution_value(a: &Attribution) -> Value {
    let mut obj = Map::new();
    obj.insert("id".into(), json!(a.id.as_str()));
    obj.insert("agent".into(), json!(a.agent_id.as_str()));
    obj.insert("role".into(), json!(a.role));
    if let Some(date) = &a.date {
        obj.insert("date".into(), json!(date));
    }
    Value::Object(obj)
}

fn rep_value(r: &Representation) -> Value {
    let mut obj = Map::new();
    obj.insert("id".into(), json!(r.id.as_str()));
    obj.insert("kind".into(), json!(r.kind.name()));
    if let Some(text) = &r.text {
        obj.insert("text".into(), json!(text));
    }
    if let Some(media) = &r.media {
        obj.insert("media".into(), json!({"kind": media.kind, "locator": media.locator}));
    }
    if let Some(source) = &r.source {
        obj.insert("source".into(), target_value(source));
    }
    if let Some(attribution) = &r.attribution {
        obj.insert("attribution".into(), attribution_value(attribution));
    }
    Value::Object(obj)
}

fn target_value(t: &AnnotationTarget) -> Value {
    json!({
        "document": t.document_id.as_str(),
        "selectors": t.selectors.iter().map(selector_value).collect::<Vec<_>>(),
    })
}

fn selector_value(s: &Selector) -> Value {
    match s {
        Selector::TextQuote { exact, prefix, suffix } => {
            let mut obj = Map::new();
            obj.insert("type".into(), json!("TextQuote"));
            obj.insert("exact".into(), json!(exact));
            if let Some(prefix) = prefix {
                obj.insert("prefix".into(), json!(prefix));
            }
            if let Some(suffix) = suffix {
                obj.insert("suffix".into(), json!(suffix));
            }
            Value::Object(obj)
        }
        Selector::TextPosition { start, end } => {
            json!({"type": "TextPosition", "start": start, "end": end})
        }
    }
}

fn edge_value(e: &RelationEdge) -> Value {
    json!({
        "from": e.from_id.as_str(),
        "to": e.to_id.as_str(),
        "predicate": e.predicate.name(),
        "asserted_by": e.asserted_by.as_str(),
    })
}

fn resolution_value(r: &ResolutionEntry) -> Value {
    let mut obj = Map::new();
    obj.insert("reference".into(), json!(r.reference.as_str()));
    obj.insert("document".into(), json!(r.document.as_str()));
    if let Some(statement) = &r.statement {
        obj.insert("statement".into(), json!(statement.as_str()));
    }
    if let Some(resolved_by) = &r.resolved_by {
        obj.insert("resolved_by".into(), json!(resolved_by.as_str()));
    }
    Value::Object(obj)
}

fn parse_micropublication(
    value: &Value,
    reps: &BTreeMap<Id, Representation>,
    used: &mut BTreeMap<Id, ()>,
) -> Result<Micropublication, SerializationError> {
    let obj = as_object(value, "micropublication")?;
    check_fields(
        obj,
        &["id", "attribution", "claim", "asserted", "quoted", "attributes", "similarity_group"],
        "micropublication",
    )?;
    let id = get_str(obj, "id", "micropublication")?;
    let attribution = parse_attribution(
        obj.get("attribution")
            .ok_or_else(|| schema(format!("micropublication {id} lacks attribution")))?,
    )?;
    let mut mp = Micropublication::new(id, attribution);

    for entry in get_array(obj, "asserted", "micropublication")? {
        let rid = as_str(entry, "asserted id")?;
        let rep = reps
            .get(rid)
            .ok_or_else(|| schema(format!("asserted id {rid} has no representation")))?;
        used.insert(rep.id.clone(), ());
        mp.assert_element(rep.clone()).map_err(|e| schema(format!("{id}: {e}")))?;
    }
    for entry in get_array(obj, "quoted", "micropublication")? {
        let q = as_object(entry, "quoted entry")?;
        check_fields(q, &["id", "origin"], "quoted entry")?;
        let rid = get_str(q, "id", "quoted entry")?;
        let origin = get_opt_str(q, "origin", "quoted entry")?.map(Id::from);
        mp.quote_element(rid, origin).map_err(|e| schema(format!("{id}: {e}")))?;
    }

    let claim = get_str(obj, "claim", "micropublication")?;
    mp.set_claim(claim).map_err(|e| schema(format!("{id}: {e}")))?;

    for entry in get_array(obj, "attributes", "micropublication")? {
        let a = as_object(entry, "attributes entry")?;
        check_fields(a, &["attribution", "element"], "attributes entry")?;
        mp.restore_attribute_mapping(
            Id::from(get_str(a, "attribution", "attributes entry")?),
            Id::from(get_str(a, "element", "attributes entry")?),
        )
        .map_err(|e| schema(format!("{id}: {e}")))?;
    }

    if let Some(group) = obj.get("similarity_group") {
        let g = as_object(group, "similarity_group")?;
        check_fields(g, &["holotype", "members"], "similarity_group")?;
        let holotype = Id::from(get_str(g, "holotype", "similarity_group")?);
        let members: Result<Vec<Id>, _> = get_array(g, "members", "similarity_group")?
            .iter()
            .map(|m| as_str(m, "group member").map(Id::from))
            .collect();
        let member_ids: std::collections::BTreeSet<Id> = members?.into_iter().collect();
        if !member_ids.contains(&holotype) {
            return Err(schema(format!("{id}: group holotype {holotype} is not a member")));
        }
        mp.set_group(GroupMarker { holotype_id: holotype, member_ids });
    }

    Ok(mp)
}

fn parse_attribution(value: &Value) -> Result<Attribution, SerializationError> {
    let obj = as_object(value, "attribution")?;
    check_fields(obj, &["id", "agent", "role", "date"], "attribution")?;
    let mut attribution = Attribution::new(
        get_str(obj, "id", "attribution")?,
        get_str(obj, "agent", "attribution")?,
        get_str(obj, "role", "attribution")?,
    );
    attribution.date = get_opt_str(obj, "date", "attribution")?.map(str::to_owned);
    Ok(attribution)
}

fn parse_representation(value: &Value) -> Result<Representation, SerializationError> {
    let obj = as_object(value, "representation")?;
    check_fields(obj, &["id", "kind", "text", "media", "source", "attribution"], "representation")?;
    let id = get_str(obj, "id", "representation")?;
    let kind_name = get_str(obj, "kind", "representation")?;
    let kind = RepresentationKind::parse(kind_name)
        .ok_or_else(|| schema(format!("unknown kind {kind_name:?}")))?;
    let mut rep = Representation::new(id, kind);
    rep.text = get_opt_str(obj, "text", "representation")?.map(str::to_owned);
    if let Some(media) = obj.get("media") {
        let m = as_object(media, "media")?;
        check_fields(m, &["kind", "locator"], "media")?;
        rep.media = Some(MediaDescriptor {
            kind: get_str(m, "kind", "media")?.to_owned(),
            locator: get_str(m, "locator", "media")?.to_owned(),
        });
    }
    if let Some(source) = obj.get("source") {
        rep.source = Some(parse_target(source)?);
    }
    if let Some(attribution) = obj.get("attribution") {
        rep.attribution = Some(parse_attribution(attribution)?);
    }
    Ok(rep)
}

fn parse_target(value: &Value) -> Result<AnnotationTarget, SerializationError> {
    let obj = as_object(value, "source")?;
    check_fields(obj, &["document", "selectors"], "source")?;
    let mut selectors = Vec::new();
    for entry in get_array(obj, "selectors", "source")? {
        let s = as_object(entry, "selector")?;
        let kind = get_str(s, "type", "selector")?;
        match kind {
            "TextQuote" => {
                check_fields(s, &["type", "exact", "prefix", "suffix"], "selector")?;
                selectors.push(Selector::TextQuote {
                    exact: get_str(s, "exact", "selector")?.to_owned(),
                    prefix: get_opt_str(s, "prefix", "selector")?.map(str::to_owned),
                    suffix: get_opt_str(s, "suffix", "selector")?.map(str::to_owned),
                });
            }
            "TextPosition" => {
                check_fields(s, &["type", "start", "end"], "selector")?;
                selectors.push(Selector::TextPosition {
                    start: get_usize(s, "start", "selector")?,
                    end: get_usize(s, "end", "selector")?,
                });
            }
            other => return Err(schema(format!("unknown selector type {other:?}"))),
        }
    }
    if selectors.is_empty() {
        return Err(schema("source carries no selectors".into()));
    }
    Ok(AnnotationTarget {
        document_id: Id::from(get_str(obj, "document", "source")?),
        selectors,
    })
}

fn schema(message: String) -> SerializationError {
    SerializationError::Schema(message)
}

fn as_object<'a>(value: &'a Value, what: &str) -> Result<&'a Map<String, Value>, SerializationError> {
    value.as_object().ok_or_else(|| schema(format!("{what} must be an object")))
}

fn as_str<'a>(value: &'a Value, what: &str) -> Result<&'a str, SerializationError> {
    value.as_str().ok_or_else(|| schema(format!("{what} must be a string")))
}

fn check_fields(
    obj: &Map<String, Value>,
    allowed: &[&str],
    what: &str,
) -> Result<(), SerializationError> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(schema(format!("unknown field {key:?} in {what}")));
        }
    }
    Ok(())
}

fn get_str<'a>(
    obj: &'a Map<String, Value>,
    key: &str,
    what: &str,
) -> Result<&'a str, SerializationError> {
    obj.get(key)
        .ok_or_else(|| schema(format!("{what} lacks required field {key:?}")))?
        .as_str()
        .ok_or_else(|| schema(format!("{what}.{key} must be a string")))
}

fn get_opt_str<'a>(
    obj: &'a Map<String, Value>,
    key: &str,
    what: &str,
) -> Result<Option<&'a str>, SerializationError> {
    match obj.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(v) => {
            Ok(Some(v.as_str().ok_or_else(|| schema(format!("{what}.{key} must be a string")))?))
        }
    }
}

fn get_usize(obj: &Map<String, Value>, key: &str, what: &str) -> Result<usize, SerializationError> {
    obj.get(key)
        .ok_or_else(|| schema(format!("{what} lacks required field {key:?}")))?
        .as_u64()
        .map(|v| v as usize)
        .ok_or_else(|| schema(format!("{what}.{key} must be a non-negative integer")))
}

fn get_array<'a>(
    obj: &'a Map<String, Value>,
    key: &str,
    what: &str,
) -> Result<&'a Vec<Value>, SerializationError> {
    obj.get(key)
        .ok_or_else(|| schema(format!("{what} lacks required field {key:?}")))?
        .as_array()
        .ok_or_else(|| schema(format!("{what}.{key} must be an array")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn emit_is_deterministic_and_round_trips() {
        let doc = Document::from_corpus(&fixtures::base_corpus());
        let first = emit_canonical(&doc).unwrap();
        let parsed = parse_canonical(&first).unwrap();
        assert_eq!(parsed, doc);
        let second = emit_canonical(&parsed).unwrap();
        assert_eq!(first, second, "round trip must be byte-identical");
        assert!(first.ends_with('\n') && !first.ends_with("\n\n"));
    }

    #[test]
    fn empty_corpus_still_parses() {
        let doc = Document::default();
        let text = emit_canonical(&doc).unwrap();
        assert_eq!(parse_canonical(&text).unwrap(), doc);
    }

    #[test]
    fn unknown_predicate_is_a_schema_error() {
        let doc = Document::from_corpus(&fixtures::corpus_of(&["MP1"]));
        let text = emit_canonical(&doc).unwrap();
        let broken = text.replace("\"supports\"", "\"endorses\"");
        match parse_canonical(&broken) {
            Err(SerializationError::Schema(msg)) => assert!(msg.contains("endorses")),
            other => panic!("expected schema error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_kind_is_a_schema_error() {
        let doc = Document::from_corpus(&fixtures::corpus_of(&["MP1"]));
        let text = emit_canonical(&doc).unwrap();
        let broken = text.replace("\"Reference\"", "\"Footnote\"");
        assert!(matches!(parse_canonical(&broken), Err(SerializationError::Schema(_))));
    }

    #[test]
    fn truncated_document_reports_a_position() {
        let doc = Document::from_corpus(&fixtures::corpus_of(&["MP1"]));
        let text = emit_canonical(&doc).unwrap();
        let truncated = &text[..text.len() / 2];
        match parse_canonical(truncated) {
            Err(SerializationError::Syntax { line, .. }) => assert!(line > 0),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn future_versions_are_rejected() {
        let text = emit_canonical(&Document::default()).unwrap().replace("mp/1", "mp/2");
        assert_eq!(
            parse_canonical(&text),
            Err(SerializationError::Version("mp/2".into()))
        );
    }

    #[test]
    fn invalid_micropublications_cannot_be_emitted() {
        let mp = Micropublication::new("MPX", Attribution::new("A", "agent", "author"));
        let doc = Document::from_micropublication(mp);
        assert_eq!(
            emit_canonical(&doc),
            Err(SerializationError::InvalidInput { id: Id::from("MPX") })
        );
    }

    #[test]
    fn merged_corpus_lists_cross_edges_under_their_asserter() {
        let doc = Document::from_corpus(&fixtures::claim_network_corpus());
        let text = emit_canonical(&doc).unwrap();
        let value: Value = serde_json::from_str(&text).unwrap();
        let edges = value["edges"].as_array().unwrap();
        let mp6_edges: Vec<&Value> =
            edges.iter().filter(|e| e["asserted_by"] == "MP6").collect();
        assert_eq!(mp6_edges.len(), 2);
    }
}
