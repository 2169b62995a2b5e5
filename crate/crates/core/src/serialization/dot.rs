//! Graphviz DOT rendering of merged networks.
//!
//! Each micropublication that asserts representations becomes a cluster;
//! edges are drawn at top level, so cross-micropublication support shows up
//! as arrows between clusters. Node shapes follow element kinds, supports
//! edges are solid, direct challenges dashed. Qualifier tags and their edges
//! are omitted unless requested.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::ident::Id;
use crate::model::{RelationPredicate, RepresentationKind};
use crate::network::Network;

#[derive(Debug, Clone, Default)]
pub struct DotOptions {
    /// Also draw semantic qualifiers and qualifiedBy edges (dotted).
    pub include_qualifiers: bool,
}

pub fn emit_dot(net: &Network, options: &DotOptions) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph micropublications {{");
    let _ = writeln!(out, "    rankdir=BT;");
    let _ = writeln!(out, "    node [fontname=\"Helvetica\"];");

    // Qualifier nodes vanish with their edges unless requested.
    let hidden: BTreeSet<&Id> = if options.include_qualifiers {
        BTreeSet::new()
    } else {
        net.representations()
            .filter(|r| r.kind == RepresentationKind::SemanticQualifier)
            .filter(|r| {
                net.edges()
                    .filter(|e| e.from_id == r.id || e.to_id == r.id)
                    .all(|e| e.predicate == RelationPredicate::QualifiedBy)
            })
            .map(|r| &r.id)
            .collect()
    };

    for mp in net.micropublications() {
        let drawn: Vec<&Id> = mp
            .asserted_ids()
            .filter(|id| !hidden.contains(*id))
            .collect();
        if drawn.is_empty() {
            continue;
        }
        let _ = writeln!(out, "    subgraph \"cluster_{}\" {{", escape(mp.id().as_str()));
        let _ = writeln!(out, "        label={};", quoted(mp.id().as_str()));
        for id in drawn {
            let kind = net
                .representation(id.as_str())
                .or_else(|| mp.representation(id))
                .map(|r| r.kind);
            let _ = writeln!(out, "        {} [shape={}];", quoted(id.as_str()), shape(kind));
        }
        let _ = writeln!(out, "    }}");
    }

    let mut lines: BTreeSet<String> = BTreeSet::new();
    for e in net.edges() {
        match e.predicate {
            RelationPredicate::Supports => {
                lines.insert(format!(
                    "    {} -> {};",
                    quoted(e.from_id.as_str()),
                    quoted(e.to_id.as_str())
                ));
            }
            RelationPredicate::DirectlyChallenges => {
                lines.insert(format!(
                    "    {} -> {} [style=dashed];",
                    quoted(e.from_id.as_str()),
                    quoted(e.to_id.as_str())
                ));
            }
            RelationPredicate::QualifiedBy => {
                if options.include_qualifiers {
                    lines.insert(format!(
                        "    {} -> {} [style=dotted];",
                        quoted(e.from_id.as_str()),
                        quoted(e.to_id.as_str())
                    ));
                }
            }
        }
    }
    for line in lines {
        let _ = writeln!(out, "{line}");
    }
    let _ = writeln!(out, "}}");
    out
}

fn shape(kind: Option<RepresentationKind>) -> &'static str {
    match kind {
        Some(RepresentationKind::Statement) | Some(RepresentationKind::Sentence) => "box",
        Some(RepresentationKind::Data) => "note",
        Some(RepresentationKind::Method)
        | Some(RepresentationKind::Procedure)
        | Some(RepresentationKind::Material) => "component",
        Some(RepresentationKind::Reference) => "plaintext",
        Some(RepresentationKind::Attribution) => "ellipse",
        Some(RepresentationKind::SemanticQualifier) => "diamond",
        Some(RepresentationKind::ArticleText) => "folder",
        None => "ellipse",
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn quoted(s: &str) -> String {
    format!("\"{}\"", escape(s))
}
