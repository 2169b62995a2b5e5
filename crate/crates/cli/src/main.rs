//! Command-line front end for micropublication corpora.
//!
//! Exit codes: 0 on success, 1 on domain errors (validation failures,
//! unknown ids, strict audit flags), 2 on parse errors (unreadable files,
//! syntax, schema or version problems).

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use micropub::network::Network;
use micropub::serialization::{
    emit_canonical, emit_dot, emit_turtle, export_nanopub, parse_canonical, Document, DotOptions,
    NanopubStyle, VocabularyMap,
};
use micropub::{Id, ValidationReport};

#[derive(Parser)]
#[command(
    name = "micropub",
    version,
    about = "Construct, validate, merge, query and serialize claim-evidence-argument networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate every micropublication in the given documents.
    Validate {
        /// MPJSON documents.
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Merge the documents and run one query against the network.
    Query {
        #[arg(value_enum)]
        what: QueryKind,
        /// Statement id (lineage, grounding, similogs) or micropublication
        /// id (support-graph, challenge-graph).
        subject: String,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Merge the documents and export them in an interchange format.
    Export {
        #[arg(long, value_enum)]
        format: Format,
        /// Write here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Where nanopublication qualifier tags are placed.
        #[arg(long, value_enum, default_value_t = StyleArg::AssertionTags)]
        nanopub_style: StyleArg,
        /// Draw qualifier tags and qualifiedBy edges in DOT output.
        #[arg(long)]
        include_qualifier_edges: bool,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Per-claim citation-distortion report over the merged documents.
    Audit {
        /// Lineage depth at or beyond which shallow grounding is flagged.
        #[arg(long, default_value_t = 2)]
        depth_threshold: usize,
        /// Exit non-zero when any claim is flagged.
        #[arg(long)]
        strict: bool,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum QueryKind {
    Lineage,
    Grounding,
    SupportGraph,
    ChallengeGraph,
    Similogs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Mpjson,
    Ttl,
    TrigNanopub,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum StyleArg {
    AssertionTags,
    SupportGraph,
}

impl From<StyleArg> for NanopubStyle {
    fn from(style: StyleArg) -> Self {
        match style {
            StyleArg::AssertionTags => NanopubStyle::AssertionTags,
            StyleArg::SupportGraph => NanopubStyle::SupportGraph,
        }
    }
}

enum Failure {
    /// Unreadable input or syntax/schema/version errors: exit 2.
    Parse(String),
    /// Everything the model itself rejects: exit 1.
    Domain(String),
}

impl Failure {
    fn report(&self) -> ExitCode {
        match self {
            Failure::Parse(message) => {
                eprintln!("error: {message}");
                ExitCode::from(2)
            }
            Failure::Domain(message) => {
                eprintln!("error: {message}");
                ExitCode::from(1)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(failure) => failure.report(),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Validate { files } => validate(&files),
        Command::Query { what, subject, files } => query(what, &subject, &files),
        Command::Export { format, output, nanopub_style, include_qualifier_edges, files } => {
            export(format, output.as_deref(), nanopub_style, include_qualifier_edges, &files)
        }
        Command::Audit { depth_threshold, strict, files } => audit(depth_threshold, strict, &files),
    }
}

fn load(files: &[PathBuf]) -> Result<Document, Failure> {
    let mut doc = Document::default();
    for path in files {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
        let parsed = parse_canonical(&text)
            .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
        doc.absorb(parsed).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    }
    Ok(doc)
}

fn merge(doc: &Document) -> Result<Network, Failure> {
    let net = doc.to_network().map_err(|e| Failure::Domain(e.to_string()))?;
    for warning in net.warnings() {
        eprintln!("warning: {warning}");
    }
    Ok(net)
}

fn validate(files: &[PathBuf]) -> Result<ExitCode, Failure> {
    let doc = load(files)?;
    let reports = doc.validation_reports();
    let mut clean = true;
    for (id, report) in &reports {
        print!("{}", render_report(id, report));
        clean &= report.is_valid();
    }
    Ok(if clean { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn render_report(id: &Id, report: &ValidationReport) -> String {
    let mut out = String::new();
    if report.is_valid() {
        let _ = writeln!(out, "{id}: ok (minimal_form: {})", report.minimal_form);
    } else {
        let _ = writeln!(
            out,
            "{id}: {} error(s), {} warning(s) (minimal_form: {})",
            report.errors.len(),
            report.warnings.len(),
            report.minimal_form
        );
    }
    for finding in &report.errors {
        let _ = writeln!(out, "  error {finding}");
    }
    for finding in &report.warnings {
        let _ = writeln!(out, "  warning {finding}");
    }
    out
}

fn query(what: QueryKind, subject: &str, files: &[PathBuf]) -> Result<ExitCode, Failure> {
    let net = merge(&load(files)?)?;
    let subject_id = Id::from(subject);
    let mut out = String::new();
    match what {
        QueryKind::Lineage => {
            let lineage =
                net.claim_lineage(&subject_id).map_err(|e| Failure::Domain(e.to_string()))?;
            let _ = writeln!(
                out,
                "lineage of {subject}: depth {}, {} statement(s)",
                lineage.depth,
                lineage.nodes.len()
            );
            for node in &lineage.nodes {
                let _ = writeln!(out, "{node}");
            }
            if !lineage.edges.is_empty() {
                let _ = writeln!(out, "edges:");
                for (from, to) in &lineage.edges {
                    let _ = writeln!(out, "{from} -> {to}");
                }
            }
        }
        QueryKind::Grounding => {
            let grounding =
                net.grounding_level(&subject_id).map_err(|e| Failure::Domain(e.to_string()))?;
            let _ = writeln!(out, "grounding of {subject}: {}", grounding.level);
            let _ = writeln!(out, "witness: {}", join_path(&grounding.witness));
        }
        QueryKind::SupportGraph => {
            let graph =
                net.support_graph(subject).map_err(|e| Failure::Domain(e.to_string()))?;
            for id in &graph {
                let _ = writeln!(out, "{id}");
            }
        }
        QueryKind::ChallengeGraph => {
            let graph =
                net.challenge_graph(subject).map_err(|e| Failure::Domain(e.to_string()))?;
            for id in &graph {
                let _ = writeln!(out, "{id}");
            }
        }
        QueryKind::Similogs => {
            if net.representation(subject).is_none() {
                return Err(Failure::Domain(format!("no such statement: {subject}")));
            }
            for id in &net.similogs_of(&subject_id) {
                let _ = writeln!(out, "{id}");
            }
        }
    }
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn join_path(ids: &[Id]) -> String {
    ids.iter().map(Id::as_str).collect::<Vec<_>>().join(" -> ")
}

fn vocabulary() -> VocabularyMap {
    match std::env::var("MP_VOCAB_BASE") {
        Ok(base) if !base.is_empty() => VocabularyMap::with_namespace(base),
        _ => VocabularyMap::new(),
    }
}

fn export(
    format: Format,
    output: Option<&Path>,
    style: StyleArg,
    include_qualifier_edges: bool,
    files: &[PathBuf],
) -> Result<ExitCode, Failure> {
    let doc = load(files)?;
    let rendered = match format {
        Format::Mpjson => {
            emit_canonical(&doc).map_err(|e| Failure::Domain(e.to_string()))?
        }
        Format::Ttl => {
            let net = merge(&doc)?;
            emit_turtle(&net, &vocabulary()).map_err(|e| Failure::Domain(e.to_string()))?
        }
        Format::TrigNanopub => {
            let vocab = vocabulary();
            let mut parts = Vec::new();
            for mp in doc.micropublications() {
                parts.push(
                    export_nanopub(mp, &vocab, style.into())
                        .map_err(|e| Failure::Domain(e.to_string()))?,
                );
            }
            parts.join("\n")
        }
        Format::Dot => {
            let net = merge(&doc)?;
            emit_dot(&net, &DotOptions { include_qualifiers: include_qualifier_edges })
        }
    };
    match output {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?,
        None => print!("{rendered}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn audit(depth_threshold: usize, strict: bool, files: &[PathBuf]) -> Result<ExitCode, Failure> {
    let net = merge(&load(files)?)?;
    let report =
        net.distortion_report(depth_threshold).map_err(|e| Failure::Domain(e.to_string()))?;

    let mut rows: Vec<[String; 6]> = vec![[
        "claim".into(),
        "grounding".into(),
        "depth".into(),
        "self_citation".into(),
        "qualifier_loss".into(),
        "flagged".into(),
    ]];
    for claim in &report.claims {
        let losses = if claim.qualifier_loss.is_empty() {
            "-".to_owned()
        } else {
            claim
                .qualifier_loss
                .iter()
                .map(|(richer, poorer)| format!("{richer}>{poorer}"))
                .collect::<Vec<_>>()
                .join(",")
        };
        rows.push([
            claim.claim.to_string(),
            claim.grounding.level.to_string(),
            claim.lineage_depth.to_string(),
            format!("{:.2}", claim.self_citation_ratio),
            losses,
            if claim.flagged { "yes".into() } else { "no".into() },
        ]);
    }
    let mut widths = [0usize; 6];
    for row in &rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in &rows {
        let line: Vec<String> =
            row.iter().enumerate().map(|(i, cell)| format!("{:<width$}", cell, width = widths[i])).collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    print!("{out}");

    let any_flagged = report.claims.iter().any(|c| c.flagged);
    Ok(if strict && any_flagged { ExitCode::from(1) } else { ExitCode::SUCCESS })
}
