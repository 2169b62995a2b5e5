//! Stand-off contextualization of representations within source documents.
//!
//! An annotation never lives inside the document it describes; it binds to a
//! span of text through selectors. A quote selector names the exact text
//! with optional disambiguating context, a position selector names a
//! character range. All offsets count Unicode scalar values, so they are
//! invariant under byte-encoding changes of the same text.

use thiserror::Error;

use crate::ident::Id;

/// Default cap on how far [`make_target`] grows prefix/suffix context when
/// hunting for a unique match.
pub const DEFAULT_CONTEXT_CAP: usize = 32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnchorError {
    #[error("selector matches nothing")]
    NotFound,
    #[error("selector is ambiguous: {0} matches survive filtering")]
    Ambiguous(usize),
    #[error("span {start}..{end} out of range for document of length {len}")]
    OutOfRange { start: usize, end: usize, len: usize },
    #[error("quoted text cannot be disambiguated within the context budget")]
    CannotDisambiguate,
    #[error("anchor lost: {0}")]
    LostAnchor(String),
    #[error("invalid selector: {0}")]
    InvalidSelector(String),
    #[error("selectors disagree: {0:?} vs {1:?}")]
    SelectorDisagreement((usize, usize), (usize, usize)),
}

/// A mechanism for selecting a span of a text document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selector {
    /// The exact quoted text, with optional prefix/suffix context used to
    /// pick one occurrence when the quote alone is ambiguous.
    TextQuote { exact: String, prefix: Option<String>, suffix: Option<String> },
    /// A half-open character range `start..end`, `end > start`.
    TextPosition { start: usize, end: usize },
}

impl Selector {
    pub fn text_quote(
        exact: impl Into<String>,
        prefix: Option<String>,
        suffix: Option<String>,
    ) -> Result<Selector, AnchorError> {
        let exact = exact.into();
        if exact.is_empty() {
            return Err(AnchorError::InvalidSelector("empty exact text".into()));
        }
        Ok(Selector::TextQuote { exact, prefix, suffix })
    }

    pub fn text_position(start: usize, end: usize) -> Result<Selector, AnchorError> {
        if end <= start {
            return Err(AnchorError::InvalidSelector(format!("end {end} must exceed start {start}")));
        }
        Ok(Selector::TextPosition { start, end })
    }

    fn check(&self) -> Result<(), AnchorError> {
        match self {
            Selector::TextQuote { exact, .. } if exact.is_empty() => {
                Err(AnchorError::InvalidSelector("empty exact text".into()))
            }
            Selector::TextPosition { start, end } if end <= start => Err(
                AnchorError::InvalidSelector(format!("end {end} must exceed start {start}")),
            ),
            _ => Ok(()),
        }
    }
}

/// A document identifier plus the selectors binding a representation to a
/// span of its text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotationTarget {
    pub document_id: Id,
    pub selectors: Vec<Selector>,
}

impl AnnotationTarget {
    /// Resolves every selector against `document` and checks that they all
    /// agree on one span.
    pub fn resolve(&self, document: &str) -> Result<(usize, usize), AnchorError> {
        let mut span: Option<(usize, usize)> = None;
        if self.selectors.is_empty() {
            return Err(AnchorError::InvalidSelector("target carries no selectors".into()));
        }
        for sel in &self.selectors {
            let found = resolve_selector(document, sel)?;
            match span {
                None => span = Some(found),
                Some(prev) if prev != found => {
                    return Err(AnchorError::SelectorDisagreement(prev, found))
                }
                Some(_) => {}
            }
        }
        Ok(span.expect("at least one selector"))
    }

    fn quote_selector(&self) -> Option<&Selector> {
        self.selectors.iter().find(|s| matches!(s, Selector::TextQuote { .. }))
    }
}

/// Resolves one selector to the unique span it names.
///
/// Quote matching scans every occurrence (including overlapping ones) and
/// filters by prefix/suffix; exactly one survivor is required.
pub fn resolve_selector(document: &str, selector: &Selector) -> Result<(usize, usize), AnchorError> {
    selector.check()?;
    let chars: Vec<char> = document.chars().collect();
    match selector {
        Selector::TextPosition { start, end } => {
            if *end > chars.len() {
                return Err(AnchorError::OutOfRange { start: *start, end: *end, len: chars.len() });
            }
            Ok((*start, *end))
        }
        Selector::TextQuote { exact, prefix, suffix } => {
            let needle: Vec<char> = exact.chars().collect();
            let matches = filtered_occurrences(&chars, &needle, prefix.as_deref(), suffix.as_deref());
            match matches.len() {
                0 => Err(AnchorError::NotFound),
                1 => Ok(matches[0]),
                n => Err(AnchorError::Ambiguous(n)),
            }
        }
    }
}

/// Builds a target for `span` carrying both a position selector and a quote
/// selector whose context windows are the smallest (grown symmetrically, up
/// to `DEFAULT_CONTEXT_CAP` characters) that make the quote unique.
pub fn make_target(
    document: &str,
    document_id: impl Into<Id>,
    span: (usize, usize),
) -> Result<AnnotationTarget, AnchorError> {
    make_target_with(document, document_id, span, DEFAULT_CONTEXT_CAP)
}

/// [`make_target`] with a custom context cap.
pub fn make_target_with(
    document: &str,
    document_id: impl Into<Id>,
    span: (usize, usize),
    context_cap: usize,
) -> Result<AnnotationTarget, AnchorError> {
    let chars: Vec<char> = document.chars().collect();
    let (start, end) = span;
    if end > chars.len() || end <= start {
        return Err(AnchorError::OutOfRange { start, end, len: chars.len() });
    }
    let exact: String = chars[start..end].iter().collect();
    let needle: Vec<char> = exact.chars().collect();

    for grow in 0..=context_cap {
        let prefix_start = start.saturating_sub(grow);
        let suffix_end = (end + grow).min(chars.len());
        let prefix: String = chars[prefix_start..start].iter().collect();
        let suffix: String = chars[end..suffix_end].iter().collect();
        let p = if prefix.is_empty() { None } else { Some(prefix) };
        let s = if suffix.is_empty() { None } else { Some(suffix) };
        let survivors = filtered_occurrences(&chars, &needle, p.as_deref(), s.as_deref());
        if survivors == vec![(start, end)] {
            return Ok(AnnotationTarget {
                document_id: document_id.into(),
                selectors: vec![
                    Selector::TextQuote { exact, prefix: p, suffix: s },
                    Selector::TextPosition { start, end },
                ],
            });
        }
        // No point growing further once the windows already span the
        // document.
        if prefix_start == 0 && suffix_end == chars.len() {
            break;
        }
    }
    Err(AnchorError::CannotDisambiguate)
}

/// Re-binds `target` from `old_text` to `new_text`.
///
/// The quote selector must resolve uniquely in the new text; the position
/// selector is recomputed from the new location. Fails with `LostAnchor`
/// when the quoted text disappeared or no longer has a unique home.
pub fn reanchor(
    old_text: &str,
    new_text: &str,
    target: &AnnotationTarget,
) -> Result<AnnotationTarget, AnchorError> {
    target.resolve(old_text)?;
    let quote = target
        .quote_selector()
        .ok_or_else(|| AnchorError::LostAnchor("target has no quote selector".into()))?;
    match resolve_selector(new_text, quote) {
        Ok((start, end)) => Ok(AnnotationTarget {
            document_id: target.document_id.clone(),
            selectors: vec![quote.clone(), Selector::TextPosition { start, end }],
        }),
        Err(AnchorError::NotFound) => {
            Err(AnchorError::LostAnchor("quoted text no longer present".into()))
        }
        Err(AnchorError::Ambiguous(n)) => {
            Err(AnchorError::LostAnchor(format!("quoted text now has {n} candidate spans")))
        }
        Err(other) => Err(other),
    }
}

/// Every occurrence of `needle` in `chars` (overlapping included) whose
/// surrounding text matches the given prefix and suffix.
fn filtered_occurrences(
    chars: &[char],
    needle: &[char],
    prefix: Option<&str>,
    suffix: Option<&str>,
) -> Vec<(usize, usize)> {
    if needle.is_empty() || needle.len() > chars.len() {
        return Vec::new();
    }
    let prefix: Vec<char> = prefix.unwrap_or("").chars().collect();
    let suffix: Vec<char> = suffix.unwrap_or("").chars().collect();
    let mut spans = Vec::new();
    for start in 0..=(chars.len() - needle.len()) {
        let end = start + needle.len();
        if chars[start..end] != *needle {
            continue;
        }
        if prefix.len() > start || chars[start - prefix.len()..start] != *prefix {
            continue;
        }
        if end + suffix.len() > chars.len() || chars[end..end + suffix.len()] != *suffix {
            continue;
        }
        spans.push((start, end));
    }
    spans
}

#[cfg(test)]
mod tests {
    use super::*;

    const DOC: &str = "the cat sat on the mat";

    #[test]
    fn quote_with_context_resolves() {
        let sel = Selector::text_quote("cat", Some("the ".into()), Some(" sat".into())).unwrap();
        assert_eq!(resolve_selector(DOC, &sel).unwrap(), (4, 7));
    }

    #[test]
    fn ambiguous_quote_without_context() {
        let sel = Selector::text_quote("aba", None, None).unwrap();
        assert_eq!(resolve_selector("aba aba", &sel), Err(AnchorError::Ambiguous(2)));
    }

    #[test]
    fn overlapping_occurrences_count_toward_ambiguity() {
        let sel = Selector::text_quote("aa", None, None).unwrap();
        assert_eq!(resolve_selector("aaa", &sel), Err(AnchorError::Ambiguous(2)));
    }

    #[test]
    fn position_selector_resolves_directly() {
        let sel = Selector::text_position(4, 7).unwrap();
        assert_eq!(resolve_selector(DOC, &sel).unwrap(), (4, 7));
    }

    #[test]
    fn position_selector_out_of_range() {
        let sel = Selector::text_position(4, 99).unwrap();
        assert!(matches!(resolve_selector(DOC, &sel), Err(AnchorError::OutOfRange { .. })));
    }

    #[test]
    fn offsets_count_scalar_values_not_bytes() {
        let doc = "αβγ δεζ αβγ τέλος";
        // second "αβγ" starts at char 8
        let target = make_target(doc, "doc", (8, 11)).unwrap();
        assert_eq!(target.resolve(doc).unwrap(), (8, 11));
        let Selector::TextQuote { exact, .. } = &target.selectors[0] else {
            panic!("quote selector first");
        };
        assert_eq!(exact, "αβγ");
    }

    #[test]
    fn make_target_resolves_back_to_the_span() {
        let target = make_target(DOC, "doc", (4, 7)).unwrap();
        assert_eq!(target.resolve(DOC).unwrap(), (4, 7));
        for sel in &target.selectors {
            assert_eq!(resolve_selector(DOC, sel).unwrap(), (4, 7));
        }
    }

    #[test]
    fn whole_document_span_needs_no_context() {
        let target = make_target(DOC, "doc", (0, DOC.chars().count())).unwrap();
        let Selector::TextQuote { prefix, suffix, .. } = &target.selectors[0] else {
            panic!("quote selector first");
        };
        assert!(prefix.is_none() && suffix.is_none());
    }

    #[test]
    fn repeated_text_beyond_budget_cannot_disambiguate() {
        let line = "all work and no play makes jack a dull boy. ";
        let doc = line.repeat(4);
        // a span inside the second repetition; identical context everywhere
        let start = line.chars().count() + 4;
        let err = make_target(&doc, "doc", (start, start + 4)).unwrap_err();
        assert_eq!(err, AnchorError::CannotDisambiguate);
    }

    #[test]
    fn reanchor_shifts_with_inserted_text() {
        let target = make_target(DOC, "doc", (4, 7)).unwrap();
        let new_doc = format!("A new opening paragraph. {DOC}");
        let shifted = reanchor(DOC, &new_doc, &target).unwrap();
        let offset = "A new opening paragraph. ".chars().count();
        assert_eq!(shifted.resolve(&new_doc).unwrap(), (4 + offset, 7 + offset));
    }

    #[test]
    fn reanchor_fails_when_the_span_is_deleted() {
        let target = make_target(DOC, "doc", (4, 7)).unwrap();
        let err = reanchor(DOC, "the sat on the mat", &target).unwrap_err();
        assert!(matches!(err, AnchorError::LostAnchor(_)));
    }

    #[test]
    fn reanchor_is_identity_on_unchanged_documents() {
        let target = make_target(DOC, "doc", (4, 7)).unwrap();
        let back = reanchor(DOC, DOC, &target).unwrap();
        assert_eq!(back, target);
        let again = reanchor(DOC, DOC, &back).unwrap();
        assert_eq!(again, back);
    }

    #[test]
    fn disagreeing_selectors_are_rejected() {
        let target = AnnotationTarget {
            document_id: Id::from("doc"),
            selectors: vec![
                Selector::text_quote("cat", None, None).unwrap(),
                Selector::text_position(0, 3).unwrap(),
            ],
        };
        assert!(matches!(target.resolve(DOC), Err(AnchorError::SelectorDisagreement(..))));
    }
}
