//! Document data model and line-oriented corpus I/O.
//!
//! A corpus file is UTF-8 with one JSON record per line. Filter results
//! are written as TSV with the header `doc_id\tdecision\tfailed_rules`.

use std::collections::HashSet;
use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Where a document came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Repository,
    Web,
    Arxiv,
    Books,
    WikiDump,
    Synthetic,
    #[default]
    Unknown,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Provenance::Repository => "repository",
            Provenance::Web => "web",
            Provenance::Arxiv => "arxiv",
            Provenance::Books => "books",
            Provenance::WikiDump => "wikidump",
            Provenance::Synthetic => "synthetic",
            Provenance::Unknown => "unknown",
        };
        f.write_str(s)
    }
}

impl FromStr for Provenance {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "repository" => Ok(Provenance::Repository),
            "web" => Ok(Provenance::Web),
            "arxiv" => Ok(Provenance::Arxiv),
            "books" => Ok(Provenance::Books),
            "wikidump" => Ok(Provenance::WikiDump),
            "synthetic" => Ok(Provenance::Synthetic),
            "unknown" => Ok(Provenance::Unknown),
            other => Err(Error::Config(format!("unknown provenance `{other}`"))),
        }
    }
}

/// The seven-domain taxonomy. Every classified document carries exactly
/// one label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DomainLabel {
    Web,
    Code,
    CodeNl,
    Math,
    Wikipedia,
    Books,
    Multilingual,
}

impl DomainLabel {
    pub const ALL: [DomainLabel; 7] = [
        DomainLabel::Web,
        DomainLabel::Code,
        DomainLabel::CodeNl,
        DomainLabel::Math,
        DomainLabel::Wikipedia,
        DomainLabel::Books,
        DomainLabel::Multilingual,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            DomainLabel::Web => "web",
            DomainLabel::Code => "code",
            DomainLabel::CodeNl => "code_nl",
            DomainLabel::Math => "math",
            DomainLabel::Wikipedia => "wikipedia",
            DomainLabel::Books => "books",
            DomainLabel::Multilingual => "multilingual",
        }
    }
}

impl fmt::Display for DomainLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DomainLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "web" => Ok(DomainLabel::Web),
            "code" => Ok(DomainLabel::Code),
            "code_nl" | "codenl" | "code-nl" => Ok(DomainLabel::CodeNl),
            "math" => Ok(DomainLabel::Math),
            "wikipedia" => Ok(DomainLabel::Wikipedia),
            "books" => Ok(DomainLabel::Books),
            "multilingual" => Ok(DomainLabel::Multilingual),
            other => Err(Error::Config(format!("unknown domain label `{other}`"))),
        }
    }
}

/// One corpus record. Immutable after construction; cheap to clone and
/// safe to share across workers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub id: String,
    pub text: String,
    #[serde(default)]
    pub provenance: Provenance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub language_hint: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<DomainLabel>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quality_score: Option<f64>,
}

impl Document {
    pub fn new(id: impl Into<String>, text: impl Into<String>) -> Self {
        Document {
            id: id.into(),
            text: text.into(),
            provenance: Provenance::Unknown,
            language_hint: None,
            domain: None,
            quality_score: None,
        }
    }

    pub fn with_provenance(mut self, p: Provenance) -> Self {
        self.provenance = p;
        self
    }

    pub fn with_language(mut self, lang: impl Into<String>) -> Self {
        self.language_hint = Some(lang.into());
        self
    }

    pub fn with_quality(mut self, score: f64) -> Self {
        self.quality_score = Some(score);
        self
    }
}

/// Number of maximal non-whitespace runs in `text`. This is the token
/// definition used by every length threshold in the toolkit.
pub fn count_tokens(text: &str) -> usize {
    text.split_whitespace().count()
}

fn field_str(obj: &serde_json::Map<String, serde_json::Value>, key: &str, line: usize) -> Result<Option<String>> {
    match obj.get(key) {
        None | Some(serde_json::Value::Null) => Ok(None),
        Some(serde_json::Value::String(s)) => Ok(Some(s.clone())),
        Some(_) => Err(Error::Schema { line, field: key.to_string() }),
    }
}

/// Parse one line of the corpus format into a [`Document`].
///
/// Malformed JSON is a parse error; a well-formed record missing `id` or
/// `text` (or carrying a wrong-typed field) is a schema error naming the
/// field.
pub fn parse_document_line(line: &str) -> Result<Document> {
    parse_document_line_at(line, 0)
}

/// Like [`parse_document_line`] but reports `line_no` in errors.
pub fn parse_document_line_at(line: &str, line_no: usize) -> Result<Document> {
    let value: serde_json::Value = serde_json::from_str(line).map_err(|e| Error::Parse {
        line: line_no,
        msg: e.to_string(),
    })?;
    let obj = value.as_object().ok_or_else(|| Error::Parse {
        line: line_no,
        msg: "record is not a JSON object".to_string(),
    })?;

    let id = field_str(obj, "id", line_no)?
        .filter(|s| !s.is_empty())
        .ok_or_else(|| Error::Schema { line: line_no, field: "id".to_string() })?;
    let text = field_str(obj, "text", line_no)?
        .ok_or_else(|| Error::Schema { line: line_no, field: "text".to_string() })?;

    let provenance = match field_str(obj, "provenance", line_no)? {
        Some(s) => s.parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("invalid value for field `provenance`: `{s}`"),
        })?,
        None => Provenance::Unknown,
    };
    let language_hint = field_str(obj, "language_hint", line_no)?;
    let domain = match field_str(obj, "domain", line_no)? {
        Some(s) => Some(s.parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("invalid value for field `domain`: `{s}`"),
        })?),
        None => None,
    };
    let quality_score = match obj.get("quality_score") {
        None | Some(serde_json::Value::Null) => None,
        Some(v) => {
            let q = v.as_f64().ok_or_else(|| Error::Schema {
                line: line_no,
                field: "quality_score".to_string(),
            })?;
            if !(0.0..=1.0).contains(&q) {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("field `quality_score` out of range: {q}"),
                });
            }
            Some(q)
        }
    };

    Ok(Document { id, text, provenance, language_hint, domain, quality_score })
}

/// Serialize a document back to one corpus line (no trailing newline).
pub fn write_document_line(doc: &Document) -> String {
    serde_json::to_string(doc).expect("document serialization cannot fail")
}

/// Streaming corpus reader that enforces unique, non-empty ids.
pub struct CorpusReader<R: BufRead> {
    reader: R,
    seen: HashSet<String>,
    line_no: usize,
}

impl<R: BufRead> CorpusReader<R> {
    pub fn new(reader: R) -> Self {
        CorpusReader { reader, seen: HashSet::new(), line_no: 0 }
    }
}

impl<R: BufRead> Iterator for CorpusReader<R> {
    type Item = Result<Document>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let mut buf = String::new();
            match self.reader.read_line(&mut buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => return Some(Err(e.into())),
            }
            self.line_no += 1;
            let line = buf.trim_end_matches(['\n', '\r']);
            if line.trim().is_empty() {
                continue;
            }
            return Some(parse_document_line_at(line, self.line_no).and_then(|doc| {
                if !self.seen.insert(doc.id.clone()) {
                    Err(Error::DuplicateId(doc.id))
                } else {
                    Ok(doc)
                }
            }));
        }
    }
}

/// Read a whole corpus into memory.
pub fn read_corpus<R: BufRead>(reader: R) -> Result<Vec<Document>> {
    CorpusReader::new(reader).collect()
}

/// Per-rule outcome recorded while filtering a document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RuleVerdict {
    pub rule_id: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub measured: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Keep,
    Discard,
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Keep => "keep",
            Decision::Discard => "discard",
        })
    }
}

/// Filtering outcome for one document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FilterReport {
    pub doc_id: String,
    pub verdicts: Vec<RuleVerdict>,
    pub decision: Decision,
    pub discard_reasons: Vec<String>,
}

/// Header for report TSV files.
pub const REPORT_HEADER: &str = "doc_id\tdecision\tfailed_rules";

impl FilterReport {
    /// Build a report from verdicts; the decision is Discard iff any
    /// rule failed, and reasons are listed in verdict order.
    pub fn from_verdicts(doc_id: impl Into<String>, verdicts: Vec<RuleVerdict>) -> Self {
        let discard_reasons: Vec<String> = verdicts
            .iter()
            .filter(|v| !v.pass)
            .map(|v| v.rule_id.clone())
            .collect();
        let decision = if discard_reasons.is_empty() { Decision::Keep } else { Decision::Discard };
        FilterReport { doc_id: doc_id.into(), verdicts, decision, discard_reasons }
    }
}

fn sanitize_tsv(field: &str) -> String {
    field.replace(['\t', '\n', '\r'], " ")
}

/// One TSV line for a report: `doc_id`, decision, semicolon-joined
/// failed rule ids (`-` when none). Exactly two tabs, always.
pub fn write_report_line(report: &FilterReport) -> String {
    let reasons = if report.discard_reasons.is_empty() {
        "-".to_string()
    } else {
        sanitize_tsv(&report.discard_reasons.join(";"))
    };
    format!("{}\t{}\t{}", sanitize_tsv(&report.doc_id), report.decision, reasons)
}

/// Write a full report file with header.
pub fn write_report_file<W: Write>(mut w: W, reports: &[FilterReport]) -> Result<()> {
    writeln!(w, "{REPORT_HEADER}")?;
    for r in reports {
        writeln!(w, "{}", write_report_line(r))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_basic_record() {
        let doc = parse_document_line(r#"{"id":"d1","text":"hello","provenance":"web"}"#).unwrap();
        assert_eq!(doc.id, "d1");
        assert_eq!(doc.text, "hello");
        assert_eq!(doc.provenance, Provenance::Web);
        assert!(doc.language_hint.is_none());
        assert!(doc.quality_score.is_none());
    }

    #[test]
    fn parse_missing_id_is_schema_error() {
        let err = parse_document_line(r#"{"text":"hello"}"#).unwrap_err();
        match err {
            Error::Schema { field, .. } => assert_eq!(field, "id"),
            other => panic!("expected schema error, got {other:?}"),
        }
    }

    #[test]
    fn parse_empty_id_is_schema_error() {
        assert!(matches!(
            parse_document_line(r#"{"id":"","text":"x"}"#),
            Err(Error::Schema { .. })
        ));
    }

    #[test]
    fn parse_bad_escape_is_parse_error() {
        // lone surrogate escape is not valid JSON text
        let err = parse_document_line(r#"{"id":"d1","text":"\uD800"}"#).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn parse_bad_provenance_names_field() {
        let err = parse_document_line(r#"{"id":"d1","text":"x","provenance":"webz"}"#).unwrap_err();
        match err {
            Error::Parse { msg, .. } => assert!(msg.contains("provenance"), "{msg}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn token_counting() {
        assert_eq!(count_tokens("a b  c"), 3);
        assert_eq!(count_tokens(""), 0);
        assert_eq!(count_tokens("x\n\ty z"), 3);
    }

    #[test]
    fn report_lines() {
        let keep = FilterReport::from_verdicts(
            "d1",
            vec![RuleVerdict { rule_id: "r1".into(), pass: true, measured: None }],
        );
        assert_eq!(write_report_line(&keep), "d1\tkeep\t-");

        let discard = FilterReport::from_verdicts(
            "d2",
            vec![
                RuleVerdict { rule_id: "r1".into(), pass: false, measured: None },
                RuleVerdict { rule_id: "r2".into(), pass: false, measured: None },
            ],
        );
        assert_eq!(write_report_line(&discard), "d2\tdiscard\tr1;r2");
    }

    #[test]
    fn duplicate_ids_rejected() {
        let data = "{\"id\":\"a\",\"text\":\"x\"}\n{\"id\":\"a\",\"text\":\"y\"}\n";
        let err = read_corpus(data.as_bytes()).unwrap_err();
        assert!(matches!(err, Error::DuplicateId(_)));
    }

    proptest! {
        #[test]
        fn roundtrip_preserves_fields(
            id in "[a-z0-9]{1,12}",
            text in ".{0,64}",
            score in proptest::option::of(0.0..=1.0f64),
        ) {
            let mut doc = Document::new(id, text).with_provenance(Provenance::Arxiv);
            doc.quality_score = score;
            let line = write_document_line(&doc);
            let back = parse_document_line(&line).unwrap();
            prop_assert_eq!(doc, back);
        }

        #[test]
        fn token_concat_additive(a in "\\S{1,8}( \\S{1,8}){0,5}", b in "\\S{1,8}( \\S{1,8}){0,5}") {
            let joined = format!("{a} {b}");
            prop_assert_eq!(count_tokens(&joined), count_tokens(&a) + count_tokens(&b));
        }

        #[test]
        fn report_line_has_two_tabs(reasons in proptest::collection::vec("[a-z_]{1,10}", 0..4)) {
            let verdicts: Vec<RuleVerdict> = reasons
                .iter()
                .map(|r| RuleVerdict { rule_id: r.clone(), pass: false, measured: None })
                .collect();
            let report = FilterReport::from_verdicts("doc", verdicts);
            let line = write_report_line(&report);
            prop_assert_eq!(line.matches('\t').count(), 2);
        }
    }
}
