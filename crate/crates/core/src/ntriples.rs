//! N-Triples ingestion and the TSV formats used for alignments, gold
//! standards and judged samples.
//!
//! The parser is line oriented and lenient: a malformed line is skipped and
//! counted rather than aborting the stream. [`load_ontology`] then applies a
//! configurable ceiling on the skipped fraction.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use log::{info, warn};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::store::{Ontology, Origin, StoreError, TermId, TermKind};

pub const RDF_TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
pub const RDFS_SUBCLASS_OF: &str = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
pub const RDFS_SUBPROPERTY_OF: &str = "http://www.w3.org/2000/01/rdf-schema#subPropertyOf";

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{path}: {skipped} of {lines} lines malformed, above the tolerated fraction {limit}")]
    TooManySkipped {
        path: PathBuf,
        skipped: usize,
        lines: usize,
        limit: f64,
    },
}

/// Subject or object of a parsed triple.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Iri(String),
    Blank(String),
    Literal {
        value: String,
        datatype: Option<String>,
        language: Option<String>,
    },
}

impl Node {
    pub fn literal(value: impl Into<String>) -> Node {
        Node::Literal {
            value: value.into(),
            datatype: None,
            language: None,
        }
    }

    /// Identifier used when interning: IRIs without brackets, blank nodes
    /// as `_:label`, literals as `"value"` plus any `^^<datatype>` or `@lang`.
    pub fn lexical(&self) -> String {
        match self {
            Node::Iri(iri) => iri.clone(),
            Node::Blank(b) => format!("_:{b}"),
            Node::Literal {
                value,
                datatype,
                language,
            } => match (datatype, language) {
                (Some(dt), _) => format!("\"{value}\"^^<{dt}>"),
                (None, Some(lang)) => format!("\"{value}\"@{lang}"),
                (None, None) => format!("\"{value}\""),
            },
        }
    }

    pub fn is_literal(&self) -> bool {
        matches!(self, Node::Literal { .. })
    }

    fn write_nt(&self, out: &mut String) {
        match self {
            Node::Iri(iri) => {
                out.push('<');
                out.push_str(iri);
                out.push('>');
            }
            Node::Blank(b) => {
                out.push_str("_:");
                out.push_str(b);
            }
            Node::Literal {
                value,
                datatype,
                language,
            } => {
                out.push('"');
                for c in value.chars() {
                    match c {
                        '"' => out.push_str("\\\""),
                        '\\' => out.push_str("\\\\"),
                        '\n' => out.push_str("\\n"),
                        '\r' => out.push_str("\\r"),
                        '\t' => out.push_str("\\t"),
                        c => out.push(c),
                    }
                }
                out.push('"');
                if let Some(dt) = datatype {
                    out.push_str("^^<");
                    out.push_str(dt);
                    out.push('>');
                } else if let Some(lang) = language {
                    out.push('@');
                    out.push_str(lang);
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LexicalTriple {
    pub subject: Node,
    pub predicate: String,
    pub object: Node,
}

impl LexicalTriple {
    pub fn new(subject: Node, predicate: impl Into<String>, object: Node) -> Self {
        LexicalTriple {
            subject,
            predicate: predicate.into(),
            object,
        }
    }

    /// One N-Triples line, without the trailing newline.
    pub fn to_ntriples(&self) -> String {
        let mut s = String::new();
        self.subject.write_nt(&mut s);
        s.push_str(" <");
        s.push_str(&self.predicate);
        s.push_str("> ");
        self.object.write_nt(&mut s);
        s.push_str(" .");
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError(pub &'static str);

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c == ' ' || c == '\t' {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.s[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn iri(&mut self) -> Result<String, SyntaxError> {
        if self.bump() != Some('<') {
            return Err(SyntaxError("expected '<'"));
        }
        let rest = &self.s[self.pos..];
        let end = rest.find('>').ok_or(SyntaxError("unterminated IRI"))?;
        let iri = &rest[..end];
        if iri.is_empty() || iri.contains(|c: char| c == ' ' || c == '<' || c == '"') {
            return Err(SyntaxError("invalid IRI"));
        }
        self.pos += end + 1;
        Ok(iri.to_string())
    }

    fn blank(&mut self) -> Result<String, SyntaxError> {
        if !self.s[self.pos..].starts_with("_:") {
            return Err(SyntaxError("expected blank node"));
        }
        self.pos += 2;
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_alphanumeric() || c == '_' || c == '-' || c == '.' {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        let label = self.s[start..self.pos].trim_end_matches('.');
        self.pos = start + label.len();
        if label.is_empty() {
            return Err(SyntaxError("empty blank node label"));
        }
        Ok(label.to_string())
    }

    fn literal(&mut self) -> Result<Node, SyntaxError> {
        self.bump();
        let mut value = String::new();
        loop {
            match self.bump() {
                None => return Err(SyntaxError("unterminated literal")),
                Some('"') => break,
                Some('\\') => match self.bump() {
                    Some('t') => value.push('\t'),
                    Some('b') => value.push('\u{8}'),
                    Some('n') => value.push('\n'),
                    Some('r') => value.push('\r'),
                    Some('f') => value.push('\u{c}'),
                    Some('"') => value.push('"'),
                    Some('\'') => value.push('\''),
                    Some('\\') => value.push('\\'),
                    Some('u') => value.push(self.hex_escape(4)?),
                    Some('U') => value.push(self.hex_escape(8)?),
                    _ => return Err(SyntaxError("invalid escape")),
                },
                Some(c) => value.push(c),
            }
        }
        let mut datatype = None;
        let mut language = None;
        if self.s[self.pos..].starts_with("^^") {
            self.pos += 2;
            datatype = Some(self.iri()?);
        } else if self.peek() == Some('@') {
            self.pos += 1;
            let start = self.pos;
            while let Some(c) = self.peek() {
                if c.is_ascii_alphanumeric() || c == '-' {
                    self.pos += 1;
                } else {
                    break;
                }
            }
            if self.pos == start {
                return Err(SyntaxError("empty language tag"));
            }
            language = Some(self.s[start..self.pos].to_string());
        }
        Ok(Node::Literal {
            value,
            datatype,
            language,
        })
    }

    fn hex_escape(&mut self, digits: usize) -> Result<char, SyntaxError> {
        let rest = &self.s[self.pos..];
        let hex = rest.get(..digits).ok_or(SyntaxError("short unicode escape"))?;
        let code = u32::from_str_radix(hex, 16).map_err(|_| SyntaxError("bad unicode escape"))?;
        self.pos += digits;
        char::from_u32(code).ok_or(SyntaxError("invalid code point"))
    }

    fn node(&mut self, allow_literal: bool) -> Result<Node, SyntaxError> {
        match self.peek() {
            Some('<') => self.iri().map(Node::Iri),
            Some('_') => self.blank().map(Node::Blank),
            Some('"') if allow_literal => self.literal(),
            _ => Err(SyntaxError("expected term")),
        }
    }
}

/// Parses one line. Blank lines and comments give `Ok(None)`.
pub fn parse_line(line: &str) -> Result<Option<LexicalTriple>, SyntaxError> {
    let trimmed = line.trim();
    if trimmed.is_empty() || trimmed.starts_with('#') {
        return Ok(None);
    }
    let mut c = Cursor { s: trimmed, pos: 0 };
    let subject = c.node(false)?;
    c.skip_ws();
    let predicate = c.iri()?;
    c.skip_ws();
    let object = c.node(true)?;
    c.skip_ws();
    if c.bump() != Some('.') {
        return Err(SyntaxError("missing final '.'"));
    }
    c.skip_ws();
    match c.peek() {
        None | Some('#') => Ok(Some(LexicalTriple {
            subject,
            predicate,
            object,
        })),
        Some(_) => Err(SyntaxError("trailing content")),
    }
}

/// Streaming N-Triples reader. Malformed or non-UTF-8 lines are skipped
/// and counted.
pub struct NTriplesReader<R> {
    reader: R,
    buf: Vec<u8>,
    line_no: usize,
    lines: usize,
    skipped: usize,
}

impl<R: BufRead> NTriplesReader<R> {
    pub fn new(reader: R) -> Self {
        NTriplesReader {
            reader,
            buf: Vec::new(),
            line_no: 0,
            lines: 0,
            skipped: 0,
        }
    }

    pub fn skipped(&self) -> usize {
        self.skipped
    }

    /// Non-blank, non-comment lines seen so far.
    pub fn lines(&self) -> usize {
        self.lines
    }

    fn next_triple(&mut self) -> io::Result<Option<LexicalTriple>> {
        loop {
            self.buf.clear();
            if self.reader.read_until(b'\n', &mut self.buf)? == 0 {
                return Ok(None);
            }
            self.line_no += 1;
            let Ok(line) = std::str::from_utf8(&self.buf) else {
                self.lines += 1;
                self.skipped += 1;
                warn!("line {}: invalid UTF-8", self.line_no);
                continue;
            };
            match parse_line(line) {
                Ok(None) => continue,
                Ok(Some(t)) => {
                    self.lines += 1;
                    return Ok(Some(t));
                }
                Err(e) => {
                    self.lines += 1;
                    self.skipped += 1;
                    log::debug!("line {}: {e}", self.line_no);
                }
            }
        }
    }
}

impl<R: BufRead> Iterator for NTriplesReader<R> {
    type Item = io::Result<LexicalTriple>;

    fn next(&mut self) -> Option<Self::Item> {
        self.next_triple().transpose()
    }
}

pub fn parse_ntriples<R: BufRead>(reader: R) -> NTriplesReader<R> {
    NTriplesReader::new(reader)
}

/// IRIs recognised as the schema vocabulary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Vocabulary {
    pub type_iris: Vec<String>,
    pub subclass_iris: Vec<String>,
    pub subproperty_iris: Vec<String>,
}

impl Default for Vocabulary {
    fn default() -> Self {
        Vocabulary {
            type_iris: vec![RDF_TYPE.into(), "rdf:type".into()],
            subclass_iris: vec![RDFS_SUBCLASS_OF.into(), "rdfs:subClassOf".into()],
            subproperty_iris: vec![RDFS_SUBPROPERTY_OF.into(), "rdfs:subPropertyOf".into()],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LoadOptions {
    pub vocabulary: Vocabulary,
    /// Loading aborts when more than this fraction of lines is malformed.
    pub max_skipped_fraction: f64,
}

impl Default for LoadOptions {
    fn default() -> Self {
        LoadOptions {
            vocabulary: Vocabulary::default(),
            max_skipped_fraction: 0.01,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LoadReport {
    pub triples: usize,
    pub skipped_lines: usize,
    pub rejected_statements: usize,
    /// Resources used both as a class and as an instance; kept as classes.
    pub class_instance_violations: usize,
}

/// Builds an ontology from lexical triples: classifies terms, adds
/// statements and schema edges, then closes under the schema.
pub fn build_ontology(
    triples: &[LexicalTriple],
    origin: Origin,
    vocabulary: &Vocabulary,
) -> (Ontology, LoadReport) {
    enum Role {
        Type,
        SubClass,
        SubProperty,
        Plain,
    }
    let role = |p: &str| {
        if vocabulary.type_iris.iter().any(|v| v == p) {
            Role::Type
        } else if vocabulary.subclass_iris.iter().any(|v| v == p) {
            Role::SubClass
        } else if vocabulary.subproperty_iris.iter().any(|v| v == p) {
            Role::SubProperty
        } else {
            Role::Plain
        }
    };

    let mut classes: HashSet<String> = HashSet::new();
    let mut relations: HashSet<String> = HashSet::new();
    for t in triples {
        match role(&t.predicate) {
            Role::Type => {
                if !t.object.is_literal() {
                    classes.insert(t.object.lexical());
                }
            }
            Role::SubClass => {
                classes.insert(t.subject.lexical());
                if !t.object.is_literal() {
                    classes.insert(t.object.lexical());
                }
            }
            Role::SubProperty => {
                relations.insert(t.subject.lexical());
                if !t.object.is_literal() {
                    relations.insert(t.object.lexical());
                }
            }
            Role::Plain => {
                relations.insert(t.predicate.clone());
            }
        }
    }

    let mut onto = Ontology::new(origin);
    let mut report = LoadReport {
        triples: triples.len(),
        ..LoadReport::default()
    };
    let mut violations: BTreeSet<String> = BTreeSet::new();

    let term = |onto: &mut Ontology, node: &Node| -> TermId {
        let lex = node.lexical();
        let kind = if node.is_literal() {
            TermKind::Literal
        } else if classes.contains(&lex) {
            TermKind::Class
        } else if relations.contains(&lex) {
            TermKind::Relation
        } else {
            TermKind::Instance
        };
        onto.intern(kind, &lex)
    };

    for t in triples {
        let outcome: Result<(), StoreError> = match role(&t.predicate) {
            Role::Type => {
                let s = term(&mut onto, &t.subject);
                let o = term(&mut onto, &t.object);
                if onto.kind(s) == TermKind::Class {
                    violations.insert(t.subject.lexical());
                }
                onto.add_type(s, o).map(|_| ())
            }
            Role::SubClass => {
                let s = term(&mut onto, &t.subject);
                let o = term(&mut onto, &t.object);
                onto.add_subclass(s, o).map(|_| ())
            }
            Role::SubProperty => match (&t.subject, &t.object) {
                (Node::Literal { .. }, _) | (_, Node::Literal { .. }) => {
                    Err(StoreError::MalformedStatement {
                        statement: t.to_ntriples(),
                        reason: "literal in subPropertyOf",
                    })
                }
                (s, o) => {
                    let s = onto.relation(&s.lexical());
                    let o = onto.relation(&o.lexical());
                    onto.add_subproperty(s, o);
                    Ok(())
                }
            },
            Role::Plain => {
                let s = term(&mut onto, &t.subject);
                let o = term(&mut onto, &t.object);
                let r = onto.relation(&t.predicate);
                if onto.kind(s) == TermKind::Class {
                    violations.insert(t.subject.lexical());
                }
                onto.add_statement(s, r, o).map(|_| ())
            }
        };
        if let Err(e) = outcome {
            report.rejected_statements += 1;
            warn!("{origin} ontology: rejected {e}");
        }
    }
    report.class_instance_violations = violations.len();
    if !violations.is_empty() {
        warn!(
            "{origin} ontology: {} classes also used as instances; kept as classes",
            violations.len()
        );
    }
    onto.close_under_schema();
    (onto, report)
}

/// Reads all lexical triples of one file, enforcing the skipped-line ceiling.
pub fn read_triples(path: &Path, max_skipped_fraction: f64) -> Result<(Vec<LexicalTriple>, usize), IoError> {
    let read_err = |source| IoError::Read {
        path: path.to_path_buf(),
        source,
    };
    let file = File::open(path).map_err(read_err)?;
    let mut reader = parse_ntriples(BufReader::new(file));
    let mut triples = Vec::new();
    for t in reader.by_ref() {
        triples.push(t.map_err(read_err)?);
    }
    let (skipped, lines) = (reader.skipped(), reader.lines());
    if skipped > 0 {
        warn!("{}: skipped {skipped} malformed lines", path.display());
        if skipped as f64 > max_skipped_fraction * lines as f64 {
            return Err(IoError::TooManySkipped {
                path: path.to_path_buf(),
                skipped,
                lines,
                limit: max_skipped_fraction,
            });
        }
    }
    Ok((triples, skipped))
}

/// Loads one ontology from one or more N-Triples files.
pub fn load_ontology(
    paths: &[PathBuf],
    origin: Origin,
    options: &LoadOptions,
) -> Result<(Ontology, LoadReport), IoError> {
    let mut triples = Vec::new();
    let mut skipped = 0;
    for p in paths {
        let (mut t, s) = read_triples(p, options.max_skipped_fraction)?;
        triples.append(&mut t);
        skipped += s;
    }
    let (onto, mut report) = build_ontology(&triples, origin, &options.vocabulary);
    report.skipped_lines = skipped;
    if onto.is_empty() {
        warn!("{origin} ontology is empty");
    }
    info!(
        "{origin} ontology: {} triples, {} statements, {} terms, {} relations",
        report.triples,
        onto.statement_count(),
        onto.term_count(),
        onto.relation_count()
    );
    Ok((onto, report))
}

// ---------------------------------------------------------------------------
// Alignment TSV

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlignmentKind {
    Instance,
    Relation,
    Class,
}

impl AlignmentKind {
    pub fn as_str(self) -> &'static str {
        match self {
            AlignmentKind::Instance => "instance",
            AlignmentKind::Relation => "relation",
            AlignmentKind::Class => "class",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "instance" => Some(AlignmentKind::Instance),
            "relation" => Some(AlignmentKind::Relation),
            "class" => Some(AlignmentKind::Class),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    LeftInRight,
    RightInLeft,
    Equivalence,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::LeftInRight => "left⊆right",
            Direction::RightInLeft => "right⊆left",
            Direction::Equivalence => "equivalence",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "left⊆right" => Some(Direction::LeftInRight),
            "right⊆left" => Some(Direction::RightInLeft),
            "equivalence" => Some(Direction::Equivalence),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlignmentRow {
    pub left: String,
    pub right: String,
    pub score: f64,
    pub kind: AlignmentKind,
    pub direction: Direction,
}

impl AlignmentRow {
    pub fn is_consistent(&self) -> bool {
        (0.0..=1.0).contains(&self.score)
            && (self.kind != AlignmentKind::Instance || self.direction == Direction::Equivalence)
    }
}

/// Sorts rows by kind, then left term, then descending score (right term
/// breaks remaining ties).
pub fn sort_rows(rows: &mut [AlignmentRow]) {
    rows.sort_by(|a, b| {
        a.kind
            .cmp(&b.kind)
            .then_with(|| a.left.cmp(&b.left))
            .then_with(|| b.score.total_cmp(&a.score))
            .then_with(|| a.right.cmp(&b.right))
            .then_with(|| a.direction.cmp(&b.direction))
    });
}

pub fn format_row(row: &AlignmentRow) -> String {
    format!(
        "{}\t{}\t{:.6}\t{}\t{}",
        row.left,
        row.right,
        row.score,
        row.kind.as_str(),
        row.direction.as_str()
    )
}

pub fn write_alignment<W: Write>(rows: impl IntoIterator<Item = AlignmentRow>, mut out: W) -> io::Result<()> {
    let mut rows: Vec<AlignmentRow> = rows.into_iter().collect();
    sort_rows(&mut rows);
    for row in &rows {
        writeln!(out, "{}", format_row(row))?;
    }
    out.flush()
}

pub fn write_alignment_file(rows: impl IntoIterator<Item = AlignmentRow>, path: &Path) -> Result<(), IoError> {
    let write_err = |source| IoError::Write {
        path: path.to_path_buf(),
        source,
    };
    let file = File::create(path).map_err(write_err)?;
    write_alignment(rows, BufWriter::new(file)).map_err(write_err)
}

/// Reads alignment rows; malformed lines are skipped and counted.
pub fn read_alignment<R: BufRead>(reader: R) -> io::Result<(Vec<AlignmentRow>, usize)> {
    let mut rows = Vec::new();
    let mut skipped = 0;
    for line in reader.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        let row = match cols.as_slice() {
            [left, right, score, kind, direction] => (|| {
                Some(AlignmentRow {
                    left: left.to_string(),
                    right: right.to_string(),
                    score: score.parse().ok()?,
                    kind: AlignmentKind::parse(kind)?,
                    direction: Direction::parse(direction)?,
                })
            })(),
            _ => None,
        };
        match row {
            Some(r) if r.is_consistent() => rows.push(r),
            _ => skipped += 1,
        }
    }
    Ok((rows, skipped))
}

pub fn read_alignment_file(path: &Path) -> Result<(Vec<AlignmentRow>, usize), IoError> {
    let read_err = |source| IoError::Read {
        path: path.to_path_buf(),
        source,
    };
    let file = File::open(path).map_err(read_err)?;
    read_alignment(BufReader::new(file)).map_err(read_err)
}

// ---------------------------------------------------------------------------
// Gold standards and judged samples

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GoldStandard {
    pub pairs: BTreeSet<(String, String)>,
    pub skipped: usize,
}

fn strip_brackets(s: &str) -> &str {
    let s = s.trim();
    s.strip_prefix('<')
        .and_then(|t| t.strip_suffix('>'))
        .unwrap_or(s)
}

pub fn read_gold<R: BufRead>(reader: R) -> io::Result<GoldStandard> {
    let mut gold = GoldStandard::default();
    for line in reader.lines() {
        let line = line?;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let mut cols = line.split('\t');
        match (cols.next(), cols.next()) {
            (Some(l), Some(r)) if !l.trim().is_empty() && !r.trim().is_empty() => {
                gold.pairs
                    .insert((strip_brackets(l).to_string(), strip_brackets(r).to_string()));
            }
            _ => gold.skipped += 1,
        }
    }
    Ok(gold)
}

pub fn load_gold(path: &Path) -> Result<GoldStandard, IoError> {
    let read_err = |source| IoError::Read {
        path: path.to_path_buf(),
        source,
    };
    let file = File::open(path).map_err(read_err)?;
    let gold = read_gold(BufReader::new(file)).map_err(read_err)?;
    if gold.skipped > 0 {
        warn!("{}: skipped {} gold rows", path.display(), gold.skipped);
    }
    Ok(gold)
}

/// A manually judged assignment: `left<TAB>right<TAB>label`, label one of
/// `1/0`, `true/false`, `yes/no`, `correct/incorrect`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Judgment {
    pub left: String,
    pub right: String,
    pub correct: bool,
}

pub fn read_judgments<R: BufRead>(reader: R) -> io::Result<(Vec<Judgment>, usize)> {
    let mut out = Vec::new();
    let mut skipped = 0;
    for line in reader.lines() {
        let line = line?;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        let label = cols.get(2).map(|s| s.trim().to_ascii_lowercase());
        let correct = match label.as_deref() {
            Some("1" | "true" | "correct" | "yes") => Some(true),
            Some("0" | "false" | "incorrect" | "no") => Some(false),
            _ => None,
        };
        match correct {
            Some(correct) => out.push(Judgment {
                left: strip_brackets(cols[0]).to_string(),
                right: strip_brackets(cols[1]).to_string(),
                correct,
            }),
            None => skipped += 1,
        }
    }
    Ok((out, skipped))
}
