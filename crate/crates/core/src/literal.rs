//! A-priori equality of literals.
//!
//! Literal equalities are clamped: they are computed once and never updated
//! by the fixpoint. Matching is driven by a blocking key (two literals can
//! only be equal when their keys coincide), so the engine never enumerates
//! all literal pairs.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::store::{Ontology, TermId, TermKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LiteralMode {
    /// Identical after dropping quotes, datatype and language tags.
    #[default]
    Strict,
    /// Additionally keeps only alphanumeric characters, lowercased.
    AlnumLower,
}

impl LiteralMode {
    pub fn as_str(self) -> &'static str {
        match self {
            LiteralMode::Strict => "strict",
            LiteralMode::AlnumLower => "alnum-lower",
        }
    }
}

impl fmt::Display for LiteralMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LiteralMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "strict" | "strict-identity" => Ok(LiteralMode::Strict),
            "alnum-lower" => Ok(LiteralMode::AlnumLower),
            _ => Err(format!("unknown literal mode `{s}`")),
        }
    }
}

/// Drops the surrounding quotes and any `^^datatype` or `@lang` suffix.
/// Unquoted input is only trimmed.
pub fn strip_tags(lexical: &str) -> &str {
    let s = lexical.trim();
    if let Some(rest) = s.strip_prefix('"') {
        if let Some(end) = rest.rfind('"') {
            let tail = &rest[end + 1..];
            if tail.is_empty() || tail.starts_with("^^") || tail.starts_with('@') {
                return rest[..end].trim();
            }
        }
    }
    s
}

pub fn normalize(lexical: &str, mode: LiteralMode) -> String {
    let bare = strip_tags(lexical);
    match mode {
        LiteralMode::Strict => bare.to_string(),
        LiteralMode::AlnumLower => bare
            .chars()
            .filter(|c| c.is_alphanumeric())
            .flat_map(char::to_lowercase)
            .collect(),
    }
}

/// Pluggable literal comparison. `key` must be equal for any two literals
/// that can score above zero.
pub trait LiteralMatcher: Send + Sync {
    fn key(&self, lexical: &str) -> String;

    /// Probability in `[0, 1]` that two literals sharing a key are equal.
    fn score(&self, a: &str, b: &str) -> f64 {
        if self.key(a) == self.key(b) {
            1.0
        } else {
            0.0
        }
    }
}

impl LiteralMatcher for LiteralMode {
    fn key(&self, lexical: &str) -> String {
        normalize(lexical, *self)
    }
}

/// `P(a ≡ b)` for two literals under a built-in mode: 1 or 0.
pub fn literal_equality(a: &str, b: &str, mode: LiteralMode) -> f64 {
    mode.score(a, b)
}

/// Literals of one ontology grouped by blocking key.
#[derive(Debug, Clone, Default)]
pub struct LiteralIndex {
    by_key: HashMap<String, Vec<TermId>>,
    key_of: HashMap<TermId, String>,
}

impl LiteralIndex {
    pub fn build(o: &Ontology, matcher: &dyn LiteralMatcher) -> Self {
        let mut idx = LiteralIndex::default();
        for id in o.terms_of_kind(TermKind::Literal) {
            let key = matcher.key(o.lexical(id));
            idx.by_key.entry(key.clone()).or_default().push(id);
            idx.key_of.insert(id, key);
        }
        idx
    }

    pub fn key(&self, id: TermId) -> Option<&str> {
        self.key_of.get(&id).map(String::as_str)
    }

    pub fn lookup(&self, key: &str) -> &[TermId] {
        self.by_key.get(key).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn len(&self) -> usize {
        self.key_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.key_of.is_empty()
    }
}
