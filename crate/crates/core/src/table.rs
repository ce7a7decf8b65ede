//! Line-oriented knot tables: `name<TAB>pd-code`, with `#` comments.

use thiserror::Error;

use crate::diagram::{parse_pd, DiagramError, KnotDiagram};

const BUNDLED: &str = include_str!("../data/knots.tsv");

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("unknown knot name '{0}'")]
    UnknownKnotName(String),
    #[error("knot table line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("knot table entry '{name}': {source}")]
    BadEntry {
        name: String,
        #[source]
        source: DiagramError,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotTable {
    entries: Vec<(String, String)>,
}

impl KnotTable {
    /// The table shipped with the crate (at least `3_1`, `4_1`, `5_1`, `5_2`).
    pub fn bundled() -> Self {
        Self::parse(BUNDLED).expect("bundled knot table is well formed")
    }

    /// Entries keep file order. The name ends at the first tab (or other whitespace); a
    /// name with no code is the crossingless unknot. Duplicate names are rejected.
    pub fn parse(text: &str) -> Result<Self, TableError> {
        let mut entries: Vec<(String, String)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (name, code) = match line.split_once(|c: char| c.is_whitespace()) {
                Some((n, c)) => (n, c.trim()),
                None => (line, ""),
            };
            if entries.iter().any(|(n, _)| n == name) {
                return Err(TableError::Malformed {
                    line: i + 1,
                    message: format!("duplicate entry '{name}'"),
                });
            }
            entries.push((name.to_string(), code.to_string()));
        }
        Ok(KnotTable { entries })
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(n, _)| n.as_str())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The PD code stored under `name`.
    pub fn code(&self, name: &str) -> Result<&str, TableError> {
        self.entries
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, c)| c.as_str())
            .ok_or_else(|| TableError::UnknownKnotName(name.to_string()))
    }

    pub fn diagram(&self, name: &str) -> Result<KnotDiagram, TableError> {
        parse_pd(self.code(name)?).map_err(|source| TableError::BadEntry {
            name: name.to_string(),
            source,
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(n, c)| (n.as_str(), c.as_str()))
    }
}
