use std::fmt;
use std::str::FromStr;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::word::{generator_name, parse_word_with};
use super::{GroupError, Word};

/// A finitely presented group `⟨x_1, ..., x_n | r_1, ..., r_m⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    generator_count: usize,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generator_count: usize, relators: Vec<Word>) -> Result<Self, GroupError> {
        for r in &relators {
            if r.max_generator() > generator_count {
                return Err(GroupError::GeneratorOutOfRange {
                    index: r.max_generator(),
                    count: generator_count,
                });
            }
        }
        Ok(Presentation {
            generator_count,
            relators,
        })
    }

    /// The free group of rank `n`.
    pub fn free(n: usize) -> Self {
        Presentation {
            generator_count: n,
            relators: Vec::new(),
        }
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn into_relators(self) -> Vec<Word> {
        self.relators
    }

    /// Structured form: generator names plus each relator as parallel index/exponent lists.
    pub fn structured(&self) -> StructuredPresentation {
        StructuredPresentation {
            generators: (1..=self.generator_count).map(generator_name).collect(),
            relators: self
                .relators
                .iter()
                .map(|r| StructuredRelator {
                    generators: r.letters().iter().map(|l| l.generator()).collect(),
                    exponents: r.letters().iter().map(|l| l.exponent()).collect(),
                })
                .collect(),
            text: self.to_string(),
        }
    }
}

/// `⟨a, b, c | a^-1 c a b^-1, a b c^-1 b^-1⟩`
impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for i in 1..=self.generator_count {
            if i > 1 {
                write!(f, ", ")?;
            }
            write!(f, "{}", generator_name(i))?;
        }
        write!(f, " |")?;
        for (k, r) in self.relators.iter().enumerate() {
            write!(f, "{}{}", if k == 0 { " " } else { ", " }, r.display())?;
        }
        write!(f, "⟩")
    }
}

/// Accepts `⟨gens | relators⟩` or `<gens | relators>`, with comma-separated lists.
/// Generator names are arbitrary (letter plus optional digits) and are numbered in the
/// order listed.
impl FromStr for Presentation {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, GroupError> {
        let s = s.trim();
        let inner = s
            .strip_prefix('⟨')
            .and_then(|r| r.strip_suffix('⟩'))
            .or_else(|| s.strip_prefix('<').and_then(|r| r.strip_suffix('>')))
            .ok_or_else(|| GroupError::Syntax(format!("expected ⟨...⟩ around \"{s}\"")))?;
        let (gens, rels) = inner
            .split_once('|')
            .ok_or_else(|| GroupError::Syntax("missing '|' separator".into()))?;
        let names: Vec<&str> = gens
            .split(',')
            .map(str::trim)
            .filter(|n| !n.is_empty())
            .collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(GroupError::Syntax(format!("generator '{n}' listed twice")));
            }
        }
        let resolve = |name: &str| names.iter().position(|n| *n == name).map(|i| i + 1);
        let relators = rels
            .split(',')
            .filter(|r| !r.trim().is_empty())
            .map(|r| parse_word_with(r, resolve))
            .collect::<Result<Vec<_>, _>>()?;
        Presentation::new(names.len(), relators)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuredPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<StructuredRelator>,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct StructuredRelator {
    pub generators: Vec<usize>,
    pub exponents: Vec<i8>,
}

impl Serialize for StructuredPresentation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Presentation", 4)?;
        st.serialize_field("generator_count", &self.generators.len())?;
        st.serialize_field("generators", &self.generators)?;
        st.serialize_field("relators", &self.relators)?;
        st.serialize_field("text", &self.text)?;
        st.end()
    }
}
