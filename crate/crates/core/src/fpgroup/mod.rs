//! Free-group words, finite presentations and the invariants computed from them.

mod abelian;
mod coloring;
mod presentation;
mod tietze;
mod word;

use thiserror::Error;

pub use abelian::{abelianization, AbelianGroup};
pub use coloring::{coloring_matrix, fox_colorings};
pub use presentation::{Presentation, StructuredPresentation, StructuredRelator};
pub use tietze::tietze_simplify;
pub use word::{generator_index, generator_name, parse_word_with, Letter, Word, WordDisplay};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("generator {index} is outside 1..={count}")]
    GeneratorOutOfRange { index: usize, count: usize },
    #[error("presentation has no relators")]
    NoRelators,
    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),
    #[error("malformed word or presentation: {0}")]
    Syntax(String),
}
