//! Exact integer linear algebra and integral homology.
//!
//! Everything works over arbitrary-precision integers, so no computation here can
//! overflow. The one chain complex built from group-theoretic data is the presentation
//! complex: a single 0-cell, one 1-cell per generator and one 2-cell per relator.

mod complex;
mod matrix;
mod snf;

use thiserror::Error;

pub use complex::{homology_of_complex, ChainComplex};
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SmithNormalForm};

use crate::diagram::KnotDiagram;
use crate::fpgroup::{AbelianGroup, Presentation};
use crate::wirtinger;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("boundary maps compose to a nonzero map at degree {degree}")]
    NotAComplex { degree: usize },
    #[error("degree {degree} is outside the complex (top degree {top})")]
    IndexOutOfRange { degree: usize, top: usize },
}

/// The cellular chain complex of the presentation 2-complex of `p`.
///
/// Ranks are `(1, generators, relators)`; the first boundary is zero and the second is
/// the transpose of the relator exponent-sum matrix, so it maps `C_2 -> C_1`.
pub fn presentation_complex(p: &Presentation) -> ChainComplex {
    let g = p.generator_count();
    let r = p.relators().len();
    let d2 = wirtinger::abelianized_boundary(p).transpose();
    ChainComplex::new(vec![1, g, r], vec![IntMatrix::zeros(1, g), d2])
        .expect("presentation complex is well formed by construction")
}

/// `H_0`, `H_1` and `H_2` of a knot complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotHomology {
    pub h0: AbelianGroup,
    pub h1: AbelianGroup,
    pub h2: AbelianGroup,
}

/// Homology of the complement of `d`, read off the presentation complex of its Wirtinger
/// presentation with the redundant relator removed.
pub fn knot_homology(d: &KnotDiagram) -> KnotHomology {
    let full = wirtinger::wirtinger_presentation(d);
    // the zero-crossing unknot has no relator to drop
    let p = if full.relators().is_empty() {
        full
    } else {
        wirtinger::drop_redundant_relator(&full).expect("relator list is nonempty")
    };
    presentation_homology(&p)
}

/// `H_0`, `H_1`, `H_2` of the presentation complex of `p`.
pub fn presentation_homology(p: &Presentation) -> KnotHomology {
    let c = presentation_complex(p);
    let h = |n| homology_of_complex(&c, n).expect("degree within complex");
    KnotHomology {
        h0: h(0),
        h1: h(1),
        h2: h(2),
    }
}
