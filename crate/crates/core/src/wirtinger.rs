//! Wirtinger presentations of knot groups.

use crate::diagram::{Crossing, KnotDiagram};
use crate::fpgroup::{GroupError, Letter, Presentation, Word};
use crate::homology::IntMatrix;

/// One generator per arc and one relator per crossing.
///
/// At a crossing with over-arc `c`, arriving under-arc `a` and departing under-arc `b`
/// the relator is `c a c^-1 b^-1` when the crossing is positive and `c^-1 a c b^-1` when
/// it is negative, i.e. the departing generator is a conjugate of the arriving one.
pub fn wirtinger_presentation(d: &KnotDiagram) -> Presentation {
    let relators = d.crossings().iter().map(crossing_relator).collect();
    Presentation::new(d.arc_count(), relators).expect("arc ids are validated by the diagram")
}

/// Removes the last relator. In a Wirtinger presentation of a knot any one relator is a
/// consequence of the others.
pub fn drop_redundant_relator(p: &Presentation) -> Result<Presentation, GroupError> {
    let mut relators = p.relators().to_vec();
    if relators.pop().is_none() {
        return Err(GroupError::NoRelators);
    }
    Presentation::new(p.generator_count(), relators)
}

/// Relator-by-generator matrix of exponent sums.
pub fn abelianized_boundary(p: &Presentation) -> IntMatrix {
    let mut m = IntMatrix::zeros(p.relators().len(), p.generator_count());
    for (i, r) in p.relators().iter().enumerate() {
        for l in r.letters() {
            m[(i, l.generator() - 1)] += i32::from(l.exponent());
        }
    }
    m
}

/// The freely reduced Wirtinger relator of a single crossing.
pub fn crossing_relator(x: &Crossing) -> Word {
    let e = x.sign().value();
    Word::from_letters([
        Letter::new(x.over(), e),
        Letter::new(x.under_in(), 1),
        Letter::new(x.over(), -e),
        Letter::new(x.under_out(), -1),
    ])
}
