use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow};

use crate::diagram::KnotDiagram;
use crate::homology::{smith_normal_form, IntMatrix};

/// Crossing-by-arc matrix of the Fox coloring equations `2·over − under_in − under_out`.
pub fn coloring_matrix(d: &KnotDiagram) -> IntMatrix {
    let mut m = IntMatrix::zeros(d.crossings().len(), d.arc_count());
    for (i, c) in d.crossings().iter().enumerate() {
        m[(i, c.over() - 1)] += 2;
        m[(i, c.under_in() - 1)] -= 1;
        m[(i, c.under_out() - 1)] -= 1;
    }
    m
}

/// Number of Fox `n`-colorings of `d`: arc labels in `Z/n` with
/// `2·over ≡ under_in + under_out` at every crossing.
///
/// With `M = u⁻¹ D v⁻¹` in Smith form, solutions of `Mx ≡ 0 (mod n)` correspond to `y`
/// with `d_i y_i ≡ 0`, giving `gcd(d_i, n)` choices per nonzero factor and `n` per
/// free coordinate.
pub fn fox_colorings(d: &KnotDiagram, n: u32) -> BigInt {
    assert!(n >= 2, "colorings need a modulus of at least 2");
    let modulus = BigInt::from(n);
    let snf = smith_normal_form(&coloring_matrix(d));
    let free = d.arc_count() - snf.rank();
    let torsion: BigInt = snf
        .invariant_factors()
        .iter()
        .map(|f| f.gcd(&modulus))
        .fold(BigInt::one(), |acc, g| acc * g);
    Pow::pow(&modulus, free) * torsion
}
