use num_traits::One;

use super::{smith_normal_form, HomologyError, IntMatrix};
use crate::fpgroup::AbelianGroup;

/// A finite chain complex `C_N -> ... -> C_1 -> C_0` of free abelian groups.
///
/// The boundary leaving `C_n` is stored for `n = 1..=N` as a `ranks[n-1] × ranks[n]`
/// matrix acting on column vectors. The maps out of `C_0` and into `C_N` are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    /// `boundaries[k]` is the map `C_{k+1} -> C_k`, so there is one fewer boundary than rank.
    /// Rejects incompatible shapes and any consecutive pair whose composite is nonzero.
    pub fn new(ranks: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self, HomologyError> {
        if ranks.is_empty() {
            return Err(HomologyError::DimensionMismatch(
                "a chain complex needs at least one group".into(),
            ));
        }
        if boundaries.len() + 1 != ranks.len() {
            return Err(HomologyError::DimensionMismatch(format!(
                "{} groups need {} boundary maps, got {}",
                ranks.len(),
                ranks.len() - 1,
                boundaries.len()
            )));
        }
        for (k, b) in boundaries.iter().enumerate() {
            let n = k + 1;
            if b.rows() != ranks[n - 1] || b.cols() != ranks[n] {
                return Err(HomologyError::DimensionMismatch(format!(
                    "boundary {} is {}x{}, expected {}x{}",
                    n,
                    b.rows(),
                    b.cols(),
                    ranks[n - 1],
                    ranks[n]
                )));
            }
        }
        for k in 1..boundaries.len() {
            if !(&boundaries[k - 1] * &boundaries[k]).is_zero() {
                return Err(HomologyError::NotAComplex { degree: k + 1 });
            }
        }
        Ok(ChainComplex { ranks, boundaries })
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Top degree `N`.
    pub fn top_degree(&self) -> usize {
        self.ranks.len() - 1
    }

    /// The boundary `C_n -> C_{n-1}`, or `None` for the zero maps at either end.
    pub fn boundary(&self, n: usize) -> Option<&IntMatrix> {
        n.checked_sub(1).and_then(|k| self.boundaries.get(k))
    }

    /// Alternating sum of the chain group ranks.
    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(n, &r)| if n % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }
}

/// `H_n = Ker(∂_n) / Im(∂_{n+1})` as a canonical finitely generated abelian group.
pub fn homology_of_complex(c: &ChainComplex, n: usize) -> Result<AbelianGroup, HomologyError> {
    if n > c.top_degree() {
        return Err(HomologyError::IndexOutOfRange {
            degree: n,
            top: c.top_degree(),
        });
    }
    let outgoing_rank = c.boundary(n).map_or(0, |b| smith_normal_form(b).rank());
    let (incoming_rank, torsion) = match c.boundary(n + 1) {
        Some(b) => {
            let snf = smith_normal_form(b);
            let torsion = snf
                .invariant_factors()
                .into_iter()
                .filter(|f| !f.is_one())
                .collect();
            (snf.rank(), torsion)
        }
        None => (0, Vec::new()),
    };
    let rank = c.ranks()[n] - outgoing_rank - incoming_rank;
    Ok(AbelianGroup::from_invariant_factors(rank, torsion))
}
