use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::Presentation;
use crate::homology::{smith_normal_form, IntMatrix};
use crate::json::Integer;
use crate::wirtinger::abelianized_boundary;

/// A finitely generated abelian group `Z^rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k` in invariant-factor
/// form: every `t_i ≥ 2` and `t_i | t_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    /// Canonicalizes `Z^rank ⊕ ⨁ Z/c` for arbitrary cyclic orders `c`. Orders of 1 are
    /// dropped and orders of 0 count as extra free summands.
    pub fn from_invariant_factors(rank: usize, cyclic_orders: Vec<BigInt>) -> Self {
        let mut extra_rank = 0;
        let mut orders = Vec::new();
        for c in cyclic_orders {
            let c = c.abs();
            if c.is_zero() {
                extra_rank += 1;
            } else if !c.is_one() {
                orders.push(c);
            }
        }
        let already_canonical = orders.windows(2).all(|w| (&w[1] % &w[0]).is_zero());
        let torsion = if already_canonical {
            orders
        } else {
            let n = orders.len();
            let mut diag = IntMatrix::zeros(n, n);
            for (i, c) in orders.into_iter().enumerate() {
                diag[(i, i)] = c;
            }
            smith_normal_form(&diag)
                .invariant_factors()
                .into_iter()
                .filter(|f| !f.is_one())
                .collect()
        };
        AbelianGroup {
            rank: rank + extra_rank,
            torsion,
        }
    }

    /// Cokernel of the integer matrix `m`, i.e. `Z^cols / (row span of m)`.
    pub fn cokernel_of_rows(m: &IntMatrix) -> Self {
        let snf = smith_normal_form(m);
        let torsion = snf
            .invariant_factors()
            .into_iter()
            .filter(|f| !f.is_one())
            .collect();
        AbelianGroup {
            rank: m.cols() - snf.rank(),
            torsion,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    /// Torsion orders as `u64`. Panics if one does not fit, which cannot happen for the
    /// small complexes this crate builds.
    pub fn torsion_u64(&self) -> Vec<u64> {
        self.torsion
            .iter()
            .map(|t| t.to_u64().expect("torsion order exceeds u64"))
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_infinite_cyclic(&self) -> bool {
        self.rank == 1 && self.torsion.is_empty()
    }
}

/// `0`, `Z`, `Z^3`, `Z/2`, `Z^3 + Z/2 + Z/4`.
impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl Serialize for AbelianGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let torsion: Vec<Integer<'_>> = self.torsion.iter().map(Integer).collect();
        let mut st = serializer.serialize_struct("AbelianGroup", 2)?;
        st.serialize_field("rank", &self.rank)?;
        st.serialize_field("torsion", &torsion)?;
        st.end()
    }
}

/// `G / [G, G]` for the group presented by `p`: the cokernel of its relator
/// exponent-sum matrix.
pub fn abelianization(p: &Presentation) -> AbelianGroup {
    AbelianGroup::cokernel_of_rows(&abelianized_boundary(p))
}
