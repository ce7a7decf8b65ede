use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Smith normal form `d = u · a · v` of an integer matrix `a`, with unimodular `u` and `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithNormalForm {
    d: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
    rank: usize,
}

impl SmithNormalForm {
    pub fn d(&self) -> &IntMatrix {
        &self.d
    }

    /// Row transform (`rows × rows`).
    pub fn u(&self) -> &IntMatrix {
        &self.u
    }

    /// Column transform (`cols × cols`).
    pub fn v(&self) -> &IntMatrix {
        &self.v
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The nonzero diagonal entries `d_1 | d_2 | ... | d_rank`, all positive.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn into_parts(self) -> (IntMatrix, IntMatrix, IntMatrix) {
        (self.d, self.u, self.v)
    }
}

/// Reduces `a` to Smith normal form.
///
/// At each diagonal position the remaining submatrix's entry of least absolute value
/// becomes the pivot. Its row and column are cleared by Euclidean steps, switching to a
/// smaller remainder whenever one appears. If some later entry is not a multiple of the
/// pivot, that entry's row is added to the pivot row and clearing resumes, so the pivot
/// strictly shrinks until it divides the whole submatrix.
pub fn smith_normal_form(a: &IntMatrix) -> SmithNormalForm {
    let m = a.rows();
    let n = a.cols();
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut rank = 0;

    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_abs_entry(&d, t, m, t, n) else {
            break;
        };
        move_to_pivot(&mut d, &mut u, &mut v, t, pi, pj);

        loop {
            if clear_cross(&mut d, &mut u, &mut v, t) {
                match non_multiple(&d, t) {
                    Some(i) => {
                        d.add_row_multiple(t, i, &BigInt::one());
                        u.add_row_multiple(t, i, &BigInt::one());
                    }
                    None => break,
                }
            }
            // Some entry in row t or column t is now a nonzero remainder smaller than the
            // pivot (or was made so by the row addition); promote the smallest one.
            let (pi, pj) = min_abs_in_cross(&d, t);
            move_to_pivot(&mut d, &mut u, &mut v, t, pi, pj);
        }

        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        rank += 1;
    }

    SmithNormalForm { d, u, v, rank }
}

fn min_abs_entry(
    d: &IntMatrix,
    row_lo: usize,
    row_hi: usize,
    col_lo: usize,
    col_hi: usize,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in row_lo..row_hi {
        for j in col_lo..col_hi {
            let e = &d[(i, j)];
            if e.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if d[(bi, bj)].magnitude() <= e.magnitude() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

fn min_abs_in_cross(d: &IntMatrix, t: usize) -> (usize, usize) {
    let col = min_abs_entry(d, t, d.rows(), t, t + 1);
    let row = min_abs_entry(d, t, t + 1, t, d.cols());
    match (col, row) {
        (Some(c), Some(r)) => {
            if d[c].magnitude() <= d[r].magnitude() {
                c
            } else {
                r
            }
        }
        (Some(c), None) => c,
        (None, Some(r)) => r,
        (None, None) => unreachable!("pivot cross cannot be all zero"),
    }
}

fn move_to_pivot(
    d: &mut IntMatrix,
    u: &mut IntMatrix,
    v: &mut IntMatrix,
    t: usize,
    i: usize,
    j: usize,
) {
    d.swap_rows(t, i);
    u.swap_rows(t, i);
    d.swap_cols(t, j);
    v.swap_cols(t, j);
}

/// Reduces column `t` below and row `t` right of the pivot modulo the pivot.
/// Returns true when both are entirely zero afterwards.
fn clear_cross(d: &mut IntMatrix, u: &mut IntMatrix, v: &mut IntMatrix, t: usize) -> bool {
    let mut clean = true;
    for i in t + 1..d.rows() {
        if d[(i, t)].is_zero() {
            continue;
        }
        let q = -(d[(i, t)].div_floor(&d[(t, t)]));
        d.add_row_multiple(i, t, &q);
        u.add_row_multiple(i, t, &q);
        clean &= d[(i, t)].is_zero();
    }
    for j in t + 1..d.cols() {
        if d[(t, j)].is_zero() {
            continue;
        }
        let q = -(d[(t, j)].div_floor(&d[(t, t)]));
        d.add_col_multiple(j, t, &q);
        v.add_col_multiple(j, t, &q);
        clean &= d[(t, j)].is_zero();
    }
    clean
}

/// First row below the pivot holding an entry not divisible by the pivot.
fn non_multiple(d: &IntMatrix, t: usize) -> Option<usize> {
    let p = &d[(t, t)];
    (t + 1..d.rows()).find(|&i| (t + 1..d.cols()).any(|j| !d[(i, j)].is_multiple_of(p)))
}
