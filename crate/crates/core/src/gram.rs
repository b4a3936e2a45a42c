//! Gram matrices of factor sets and exact integer eigenvalue multiplicities.
//!
//! For a real symmetric matrix the multiplicity of an eigenvalue `λ` equals
//! the dimension of the kernel of `G − λI`, so everything here comes down to
//! an exact rank computation. [`nullity`] runs fraction-free (Bareiss)
//! elimination, first in checked `i128` and, if an intermediate minor
//! outgrows that, again over arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::Result;
use crate::slope::Slope;
use crate::word::{factor_set, Factor, FactorSet};

/// `G[i][j] = w_i · w_j` over the factors of a [`FactorSet`], in its
/// lexicographic order. Entries are bounded by the factor length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    n: usize,
    slope: Slope,
    size: usize,
    entries: Vec<u64>,
}

impl GramMatrix {
    /// Gram matrix of an arbitrary list of equal-length factors, in the
    /// order given.
    pub fn from_factors(slope: Slope, factors: &[Factor]) -> GramMatrix {
        let size = factors.len();
        let n = factors.first().map_or(0, Factor::len);
        let mut entries = vec![0; size * size];
        for i in 0..size {
            for j in i..size {
                let v = factors[i].dot(&factors[j]);
                entries[i * size + j] = v;
                entries[j * size + i] = v;
            }
        }
        GramMatrix {
            n,
            slope,
            size,
            entries,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn slope(&self) -> &Slope {
        &self.slope
    }

    /// Number of rows (and columns).
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.size + j]
    }

    pub fn trace(&self) -> u64 {
        (0..self.size).map(|i| self.get(i, i)).sum()
    }

    /// Rows of `G − λI`.
    pub fn shifted_rows(&self, lambda: i64) -> Vec<Vec<i64>> {
        (0..self.size)
            .map(|i| {
                (0..self.size)
                    .map(|j| {
                        let v = self.get(i, j) as i64;
                        if i == j {
                            v - lambda
                        } else {
                            v
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

pub fn gram_matrix(factors: &FactorSet) -> GramMatrix {
    GramMatrix::from_factors(*factors.slope(), factors.factors())
}

/// Dimension of the rational kernel of a square integer matrix.
///
/// # Panics
///
/// If the rows do not form a square matrix.
pub fn nullity<R: AsRef<[i64]>>(rows: &[R]) -> usize {
    let size = rows.len();
    for r in rows {
        assert_eq!(r.as_ref().len(), size, "nullity needs a square matrix");
    }
    size - rank(rows)
}

/// Rank over the rationals of an integer matrix (rows may be any common width).
pub fn rank<R: AsRef<[i64]>>(rows: &[R]) -> usize {
    let small: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.as_ref().iter().map(|&x| x as i128).collect())
        .collect();
    if let Some(r) = bareiss_rank_i128(small) {
        return r;
    }
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    bareiss_rank_big(big)
}

/// Fraction-free row echelon reduction; `None` on `i128` overflow.
///
/// Pivots are the first nonzero entry at or below the current row. Columns
/// without a pivot are skipped, and every division by the previous pivot is
/// exact because each entry remains a minor of the input.
fn bareiss_rank_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c];
        for row in rest.iter_mut() {
            let lead = row[c];
            for j in c + 1..cols {
                let x = pivot
                    .checked_mul(row[j])?
                    .checked_sub(lead.checked_mul(pivot_row[j])?)?;
                row[j] = x / prev;
            }
            row[c] = 0;
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

fn bareiss_rank_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        let eliminate = |row: &mut Vec<BigInt>| {
            let lead = std::mem::take(&mut row[c]);
            if lead.is_zero() {
                if pivot != &prev {
                    for x in row[c + 1..].iter_mut().filter(|x| !x.is_zero()) {
                        *x = &*x * pivot / &prev;
                    }
                }
                return;
            }
            for j in c + 1..cols {
                let x = pivot * &row[j] - &lead * &pivot_row[j];
                row[j] = x / &prev;
            }
        };
        if rest.len() >= 32 {
            rest.par_iter_mut().for_each(eliminate);
        } else {
            rest.iter_mut().for_each(eliminate);
        }
        prev = pivot.clone();
        r += 1;
    }
    r
}

/// Multiplicity of the integer `lambda` as an eigenvalue of `G`.
pub fn eigen_multiplicity(gram: &GramMatrix, lambda: i64) -> usize {
    nullity(&gram.shifted_rows(lambda))
}

/// `(n, multiplicity of lambda in G_α(n))` for `n = 1..=n_max`, ascending.
///
/// Each `n` is independent and evaluated in parallel.
pub fn multiplicity_sweep(slope: &Slope, n_max: usize, lambda: i64) -> Result<Vec<(usize, usize)>> {
    (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let fs = factor_set(slope, n)?;
            Ok((n, eigen_multiplicity(&gram_matrix(&fs), lambda)))
        })
        .collect()
}

/// `m(n)`: multiplicity of the eigenvalue 1 of `G_α(n)` for `n = 1..=n_max`.
pub fn m_sweep(slope: &Slope, n_max: usize) -> Result<Vec<(usize, usize)>> {
    multiplicity_sweep(slope, n_max, 1)
}
