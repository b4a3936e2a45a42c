//! The counting function `B_α(k) = #{q : 1 ≤ q < k, {qα} < {kα}}`.
//!
//! Three independent routes are provided: [`b_direct`] counts,
//! [`b_recurrence`] runs the second-order three-case recurrence (on `1 − α`
//! when `α > 1/2`), and [`b_parity`] predicts the value mod 2 from `⌊kα⌋`
//! alone. [`height_sum_formula`] turns `B_α(n)` into the height sum of `F_n(α)`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::slope::Slope;

/// Which branch of the recurrence produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BCase {
    /// `{kα} ∈ [0, α)`
    Low,
    /// `{kα} ∈ [α, 2α)`
    Mid,
    /// `{kα} ∈ [2α, 1)`
    High,
    /// seeds `k < 3`, or any `k` when `α > 1/2`
    NotApplied,
}

impl fmt::Display for BCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BCase::Low => "LOW",
            BCase::Mid => "MID",
            BCase::High => "HIGH",
            BCase::NotApplied => "NA",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BSeqRecord {
    pub k: u64,
    pub value: u64,
    pub case: BCase,
}

fn check_k(slope: &Slope, k: u64) -> Result<i64> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive"));
    }
    let ki = i64::try_from(k).map_err(|_| Error::Overflow)?;
    slope.check_index(ki)?;
    Ok(ki)
}

/// `B_α(k)` by direct count.
pub fn b_direct(slope: &Slope, k: u64) -> Result<u64> {
    check_k(slope, k)?;
    let mut count = 0;
    for q in 1..k {
        if slope.frac_cmp(q, k)? == Ordering::Less {
            count += 1;
        }
    }
    Ok(count)
}

/// `B_α(1), …, B_α(k)` from the three-case recurrence, with the branch taken
/// at every step.
///
/// For `α > 1/2` the recurrence runs on `1 − α` and each value is mapped
/// back through `B_α(k) = k − 1 − B_{1−α}(k)`; those records are all
/// [`BCase::NotApplied`].
pub fn b_recurrence(slope: &Slope, k: u64) -> Result<Vec<BSeqRecord>> {
    check_k(slope, k)?;
    match slope.cmp_half() {
        Ordering::Equal => Err(Error::HalfSlope),
        Ordering::Less => recurrence_below_half(slope, k),
        Ordering::Greater => {
            let mirrored = recurrence_below_half(&slope.complement(), k)?;
            Ok(mirrored
                .into_iter()
                .map(|r| BSeqRecord {
                    k: r.k,
                    value: r.k - 1 - r.value,
                    case: BCase::NotApplied,
                })
                .collect())
        }
    }
}

fn recurrence_below_half(slope: &Slope, k_max: u64) -> Result<Vec<BSeqRecord>> {
    let mut out = Vec::with_capacity(k_max as usize);
    let seeds = [(1u64, 0i64), (2, 1)];
    for &(k, value) in seeds.iter().take(k_max as usize) {
        out.push(BSeqRecord {
            k,
            value: value as u64,
            case: BCase::NotApplied,
        });
    }
    let (mut before, mut last) = (0i64, 1i64);
    for k in 3..=k_max {
        let case = if slope.frac_lt_multiple(k, 1)? {
            BCase::Low
        } else if slope.frac_lt_multiple(k, 2)? {
            BCase::Mid
        } else {
            BCase::High
        };
        let k_signed = k as i64;
        let step = match case {
            BCase::Low => 1 - k_signed,
            BCase::Mid => k_signed - 1,
            _ => 0,
        };
        let value = 2 * last - before + step;
        if value < 0 || value >= k_signed {
            return Err(Error::RecurrenceOutOfRange { k });
        }
        out.push(BSeqRecord {
            k,
            value: value as u64,
            case,
        });
        before = last;
        last = value;
    }
    Ok(out)
}

/// Predicted `B_α(k) mod 2`: 0 for odd `k`, `(⌊kα⌋ + 1) mod 2` for even `k`.
pub fn b_parity(slope: &Slope, k: u64) -> Result<u8> {
    check_k(slope, k)?;
    if k % 2 == 1 {
        return Ok(0);
    }
    Ok((slope.floor_mul(k)? + 1).rem_euclid(2) as u8)
}

/// `B_α(n) + (n + 1)⌊nα⌋ + 1`, which equals the height sum of `F_n(α)`.
pub fn height_sum_formula(slope: &Slope, n: u64) -> Result<u64> {
    let b = b_direct(slope, n)?;
    let floor = slope.floor_mul(n)? as u64;
    Ok(b + (n + 1) * floor + 1)
}
