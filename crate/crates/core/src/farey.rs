//! One representative slope per Farey interval.
//!
//! `F_n(α)` only depends on which interval between consecutive Farey
//! fractions of order `n` contains α. The mediant of the two endpoints has
//! denominator at least `n + 1`, so as a guarded rational it answers every
//! query that [`factor_set`] makes at length `n` exactly.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde_json::json;

use crate::error::Result;
use crate::slope::Slope;
use crate::word::{factor_set, Factor, FactorSet};

/// A nonnegative fraction in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    pub num: i64,
    pub den: i64,
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FareyInterval {
    pub lo: Fraction,
    pub hi: Fraction,
    /// The mediant, guarded by its own denominator.
    pub rep: Slope,
}

impl FareyInterval {
    pub fn mediant(&self) -> Fraction {
        Fraction {
            num: self.lo.num + self.hi.num,
            den: self.lo.den + self.hi.den,
        }
    }
}

/// Consecutive pairs of the Farey sequence of order `n` in `[0, 1]`, in
/// increasing order.
pub fn farey_intervals(n: usize) -> Vec<FareyInterval> {
    let n = n.max(1) as i64;
    let mut out = Vec::new();
    let (mut a, mut b, mut c, mut d) = (0i64, 1i64, 1i64, n);
    loop {
        let lo = Fraction { num: a, den: b };
        let hi = Fraction { num: c, den: d };
        let (p, q) = (a + c, b + d);
        let rep = Slope::guarded_rational(p, q, q)
            .expect("mediant of Farey neighbours lies strictly inside (0,1)");
        out.push(FareyInterval { lo, hi, rep });
        if c == 1 && d == 1 {
            break;
        }
        let k = (n + b) / d;
        (a, b, c, d) = (c, d, k * c - a, k * d - b);
    }
    out
}

/// Factor set of length `n` for one interval's representative.
pub fn interval_factor_set(interval: &FareyInterval, n: usize) -> Result<FactorSet> {
    factor_set(&interval.rep, n)
}

/// Number of distinct sets `F_n` over all Farey intervals of order `n`.
pub fn distinct_factor_sets(n: usize) -> Result<usize> {
    let sets = farey_intervals(n)
        .par_iter()
        .map(|iv| interval_factor_set(iv, n).map(|fs| fs.factors().to_vec()))
        .collect::<Result<Vec<Vec<Factor>>>>()?;
    Ok(sets.into_iter().collect::<BTreeSet<_>>().len())
}

/// `[{"lo", "hi", "rep", "factors"}]` for every interval of order `n`.
pub fn atlas_json(n: usize) -> Result<serde_json::Value> {
    let entries = farey_intervals(n)
        .par_iter()
        .map(|iv| {
            let fs = interval_factor_set(iv, n)?;
            Ok(json!({
                "lo": iv.lo.to_string(),
                "hi": iv.hi.to_string(),
                "rep": iv.mediant().to_string(),
                "factors": fs.factors().iter().map(Factor::to_string).collect::<Vec<_>>(),
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(serde_json::Value::Array(entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reps(n: usize) -> Vec<String> {
        farey_intervals(n).iter().map(|iv| iv.mediant().to_string()).collect()
    }

    #[test]
    fn small_orders() {
        let one = farey_intervals(1);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].lo, Fraction { num: 0, den: 1 });
        assert_eq!(one[0].hi, Fraction { num: 1, den: 1 });
        assert_eq!(reps(1), ["1/2"]);
        assert_eq!(reps(2), ["1/3", "2/3"]);
        assert_eq!(reps(3), ["1/4", "2/5", "3/5", "3/4"]);
    }

    #[test]
    fn neighbours_and_guards() {
        for n in 1..=15 {
            for iv in farey_intervals(n) {
                assert_eq!(iv.hi.num * iv.lo.den - iv.lo.num * iv.hi.den, 1);
                assert!(iv.lo.den as usize <= n && iv.hi.den as usize <= n);
                assert!(iv.rep.guard().unwrap() as usize > n);
            }
        }
    }

    #[test]
    fn distinct_counts() {
        assert_eq!(distinct_factor_sets(1).unwrap(), 1);
        assert_eq!(distinct_factor_sets(3).unwrap(), 4);
    }

    #[test]
    fn atlas_dump() {
        let v = atlas_json(2).unwrap();
        assert_eq!(
            v,
            json!([
                {"lo": "0/1", "hi": "1/2", "rep": "1/3", "factors": ["00", "01", "10"]},
                {"lo": "1/2", "hi": "1/1", "rep": "2/3", "factors": ["01", "10", "11"]},
            ])
        );
    }
}
