//! Characteristic words and their factor sets.
//!
//! The characteristic word of slope α is `c(i) = ⌊(i+2)α⌋ − ⌊(i+1)α⌋`.
//! [`factor_set`] builds the `n + 1` factors of length `n` directly from the
//! ordering of the points `{−jα}`, `0 ≤ j ≤ n`, while [`factor_set_window`]
//! slides a window over a long enough prefix. The two are kept independent so
//! each can check the other.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde_json::json;

use crate::error::{Error, Result};
use crate::slope::Slope;

const WORD_BITS: usize = 64;

/// A finite binary word, packed most-significant-bit first so that
/// comparing the packed words compares the bits lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factor {
    len: usize,
    words: Vec<u64>,
}

impl Factor {
    pub fn zeros(len: usize) -> Factor {
        Factor {
            len,
            words: vec![0; len.div_ceil(WORD_BITS)],
        }
    }

    /// Builds a factor from 0/1 values; any nonzero value counts as 1.
    pub fn from_bits(bits: &[u8]) -> Factor {
        let mut f = Factor::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                f.set(i);
            }
        }
        f
    }

    fn set(&mut self, i: usize) {
        self.words[i / WORD_BITS] |= 1 << (WORD_BITS - 1 - i % WORD_BITS);
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> u8 {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        ((self.words[i / WORD_BITS] >> (WORD_BITS - 1 - i % WORD_BITS)) & 1) as u8
    }

    pub fn bits(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len).map(|i| self.get(i))
    }

    /// Number of 1-components (the Hamming weight).
    pub fn height(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Dot product with a factor of the same length.
    pub fn dot(&self, other: &Factor) -> u64 {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as u64)
            .sum()
    }

    pub fn reverse(&self) -> Factor {
        let mut r = Factor::zeros(self.len);
        for i in 0..self.len {
            if self.get(i) == 1 {
                r.set(self.len - 1 - i);
            }
        }
        r
    }

    pub fn is_palindrome(&self) -> bool {
        (0..self.len / 2).all(|i| self.get(i) == self.get(self.len - 1 - i))
    }
}

impl Ord for Factor {
    fn cmp(&self, other: &Self) -> Ordering {
        // bits past `len` are zero, so ties on the packed words mean one
        // factor is a prefix of the other
        self.words
            .cmp(&other.words)
            .then(self.len.cmp(&other.len))
    }
}

impl PartialOrd for Factor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            f.write_str(if b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Factor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Factor> {
        if s.is_empty() {
            return Err(Error::ParseFactor(s.to_string()));
        }
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::ParseFactor(s.to_string())),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Factor::from_bits(&bits))
    }
}

/// The factors of length `n` of a characteristic word, sorted
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSet {
    n: usize,
    slope: Slope,
    factors: Vec<Factor>,
}

impl FactorSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn slope(&self) -> &Slope {
        &self.slope
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn contains(&self, w: &Factor) -> bool {
        self.factors.binary_search(w).is_ok()
    }

    /// Sum of the heights of all factors.
    pub fn height_sum(&self) -> u64 {
        self.factors.iter().map(Factor::height).sum()
    }

    pub fn palindromes(&self) -> Vec<Factor> {
        self.factors
            .iter()
            .filter(|w| w.is_palindrome())
            .cloned()
            .collect()
    }

    /// `{"n": .., "slope": .., "factors": [..]}` with bitstring factors.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "slope": self.slope.to_string(),
            "factors": self.factors.iter().map(Factor::to_string).collect::<Vec<_>>(),
        })
    }
}

/// The first `len` letters `c(0), …, c(len − 1)` of the characteristic word.
pub fn char_prefix(slope: &Slope, len: usize) -> Result<Vec<u8>> {
    if len == 0 {
        return Err(Error::InvalidParameter("prefix length must be positive"));
    }
    let mut prev = slope.floor_mul(1)?;
    let mut bits = Vec::with_capacity(len);
    for k in 2..=len as u64 + 1 {
        let next = slope.floor_mul(k)?;
        bits.push((next - prev) as u8);
        prev = next;
    }
    Ok(bits)
}

/// `F_n(α)`, built from the ordering of `0, {−α}, …, {−nα}`.
///
/// With `π = {−jα} = ⌊jα⌋ + 1 − jα` for `j ≥ 1`, the `t`-th letter
/// `⌊(t+1)α + π⌋ − ⌊tα + π⌋` of the factor attached to `j` collapses to
/// `⌊(t+1−j)α⌋ − ⌊(t−j)α⌋`; for `j = 0` the same formula holds directly.
/// So every factor is read off a table of `⌊mα⌋` for `−n ≤ m ≤ n`, and a
/// rational slope only needs `n < guard`.
pub fn factor_set(slope: &Slope, n: usize) -> Result<FactorSet> {
    if n == 0 {
        return Err(Error::InvalidParameter("factor length must be positive"));
    }
    let ni = i64::try_from(n).map_err(|_| Error::Overflow)?;
    slope.check_index(ni)?;

    let floors = (-ni..=ni)
        .map(|m| slope.floor_mul_signed(m))
        .collect::<Result<Vec<i64>>>()?;
    // ⌊mα⌋ lives at floors[m + n]
    let floor_at = |m: i64| floors[(m + ni) as usize];

    // {−jα} = {j(1−α)}, so sorting by the complement's fractional parts
    let reflected = slope.complement();
    let mut order: Vec<u64> = (0..=n as u64).collect();
    let mut failure = None;
    order.sort_by(|&i, &j| match reflected.frac_cmp(i, j) {
        Ok(ord) => ord,
        Err(e) => {
            failure.get_or_insert(e);
            Ordering::Equal
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    for pair in order.windows(2) {
        if reflected.frac_cmp(pair[0], pair[1])? != Ordering::Less {
            return Err(Error::TiedFractionalParts {
                j: pair[0],
                k: pair[1],
            });
        }
    }

    let factors: Vec<Factor> = order
        .iter()
        .map(|&j| {
            let j = j as i64;
            let mut w = Factor::zeros(n);
            for t in 0..ni {
                if floor_at(t + 1 - j) - floor_at(t - j) == 1 {
                    w.set(t as usize);
                }
            }
            w
        })
        .collect();

    // the construction yields strictly increasing factors; anything else
    // means the slope arithmetic is broken
    if factors.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::UnorderedFactors { n });
    }

    Ok(FactorSet {
        n,
        slope: *slope,
        factors,
    })
}

/// `F_n(α)` by sliding a window over ever longer prefixes of the word.
///
/// The prefix starts at `4n` letters and doubles until `n + 1` distinct
/// factors have been seen, giving up past `2^20 · n` letters.
pub fn factor_set_window(slope: &Slope, n: usize) -> Result<FactorSet> {
    if n == 0 {
        return Err(Error::InvalidParameter("factor length must be positive"));
    }
    let budget = n.saturating_mul(1 << 20);
    let mut len = 4 * n;
    loop {
        let prefix = char_prefix(slope, len)?;
        let seen: BTreeSet<Factor> = prefix.windows(n).map(Factor::from_bits).collect();
        if seen.len() == n + 1 {
            return Ok(FactorSet {
                n,
                slope: *slope,
                factors: seen.into_iter().collect(),
            });
        }
        if seen.len() > n + 1 || len >= budget {
            return Err(Error::NonSturmianBudget {
                n,
                expected: n + 1,
                budget: len,
            });
        }
        len = (len * 2).min(budget);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Factor {
        s.parse().unwrap()
    }

    fn two_minus_phi() -> Slope {
        "quad:3,-1,2,5".parse().unwrap()
    }

    #[test]
    fn factor_basics() {
        let w = f("1101011");
        assert_eq!(w.len(), 7);
        assert_eq!(w.height(), 5);
        assert_eq!(f("1010101").height(), 4);
        assert_eq!(f("000").height(), 0);
        assert_eq!(f("110").reverse(), f("011"));
        assert!(f("0").is_palindrome());
        assert!(w.is_palindrome());
        assert!(!f("110").is_palindrome());
        assert_eq!(w.to_string(), "1101011");
        assert_eq!(f("1101").dot(&f("0111")), 2);
        assert!("10a".parse::<Factor>().is_err());
        assert!("".parse::<Factor>().is_err());
    }

    #[test]
    fn long_factors_cross_word_boundaries() {
        let s: String = (0..150).map(|i| if i % 3 == 0 { '1' } else { '0' }).collect();
        let w = f(&s);
        assert_eq!(w.height(), 50);
        assert_eq!(w.to_string(), s);
        assert_eq!(w.reverse().reverse(), w);
        let rev: String = s.chars().rev().collect();
        assert_eq!(w.reverse().to_string(), rev);
        assert!(f(&s[..149]) < w);
    }

    #[test]
    fn lexicographic_order() {
        assert!(f("00") < f("01"));
        assert!(f("01") < f("10"));
        assert!(f("0") < f("00"));
        assert!(f("1") > f("01"));
    }

    #[test]
    fn prefix_examples() {
        assert_eq!(char_prefix(&Slope::inv_sqrt3(), 6).unwrap(), vec![1, 0, 1, 0, 1, 1]);
        assert_eq!(char_prefix(&two_minus_phi(), 5).unwrap(), vec![0, 1, 0, 0, 1]);
        assert_eq!(char_prefix(&Slope::golden(), 1).unwrap(), vec![1]);
        assert_eq!(char_prefix(&two_minus_phi(), 1).unwrap(), vec![0]);
    }

    #[test]
    fn prefix_guard_violation() {
        let s: Slope = "rat:1/2:2".parse().unwrap();
        assert_eq!(
            char_prefix(&s, 5),
            Err(Error::GuardViolation { k: 2, guard: 2 })
        );
    }

    #[test]
    fn small_factor_sets() {
        let fs = factor_set(&two_minus_phi(), 2).unwrap();
        assert_eq!(fs.factors(), &[f("00"), f("01"), f("10")]);
        assert_eq!(fs.height_sum(), 2);
        for s in [Slope::golden(), Slope::inv_sqrt3(), two_minus_phi()] {
            assert_eq!(factor_set(&s, 1).unwrap().factors(), &[f("0"), f("1")]);
        }
        let win = factor_set_window(&two_minus_phi(), 2).unwrap();
        assert_eq!(win, fs);
    }

    #[test]
    fn inv_sqrt3_palindromes() {
        let fs = factor_set(&Slope::inv_sqrt3(), 7).unwrap();
        assert_eq!(fs.len(), 8);
        assert!(fs.contains(&f("1010101")));
        assert!(fs.contains(&f("1101011")));
        assert_eq!(fs.palindromes(), vec![f("1010101"), f("1101011")]);
        let fs3 = factor_set(&Slope::inv_sqrt3(), 3).unwrap();
        assert_eq!(fs3, factor_set_window(&Slope::inv_sqrt3(), 3).unwrap());
        assert_eq!(fs3.height_sum(), 7);
    }

    #[test]
    fn rational_stand_in_needs_only_n_below_guard() {
        // 2/5 lies in the order-4 Farey interval (1/3, 1/2)
        let r = Slope::guarded_rational(2, 5, 5).unwrap();
        let fs = factor_set(&r, 4).unwrap();
        // √2 − 1 ≈ 0.414 lies in the same interval
        let irr: Slope = "quad:-1,1,1,2".parse().unwrap();
        assert_eq!(fs.factors(), factor_set(&irr, 4).unwrap().factors());
        assert_eq!(
            factor_set(&r, 5),
            Err(Error::GuardViolation { k: 5, guard: 5 })
        );
    }

    #[test]
    fn json_shape() {
        let v = factor_set(&two_minus_phi(), 2).unwrap().to_json();
        assert_eq!(
            v,
            json!({"n": 2, "slope": "quad:3,-1,2,5", "factors": ["00", "01", "10"]})
        );
    }

    #[test]
    fn zero_length_is_rejected() {
        assert!(factor_set(&Slope::golden(), 0).is_err());
        assert!(factor_set_window(&Slope::golden(), 0).is_err());
        assert!(char_prefix(&Slope::golden(), 0).is_err());
    }
}
