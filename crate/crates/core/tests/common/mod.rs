//! Oracles that share no code path with the library's exact arithmetic.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeSet;
use sturmian::Slope;

const DIGITS: u32 = 200;

/// `α` as a scaled integer: `α ≈ value / 10^DIGITS`, error below `10^-190`.
pub struct Decimal {
    value: BigInt,
    scale: BigInt,
}

impl Decimal {
    pub fn of(slope: &Slope) -> Decimal {
        let scale = BigInt::from(10).pow(DIGITS);
        let value = match slope {
            Slope::QuadraticIrrational(q) => {
                // Newton iteration for ⌊√(d·10^(2·DIGITS))⌋
                let target = BigInt::from(q.d()) * &scale * &scale;
                let mut x = target.clone();
                let mut y: BigInt = (&x + &target / &x) >> 1;
                while y < x {
                    x = y;
                    y = (&x + &target / &x) >> 1;
                }
                (BigInt::from(q.a()) * &scale + BigInt::from(q.b()) * x) / BigInt::from(q.c())
            }
            Slope::GuardedRational(r) => BigInt::from(r.p()) * &scale / BigInt::from(r.q()),
        };
        Decimal { value, scale }
    }

    pub fn floor_mul(&self, k: i64) -> i64 {
        let v = &self.value * BigInt::from(k);
        v.div_floor(&self.scale).try_into().unwrap()
    }

    /// `{kα}` scaled by `10^DIGITS`.
    pub fn frac(&self, k: i64) -> BigInt {
        (&self.value * BigInt::from(k)).mod_floor(&self.scale)
    }

    pub fn lt_half(&self) -> bool {
        &self.value * 2 < self.scale
    }
}

/// `B_α(k)` counted from decimal fractional parts.
pub fn brute_b(dec: &Decimal, k: i64) -> u64 {
    let fk = dec.frac(k);
    (1..k).filter(|&q| dec.frac(q) < fk).count() as u64
}

/// Characteristic word letters from decimal floors.
pub fn brute_prefix(dec: &Decimal, len: usize) -> Vec<u8> {
    (0..len as i64)
        .map(|i| (dec.floor_mul(i + 2) - dec.floor_mul(i + 1)) as u8)
        .collect()
}

/// All length-`n` windows of a decimal-oracle prefix of length `len`.
pub fn brute_factors(dec: &Decimal, n: usize, len: usize) -> BTreeSet<String> {
    let p = brute_prefix(dec, len);
    p.windows(n)
        .map(|w| w.iter().map(|b| if *b == 1 { '1' } else { '0' }).collect())
        .collect()
}

/// Rank by Gauss–Jordan over the rationals.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for x in a[rank].iter_mut() {
            *x = &*x / &pivot;
        }
        debug_assert!(a[rank][c].is_one());
        for i in 0..a.len() {
            if i != rank && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let d = &f * &a[rank][j];
                    a[i][j] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `Σ_{i ≤ n} φ(i)` from a totient sieve.
pub fn phi_sum(n: usize) -> u64 {
    let mut phi: Vec<u64> = (0..=n as u64).collect();
    for p in 2..=n {
        if phi[p] == p as u64 {
            for m in (p..=n).step_by(p) {
                phi[m] -= phi[m] / p as u64;
            }
        }
    }
    phi[1..].iter().sum()
}
