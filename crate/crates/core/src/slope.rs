//! Exact slopes in (0,1).
//!
//! A [`Slope`] is either a real quadratic irrational `(a + b√d)/c` or a
//! *guarded* rational `p/q`. Every query reduces to deciding the sign of
//! `u + v√d` for integers `u`, `v`, which is done by sign case analysis and
//! a comparison of `u²` with `v²d`. No floating point is involved anywhere.
//!
//! A guarded rational stands in for every irrational slope of the same Farey
//! interval, and is only trusted for multipliers `|k| < guard`. Queries
//! outside that range fail with [`Error::GuardViolation`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// The quadratic irrational `(a + b√d)/c` in canonical form:
/// `d` squarefree and at least 2, `b ≠ 0`, `c > 0`, `gcd(a, b, c) = 1`,
/// and the value lies in (0,1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticIrrational {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl QuadraticIrrational {
    pub fn a(&self) -> i64 {
        self.a
    }
    pub fn b(&self) -> i64 {
        self.b
    }
    pub fn c(&self) -> i64 {
        self.c
    }
    pub fn d(&self) -> i64 {
        self.d
    }
}

/// The rational `p/q` in lowest terms with `0 < p < q`, trusted for
/// multipliers `|k| < guard ≤ q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GuardedRational {
    p: i64,
    q: i64,
    guard: i64,
}

impl GuardedRational {
    pub fn p(&self) -> i64 {
        self.p
    }
    pub fn q(&self) -> i64 {
        self.q
    }
    pub fn guard(&self) -> i64 {
        self.guard
    }
}

/// An exact real number strictly between 0 and 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slope {
    QuadraticIrrational(QuadraticIrrational),
    GuardedRational(GuardedRational),
}

/// Sign of `u + v·√d` for squarefree `d ≥ 2`.
fn sign_surd(u: i128, v: i128, d: i128) -> Result<Ordering> {
    let zero = 0i128;
    let su = u.cmp(&zero);
    let sv = v.cmp(&zero);
    if sv == Ordering::Equal {
        return Ok(su);
    }
    if su == Ordering::Equal || su == sv {
        return Ok(sv);
    }
    let u2 = u.checked_mul(u).ok_or(Error::Overflow)?;
    let v2d = v
        .checked_mul(v)
        .and_then(|x| x.checked_mul(d))
        .ok_or(Error::Overflow)?;
    // opposite signs: the term with the larger square wins
    Ok(if su == Ordering::Greater {
        u2.cmp(&v2d)
    } else {
        v2d.cmp(&u2)
    })
}

/// `⌊(a + b√d)/c⌋` for `c > 0`, `d ≥ 0`.
fn floor_surd(a: i128, b: i128, c: i128, d: i128) -> Result<i128> {
    let rad = b
        .checked_mul(b)
        .and_then(|x| x.checked_mul(d))
        .ok_or(Error::Overflow)?;
    let s = (rad as u128).isqrt() as i128;
    let exact = s.checked_mul(s).ok_or(Error::Overflow)? == rad;
    // b√d lies in [s, s+1) when b ≥ 0, and in (-s-1, -s] when b < 0
    let t = if b >= 0 || exact {
        if b >= 0 {
            a.checked_add(s)
        } else {
            a.checked_sub(s)
        }
    } else {
        a.checked_sub(s).and_then(|x| x.checked_sub(1))
    }
    .ok_or(Error::Overflow)?;
    // t ≤ a + b√d < t + 1 with t an integer, so ⌊(a+b√d)/c⌋ = ⌊t/c⌋ (c > 0)
    Ok(t.div_euclid(c))
}

fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    a.gcd(&b).gcd(&c)
}

impl Slope {
    /// `((a + b√d)/c) mod 1` as a canonical quadratic irrational.
    pub fn quadratic(a: i64, b: i64, c: i64, d: i64) -> Result<Slope> {
        if c == 0 {
            return Err(Error::ZeroDenominator);
        }
        if d < 0 {
            return Err(Error::NegativeRadicand(d));
        }
        let (mut a, mut b, mut c, mut d) = (a, b, c, d);
        if d >= 2 {
            let mut f = 2i64;
            while f * f <= d {
                while d % (f * f) == 0 {
                    d /= f * f;
                    b = b.checked_mul(f).ok_or(Error::Overflow)?;
                }
                f += 1;
            }
        }
        if b == 0 || d <= 1 {
            return Err(Error::DegenerateRational);
        }
        if c < 0 {
            a = a.checked_neg().ok_or(Error::Overflow)?;
            b = b.checked_neg().ok_or(Error::Overflow)?;
            c = c.checked_neg().ok_or(Error::Overflow)?;
        }
        let g = gcd3(a, b, c);
        a /= g;
        b /= g;
        c /= g;
        let whole = floor_surd(a as i128, b as i128, c as i128, d as i128)?;
        let shift = whole.checked_mul(c as i128).ok_or(Error::Overflow)?;
        let a = i64::try_from(a as i128 - shift).map_err(|_| Error::Overflow)?;
        Ok(Slope::QuadraticIrrational(QuadraticIrrational { a, b, c, d }))
    }

    /// `(p/q) mod 1` with the default guard `q`.
    pub fn rational(p: i64, q: i64) -> Result<Slope> {
        Self::rational_with_guard(p, q, None)
    }

    /// `(p/q) mod 1` trusted for multipliers below `guard`.
    ///
    /// The guard is checked against the *reduced* denominator, so
    /// `guarded_rational(2, 4, 4)` fails: `2/4 = 1/2` only allows guards up to 2.
    pub fn guarded_rational(p: i64, q: i64, guard: i64) -> Result<Slope> {
        Self::rational_with_guard(p, q, Some(guard))
    }

    fn rational_with_guard(p: i64, q: i64, guard: Option<i64>) -> Result<Slope> {
        if q == 0 {
            return Err(Error::ZeroDenominator);
        }
        let (p, q) = if q < 0 {
            (
                p.checked_neg().ok_or(Error::Overflow)?,
                q.checked_neg().ok_or(Error::Overflow)?,
            )
        } else {
            (p, q)
        };
        let g = p.gcd(&q);
        let (p, q) = (p / g, q / g);
        let p = p.rem_euclid(q);
        if p == 0 {
            return Err(Error::ZeroValue);
        }
        let guard = guard.unwrap_or(q);
        if guard <= 0 {
            return Err(Error::InvalidGuard(guard));
        }
        if guard > q {
            return Err(Error::GuardTooLarge { guard, q });
        }
        Ok(Slope::GuardedRational(GuardedRational { p, q, guard }))
    }

    /// The golden-ratio conjugate `(√5 − 1)/2`.
    pub fn golden() -> Slope {
        Slope::QuadraticIrrational(QuadraticIrrational {
            a: -1,
            b: 1,
            c: 2,
            d: 5,
        })
    }

    /// `1/√3 = √3/3`.
    pub fn inv_sqrt3() -> Slope {
        Slope::QuadraticIrrational(QuadraticIrrational {
            a: 0,
            b: 1,
            c: 3,
            d: 3,
        })
    }

    pub fn is_irrational(&self) -> bool {
        matches!(self, Slope::QuadraticIrrational(_))
    }

    /// The guard of a rational slope; `None` for irrationals.
    pub fn guard(&self) -> Option<i64> {
        match self {
            Slope::QuadraticIrrational(_) => None,
            Slope::GuardedRational(r) => Some(r.guard),
        }
    }

    /// Fails unless multiplier `k` is inside the exact range of this slope.
    pub fn check_index(&self, k: i64) -> Result<()> {
        match self {
            Slope::GuardedRational(r) if k.unsigned_abs() >= r.guard as u64 => {
                Err(Error::GuardViolation { k, guard: r.guard })
            }
            _ => Ok(()),
        }
    }

    /// Compares `t·α` with the integer `m`.
    pub fn cmp_multiple(&self, t: i64, m: i64) -> Result<Ordering> {
        self.check_index(t)?;
        let (t, m) = (t as i128, m as i128);
        match *self {
            Slope::QuadraticIrrational(QuadraticIrrational { a, b, c, d }) => {
                let u = t
                    .checked_mul(a as i128)
                    .zip(m.checked_mul(c as i128))
                    .and_then(|(x, y)| x.checked_sub(y))
                    .ok_or(Error::Overflow)?;
                let v = t.checked_mul(b as i128).ok_or(Error::Overflow)?;
                sign_surd(u, v, d as i128)
            }
            Slope::GuardedRational(GuardedRational { p, q, .. }) => {
                let lhs = t.checked_mul(p as i128).ok_or(Error::Overflow)?;
                let rhs = m.checked_mul(q as i128).ok_or(Error::Overflow)?;
                Ok(lhs.cmp(&rhs))
            }
        }
    }

    /// `⌊kα⌋`.
    pub fn floor_mul(&self, k: u64) -> Result<i64> {
        let k = i64::try_from(k).map_err(|_| Error::Overflow)?;
        self.floor_mul_signed(k)
    }

    /// `⌊kα⌋` for any integer `k`, including negative multipliers.
    pub fn floor_mul_signed(&self, k: i64) -> Result<i64> {
        self.check_index(k)?;
        let k = k as i128;
        let floor = match *self {
            Slope::QuadraticIrrational(QuadraticIrrational { a, b, c, d }) => {
                let ka = k.checked_mul(a as i128).ok_or(Error::Overflow)?;
                let kb = k.checked_mul(b as i128).ok_or(Error::Overflow)?;
                floor_surd(ka, kb, c as i128, d as i128)?
            }
            Slope::GuardedRational(GuardedRational { p, q, .. }) => {
                k.checked_mul(p as i128).ok_or(Error::Overflow)?.div_euclid(q as i128)
            }
        };
        i64::try_from(floor).map_err(|_| Error::Overflow)
    }

    /// Compares the fractional parts `{jα}` and `{kα}`.
    pub fn frac_cmp(&self, j: u64, k: u64) -> Result<Ordering> {
        if j == k {
            let j = i64::try_from(j).map_err(|_| Error::Overflow)?;
            self.check_index(j)?;
            return Ok(Ordering::Equal);
        }
        let (ji, ki) = (to_i64(j)?, to_i64(k)?);
        let fj = self.floor_mul_signed(ji)?;
        let fk = self.floor_mul_signed(ki)?;
        // {jα} − {kα} = (j − k)α − (⌊jα⌋ − ⌊kα⌋)
        let t = ji.checked_sub(ki).ok_or(Error::Overflow)?;
        let m = fj.checked_sub(fk).ok_or(Error::Overflow)?;
        // |j − k| ≤ max(j, k), so the guard check above covers this multiplier
        self.cmp_multiple(t, m)
    }

    /// Whether `{kα} < m·α`. Requires `m·α < 1`.
    pub fn frac_lt_multiple(&self, k: u64, m: u64) -> Result<bool> {
        let mi = to_i64(m)?;
        if m == 0 || self.cmp_multiple(mi, 1)? != Ordering::Less {
            return Err(Error::IntervalOutOfRange { m });
        }
        let ki = to_i64(k)?;
        let fk = self.floor_mul_signed(ki)?;
        // {kα} < mα  ⇔  (k − m)α − ⌊kα⌋ < 0
        let t = ki.checked_sub(mi).ok_or(Error::Overflow)?;
        Ok(self.cmp_multiple(t, fk)? == Ordering::Less)
    }

    /// `1 − α`, in the same representation (and with the same guard).
    pub fn complement(&self) -> Slope {
        match *self {
            Slope::QuadraticIrrational(QuadraticIrrational { a, b, c, d }) => {
                Slope::QuadraticIrrational(QuadraticIrrational {
                    a: c - a,
                    b: -b,
                    c,
                    d,
                })
            }
            Slope::GuardedRational(GuardedRational { p, q, guard }) => {
                Slope::GuardedRational(GuardedRational { p: q - p, q, guard })
            }
        }
    }

    /// Compares α with 1/2.
    pub fn cmp_half(&self) -> Ordering {
        match *self {
            Slope::QuadraticIrrational(_) => self
                .cmp_multiple(2, 1)
                .expect("i64 coefficients cannot overflow i128 at multiplier 2"),
            Slope::GuardedRational(GuardedRational { p, q, .. }) => {
                (2 * p as i128).cmp(&(q as i128))
            }
        }
    }
}

fn to_i64(x: u64) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow)
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::QuadraticIrrational(QuadraticIrrational { a, b, c, d }) => {
                write!(f, "quad:{a},{b},{c},{d}")
            }
            Slope::GuardedRational(GuardedRational { p, q, guard }) => {
                if guard == q {
                    write!(f, "rat:{p}/{q}")
                } else {
                    write!(f, "rat:{p}/{q}:{guard}")
                }
            }
        }
    }
}

impl FromStr for Slope {
    type Err = Error;

    /// Parses `quad:a,b,c,d`, `rat:p/q`, `rat:p/q:guard`, `golden` or `invsqrt3`.
    fn from_str(s: &str) -> Result<Slope> {
        let fail = |reason: &str| Error::ParseSlope {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let int = |t: &str| -> Result<i64> {
            t.trim()
                .parse::<i64>()
                .map_err(|_| fail(&format!("{t:?} is not an integer")))
        };
        let s = s.trim();
        match s {
            "golden" => return Ok(Slope::golden()),
            "invsqrt3" => return Ok(Slope::inv_sqrt3()),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("quad:") {
            let parts: Vec<&str> = rest.split(',').collect();
            if parts.len() != 4 {
                return Err(fail("expected quad:a,b,c,d"));
            }
            return Slope::quadratic(
                int(parts[0])?,
                int(parts[1])?,
                int(parts[2])?,
                int(parts[3])?,
            );
        }
        if let Some(rest) = s.strip_prefix("rat:") {
            let (frac, guard) = match rest.split_once(':') {
                Some((frac, guard)) => (frac, Some(int(guard)?)),
                None => (rest, None),
            };
            let (p, q) = frac
                .split_once('/')
                .ok_or_else(|| fail("expected rat:p/q[:guard]"))?;
            return Slope::rational_with_guard(int(p)?, int(q)?, guard);
        }
        Err(fail("expected quad:a,b,c,d, rat:p/q[:guard], golden or invsqrt3"))
    }
}
