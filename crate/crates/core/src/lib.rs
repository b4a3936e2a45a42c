//! Exact arithmetic for characteristic Sturmian words.
//!
//! The characteristic word of an irrational slope `α ∈ (0,1)` is
//! `c(i) = ⌊(i+2)α⌋ − ⌊(i+1)α⌋`. This crate computes its factor sets, the
//! heights of those factors, the counting function
//! `B_α(k) = #{q : 1 ≤ q < k, {qα} < {kα}}`, and the multiplicities of
//! integer eigenvalues of the factor Gram matrices, all with exact integer
//! arithmetic.
//!
//! ```
//! use sturmian::{factor_set, Slope};
//!
//! let alpha: Slope = "invsqrt3".parse()?;
//! let f7 = factor_set(&alpha, 7)?;
//! assert_eq!(f7.len(), 8);
//! // the height sum always has the parity of n
//! assert_eq!(f7.height_sum() % 2, 1);
//! # Ok::<(), sturmian::Error>(())
//! ```
//!
//! The guide under `book/` walks through the concepts; its code listings are
//! compiled and run as doctests of this crate.

pub mod bseq;
mod error;
pub mod export;
pub mod farey;
pub mod gram;
pub mod slope;
pub mod verify;
pub mod word;

pub use bseq::{b_direct, b_parity, b_recurrence, height_sum_formula, BCase, BSeqRecord};
pub use error::{Error, Result};
pub use farey::{distinct_factor_sets, farey_intervals, FareyInterval, Fraction};
pub use gram::{eigen_multiplicity, gram_matrix, m_sweep, multiplicity_sweep, nullity, GramMatrix};
pub use slope::Slope;
pub use word::{char_prefix, factor_set, factor_set_window, Factor, FactorSet};

// Run every listing in the guide as a doctest.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/slopes.md")]
    mod slopes {}
    #[doc = include_str!("../../../book/src/factors.md")]
    mod factors {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/parity.md")]
    mod parity {}
    #[doc = include_str!("../../../book/src/gram.md")]
    mod gram {}
    #[doc = include_str!("../../../book/src/farey.md")]
    mod farey {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
