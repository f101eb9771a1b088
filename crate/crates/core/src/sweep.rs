//! Bounded enumeration of defining data.
//!
//! The grading group, sincerity, gcds and factoriality of a triple do not
//! depend on the particular coefficient pairs — only on the nonvanishing of
//! their determinants — so sweeps fix the standard pair configuration from
//! [`standard_pairs`] and enumerate the block sizes and exponent families
//! within bounds.
//!
//! Candidates are indexed by a mixed-radix code: each block independently
//! picks a size `1..=max_block_size` and an exponent row with entries
//! `1..=max_exponent`, ordered by size first and row lexicographically
//! within a size; whole candidates vary the last block fastest. The order
//! is canonical in the sense that it only depends on the bounds, and
//! [`nth_candidate`] gives random access for parallel evaluation.

use crate::trinomial::TripleData;
use num_bigint::BigInt;
use num_rational::BigRational;

/// Bounds of an enumeration sweep.
#[derive(Clone, Copy, Debug)]
pub struct SweepBounds {
    /// Number of blocks minus one; must be at least 1.
    pub r: usize,
    /// Largest block size considered.
    pub max_block_size: usize,
    /// Largest exponent entry considered.
    pub max_exponent: u64,
}

/// The fixed coefficient pairs used by sweeps:
/// `(1,0), (1,1), (0,1), (1,2), (1,3), ...` — pairwise independent for
/// every length.
pub fn standard_pairs(r: usize) -> Vec<(BigRational, BigRational)> {
    let q = |x: i64| BigRational::from(BigInt::from(x));
    (0..=r)
        .map(|i| match i {
            0 => (q(1), q(0)),
            1 => (q(1), q(1)),
            2 => (q(0), q(1)),
            _ => (q(1), q(i as i64 - 1)),
        })
        .collect()
}

/// Number of per-block choices: `sum_{k=1}^{N} L^k`, saturating.
fn block_choices(bounds: &SweepBounds) -> u128 {
    let l = bounds.max_exponent as u128;
    let mut total: u128 = 0;
    let mut power: u128 = 1;
    for _ in 0..bounds.max_block_size {
        power = power.saturating_mul(l);
        total = total.saturating_add(power);
    }
    total
}

/// Total number of candidates within the bounds, saturating at `u128::MAX`.
pub fn candidate_count(bounds: &SweepBounds) -> u128 {
    assert!(bounds.r >= 1 && bounds.max_block_size >= 1 && bounds.max_exponent >= 1);
    let c = block_choices(bounds);
    let mut total: u128 = 1;
    for _ in 0..=bounds.r {
        total = total.saturating_mul(c);
    }
    total
}

/// Decodes one per-block choice index into an exponent row.
fn decode_block(bounds: &SweepBounds, mut choice: u128) -> Vec<u64> {
    let l = bounds.max_exponent as u128;
    let mut size = 1usize;
    let mut power = l;
    while choice >= power {
        choice -= power;
        power = power.saturating_mul(l);
        size += 1;
    }
    // `choice` is now a base-L number with `size` digits, most significant
    // digit first; digits are shifted into 1..=L
    let mut row = vec![0u64; size];
    for slot in (0..size).rev() {
        row[slot] = (choice % l) as u64 + 1;
        choice /= l;
    }
    row
}

/// The candidate at `index` in canonical order.
pub fn nth_candidate(bounds: &SweepBounds, index: u128) -> TripleData {
    let c = block_choices(bounds);
    assert!(index < candidate_count(bounds), "index out of range");
    let blocks = bounds.r + 1;
    let mut digits = vec![0u128; blocks];
    let mut rest = index;
    for b in (0..blocks).rev() {
        digits[b] = rest % c;
        rest /= c;
    }
    let exponents: Vec<Vec<u64>> = digits.iter().map(|&d| decode_block(bounds, d)).collect();
    let block_sizes = exponents.iter().map(|row| row.len()).collect();
    TripleData::new(standard_pairs(bounds.r), block_sizes, exponents)
}

/// All candidates in canonical order. Intended for small sweeps; use
/// [`nth_candidate`] with an index range for anything large.
pub fn candidates(bounds: &SweepBounds) -> Vec<TripleData> {
    let count = candidate_count(bounds);
    assert!(count <= usize::MAX as u128);
    (0..count).map(|i| nth_candidate(bounds, i)).collect()
}
