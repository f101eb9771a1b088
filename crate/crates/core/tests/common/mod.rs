//! Shared helpers for the integration suites: seeded random defining data.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tring::TripleData;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rational(rng: &mut ChaCha8Rng) -> BigRational {
    let numer: i64 = rng.gen_range(-5..=5);
    let denom: i64 = rng.gen_range(1..=3);
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Pairwise independent coefficient pairs, by rejection.
fn random_pairs(rng: &mut ChaCha8Rng, r: usize) -> Vec<(BigRational, BigRational)> {
    let mut pairs: Vec<(BigRational, BigRational)> = Vec::new();
    while pairs.len() <= r {
        let b = rational(rng);
        let c = rational(rng);
        if b.is_zero() && c.is_zero() {
            continue;
        }
        let independent = pairs
            .iter()
            .all(|(pb, pc)| !(pb * &c - &b * pc).is_zero());
        if independent {
            pairs.push((b, c));
        }
    }
    pairs
}

/// One random valid triple with `r` in the given range, block sizes up to
/// `max_block` and exponents up to `max_exp`.
pub fn random_triple(
    rng: &mut ChaCha8Rng,
    r_min: usize,
    r_max: usize,
    max_block: usize,
    max_exp: u64,
) -> TripleData {
    let r = rng.gen_range(r_min..=r_max);
    let pairs = random_pairs(rng, r);
    let block_sizes: Vec<usize> = (0..=r).map(|_| rng.gen_range(1..=max_block)).collect();
    let exponents: Vec<Vec<u64>> = block_sizes
        .iter()
        .map(|&n| (0..n).map(|_| rng.gen_range(1..=max_exp)).collect())
        .collect();
    let t = TripleData::new(pairs, block_sizes, exponents);
    assert!(t.is_valid(), "random triple must be valid by construction");
    t
}

/// Seeded suite of random valid triples.
pub fn random_suite(
    seed: u64,
    count: usize,
    r_min: usize,
    r_max: usize,
    max_block: usize,
    max_exp: u64,
) -> Vec<TripleData> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| random_triple(&mut rng, r_min, r_max, max_block, max_exp))
        .collect()
}
