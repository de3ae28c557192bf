//! Color coding for subset sums.
//!
//! Large items are combined through a deterministic perfect hash family
//! built from Reed-Solomon codes: every `m` items are separated by some
//! member, so taking the union over the family is exact. Small items are
//! split by a seeded random partition.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::counters::WorkCounters;
use crate::error::{Error, Result};
use crate::prefix::{prefix_restricted_sumset_with, PrefixConfig};
use crate::primes::smallest_prime_in;
use crate::types::{canonicalize, ItemMultiset, PointSet, TargetBox};

/// `h_i(x) = P_x(i) mod p` for `i in 0..p`, where `P_x` has the base-`p`
/// digits of the index of `x` as coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RsHashFamily {
    pub p: u64,
    /// Degree bound `ceil(log_p n_items)`.
    pub degree: u32,
    pub m: u64,
    pub n_items: u64,
}

fn ceil_log2(n: u64) -> u64 {
    if n <= 1 {
        0
    } else {
        64 - (n - 1).leading_zeros() as u64
    }
}

/// Smallest prime in `[m^2 L, 2 m^2 L]` with `L = max(1, ceil(log2 n_items))`.
pub fn build_rs_family(n_items: u64, m: u64) -> Result<RsHashFamily> {
    if n_items == 0 || m == 0 {
        return Err(Error::InvalidArgument(format!(
            "hash family needs n_items >= 1 and m >= 1 (got {n_items}, {m})"
        )));
    }
    let log = ceil_log2(n_items).max(1);
    let lo = m
        .checked_mul(m)
        .and_then(|v| v.checked_mul(log))
        .filter(|v| v.checked_mul(2).is_some())
        .ok_or_else(|| Error::InvalidArgument(format!("hash family for m = {m} does not fit 64 bits")))?;
    let p = smallest_prime_in(lo, 2 * lo).expect("Bertrand's postulate");
    let mut degree = 0u32;
    let mut reach = 1u128;
    while reach < n_items as u128 {
        reach *= p as u128;
        degree += 1;
    }
    Ok(RsHashFamily { p, degree, m, n_items })
}

impl RsHashFamily {
    /// Number of functions in the family (and the size of their range).
    pub fn len(&self) -> u64 {
        self.p
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `h_i(index)`.
    pub fn hash(&self, i: u64, index: u64) -> u64 {
        let p = self.p as u128;
        let mut digits = Vec::with_capacity(self.degree as usize + 1);
        let mut rest = index;
        for _ in 0..=self.degree {
            digits.push(rest % self.p);
            rest /= self.p;
        }
        let x = (i % self.p) as u128;
        digits
            .iter()
            .rev()
            .fold(0u128, |acc, &c| (acc * x + c as u128) % p) as u64
    }

    /// Whether `h_i` is injective on the given indices.
    pub fn is_injective(&self, i: u64, indices: &[u64]) -> bool {
        let mut seen = HashSet::with_capacity(indices.len());
        indices.iter().all(|&x| seen.insert(self.hash(i, x)))
    }

    /// `C(m, 2) * D < p`: two distinct polynomials agree on at most `D`
    /// points, so some member separates any `m` indices.
    pub fn guarantee_holds(&self) -> bool {
        let pairs = self.m as u128 * (self.m as u128).saturating_sub(1) / 2;
        pairs * (self.degree as u128) < self.p as u128
    }
}

/// `(Z + S(XL, t)) ∩ [0..t]^d` for items that each have a coordinate above
/// `gamma * t`.
pub fn combine_large_items(
    z: &PointSet,
    xl: &ItemMultiset,
    t: u64,
    gamma: &BigRational,
    cfg: &PrefixConfig,
    counters: &WorkCounters,
) -> Result<PointSet> {
    combine_large_items_from(z, xl, t, gamma, cfg, counters, 0)
}

/// As [`combine_large_items`], visiting the family members starting at
/// member `start` (mod `p`). The result does not depend on `start`.
pub fn combine_large_items_from(
    z: &PointSet,
    xl: &ItemMultiset,
    t: u64,
    gamma: &BigRational,
    cfg: &PrefixConfig,
    counters: &WorkCounters,
    start: u64,
) -> Result<PointSet> {
    let dim = z.dim();
    if xl.dim() != dim {
        return Err(Error::DimMismatch {
            left: dim,
            right: xl.dim(),
        });
    }
    if gamma <= &BigRational::zero() {
        return Err(Error::InvalidArgument("gamma must be positive".into()));
    }
    let threshold = gamma * BigRational::from_integer(BigInt::from(t));
    for (index, p) in xl.distinct().iter().enumerate() {
        if !p.iter().any(|&c| BigRational::from_integer(BigInt::from(c)) > threshold) {
            return Err(Error::NotLarge { index });
        }
    }
    let bx = TargetBox::full(dim, t);
    let z = z.clip(&bx);
    if xl.is_empty() || z.is_empty() {
        return Ok(z);
    }

    let copies: Vec<&[u64]> = xl.copies().collect();
    let n = copies.len() as u64;
    let m = witness_bound(&copies, t, gamma, dim).min(n).max(1);
    let family = build_rs_family(n, m)?;
    let indices: Vec<u64> = (0..n).collect();

    let mut seen_partitions: HashSet<Vec<Vec<u64>>> = HashSet::new();
    let mut union: Vec<u64> = Vec::new();
    for step in 0..family.len() {
        let i = (start % family.len() + step) % family.len();
        let mut buckets: Vec<(u64, u64)> = indices.iter().map(|&x| (family.hash(i, x), x)).collect();
        buckets.sort_unstable();
        let groups = group_by_bucket(&buckets);
        let mut key: Vec<Vec<u64>> = groups.clone();
        key.sort_unstable();
        if !seen_partitions.insert(key) {
            continue;
        }
        counters.add_hashes(1);
        let injective = groups.len() == copies.len();
        let mut acc = z.clone();
        for group in &groups {
            let mut flat = vec![0u64; dim];
            for &x in group {
                flat.extend_from_slice(copies[x as usize]);
            }
            let bucket = PointSet::from_flat(dim, flat);
            acc = prefix_restricted_sumset_with(&acc, &bucket, &bx, cfg, counters)?;
        }
        if injective {
            // a member separating every copy already yields the whole answer
            return Ok(acc);
        }
        union.extend(acc.into_flat());
    }
    Ok(PointSet::from_sorted_flat(dim, canonicalize(dim, union)))
}

fn group_by_bucket(sorted: &[(u64, u64)]) -> Vec<Vec<u64>> {
    let mut groups: Vec<Vec<u64>> = Vec::new();
    let mut last = None;
    for &(h, x) in sorted {
        if last == Some(h) {
            groups.last_mut().expect("group opened").push(x);
        } else {
            groups.push(vec![x]);
            last = Some(h);
        }
    }
    groups
}

/// Upper bound on the number of large items in one subset sum inside the
/// box: `min(ceil(d / gamma), sum_j greedy_j)`, where `greedy_j` counts how
/// many of the smallest positive `j`-coordinates fit under `t`.
fn witness_bound(copies: &[&[u64]], t: u64, gamma: &BigRational, dim: usize) -> u64 {
    let from_gamma = (BigRational::from_integer(BigInt::from(dim)) / gamma).ceil().to_integer();
    let from_gamma = from_gamma.to_u64().unwrap_or(u64::MAX);
    let mut greedy_total = 0u64;
    for j in 0..dim {
        let mut coords: Vec<u64> = copies.iter().map(|p| p[j]).filter(|&c| c > 0).collect();
        coords.sort_unstable();
        let mut sum = 0u64;
        for c in coords {
            sum += c;
            if sum > t {
                break;
            }
            greedy_total += 1;
        }
    }
    from_gamma.min(greedy_total.max(1))
}

/// Assigns every item copy independently to one of `k` uniform buckets.
pub fn random_partition(xs: &ItemMultiset, k: usize, seed: u64) -> Result<Vec<ItemMultiset>> {
    if k == 0 {
        return Err(Error::InvalidArgument("partition needs k >= 1".into()));
    }
    let dim = xs.dim();
    if k == 1 {
        return Ok(vec![xs.clone()]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut flats: Vec<Vec<u64>> = vec![Vec::new(); k];
    for item in xs.copies() {
        flats[rng.gen_range(0..k)].extend_from_slice(item);
    }
    Ok(flats
        .into_iter()
        .map(|flat| ItemMultiset::from_flat_copies(dim, flat))
        .collect())
}
