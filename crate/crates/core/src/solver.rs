//! Randomized output-sensitive subset sum.
//!
//! [`fast_subset_sum`] needs an upper bound `s` on the output size. Items
//! small in every coordinate are scattered over `K` random buckets, each
//! solved recursively for a slightly more than `1/K` share of the target and
//! folded back together. The remaining large items go through
//! [`combine_large_items`]. [`solve`] removes the need for `s` by
//! estimating it from the two halves of the input.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::baseline::{bellman, cap_multiplicities};
use crate::color::{combine_large_items, random_partition};
use crate::counters::{debug_asserts, WorkCounters};
use crate::error::{Error, Result};
use crate::prefix::PrefixConfig;
use crate::sumset::{sumset_with, SumsetEngineConfig};
use crate::types::{ItemMultiset, PointSet, TargetBox};

/// Reseeded attempts after the first one before giving up.
pub const MAX_RETRIES: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolverConfig {
    /// Multiplier in `K = ceil(k_const * log2 s + log2 d)`.
    pub k_const: f64,
    /// Instances with at most this many item copies go to Bellman.
    pub base_n: u64,
    /// Instances with `floor(t)` at most this go to Bellman.
    pub base_t: u64,
    pub seed: u64,
    /// Multiplier in the recursion depth guard `c * log2 |X|`.
    pub depth_cap_const: f64,
    pub engine: SumsetEngineConfig,
    /// Use this `K` instead of the formula. Lets small instances reach the
    /// small-item recursion, which the formula's `K^5` otherwise rules out.
    pub k_override: Option<u64>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            k_const: 8.0,
            base_n: 16,
            base_t: 64,
            seed: 0,
            depth_cap_const: 400.0,
            engine: SumsetEngineConfig::default(),
            k_override: None,
        }
    }
}

impl SolverConfig {
    pub fn with_seed(seed: u64) -> Self {
        SolverConfig {
            seed,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.k_const.is_nan() || self.k_const < 1.0 || self.base_n < 1 || self.base_t < 1 {
            return Err(Error::InvalidArgument(format!(
                "solver needs k_const >= 1, base_n >= 1, base_t >= 1 (got {}, {}, {})",
                self.k_const, self.base_n, self.base_t
            )));
        }
        if matches!(self.k_override, Some(k) if k < 2) {
            return Err(Error::InvalidArgument("k_override must be at least 2".into()));
        }
        Ok(())
    }

    /// `K` for output bound `s` in `d` dimensions, at least 2.
    pub fn k_for(&self, log2_s: f64, dim: usize) -> u64 {
        if let Some(k) = self.k_override {
            return k;
        }
        let k = (self.k_const * log2_s + (dim as f64).log2()).ceil();
        (k as u64).max(2)
    }

    pub(crate) fn prefix(&self, seed: u64) -> PrefixConfig {
        PrefixConfig::with_engine(SumsetEngineConfig { seed, ..self.engine })
    }
}

/// SplitMix64 step, used to derive independent child seeds.
pub(crate) fn mix(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn floor_u64(t: &BigRational) -> u64 {
    t.floor().to_integer().to_u64().unwrap_or(u64::MAX)
}

/// `S(X, floor(t))`, provided `s >= |S(X, floor(t))|`; never contains a
/// non-sum.
pub fn fast_subset_sum(x: &ItemMultiset, t: &BigRational, s: &BigUint, cfg: &SolverConfig) -> Result<PointSet> {
    fast_subset_sum_with(x, t, s, cfg, &WorkCounters::new())
}

pub fn fast_subset_sum_with(
    x: &ItemMultiset,
    t: &BigRational,
    s: &BigUint,
    cfg: &SolverConfig,
    counters: &WorkCounters,
) -> Result<PointSet> {
    cfg.validate()?;
    let n = x.n().max(1) as f64;
    let limit = (cfg.depth_cap_const * n.log2().max(1.0)).floor() as usize;
    let mut last = None;
    for attempt in 0..=MAX_RETRIES {
        let seed = if attempt == 0 { cfg.seed } else { mix(cfg.seed, 1 << 32 | attempt as u64) };
        let run = Run { cfg, s, limit, counters };
        match run.recurse(x, t, seed, 0) {
            Err(e @ Error::DepthExceeded { .. }) => {
                counters.add_retry();
                last = Some(e);
            }
            other => return other,
        }
    }
    Err(Error::RetriesExhausted {
        attempts: MAX_RETRIES + 1,
        last: Box::new(last.expect("at least one attempt")),
    })
}

struct Run<'a> {
    cfg: &'a SolverConfig,
    s: &'a BigUint,
    limit: usize,
    counters: &'a WorkCounters,
}

impl Run<'_> {
    fn recurse(&self, x: &ItemMultiset, t: &BigRational, seed: u64, depth: usize) -> Result<PointSet> {
        self.counters.observe_depth(depth as u64);
        if depth > self.limit {
            return Err(Error::DepthExceeded {
                depth,
                limit: self.limit,
            });
        }
        let cfg = self.cfg;
        let dim = x.dim();
        let tf = floor_u64(t);
        let x = &cap_multiplicities(x.clone(), tf);
        if x.n() <= cfg.base_n || tf <= cfg.base_t {
            let out = bellman(x, tf);
            // one sumset with {0, x} per item
            self.counters.add_sumset_elems(x.n() * out.len() as u64);
            return Ok(out);
        }
        let bx = TargetBox::full(dim, tf);

        // the output never exceeds the box
        let cap = (BigUint::from(tf) + 1u32).pow(dim as u32);
        let s = std::cmp::min(self.s, &cap);
        let log2_s = s.to_f64().map_or(f64::MAX, f64::log2);
        let k = cfg.k_for(log2_s, dim);
        let k5 = BigInt::from(k).pow(5);

        let scaled = t / BigRational::from_integer(k5.clone());
        let (small, large) = x.split_by(|p| p.iter().all(|&c| BigRational::from_integer(BigInt::from(c)) <= scaled));

        let mut z = PointSet::zero(dim);
        let mut folded_parts = 0;
        if !small.is_empty() {
            let k_big = BigInt::from(k);
            let child_t = t * BigRational::new(&k_big + BigInt::one(), &k_big * &k_big);
            let child_tf = floor_u64(&child_t);
            let parts = random_partition(&small, k as usize, mix(seed, 0))?;
            for (i, part) in parts.iter().enumerate() {
                let zi = self.recurse(part, &child_t, mix(seed, i as u64 + 1), depth + 1)?;
                if debug_asserts() {
                    assert!(
                        zi.iter().all(|p| p.iter().all(|&c| c <= child_tf)),
                        "child output exceeds its target {child_tf}"
                    );
                }
                let engine = SumsetEngineConfig {
                    seed: mix(seed, (i as u64) << 20 | 0xF01D),
                    ..cfg.engine
                };
                z = sumset_with(&z, &zi, &engine, self.counters)?.clip(&bx);
            }
            folded_parts = parts.len();
        }

        let gamma = BigRational::new(BigInt::one(), k5);
        let out = combine_large_items(&z, &large, tf, &gamma, &cfg.prefix(mix(seed, u64::MAX)), self.counters)?;
        if debug_asserts() && folded_parts >= 2 {
            // |Z|^(K-1) <= |S|^K
            let lhs = BigUint::from(z.len()).pow(folded_parts as u32 - 1);
            let rhs = BigUint::from(out.len()).pow(folded_parts as u32);
            assert!(lhs <= rhs, "fold size {} breaks sub-multiplicativity against {}", z.len(), out.len());
        }
        Ok(out)
    }
}

/// `s = (s1 * s2 * n)^(4d)`.
pub fn size_estimate(s1: u64, s2: u64, n: u64, dim: usize) -> BigUint {
    (BigUint::from(s1) * BigUint::from(s2) * BigUint::from(n)).pow(4 * dim as u32)
}

/// `S(X, t)` with high probability, estimating the output bound recursively.
pub fn solve(x: &ItemMultiset, t: u64, cfg: &SolverConfig) -> Result<PointSet> {
    solve_with(x, t, cfg, &WorkCounters::new())
}

pub fn solve_with(x: &ItemMultiset, t: u64, cfg: &SolverConfig, counters: &WorkCounters) -> Result<PointSet> {
    cfg.validate()?;
    if x.n() <= cfg.base_n {
        let out = bellman(x, t);
        counters.add_sumset_elems(x.n() * out.len() as u64);
        return Ok(out);
    }
    let dim = x.dim();
    let flat = x.flat_copies();
    let half = x.n().div_ceil(2) as usize * dim;
    let (left, right) = flat.split_at(half);
    // each half is preprocessed again for the halved target
    let left = cap_multiplicities(ItemMultiset::from_flat_copies(dim, left.to_vec()), t / 2);
    let right = cap_multiplicities(ItemMultiset::from_flat_copies(dim, right.to_vec()), t / 2);
    let sub = |part: &ItemMultiset, i| {
        let child = SolverConfig {
            seed: mix(cfg.seed, i),
            ..*cfg
        };
        solve_with(part, t / 2, &child, counters)
    };
    let s1 = sub(&left, 1)?.len() as u64;
    let s2 = sub(&right, 2)?.len() as u64;
    let s = size_estimate(s1, s2, x.n(), dim);
    let tr = BigRational::from_integer(BigInt::from(t));
    fast_subset_sum_with(x, &tr, &s, cfg, counters)
}

/// Whether `(t, ..., t)` is a subset sum.
pub fn decide(x: &ItemMultiset, t: u64, cfg: &SolverConfig) -> Result<bool> {
    let target = vec![t; x.dim()];
    Ok(solve(x, t, cfg)?.contains(&target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baseline::naive_oracle;

    fn rat(t: u64) -> BigRational {
        BigRational::from_integer(BigInt::from(t))
    }

    fn eager() -> SolverConfig {
        SolverConfig {
            base_n: 1,
            base_t: 1,
            ..Default::default()
        }
    }

    #[test]
    fn fast_examples() {
        let s = fast_subset_sum(&ItemMultiset::empty(1), &rat(5), &BigUint::from(1u32), &eager()).unwrap();
        assert_eq!(s.values(), &[0]);
        let x = ItemMultiset::from_values([1, 2, 3, 4]);
        let s = fast_subset_sum(&x, &rat(10), &BigUint::from(16u32), &eager()).unwrap();
        assert_eq!(s, bellman(&x, 10));
    }

    #[test]
    fn size_estimate_example() {
        assert_eq!(size_estimate(3, 4, 5, 1), BigUint::from(12_960_000u32));
    }

    #[test]
    fn solve_examples() {
        let x = ItemMultiset::from_values([7]);
        assert_eq!(solve(&x, 7, &eager()).unwrap().values(), &[0, 7]);
        let x = ItemMultiset::from_values([3, 5]);
        assert!(decide(&x, 8, &eager()).unwrap());
        assert!(!decide(&x, 7, &eager()).unwrap());
        let x = ItemMultiset::from_values([2, 4, 6]);
        assert!(!decide(&x, 11, &eager()).unwrap());
    }

    #[test]
    fn small_item_recursion_matches_oracle() {
        let cfg = SolverConfig {
            k_override: Some(2),
            base_n: 2,
            base_t: 4,
            ..Default::default()
        };
        let x = ItemMultiset::from_values([1, 1, 2, 3, 40, 41, 55, 60, 2, 1]);
        let t = 128;
        let counters = WorkCounters::new();
        let got = solve_with(&x, t, &cfg, &counters).unwrap();
        assert_eq!(got, naive_oracle(&x, t).unwrap());
        assert!(counters.snapshot().max_depth >= 1);
    }

    #[test]
    fn depth_guard_exhausts_retries() {
        let cfg = SolverConfig {
            k_override: Some(2),
            base_n: 1,
            base_t: 1,
            depth_cap_const: 1e-9,
            ..Default::default()
        };
        let x = ItemMultiset::from_values([1, 1, 1, 2]);
        let counters = WorkCounters::new();
        let err = fast_subset_sum_with(&x, &rat(200), &BigUint::from(100u32), &cfg, &counters).unwrap_err();
        assert!(matches!(err, Error::RetriesExhausted { attempts: 4, .. }));
        assert_eq!(counters.snapshot().retries, 4);
    }

    #[test]
    fn rejects_bad_config() {
        let cfg = SolverConfig {
            k_const: 0.5,
            ..Default::default()
        };
        assert!(solve(&ItemMultiset::from_values([1]), 3, &cfg).is_err());
    }
}
