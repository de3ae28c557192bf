//! Deterministic unbounded subset sum.
//!
//! Small items are handled by one recursive call on a reduced target whose
//! result is added to itself `K` times. Large items are then added one layer
//! at a time with prefix-restricted sumsets against `X_L ∪ {0}`, so every
//! layer keeps the sums found before it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::baseline::unbounded_oracle;
use crate::counters::{debug_asserts, WorkCounters};
use crate::error::Result;
use crate::prefix::{prefix_restricted_sumset_with, PrefixConfig};
use crate::solver::SolverConfig;
use crate::sumset::{sumset_with, SumsetEngineConfig};
use crate::types::{ItemMultiset, PointSet, TargetBox};

/// `S*(X, t)`. Multiplicities are ignored and `cfg.seed` has no effect: the
/// dense engine is used throughout.
pub fn fast_unbounded(x: &ItemMultiset, t: u64, cfg: &SolverConfig) -> Result<PointSet> {
    fast_unbounded_with(x, t, cfg, &WorkCounters::new())
}

pub fn fast_unbounded_with(x: &ItemMultiset, t: u64, cfg: &SolverConfig, counters: &WorkCounters) -> Result<PointSet> {
    cfg.validate()?;
    let dim = x.dim();
    let bx = TargetBox::full(dim, t);
    let items = x.distinct().filter(|p| p.iter().any(|&c| c > 0)).clip(&bx);
    let engine = SumsetEngineConfig::dense();
    let prefix = PrefixConfig::with_engine(engine);
    recurse(&items, &BigRational::from_integer(BigInt::from(t)), cfg, &engine, &prefix, counters, 0)
}

fn recurse(
    items: &PointSet,
    t: &BigRational,
    cfg: &SolverConfig,
    engine: &SumsetEngineConfig,
    prefix: &PrefixConfig,
    counters: &WorkCounters,
    depth: u64,
) -> Result<PointSet> {
    counters.observe_depth(depth);
    let dim = items.dim();
    let tf = t.floor().to_integer().to_u64().unwrap_or(u64::MAX);
    let bx = TargetBox::full(dim, tf);
    let items = items.clip(&bx);
    match items.len() {
        0 => return Ok(PointSet::zero(dim)),
        1 => return Ok(multiples(items.get(0), tf)),
        _ => {}
    }
    if tf <= cfg.base_t {
        let x = ItemMultiset::from_entries(items.clone(), vec![1; items.len()])?;
        let out = unbounded_oracle(&x, tf)?;
        counters.add_sumset_elems(items.len() as u64 * out.len() as u64);
        return Ok(out);
    }

    let k = cfg.k_for((tf as f64).log2(), dim);
    let k_big = BigInt::from(k);
    let scaled = t / BigRational::from_integer(k_big.pow(5));
    let small = items.filter(|p| p.iter().all(|&c| BigRational::from_integer(BigInt::from(c)) <= scaled));
    let large = items.filter(|p| p.iter().any(|&c| BigRational::from_integer(BigInt::from(c)) > scaled));

    let mut z = PointSet::zero(dim);
    if !small.is_empty() {
        let child_t = t * BigRational::new(&k_big + BigInt::one(), &k_big * &k_big);
        let z0 = recurse(&small, &child_t, cfg, engine, prefix, counters, depth + 1)?;
        if debug_asserts() && cfg.k_override.is_none() && cfg.k_const >= 100.0 {
            let need = (z0.len() as f64).log2() + (dim as f64).log2();
            assert!((k as f64) > need, "K = {k} does not exceed log2 |Z0| + log2 d = {need}");
        }
        for _ in 0..k {
            let next = sumset_with(&z, &z0, engine, counters)?.clip(&bx);
            if next == z {
                break;
            }
            z = next;
        }
    }

    if !large.is_empty() {
        let mut with_zero = large.as_flat().to_vec();
        with_zero.extend(std::iter::repeat_n(0, dim));
        let step = PointSet::from_flat(dim, with_zero);
        let rounds = (k as u128).pow(5).saturating_mul(dim as u128);
        let mut round = 0u128;
        while round < rounds {
            let next = prefix_restricted_sumset_with(&z, &step, &bx, prefix, counters)?;
            // monotone, so a repeat is a fixpoint
            if next.len() == z.len() {
                break;
            }
            z = next;
            round += 1;
        }
    }
    Ok(z)
}

fn multiples(p: &[u64], t: u64) -> PointSet {
    let steps = p.iter().filter(|&&c| c > 0).map(|&c| t / c).min().unwrap_or(0);
    let mut flat = Vec::with_capacity((steps as usize + 1) * p.len());
    for i in 0..=steps {
        flat.extend(p.iter().map(|&c| c * i));
    }
    PointSet::from_sorted_flat(p.len(), flat)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let cfg = SolverConfig::default();
        let s = fast_unbounded(&ItemMultiset::from_values([3, 5]), 11, &cfg).unwrap();
        assert_eq!(s.values(), &[0, 3, 5, 6, 8, 9, 10, 11]);
        let s = fast_unbounded(&ItemMultiset::from_values([1]), 4, &cfg).unwrap();
        assert_eq!(s.values(), &[0, 1, 2, 3, 4]);
        let s = fast_unbounded(&ItemMultiset::empty(1), 9, &cfg).unwrap();
        assert_eq!(s.values(), &[0]);
    }

    #[test]
    fn large_target_goes_through_layers() {
        let cfg = SolverConfig::default();
        let x = ItemMultiset::from_values([17, 29, 40]);
        assert_eq!(fast_unbounded(&x, 500, &cfg).unwrap(), unbounded_oracle(&x, 500).unwrap());
    }

    #[test]
    fn small_item_fold_with_pinned_k() {
        let cfg = SolverConfig {
            k_override: Some(2),
            base_t: 8,
            ..Default::default()
        };
        let x = ItemMultiset::from_values([3, 5, 70, 95, 130]);
        let counters = WorkCounters::new();
        let got = fast_unbounded_with(&x, 400, &cfg, &counters).unwrap();
        assert_eq!(got, unbounded_oracle(&x, 400).unwrap());
        assert!(counters.snapshot().max_depth >= 1);
    }

    #[test]
    fn two_dims() {
        let x = ItemMultiset::from_copies(2, [[1u64, 3], [4, 1], [2, 2]]).unwrap();
        let cfg = SolverConfig::default();
        assert_eq!(fast_unbounded(&x, 80, &cfg).unwrap(), unbounded_oracle(&x, 80).unwrap());
    }
}
