//! Prefix-restricted sumsets: `C = (A + B) ∩ [0..t]^k x [0..inf)^(d-k)`.
//!
//! For `k = 0` this is a plain sumset. Otherwise both sides are split into
//! blocks along coordinate `k`, chosen so that along every diagonal chain of
//! block pairs the recursive outputs are disjoint and at most one pair
//! straddles the cap. Each relevant pair is solved recursively with one
//! fewer capped coordinate. The block count `g` depends on `|C|`, which is
//! unknown, so it is found by doubling guesses under a work budget.

use std::collections::HashSet;
use std::ops::Range;

use crate::counters::{debug_asserts, WorkCounters};
use crate::error::{Error, Result};
use crate::sumset::{sumset_with, SumsetEngineConfig};
use crate::types::{canonicalize, PointSet, TargetBox};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrefixConfig {
    pub engine: SumsetEngineConfig,
    /// Constant `c_b` of the per-guess work budget.
    pub budget_const: f64,
    /// Exponent of the `log(|A||B|)` budget factor; `None` means `2d`.
    pub log_exponent: Option<u32>,
}

impl Default for PrefixConfig {
    fn default() -> Self {
        PrefixConfig {
            engine: SumsetEngineConfig::default(),
            budget_const: 64.0,
            log_exponent: None,
        }
    }
}

impl PrefixConfig {
    pub fn with_engine(engine: SumsetEngineConfig) -> Self {
        PrefixConfig {
            engine,
            ..Default::default()
        }
    }

    /// `c_b * (|A| + |B| + (|A||B|)^(1 - 1/(k+1)) * s^(1/(k+1))) * log2(|A||B|)^e`.
    pub fn budget(&self, na: usize, nb: usize, guess: u64, k: usize, dim: usize) -> u64 {
        let pairs = na as f64 * nb as f64;
        let e = self.log_exponent.unwrap_or(2 * dim as u32) as i32;
        let inv = 1.0 / (k as f64 + 1.0);
        let core = na as f64 + nb as f64 + pairs.powf(1.0 - inv) * (guess as f64).powf(inv);
        let b = self.budget_const * core * pairs.log2().max(1.0).powi(e);
        if b >= u64::MAX as f64 {
            u64::MAX
        } else {
            b as u64
        }
    }
}

/// Result of a top-level prefix-restricted computation with its accounting.
#[derive(Clone, Debug)]
pub struct PrefixOutcome {
    pub set: PointSet,
    /// All work, including aborted guesses and recursive calls.
    pub work: u64,
    /// The guess `s` of `|C|` that completed.
    pub final_guess: u64,
    /// Work of the completed guess alone.
    pub final_work: u64,
    /// Budget the completed guess ran under (`u64::MAX` once `s >= |A||B|`).
    pub final_budget: u64,
}

pub fn prefix_restricted_sumset(a: &PointSet, b: &PointSet, bx: &TargetBox, cfg: &PrefixConfig) -> Result<PointSet> {
    prefix_restricted_sumset_with(a, b, bx, cfg, &WorkCounters::new())
}

pub fn prefix_restricted_sumset_with(
    a: &PointSet,
    b: &PointSet,
    bx: &TargetBox,
    cfg: &PrefixConfig,
    counters: &WorkCounters,
) -> Result<PointSet> {
    Ok(prefix_restricted_run(a, b, bx, cfg, counters)?.set)
}

pub fn prefix_restricted_run(
    a: &PointSet,
    b: &PointSet,
    bx: &TargetBox,
    cfg: &PrefixConfig,
    counters: &WorkCounters,
) -> Result<PrefixOutcome> {
    for s in [a, b] {
        if s.dim() != bx.dim {
            return Err(Error::DimMismatch {
                left: s.dim(),
                right: bx.dim,
            });
        }
    }
    restricted(a, b, bx.capped, bx.t, cfg, counters)
}

fn restricted(
    a: &PointSet,
    b: &PointSet,
    k: usize,
    t: u64,
    cfg: &PrefixConfig,
    counters: &WorkCounters,
) -> Result<PrefixOutcome> {
    counters.add_pr_node();
    if k == 0 {
        let set = sumset_with(a, b, &cfg.engine, counters)?;
        let work = (a.len() + b.len() + set.len()) as u64;
        counters.add_pr_work(work);
        return Ok(PrefixOutcome {
            set,
            work,
            final_guess: 0,
            final_work: work,
            final_budget: u64::MAX,
        });
    }
    let dim = a.dim();
    let bx = TargetBox { dim, t, capped: k };
    let (a, b) = prefilter_compatible(a, b, &bx);
    let mut work = (a.len() + b.len()) as u64;
    counters.add_pr_work(work);
    if a.is_empty() || b.is_empty() {
        return Ok(PrefixOutcome {
            set: PointSet::empty(dim),
            work,
            final_guess: 0,
            final_work: 0,
            final_budget: u64::MAX,
        });
    }
    let pairs = a.len() as u64 * b.len() as u64;
    let mut guess = 2u64;
    loop {
        let unlimited = guess >= pairs;
        let g = if unlimited {
            2
        } else {
            let ratio = pairs as f64 / guess as f64;
            (ratio.powf(1.0 / (k as f64 + 1.0)).ceil() as usize).max(2)
        };
        let budget = if unlimited {
            u64::MAX
        } else {
            cfg.budget(a.len(), b.len(), guess, k, dim)
        };
        match attempt(&a, &b, k, t, g, budget, cfg, counters)? {
            Guess::Done(set, w) => {
                work += w;
                return Ok(PrefixOutcome {
                    set,
                    work,
                    final_guess: guess,
                    final_work: w,
                    final_budget: budget,
                });
            }
            Guess::OverBudget(w) => {
                work += w;
                guess = guess.saturating_mul(2);
            }
        }
    }
}

enum Guess {
    Done(PointSet, u64),
    OverBudget(u64),
}

struct PairRecord {
    delta: isize,
    total: bool,
    out: Range<usize>,
}

#[allow(clippy::too_many_arguments)]
fn attempt(
    a: &PointSet,
    b: &PointSet,
    k: usize,
    t: u64,
    g: usize,
    budget: u64,
    cfg: &PrefixConfig,
    counters: &WorkCounters,
) -> Result<Guess> {
    let dim = a.dim();
    let key = k - 1;
    let bx = TargetBox { dim, t, capped: k };
    let part = BlockPartition::build(a, b, g, key, t);
    if debug_asserts() {
        if let Err(msg) = part.check_properties(t) {
            panic!("block partition invariant violated: {msg}");
        }
    }
    let a_blocks: Vec<PointSet> = (0..part.a_blocks.len()).map(|i| part.a_block(a, i)).collect();
    let b_blocks: Vec<PointSet> = (0..part.b_blocks.len()).map(|j| part.b_block(b, j)).collect();
    let a_ranges: Vec<(u64, u64)> = (0..a_blocks.len()).map(|i| part.a_key_range(i)).collect();
    let b_ranges: Vec<(u64, u64)> = (0..b_blocks.len()).map(|j| part.b_key_range(j)).collect();

    let mut local = (a.len() + b.len()) as u64;
    let mut total_work = local;
    let mut out: Vec<u64> = Vec::new();
    let mut records = Vec::new();
    let tracing = debug_asserts();

    for (i, ablock) in a_blocks.iter().enumerate() {
        let (a_min, a_max) = a_ranges[i];
        for (j, bblock) in b_blocks.iter().enumerate() {
            let (b_min, b_max) = b_ranges[j];
            // B-blocks are sorted by key, so later ones are not relevant either
            if a_min + b_min > t {
                break;
            }
            local += 1;
            total_work += 1;
            let start = out.len() / dim;
            let totally = a_max + b_max <= t;
            if totally {
                let child = restricted(ablock, bblock, k - 1, t, cfg, counters)?;
                total_work += child.work;
                out.extend_from_slice(child.set.as_flat());
            } else {
                let cost = (ablock.len() * bblock.len()) as u64;
                local += cost;
                total_work += cost;
                for p in ablock.iter() {
                    for q in bblock.iter() {
                        let s0 = out.len();
                        out.extend(p.iter().zip(q).map(|(x, y)| x + y));
                        if !bx.contains(&out[s0..]) {
                            out.truncate(s0);
                        }
                    }
                }
            }
            if tracing {
                records.push(PairRecord {
                    delta: i as isize - j as isize,
                    total: totally,
                    out: start..out.len() / dim,
                });
            }
            if total_work > budget {
                counters.add_pr_work(local);
                return Ok(Guess::OverBudget(total_work));
            }
        }
    }
    if tracing {
        check_chains(&records, &out, dim);
    }
    let emitted = (out.len() / dim) as u64;
    local += emitted;
    total_work += emitted;
    counters.add_pr_work(local);
    Ok(Guess::Done(PointSet::from_sorted_flat(dim, canonicalize(dim, out)), total_work))
}

fn check_chains(records: &[PairRecord], out: &[u64], dim: usize) {
    let mut deltas: Vec<isize> = records.iter().map(|r| r.delta).collect();
    deltas.sort_unstable();
    deltas.dedup();
    for delta in deltas {
        let chain: Vec<&PairRecord> = records.iter().filter(|r| r.delta == delta).collect();
        let partial = chain.iter().filter(|r| !r.total).count();
        assert!(partial <= 1, "chain {delta} has {partial} partially relevant pairs");
        let mut seen = HashSet::new();
        for r in chain.iter().filter(|r| r.total) {
            for idx in r.out.clone() {
                let p = &out[idx * dim..(idx + 1) * dim];
                assert!(seen.insert(p.to_vec()), "chain {delta} outputs overlap at {p:?}");
            }
        }
    }
}

/// Keeps exactly the points of `A` that have a partner in `B` with the sum
/// inside `bx`, and symmetrically for `B`.
pub fn prefilter_compatible(a: &PointSet, b: &PointSet, bx: &TargetBox) -> (PointSet, PointSet) {
    if bx.capped == 0 {
        return (a.clone(), b.clone());
    }
    let keep_a = compatible_mask(a, b, bx.capped, bx.t);
    let keep_b = compatible_mask(b, a, bx.capped, bx.t);
    (select(a, &keep_a), select(b, &keep_b))
}

fn select(s: &PointSet, keep: &[bool]) -> PointSet {
    let mut flat = Vec::new();
    for (p, &k) in s.iter().zip(keep) {
        if k {
            flat.extend_from_slice(p);
        }
    }
    PointSet::from_sorted_flat(s.dim(), flat)
}

/// For each `p` in `left`: is there a `q` in `right` with `p[j] + q[j] <= t`
/// for all `j < k`?
fn compatible_mask(left: &PointSet, right: &PointSet, k: usize, t: u64) -> Vec<bool> {
    let fits = |p: &[u64]| p[..k].iter().all(|&c| c <= t);
    match k {
        1 => {
            let min0 = right.iter().map(|q| q[0]).min();
            left.iter()
                .map(|p| matches!(min0, Some(m) if p[0] <= t && m <= t - p[0]))
                .collect()
        }
        2 => {
            // sweep over coordinate 0 with a prefix minimum of coordinate 1
            let mut qs: Vec<(u64, u64)> = right.iter().map(|q| (q[0], q[1])).collect();
            qs.sort_unstable();
            let mut prefix_min = Vec::with_capacity(qs.len());
            let mut cur = u64::MAX;
            for &(_, y) in &qs {
                cur = cur.min(y);
                prefix_min.push(cur);
            }
            left.iter()
                .map(|p| {
                    if !fits(p) {
                        return false;
                    }
                    let idx = qs.partition_point(|&(x, _)| x <= t - p[0]);
                    idx > 0 && prefix_min[idx - 1] <= t - p[1]
                })
                .collect()
        }
        _ => {
            // minimal elements of `right` under componentwise order on the
            // first k coordinates, then a scan per query point
            let mut qs: Vec<&[u64]> = right.iter().map(|q| &q[..k]).collect();
            qs.sort_unstable();
            let mut skyline: Vec<&[u64]> = Vec::new();
            for q in qs {
                if !skyline.iter().any(|s| s.iter().zip(q).all(|(x, y)| x <= y)) {
                    skyline.push(q);
                }
            }
            left.iter()
                .map(|p| {
                    fits(p)
                        && skyline
                            .iter()
                            .any(|q| q.iter().zip(p).all(|(&x, &y)| x <= t - y))
                })
                .collect()
        }
    }
}

/// One block of `B`: a range into `B` sorted by the key coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BBlock {
    pub range: Range<usize>,
    pub heavy: bool,
    pub pivot: Option<u64>,
}

/// Partition of `A` and `B` into blocks along one coordinate.
#[derive(Clone, Debug)]
pub struct BlockPartition {
    /// Coordinate index the blocks are cut along.
    pub key: usize,
    pub g: usize,
    /// Ranges into `a_order`.
    pub a_blocks: Vec<Range<usize>>,
    pub b_blocks: Vec<BBlock>,
    /// Indices of `A` sorted by key coordinate (stable).
    pub a_order: Vec<usize>,
    pub b_order: Vec<usize>,
    a_keys: Vec<u64>,
    b_keys: Vec<u64>,
}

/// Builds the block partition of `A` and `B` along coordinate
/// `bx.capped - 1` with block-count bound `g`.
pub fn build_block_partition(a: &PointSet, b: &PointSet, g: usize, bx: &TargetBox) -> Result<BlockPartition> {
    if a.dim() != b.dim() {
        return Err(Error::DimMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    if bx.capped == 0 || g < 2 {
        return Err(Error::InvalidArgument(format!(
            "block partition needs capped >= 1 and g >= 2 (got capped={}, g={g})",
            bx.capped
        )));
    }
    Ok(BlockPartition::build(a, b, g, bx.capped - 1, bx.t))
}

fn sorted_by_key(s: &PointSet, key: usize) -> (Vec<usize>, Vec<u64>) {
    let mut order: Vec<usize> = (0..s.len()).collect();
    order.sort_by_key(|&i| s.get(i)[key]);
    let keys = order.iter().map(|&i| s.get(i)[key]).collect();
    (order, keys)
}

impl BlockPartition {
    fn build(a: &PointSet, b: &PointSet, g: usize, key: usize, t: u64) -> Self {
        let (a_order, a_keys) = sorted_by_key(a, key);
        let (b_order, b_keys) = sorted_by_key(b, key);
        let na = a_keys.len();
        let nb = b_keys.len();

        // runs of equal key in B; a run is a pivot when it holds >= 2|B|/g points
        let mut runs: Vec<(Range<usize>, bool)> = Vec::new();
        let mut start = 0;
        while start < nb {
            let end = start + b_keys[start..].partition_point(|&v| v == b_keys[start]);
            let pivot = (end - start) * g >= 2 * nb;
            runs.push((start..end, pivot));
            start = end;
        }

        // A: consecutive blocks of ceil(2|A|/g), then cut at t - z per pivot z
        let len_a = (2 * na).div_ceil(g).max(1);
        let mut a_blocks: Vec<Range<usize>> = (0..na)
            .step_by(len_a)
            .map(|s| s..(s + len_a).min(na))
            .collect();
        for (run, _) in runs.iter().filter(|(_, pivot)| *pivot) {
            let z = b_keys[run.start];
            if z > t {
                continue;
            }
            let threshold = t - z;
            let hit = a_blocks
                .iter()
                .position(|r| a_keys[r.start] <= threshold && threshold < a_keys[r.end - 1]);
            if let Some(i) = hit {
                let r = a_blocks[i].clone();
                let cut = r.start + a_keys[r.clone()].partition_point(|&v| v <= threshold);
                a_blocks[i] = r.start..cut;
                a_blocks.insert(i + 1, cut..r.end);
            }
        }

        // B: heavy block per pivot, light blocks of <= ceil(2|B|/g) elsewhere,
        // never splitting a run
        let cap_b = (2 * nb).div_ceil(g).max(1);
        let mut b_blocks = Vec::new();
        let mut light: Option<Range<usize>> = None;
        for (run, pivot) in runs {
            if pivot {
                if let Some(l) = light.take() {
                    b_blocks.push(BBlock { range: l, heavy: false, pivot: None });
                }
                b_blocks.push(BBlock {
                    pivot: Some(b_keys[run.start]),
                    range: run,
                    heavy: true,
                });
                continue;
            }
            light = match light.take() {
                Some(l) if l.len() + run.len() <= cap_b => Some(l.start..run.end),
                Some(l) => {
                    b_blocks.push(BBlock { range: l, heavy: false, pivot: None });
                    Some(run)
                }
                None => Some(run),
            };
        }
        if let Some(l) = light {
            b_blocks.push(BBlock { range: l, heavy: false, pivot: None });
        }

        BlockPartition {
            key,
            g,
            a_blocks,
            b_blocks,
            a_order,
            b_order,
            a_keys,
            b_keys,
        }
    }

    pub fn a_key_range(&self, i: usize) -> (u64, u64) {
        let r = &self.a_blocks[i];
        (self.a_keys[r.start], self.a_keys[r.end - 1])
    }

    pub fn b_key_range(&self, j: usize) -> (u64, u64) {
        let r = &self.b_blocks[j].range;
        (self.b_keys[r.start], self.b_keys[r.end - 1])
    }

    /// Block `i` of `A` as a canonical point set.
    pub fn a_block(&self, a: &PointSet, i: usize) -> PointSet {
        gather(a, &self.a_order[self.a_blocks[i].clone()])
    }

    pub fn b_block(&self, b: &PointSet, j: usize) -> PointSet {
        gather(b, &self.b_order[self.b_blocks[j].range.clone()])
    }

    /// Checks the four partition properties and the block-count bound.
    pub fn check_properties(&self, t: u64) -> std::result::Result<(), String> {
        let na = self.a_keys.len();
        let nb = self.b_keys.len();
        let cap_a = (2 * na).div_ceil(self.g).max(1);
        let cap_b = (2 * nb).div_ceil(self.g).max(1);
        if self.a_blocks.len() > self.g || self.b_blocks.len() > self.g {
            return Err(format!(
                "{} A-blocks and {} B-blocks exceed g = {}",
                self.a_blocks.len(),
                self.b_blocks.len(),
                self.g
            ));
        }
        let covered_a: usize = self.a_blocks.iter().map(|r| r.len()).sum();
        let covered_b: usize = self.b_blocks.iter().map(|b| b.range.len()).sum();
        if covered_a != na || covered_b != nb || self.a_blocks.iter().any(|r| r.is_empty()) {
            return Err("blocks do not partition the inputs".into());
        }
        for i in 1..self.a_blocks.len() {
            if self.a_key_range(i - 1).1 > self.a_key_range(i).0 {
                return Err(format!("property (1) fails between A-blocks {} and {i}", i - 1));
            }
        }
        for j in 1..self.b_blocks.len() {
            if self.b_key_range(j - 1).1 >= self.b_key_range(j).0 {
                return Err(format!("property (2) fails between B-blocks {} and {j}", j - 1));
            }
        }
        if let Some(i) = self.a_blocks.iter().position(|r| r.len() > cap_a) {
            return Err(format!("property (3): A-block {i} exceeds {cap_a}"));
        }
        for (j, block) in self.b_blocks.iter().enumerate() {
            let (lo, hi) = self.b_key_range(j);
            if block.heavy {
                if lo != hi || block.pivot != Some(lo) {
                    return Err(format!("heavy B-block {j} spans several key values"));
                }
                if lo <= t {
                    let threshold = t - lo;
                    let straddles = (0..self.a_blocks.len()).any(|i| {
                        let (amin, amax) = self.a_key_range(i);
                        amin <= threshold && threshold < amax
                    });
                    if straddles {
                        return Err(format!("property (4): an A-block straddles t - {lo}"));
                    }
                }
            } else if block.range.len() > cap_b {
                return Err(format!("property (4): light B-block {j} exceeds {cap_b}"));
            }
        }
        Ok(())
    }
}

fn gather(s: &PointSet, idx: &[usize]) -> PointSet {
    let mut flat = Vec::with_capacity(idx.len() * s.dim());
    for &i in idx {
        flat.extend_from_slice(s.get(i));
    }
    PointSet::from_flat(s.dim(), flat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sumset::direct_sumset;

    fn brute(a: &PointSet, b: &PointSet, bx: &TargetBox) -> PointSet {
        direct_sumset(a, b).unwrap().clip(bx)
    }

    #[test]
    fn prefilter_examples() {
        let a = PointSet::from_values([5, 6]);
        let bx = TargetBox::new(1, 10, 1).unwrap();
        let (a2, b2) = prefilter_compatible(&a, &a, &bx);
        assert_eq!(a2.values(), &[5]);
        assert_eq!(b2.values(), &[5]);

        let open = TargetBox::new(1, 10, 0).unwrap();
        let (a2, b2) = prefilter_compatible(&a, &a, &open);
        assert_eq!((a2, b2), (a.clone(), a.clone()));

        let far = PointSet::from_values([20]);
        let (a2, b2) = prefilter_compatible(&far, &far, &bx);
        assert!(a2.is_empty() && b2.is_empty());
    }

    #[test]
    fn prefilter_multi_dim_matches_brute() {
        let a = PointSet::from_points(3, [[1u64, 4, 2], [3, 0, 5], [6, 6, 6], [0, 0, 9]]).unwrap();
        let b = PointSet::from_points(3, [[4u64, 1, 1], [0, 6, 0], [2, 2, 2]]).unwrap();
        for k in 1..=3 {
            let bx = TargetBox::new(3, 6, k).unwrap();
            let (a2, b2) = prefilter_compatible(&a, &b, &bx);
            let want_a = a.filter(|p| b.iter().any(|q| bx.contains(&add(p, q))));
            let want_b = b.filter(|q| a.iter().any(|p| bx.contains(&add(p, q))));
            assert_eq!(a2, want_a, "k={k}");
            assert_eq!(b2, want_b, "k={k}");
        }
    }

    fn add(p: &[u64], q: &[u64]) -> Vec<u64> {
        p.iter().zip(q).map(|(x, y)| x + y).collect()
    }

    #[test]
    fn single_pivot_gives_one_heavy_block() {
        let a = PointSet::from_values([0, 1, 2, 3, 4, 5]);
        let b = PointSet::from_points(2, (0..6u64).map(|i| [3, i])).unwrap();
        let a2 = PointSet::from_points(2, a.values().iter().map(|&v| [v, 0])).unwrap();
        let bx = TargetBox::new(2, 10, 1).unwrap();
        let part = build_block_partition(&a2, &b, 4, &bx).unwrap();
        assert_eq!(part.b_blocks.len(), 1);
        assert!(part.b_blocks[0].heavy);
        assert_eq!(part.b_blocks[0].pivot, Some(3));
        part.check_properties(10).unwrap();
    }

    #[test]
    fn distinct_keys_give_light_blocks() {
        let b = PointSet::from_values(0..8);
        let a = PointSet::from_values([0, 1]);
        let bx = TargetBox::new(1, 100, 1).unwrap();
        let part = build_block_partition(&a, &b, 8, &bx).unwrap();
        assert!(part.b_blocks.iter().all(|blk| !blk.heavy && blk.range.len() <= 2));
        assert_eq!(part.b_blocks.len(), 4);
        part.check_properties(100).unwrap();
    }

    #[test]
    fn pivot_threshold_subdivides_a_block() {
        // one A-block {0,1,2,3}; pivot z with t - z = 1 cuts it into {0,1},{2,3}
        let a = PointSet::from_values([0, 1, 2, 3]);
        let b = PointSet::from_points(2, [[9u64, 0], [9, 1], [9, 2], [9, 3]]).unwrap();
        let a2 = PointSet::from_points(2, a.values().iter().map(|&v| [v, 0])).unwrap();
        let bx = TargetBox::new(2, 10, 1).unwrap();
        let part = build_block_partition(&a2, &b, 2, &bx).unwrap();
        let ranges: Vec<(u64, u64)> = (0..part.a_blocks.len()).map(|i| part.a_key_range(i)).collect();
        assert_eq!(ranges, vec![(0, 1), (2, 3)]);
        part.check_properties(10).unwrap();
    }

    #[test]
    fn footnote_style_empty_result() {
        let (n, t) = (8u64, 1000u64);
        let a = PointSet::from_values((1..=n).map(|i| t / 2 + i));
        let b = PointSet::from_values((1..=n).map(|j| t / 2 + j * n));
        let full = direct_sumset(&a, &b).unwrap();
        assert_eq!(full.len(), 64);
        let bx = TargetBox::new(1, t, 1).unwrap();
        let c = prefix_restricted_sumset(&a, &b, &bx, &PrefixConfig::default()).unwrap();
        assert!(c.is_empty());
    }

    #[test]
    fn small_capped_example() {
        let a = PointSet::from_values(0..4);
        let bx = TargetBox::new(1, 4, 1).unwrap();
        let c = prefix_restricted_sumset(&a, &a, &bx, &PrefixConfig::default()).unwrap();
        assert_eq!(c.values(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn uncapped_is_plain_sumset() {
        let a = PointSet::from_values([0, 3, 7]);
        let b = PointSet::from_values([1, 2]);
        let bx = TargetBox::new(1, 2, 0).unwrap();
        let c = prefix_restricted_sumset(&a, &b, &bx, &PrefixConfig::default()).unwrap();
        assert_eq!(c, direct_sumset(&a, &b).unwrap());
    }

    #[test]
    fn tight_budget_forces_reguessing_but_stays_exact() {
        let a = PointSet::from_values((0..200).map(|i| i * 3));
        let b = PointSet::from_values((0..150).map(|i| i * 5 + 1));
        let bx = TargetBox::new(1, 400, 1).unwrap();
        let cfg = PrefixConfig {
            budget_const: 0.01,
            log_exponent: Some(0),
            ..Default::default()
        };
        let out = prefix_restricted_run(&a, &b, &bx, &cfg, &WorkCounters::new()).unwrap();
        assert!(out.final_guess > 2, "expected at least one abort");
        assert_eq!(out.set, brute(&a, &b, &bx));
    }

    #[test]
    fn three_dims_match_brute() {
        let a = PointSet::from_points(3, [[1u64, 2, 3], [4, 0, 1], [2, 2, 2], [0, 5, 0]]).unwrap();
        let b = PointSet::from_points(3, [[0u64, 0, 0], [3, 3, 3], [1, 0, 4]]).unwrap();
        for k in 0..=3 {
            let bx = TargetBox::new(3, 5, k).unwrap();
            let c = prefix_restricted_sumset(&a, &b, &bx, &PrefixConfig::default()).unwrap();
            assert_eq!(c, brute(&a, &b, &bx), "k={k}");
        }
    }

    #[test]
    fn dim_mismatch() {
        let a = PointSet::from_values([1]);
        let b = PointSet::zero(2);
        let bx = TargetBox::full(2, 3);
        assert!(matches!(
            prefix_restricted_sumset(&a, &b, &bx, &PrefixConfig::default()),
            Err(Error::DimMismatch { .. })
        ));
    }
}
