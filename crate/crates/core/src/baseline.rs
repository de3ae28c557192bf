//! Input preprocessing, Bellman's dynamic program and exhaustive oracles.
//!
//! The oracles here are deliberately naive; every faster routine in the
//! crate is tested against them.

use crate::error::{Error, Result};
use crate::types::{ItemMultiset, PointSet, TargetBox};

/// Largest multiset size the exhaustive oracle accepts.
pub const NAIVE_ORACLE_LIMIT: u64 = 24;

/// Default cell budget for the dense unbounded reachability table.
pub const DENSE_TABLE_BUDGET: u128 = 1 << 26;

/// Normalizes a raw item list for target `t` in `d` dimensions.
///
/// Drops items with a coordinate above `t` and the zero vector, and caps
/// the multiplicity of `x` at `min_{j: x[j] > 0} floor(t / x[j])`: no sum
/// inside the box can use more copies than that.
pub fn preprocess_items<P: AsRef<[i64]>>(raw: &[P], t: u64, d: usize) -> Result<ItemMultiset> {
    if d == 0 {
        return Err(Error::InvalidDimension);
    }
    let mut flat = Vec::with_capacity(raw.len() * d);
    for (index, item) in raw.iter().enumerate() {
        let item = item.as_ref();
        if item.len() != d {
            return Err(Error::WrongArity {
                expected: d,
                got: item.len(),
            });
        }
        if let Some(&value) = item.iter().find(|&&c| c < 0) {
            return Err(Error::NegativeCoordinate { index, value });
        }
        if item.iter().all(|&c| c == 0) || item.iter().any(|&c| c as u64 > t) {
            continue;
        }
        flat.extend(item.iter().map(|&c| c as u64));
    }
    Ok(cap_multiplicities(ItemMultiset::from_flat_copies(d, flat), t))
}

/// Applies the multiplicity cap to an already nonnegative multiset. Also
/// drops zero and out-of-box items, so it is idempotent.
pub fn cap_multiplicities(x: ItemMultiset, t: u64) -> ItemMultiset {
    let dim = x.dim();
    let mut coords = Vec::new();
    let mut mult = Vec::new();
    for (p, m) in x.entries() {
        if p.iter().all(|&c| c == 0) || p.iter().any(|&c| c > t) {
            continue;
        }
        let cap = p
            .iter()
            .filter(|&&c| c > 0)
            .map(|&c| t / c)
            .min()
            .unwrap_or(0);
        coords.extend_from_slice(p);
        mult.push(m.min(cap));
    }
    ItemMultiset::from_entries(PointSet::from_sorted_flat(dim, coords), mult)
        .expect("parallel vectors have equal length")
}

/// Bellman's algorithm: `S <- S ∪ ((S + x) ∩ box)` for every item copy.
pub fn bellman(x: &ItemMultiset, t: u64) -> PointSet {
    let dim = x.dim();
    let bx = TargetBox::full(dim, t);
    let mut sums = PointSet::zero(dim);
    for item in x.copies() {
        let mut shifted = Vec::with_capacity(sums.as_flat().len());
        for p in sums.iter() {
            let q_start = shifted.len();
            shifted.extend(p.iter().zip(item).map(|(a, b)| a + b));
            if !bx.contains(&shifted[q_start..]) {
                shifted.truncate(q_start);
            }
        }
        // Adding a fixed vector preserves lexicographic order.
        let shifted = PointSet::from_sorted_flat(dim, shifted);
        sums = sums.union(&shifted);
    }
    sums
}

/// Enumerates all `2^n` sub-multisets. Refuses `n > 24`.
pub fn naive_oracle(x: &ItemMultiset, t: u64) -> Result<PointSet> {
    let n = x.n();
    if n > NAIVE_ORACLE_LIMIT {
        return Err(Error::OracleTooLarge {
            n,
            limit: NAIVE_ORACLE_LIMIT,
        });
    }
    let dim = x.dim();
    let bx = TargetBox::full(dim, t);
    let items: Vec<&[u64]> = x.copies().collect();
    let mut current = vec![0u64; dim];
    let mut found = current.clone();
    // Gray code walk: step i flips item trailing_zeros(i).
    for i in 1u64..(1u64 << n) {
        let bit = i.trailing_zeros() as usize;
        let gray = i ^ (i >> 1);
        let item = items[bit];
        if gray >> bit & 1 == 1 {
            current.iter_mut().zip(item).for_each(|(c, v)| *c += v);
        } else {
            current.iter_mut().zip(item).for_each(|(c, v)| *c -= v);
        }
        if bx.contains(&current) {
            found.extend_from_slice(&current);
        }
    }
    Ok(PointSet::from_flat(dim, found))
}

/// Dense reachability over `[0..t]^d`, the ground truth for unbounded
/// subset sums.
pub fn unbounded_oracle(x: &ItemMultiset, t: u64) -> Result<PointSet> {
    unbounded_oracle_with_budget(x, t, DENSE_TABLE_BUDGET)
}

pub fn unbounded_oracle_with_budget(x: &ItemMultiset, t: u64, budget: u128) -> Result<PointSet> {
    let dim = x.dim();
    let side = t as u128 + 1;
    let cells = side.checked_pow(dim as u32).unwrap_or(u128::MAX);
    if cells > budget {
        return Err(Error::TableTooLarge { cells, budget });
    }
    let side = side as usize;
    let cells = cells as usize;
    // Row-major with coordinate 0 most significant, so index order is
    // lexicographic order and v - x always precedes v.
    let items: Vec<(Vec<u64>, usize)> = x
        .distinct()
        .iter()
        .filter(|p| p.iter().any(|&c| c > 0) && p.iter().all(|&c| c <= t))
        .map(|p| {
            let offset = p.iter().fold(0usize, |acc, &c| acc * side + c as usize);
            (p.to_vec(), offset)
        })
        .collect();
    let mut reach = vec![false; cells];
    reach[0] = true;
    let mut digits = vec![0u64; dim];
    let mut out = vec![0u64; dim];
    for idx in 1..cells {
        // advance the mixed-radix counter
        for j in (0..dim).rev() {
            if digits[j] < t {
                digits[j] += 1;
                break;
            }
            digits[j] = 0;
        }
        let hit = items.iter().any(|(p, offset)| {
            *offset <= idx && p.iter().zip(&digits).all(|(c, v)| c <= v) && reach[idx - offset]
        });
        if hit {
            reach[idx] = true;
            out.extend_from_slice(&digits);
        }
    }
    Ok(PointSet::from_sorted_flat(dim, out))
}
