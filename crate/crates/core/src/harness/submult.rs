//! Exact check of `|A_1 + .. + A_K|^(K-1) <= prod_i |B_i|`, where `B_i` is
//! the sumset of all sets except `A_i`.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::sumset::{sumset, SumsetEngineConfig};
use crate::types::PointSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmultReport {
    pub k: usize,
    /// `|A_1 + .. + A_K|`.
    pub total: u64,
    /// `|B_i|` for each `i`.
    pub leave_one_out: Vec<u64>,
    pub lhs: BigUint,
    pub rhs: BigUint,
}

impl SubmultReport {
    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs
    }
}

pub fn check_submultiplicativity(sets: &[PointSet]) -> Result<SubmultReport> {
    let k = sets.len();
    if k < 2 {
        return Err(Error::InvalidArgument(format!("need at least 2 sets, got {k}")));
    }
    if let Some(bad) = sets.iter().find(|s| s.dim() != 1) {
        return Err(Error::DimMismatch {
            left: 1,
            right: bad.dim(),
        });
    }
    let cfg = SumsetEngineConfig::dense();
    let add = |a: &PointSet, b: &PointSet| sumset(a, b, &cfg);
    // prefix[i] = A_1 + .. + A_i, suffix[i] = A_{i+1} + .. + A_K
    let mut prefix = vec![PointSet::zero(1)];
    for s in sets {
        prefix.push(add(prefix.last().expect("seeded"), s)?);
    }
    let mut suffix = vec![PointSet::zero(1)];
    for s in sets.iter().rev() {
        suffix.push(add(suffix.last().expect("seeded"), s)?);
    }
    suffix.reverse();
    let mut leave_one_out = Vec::with_capacity(k);
    for i in 0..k {
        leave_one_out.push(add(&prefix[i], &suffix[i + 1])?.len() as u64);
    }
    let total = prefix[k].len() as u64;
    let lhs = BigUint::from(total).pow(k as u32 - 1);
    let rhs = leave_one_out.iter().map(|&b| BigUint::from(b)).product();
    Ok(SubmultReport {
        k,
        total,
        leave_one_out,
        lhs,
        rhs,
    })
}
