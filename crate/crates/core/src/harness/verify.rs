//! Repeated seeded runs of the fast solvers against the oracles.

use super::instance::{InstanceFile, Mode};
use crate::baseline::{bellman, naive_oracle, unbounded_oracle, NAIVE_ORACLE_LIMIT};
use crate::error::Result;
use crate::solver::{solve, SolverConfig};
use crate::unbounded::fast_unbounded;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub runs: u64,
    pub mismatches: u64,
    /// Whether the exhaustive oracle was consulted (it refuses `n > 24`).
    pub naive_checked: bool,
    /// One line per mismatching seed.
    pub failures: Vec<String>,
}

/// Runs the fast solver for seeds `cfg.seed .. cfg.seed + seeds`.
pub fn verify_instance(inst: &InstanceFile, seeds: u64, cfg: &SolverConfig) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    if seeds == 0 {
        return Ok(report);
    }
    let x = inst.multiset()?;
    let t = inst.t;
    let (reference, naive) = match inst.mode {
        Mode::Bounded => {
            let naive = if x.n() <= NAIVE_ORACLE_LIMIT {
                report.naive_checked = true;
                Some(naive_oracle(&x, t)?)
            } else {
                None
            };
            (bellman(&x, t), naive)
        }
        Mode::Unbounded => (unbounded_oracle(&x, t)?, None),
    };
    for i in 0..seeds {
        let run_cfg = SolverConfig {
            seed: cfg.seed.wrapping_add(i),
            ..*cfg
        };
        let got = match inst.mode {
            Mode::Bounded => solve(&x, t, &run_cfg),
            Mode::Unbounded => fast_unbounded(&x, t, &run_cfg),
        };
        report.runs += 1;
        let failure = match got {
            Ok(s) if s != reference => Some(format!("seed {}: {} sums, oracle has {}", run_cfg.seed, s.len(), reference.len())),
            Ok(s) if naive.as_ref().is_some_and(|n| *n != s) => Some(format!("seed {}: differs from naive oracle", run_cfg.seed)),
            Ok(_) => None,
            Err(e) => Some(format!("seed {}: {e}", run_cfg.seed)),
        };
        if let Some(line) = failure {
            report.mismatches += 1;
            report.failures.push(line);
        }
    }
    Ok(report)
}
