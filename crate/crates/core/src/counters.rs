//! Work counters used as a portable proxy for running time.

use std::sync::atomic::{AtomicU64, Ordering::Relaxed};
use std::sync::OnceLock;

/// Shared, thread-safe work counters. All updates are relaxed atomics; the
/// totals are deterministic for a fixed seed because the pipelines are.
#[derive(Debug, Default)]
pub struct WorkCounters {
    sumset_elems: AtomicU64,
    pr_nodes: AtomicU64,
    pr_work: AtomicU64,
    hashes: AtomicU64,
    max_depth: AtomicU64,
    retries: AtomicU64,
}

/// A plain copy of the counters at one point in time.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CounterSnapshot {
    /// Elements emitted by sumset computations.
    pub sumset_elems: u64,
    /// Prefix-restricted sumset calls, including recursive ones.
    pub pr_nodes: u64,
    /// Work units charged against prefix-restricted budgets.
    pub pr_work: u64,
    /// Hash functions evaluated by large-item combination.
    pub hashes: u64,
    /// Deepest recursion level reached by the randomized solver.
    pub max_depth: u64,
    /// Reseeded retries after a depth-guard violation.
    pub retries: u64,
}

impl CounterSnapshot {
    pub fn total_work(&self) -> u64 {
        self.sumset_elems + self.pr_work
    }
}

impl WorkCounters {
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn add_sumset_elems(&self, n: u64) {
        self.sumset_elems.fetch_add(n, Relaxed);
    }

    pub(crate) fn add_pr_node(&self) {
        self.pr_nodes.fetch_add(1, Relaxed);
    }

    pub(crate) fn add_pr_work(&self, n: u64) {
        self.pr_work.fetch_add(n, Relaxed);
    }

    pub(crate) fn add_hashes(&self, n: u64) {
        self.hashes.fetch_add(n, Relaxed);
    }

    pub(crate) fn observe_depth(&self, depth: u64) {
        self.max_depth.fetch_max(depth, Relaxed);
    }

    pub(crate) fn add_retry(&self) {
        self.retries.fetch_add(1, Relaxed);
    }

    pub fn snapshot(&self) -> CounterSnapshot {
        CounterSnapshot {
            sumset_elems: self.sumset_elems.load(Relaxed),
            pr_nodes: self.pr_nodes.load(Relaxed),
            pr_work: self.pr_work.load(Relaxed),
            hashes: self.hashes.load(Relaxed),
            max_depth: self.max_depth.load(Relaxed),
            retries: self.retries.load(Relaxed),
        }
    }
}

/// Whether `SSLAB_DEBUG_ASSERTS=1` is set. Read once per process.
pub fn debug_asserts() -> bool {
    static FLAG: OnceLock<bool> = OnceLock::new();
    *FLAG.get_or_init(|| std::env::var("SSLAB_DEBUG_ASSERTS").is_ok_and(|v| v == "1"))
}
