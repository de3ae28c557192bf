// Acceptance suite: one line per criterion. Criterion 9 is reported only.
// Run with `cargo test --test acceptance`.

use std::process::ExitCode;
use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sslab::color::build_rs_family;
use sslab::harness::{check_submultiplicativity, generate, GenKind};
use sslab::solver::solve_with;
use sslab::sumset::direct_sumset;
use sslab::unbounded::fast_unbounded_with;
use sslab::{
    bellman, naive_oracle, prefix_restricted_sumset, preprocess_items, sumset, unbounded_oracle, ItemMultiset,
    PointSet, PrefixConfig, SolverConfig, SumsetEngineConfig, TargetBox, WorkCounters,
};

enum Verdict {
    Pass,
    Fail,
    Report,
}

struct Line {
    id: u32,
    name: &'static str,
    verdict: Verdict,
    detail: String,
}

impl Line {
    fn check(id: u32, name: &'static str, ok: bool, detail: String) -> Line {
        let verdict = if ok { Verdict::Pass } else { Verdict::Fail };
        Line { id, name, verdict, detail }
    }
}

fn rng(tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 ^ tag)
}

fn forced_hashing(seed: u64) -> SumsetEngineConfig {
    SumsetEngineConfig {
        dense_cutoff: 0,
        pairwise_cutoff: 0,
        ..SumsetEngineConfig::output_sensitive(seed)
    }
}

fn random_items(r: &mut ChaCha8Rng, n: usize, t: u64, dim: usize) -> Vec<Vec<i64>> {
    // mostly small items so the sets of sums are not trivial
    let cap = (t / r.gen_range(1..=4)).max(1);
    (0..n)
        .map(|_| (0..dim).map(|_| r.gen_range(0..=cap) as i64).collect())
        .collect()
}

fn random_set(r: &mut ChaCha8Rng, dim: usize, max: u64, len: usize) -> PointSet {
    let flat = (0..len * dim).map(|_| r.gen_range(0..=max)).collect();
    PointSet::from_flat(dim, flat)
}

/// Criteria 1 and 10.
fn bounded_oracles() -> Vec<Line> {
    let start = Instant::now();
    let mut r = rng(1);
    let (runs, mut mismatches, mut retries) = (500u64, 0u64, 0u64);
    let mut depth_violations = 0u64;
    let mut deepest = 0u64;
    let mut seeds = std::collections::BTreeSet::new();
    for i in 0..runs {
        let dim = 1 + (i % 2) as usize;
        let t = r.gen_range(1..=128);
        let n = r.gen_range(0..=14);
        let x = preprocess_items(&random_items(&mut r, n, t, dim), t, dim).expect("valid items");
        let cfg = SolverConfig {
            seed: i,
            base_n: 2,
            base_t: 4,
            ..Default::default()
        };
        seeds.insert(cfg.seed);
        let counters = WorkCounters::new();
        let fast = solve_with(&x, t, &cfg, &counters);
        let dp = bellman(&x, t);
        let brute = naive_oracle(&x, t).expect("n <= 14");
        if dp != brute || fast.as_ref().ok() != Some(&dp) {
            mismatches += 1;
        }
        let c = counters.snapshot();
        retries += c.retries;
        deepest = deepest.max(c.max_depth);
        let guard = 400.0 * (x.n().max(1) as f64).log2().max(1.0);
        if c.max_depth as f64 > guard {
            depth_violations += 1;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    vec![
        Line::check(
            1,
            "oracle equivalence (bounded)",
            mismatches == 0 && secs < 300.0 && seeds.len() >= 50,
            format!("{runs} instances, {} seeds, {mismatches} mismatches, {secs:.1}s", seeds.len()),
        ),
        Line::check(
            10,
            "depth guard",
            depth_violations == 0 && retries <= 1,
            format!("deepest recursion {deepest}, {depth_violations} guard violations, {retries} retries in {runs} runs"),
        ),
    ]
}

/// Small-item recursion with `K` pinned to 2 on the criterion 1 distribution.
fn bounded_small_items() -> Line {
    let mut r = rng(11);
    let (runs, mut mismatches, mut recursed) = (500u64, 0u64, 0u64);
    let (mut deepest, mut guard_violations) = (0u64, 0u64);
    for i in 0..runs {
        let dim = 1 + (i % 2) as usize;
        let t = r.gen_range(1..=128);
        let n = r.gen_range(0..=14);
        let x = preprocess_items(&random_items(&mut r, n, t, dim), t, dim).expect("valid items");
        let cfg = SolverConfig {
            seed: i,
            base_n: 2,
            base_t: 4,
            k_override: Some(2),
            ..Default::default()
        };
        let counters = WorkCounters::new();
        let fast = solve_with(&x, t, &cfg, &counters);
        let c = counters.snapshot();
        if c.max_depth > 0 {
            recursed += 1;
        }
        deepest = deepest.max(c.max_depth);
        if c.max_depth as f64 > 400.0 * (x.n().max(1) as f64).log2().max(1.0) {
            guard_violations += 1;
        }
        if fast.ok() != Some(naive_oracle(&x, t).expect("n <= 14")) {
            mismatches += 1;
        }
    }
    Line::check(
        1,
        "oracle equivalence (bounded, K = 2)",
        mismatches == 0 && guard_violations == 0,
        format!(
            "{runs} instances, {recursed} reached the small-item recursion (deepest {deepest}, {guard_violations} guard violations), {mismatches} mismatches"
        ),
    )
}

fn prefix_oracle() -> Line {
    let mut r = rng(2);
    let (runs, mut mismatches) = (2000u64, 0u64);
    for i in 0..runs {
        let dim = r.gen_range(1..=3);
        let t = r.gen_range(0..=256);
        let k = r.gen_range(0..=dim);
        let max = t + t / 4 + 1;
        let la = r.gen_range(0..=40);
        let lb = r.gen_range(0..=40);
        let a = random_set(&mut r, dim, max, la);
        let b = random_set(&mut r, dim, max, lb);
        let bx = TargetBox::new(dim, t, k).expect("k <= d");
        let engine = if i % 2 == 0 { forced_hashing(i) } else { SumsetEngineConfig::dense() };
        let got = prefix_restricted_sumset(&a, &b, &bx, &PrefixConfig::with_engine(engine));
        let want = direct_sumset(&a, &b).expect("same dim").clip(&bx);
        if got.ok() != Some(want) {
            mismatches += 1;
        }
    }
    Line::check(
        2,
        "oracle equivalence (prefix-restricted)",
        mismatches == 0,
        format!("{runs} cases, d <= 3, t <= 256, {mismatches} mismatches"),
    )
}

fn footnote2() -> Line {
    let files = generate(GenKind::Footnote2, 8, 1000, 1, 0).expect("valid parameters");
    let set = |i: usize| PointSet::from_points(1, files[i].items.iter()).expect("1-d");
    let (a, b) = (set(0), set(1));
    let full = direct_sumset(&a, &b).expect("same dim").len();
    let capped = prefix_restricted_sumset(&a, &b, &TargetBox::new(1, 1000, 1).unwrap(), &PrefixConfig::default())
        .map(|c| c.len());
    Line::check(
        3,
        "footnote-2 adversarial case",
        full == 64 && capped.as_ref().ok() == Some(&0),
        format!("|A+B| = {full}, |C| = {capped:?}"),
    )
}

fn submultiplicativity() -> Line {
    let mut r = rng(4);
    let (runs, mut violations) = (500u64, 0u64);
    for _ in 0..runs {
        let k = r.gen_range(3..=5);
        let sets: Vec<PointSet> = (0..k)
            .map(|_| {
                let len = r.gen_range(1..=6);
                random_set(&mut r, 1, 40, len)
            })
            .collect();
        if !check_submultiplicativity(&sets).map(|rep| rep.holds()).unwrap_or(false) {
            violations += 1;
        }
    }
    Line::check(
        4,
        "sub-multiplicativity",
        violations == 0,
        format!("{runs} families with K in 3..=5, {violations} violations"),
    )
}

fn lower_bound() -> Line {
    let mut r = rng(5);
    let (runs, mut violations) = (500u64, 0u64);
    for _ in 0..runs {
        let k = r.gen_range(2..=5);
        let sets: Vec<PointSet> = (0..k)
            .map(|_| {
                let len = r.gen_range(1..=10);
                random_set(&mut r, 1, 60, len)
            })
            .collect();
        let total = sets
            .iter()
            .skip(1)
            .try_fold(sets[0].clone(), |acc, s| sumset(&acc, s, &forced_hashing(7)))
            .expect("1-d sets");
        let sizes: usize = sets.iter().map(PointSet::len).sum();
        if sizes > total.len() + k - 1 {
            violations += 1;
        }
    }
    Line::check(
        5,
        "sumset lower bound",
        violations == 0,
        format!("{runs} families with K in 2..=5, {violations} violations"),
    )
}

fn render(s: &PointSet) -> String {
    s.iter()
        .map(|p| p.iter().map(u64::to_string).collect::<Vec<_>>().join(" ") + "\n")
        .collect()
}

fn unbounded() -> Line {
    let mut r = rng(6);
    let (runs, mut mismatches, mut unstable) = (300u64, 0u64, 0u64);
    for i in 0..runs {
        let dim = 1 + (i % 2) as usize;
        let t = if dim == 1 { r.gen_range(1..=512) } else { r.gen_range(1..=128) };
        let n = r.gen_range(0..=10);
        let x = preprocess_items(&random_items(&mut r, n, t, dim), t, dim).expect("valid items");
        let cfg = SolverConfig {
            base_t: 8,
            seed: i,
            ..Default::default()
        };
        let first = fast_unbounded_with(&x, t, &cfg, &WorkCounters::new()).expect("no error");
        let second = fast_unbounded_with(&x, t, &SolverConfig { seed: !i, ..cfg }, &WorkCounters::new()).expect("no error");
        if render(&first) != render(&second) {
            unstable += 1;
        }
        if first != unbounded_oracle(&x, t).expect("table fits") {
            mismatches += 1;
        }
    }

    let (doubled_runs, mut doubled_mismatches) = (100u64, 0u64);
    for i in 0..doubled_runs {
        let dim = 1 + (i % 2) as usize;
        let t = r.gen_range(1..=96);
        let n = r.gen_range(0..=6);
        let x = preprocess_items(&random_items(&mut r, n, t, dim), t, dim).expect("valid items");
        let mut flat = Vec::new();
        for p in x.distinct().iter() {
            let mut q = p.to_vec();
            while q.iter().all(|&c| c <= t) {
                flat.extend_from_slice(&q);
                q.iter_mut().for_each(|c| *c *= 2);
            }
        }
        let doubled = ItemMultiset::from_copies(dim, flat.chunks(dim)).expect("arity");
        let cfg = SolverConfig {
            base_t: 8,
            ..Default::default()
        };
        if fast_unbounded_with(&x, t, &cfg, &WorkCounters::new()).ok() != Some(bellman(&doubled, t)) {
            doubled_mismatches += 1;
        }
    }
    Line::check(
        6,
        "unbounded determinism and correctness",
        mismatches == 0 && unstable == 0 && doubled_mismatches == 0,
        format!(
            "{runs} instances: {mismatches} mismatches, {unstable} unstable; {doubled_runs} doubling checks: {doubled_mismatches} mismatches"
        ),
    )
}

fn rs_family() -> Line {
    let mut r = rng(7);
    let (samples, mut failures, mut families) = (240u64, 0u64, 0u64);
    for i in 0..samples {
        let t = r.gen_range(50..=400);
        let n = r.gen_range(2..=120);
        // keep items with a coordinate above t/4
        let inst = &generate(GenKind::Uniform, n, t, 2, i).expect("valid parameters")[0];
        let large = inst.items.iter().filter(|p| p.iter().any(|&c| 4 * c > t)).count() as u64;
        if large == 0 {
            continue;
        }
        let m = r.gen_range(1..=8u64).min(large);
        let fam = build_rs_family(large, m).expect("n, m >= 1");
        families += 1;
        let picks: Vec<u64> = sample(&mut r, large as usize, m as usize).into_iter().map(|v| v as u64).collect();
        let separated = (0..fam.len()).any(|h| fam.is_injective(h, &picks));
        if !fam.guarantee_holds() || !separated {
            failures += 1;
        }
    }
    Line::check(
        7,
        "Reed-Solomon family guarantee",
        failures == 0 && families >= 200,
        format!("{families} sampled subsets, {failures} failures"),
    )
}

fn engines() -> Line {
    let mut r = rng(8);
    let (runs, mut mismatches) = (1000u64, 0u64);
    for i in 0..runs {
        let max = r.gen_range(1..=1u64 << 16);
        let la = r.gen_range(1..=200);
        let lb = r.gen_range(1..=200);
        let a = random_set(&mut r, 1, max, la);
        let b = random_set(&mut r, 1, max, lb);
        let dense = sumset(&a, &b, &SumsetEngineConfig::dense()).expect("1-d");
        let hashed = sumset(&a, &b, &forced_hashing(i)).expect("1-d");
        if dense != hashed {
            mismatches += 1;
        }
    }
    Line::check(
        8,
        "engine equivalence",
        mismatches == 0,
        format!("{runs} pairs, t <= 2^16, {mismatches} mismatches"),
    )
}

fn scaling() -> Line {
    let (t, step) = (4096u64, 32u64);
    let mut points = Vec::new();
    let mut rows = Vec::new();
    for e in 4..=10u64 {
        let n = 1u64 << e;
        let mut r = rng(900 + e);
        let x = ItemMultiset::from_values((0..n).map(|_| step * r.gen_range(1..=t / 4 / step)));
        let counters = WorkCounters::new();
        let s = solve_with(&x, t, &SolverConfig::with_seed(e), &counters).expect("no error");
        let work = counters.snapshot().total_work().max(1);
        points.push((n as f64, s.len() as f64, work as f64));
        rows.push(format!("n={n}:|S|={},work={work}", s.len()));
    }
    // best polylog exponent for work / (|S| sqrt(n) log2(n)^j)
    let (exp, spread) = (0..=4)
        .map(|j| {
            let ratios: Vec<f64> = points
                .iter()
                .map(|&(n, s, w)| w / (s * n.sqrt() * n.log2().powi(j)))
                .collect();
            let lo = ratios.iter().cloned().fold(f64::INFINITY, f64::min);
            let hi = ratios.iter().cloned().fold(0.0, f64::max);
            (j, hi / lo)
        })
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap();
    Line {
        id: 9,
        name: "soft scaling check",
        verdict: Verdict::Report,
        detail: format!(
            "work / (|S| sqrt(n) log2(n)^{exp}) spans a factor {spread:.1} (target <= 4, {}); {}",
            if spread <= 4.0 { "within" } else { "outside" },
            rows.join(" ")
        ),
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut lines = Vec::new();
    let sections: [fn() -> Vec<Line>; 10] = [
        bounded_oracles,
        || vec![bounded_small_items()],
        || vec![prefix_oracle()],
        || vec![footnote2()],
        || vec![submultiplicativity()],
        || vec![lower_bound()],
        || vec![unbounded()],
        || vec![rs_family()],
        || vec![engines()],
        || vec![scaling()],
    ];
    for section in sections {
        let t0 = Instant::now();
        let mut out = section();
        let secs = t0.elapsed().as_secs_f64();
        for l in &mut out {
            l.detail.push_str(&format!(" [{secs:.1}s]"));
        }
        lines.extend(out);
    }
    lines.sort_by_key(|l| l.id);

    let mut failed = 0;
    for l in &lines {
        let tag = match l.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => {
                failed += 1;
                "FAIL"
            }
            Verdict::Report => "REPORT",
        };
        println!("criterion {:>2} [{tag}] {}: {}", l.id, l.name, l.detail);
    }
    println!("acceptance: {failed} failing, {:.1}s", start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
