//! Exact sumsets `A + B` and the base-`(2t+1)` encoding of point sets.
//!
//! Two engines are provided. The dense engine convolves indicator arrays
//! over the whole value range (in blocks, when the range is wide) and is
//! fully deterministic. The output-sensitive engine hashes values modulo a
//! random prime sized from a doubling guess of `|A + B|`, convolves in the
//! reduced ring, and certifies every residue class before accepting it, so
//! its output is always exact; only its running time is random.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::counters::WorkCounters;
use crate::error::{Error, Result};
use crate::ntt;
use crate::primes::primes_in;
use crate::types::PointSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Dense,
    OutputSensitive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SumsetEngineConfig {
    pub engine: Engine,
    /// Seed for the random modulus choice of the output-sensitive engine.
    pub seed: u64,
    /// Re-derive every output-sensitive result under a second independent
    /// modulus and restart on disagreement.
    pub verify: bool,
    /// Output ranges up to this size go straight to the dense engine.
    pub dense_cutoff: u64,
    /// Inputs with `|A| * |B|` up to this go through pairwise enumeration.
    pub pairwise_cutoff: u64,
}

impl Default for SumsetEngineConfig {
    fn default() -> Self {
        SumsetEngineConfig {
            engine: Engine::OutputSensitive,
            seed: 0,
            verify: false,
            dense_cutoff: 1 << 20,
            pairwise_cutoff: 1 << 12,
        }
    }
}

impl SumsetEngineConfig {
    pub fn dense() -> Self {
        SumsetEngineConfig {
            engine: Engine::Dense,
            ..Default::default()
        }
    }

    pub fn output_sensitive(seed: u64) -> Self {
        SumsetEngineConfig {
            engine: Engine::OutputSensitive,
            seed,
            ..Default::default()
        }
    }
}

/// Width of one dense block; block pairs convolve at length `<= 2^22`.
const DENSE_BLOCK: u64 = 1 << 21;

/// Largest modulus the output-sensitive engine will hash into.
const MAX_MODULUS: u64 = 1 << 20;

/// Multiplier `c` in the modulus lower bound `c * s * log2(s)`.
const MODULUS_FACTOR: u64 = 4;

pub fn sumset(a: &PointSet, b: &PointSet, cfg: &SumsetEngineConfig) -> Result<PointSet> {
    sumset_with(a, b, cfg, &WorkCounters::new())
}

pub fn sumset_with(
    a: &PointSet,
    b: &PointSet,
    cfg: &SumsetEngineConfig,
    counters: &WorkCounters,
) -> Result<PointSet> {
    if a.dim() != b.dim() {
        return Err(Error::DimMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let dim = a.dim();
    if a.is_empty() || b.is_empty() {
        return Ok(PointSet::empty(dim));
    }
    let out = if dim == 1 {
        PointSet::from_sorted_flat(1, sumset_values(a.values(), b.values(), cfg)?)
    } else {
        let t = a.as_flat().iter().chain(b.as_flat()).copied().max().unwrap_or(0);
        let ea = encode_points(a, t)?;
        let eb = encode_points(b, t)?;
        let sums = sumset_values(ea.values(), eb.values(), cfg)?;
        decode_points(&PointSet::from_sorted_flat(1, sums), t, dim)?
    };
    counters.add_sumset_elems(out.len() as u64);
    Ok(out)
}

/// Pairwise enumeration with sort + dedup, for any dimension.
pub fn direct_sumset(a: &PointSet, b: &PointSet) -> Result<PointSet> {
    if a.dim() != b.dim() {
        return Err(Error::DimMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let mut flat = Vec::with_capacity(a.as_flat().len() * b.len());
    for p in a.iter() {
        for q in b.iter() {
            flat.extend(p.iter().zip(q).map(|(x, y)| x + y));
        }
    }
    Ok(PointSet::from_flat(a.dim(), flat))
}

/// Sorted, deduplicated one-dimensional sumset of two sorted value lists.
fn sumset_values(a: &[u64], b: &[u64], cfg: &SumsetEngineConfig) -> Result<Vec<u64>> {
    if a.len() as u64 * b.len() as u64 <= cfg.pairwise_cutoff {
        return Ok(pairwise(a, b));
    }
    match cfg.engine {
        Engine::Dense => Ok(dense(a, b)),
        Engine::OutputSensitive => Ok(output_sensitive(a, b, cfg)),
    }
}

fn pairwise(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out: Vec<u64> = a.iter().flat_map(|&x| b.iter().map(move |&y| x + y)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Indicator-array convolution over the value range, split into blocks of
/// width [`DENSE_BLOCK`]; falls back to pairwise enumeration when that is
/// cheaper than convolving every nonempty block pair.
pub(crate) fn dense(a: &[u64], b: &[u64]) -> Vec<u64> {
    let blocks_a = blocks(a);
    let blocks_b = blocks(b);
    let conv_cost = (blocks_a.len() * blocks_b.len()) as u128 * DENSE_BLOCK as u128;
    if (a.len() as u128) * (b.len() as u128) <= conv_cost / 4 {
        return pairwise(a, b);
    }
    let m = ntt::PRIMES[0];
    let mut out = Vec::new();
    for ba in &blocks_a {
        for bb in &blocks_b {
            let (lo_a, lo_b) = (ba[0], bb[0]);
            let ia = indicator(ba, lo_a);
            let ib = indicator(bb, lo_b);
            // counts never exceed min(|A|, |B|) < m, so nonzero mod m is exact
            let conv = ntt::convolve_mod(&ia, &ib, m);
            out.extend(
                conv.iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(pos, _)| lo_a + lo_b + pos as u64),
            );
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn blocks(values: &[u64]) -> Vec<&[u64]> {
    let mut out = Vec::new();
    let mut start = 0;
    while start < values.len() {
        let limit = values[start] + DENSE_BLOCK;
        let end = start + values[start..].partition_point(|&v| v < limit);
        out.push(&values[start..end]);
        start = end;
    }
    out
}

fn indicator(values: &[u64], lo: u64) -> Vec<u64> {
    let span = (values[values.len() - 1] - lo + 1) as usize;
    let mut ind = vec![0u64; span];
    for &v in values {
        ind[(v - lo) as usize] = 1;
    }
    ind
}

/// Outcome of hashing `A + B` into one modulus.
enum Attempt {
    Exact(Vec<u64>),
    /// Some residue class held two different sums.
    Collision,
    /// Certificate values would not fit the CRT range at this modulus.
    TooWide,
}

fn output_sensitive(a: &[u64], b: &[u64], cfg: &SumsetEngineConfig) -> Vec<u64> {
    let max_sum = a[a.len() - 1] + b[b.len() - 1];
    if max_sum < cfg.dense_cutoff {
        return dense(a, b);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    // |A + B| >= max(|A|, |B|)
    let mut guess = (a.len().max(b.len()) as u64).max(2);
    loop {
        let log = 64 - (guess - 1).leading_zeros() as u64;
        let lower = MODULUS_FACTOR.saturating_mul(guess).saturating_mul(log.max(1));
        if lower > max_sum || lower > MAX_MODULUS {
            // hashing would not shrink the range, or the transform would be
            // too long
            return dense(a, b);
        }
        let primes = primes_in(lower, 2 * lower);
        let p = *primes.choose(&mut rng).expect("Bertrand: a prime lies in [L, 2L]");
        match hashed_sumset(a, b, p) {
            Attempt::Exact(sums) => {
                if !cfg.verify {
                    return sums;
                }
                let q = *primes.choose(&mut rng).unwrap();
                if let Attempt::Exact(again) = hashed_sumset(a, b, q) {
                    if again == sums {
                        return sums;
                    }
                }
            }
            Attempt::Collision | Attempt::TooWide => {}
        }
        guess *= 2;
    }
}

/// Computes `A + B` through residues modulo `p`, certifying each residue
/// class.
///
/// Write `a = p*qa + ra`. The linear convolution of the residue arrays puts
/// every pair at position `ra + rb`, with true sum `p*(qa + qb) + pos`. Per
/// position we accumulate the pair count `c0`, the quotient sum `c1` and
/// the squared quotient sum `c2`; all pairs at a position share one
/// quotient iff `c1 = c0*q` and `c2 = q*c1` for an integer `q`.
fn hashed_sumset(a: &[u64], b: &[u64], p: u64) -> Attempt {
    let width = (2 * p - 1) as usize;
    let qmax = a[a.len() - 1] / p + b[b.len() - 1] / p;
    let pairs = a.len() as u128 * b.len() as u128;
    let bound = (qmax as u128 + 1)
        .checked_mul(qmax as u128 + 1)
        .and_then(|q2| q2.checked_mul(pairs));
    let Some(bound) = bound else {
        return Attempt::TooWide;
    };
    let Some(nprimes) = (1..=3).find(|&k| ntt::modulus(k) > bound) else {
        return Attempt::TooWide;
    };

    let moments = |values: &[u64]| {
        let mut ones = vec![0u128; p as usize];
        let mut q1 = vec![0u128; p as usize];
        let mut q2 = vec![0u128; p as usize];
        for &v in values {
            let (q, r) = ((v / p) as u128, (v % p) as usize);
            ones[r] += 1;
            q1[r] += q;
            q2[r] += q * q;
        }
        [ones, q1, q2]
    };
    let ma = moments(a);
    let mb = moments(b);

    let len = width.next_power_of_two();
    let mut res: Vec<[Vec<u64>; 3]> = Vec::with_capacity(nprimes);
    for &m in &ntt::PRIMES[..nprimes] {
        let fwd = |v: &Vec<u128>| {
            let reduced: Vec<u64> = v.iter().map(|&x| (x % m as u128) as u64).collect();
            ntt::forward(&reduced, len, m)
        };
        let fa: Vec<Vec<u64>> = ma.iter().map(fwd).collect();
        let fb: Vec<Vec<u64>> = mb.iter().map(fwd).collect();
        let mut c0 = vec![0u64; len];
        let mut c1 = vec![0u64; len];
        let mut c2 = vec![0u64; len];
        for i in 0..len {
            let (a0, a1, a2) = (fa[0][i], fa[1][i], fa[2][i]);
            let (b0, b1, b2) = (fb[0][i], fb[1][i], fb[2][i]);
            c0[i] = a0 * b0 % m;
            c1[i] = (a1 * b0 % m + a0 * b1 % m) % m;
            c2[i] = (a2 * b0 % m + 2 * (a1 * b1 % m) % m + a0 * b2 % m) % m;
        }
        for c in [&mut c0, &mut c1, &mut c2] {
            ntt::transform(c, true, m);
            c.truncate(width);
        }
        res.push([c0, c1, c2]);
    }

    let mut sums = Vec::new();
    let mut residues = [0u64; 3];
    let exact = |k: usize, pos: usize, residues: &mut [u64; 3]| {
        for (slot, r) in residues.iter_mut().zip(&res) {
            *slot = r[k][pos];
        }
        ntt::crt(&residues[..nprimes])
    };
    for pos in 0..width {
        if res.iter().all(|r| r[0][pos] == 0) {
            continue;
        }
        let c0 = exact(0, pos, &mut residues);
        if c0 == 0 {
            continue;
        }
        let c1 = exact(1, pos, &mut residues);
        let c2 = exact(2, pos, &mut residues);
        if c1 % c0 != 0 {
            return Attempt::Collision;
        }
        let q = c1 / c0;
        if q.checked_mul(c1) != Some(c2) {
            return Attempt::Collision;
        }
        sums.push(q as u64 * p + pos as u64);
    }
    // positions pos and pos + p can certify the same sum
    sums.sort_unstable();
    sums.dedup();
    Attempt::Exact(sums)
}

fn encoding_base(t: u64, dim: usize) -> Result<u128> {
    let base = 2 * t as u128 + 1;
    match base.checked_pow(dim as u32) {
        Some(range) if range <= u64::MAX as u128 + 1 => Ok(base),
        _ => Err(Error::WidthOverflow { base, dim }),
    }
}

/// `phi(x) = sum_i x[i] * (2t+1)^i`. All coordinates must be at most `t`.
pub fn encode_points(a: &PointSet, t: u64) -> Result<PointSet> {
    let dim = a.dim();
    let base = encoding_base(t, dim)? as u64;
    let mut out = Vec::with_capacity(a.len());
    for p in a.iter() {
        if let Some(&c) = p.iter().find(|&&c| c > t) {
            return Err(Error::InvalidArgument(format!(
                "coordinate {c} exceeds encoding bound {t}"
            )));
        }
        out.push(p.iter().rev().fold(0u64, |acc, &c| acc * base + c));
    }
    Ok(PointSet::from_values(out))
}

/// Inverse of [`encode_points`]; digits may reach `2t` (sums of two
/// encoded sets).
pub fn decode_points(e: &PointSet, t: u64, dim: usize) -> Result<PointSet> {
    if dim == 0 {
        return Err(Error::InvalidDimension);
    }
    if e.dim() != 1 {
        return Err(Error::DimMismatch {
            left: e.dim(),
            right: 1,
        });
    }
    let base = encoding_base(t, dim)?;
    let range = base.pow(dim as u32);
    let base = base as u64;
    let mut flat = Vec::with_capacity(e.len() * dim);
    for &v in e.values() {
        if v as u128 >= range {
            return Err(Error::DecodeOutOfRange { value: v, base, dim });
        }
        let mut rest = v;
        for _ in 0..dim {
            flat.push(rest % base);
            rest /= base;
        }
    }
    Ok(PointSet::from_flat(dim, flat))
}
