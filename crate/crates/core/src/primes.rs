//! Small prime utilities: interval sieves for hash moduli.

/// All primes in `[lo, hi]`, by a segmented sieve of Eratosthenes.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 || lo > hi {
        return Vec::new();
    }
    let lo = lo.max(2);
    let root = (hi as f64).sqrt() as u64 + 1;
    let mut small = vec![true; root as usize + 1];
    let mut base = Vec::new();
    for i in 2..=root {
        if small[i as usize] {
            base.push(i);
            let mut j = i * i;
            while j <= root {
                small[j as usize] = false;
                j += i;
            }
        }
    }
    let mut segment = vec![true; (hi - lo + 1) as usize];
    for &p in &base {
        let start = (p * p).max(lo.div_ceil(p) * p);
        let mut j = start;
        while j <= hi {
            segment[(j - lo) as usize] = false;
            j += p;
        }
    }
    segment
        .iter()
        .enumerate()
        .filter(|(_, &prime)| prime)
        .map(|(i, _)| lo + i as u64)
        .collect()
}

/// Smallest prime in `[lo, hi]`, if any.
pub fn smallest_prime_in(lo: u64, hi: u64) -> Option<u64> {
    // Sieve in growing windows so a wide interval does not allocate its
    // whole length when a prime sits near `lo`.
    let mut start = lo;
    let mut width = 256u64;
    while start <= hi {
        let end = hi.min(start.saturating_add(width));
        if let Some(&p) = primes_in(start, end).first() {
            return Some(p);
        }
        if end == hi {
            break;
        }
        start = end + 1;
        width = width.saturating_mul(2);
    }
    None
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2u64;
    while i.saturating_mul(i) <= n {
        if n.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}
