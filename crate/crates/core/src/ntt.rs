//! Number-theoretic transforms over three NTT-friendly primes, with CRT
//! reconstruction of exact integer convolutions.

use std::sync::OnceLock;

/// Primes `c * 2^e + 1`, all with primitive root 3.
pub(crate) const PRIMES: [u64; 3] = [998_244_353, 167_772_161, 469_762_049];

/// Longest transform supported by every prime in [`PRIMES`].
pub(crate) const MAX_LEN: usize = 1 << 23;

const ROOT: u64 = 3;

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// In-place iterative radix-2 transform modulo `m`. `a.len()` must be a
/// power of two dividing `m - 1`.
pub(crate) fn transform(a: &mut [u64], invert: bool, m: u64) {
    // constant moduli let the compiler replace the divisions
    match m {
        998_244_353 => transform_in::<998_244_353>(a, invert),
        167_772_161 => transform_in::<167_772_161>(a, invert),
        469_762_049 => transform_in::<469_762_049>(a, invert),
        _ => transform_dyn(a, invert, m),
    }
}

fn transform_in<const M: u64>(a: &mut [u64], invert: bool) {
    transform_dyn_with(a, invert, M, |x, y| x * y % M)
}

fn transform_dyn(a: &mut [u64], invert: bool, m: u64) {
    transform_dyn_with(a, invert, m, |x, y| x * y % m)
}

#[inline(always)]
fn transform_dyn_with(a: &mut [u64], invert: bool, m: u64, mul: impl Fn(u64, u64) -> u64) {
    let n = a.len();
    debug_assert!(n.is_power_of_two() && (m - 1).is_multiple_of(n as u64));
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            a.swap(i, j);
        }
    }
    let mut len = 2;
    while len <= n {
        let mut w_len = pow_mod(ROOT, (m - 1) / len as u64, m);
        if invert {
            w_len = pow_mod(w_len, m - 2, m);
        }
        let half = len / 2;
        let mut twiddles = Vec::with_capacity(half);
        let mut w = 1u64;
        for _ in 0..half {
            twiddles.push(w);
            w = mul(w, w_len);
        }
        for chunk in a.chunks_exact_mut(len) {
            let (lo, hi) = chunk.split_at_mut(half);
            for ((u, v), &w) in lo.iter_mut().zip(hi.iter_mut()).zip(&twiddles) {
                let x = *u;
                let y = mul(*v, w);
                *u = if x + y >= m { x + y - m } else { x + y };
                *v = if x >= y { x - y } else { x + m - y };
            }
        }
        len <<= 1;
    }
    if invert {
        let n_inv = pow_mod(n as u64, m - 2, m);
        for x in a.iter_mut() {
            *x = mul(*x, n_inv);
        }
    }
}

/// Forward transform of `values mod m`, zero-padded to `len`.
pub(crate) fn forward(values: &[u64], len: usize, m: u64) -> Vec<u64> {
    let mut a = vec![0u64; len];
    for (slot, &v) in a.iter_mut().zip(values) {
        *slot = v % m;
    }
    transform(&mut a, false, m);
    a
}

/// Linear convolution modulo `m`.
pub(crate) fn convolve_mod(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let out_len = a.len() + b.len() - 1;
    let len = out_len.next_power_of_two();
    assert!(len <= MAX_LEN, "transform length {len} exceeds {MAX_LEN}");
    let mut fa = forward(a, len, m);
    let fb = forward(b, len, m);
    for (x, y) in fa.iter_mut().zip(&fb) {
        *x = *x * y % m;
    }
    transform(&mut fa, true, m);
    fa.truncate(out_len);
    fa
}

/// Combines residues modulo the first `residues.len()` primes of
/// [`PRIMES`] into the unique value below their product.
pub(crate) fn crt(residues: &[u64]) -> u128 {
    static INVERSES: OnceLock<[u64; 3]> = OnceLock::new();
    let inverses = INVERSES.get_or_init(|| {
        let mut inv = [0u64; 3];
        let mut modulus: u128 = 1;
        for (slot, &p) in inv.iter_mut().zip(PRIMES.iter()) {
            *slot = pow_mod((modulus % p as u128) as u64, p - 2, p);
            modulus *= p as u128;
        }
        inv
    });
    let mut value: u128 = 0;
    let mut modulus: u128 = 1;
    for ((&r, &p), &inv) in residues.iter().zip(PRIMES.iter()).zip(inverses) {
        // value + modulus * k == r (mod p)
        let cur = (value % p as u128) as u64;
        let diff = (r + p - cur) % p;
        let k = diff * inv % p;
        value += modulus * k as u128;
        modulus *= p as u128;
    }
    value
}

/// Product of the first `count` primes.
pub(crate) fn modulus(count: usize) -> u128 {
    PRIMES[..count].iter().map(|&p| p as u128).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn schoolbook(a: &[u64], b: &[u64]) -> Vec<u128> {
        let mut out = vec![0u128; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] += x as u128 * y as u128;
            }
        }
        out
    }

    #[test]
    fn small_convolution_matches_schoolbook() {
        let a = [1u64, 2, 0, 5, 7];
        let b = [3u64, 0, 4];
        for &m in &PRIMES {
            let got = convolve_mod(&a, &b, m);
            let want: Vec<u64> = schoolbook(&a, &b).iter().map(|&v| (v % m as u128) as u64).collect();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn crt_reconstructs_large_products() {
        let a = [1u64 << 35, 12345, 1 << 20];
        let b = [1u64 << 33, 7, 99];
        let want = schoolbook(&a, &b);
        let per_prime: Vec<Vec<u64>> = PRIMES.iter().map(|&m| convolve_mod(&a, &b, m)).collect();
        for (i, w) in want.iter().enumerate() {
            let residues: Vec<u64> = per_prime.iter().map(|v| v[i]).collect();
            assert!(*w < modulus(3));
            assert_eq!(crt(&residues), *w);
        }
    }

    #[test]
    fn roundtrip_identity() {
        let m = PRIMES[0];
        let orig: Vec<u64> = (0..64).map(|i| i * 31 % 17).collect();
        let mut a = orig.clone();
        transform(&mut a, false, m);
        transform(&mut a, true, m);
        assert_eq!(a, orig);
    }
}
