//! Prime generation and primality testing.
//!
//! A process-wide cache holds the primes generated so far and grows by
//! sieving windows of doubling size. Reads run concurrently; growth is
//! serialized behind a write lock, so results are independent of thread
//! interleaving.

use std::sync::{OnceLock, RwLock};

struct PrimeCache {
    primes: Vec<u64>,
    sieved_to: u64,
}

static CACHE: OnceLock<RwLock<PrimeCache>> = OnceLock::new();

fn cache() -> &'static RwLock<PrimeCache> {
    CACHE.get_or_init(|| RwLock::new(PrimeCache::bootstrap()))
}

impl PrimeCache {
    fn bootstrap() -> PrimeCache {
        let limit: u64 = 1 << 10;
        let mut composite = vec![false; (limit + 1) as usize];
        let mut primes = Vec::new();
        for m in 2..=limit {
            if !composite[m as usize] {
                primes.push(m);
                let mut j = m * m;
                while j <= limit {
                    composite[j as usize] = true;
                    j += m;
                }
            }
        }
        PrimeCache {
            primes,
            sieved_to: limit,
        }
    }

    /// Extends the cache so every prime <= limit is present. Windows double,
    /// so the cached primes always cover sqrt of the next window.
    fn grow_to_limit(&mut self, limit: u64) {
        while self.sieved_to < limit {
            let lo = self.sieved_to + 1;
            let hi = self.sieved_to * 2;
            let mut composite = vec![false; (hi - lo + 1) as usize];
            for &p in &self.primes {
                if p * p > hi {
                    break;
                }
                let mut m = (lo.div_ceil(p) * p).max(p * p);
                while m <= hi {
                    composite[(m - lo) as usize] = true;
                    m += p;
                }
            }
            for (i, &c) in composite.iter().enumerate() {
                if !c {
                    self.primes.push(lo + i as u64);
                }
            }
            self.sieved_to = hi;
        }
    }

    fn grow_to_count(&mut self, count: usize) {
        while self.primes.len() < count {
            self.grow_to_limit(self.sieved_to * 2);
        }
    }
}

/// The i-th prime, 1-indexed: `nth_prime(1) == 2`.
pub fn nth_prime(i: u64) -> u64 {
    assert!(i >= 1, "prime indices are 1-based");
    let idx = (i - 1) as usize;
    {
        let cache = cache().read().unwrap();
        if let Some(&p) = cache.primes.get(idx) {
            return p;
        }
    }
    let mut cache = cache().write().unwrap();
    cache.grow_to_count(idx + 1);
    cache.primes[idx]
}

/// The first n primes, ascending.
pub fn first_n_primes(n: u32) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    nth_prime(n as u64);
    let cache = cache().read().unwrap();
    cache.primes[..n as usize].to_vec()
}

/// All primes <= limit, ascending. Meant for base-prime lists (the cache
/// materializes everything up to `limit`); use the sieve module to walk
/// large ranges.
pub fn primes_upto(limit: u64) -> Vec<u64> {
    {
        let cache = cache().read().unwrap();
        if cache.sieved_to >= limit {
            return take_upto(&cache.primes, limit);
        }
    }
    let mut cache = cache().write().unwrap();
    cache.grow_to_limit(limit);
    take_upto(&cache.primes, limit)
}

fn take_upto(primes: &[u64], limit: u64) -> Vec<u64> {
    let end = primes.partition_point(|&p| p <= limit);
    primes[..end].to_vec()
}

/// Greatest common divisor; `gcd(0, b) == b`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Floor of the square root.
pub(crate) fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r > 0 && (r as u128) * (r as u128) > n as u128 {
        r -= 1;
    }
    while ((r + 1) as u128) * ((r + 1) as u128) <= n as u128 {
        r += 1;
    }
    r
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Strong-probable-prime witness bases covering the full 64-bit range
/// (Sinclair's seven-base set): a composite below 2^64 fails at least one.
const WITNESSES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

const SMALL_PRIMES: [u64; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

/// Deterministic primality for any `u64`. 0 and 1 are not prime.
pub fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if m == p {
            return true;
        }
        if m % p == 0 {
            return false;
        }
    }
    // m is odd and > 47 here.
    let d = m - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for &a in &WITNESSES {
        let a = a % m;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, m);
        if x == 1 || x == m - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, m);
            if x == m - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
