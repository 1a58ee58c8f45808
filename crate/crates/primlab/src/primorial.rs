//! Primorial arithmetic: products of prime prefixes and Euler's totient on
//! them. Values are exact at every index; a `u64` fast path exists up to
//! #(15), the last primorial that fits 64 bits.

use num_bigint::BigUint;
use num_traits::One;

use crate::primes::{first_n_primes, nth_prime};

/// Largest n for which #(n) fits in a `u64`.
pub const MAX_PRIMORIAL_U64_INDEX: u32 = 15;

/// #(n): the product of the first n primes, #(0) = 1.
pub fn primorial(n: u32) -> BigUint {
    let mut acc = BigUint::one();
    for p in first_n_primes(n) {
        acc *= p;
    }
    acc
}

/// #(n) as a `u64`, or `None` for n > 15.
pub fn primorial_u64(n: u32) -> Option<u64> {
    if n > MAX_PRIMORIAL_U64_INDEX {
        return None;
    }
    let mut acc: u64 = 1;
    for p in first_n_primes(n) {
        acc = acc.checked_mul(p)?;
    }
    Some(acc)
}

/// φ(#(n)) = ∏ (p_i − 1) over the first n primes; 1 for n = 0.
pub fn euler_phi_primorial(n: u32) -> BigUint {
    let mut acc = BigUint::one();
    for p in first_n_primes(n) {
        acc *= p - 1;
    }
    acc
}

/// Index n, the first n primes, and #(n), bundled as the shared handle the
/// other modules consume.
#[derive(Debug, Clone)]
pub struct PrimorialContext {
    n: u32,
    primes: Vec<u64>,
    primorial: BigUint,
    primorial_u64: Option<u64>,
}

impl PrimorialContext {
    pub fn new(n: u32) -> Self {
        let primes = first_n_primes(n);
        let mut primorial = BigUint::one();
        let mut primorial_u64: Option<u64> = Some(1);
        for &p in &primes {
            primorial *= p;
            primorial_u64 = primorial_u64.and_then(|v| v.checked_mul(p));
        }
        PrimorialContext {
            n,
            primes,
            primorial,
            primorial_u64,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The first n primes, ascending.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn primorial(&self) -> &BigUint {
        &self.primorial
    }

    pub fn primorial_u64(&self) -> Option<u64> {
        self.primorial_u64
    }

    /// The n-th prime itself; panics for n = 0.
    pub fn last_prime(&self) -> u64 {
        *self.primes.last().expect("context with n >= 1")
    }
}

/// True when no prime among the first n divides t, i.e. gcd(t, #(n)) = 1.
pub(crate) fn coprime_to_first_primes(n: u32, t: u64) -> bool {
    if t == 0 {
        return n == 0;
    }
    for i in 1..=n {
        let p = nth_prime(i as u64);
        if p > t {
            break;
        }
        if t % p == 0 {
            return false;
        }
    }
    true
}
