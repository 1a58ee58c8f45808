//! Segmented bit-sieve over 64-bit ranges: prime counts, fixed-offset prime
//! pair counts (twin/cousin/sexy), and streaming prime enumeration.
//!
//! Segments are sieved independently from a shared base-prime list, so any
//! range operation can fan out over worker threads; per-segment results are
//! merged by a deterministic reduction and never depend on thread count or
//! segment size.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::primes::{isqrt, primes_upto};
use crate::primorial::primorial_u64;

/// Hard upper bound on entries in a single materialized segment (256 MiB of
/// odd-bitmap). Streamed operations chop work into `Config::segment_entries`.
pub const MAX_SEGMENT_ENTRIES: u64 = 1 << 32;

/// Primality bitmap for the inclusive range `[lo, hi]`.
///
/// Only odd positions are stored; 2 is tracked by the range bounds. The
/// queries behave as a bitmap of length `hi - lo + 1` with bit j set iff
/// `lo + j` is prime.
pub struct SieveSegment {
    lo: u64,
    hi: u64,
    first_odd: u64,
    n_odds: u64,
    words: Vec<u64>,
}

impl SieveSegment {
    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    /// Number of entries covered, `hi - lo + 1`.
    pub fn len(&self) -> u64 {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires lo <= hi
    }

    /// Bit j of the conceptual primality bitmap: true iff `lo + j` is prime.
    pub fn bit(&self, j: u64) -> bool {
        assert!(j < self.len(), "bit index {j} out of range");
        self.contains_prime(self.lo + j)
    }

    /// True iff m is prime. m must lie in `[lo, hi]`.
    pub fn contains_prime(&self, m: u64) -> bool {
        assert!(
            self.lo <= m && m <= self.hi,
            "{m} outside sieved range [{}, {}]",
            self.lo,
            self.hi
        );
        if m == 2 {
            return true;
        }
        if m % 2 == 0 {
            return false;
        }
        let idx = (m - self.first_odd) / 2;
        self.words[(idx / 64) as usize] >> (idx % 64) & 1 == 1
    }

    /// Number of primes in the segment.
    pub fn count_primes(&self) -> u64 {
        let odd: u64 = self.words.iter().map(|w| w.count_ones() as u64).sum();
        odd + u64::from(self.lo <= 2)
    }

    /// Smallest prime >= m inside the segment, if any.
    pub fn next_prime_at_or_after(&self, m: u64) -> Option<u64> {
        let m = m.max(self.lo);
        if m > self.hi {
            return None;
        }
        if m <= 2 && self.lo <= 2 {
            return Some(2);
        }
        let from = if m <= self.first_odd {
            0
        } else {
            (m - self.first_odd).div_ceil(2)
        };
        if from >= self.n_odds {
            return None;
        }
        let mut word_idx = (from / 64) as usize;
        let mut word = self.words[word_idx] & (!0u64 << (from % 64));
        loop {
            if word != 0 {
                let bit = word.trailing_zeros() as u64;
                return Some(self.first_odd + 2 * (word_idx as u64 * 64 + bit));
            }
            word_idx += 1;
            if word_idx >= self.words.len() {
                return None;
            }
            word = self.words[word_idx];
        }
    }

    /// Ascending primes in the segment.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        let mut cursor = self.lo;
        std::iter::from_fn(move || {
            let p = self.next_prime_at_or_after(cursor)?;
            cursor = p + 1;
            Some(p)
        })
    }
}

/// Sieves `[lo, hi]` into an exact primality bitmap.
pub fn sieve_segment(lo: u64, hi: u64) -> Result<SieveSegment> {
    if lo > hi {
        return Err(Error::usage(format!("reversed segment bounds {lo} > {hi}")));
    }
    if lo < 2 {
        return Err(Error::usage(format!(
            "segment must start at 2 or above, got {lo}"
        )));
    }
    if hi - lo >= MAX_SEGMENT_ENTRIES {
        return Err(Error::range(format!(
            "segment of {} entries exceeds the {MAX_SEGMENT_ENTRIES} cap; stream it instead",
            hi - lo + 1
        )));
    }
    let base = primes_upto(isqrt(hi));
    Ok(sieve_with_base(&base, lo, hi))
}

/// Core marking loop. `base` must contain every prime <= sqrt(hi).
fn sieve_with_base(base: &[u64], lo: u64, hi: u64) -> SieveSegment {
    debug_assert!(2 <= lo && lo <= hi);
    let first_odd = lo | 1; // lo == 2 starts odd storage at 3
    let n_odds = if first_odd > hi {
        0
    } else {
        (hi - first_odd) / 2 + 1
    };
    let mut words = vec![!0u64; (n_odds as usize).div_ceil(64)];
    if n_odds % 64 != 0 {
        if let Some(last) = words.last_mut() {
            *last &= !0u64 >> (64 - n_odds % 64);
        }
    }
    for &p in base.iter().skip_while(|&&p| p == 2) {
        let p_sq = p * p;
        if p_sq > hi {
            break;
        }
        // First odd multiple of p at or above max(p^2, first_odd); starting
        // at p^2 keeps p itself unmarked when it lies inside the segment.
        let mut m = if p_sq >= first_odd {
            p_sq
        } else {
            let mut q = first_odd.div_ceil(p);
            if q % 2 == 0 {
                q += 1;
            }
            match q.checked_mul(p) {
                Some(m) => m,
                None => continue,
            }
        };
        let step = 2 * p;
        while m <= hi {
            let idx = (m - first_odd) / 2;
            words[(idx / 64) as usize] &= !(1u64 << (idx % 64));
            m = match m.checked_add(step) {
                Some(next) => next,
                None => break,
            };
        }
    }
    SieveSegment {
        lo,
        hi,
        first_odd,
        n_odds,
        words,
    }
}

/// Count of prime pairs `(p, p + d)` with both prime and `p + d <= limit`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPairCount {
    pub offset: u32,
    pub limit: u64,
    pub count: u64,
}

/// π(limit): the number of primes <= limit, by streaming segments.
pub fn prime_pi(cfg: &Config, limit: u64) -> u64 {
    if limit < 2 {
        return 0;
    }
    let base = primes_upto(isqrt(limit));
    sum_over_segments(cfg, 2, limit, &|slo, shi| {
        sieve_with_base(&base, slo, shi).count_primes()
    })
}

/// Counts p with p and p + d both prime and p + d <= limit, for
/// d in {2, 4, 6}. Each segment sieves d positions of lookahead, so a pair
/// straddling a boundary is counted exactly once, by the segment owning p.
pub fn count_prime_pairs(cfg: &Config, d: u32, limit: u64) -> Result<ClassPairCount> {
    if !matches!(d, 2 | 4 | 6) {
        return Err(Error::usage(format!(
            "pair offset must be 2, 4, or 6, got {d}"
        )));
    }
    let d64 = d as u64;
    if limit < 2 + d64 {
        return Ok(ClassPairCount {
            offset: d,
            limit,
            count: 0,
        });
    }
    let base = primes_upto(isqrt(limit));
    let p_max = limit - d64;
    let count = sum_over_segments(cfg, 2, p_max, &|slo, shi| {
        let seg = sieve_with_base(&base, slo, (shi + d64).min(limit));
        seg.primes()
            .take_while(|&p| p <= shi)
            .filter(|&p| seg.contains_prime(p + d64))
            .count() as u64
    });
    Ok(ClassPairCount {
        offset: d,
        limit,
        count,
    })
}

/// Ascending primes p with #(n-1)+1 <= p <= #(n)+1, materialized.
pub fn primes_in_interval(cfg: &Config, n: u32) -> Result<Vec<u64>> {
    if n < 1 {
        return Err(Error::usage("primorial intervals start at n = 1"));
    }
    if n > cfg.enum_cap {
        return Err(Error::resource(
            "interval prime materialization above the enumeration cap; stream instead",
            n as u64,
        ));
    }
    let (lo, hi) = interval_bounds_u64(n)?;
    Ok(stream_primes(cfg, lo, hi).collect())
}

/// Bounds of the n-primorial interval as u64, `( #(n-1)+1, #(n)+1 )`.
pub(crate) fn interval_bounds_u64(n: u32) -> Result<(u64, u64)> {
    if n < 1 {
        return Err(Error::usage("primorial intervals start at n = 1"));
    }
    let hi = primorial_u64(n).ok_or_else(|| Error::range(format!("#({n}) exceeds 64 bits")))?;
    let lo = primorial_u64(n - 1).expect("smaller primorial fits");
    Ok((lo + 1, hi + 1))
}

/// Iterator over primes in `[lo, hi]`, sieving one segment at a time.
pub fn stream_primes(cfg: &Config, lo: u64, hi: u64) -> PrimeStream {
    PrimeStream {
        entries: cfg.segment_entries.max(1024),
        cursor: lo.max(2),
        hi,
        base: if lo <= hi {
            primes_upto(isqrt(hi))
        } else {
            Vec::new()
        },
        seg: None,
    }
}

pub struct PrimeStream {
    entries: u64,
    cursor: u64,
    hi: u64,
    base: Vec<u64>,
    seg: Option<SieveSegment>,
}

impl Iterator for PrimeStream {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        loop {
            if self.cursor > self.hi {
                return None;
            }
            let needs_refill = match &self.seg {
                Some(seg) => self.cursor > seg.hi(),
                None => true,
            };
            if needs_refill {
                let slo = self.cursor;
                let shi = self.hi.min(slo.saturating_add(self.entries - 1));
                self.seg = Some(sieve_with_base(&self.base, slo, shi));
            }
            let seg = self.seg.as_ref().unwrap();
            match seg.next_prime_at_or_after(self.cursor) {
                Some(p) => {
                    self.cursor = p + 1;
                    return Some(p);
                }
                None => self.cursor = seg.hi() + 1,
            }
        }
    }
}

/// Splits `[lo, hi]` into segments of `cfg.segment_entries` numbers, applies
/// `work` to each, and sums. Workers pull segment indices from a shared
/// counter; addition is commutative, so the result is identical for any
/// thread count.
fn sum_over_segments(
    cfg: &Config,
    lo: u64,
    hi: u64,
    work: &(dyn Fn(u64, u64) -> u64 + Sync),
) -> u64 {
    let entries = cfg.segment_entries.max(1024);
    let n_segs = (hi - lo) / entries + 1;
    let seg_bounds = |k: u64| {
        let slo = lo + k * entries;
        (slo, hi.min(slo.saturating_add(entries - 1)))
    };
    let threads = cfg.threads.min(n_segs as usize);
    if threads <= 1 {
        return (0..n_segs)
            .map(|k| {
                let (slo, shi) = seg_bounds(k);
                work(slo, shi)
            })
            .sum();
    }
    let next = AtomicU64::new(0);
    let total = Mutex::new(0u64);
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| {
                let mut local = 0u64;
                loop {
                    let k = next.fetch_add(1, Ordering::Relaxed);
                    if k >= n_segs {
                        break;
                    }
                    let (slo, shi) = seg_bounds(k);
                    local += work(slo, shi);
                }
                *total.lock().unwrap() += local;
            });
        }
    });
    let total = *total.lock().unwrap();
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg_with(entries: u64, threads: usize) -> Config {
        Config {
            segment_entries: entries,
            threads,
            ..Config::default()
        }
    }

    #[test]
    fn textbook_prefix_segment() {
        let seg = sieve_segment(2, 31).unwrap();
        let got: Vec<u64> = seg.primes().collect();
        assert_eq!(got, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]);
        assert_eq!(seg.count_primes(), 11);
        assert!(seg.bit(0)); // 2
        assert!(!seg.bit(2)); // 4
    }

    #[test]
    fn interval_segment_count() {
        // Primes in [7, 31]: 7 11 13 17 19 23 29 31.
        let seg = sieve_segment(7, 31).unwrap();
        assert_eq!(seg.count_primes(), 8);
    }

    #[test]
    fn singleton_segment_with_two() {
        let seg = sieve_segment(2, 2).unwrap();
        assert_eq!(seg.count_primes(), 1);
        assert!(seg.contains_prime(2));
        assert_eq!(seg.primes().collect::<Vec<_>>(), [2]);
    }

    #[test]
    fn segment_bound_errors() {
        assert!(matches!(sieve_segment(31, 7), Err(Error::Usage(_))));
        assert!(matches!(sieve_segment(0, 5), Err(Error::Usage(_))));
        assert!(matches!(
            sieve_segment(10, 10 + MAX_SEGMENT_ENTRIES),
            Err(Error::Range(_))
        ));
    }

    #[test]
    fn segment_matches_trial_division_on_odd_window() {
        let seg = sieve_segment(1000, 1200).unwrap();
        for m in 1000..=1200u64 {
            assert_eq!(seg.contains_prime(m), crate::primes::is_prime(m), "at {m}");
        }
    }

    #[test]
    fn prime_pi_examples() {
        let cfg = Config::default();
        assert_eq!(prime_pi(&cfg, 31), 11);
        assert_eq!(prime_pi(&cfg, 211), 47);
        assert_eq!(prime_pi(&cfg, 1), 0);
        assert_eq!(prime_pi(&cfg, 2), 1);
        assert_eq!(prime_pi(&cfg, 2311), 344);
    }

    #[test]
    fn pair_count_examples() {
        let cfg = Config::default();
        assert_eq!(count_prime_pairs(&cfg, 2, 31).unwrap().count, 5);
        assert_eq!(count_prime_pairs(&cfg, 4, 31).unwrap().count, 4);
        assert_eq!(count_prime_pairs(&cfg, 6, 211).unwrap().count, 26);
        assert!(matches!(
            count_prime_pairs(&cfg, 3, 100),
            Err(Error::Usage(_))
        ));
        assert_eq!(count_prime_pairs(&cfg, 2, 3).unwrap().count, 0);
    }

    #[test]
    fn pair_counting_is_seam_exact() {
        // Tiny segments force many boundaries; (1019, 1021) and friends must
        // not be double counted or dropped.
        let baseline = count_prime_pairs(&cfg_with(1 << 25, 1), 2, 5000)
            .unwrap()
            .count;
        for entries in [1024, 1031, 2048] {
            for threads in [1, 3] {
                let got = count_prime_pairs(&cfg_with(entries, threads), 2, 5000).unwrap();
                assert_eq!(got.count, baseline, "entries={entries} threads={threads}");
            }
        }
    }

    #[test]
    fn segment_size_and_threads_do_not_change_pi() {
        let baseline = prime_pi(&cfg_with(1 << 25, 1), 100_000);
        for entries in [1024, 4096, 1 << 20] {
            for threads in [1, 2, 8] {
                assert_eq!(prime_pi(&cfg_with(entries, threads), 100_000), baseline);
            }
        }
    }

    #[test]
    fn interval_primes_examples() {
        let cfg = Config::default();
        assert_eq!(primes_in_interval(&cfg, 1).unwrap(), [2, 3]);
        assert_eq!(primes_in_interval(&cfg, 2).unwrap(), [3, 5, 7]);
        assert_eq!(
            primes_in_interval(&cfg, 3).unwrap(),
            [7, 11, 13, 17, 19, 23, 29, 31]
        );
    }

    #[test]
    fn interval_cap_is_enforced() {
        let cfg = Config {
            enum_cap: 3,
            ..Config::default()
        };
        assert!(matches!(
            primes_in_interval(&cfg, 4),
            Err(Error::Resource { n: 4, .. })
        ));
    }

    #[test]
    fn adjacent_intervals_share_exactly_the_endpoint() {
        let cfg = Config::default();
        for n in 1..=6u32 {
            let cur = primes_in_interval(&cfg, n).unwrap();
            let next = primes_in_interval(&cfg, n + 1).unwrap();
            let shared: Vec<u64> = cur.iter().copied().filter(|p| next.contains(p)).collect();
            let endpoint = primorial_u64(n).unwrap() + 1;
            if crate::primes::is_prime(endpoint) {
                assert_eq!(shared, [endpoint], "n={n}");
                assert_eq!(*cur.last().unwrap(), endpoint);
                assert_eq!(next[0], endpoint);
            } else {
                assert!(shared.is_empty(), "n={n}");
            }
        }
    }

    #[test]
    fn stream_matches_segment_enumeration() {
        let cfg = cfg_with(1024, 1);
        let streamed: Vec<u64> = stream_primes(&cfg, 2, 20_000).collect();
        let direct: Vec<u64> = sieve_segment(2, 20_000).unwrap().primes().collect();
        assert_eq!(streamed, direct);
        assert_eq!(streamed.len() as u64, prime_pi(&cfg, 20_000));
    }

    #[test]
    fn twin_count_never_exceeds_pi() {
        let cfg = Config::default();
        for limit in [10u64, 100, 1000, 30_031] {
            let twins = count_prime_pairs(&cfg, 2, limit).unwrap().count;
            assert!(twins <= prime_pi(&cfg, limit));
        }
    }
}
