//! The segmented sieve directly: window bitmaps, prime counting, pair
//! counting at fixed offsets, and interval prime streams.
//!
//! ```bash
//! cargo run --release -p primlab --example sieve_windows
//! ```

use primlab::sieve::{
    count_prime_pairs, prime_pi, primes_in_interval, sieve_segment, stream_primes,
};
use primlab::Config;

fn main() -> primlab::Result<()> {
    let cfg = Config::default();

    let seg = sieve_segment(7, 31)?;
    let window: Vec<u64> = seg.primes().collect();
    println!("primes in [7, 31]: {window:?}");

    println!("\nprime counts up to #(n)+1:");
    for (n, limit) in [(3u32, 31u64), (4, 211), (5, 2311), (6, 30031), (7, 510511)] {
        println!("  pi(#({n})+1) = pi({limit}) = {}", prime_pi(&cfg, limit));
    }

    println!("\npair counts up to 510511 (p and p+d both prime):");
    for d in [2u32, 4, 6] {
        let pairs = count_prime_pairs(&cfg, d, 510511)?;
        println!("  d={d}: {}", pairs.count);
    }

    println!("\nprimes of small primorial intervals:");
    for n in 1..=3u32 {
        println!("  P_{n} = {:?}", primes_in_interval(&cfg, n)?);
    }

    // Streaming keeps memory flat no matter how wide the range is.
    let tail: Vec<u64> = stream_primes(&cfg, 9699600, 9699691).collect();
    println!("\nprimes in the last stretch before #(8)+1: {tail:?}");

    // Worker count and segment size never change the answers.
    let small = Config {
        segment_entries: 1 << 12,
        threads: 4,
        ..Config::default()
    };
    assert_eq!(prime_pi(&small, 510511), prime_pi(&cfg, 510511));
    println!("\nsame counts at any segment size and thread count.");
    Ok(())
}
