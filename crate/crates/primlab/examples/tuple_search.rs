//! Offset tuples: admissibility, strength, isolation, enumeration, and
//! minimal-diameter constellation search.
//!
//! ```bash
//! cargo run --release -p primlab --example tuple_search
//! ```

use primlab::totative::{enumerate_satisfying, is_isolated, minimal_diameter_tuple, OffsetTuple};
use primlab::Config;

fn main() -> primlab::Result<()> {
    let cfg = Config::default();

    println!("classifying some patterns:");
    for offsets in [
        vec![0u64, 2],
        vec![0, 2, 4],
        vec![0, 2, 6],
        vec![0, 4, 8],
        vec![0, 6, 12, 18],
        vec![0, 6, 12, 18, 24],
    ] {
        let a = OffsetTuple::new(offsets)?;
        println!(
            "  {:<16} k={} dia={:>2} admissible={:<5} 5-strong={}",
            a.to_string(),
            a.k(),
            a.diameter(),
            a.is_admissible(),
            a.is_strong(5),
        );
    }

    let quad = OffsetTuple::new(vec![0, 6, 12, 18])?;
    println!("\nstarts satisfying {quad} at level 4:");
    let hits = enumerate_satisfying(&cfg, &quad, 4, false)?;
    println!("  {hits:?}  (count {})", hits.len());

    let triple = OffsetTuple::new(vec![0, 6, 12])?;
    println!("\nisolation of {triple} occurrences at level 3:");
    for t in enumerate_satisfying(&cfg, &triple, 3, false)? {
        println!("  t = {t:>2}: isolated = {}", is_isolated(t, &triple, 3)?);
    }

    println!("\nminimal-diameter admissible k-tuples (diameter bound 60):");
    for k in 2..=6u32 {
        match minimal_diameter_tuple(k, 60)? {
            Some(a) => println!("  k={k}: {a} with diameter {}", a.diameter()),
            None => println!("  k={k}: none within the bound"),
        }
    }
    Ok(())
}
