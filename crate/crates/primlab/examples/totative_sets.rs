//! Enumerating totative sets and checking their cardinality against the
//! totient product.
//!
//! ```bash
//! cargo run --release -p primlab --example totative_sets
//! ```

use primlab::primorial::euler_phi_primorial;
use primlab::totative::{is_totative, totative_set};
use primlab::Config;

fn main() -> primlab::Result<()> {
    let cfg = Config::default();

    for n in 1..=4u32 {
        let set = totative_set(&cfg, n)?;
        println!("tot({n}) = {:?}", set.members());
    }

    println!("\ncardinalities match the totient product:");
    for n in 1..=8u32 {
        let set = totative_set(&cfg, n)?;
        let phi = euler_phi_primorial(n);
        println!(
            "  |tot({n})| = {:>7}   phi(#({n})) = {:>7}   {}",
            set.len(),
            phi,
            if phi == set.len().into() {
                "ok"
            } else {
                "MISMATCH"
            }
        );
    }

    println!("\nmembership checks at n = 3:");
    for t in [1u64, 7, 25, 31, 32] {
        println!("  is_totative(3, {t:>2}) = {}", is_totative(3, t));
    }
    Ok(())
}
