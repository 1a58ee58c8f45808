//! Goldbach-style witness search and range verification for the five
//! conjecture flavors.
//!
//! ```bash
//! cargo run --release -p primlab --example goldbach_scan
//! ```

use primlab::goldbach::{
    class_witness, classic_witness, intervals_witness, is_class_prime, verify_range, Flavor,
    PairClass, Status,
};
use primlab::Config;

fn main() -> primlab::Result<()> {
    let cfg = Config::default();

    println!("smallest-p decompositions:");
    for m in [4u64, 10, 30, 100, 1_000_000] {
        let w = classic_witness(m)?.expect("witness exists in this range");
        println!("  {m} = {} + {}", w.p, w.q);
    }

    println!("\nclass-prime membership:");
    for (p, class) in [
        (5, PairClass::Twin),
        (7, PairClass::Cousin),
        (5, PairClass::Sexy),
        (2, PairClass::Sexy),
    ] {
        println!(
            "  {p} is a {} prime: {}",
            class.name(),
            is_class_prime(p, class)
        );
    }

    println!("\nclass-constrained witnesses:");
    for class in [PairClass::Twin, PairClass::Cousin, PairClass::Sexy] {
        match class_witness(98, class)? {
            Some(w) => println!("  98 = {} + {} with a {} prime", w.p, w.q, class.name()),
            None => println!("  98 has no {} witness", class.name()),
        }
    }

    println!("\ninterval-constrained witnesses in E_3:");
    for m in [8u64, 12, 30] {
        let w = intervals_witness(&cfg, 2, m)?.expect("known witnesses");
        println!("  {m} = {} + {} with p in P_2", w.p, w.q);
    }

    println!("\nscanning all even numbers up to #(6)+1 = 30031:");
    for flavor in [
        Flavor::Classic,
        Flavor::Twin,
        Flavor::Cousin,
        Flavor::Sexy,
        Flavor::Intervals(3),
    ] {
        let (lo, hi) = match flavor {
            Flavor::Intervals(n) => {
                let lo = primlab::primorial::primorial_u64(n).unwrap() + 1;
                let hi = primlab::primorial::primorial_u64(n + 1).unwrap() + 1;
                (lo, hi)
            }
            _ => (4, 30_031),
        };
        let report = verify_range(&cfg, flavor, lo, hi, None)?;
        println!(
            "  {:<10} scanned {:>6} evens: exceptions {:?}, holds from {}, {}",
            flavor.name(),
            report.evens_scanned,
            report.exceptions,
            report.threshold,
            match report.status {
                Status::Verified => "verified",
                Status::Failed => "FAILED",
            }
        );
    }
    Ok(())
}
