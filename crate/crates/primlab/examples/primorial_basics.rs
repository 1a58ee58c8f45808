//! Primorials, contexts, and Euler's totient on them.
//!
//! ```bash
//! cargo run --release -p primlab --example primorial_basics
//! ```

use primlab::primes::{gcd, is_prime, nth_prime};
use primlab::primorial::{euler_phi_primorial, primorial, PrimorialContext};
use primlab::totative::{primorial_interval, primorial_set_bounds};

fn main() -> primlab::Result<()> {
    println!("the first eleven primes:");
    let primes: Vec<u64> = (1..=11).map(nth_prime).collect();
    println!("  {primes:?}");

    println!("\nprimorials #(n) and their totient counts:");
    for n in 0..=12u32 {
        println!(
            "  #({n:>2}) = {:>16}   phi = {}",
            primorial(n),
            euler_phi_primorial(n)
        );
    }

    let ctx = PrimorialContext::new(5);
    println!(
        "\ncontext at n = 5: primes {:?}, #(5) = {}",
        ctx.primes(),
        ctx.primorial()
    );
    println!("#(5)+1 = 2311 prime? {}", is_prime(2311));
    println!("gcd(2310, 2311) = {}", gcd(2310, 2311));

    println!("\nprimorial sets and intervals:");
    for n in 1..=6u32 {
        let (s_lo, s_hi) = primorial_set_bounds(n)?;
        let (i_lo, i_hi) = primorial_interval(n)?;
        println!("  n={n}: set [{s_lo}, {s_hi}]  interval [{i_lo}, {i_hi}]");
    }
    println!("\nadjacent intervals share exactly one endpoint, #(n)+1.");
    Ok(())
}
