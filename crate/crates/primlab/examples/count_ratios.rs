//! Reproducing the count tables: recurrence values for each totative class
//! next to the sieve-measured prime counterpart, with the ratio.
//!
//! ```bash
//! cargo run --release -p primlab --example count_ratios
//! ```

use primlab::counting::{brute_count, ratio_report, sexy_breakdown, twin_rec, CountClass};
use primlab::report::format_sig6;
use primlab::totative::OffsetTuple;
use primlab::Config;

fn main() -> primlab::Result<()> {
    let cfg = Config::default();

    for class in [
        CountClass::Tot,
        CountClass::Twin,
        CountClass::Cousin,
        CountClass::Sexy,
    ] {
        let (rec_label, star_label) = class.labels();
        println!("{} table, n = 3..7:", class.name());
        println!(
            "  {:>2} {:>10} {:>9} {:>9} {:>9}",
            "n", "#(n)", rec_label, star_label, "ratio"
        );
        for row in ratio_report(&cfg, class, 3, 7)? {
            println!(
                "  {:>2} {:>10} {:>9} {:>9} {:>9}",
                row.n,
                row.primorial,
                row.recurrence,
                row.prime_class,
                format_sig6(row.ratio)
            );
        }
        println!();
    }

    println!("sexy family breakdown:");
    println!(
        "  {:>2} {:>8} {:>8} {:>8} {:>8} {:>8}",
        "n", "isexy", "itriple", "triple", "quad", "sexy"
    );
    for n in 3..=8u32 {
        let b = sexy_breakdown(n);
        println!(
            "  {:>2} {:>8} {:>8} {:>8} {:>8} {:>8}",
            n, b.isexy, b.itriple, b.triple, b.quad, b.sexy
        );
    }

    println!("\nthe brute-force oracle agrees with the twin recurrence:");
    let twin = OffsetTuple::new(vec![0, 2])?;
    for n in 2..=6u32 {
        let counted = brute_count(&cfg, &twin, n, false)?;
        println!("  n={n}: enumerated {counted}, recurrence {}", twin_rec(n));
    }
    Ok(())
}
