//! Rendering a primorial table with its color roles as a text
//! grid: white totatives, blue multiples of p_n, red multiples of smaller
//! primes, yellow joint multiples.
//!
//! ```bash
//! cargo run --release -p primlab --example primorial_table
//! ```

use primlab::totative::{col, table_cells, unique_multiple_of_pn, CellRole};
use primlab::Config;

fn main() -> primlab::Result<()> {
    let cfg = Config::default();
    let n = 3;

    println!("the {n}-primorial table (W totative, B mult of p_n, R smaller, Y both):");
    let mut current_row = u64::MAX;
    for cell in table_cells(&cfg, n, false)? {
        if cell.row != current_row {
            if current_row != u64::MAX {
                println!();
            }
            current_row = cell.row;
        }
        let tag = match cell.role {
            CellRole::Totative => 'W',
            CellRole::MultiplePn => 'B',
            CellRole::MultipleSmaller => 'R',
            CellRole::MultipleBoth => 'Y',
        };
        print!("{:>4}{tag}", cell.value);
    }
    println!("\n");

    println!("totative columns of the 4-table and their single blue cell:");
    for t_prime in [7u64, 11, 13, 17, 19, 23, 29, 31] {
        let column = col(4, t_prime)?;
        let marked = unique_multiple_of_pn(4, t_prime)?;
        println!("  col(4, {t_prime:>2}) = {column:?}  multiple of 7: {marked}");
    }
    Ok(())
}
