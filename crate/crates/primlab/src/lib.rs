//! Primorial sets, totative numbers, prime-constellation counting, and
//! Goldbach-style range verification.
//!
//! The n-th primorial #(n) is the product of the first n primes. Arranging
//! the integers 2 ..= #(n)+1 into tables of p_n rows exposes a recursive
//! structure in the numbers coprime to #(n) (the totatives): each totative
//! column of the table loses exactly one element to p_n. That single fact
//! yields product recurrences counting totative twins, cousins, sexy
//! couples, triplets, and quadruplets, which this crate computes exactly and
//! cross-checks against brute-force enumeration and against segmented-sieve
//! counts of the corresponding prime classes.
//!
//! # Modules
//!
//! - [`primes`]: prime generation, deterministic 64-bit primality, gcd.
//! - [`primorial`]: #(n), φ(#(n)), and the [`primorial::PrimorialContext`] handle.
//! - [`sieve`]: segmented bit-sieve, π, fixed-offset prime pair counts.
//! - [`totative`]: primorial sets/intervals/tables, offset tuples, and the
//!   admissible / strong / isolated predicates.
//! - [`counting`]: the class-count recurrences, their enumeration oracle,
//!   and the recurrence-vs-prime ratio tables.
//! - [`goldbach`]: witness search and range verification for five
//!   Goldbach-style conjectures.
//! - [`report`], [`cli`]: output rendering and the `primlab` binary surface.
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run --release -p primlab --example primorial_basics
//! cargo run --release -p primlab --example totative_sets
//! cargo run --release -p primlab --example primorial_table
//! cargo run --release -p primlab --example tuple_search
//! cargo run --release -p primlab --example count_ratios
//! cargo run --release -p primlab --example sieve_windows
//! cargo run --release -p primlab --example goldbach_scan
//! ```

// Divisibility tests read as `m % p == 0` throughout.
#![allow(clippy::manual_is_multiple_of)]

pub mod cli;
pub mod config;
pub mod counting;
pub mod error;
pub mod goldbach;
pub mod primes;
pub mod primorial;
pub mod report;
pub mod sieve;
pub mod totative;

pub use config::Config;
pub use error::{Error, Result};
