//! Runtime knobs shared by the sieving and enumeration entry points.
//!
//! Precedence is: explicit values set by the caller (CLI flags) over the
//! `PRIMLAB_*` environment variables over the built-in defaults.

use crate::error::{Error, Result};

/// log2 of the default number of entries per sieve segment.
pub const DEFAULT_SEGMENT_BITS: u32 = 25;

/// Default cap on the index `n` for operations that enumerate or
/// materialize on the scale of the n-th primorial.
pub const DEFAULT_ENUM_CAP: u32 = 9;

/// Environment variable names honored by [`Config::from_env`].
pub const ENV_SEGMENT_BITS: &str = "PRIMLAB_SEGMENT_BITS";
pub const ENV_THREADS: &str = "PRIMLAB_THREADS";
pub const ENV_ENUM_CAP: &str = "PRIMLAB_ENUM_CAP";

#[derive(Debug, Clone)]
pub struct Config {
    /// Numbers covered by one sieve segment (and one unit of parallel work).
    pub segment_entries: u64,
    /// Worker threads for segment-parallel operations. Results never depend
    /// on this value.
    pub threads: usize,
    /// Largest index n for which sets of size ~#(n) may be enumerated.
    pub enum_cap: u32,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            segment_entries: 1 << DEFAULT_SEGMENT_BITS,
            threads: std::thread::available_parallelism().map_or(1, |p| p.get()),
            enum_cap: DEFAULT_ENUM_CAP,
        }
    }
}

impl Config {
    /// Defaults overridden by any `PRIMLAB_*` environment variables set.
    pub fn from_env() -> Result<Self> {
        let mut cfg = Config::default();
        if let Some(bits) = read_env(ENV_SEGMENT_BITS)? {
            cfg.segment_entries = segment_entries_from_bits(bits as u32)?;
        }
        if let Some(threads) = read_env(ENV_THREADS)? {
            if threads == 0 {
                return Err(Error::usage(format!("{ENV_THREADS} must be at least 1")));
            }
            cfg.threads = threads as usize;
        }
        if let Some(cap) = read_env(ENV_ENUM_CAP)? {
            cfg.enum_cap = cap as u32;
        }
        Ok(cfg)
    }
}

/// Converts a segment size exponent into an entry count, rejecting sizes
/// that are useless (too small to sieve) or would exhaust memory.
pub fn segment_entries_from_bits(bits: u32) -> Result<u64> {
    if !(10..=31).contains(&bits) {
        return Err(Error::usage(format!(
            "segment bits must be in 10..=31, got {bits}"
        )));
    }
    Ok(1 << bits)
}

fn read_env(name: &str) -> Result<Option<u64>> {
    match std::env::var(name) {
        Ok(raw) => raw
            .trim()
            .parse::<u64>()
            .map(Some)
            .map_err(|_| Error::usage(format!("{name}={raw:?} is not a whole number"))),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(Error::usage(format!("{name}: {e}"))),
    }
}
