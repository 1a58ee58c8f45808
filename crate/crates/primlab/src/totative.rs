//! Primorial sets, intervals, and tables; totative enumeration; and the
//! admissible / strong / isolated predicates on offset tuples.
//!
//! The n-primorial set is `{2, 3, ..., #(n), #(n)+1}`. Its totatives are the
//! members coprime to #(n). Arranged as a table of p_n rows of width #(n-1),
//! the columns generated by (n-1)-totatives carry all n-totatives plus, per
//! column, exactly one multiple of p_n.

use num_bigint::BigUint;
use num_traits::One;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::primes::{nth_prime, primes_upto};
use crate::primorial::{coprime_to_first_primes, primorial, primorial_u64};

/// Bounds (2, #(n)+1) of the n-primorial set.
pub fn primorial_set_bounds(n: u32) -> Result<(BigUint, BigUint)> {
    if n < 1 {
        return Err(Error::usage("primorial sets start at n = 1"));
    }
    Ok((BigUint::from(2u32), primorial(n) + BigUint::one()))
}

/// Bounds (#(n-1)+1, #(n)+1) of the n-primorial interval.
pub fn primorial_interval(n: u32) -> Result<(BigUint, BigUint)> {
    if n < 1 {
        return Err(Error::usage("primorial intervals start at n = 1"));
    }
    Ok((
        primorial(n - 1) + BigUint::one(),
        primorial(n) + BigUint::one(),
    ))
}

/// Same as [`primorial_set_bounds`] in u64 arithmetic; n <= 15 only.
pub fn primorial_set_bounds_u64(n: u32) -> Result<(u64, u64)> {
    if n < 1 {
        return Err(Error::usage("primorial sets start at n = 1"));
    }
    let top = primorial_u64(n).ok_or_else(|| Error::range(format!("#({n}) exceeds 64 bits")))?;
    Ok((2, top + 1))
}

/// True iff t is an n-totative: `2 <= t <= #(n)+1` and gcd(t, #(n)) = 1.
pub fn is_totative(n: u32, t: u64) -> bool {
    if t < 2 {
        return false;
    }
    if let Some(primorial) = primorial_u64(n) {
        if t > primorial + 1 {
            return false;
        }
    }
    // For n > 15 the set bound #(n)+1 exceeds u64, so any t is in range.
    coprime_to_first_primes(n, t)
}

/// Snapshot of one level's primes and set bound, so inner enumeration loops
/// avoid the shared prime cache.
struct LevelCtx {
    primes: Vec<u64>,
    top: u64,
}

impl LevelCtx {
    fn new(n: u32) -> Result<LevelCtx> {
        let top =
            primorial_u64(n).ok_or_else(|| Error::range(format!("#({n}) exceeds 64 bits")))? + 1;
        Ok(LevelCtx {
            primes: crate::primes::first_n_primes(n),
            top,
        })
    }

    #[inline]
    fn is_totative(&self, t: u64) -> bool {
        t >= 2 && t <= self.top && self.primes.iter().all(|&p| t % p != 0)
    }

    #[inline]
    fn satisfies(&self, t: u64, a: &OffsetTuple) -> bool {
        a.offsets()
            .iter()
            .all(|&off| t.checked_add(off).is_some_and(|x| self.is_totative(x)))
    }

    fn is_isolated(&self, t: u64, a: &OffsetTuple) -> bool {
        let shift = a.offsets()[1];
        let left = t.checked_sub(shift).is_some_and(|l| self.satisfies(l, a));
        let right = t.checked_add(shift).is_some_and(|r| self.satisfies(r, a));
        !left && !right
    }
}

/// The n-totatives, ascending and fully materialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotativeSet {
    n: u32,
    members: Vec<u64>,
}

impl TotativeSet {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, t: u64) -> bool {
        self.members.binary_search(&t).is_ok()
    }
}

/// Streaming enumeration of the n-totatives in ascending order.
pub fn totatives(cfg: &Config, n: u32) -> Result<impl Iterator<Item = u64>> {
    if n < 1 {
        return Err(Error::usage("totative sets start at n = 1"));
    }
    if n > cfg.enum_cap {
        return Err(Error::resource(
            "totative enumeration above the cap",
            n as u64,
        ));
    }
    let ctx = LevelCtx::new(n)?;
    Ok((2..=ctx.top).filter(move |&t| ctx.is_totative(t)))
}

/// Materializes the full n-totative set.
pub fn totative_set(cfg: &Config, n: u32) -> Result<TotativeSet> {
    let members: Vec<u64> = totatives(cfg, n)?.collect();
    Ok(TotativeSet { n, members })
}

/// The k-th row of the n-primorial table: the #(n-1) consecutive values
/// `k*#(n-1) + j` for j = 2 ..= #(n-1)+1.
pub fn row(cfg: &Config, n: u32, k: u64) -> Result<Vec<u64>> {
    if n < 2 {
        return Err(Error::usage("table rows need n >= 2"));
    }
    if n - 1 > cfg.enum_cap {
        return Err(Error::resource(
            "table row width above the enumeration cap",
            n as u64,
        ));
    }
    let p_n = nth_prime(n as u64);
    if k >= p_n {
        return Err(Error::usage(format!("row index {k} out of range 0..{p_n}")));
    }
    // Row values reach #(n)+1, so #(n) itself must fit.
    primorial_u64(n).ok_or_else(|| Error::range(format!("#({n}) exceeds 64 bits")))?;
    let width = primorial_u64(n - 1).expect("fits because #(n) fits");
    Ok((2..=width + 1).map(|j| k * width + j).collect())
}

/// The n-totative column generated by the (n-1)-totative t': the p_n values
/// `t' + k*#(n-1)` for k = 0 .. p_n.
pub fn col(n: u32, t_prime: u64) -> Result<Vec<u64>> {
    if n < 2 {
        return Err(Error::usage("table columns need n >= 2"));
    }
    if !is_totative(n - 1, t_prime) {
        return Err(Error::usage(format!(
            "{t_prime} is not a {}-totative, so it generates no column",
            n - 1
        )));
    }
    // Column values stay within #(n)+1, so n must keep #(n) inside u64.
    primorial_u64(n).ok_or_else(|| Error::range(format!("#({n}) exceeds 64 bits")))?;
    let stride = primorial_u64(n - 1).expect("fits because #(n) fits");
    let p_n = nth_prime(n as u64);
    Ok((0..p_n).map(|k| t_prime + k * stride).collect())
}

/// The single element of `col(n, t')` divisible by p_n.
///
/// Exactly one such element exists in every totative column; finding zero or
/// several would falsify that structural fact, so it is reported as an
/// internal error rather than a result.
pub fn unique_multiple_of_pn(n: u32, t_prime: u64) -> Result<u64> {
    let p_n = nth_prime(n as u64);
    let mut found = None;
    for value in col(n, t_prime)? {
        if value % p_n == 0 {
            if let Some(first) = found {
                return Err(Error::Internal(format!(
                    "col({n}, {t_prime}) holds two multiples of {p_n}: {first} and {value}"
                )));
            }
            found = Some(value);
        }
    }
    found.ok_or_else(|| Error::Internal(format!("col({n}, {t_prime}) holds no multiple of {p_n}")))
}

/// A cell address in the n-primorial table: row k and the column generated
/// by an (n-1)-totative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableCoord {
    n: u32,
    row: u64,
    col_base: u64,
}

impl TableCoord {
    pub fn new(n: u32, row: u64, col_base: u64) -> Result<Self> {
        if n < 1 {
            return Err(Error::usage("table coordinates need n >= 1"));
        }
        let p_n = nth_prime(n as u64);
        if row >= p_n {
            return Err(Error::usage(format!("row {row} out of range 0..{p_n}")));
        }
        if !is_totative(n - 1, col_base) {
            return Err(Error::usage(format!(
                "column base {col_base} is not a {}-totative",
                n - 1
            )));
        }
        primorial_u64(n).ok_or_else(|| Error::range(format!("#({n}) exceeds 64 bits")))?;
        Ok(TableCoord { n, row, col_base })
    }

    /// The addressed element, `col_base + row * #(n-1)`; always in the
    /// n-primorial set.
    pub fn value(&self) -> u64 {
        self.col_base + self.row * primorial_u64(self.n - 1).expect("validated")
    }
}

/// An offset pattern (0, a_2, ..., a_k), strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OffsetTuple {
    offsets: Vec<u64>,
}

impl OffsetTuple {
    pub fn new(offsets: Vec<u64>) -> Result<Self> {
        if offsets.is_empty() {
            return Err(Error::usage("offset tuples need at least one entry"));
        }
        if offsets[0] != 0 {
            return Err(Error::usage(format!(
                "offset tuples start at 0, got {}",
                offsets[0]
            )));
        }
        if offsets.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::usage("offsets must be strictly increasing"));
        }
        Ok(OffsetTuple { offsets })
    }

    pub fn offsets(&self) -> &[u64] {
        &self.offsets
    }

    /// Tuple length k.
    pub fn k(&self) -> u32 {
        self.offsets.len() as u32
    }

    /// The last offset a_k.
    pub fn diameter(&self) -> u64 {
        *self.offsets.last().expect("non-empty by construction")
    }

    /// Largest difference between consecutive offsets; needs k >= 2.
    pub fn gap(&self) -> Result<u64> {
        if self.offsets.len() < 2 {
            return Err(Error::usage("gap needs at least two offsets"));
        }
        Ok(self
            .offsets
            .windows(2)
            .map(|w| w[1] - w[0])
            .max()
            .expect("k >= 2"))
    }

    /// Admissibility via residue coverage: for every prime p <= k the
    /// offsets must occupy fewer than p residue classes mod p. Primes above
    /// k cannot be covered by k offsets, and when no prime is fully covered
    /// the Chinese remainder theorem supplies a satisfying totative at every
    /// level, so the check is independent of n.
    pub fn is_admissible(&self) -> bool {
        let k = self.offsets.len() as u64;
        for p in primes_upto(k) {
            let mut seen = vec![false; p as usize];
            let mut classes = 0u64;
            for &a in &self.offsets {
                let r = (a % p) as usize;
                if !seen[r] {
                    seen[r] = true;
                    classes += 1;
                }
            }
            if classes >= p {
                return false;
            }
        }
        true
    }

    /// n-strength: offsets pairwise distinct mod p for every prime
    /// p_n <= p <= diameter. Primes above the diameter cannot identify two
    /// distinct offsets, and k > p_n forces a collision mod p_n outright.
    pub fn is_strong(&self, n: u32) -> bool {
        assert!(n >= 1, "strength is defined for n >= 1");
        let p_n = nth_prime(n as u64);
        if self.offsets.len() as u64 > p_n {
            return false;
        }
        for p in primes_upto(self.diameter()) {
            if p < p_n {
                continue;
            }
            let mut seen = vec![false; p as usize];
            for &a in &self.offsets {
                let r = (a % p) as usize;
                if seen[r] {
                    return false;
                }
                seen[r] = true;
            }
        }
        true
    }
}

impl std::str::FromStr for OffsetTuple {
    type Err = Error;

    /// Parses a comma-separated offset list such as `0,2,6`.
    fn from_str(s: &str) -> Result<Self> {
        let offsets = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::usage(format!("bad offset {part:?} in {s:?}")))
            })
            .collect::<Result<Vec<u64>>>()?;
        OffsetTuple::new(offsets)
    }
}

impl std::fmt::Display for OffsetTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.offsets.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// True iff t + a_i is an n-totative for every offset a_i.
pub fn satisfies(t: u64, a: &OffsetTuple, n: u32) -> bool {
    a.offsets()
        .iter()
        .all(|&off| t.checked_add(off).is_some_and(|x| is_totative(n, x)))
}

/// True iff neither shift of the occurrence by a_2 satisfies the tuple.
/// A left shift falling below 2 cannot satisfy anything; the set is not
/// treated cyclically.
pub fn is_isolated(t: u64, a: &OffsetTuple, n: u32) -> Result<bool> {
    if a.k() < 2 {
        return Err(Error::usage("isolation needs a tuple of length >= 2"));
    }
    if !satisfies(t, a, n) {
        return Err(Error::usage(format!(
            "{t} does not satisfy {a} at level {n}, so isolation is undefined"
        )));
    }
    Ok(is_isolated_unchecked(t, a, n))
}

fn is_isolated_unchecked(t: u64, a: &OffsetTuple, n: u32) -> bool {
    let shift = a.offsets()[1];
    let left = t.checked_sub(shift).is_some_and(|l| satisfies(l, a, n));
    let right = t.checked_add(shift).is_some_and(|r| satisfies(r, a, n));
    !left && !right
}

/// All t in the n-primorial set satisfying the tuple, ascending, optionally
/// restricted to isolated occurrences.
pub fn enumerate_satisfying(
    cfg: &Config,
    a: &OffsetTuple,
    n: u32,
    isolated_only: bool,
) -> Result<Vec<u64>> {
    if n < 1 {
        return Err(Error::usage("enumeration starts at n = 1"));
    }
    if isolated_only && a.k() < 2 {
        return Err(Error::usage("isolation needs a tuple of length >= 2"));
    }
    if n > cfg.enum_cap {
        return Err(Error::resource("tuple enumeration above the cap", n as u64));
    }
    let ctx = LevelCtx::new(n)?;
    let mut hits = Vec::new();
    for t in 2..=ctx.top {
        if ctx.satisfies(t, a) && (!isolated_only || ctx.is_isolated(t, a)) {
            hits.push(t);
        }
    }
    Ok(hits)
}

/// Smallest-diameter admissible k-tuple with diameter <= bound, ties broken
/// lexicographically; `None` when nothing admissible fits.
pub fn minimal_diameter_tuple(k: u32, bound: u64) -> Result<Option<OffsetTuple>> {
    if k < 2 {
        return Err(Error::usage("constellation search needs k >= 2"));
    }
    if bound < (k - 1) as u64 {
        return Err(Error::usage(format!(
            "diameter bound {bound} cannot hold {k} strictly increasing offsets"
        )));
    }
    for dia in (k as u64 - 1)..=bound {
        let mut middle = Vec::with_capacity(k as usize - 2);
        if let Some(found) = first_admissible(&mut middle, k as usize - 2, 1, dia) {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

/// Depth-first lexicographic search over middle offsets for one diameter.
fn first_admissible(
    middle: &mut Vec<u64>,
    need: usize,
    from: u64,
    dia: u64,
) -> Option<OffsetTuple> {
    if need == 0 {
        let mut offsets = Vec::with_capacity(middle.len() + 2);
        offsets.push(0);
        offsets.extend_from_slice(middle);
        offsets.push(dia);
        let tuple = OffsetTuple::new(offsets).expect("constructed increasing");
        return tuple.is_admissible().then_some(tuple);
    }
    for v in from..=(dia - need as u64) {
        middle.push(v);
        if let Some(found) = first_admissible(middle, need - 1, v + 1, dia) {
            return Some(found);
        }
        middle.pop();
    }
    None
}

/// Cell classification matching the table legend: white, blue, red, yellow.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellRole {
    /// Coprime to #(n).
    Totative,
    /// Divisible by p_n and by no smaller prime among the first n.
    MultiplePn,
    /// Divisible by some prime among the first n-1 but not by p_n.
    MultipleSmaller,
    /// Divisible by p_n and by a smaller prime among the first n.
    MultipleBoth,
}

impl CellRole {
    pub fn as_str(self) -> &'static str {
        match self {
            CellRole::Totative => "totative",
            CellRole::MultiplePn => "multiple_pn",
            CellRole::MultipleSmaller => "multiple_smaller",
            CellRole::MultipleBoth => "multiple_both",
        }
    }
}

/// Role of value m inside the n-primorial table.
pub fn cell_role(n: u32, m: u64) -> CellRole {
    assert!(n >= 1, "tables start at n = 1");
    let own = m % nth_prime(n as u64) == 0;
    let smaller = !coprime_to_first_primes(n - 1, m);
    match (smaller, own) {
        (false, false) => CellRole::Totative,
        (false, true) => CellRole::MultiplePn,
        (true, false) => CellRole::MultipleSmaller,
        (true, true) => CellRole::MultipleBoth,
    }
}

/// One rendered cell of a primorial table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableCell {
    /// Row index k, 0-based.
    pub row: u64,
    /// Column label j, the value's offset in row 0 (2 ..= #(n-1)+1).
    pub col: u64,
    pub value: u64,
    pub role: CellRole,
}

/// Streams the cells of the n-primorial table row by row. With
/// `totative_columns_only`, restricts to the columns generated by
/// (n-1)-totatives, reproducing the totative-column table variant.
pub fn table_cells(
    cfg: &Config,
    n: u32,
    totative_columns_only: bool,
) -> Result<impl Iterator<Item = TableCell>> {
    if n < 1 {
        return Err(Error::usage("tables start at n = 1"));
    }
    if n - 1 > cfg.enum_cap {
        return Err(Error::resource(
            "table width above the enumeration cap",
            n as u64,
        ));
    }
    primorial_u64(n).ok_or_else(|| Error::range(format!("#({n}) exceeds 64 bits")))?;
    let width = primorial_u64(n - 1).expect("fits because #(n) fits");
    let p_n = nth_prime(n as u64);
    let base_ctx = LevelCtx::new(n - 1)?;
    let iter = (0..p_n).flat_map(move |k| {
        let ctx = LevelCtx {
            primes: base_ctx.primes.clone(),
            top: base_ctx.top,
        };
        (2..=width + 1).filter_map(move |j| {
            if totative_columns_only && !ctx.is_totative(j) {
                return None;
            }
            let value = k * width + j;
            let own = value % p_n == 0;
            let smaller = !ctx.primes.iter().all(|&p| value % p != 0);
            let role = match (smaller, own) {
                (false, false) => CellRole::Totative,
                (false, true) => CellRole::MultiplePn,
                (true, false) => CellRole::MultipleSmaller,
                (true, true) => CellRole::MultipleBoth,
            };
            Some(TableCell {
                row: k,
                col: j,
                value,
                role,
            })
        })
    });
    Ok(iter)
}
