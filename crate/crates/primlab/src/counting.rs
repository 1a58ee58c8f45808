//! Recursive counting of totative tuple classes (twin, cousin, sexy and its
//! triplet/quadruplet refinements) with a brute-force enumeration oracle,
//! plus the ratio reports pairing each recurrence against sieve-measured
//! prime counts.
//!
//! The enumeration oracle is the authority: tests compare every recurrence
//! against it on the enumerable range instead of trusting the closed forms.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::primes::nth_prime;
use crate::primorial::primorial;
use crate::sieve::{count_prime_pairs, prime_pi};
use crate::totative::{enumerate_satisfying, OffsetTuple};

/// tot(n): totative count by the recurrence tot(1) = 1,
/// tot(n) = (p_n - 1) * tot(n - 1).
pub fn tot_rec(n: u32) -> BigUint {
    assert!(n >= 1, "tot is defined for n >= 1");
    let mut acc = BigUint::from(1u32);
    for m in 2..=n {
        acc *= nth_prime(m as u64) - 1;
    }
    acc
}

/// twin(n): 0, 1 at n = 1, 2; then (p_n - 2) * twin(n - 1).
pub fn twin_rec(n: u32) -> BigUint {
    assert!(n >= 1, "twin is defined for n >= 1");
    if n == 1 {
        return BigUint::zero();
    }
    let mut acc = BigUint::from(1u32);
    for m in 3..=n {
        acc *= nth_prime(m as u64) - 2;
    }
    acc
}

/// cousin(n): 0, 0, 3 at n = 1..3; then (p_n - 2) * cousin(n - 1).
pub fn cousin_rec(n: u32) -> BigUint {
    assert!(n >= 1, "cousin is defined for n >= 1");
    if n <= 2 {
        return BigUint::zero();
    }
    let mut acc = BigUint::from(3u32);
    for m in 4..=n {
        acc *= nth_prime(m as u64) - 2;
    }
    acc
}

/// quad(n): 0, 0, 1, 6 at n = 1..4; then (p_n - 4) * quad(n - 1).
pub fn quad_rec(n: u32) -> BigUint {
    assert!(n >= 1, "quad is defined for n >= 1");
    match n {
        1 | 2 => return BigUint::zero(),
        3 => return BigUint::from(1u32),
        _ => {}
    }
    let mut acc = BigUint::from(6u32);
    for m in 5..=n {
        acc *= nth_prime(m as u64) - 4;
    }
    acc
}

/// sexy(n) by its own recurrence: 0, 0, 5, 30 at n = 1..4; then
/// (p_n - 2) * sexy(n - 1). An independent route to the same value as
/// [`SexyBreakdown::sexy`].
pub fn sexy_rec(n: u32) -> BigUint {
    assert!(n >= 1, "sexy is defined for n >= 1");
    match n {
        1 | 2 => return BigUint::zero(),
        3 => return BigUint::from(5u32),
        _ => {}
    }
    let mut acc = BigUint::from(30u32);
    for m in 5..=n {
        acc *= nth_prime(m as u64) - 2;
    }
    acc
}

/// The five interlocking sexy counts at one level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SexyBreakdown {
    pub n: u32,
    /// Isolated sexy couples.
    pub isexy: BigUint,
    /// Isolated sexy triplets.
    pub itriple: BigUint,
    /// All sexy triplets: itriple + 2 * quad.
    pub triple: BigUint,
    /// Sexy quadruplets (all isolated).
    pub quad: BigUint,
    /// All sexy couples: isexy + 2 * itriple + 3 * quad.
    pub sexy: BigUint,
}

/// Computes the sexy family jointly: isexy/itriple/quad evolve by mutual
/// recurrences (bases at n = 3 and explicit overrides at n = 4), and the
/// aggregate triple/sexy counts are their fixed combinations.
pub fn sexy_breakdown(n: u32) -> SexyBreakdown {
    assert!(n >= 1, "sexy counts are defined for n >= 1");
    let mut isexy = BigUint::zero();
    let mut itriple = BigUint::zero();
    let mut quad = BigUint::zero();
    for m in 3..=n {
        (isexy, itriple, quad) = match m {
            3 => (BigUint::zero(), BigUint::from(1u32), BigUint::from(1u32)),
            4 => (
                BigUint::from(4u32),
                BigUint::from(4u32),
                BigUint::from(6u32),
            ),
            _ => {
                let p = nth_prime(m as u64);
                (
                    &isexy * (p - 2) + 2u32 * &itriple + 2u32 * &quad,
                    &itriple * (p - 3) + 2u32 * &quad,
                    &quad * (p - 4),
                )
            }
        };
    }
    let triple = &itriple + 2u32 * &quad;
    let sexy = &isexy + 2u32 * &itriple + 3u32 * &quad;
    SexyBreakdown {
        n,
        isexy,
        itriple,
        triple,
        quad,
        sexy,
    }
}

/// Isolated-occurrence count by the product recurrence: starting from
/// `base_count` occurrences at `base_n`, each level m contributes a factor
/// (p_m - k).
///
/// The hypotheses (tuple admissible, strong at `base_n`, gap below
/// p_{base_n+1} - 1) are checked and a violation is reported by name.
pub fn generic_isolated_count_rec(
    a: &OffsetTuple,
    base_n: u32,
    base_count: u64,
    n: u32,
) -> Result<BigUint> {
    if base_n < 1 {
        return Err(Error::usage("the base level must be at least 1"));
    }
    if n < base_n {
        return Err(Error::usage(format!(
            "target level {n} is below the base level {base_n}"
        )));
    }
    if !a.is_admissible() {
        return Err(Error::usage(format!(
            "hypothesis violated: {a} is not admissible"
        )));
    }
    if !a.is_strong(base_n) {
        return Err(Error::usage(format!(
            "hypothesis violated: {a} is not {base_n}-strong"
        )));
    }
    let gap = a.gap()?;
    let next_prime = nth_prime(base_n as u64 + 1);
    if gap >= next_prime - 1 {
        return Err(Error::usage(format!(
            "hypothesis violated: gap({a}) = {gap} is not below p_{} - 1 = {}",
            base_n + 1,
            next_prime - 1
        )));
    }
    let k = a.k() as u64;
    let mut acc = BigUint::from(base_count);
    for m in (base_n + 1)..=n {
        acc *= nth_prime(m as u64) - k;
    }
    Ok(acc)
}

/// Pure enumeration count of tuple occurrences; the oracle the recurrences
/// are tested against.
pub fn brute_count(cfg: &Config, a: &OffsetTuple, n: u32, isolated_only: bool) -> Result<u64> {
    Ok(enumerate_satisfying(cfg, a, n, isolated_only)?.len() as u64)
}

/// The four classes reported as ratio tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountClass {
    Tot,
    Twin,
    Cousin,
    Sexy,
}

impl CountClass {
    /// Prime pair offset measured on the sieve side; `None` means the plain
    /// prime count π.
    pub fn pair_offset(self) -> Option<u32> {
        match self {
            CountClass::Tot => None,
            CountClass::Twin => Some(2),
            CountClass::Cousin => Some(4),
            CountClass::Sexy => Some(6),
        }
    }

    pub fn recurrence(self, n: u32) -> BigUint {
        match self {
            CountClass::Tot => tot_rec(n),
            CountClass::Twin => twin_rec(n),
            CountClass::Cousin => cousin_rec(n),
            CountClass::Sexy => sexy_breakdown(n).sexy,
        }
    }

    /// Column labels (recurrence side, sieve side) for reports.
    pub fn labels(self) -> (&'static str, &'static str) {
        match self {
            CountClass::Tot => ("tot", "pi"),
            CountClass::Twin => ("twin", "twin_star"),
            CountClass::Cousin => ("cousin", "cousin_star"),
            CountClass::Sexy => ("sexy", "sexy_star"),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CountClass::Tot => "tot",
            CountClass::Twin => "twin",
            CountClass::Cousin => "cousin",
            CountClass::Sexy => "sexy",
        }
    }
}

/// One row of a ratio table: the recurrence value against the corresponding
/// prime count up to #(n)+1.
#[derive(Debug, Clone)]
pub struct CountRow {
    pub n: u32,
    pub primorial: BigUint,
    pub recurrence: BigUint,
    pub prime_class: u64,
    /// recurrence / prime_class; render with
    /// [`crate::report::format_sig6`] for table output.
    pub ratio: f64,
}

/// Builds the ratio table rows for `n_lo ..= n_hi`.
pub fn ratio_report(
    cfg: &Config,
    class: CountClass,
    n_lo: u32,
    n_hi: u32,
) -> Result<Vec<CountRow>> {
    if n_lo < 3 || n_lo > n_hi {
        return Err(Error::usage(format!(
            "ratio tables need 3 <= from <= to, got {n_lo}..{n_hi}"
        )));
    }
    let mut rows = Vec::with_capacity((n_hi - n_lo + 1) as usize);
    for n in n_lo..=n_hi {
        let limit = crate::primorial::primorial_u64(n)
            .ok_or_else(|| Error::resource("sieve limit #(n)+1 exceeds 64 bits", n as u64))?
            + 1;
        let recurrence = class.recurrence(n);
        let prime_class = match class.pair_offset() {
            None => prime_pi(cfg, limit),
            Some(d) => count_prime_pairs(cfg, d, limit)?.count,
        };
        let ratio = recurrence.to_f64().unwrap_or(f64::INFINITY) / prime_class as f64;
        rows.push(CountRow {
            n,
            primorial: primorial(n),
            recurrence,
            prime_class,
            ratio,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tuple(offsets: &[u64]) -> OffsetTuple {
        OffsetTuple::new(offsets.to_vec()).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn tot_recurrence_examples() {
        assert_eq!(tot_rec(1), big(1));
        assert_eq!(tot_rec(3), big(8));
        assert_eq!(tot_rec(10), big(1021870080));
        assert_eq!(tot_rec(8), big(1658880));
    }

    #[test]
    fn tot_matches_phi() {
        for n in 1..=20 {
            assert_eq!(tot_rec(n), crate::primorial::euler_phi_primorial(n));
        }
    }

    #[test]
    fn twin_recurrence_examples() {
        assert_eq!(twin_rec(1), big(0));
        assert_eq!(twin_rec(2), big(1));
        assert_eq!(twin_rec(3), big(3));
        assert_eq!(twin_rec(5), big(135));
        assert_eq!(twin_rec(10), big(214708725));
    }

    #[test]
    fn cousin_recurrence_examples() {
        assert_eq!(cousin_rec(1), big(0));
        assert_eq!(cousin_rec(2), big(0));
        assert_eq!(cousin_rec(3), big(3));
        assert_eq!(cousin_rec(4), big(15));
        assert_eq!(cousin_rec(7), big(22275));
    }

    #[test]
    fn quad_recurrence_examples() {
        assert_eq!(quad_rec(3), big(1));
        assert_eq!(quad_rec(4), big(6));
        assert_eq!(quad_rec(5), big(42)); // (11 - 4) * 6
    }

    #[test]
    fn sexy_breakdown_examples() {
        let b = sexy_breakdown(3);
        assert_eq!(
            (b.isexy, b.itriple, b.triple, b.quad, b.sexy),
            (big(0), big(1), big(3), big(1), big(5))
        );
        let b = sexy_breakdown(4);
        assert_eq!(b.isexy, big(4));
        assert_eq!(b.itriple, big(4));
        assert_eq!(b.quad, big(6));
        assert_eq!(b.sexy, big(30));
        assert_eq!(sexy_breakdown(5).sexy, big(270));
        assert_eq!(sexy_breakdown(6).sexy, big(2970));
    }

    #[test]
    fn sexy_direct_recurrence_agrees_with_breakdown() {
        for n in 1..=20 {
            assert_eq!(sexy_rec(n), sexy_breakdown(n).sexy, "n={n}");
        }
    }

    #[test]
    fn breakdown_identities_hold() {
        for n in 1..=20 {
            let b = sexy_breakdown(n);
            assert_eq!(
                b.triple,
                &b.itriple + 2u32 * &b.quad,
                "triple identity at n={n}"
            );
            assert_eq!(
                b.sexy,
                &b.isexy + 2u32 * &b.itriple + 3u32 * &b.quad,
                "sexy identity at n={n}"
            );
        }
    }

    #[test]
    fn twin_equals_cousin_from_three() {
        for n in 3..=20 {
            assert_eq!(twin_rec(n), cousin_rec(n), "n={n}");
        }
    }

    #[test]
    fn sexy_is_twice_twin_from_four() {
        for n in 4..=20 {
            assert_eq!(sexy_breakdown(n).sexy, 2u32 * twin_rec(n), "n={n}");
        }
    }

    #[test]
    fn generic_recurrence_examples() {
        let twin = tuple(&[0, 2]);
        assert_eq!(
            generic_isolated_count_rec(&twin, 2, 1, 5).unwrap(),
            big(135)
        );
        let quad = tuple(&[0, 6, 12, 18]);
        assert_eq!(
            generic_isolated_count_rec(&quad, 4, 6, 6).unwrap(),
            big(378) // 6 * (11-4) * (13-4)
        );
        assert_eq!(generic_isolated_count_rec(&twin, 3, 7, 3).unwrap(), big(7));
    }

    #[test]
    fn generic_recurrence_names_violated_hypothesis() {
        let bad = tuple(&[0, 2, 4]);
        let err = generic_isolated_count_rec(&bad, 2, 1, 5).unwrap_err();
        assert!(err.to_string().contains("not admissible"), "{err}");

        let weak = tuple(&[0, 10]); // admissible, but 0 and 10 collide mod 5
        let err = generic_isolated_count_rec(&weak, 3, 1, 5).unwrap_err();
        assert!(err.to_string().contains("not 3-strong"), "{err}");

        // (0,4) is 2-strong, but its gap of 4 is not below p_3 - 1 = 4.
        let wide = tuple(&[0, 4]);
        let err = generic_isolated_count_rec(&wide, 2, 1, 5).unwrap_err();
        assert!(err.to_string().contains("gap"), "{err}");

        let twin = tuple(&[0, 2]);
        assert!(generic_isolated_count_rec(&twin, 4, 1, 3).is_err());
    }

    #[test]
    fn brute_counts_match_known_small_cases() {
        let cfg = Config::default();
        assert_eq!(brute_count(&cfg, &tuple(&[0, 2]), 3, false).unwrap(), 3);
        assert_eq!(brute_count(&cfg, &tuple(&[0, 2]), 3, true).unwrap(), 3);
        assert_eq!(brute_count(&cfg, &tuple(&[0, 6]), 3, false).unwrap(), 5);
        assert_eq!(brute_count(&cfg, &tuple(&[0, 6, 12]), 3, true).unwrap(), 1);
    }

    #[test]
    fn recurrences_match_brute_oracle_through_n5() {
        let cfg = Config::default();
        for n in 1..=5u32 {
            assert_eq!(
                big(brute_count(&cfg, &tuple(&[0, 2]), n, false).unwrap()),
                twin_rec(n),
                "twin at n={n}"
            );
            assert_eq!(
                big(brute_count(&cfg, &tuple(&[0, 4]), n, false).unwrap()),
                cousin_rec(n),
                "cousin at n={n}"
            );
            assert_eq!(
                big(brute_count(&cfg, &tuple(&[0, 6, 12, 18]), n, false).unwrap()),
                quad_rec(n),
                "quad at n={n}"
            );
            let b = sexy_breakdown(n);
            assert_eq!(
                big(brute_count(&cfg, &tuple(&[0, 6]), n, false).unwrap()),
                b.sexy,
                "sexy at n={n}"
            );
            assert_eq!(
                big(brute_count(&cfg, &tuple(&[0, 6]), n, true).unwrap()),
                b.isexy,
                "isexy at n={n}"
            );
            assert_eq!(
                big(brute_count(&cfg, &tuple(&[0, 6, 12]), n, false).unwrap()),
                b.triple,
                "triple at n={n}"
            );
            assert_eq!(
                big(brute_count(&cfg, &tuple(&[0, 6, 12]), n, true).unwrap()),
                b.itriple,
                "itriple at n={n}"
            );
        }
    }

    #[test]
    fn claimed_isolation_ranges_hold_in_oracle() {
        // Twin couples are isolated for n > 2, cousins for n > 3, quads for
        // n > 4: raw and isolated counts must agree there.
        let cfg = Config::default();
        for n in 3..=5u32 {
            let raw = brute_count(&cfg, &tuple(&[0, 2]), n, false).unwrap();
            let iso = brute_count(&cfg, &tuple(&[0, 2]), n, true).unwrap();
            assert_eq!(raw, iso, "twin isolation at n={n}");
        }
        for n in 4..=5u32 {
            let raw = brute_count(&cfg, &tuple(&[0, 4]), n, false).unwrap();
            let iso = brute_count(&cfg, &tuple(&[0, 4]), n, true).unwrap();
            assert_eq!(raw, iso, "cousin isolation at n={n}");
        }
        for n in 5..=5u32 {
            let raw = brute_count(&cfg, &tuple(&[0, 6, 12, 18]), n, false).unwrap();
            let iso = brute_count(&cfg, &tuple(&[0, 6, 12, 18]), n, true).unwrap();
            assert_eq!(raw, iso, "quad isolation at n={n}");
        }
    }

    #[test]
    fn ratio_report_rows() {
        let cfg = Config::default();
        let rows = ratio_report(&cfg, CountClass::Twin, 4, 4).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].recurrence, big(15));
        assert_eq!(rows[0].prime_class, 15);
        assert_eq!(rows[0].ratio, 1.0);

        let rows = ratio_report(&cfg, CountClass::Tot, 3, 3).unwrap();
        assert_eq!(rows[0].recurrence, big(8));
        assert_eq!(rows[0].prime_class, 11);

        let rows = ratio_report(&cfg, CountClass::Sexy, 6, 6).unwrap();
        assert_eq!(rows[0].recurrence, big(2970));
        assert_eq!(rows[0].prime_class, 951);

        assert!(ratio_report(&cfg, CountClass::Tot, 2, 3).is_err());
        assert!(ratio_report(&cfg, CountClass::Tot, 5, 4).is_err());
    }
}
