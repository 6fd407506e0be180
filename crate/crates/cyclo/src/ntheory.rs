//! Integer primitives: canonical residues, modular inverses, primality,
//! and prime search in arithmetic progressions.
//!
//! Everything here is exact and deterministic over the full `u64` range.
//! All operations are pure and safe for unrestricted concurrent use.

use crate::error::{Error, Result};

/// Default budget for [`smallest_prime_in_class`]: far beyond the first prime
/// of any residue class at desk scale, while still bounding runaway loops.
pub const DEFAULT_PRIME_SEARCH_CAP: u64 = 100_000_000;

/// Canonical representative of `n` modulo `modulus`, in `[0, modulus)`.
///
/// Accepts any integer, negatives included.
pub fn residue_bar(n: i128, modulus: u64) -> Result<u64> {
    if modulus == 0 {
        return Err(Error::InvalidModulus);
    }
    let m = modulus as i128;
    let r = ((n % m) + m) % m;
    Ok(r as u64)
}

/// Greatest common divisor.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Multiplicative inverse of `a` modulo `m`, in `(0, m)`.
///
/// Requires `gcd(a, m) = 1` and `m >= 2`; extended Euclid, exact for any
/// integer `a`.
pub fn mod_inverse(a: i128, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::InvalidModulus);
    }
    let a_bar = residue_bar(a, m)?;
    // Extended Euclid on (a_bar, m); track only the coefficient of a_bar.
    let (mut old_r, mut r) = (a_bar as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quotient = old_r / r;
        (old_r, r) = (r, old_r - quotient * r);
        (old_s, s) = (s, old_s - quotient * s);
    }
    if old_r != 1 {
        return Err(Error::NotInvertible { a: a_bar, m });
    }
    residue_bar(old_s, m)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        exp >>= 1;
        base = mul_mod(base, base, m);
    }
    acc
}

/// Small primes used for trial division before the Miller-Rabin rounds.
const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic primality test, exact for all `u64` inputs.
///
/// Trial division by the small primes, then Miller-Rabin with the witness set
/// {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}, which is known to be
/// deterministic below 3.3 * 10^24 and hence on the whole 64-bit range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    // n is odd and > 37 here. Write n - 1 = d * 2^s with d odd.
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &SMALL_PRIMES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime `s` with `s > lower`, `s ≡ rho (mod modulus)`, `s <= cap`.
///
/// Errors with [`Error::NoPrimesInClass`] when the class shares a factor with
/// the modulus, and with [`Error::BudgetExhausted`] when no prime turns up
/// below `cap` (one always exists for a large enough cap, by Dirichlet).
pub fn smallest_prime_in_class(rho: i128, modulus: u64, lower: u64, cap: u64) -> Result<u64> {
    if modulus == 0 {
        return Err(Error::InvalidModulus);
    }
    if cap <= lower {
        return Err(Error::Validation(format!(
            "search cap {cap} must exceed the lower bound {lower}"
        )));
    }
    let rho_bar = residue_bar(rho, modulus)?;
    let g = gcd(rho_bar, modulus);
    if g != 1 {
        return Err(Error::NoPrimesInClass {
            rho: rho_bar,
            modulus,
            gcd: g,
        });
    }
    // First candidate > lower in the class, then step by the modulus.
    let start = lower + 1;
    let rem = start % modulus;
    let offset = if rho_bar >= rem {
        rho_bar - rem
    } else {
        rho_bar + modulus - rem
    };
    let mut candidate = match start.checked_add(offset) {
        Some(c) => c,
        None => {
            return Err(Error::BudgetExhausted {
                rho: rho_bar,
                modulus,
                lower,
                cap,
            })
        }
    };
    while candidate <= cap {
        if is_prime(candidate) {
            return Ok(candidate);
        }
        candidate = match candidate.checked_add(modulus) {
            Some(c) => c,
            None => break,
        };
    }
    Err(Error::BudgetExhausted {
        rho: rho_bar,
        modulus,
        lower,
        cap,
    })
}

/// All primes `p` with `lo < p <= hi`, ascending.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    (lo.saturating_add(1)..=hi).filter(|&n| is_prime(n)).collect()
}

/// Complete factorization of `n >= 1` into ascending `(prime, exponent)`
/// pairs. Trial division by small primes, Pollard's rho (Brent cycle
/// detection) for what remains; total over the whole `u64` range.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for d in [2u64, 3, 5] {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            factors.push((d, e));
        }
    }
    // Wheel over 7, 11, 13, ... up to a fixed trial bound.
    let mut d = 7u64;
    const TRIAL_BOUND: u64 = 1 << 16;
    while d <= TRIAL_BOUND && d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += if d % 6 == 1 { 4 } else { 2 };
    }
    if n > 1 {
        let mut stack = vec![n];
        while let Some(m) = stack.pop() {
            if is_prime(m) {
                match factors.iter_mut().find(|(p, _)| *p == m) {
                    Some((_, e)) => *e += 1,
                    None => factors.push((m, 1)),
                }
                continue;
            }
            let d = pollard_rho(m);
            stack.push(d);
            stack.push(m / d);
        }
    }
    factors.sort_unstable();
    factors
}

/// A nontrivial factor of composite odd `n` (no factors below the trial
/// bound). Brent's variant; retries with successive polynomial offsets until
/// a factor splits off.
fn pollard_rho(n: u64) -> u64 {
    debug_assert!(!is_prime(n) && n > 1);
    if n % 2 == 0 {
        return 2;
    }
    for c in 1..u64::MAX {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!("pollard_rho exhausted all offsets");
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn residue_bar_known_values() {
        assert_eq!(residue_bar(-1, 15).unwrap(), 14);
        assert_eq!(residue_bar(31, 15).unwrap(), 1);
        assert_eq!(residue_bar(7, 105).unwrap(), 7);
        assert_eq!(residue_bar(0, 1).unwrap(), 0);
        assert_eq!(residue_bar(-30, 15).unwrap(), 0);
    }

    #[test]
    fn residue_bar_zero_modulus_errors() {
        assert!(matches!(residue_bar(3, 0), Err(Error::InvalidModulus)));
    }

    #[test]
    fn mod_inverse_known_values() {
        assert_eq!(mod_inverse(5, 3).unwrap(), 2);
        assert_eq!(mod_inverse(3, 5).unwrap(), 2);
        // 17 ≡ 3 (mod 7); scanning 1..6 gives 3 * 5 = 15 ≡ 1.
        assert_eq!(mod_inverse(17, 7).unwrap(), 5);
    }

    #[test]
    fn mod_inverse_rejects_non_coprime() {
        assert!(matches!(
            mod_inverse(6, 9),
            Err(Error::NotInvertible { a: 6, m: 9 })
        ));
        assert!(matches!(mod_inverse(5, 1), Err(Error::InvalidModulus)));
    }

    #[test]
    fn is_prime_known_values() {
        assert!(is_prime(2));
        assert!(!is_prime(1));
        assert!(!is_prime(0));
        // 1393 = 7 * 199
        assert!(!is_prime(1393));
        assert!(is_prime(97));
        assert!(is_prime(1_000_000_007));
        assert!(is_prime(18_446_744_073_709_551_557)); // largest u64 prime
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
    }

    #[test]
    fn is_prime_matches_trial_division_below_10000() {
        let trial = |n: u64| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
        for n in 0..10_000 {
            assert_eq!(is_prime(n), trial(n), "disagreement at {n}");
        }
    }

    #[test]
    fn prime_in_class_known_values() {
        assert_eq!(smallest_prime_in_class(1, 15, 5, 1_000_000).unwrap(), 31);
        assert_eq!(smallest_prime_in_class(2, 15, 5, 1_000_000).unwrap(), 17);
        assert!(matches!(
            smallest_prime_in_class(3, 15, 5, 1_000_000),
            Err(Error::NoPrimesInClass { gcd: 3, .. })
        ));
    }

    #[test]
    fn prime_in_class_budget_exhausted_is_distinct() {
        // Class 1 mod 15 has no prime in (5, 30]: 16 is composite.
        assert!(matches!(
            smallest_prime_in_class(1, 15, 5, 30),
            Err(Error::BudgetExhausted { .. })
        ));
    }

    #[test]
    fn prime_in_class_negative_rho() {
        // -1 ≡ 14 (mod 15): first prime > 5 is 29.
        assert_eq!(smallest_prime_in_class(-1, 15, 5, 1_000_000).unwrap(), 29);
    }

    #[test]
    fn primes_in_range_basic() {
        assert_eq!(primes_in_range(7, 30), vec![11, 13, 17, 19, 23, 29]);
        assert_eq!(primes_in_range(30, 30), Vec::<u64>::new());
    }

    #[test]
    fn factorize_known_values() {
        assert_eq!(factorize(1), Vec::<(u64, u32)>::new());
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(105), vec![(3, 1), (5, 1), (7, 1)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
        // Semiprime beyond the trial bound: exercises the rho path.
        assert_eq!(
            factorize(1_000_003 * 1_000_033),
            vec![(1_000_003, 1), (1_000_033, 1)]
        );
        assert_eq!(
            factorize(4_611_686_014_132_420_609), // 2147483647 * 2147483647
            vec![(2_147_483_647, 2)]
        );
    }

    proptest! {
        #[test]
        fn residue_bar_idempotent(n in any::<i64>(), m in 1u64..1_000_000) {
            let once = residue_bar(n as i128, m).unwrap();
            prop_assert_eq!(residue_bar(once as i128, m).unwrap(), once);
            prop_assert!(once < m);
        }

        #[test]
        fn mod_inverse_is_an_involution(a in 1u64..5000, m in 2u64..5000) {
            prop_assume!(gcd(a, m) == 1);
            let inv = mod_inverse(a as i128, m).unwrap();
            prop_assert_eq!(mul_mod(a % m, inv, m), 1 % m);
            prop_assert!(inv > 0 && inv < m);
            let back = mod_inverse(inv as i128, m).unwrap();
            prop_assert_eq!(back, residue_bar(a as i128, m).unwrap());
        }

        #[test]
        fn prime_in_class_returns_first_qualifying(
            rho in 0u64..100, m in 2u64..100, lower in 0u64..500,
        ) {
            prop_assume!(gcd(rho % m, m) == 1);
            let cap = 1_000_000;
            let p = smallest_prime_in_class(rho as i128, m, lower, cap).unwrap();
            prop_assert!(is_prime(p));
            prop_assert!(p > lower && p <= cap);
            prop_assert_eq!(p % m, rho % m);
            // No smaller qualifying candidate: rescan below p.
            let mut c = lower + 1 + (rho % m + m - (lower + 1) % m) % m;
            while c < p {
                prop_assert!(!is_prime(c));
                c += m;
            }
        }

        #[test]
        fn factorize_reassembles(n in 1u64..10_000_000) {
            let fs = factorize(n);
            let product: u64 = fs.iter().map(|&(p, e)| p.pow(e)).product();
            prop_assert_eq!(product, n);
            for &(p, _) in &fs {
                prop_assert!(is_prime(p));
            }
        }
    }
}
