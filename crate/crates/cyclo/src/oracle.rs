//! Ground-truth cyclotomic polynomials by exact polynomial arithmetic.
//!
//! `phi_dense` computes Φ_n by dividing x^n - 1 by Φ_d for every proper
//! divisor d, with the classical reductions applied first: Φ_n(x) =
//! Φ_rad(n)(x^(n/rad(n))) and Φ_2m(x) = Φ_m(-x) for odd m > 1. Slow and
//! obvious on purpose; the fast ternary kernel is checked against it.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ntheory::factorize;
use crate::poly::{CoefficientVector, MAX_DENSE_COEFFS};

/// Exact coefficient vector of the n-th cyclotomic polynomial.
///
/// Errors when `n = 0` or when Φ_n would exceed [`MAX_DENSE_COEFFS`]
/// coefficients.
pub fn phi_dense(n: u64) -> Result<CoefficientVector> {
    if n == 0 {
        return Err(Error::Validation("cyclotomic index must be >= 1".into()));
    }
    if n == 1 {
        return Ok(CoefficientVector::from_coeffs(vec![-1, 1]));
    }
    if n == 2 {
        return Ok(CoefficientVector::from_coeffs(vec![1, 1]));
    }
    let factors = factorize(n);
    let phi_n: u128 = factors
        .iter()
        .map(|&(p, e)| (p as u128 - 1) * (p as u128).pow(e - 1))
        .product();
    if phi_n + 1 > MAX_DENSE_COEFFS as u128 {
        return Err(Error::TooLarge {
            needed: phi_n + 1,
            limit: MAX_DENSE_COEFFS,
        });
    }

    // Reduce to the squarefree part, then to its odd part.
    let radical: u64 = factors.iter().map(|&(p, _)| p).product();
    let inflation = (n / radical) as usize;
    let odd_radical: u64 = factors.iter().map(|&(p, _)| p).filter(|&p| p != 2).product();

    let squarefree = if radical % 2 == 0 {
        if odd_radical == 1 {
            CoefficientVector::from_coeffs(vec![1, 1])
        } else {
            phi_squarefree_odd(odd_radical).negate_argument()
        }
    } else {
        phi_squarefree_odd(odd_radical)
    };

    let result = if inflation > 1 {
        squarefree.inflate(inflation)
    } else {
        squarefree
    };
    assert_eq!(result.degree() as u128, phi_n, "degree mismatch for phi({n})");
    assert!(result.is_monic() && result.coeff(0) == 1 && result.is_palindromic());
    Ok(result)
}

/// Φ_m for odd squarefree m >= 3, by recursive exact division. The memo
/// table is confined to one top-level call, so concurrent callers never
/// share state.
fn phi_squarefree_odd(m: u64) -> CoefficientVector {
    let mut memo: HashMap<u64, CoefficientVector> = HashMap::new();
    phi_by_division(m, &mut memo)
}

fn phi_by_division(m: u64, memo: &mut HashMap<u64, CoefficientVector>) -> CoefficientVector {
    if let Some(v) = memo.get(&m) {
        return v.clone();
    }
    let result = if m == 1 {
        CoefficientVector::from_coeffs(vec![-1, 1])
    } else {
        let primes: Vec<u64> = factorize(m).into_iter().map(|(p, _)| p).collect();
        let mut divisors: Vec<u64> = vec![1];
        for &p in &primes {
            let mut extended: Vec<u64> = divisors.iter().map(|&d| d * p).collect();
            divisors.append(&mut extended);
        }
        divisors.sort_unstable();
        divisors.pop(); // drop m itself
        let mut acc = CoefficientVector::x_pow_minus_one(m as usize);
        for &d in &divisors {
            let phi_d = phi_by_division(d, memo);
            acc = acc.exact_div(&phi_d);
        }
        acc
    };
    memo.insert(m, result.clone());
    result
}

/// Strip `n` down to the product of its distinct odd primes.
///
/// Returns `(core, odd_prime_count)`; `core = 1` when `n` is a power of two
/// or 1. The height of Φ_n equals the height of Φ_core, and the count is the
/// order of Φ_core.
pub fn reduce_radical(n: u64) -> (u64, u32) {
    assert!(n >= 1, "reduce_radical needs n >= 1");
    let odd: Vec<u64> = factorize(n)
        .into_iter()
        .map(|(p, _)| p)
        .filter(|&p| p != 2)
        .collect();
    (odd.iter().product(), odd.len() as u32)
}

/// Brute-force height A(n): reduce to the odd squarefree core, expand Φ_core
/// densely, take the max absolute coefficient.
pub fn height_oracle(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Validation("cyclotomic index must be >= 1".into()));
    }
    let (core, _) = reduce_radical(n);
    Ok(phi_dense(core)?.height())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn small_cyclotomics() {
        assert_eq!(phi_dense(1).unwrap().coeffs(), &[-1, 1]);
        assert_eq!(phi_dense(2).unwrap().coeffs(), &[1, 1]);
        assert_eq!(phi_dense(3).unwrap().coeffs(), &[1, 1, 1]);
        assert_eq!(phi_dense(4).unwrap().coeffs(), &[1, 0, 1]);
        assert_eq!(phi_dense(6).unwrap().coeffs(), &[1, -1, 1]);
        assert_eq!(phi_dense(12).unwrap().coeffs(), &[1, 0, -1, 0, 1]);
    }

    #[test]
    fn phi_15_matches_known_expansion() {
        assert_eq!(
            phi_dense(15).unwrap().coeffs(),
            &[1, -1, 0, 1, -1, 1, 0, -1, 1]
        );
    }

    #[test]
    fn phi_105_has_the_first_big_coefficient() {
        let phi = phi_dense(105).unwrap();
        assert_eq!(phi.degree(), 48);
        assert_eq!(phi.coeff(7), -2);
        assert_eq!(phi.height(), 2);
    }

    #[test]
    fn inflation_shortcut_agrees() {
        // phi_9 = phi_3(x^3), phi_75 = phi_15(x^5)
        assert_eq!(
            phi_dense(9).unwrap(),
            phi_dense(3).unwrap().inflate(3)
        );
        assert_eq!(
            phi_dense(75).unwrap(),
            phi_dense(15).unwrap().inflate(5)
        );
    }

    #[test]
    fn even_shortcut_agrees() {
        // phi_2m(x) = phi_m(-x) for odd m >= 3
        for m in [3u64, 5, 9, 15, 21, 105] {
            assert_eq!(
                phi_dense(2 * m).unwrap(),
                phi_dense(m).unwrap().negate_argument(),
                "phi({})",
                2 * m
            );
        }
    }

    #[test]
    fn product_over_divisors_gives_x_n_minus_one() {
        for n in 1u64..=200 {
            let mut product = CoefficientVector::from_coeffs(vec![1]);
            for d in 1..=n {
                if n % d == 0 {
                    product = product.mul(&phi_dense(d).unwrap());
                }
            }
            assert_eq!(
                product,
                CoefficientVector::x_pow_minus_one(n as usize),
                "divisor product failed at n = {n}"
            );
        }
    }

    #[test]
    fn reduce_radical_known_values() {
        assert_eq!(reduce_radical(210), (105, 3));
        assert_eq!(reduce_radical(9), (3, 1));
        assert_eq!(reduce_radical(105), (105, 3));
        assert_eq!(reduce_radical(1), (1, 0));
        assert_eq!(reduce_radical(64), (1, 0));
        assert_eq!(reduce_radical(2), (1, 0));
    }

    #[test]
    fn reduce_radical_is_idempotent() {
        for n in 1u64..=10_000 {
            let (core, order) = reduce_radical(n);
            assert_eq!(reduce_radical(core), (core, order), "n = {n}");
        }
    }

    #[test]
    fn height_oracle_known_values() {
        assert_eq!(height_oracle(105).unwrap(), 2);
        assert_eq!(height_oracle(15).unwrap(), 1);
        assert_eq!(height_oracle(1).unwrap(), 1);
        assert_eq!(height_oracle(2).unwrap(), 1);
    }

    #[test]
    fn height_survives_radical_reduction() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..25 {
            let n = rng.gen_range(1u64..=10_000);
            let (core, _) = reduce_radical(n);
            assert_eq!(
                height_oracle(n).unwrap(),
                height_oracle(core).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn size_limit_is_enforced() {
        // 1048583 is prime, so phi exceeds 2^20.
        assert!(matches!(
            phi_dense(1_048_583),
            Err(Error::TooLarge { .. })
        ));
        assert!(matches!(phi_dense(0), Err(Error::Validation(_))));
    }
}
