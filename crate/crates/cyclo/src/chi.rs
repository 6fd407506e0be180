//! The window indicator χ_n.
//!
//! Fix odd primes p < q. For integers n and i, χ_n(i) is +1 when i+1 lands
//! (mod pq) in the half-open window (n+q, n+p+q], -1 when it lands in
//! (n, n+p], and 0 otherwise. Both windows have length p < pq, so the value
//! is well defined, and it depends only on n and i modulo pq.
//!
//! Two implementations are provided on purpose. [`ChiContext::chi`] is the
//! production one: it reduces everything modulo pq and decides membership by
//! a three-way residue comparison, with no loops. [`ChiContext::chi_reference`]
//! enumerates the witness multiples of pq directly from the window
//! definition. They are checked against each other exhaustively in the test
//! suite; the kernel in [`crate::ternary`] uses the same comparison core as
//! `chi`.

use crate::binary::check_odd_prime;
use crate::error::{Error, Result};

/// The (p, q) context in which χ is evaluated.
#[derive(Clone, Copy, Debug)]
pub struct ChiContext {
    p: u64,
    q: u64,
    pq: u64,
}

fn rbar(n: i128, m: u64) -> u64 {
    debug_assert!(m > 0);
    let m = m as i128;
    (((n % m) + m) % m) as u64
}

/// Membership of `x` in the cyclic window `(lo, hi]` modulo the ambient
/// modulus, written as the three-clause residue comparison. All arguments
/// are canonical residues, and `hi - lo` is nonzero mod the modulus.
#[inline]
pub(crate) fn window_hit(x: u64, lo: u64, hi: u64) -> bool {
    (hi >= x && x > lo) || (x <= hi && hi < lo) || (hi < lo && lo < x)
}

/// χ at canonical residues: `n_bar` is n mod pq, `x` is (i+1) mod pq.
#[inline]
pub(crate) fn chi_at(n_bar: u64, x: u64, p: u64, q: u64, pq: u64) -> i64 {
    // Sums below stay under 2*pq, so one conditional subtract canonicalizes.
    let sub = |v: u64| if v >= pq { v - pq } else { v };
    let lo_plus = sub(n_bar + q);
    let hi_plus = sub(lo_plus + p);
    if window_hit(x, lo_plus, hi_plus) {
        return 1;
    }
    let hi_minus = sub(n_bar + p);
    if window_hit(x, n_bar, hi_minus) {
        return -1;
    }
    0
}

impl ChiContext {
    /// Requires odd primes p < q.
    pub fn new(p: u64, q: u64) -> Result<Self> {
        check_odd_prime(p, "p")?;
        check_odd_prime(q, "q")?;
        if p >= q {
            return Err(Error::Validation(format!("need p < q, got {p} >= {q}")));
        }
        let pq = p
            .checked_mul(q)
            .ok_or_else(|| Error::Validation(format!("{p} * {q} exceeds 64 bits")))?;
        Ok(ChiContext { p, q, pq })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn pq(&self) -> u64 {
        self.pq
    }

    /// χ_n(i) for arbitrary integers, by residue comparison. O(1).
    pub fn chi(&self, n: i128, i: i128) -> i64 {
        let n_bar = rbar(n, self.pq);
        // (i+1) mod pq, reduced before the increment so i may be any i128.
        let x = {
            let ib = rbar(i, self.pq) + 1;
            if ib == self.pq {
                0
            } else {
                ib
            }
        };
        chi_at(n_bar, x, self.p, self.q, self.pq)
    }

    /// χ_n(i) straight from the window definition, by bounded enumeration of
    /// the witness integer s. The range covers every s for which i+1+s*pq
    /// can fall inside a window near n. Testing aid; prefer [`Self::chi`].
    pub fn chi_reference(&self, n: i128, i: i128) -> i64 {
        let pq = self.pq as i128;
        let p = self.p as i128;
        let q = self.q as i128;
        let bound = ((n.unsigned_abs() + i.unsigned_abs()) / self.pq as u128) as i128 + 2;
        for s in -bound..=bound {
            let shifted = i
                .checked_add(1)
                .and_then(|v| v.checked_add(s.checked_mul(pq).expect("chi_reference overflow")))
                .expect("chi_reference overflow");
            if n + p + q >= shifted && shifted > n + q {
                return 1;
            }
        }
        for s in -bound..=bound {
            let shifted = i + 1 + s * pq;
            if n + p >= shifted && shifted > n {
                return -1;
            }
        }
        0
    }
}
