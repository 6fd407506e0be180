//! Closed-form coefficients of Φ_pq.
//!
//! For odd primes p < q, every coefficient of Φ_pq is -1, 0 or +1, and the
//! exponents with coefficient +1 (resp. -1) form the image of a small
//! rectangle in (u, v) space:
//!
//! - d_m = +1  iff  m = up + vq with u in [0, p_q*-1], v in [0, q_p*-1],
//! - d_m = -1  iff  m + pq = u'p + v'q with u' in [p_q*, q-1], v' in [q_p*, p-1],
//!
//! where p_q* and q_p* are the inverses of p mod q and q mod p. The
//! rectangles are stored as the parameter quadruple, not materialized:
//! membership for a given m is a constant-time congruence solve, which is
//! what the height kernel needs.

use crate::error::{Error, Result};
use crate::ntheory::{is_prime, mod_inverse};
use crate::poly::CoefficientVector;

/// Sparse description of Φ_pq for odd primes p < q.
#[derive(Clone, Debug)]
pub struct BinarySupport {
    p: u64,
    q: u64,
    pq: u64,
    phi_pq: u64,
    p_q_star: u64,
    q_p_star: u64,
}

pub(crate) fn check_odd_prime(v: u64, role: &str) -> Result<()> {
    if v == 2 {
        return Err(Error::Validation(format!("{role} must be odd, got 2")));
    }
    if !is_prime(v) {
        return Err(Error::Validation(format!("{role} must be prime, got {v}")));
    }
    Ok(())
}

impl BinarySupport {
    /// Validate `p < q` odd primes and derive the rectangle parameters.
    pub fn new(p: u64, q: u64) -> Result<Self> {
        check_odd_prime(p, "p")?;
        check_odd_prime(q, "q")?;
        if p >= q {
            return Err(Error::Validation(format!("need p < q, got {p} >= {q}")));
        }
        let pq = p
            .checked_mul(q)
            .ok_or_else(|| Error::Validation(format!("{p} * {q} exceeds 64 bits")))?;
        let phi_pq = (p - 1) * (q - 1);
        let p_q_star = mod_inverse(p as i128, q)?;
        let q_p_star = mod_inverse(q as i128, p)?;
        // Count identity underlying the whole representation; if this fails
        // the inverses are wrong.
        assert_eq!(
            phi_pq,
            (p_q_star - 1) * p + (q_p_star - 1) * q,
            "rectangle identity failed for ({p}, {q})"
        );
        Ok(BinarySupport {
            p,
            q,
            pq,
            phi_pq,
            p_q_star,
            q_p_star,
        })
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

    /// Degree of Φ_pq: (p-1)(q-1).
    pub fn phi_pq(&self) -> u64 {
        self.phi_pq
    }

    /// Inverse of p modulo q, in (0, q).
    pub fn p_q_star(&self) -> u64 {
        self.p_q_star
    }

    /// Inverse of q modulo p, in (0, p).
    pub fn q_p_star(&self) -> u64 {
        self.q_p_star
    }

    /// Number of +1 coefficients.
    pub fn positive_count(&self) -> u64 {
        self.p_q_star * self.q_p_star
    }

    /// Number of -1 coefficients; one less than the +1 count.
    pub fn negative_count(&self) -> u64 {
        (self.q - self.p_q_star) * (self.p - self.q_p_star)
    }

    /// Coefficient d_m of Φ_pq, for any integer m (zero outside
    /// [0, (p-1)(q-1)]).
    ///
    /// Constant time: v is pinned by m modulo p, which leaves a single
    /// candidate per rectangle.
    pub fn coeff(&self, m: i128) -> i64 {
        if m < 0 || m > self.phi_pq as i128 {
            return 0;
        }
        let m = m as u64;
        let v = (m % self.p) as u128 * self.q_p_star as u128 % self.p as u128;
        let v = v as u64;
        if v < self.q_p_star {
            // Possible +1 slot: m = up + vq with u in [0, p_q*-1].
            let vq = v as u128 * self.q as u128;
            if (m as u128) >= vq {
                let num = m as u128 - vq;
                debug_assert_eq!(num % self.p as u128, 0);
                if num / self.p as u128 < self.p_q_star as u128 {
                    return 1;
                }
            }
            0
        } else {
            // Possible -1 slot: m + pq = u'p + v'q with u' in [p_q*, q-1].
            let num = self.pq as u128 + m as u128 - v as u128 * self.q as u128;
            debug_assert_eq!(num % self.p as u128, 0);
            let u = num / self.p as u128;
            if u >= self.p_q_star as u128 && u <= (self.q - 1) as u128 {
                -1
            } else {
                0
            }
        }
    }

    /// Dense expansion of Φ_pq, entry m holding `self.coeff(m)`.
    pub fn dense_vector(&self) -> CoefficientVector {
        let len = self.phi_pq as usize + 1;
        let coeffs = (0..len).map(|m| self.coeff(m as i128)).collect();
        CoefficientVector::from_coeffs(coeffs)
    }
}
