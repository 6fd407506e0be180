//! Dense exact-integer polynomials.
//!
//! `CoefficientVector` stores coefficients in ascending exponent order with a
//! nonzero leading coefficient. Coefficients are 64-bit and every operation
//! is overflow-checked: a result that does not fit panics with a diagnostic
//! instead of wrapping.

/// Default cap on dense coefficient vectors (number of coefficients).
pub const MAX_DENSE_COEFFS: usize = 1 << 20;

/// A dense univariate polynomial with exact `i64` coefficients.
///
/// Index `i` holds the coefficient of `x^i`; the last entry is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientVector {
    coeffs: Vec<i64>,
}

impl CoefficientVector {
    /// Build from ascending coefficients, stripping trailing zeros.
    ///
    /// # Panics
    /// Panics on the zero polynomial; it never arises in this domain.
    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        assert!(!coeffs.is_empty(), "zero polynomial has no representation");
        CoefficientVector { coeffs }
    }

    /// The polynomial x^n - 1.
    pub fn x_pow_minus_one(n: usize) -> Self {
        assert!(n >= 1);
        let mut coeffs = vec![0i64; n + 1];
        coeffs[0] = -1;
        coeffs[n] = 1;
        CoefficientVector { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Largest absolute value of a coefficient.
    pub fn height(&self) -> u64 {
        self.coeffs.iter().map(|c| c.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        *self.coeffs.last().unwrap() == 1
    }

    /// True when `c_i = c_{deg - i}` for all `i`.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Exact product, overflow-checked.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![0i64; self.degree() + other.degree() + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let prod = a.checked_mul(b).expect("coefficient overflow in mul");
                out[i + j] = out[i + j]
                    .checked_add(prod)
                    .expect("coefficient overflow in mul");
            }
        }
        Self::from_coeffs(out)
    }

    /// Exact quotient by a monic divisor.
    ///
    /// # Panics
    /// Panics if the divisor is not monic, the division leaves a remainder,
    /// or a coefficient overflows. A nonzero remainder means an internal
    /// consistency bug, never a recoverable input error.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        assert!(divisor.is_monic(), "exact_div requires a monic divisor");
        let d = divisor.degree();
        assert!(self.degree() >= d, "exact_div: divisor degree too large");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0i64; self.degree() - d + 1];
        for k in (0..quot.len()).rev() {
            let c = rem[k + d];
            if c == 0 {
                continue;
            }
            quot[k] = c;
            rem[k + d] = 0;
            for (j, &dj) in divisor.coeffs[..d].iter().enumerate() {
                let cell = &mut rem[k + j];
                // Divisor coefficients are almost always in {-1, 0, 1} here.
                *cell = match dj {
                    0 => continue,
                    1 => cell.checked_sub(c),
                    -1 => cell.checked_add(c),
                    _ => c.checked_mul(dj).and_then(|p| cell.checked_sub(p)),
                }
                .expect("coefficient overflow in exact_div");
            }
        }
        assert!(
            rem.iter().all(|&c| c == 0),
            "exact_div left a nonzero remainder"
        );
        Self::from_coeffs(quot)
    }

    /// Substitute `x -> x^k`: spreads coefficients to every k-th slot.
    pub fn inflate(&self, k: usize) -> Self {
        assert!(k >= 1);
        let mut out = vec![0i64; self.degree() * k + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i * k] = c;
        }
        Self::from_coeffs(out)
    }

    /// Substitute `x -> -x`: negates odd-exponent coefficients.
    pub fn negate_argument(&self) -> Self {
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 1 { -c } else { c })
            .collect();
        Self::from_coeffs(out)
    }
}
