//! Crate-wide error type.

use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the library.
///
/// Arithmetic overflow is not represented here: all internal arithmetic is
/// either width-checked by construction (128-bit intermediates) or uses
/// `checked_*` operations that panic with a diagnostic. A silent wraparound
/// would corrupt results invisibly, so overflow is treated as a bug, not a
/// recoverable condition.
#[derive(Debug, Error)]
pub enum Error {
    /// A residue was requested modulo zero.
    #[error("modulus must be positive")]
    InvalidModulus,

    /// `a` has no inverse modulo `m` because gcd(a, m) > 1.
    #[error("{a} is not invertible modulo {m}")]
    NotInvertible { a: u64, m: u64 },

    /// The residue class contains no primes at all (shares a factor with the
    /// modulus), so no amount of searching can succeed.
    #[error("class {rho} mod {modulus} contains at most one prime: gcd = {gcd}")]
    NoPrimesInClass { rho: u64, modulus: u64, gcd: u64 },

    /// No prime was found below the search cap. Distinct from
    /// [`Error::NoPrimesInClass`]: a prime exists in every coprime class, the
    /// budget was just too small to reach it.
    #[error(
        "no prime found in class {rho} mod {modulus} in ({lower}, {cap}]; raise the cap"
    )]
    BudgetExhausted {
        rho: u64,
        modulus: u64,
        lower: u64,
        cap: u64,
    },

    /// Input failed domain validation (not an odd prime, wrong ordering, ...).
    #[error("invalid input: {0}")]
    Validation(String),

    /// A dense coefficient vector would exceed the size limit.
    #[error(
        "result needs {needed} coefficients, over the limit of {limit}; \
         use single-coefficient mode instead"
    )]
    TooLarge { needed: u128, limit: usize },

    /// A checkpoint line failed to parse (excluding a partial trailing line,
    /// which is skipped with a warning).
    #[error("checkpoint {path}: line {line}: {reason}")]
    CheckpointParse {
        path: PathBuf,
        line: usize,
        reason: String,
    },

    /// Checkpoint file I/O failed.
    #[error("checkpoint {path}: {source}")]
    CheckpointIo {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
