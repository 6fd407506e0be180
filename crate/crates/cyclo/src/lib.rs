//! Coefficients and heights of cyclotomic polynomials.
//!
//! The interesting case is order three: Φ_pqr for odd primes p < q < r. Its
//! height A(pqr) — the largest absolute coefficient — is computed here by a
//! partial-sum kernel over the sparse coefficients of Φ_pq whose cost does
//! not depend on the size of r, instead of expanding a degree-φ(pqr)
//! polynomial. A brute-force dense expansion ships alongside as the ground
//! truth, together with the classical upper bounds (Bang, Kaplan, Bzdęga and
//! a conditional strengthening) and a residue-class search harness for the
//! maxima M(p) figuring in Beiter's conjecture and its corrected form.
//!
//! Modules, bottom up:
//!
//! - [`ntheory`]: primality, modular inverses, primes in residue classes.
//! - [`poly`]: dense exact-integer polynomials, overflow-checked.
//! - [`oracle`]: Φ_n by exact division — slow, obviously correct.
//! - [`binary`]: the closed form for Φ_pq (two exponent rectangles).
//! - [`chi`]: the window indicator χ through which Φ_pq terms contribute
//!   to coefficients of Φ_pqr.
//! - [`ternary`]: single coefficients of Φ_pqr and the fast height kernel.
//! - [`bounds`]: every computable upper bound, with provenance.
//! - [`search`]: checkpointed, class-parallel M(p) sweeps.
//! - [`cli`]: the `cyclo` command-line driver.
//!
//! Each runnable capability also has an example under `examples/`; start
//! with `cargo run --example height_fast_vs_oracle`.

pub mod binary;
pub mod bounds;
pub mod chi;
pub mod cli;
pub mod error;
pub mod ntheory;
pub mod oracle;
pub mod poly;
pub mod search;
pub mod ternary;

pub use error::{Error, Result};
pub use poly::CoefficientVector;
