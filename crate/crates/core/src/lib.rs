//! Exact computation with S-units and generalized S-Diophantine tuples.
//!
//! Given a finite set of primes S, this crate enumerates and tests S-smooth
//! integers, searches for and verifies tuples of positive integers whose
//! pairwise products are values of a fixed integer polynomial at S-smooth
//! arguments, constructs realizing polynomials by interpolation, checks the
//! hypotheses under which such tuples are known to be finite in number, and
//! exposes the computable skeleton of the finiteness argument: valuation
//! gcds, multiplicative-dependence detection, family parametrization, and
//! the odd-multiplicity root audit of the associated curve.
//!
//! Everything except logarithmic heights is exact arbitrary-precision
//! arithmetic. The search and probe inner loops are data-parallel; see
//! [`par::ExecMode`] and the `parallel` feature.

pub mod factorint;
pub mod par;
pub mod polyarith;
pub mod prooflab;
pub mod search;
pub mod sunit;

pub use par::ExecMode;
