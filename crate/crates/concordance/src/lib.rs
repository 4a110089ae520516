//! Exact-arithmetic knot concordance invariants.
//!
//! The crate computes, over arbitrary-precision integers and rationals:
//! Seifert-form algebra (validation, isometric structure, Alexander
//! polynomial, metabolizers, coprime splitting), Tristram-Levine signature
//! profiles with exact breakpoints, closed-form torus-knot signatures,
//! homology of cyclic branched covers with their character groups, the
//! genus-one Casson-Gordon evaluator, and the slice/ribbon obstruction
//! machinery for twisted doubles.
//!
//! No floating point participates in any computed value. Parameter sweeps
//! run data-parallel when the `parallel` feature (default) is enabled.

pub mod error;
pub mod num;

pub mod mat;
pub mod poly;
pub mod roots;

pub mod inertia;
pub mod seifert;
pub mod par;

pub use error::{Error, Result};
