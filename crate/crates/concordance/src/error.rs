//! Crate-wide error type.
//!
//! Every fallible operation returns `Result<T, Error>`. Variant names follow
//! the domain conditions they report rather than the call site.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix must be square and of even positive size, got {0}x{1}")]
    OddSize(usize, usize),
    #[error("skew part A - A^t must have determinant 1, got {0}")]
    NonUnimodularSkewPart(String),
    #[error("enumeration height {height} exceeds the configured budget {budget}")]
    HeightTooLargeForBudget { height: u32, budget: u32 },
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("constant polynomial not allowed here")]
    ConstantPolynomial,
    #[error("polynomials are not coprime over Q[x]")]
    NotCoprime,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("metabolizer failed to split; this contradicts the splitting lemma: {0}")]
    SplitFailed(String),
    #[error("jump list breaks the r <-> 1-r symmetry: {0}")]
    AsymmetricJumps(String),
    #[error("evaluation point {0} lies outside [0, 1]")]
    OutOfRange(String),
    #[error("root isolation exceeded its refinement budget")]
    RootIsolationFailure,
    #[error("branched cover has infinite first homology")]
    InfiniteHomology,
    #[error("{0} is not invertible modulo {1}")]
    MNotInvertible(i64, i64),
    #[error("character numerator {0} is not coprime to {1}")]
    SNotCoprime(i64, i64),
    #[error("step (1+m*)^i s hit zero mod {0}; hypothesis combination is invalid")]
    StepHitsZero(i64),
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("all pieces of a sum must share the same cover degree q")]
    MixedQ,
    #[error("bad prime: {0}")]
    BadPrime(String),
    #[error("no witness character found (best achieved sum {best}); l may be below the lemma threshold")]
    NoWitness { best: String },
    #[error("duplicate twist parameter {0}")]
    DuplicateTwist(i64),
    #[error("profile breakpoint is an unrefinable parsed interval; {0}")]
    OpaqueBreakpoint(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
